// Copyright 2026 The kelp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KELP_REMOTE_HPP_
#define KELP_REMOTE_HPP_

#include <memory>
#include <string>

#include "kelp/semantics.hpp"

namespace kelp {

// Shared knobs for the HTTP backend clients. Requests are idempotent POSTs
// of JSON bodies; retriable failures (connection errors, 5xx) back off
// exponentially up to max_attempts.
struct RemoteOptions {
  std::string endpoint;  // scheme://host[:port]
  std::string api_key;   // sent as "Authorization: Bearer <key>" when set
  int max_batch = 64;
  int max_attempts = 3;
  int initial_backoff_ms = 100;
  int timeout_seconds = 30;
};

// POST /embed {"texts": [...]} -> {"embeddings": [[...], ...]}
// Vectors are re-normalized on receipt so the unit-norm contract holds
// regardless of the service.
class HttpEmbeddingBackend : public EmbeddingBackend {
 public:
  explicit HttpEmbeddingBackend(RemoteOptions opts);
  ~HttpEmbeddingBackend() override;
  std::vector<std::vector<double>> embed(const std::vector<std::string>& texts) override;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// POST /translate {"texts": [...], "source": "ko", "target": "en"}
//   -> {"texts": [...]}
class HttpTranslationBackend : public TranslationBackend {
 public:
  explicit HttpTranslationBackend(RemoteOptions opts);
  ~HttpTranslationBackend() override;
  std::vector<std::string> translate(const std::vector<std::string>& texts,
                                     std::string_view source_lang,
                                     std::string_view target_lang) override;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// POST /nsp {"pairs": [[prev, next], ...]} -> {"scores": [...]}
class HttpCoherenceScorer : public CoherenceScorer {
 public:
  explicit HttpCoherenceScorer(RemoteOptions opts);
  ~HttpCoherenceScorer() override;
  std::vector<double> score_pairs(
      const std::vector<std::pair<std::string, std::string>>& pairs) override;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace kelp

#endif  // KELP_REMOTE_HPP_
