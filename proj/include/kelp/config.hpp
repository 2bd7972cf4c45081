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

#ifndef KELP_CONFIG_HPP_
#define KELP_CONFIG_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "kelp/cmudict.hpp"
#include "kelp/semantics.hpp"

namespace kelp {

// One backend service. API keys are never taken on the command line; the
// config only names the environment variable that holds them.
struct BackendConfig {
  std::string kind = "stub";  // "stub" | "remote"
  std::string endpoint;       // required when kind == "remote"
  std::string api_key_env;
};

struct Config {
  std::string corpus_path;
  std::string dictionary_path;  // flag > LYR_DICT env > unset (heuristics only)
  BackendConfig embedding{.kind = "stub", .api_key_env = "LYR_EMBED_KEY"};
  BackendConfig translation{.kind = "stub", .api_key_env = "LYR_TRANSLATE_KEY"};
  BackendConfig nsp{.kind = "stub", .api_key_env = "LYR_NSP_KEY"};
  std::uint64_t seed = 42;
  int jobs = 0;
  bool pooled = false;
  bool official_only = false;
  bool include_parentheticals = true;
};

// Throws ConfigError on an unknown kind or a remote backend without an
// endpoint.
void validate_config(const Config& config);

struct BackendSet {
  std::unique_ptr<EmbeddingBackend> embedding;
  std::unique_ptr<TranslationBackend> translation;
  std::unique_ptr<CoherenceScorer> coherence;
  bool thread_safe = true;  // false as soon as any backend is remote
};

// Builds the configured backends; remote keys are read from the environment
// variables named in the config (missing variables mean unauthenticated
// requests).
BackendSet make_backends(const Config& config);

// Empty when no dictionary is configured.
std::optional<PronouncingDict> load_configured_dict(const Config& config);

}  // namespace kelp

#endif  // KELP_CONFIG_HPP_
