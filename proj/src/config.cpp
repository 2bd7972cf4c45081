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

#include "kelp/config.hpp"

#include <cstdlib>

#include "kelp/error.hpp"
#include "kelp/remote.hpp"

namespace kelp {

namespace {

void validate_backend(const BackendConfig& b, const char* name) {
  if (b.kind != "stub" && b.kind != "remote") {
    throw ConfigError(std::string(name) + " backend kind must be \"stub\" or \"remote\", got \"" +
                      b.kind + "\"");
  }
  if (b.kind == "remote" && b.endpoint.empty()) {
    throw ConfigError(std::string(name) + " backend is remote but has no endpoint");
  }
}

RemoteOptions remote_options(const BackendConfig& b) {
  RemoteOptions o;
  o.endpoint = b.endpoint;
  if (!b.api_key_env.empty()) {
    if (const char* key = std::getenv(b.api_key_env.c_str())) o.api_key = key;
  }
  return o;
}

}  // namespace

void validate_config(const Config& config) {
  validate_backend(config.embedding, "embedding");
  validate_backend(config.translation, "translation");
  validate_backend(config.nsp, "nsp");
}

BackendSet make_backends(const Config& config) {
  validate_config(config);
  BackendSet set;
  if (config.embedding.kind == "remote") {
    set.embedding = std::make_unique<HttpEmbeddingBackend>(remote_options(config.embedding));
    set.thread_safe = false;
  } else {
    set.embedding = std::make_unique<StubEmbedding>();
  }
  if (config.translation.kind == "remote") {
    set.translation = std::make_unique<HttpTranslationBackend>(remote_options(config.translation));
    set.thread_safe = false;
  } else {
    set.translation = std::make_unique<StubTranslation>();
  }
  if (config.nsp.kind == "remote") {
    set.coherence = std::make_unique<HttpCoherenceScorer>(remote_options(config.nsp));
    set.thread_safe = false;
  } else {
    set.coherence = std::make_unique<StubCoherence>();
  }
  return set;
}

std::optional<PronouncingDict> load_configured_dict(const Config& config) {
  std::string path = config.dictionary_path;
  if (path.empty()) {
    if (const char* env = std::getenv("LYR_DICT")) path = env;
  }
  if (path.empty()) return std::nullopt;
  return PronouncingDict::load_file(path);
}

}  // namespace kelp
