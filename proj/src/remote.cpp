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

#include "kelp/remote.hpp"

#include <chrono>
#include <cmath>
#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "kelp/error.hpp"

namespace kelp {

namespace {

using nlohmann::json;

struct HttpClient {
  explicit HttpClient(RemoteOptions o) : opts(std::move(o)), cli(opts.endpoint) {
    if (opts.endpoint.empty()) throw ConfigError("remote backend requires an endpoint");
    cli.set_connection_timeout(opts.timeout_seconds, 0);
    cli.set_read_timeout(opts.timeout_seconds, 0);
  }

  json post_json(const std::string& path, const json& body) {
    httplib::Headers headers;
    if (!opts.api_key.empty()) {
      headers.emplace("Authorization", "Bearer " + opts.api_key);
    }
    const std::string payload = body.dump();
    int backoff = opts.initial_backoff_ms;
    std::string last_error;
    for (int attempt = 1; attempt <= opts.max_attempts; ++attempt) {
      httplib::Result res = cli.Post(path, headers, payload, "application/json");
      if (res) {
        if (res->status >= 200 && res->status < 300) {
          try {
            return json::parse(res->body);
          } catch (const json::parse_error& e) {
            throw TransportError("malformed JSON from " + path + ": " + e.what(), false, attempt);
          }
        }
        if (res->status >= 400 && res->status < 500) {
          throw TransportError(path + " returned status " + std::to_string(res->status), false,
                               attempt);
        }
        last_error = path + " returned status " + std::to_string(res->status);
      } else {
        last_error = path + ": " + httplib::to_string(res.error());
      }
      if (attempt < opts.max_attempts) {
        std::this_thread::sleep_for(std::chrono::milliseconds(backoff));
        backoff *= 2;
      }
    }
    throw TransportError(last_error + " after " + std::to_string(opts.max_attempts) + " attempts",
                         true, opts.max_attempts);
  }

  RemoteOptions opts;
  httplib::Client cli;
};

}  // namespace

struct HttpEmbeddingBackend::Impl : HttpClient {
  using HttpClient::HttpClient;
};
struct HttpTranslationBackend::Impl : HttpClient {
  using HttpClient::HttpClient;
};
struct HttpCoherenceScorer::Impl : HttpClient {
  using HttpClient::HttpClient;
};

HttpEmbeddingBackend::HttpEmbeddingBackend(RemoteOptions opts)
    : impl_(std::make_unique<Impl>(std::move(opts))) {}
HttpEmbeddingBackend::~HttpEmbeddingBackend() = default;

std::vector<std::vector<double>> HttpEmbeddingBackend::embed(
    const std::vector<std::string>& texts) {
  std::vector<std::vector<double>> out;
  out.reserve(texts.size());
  const std::size_t batch = static_cast<std::size_t>(impl_->opts.max_batch);
  for (std::size_t start = 0; start < texts.size(); start += batch) {
    const std::size_t end = std::min(texts.size(), start + batch);
    json body;
    body["texts"] = std::vector<std::string>(texts.begin() + start, texts.begin() + end);
    json reply = impl_->post_json("/embed", body);
    if (!reply.contains("embeddings") || !reply["embeddings"].is_array() ||
        reply["embeddings"].size() != end - start) {
      throw TransportError("/embed reply does not carry one embedding per text", false, 1);
    }
    for (const auto& jv : reply["embeddings"]) {
      std::vector<double> v = jv.get<std::vector<double>>();
      double sq = 0.0;
      for (double x : v) sq += x * x;
      if (sq > 0.0) {
        const double inv = 1.0 / std::sqrt(sq);
        for (double& x : v) x *= inv;
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

HttpTranslationBackend::HttpTranslationBackend(RemoteOptions opts)
    : impl_(std::make_unique<Impl>(std::move(opts))) {}
HttpTranslationBackend::~HttpTranslationBackend() = default;

std::vector<std::string> HttpTranslationBackend::translate(const std::vector<std::string>& texts,
                                                           std::string_view source_lang,
                                                           std::string_view target_lang) {
  std::vector<std::string> out;
  out.reserve(texts.size());
  const std::size_t batch = static_cast<std::size_t>(impl_->opts.max_batch);
  for (std::size_t start = 0; start < texts.size(); start += batch) {
    const std::size_t end = std::min(texts.size(), start + batch);
    json body;
    body["texts"] = std::vector<std::string>(texts.begin() + start, texts.begin() + end);
    body["source"] = std::string(source_lang);
    body["target"] = std::string(target_lang);
    json reply = impl_->post_json("/translate", body);
    if (!reply.contains("texts") || !reply["texts"].is_array() ||
        reply["texts"].size() != end - start) {
      throw TransportError("/translate reply does not carry one text per input", false, 1);
    }
    for (const auto& jt : reply["texts"]) out.push_back(jt.get<std::string>());
  }
  return out;
}

HttpCoherenceScorer::HttpCoherenceScorer(RemoteOptions opts)
    : impl_(std::make_unique<Impl>(std::move(opts))) {}
HttpCoherenceScorer::~HttpCoherenceScorer() = default;

std::vector<double> HttpCoherenceScorer::score_pairs(
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<double> out;
  out.reserve(pairs.size());
  const std::size_t batch = static_cast<std::size_t>(impl_->opts.max_batch);
  for (std::size_t start = 0; start < pairs.size(); start += batch) {
    const std::size_t end = std::min(pairs.size(), start + batch);
    json jpairs = json::array();
    for (std::size_t i = start; i < end; ++i) {
      jpairs.push_back(json::array({pairs[i].first, pairs[i].second}));
    }
    json body;
    body["pairs"] = std::move(jpairs);
    json reply = impl_->post_json("/nsp", body);
    if (!reply.contains("scores") || !reply["scores"].is_array() ||
        reply["scores"].size() != end - start) {
      throw TransportError("/nsp reply does not carry one score per pair", false, 1);
    }
    for (const auto& js : reply["scores"]) {
      double s = js.get<double>();
      if (s < 0.0 || s > 1.0) {
        throw TransportError("/nsp score outside [0, 1]", false, 1);
      }
      out.push_back(s);
    }
  }
  return out;
}

}  // namespace kelp
