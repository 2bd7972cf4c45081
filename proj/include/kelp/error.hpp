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

#ifndef KELP_ERROR_HPP_
#define KELP_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kelp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input bytes (JSON, JSONL, TSV). Carries the byte offset into the
// stream at which parsing failed.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t byte_offset)
      : Error(what), byte_offset_(byte_offset) {}
  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_ = 0;
};

// Structurally valid JSON that does not conform to the corpus schema.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& what, std::string field_path)
      : Error(what + " (at " + field_path + ")"), field_path_(std::move(field_path)) {}
  const std::string& field_path() const { return field_path_; }

 private:
  std::string field_path_;
};

// A song that parses but breaks an alignment invariant.
class AlignmentError : public Error {
 public:
  AlignmentError(const std::string& what, std::string song_id, int section_index)
      : Error(what), song_id_(std::move(song_id)), section_index_(section_index) {}
  const std::string& song_id() const { return song_id_; }
  int section_index() const { return section_index_; }

 private:
  std::string song_id_;
  int section_index_ = 0;
};

// Valid input that cannot be scored (empty series, no scorable sections, ...).
class DataError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// Backend transport failure. Retriable failures are connection errors and
// 5xx responses; 4xx responses and malformed payloads are not.
class TransportError : public Error {
 public:
  TransportError(const std::string& what, bool retriable, int attempts)
      : Error(what), retriable_(retriable), attempts_(attempts) {}
  bool retriable() const { return retriable_; }
  int attempts() const { return attempts_; }

 private:
  bool retriable_ = false;
  int attempts_ = 0;
};

}  // namespace kelp

#endif  // KELP_ERROR_HPP_
