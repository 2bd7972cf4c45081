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

#ifndef KELP_UNICODE_HPP_
#define KELP_UNICODE_HPP_

#include <string>
#include <string_view>

namespace kelp::uni {

// Decodes UTF-8 leniently: ill-formed sequences become U+FFFD.
std::u32string decode_utf8(std::string_view s);
std::string encode_utf8(std::u32string_view cps);

// Canonical composition (NFC). All corpus text goes through this on load.
std::string nfc(std::string_view s);

inline bool is_hangul_syllable(char32_t cp) { return cp >= 0xAC00 && cp <= 0xD7A3; }

bool is_space(char32_t cp);
bool is_punct(char32_t cp);
bool is_letter(char32_t cp);

std::string trim(std::string_view s);
// Trims and squeezes every whitespace run to a single ASCII space.
std::string collapse_whitespace(std::string_view s);

bool contains_hangul(std::string_view s);

// ASCII-only lowercasing; curly apostrophes (U+2018/U+2019) map to '\''.
// Lyrics casing outside ASCII is not a concern for dictionary lookup.
std::string fold_ascii(std::string_view s);

}  // namespace kelp::uni

#endif  // KELP_UNICODE_HPP_
