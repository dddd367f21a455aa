// Copyright 2026 The Spellforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPELLFORGE_UNICODE_HPP_
#define SPELLFORGE_UNICODE_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace spellforge {

// The character unit throughout the library is the Unicode scalar value
// (char32_t). Combining marks are separate characters; grapheme clusters are
// not modeled.

// Throws ParseError on ill-formed UTF-8.
std::u32string decode_utf8(std::string_view text);
std::string encode_utf8(std::u32string_view text);
std::string encode_utf8(char32_t c);

bool is_punctuation(char32_t c);  // Unicode general categories P*
bool is_space(char32_t c);        // Unicode white space property
bool is_ascii_digit(char32_t c);

// Script identity by ICU script code, resolved from names like "Latin" or
// "Cyrillic". Throws ValidationError for names ICU does not know.
int script_code(const std::string& script_name);
int script_of(char32_t c);

}  // namespace spellforge

#endif  // SPELLFORGE_UNICODE_HPP_
