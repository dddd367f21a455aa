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

#include "spellforge/unicode.hpp"

#include <unicode/uchar.h>
#include <unicode/uscript.h>
#include <unicode/utf8.h>

#include "spellforge/errors.hpp"

namespace spellforge {

std::u32string decode_utf8(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  int32_t offset = 0;
  const auto length = static_cast<int32_t>(text.size());
  while (offset < length) {
    UChar32 c;
    U8_NEXT(text.data(), offset, length, c);
    if (c < 0) {
      throw ParseError("ill-formed UTF-8 at byte offset " + std::to_string(offset));
    }
    out.push_back(static_cast<char32_t>(c));
  }
  return out;
}

std::string encode_utf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t c : text) {
    char buf[U8_MAX_LENGTH];
    int32_t len = 0;
    UBool err = false;
    U8_APPEND(buf, len, U8_MAX_LENGTH, static_cast<UChar32>(c), err);
    if (err) throw ParseError("invalid Unicode scalar value " + std::to_string(c));
    out.append(buf, static_cast<std::size_t>(len));
  }
  return out;
}

std::string encode_utf8(char32_t c) { return encode_utf8(std::u32string_view(&c, 1)); }

bool is_punctuation(char32_t c) { return u_ispunct(static_cast<UChar32>(c)) != 0; }

bool is_space(char32_t c) { return u_isUWhiteSpace(static_cast<UChar32>(c)) != 0; }

bool is_ascii_digit(char32_t c) { return c >= U'0' && c <= U'9'; }

int script_code(const std::string& script_name) {
  UErrorCode status = U_ZERO_ERROR;
  UScriptCode codes[1];
  const int32_t filled = uscript_getCode(script_name.c_str(), codes, 1, &status);
  if (U_FAILURE(status) || filled != 1 || codes[0] == USCRIPT_INVALID_CODE) {
    throw ValidationError("unknown Unicode script name: " + script_name);
  }
  return static_cast<int>(codes[0]);
}

int script_of(char32_t c) {
  UErrorCode status = U_ZERO_ERROR;
  UScriptCode script = uscript_getScript(static_cast<UChar32>(c), &status);
  if (U_FAILURE(status)) return static_cast<int>(USCRIPT_INVALID_CODE);
  return static_cast<int>(script);
}

}  // namespace spellforge
