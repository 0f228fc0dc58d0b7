// Copyright 2026 The Faithful Authors
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

#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "faithful/error.hpp"
#include "faithful/unicode/codepoint.hpp"

namespace faithful::utf8 {

inline constexpr char32_t kReplacementCharacter = 0xFFFD;

/// Number of bytes the scalar occupies in UTF-8.
inline constexpr std::size_t encoded_length(char32_t c) noexcept {
  return c < 0x80 ? 1 : c < 0x800 ? 2 : c < 0x10000 ? 3 : 4;
}

inline void append(std::string& out, char32_t c) {
  if (c < 0x80) {
    out += static_cast<char>(c);
  } else if (c < 0x800) {
    out += static_cast<char>(0xC0 | (c >> 6));
    out += static_cast<char>(0x80 | (c & 0x3F));
  } else if (c < 0x10000) {
    out += static_cast<char>(0xE0 | (c >> 12));
    out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (c & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (c >> 18));
    out += static_cast<char>(0x80 | ((c >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (c & 0x3F));
  }
}

inline std::string encode(ScalarView text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t c : text) append(out, c);
  return out;
}

namespace detail {

// Decodes one scalar at `pos`; returns the length consumed, or 0 with `why`
// set when the sequence is ill-formed. Follows the maximal-subpart rule, so
// `consumed_on_error` is the number of bytes to replace with one U+FFFD.
inline std::size_t decode_one(std::string_view bytes, std::size_t pos, char32_t& out,
                              const char*& why, std::size_t& consumed_on_error) {
  auto byte = [&](std::size_t i) { return static_cast<unsigned char>(bytes[i]); };
  unsigned char b0 = byte(pos);
  consumed_on_error = 1;
  if (b0 < 0x80) {
    out = b0;
    return 1;
  }
  std::size_t need;
  char32_t cp;
  unsigned char lo = 0x80, hi = 0xBF;
  if (b0 >= 0xC2 && b0 <= 0xDF) {
    need = 1;
    cp = b0 & 0x1F;
  } else if (b0 >= 0xE0 && b0 <= 0xEF) {
    need = 2;
    cp = b0 & 0x0F;
    if (b0 == 0xE0) lo = 0xA0;
    if (b0 == 0xED) hi = 0x9F;  // surrogates
  } else if (b0 >= 0xF0 && b0 <= 0xF4) {
    need = 3;
    cp = b0 & 0x07;
    if (b0 == 0xF0) lo = 0x90;
    if (b0 == 0xF4) hi = 0x8F;
  } else {
    why = "invalid lead byte";
    return 0;
  }
  for (std::size_t i = 1; i <= need; ++i) {
    if (pos + i >= bytes.size()) {
      why = "truncated sequence";
      consumed_on_error = i;
      return 0;
    }
    unsigned char b = byte(pos + i);
    if (b < lo || b > hi) {
      why = "invalid continuation byte";
      consumed_on_error = i;
      return 0;
    }
    lo = 0x80;
    hi = 0xBF;
    cp = (cp << 6) | (b & 0x3F);
  }
  out = cp;
  return need + 1;
}

}  // namespace detail

enum class DecodeMode { kStrict, kLossy };

/// Decodes UTF-8. Strict mode throws DecodeError on the first ill-formed
/// sequence; lossy mode substitutes U+FFFD per maximal subpart.
inline ScalarString decode(std::string_view bytes, DecodeMode mode = DecodeMode::kStrict,
                           std::size_t* replacements = nullptr) {
  ScalarString out;
  out.reserve(bytes.size());
  std::size_t pos = 0;
  std::size_t replaced = 0;
  while (pos < bytes.size()) {
    char32_t c;
    const char* why = nullptr;
    std::size_t skip;
    std::size_t n = detail::decode_one(bytes, pos, c, why, skip);
    if (n == 0) {
      if (mode == DecodeMode::kStrict) throw DecodeError(pos, why);
      out += kReplacementCharacter;
      ++replaced;
      pos += skip;
      continue;
    }
    out += c;
    pos += n;
  }
  if (replacements) *replacements = replaced;
  return out;
}

inline bool is_valid(std::string_view bytes) {
  std::size_t pos = 0;
  while (pos < bytes.size()) {
    char32_t c;
    const char* why = nullptr;
    std::size_t skip;
    std::size_t n = detail::decode_one(bytes, pos, c, why, skip);
    if (n == 0) return false;
    pos += n;
  }
  return true;
}

/// Result of reading a source document into scalars.
struct IngestResult {
  ScalarString text;
  std::size_t converted_line_endings = 0;  // CR LF and lone CR turned into LF
  std::size_t replacements = 0;            // U+FFFD substitutions (lossy only)
  bool had_bom = false;
};

/// Decodes a document and normalizes line endings to LF. A leading BOM is
/// dropped and reported.
inline IngestResult ingest(std::string_view bytes, DecodeMode mode = DecodeMode::kStrict) {
  IngestResult r;
  if (bytes.starts_with("\xEF\xBB\xBF")) {
    r.had_bom = true;
    bytes.remove_prefix(3);
  }
  ScalarString decoded = decode(bytes, mode, &r.replacements);
  r.text.reserve(decoded.size());
  for (std::size_t i = 0; i < decoded.size(); ++i) {
    if (decoded[i] == U'\r') {
      r.text += U'\n';
      ++r.converted_line_endings;
      if (i + 1 < decoded.size() && decoded[i + 1] == U'\n') ++i;
    } else {
      r.text += decoded[i];
    }
  }
  return r;
}

}  // namespace faithful::utf8
