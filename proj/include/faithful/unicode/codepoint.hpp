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

#include <compare>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

#include "faithful/error.hpp"

namespace faithful {

/// Sequence of Unicode scalar values. Every element is a valid scalar when it
/// comes out of the decoder or any library operation.
using ScalarString = std::u32string;
using ScalarView = std::u32string_view;

inline constexpr bool is_scalar_value(std::uint32_t v) noexcept {
  return v <= 0x10FFFF && (v < 0xD800 || v > 0xDFFF);
}

/// A Unicode scalar value: [0, 0x10FFFF] minus the surrogate range.
class Codepoint {
 public:
  constexpr Codepoint() noexcept = default;

  /// Throws InvalidArgument for surrogates and values above U+10FFFF.
  constexpr explicit Codepoint(std::uint32_t value) : value_(value) {
    if (!is_scalar_value(value)) throw InvalidArgument("not a Unicode scalar value: " + hex(value));
  }
  constexpr explicit Codepoint(char32_t value) : Codepoint(static_cast<std::uint32_t>(value)) {}

  constexpr char32_t value() const noexcept { return value_; }
  constexpr operator char32_t() const noexcept { return value_; }

  friend constexpr auto operator<=>(Codepoint, Codepoint) = default;

  /// "U+0041" style label (at least four hex digits).
  std::string label() const { return "U+" + hex(value_); }

 private:
  static std::string hex(std::uint32_t v) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04X", static_cast<unsigned>(v));
    return buf;
  }

  char32_t value_ = 0;
};

/// Space-separated "U+XXXX" labels for a scalar sequence.
inline std::string codepoint_labels(ScalarView text) {
  std::string out;
  for (char32_t c : text) {
    if (!out.empty()) out += ' ';
    out += Codepoint(c).label();
  }
  return out;
}

}  // namespace faithful
