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

// The four Unicode normalization forms over the bundled UCD tables.
//
// Decomposition tables are expanded at generation time, so decomposing a
// scalar is a single lookup. Composition follows the canonical composition
// algorithm with Hangul handled arithmetically.

#pragma once

#include <algorithm>
#include <optional>
#include <string_view>

#include "faithful/error.hpp"
#include "faithful/unicode/ucd.hpp"

namespace faithful {

enum class NormalizationForm { NFD, NFC, NFKD, NFKC };

inline constexpr std::string_view to_string(NormalizationForm f) {
  switch (f) {
    case NormalizationForm::NFD: return "NFD";
    case NormalizationForm::NFC: return "NFC";
    case NormalizationForm::NFKD: return "NFKD";
    case NormalizationForm::NFKC: return "NFKC";
  }
  return "?";
}

inline NormalizationForm parse_normalization_form(std::string_view s) {
  if (s == "NFD" || s == "nfd") return NormalizationForm::NFD;
  if (s == "NFC" || s == "nfc") return NormalizationForm::NFC;
  if (s == "NFKD" || s == "nfkd") return NormalizationForm::NFKD;
  if (s == "NFKC" || s == "nfkc") return NormalizationForm::NFKC;
  throw InvalidArgument("unknown normalization form: " + std::string(s));
}

namespace detail {

inline void append_decomposed(ScalarString& out, char32_t cp, bool compat) {
  if (is_hangul_syllable(cp)) {
    char32_t s = cp - kHangulSBase;
    out += kHangulLBase + s / kHangulNCount;
    out += kHangulVBase + (s % kHangulNCount) / kHangulTCount;
    if (char32_t t = s % kHangulTCount) out += kHangulTBase + t;
    return;
  }
  const ucd::Decomposition* e =
      compat ? find_exact(ucd::kCompatibilityDecompositions, cp) : nullptr;
  if (e) {
    out.append(ucd::kCompatibilityPool + e->offset, e->length);
    return;
  }
  if (!compat) e = find_exact(ucd::kCanonicalDecompositions, cp);
  if (e) {
    out.append(ucd::kCanonicalPool + e->offset, e->length);
    return;
  }
  out += cp;
}

// Stable sort of each run of non-starters by combining class.
inline void canonical_order(ScalarString& s) {
  std::size_t i = 0;
  while (i < s.size()) {
    if (canonical_combining_class(s[i]) == 0) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < s.size() && canonical_combining_class(s[j]) != 0) ++j;
    if (j - i > 1) {
      std::stable_sort(s.begin() + static_cast<std::ptrdiff_t>(i),
                       s.begin() + static_cast<std::ptrdiff_t>(j), [](char32_t a, char32_t b) {
                         return canonical_combining_class(a) < canonical_combining_class(b);
                       });
    }
    i = j;
  }
}

inline std::optional<char32_t> compose_pair(char32_t first, char32_t second) {
  if (first >= kHangulLBase && first < kHangulLBase + kHangulLCount && second >= kHangulVBase &&
      second < kHangulVBase + kHangulVCount) {
    return kHangulSBase + ((first - kHangulLBase) * kHangulVCount + (second - kHangulVBase)) *
                              kHangulTCount;
  }
  if (is_hangul_syllable(first) && (first - kHangulSBase) % kHangulTCount == 0 &&
      second > kHangulTBase && second < kHangulTBase + kHangulTCount) {
    return first + (second - kHangulTBase);
  }
  const auto& pairs = ucd::kCompositionPairs;
  auto it = std::lower_bound(std::begin(pairs), std::end(pairs), std::pair{first, second},
                             [](const ucd::CompositionPair& p, const std::pair<char32_t, char32_t>& k) {
                               return p.first < k.first || (p.first == k.first && p.second < k.second);
                             });
  if (it != std::end(pairs) && it->first == first && it->second == second) return it->composite;
  return std::nullopt;
}

inline void canonical_compose(ScalarString& s) {
  if (s.empty()) return;
  std::size_t starter = 0;
  bool have_starter = canonical_combining_class(s[0]) == 0;
  std::size_t out = 1;
  int last_ccc = have_starter ? 0 : 256;
  for (std::size_t i = 1; i < s.size(); ++i) {
    char32_t c = s[i];
    int ccc = canonical_combining_class(c);
    // c is blocked from the starter when an intervening character has the
    // same or higher class, or is itself a starter.
    bool blocked = !have_starter || (out - 1 != starter && (last_ccc == 0 || last_ccc >= ccc));
    if (!blocked) {
      if (auto composite = compose_pair(s[starter], c)) {
        s[starter] = *composite;
        continue;
      }
    }
    if (ccc == 0) {
      starter = out;
      have_starter = true;
    }
    last_ccc = ccc;
    s[out++] = c;
  }
  s.resize(out);
}

inline bool all_ascii(ScalarView text) {
  return std::all_of(text.begin(), text.end(), [](char32_t c) { return c < 0x80; });
}

}  // namespace detail

/// Unicode normalization of `text` under `form`.
inline ScalarString normalize(ScalarView text, NormalizationForm form) {
  if (detail::all_ascii(text)) return ScalarString(text);
  bool compat = form == NormalizationForm::NFKD || form == NormalizationForm::NFKC;
  ScalarString out;
  out.reserve(text.size());
  for (char32_t c : text) detail::append_decomposed(out, c, compat);
  detail::canonical_order(out);
  if (form == NormalizationForm::NFC || form == NormalizationForm::NFKC) detail::canonical_compose(out);
  return out;
}

inline bool is_normalized(ScalarView text, NormalizationForm form) {
  if (detail::all_ascii(text)) return true;
  return normalize(text, form) == text;
}

inline ScalarString nfkc(ScalarView text) { return normalize(text, NormalizationForm::NFKC); }

}  // namespace faithful
