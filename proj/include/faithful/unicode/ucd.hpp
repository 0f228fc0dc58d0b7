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

// Character properties backed by the bundled Unicode Character Database.
//
// All lookups are binary searches over immutable generated tables, so every
// function here is safe to call concurrently.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

#include "faithful/detail/ucd_tables.hpp"
#include "faithful/unicode/codepoint.hpp"

namespace faithful {

/// Unicode version of every bundled table.
inline constexpr std::string_view kUnicodeVersion = detail::ucd::kUnicodeVersion;

enum class GeneralCategory : std::uint8_t {
  Lu, Ll, Lt, Lm, Lo, Mn, Mc, Me, Nd, Nl,
  No, Pc, Pd, Ps, Pe, Pi, Pf, Po, Sm, Sc,
  Sk, So, Zs, Zl, Zp, Cc, Cf, Cs, Co, Cn,
};

inline constexpr std::array<std::string_view, 30> kCategoryCodes = {
    "Lu", "Ll", "Lt", "Lm", "Lo", "Mn", "Mc", "Me", "Nd", "Nl",
    "No", "Pc", "Pd", "Ps", "Pe", "Pi", "Pf", "Po", "Sm", "Sc",
    "Sk", "So", "Zs", "Zl", "Zp", "Cc", "Cf", "Cs", "Co", "Cn"};

inline constexpr std::string_view to_string(GeneralCategory c) {
  return kCategoryCodes[static_cast<std::size_t>(c)];
}

/// Parses a two-letter category code; returns false if unknown.
inline bool parse_category(std::string_view code, GeneralCategory& out) {
  auto it = std::find(kCategoryCodes.begin(), kCategoryCodes.end(), code);
  if (it == kCategoryCodes.end()) return false;
  out = static_cast<GeneralCategory>(it - kCategoryCodes.begin());
  return true;
}

inline constexpr bool is_letter(GeneralCategory c) { return c <= GeneralCategory::Lo; }
inline constexpr bool is_mark(GeneralCategory c) {
  return c >= GeneralCategory::Mn && c <= GeneralCategory::Me;
}
inline constexpr bool is_number(GeneralCategory c) {
  return c >= GeneralCategory::Nd && c <= GeneralCategory::No;
}
inline constexpr bool is_punctuation(GeneralCategory c) {
  return c >= GeneralCategory::Pc && c <= GeneralCategory::Po;
}
inline constexpr bool is_symbol(GeneralCategory c) {
  return c >= GeneralCategory::Sm && c <= GeneralCategory::So;
}

namespace detail {

template <typename Table, typename Key>
const auto* find_range(const Table& table, Key cp) {
  auto it = std::upper_bound(std::begin(table), std::end(table), cp,
                             [](Key v, const auto& r) { return v < r.first; });
  if (it == std::begin(table)) return static_cast<decltype(&*it)>(nullptr);
  --it;
  return cp <= it->last ? &*it : nullptr;
}

template <typename Table, typename Key>
const auto* find_exact(const Table& table, Key cp) {
  auto it = std::lower_bound(std::begin(table), std::end(table), cp,
                             [](const auto& r, Key v) { return r.cp < v; });
  return (it != std::end(table) && it->cp == cp) ? &*it : nullptr;
}

inline std::string hex4(char32_t cp) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04X", static_cast<unsigned>(cp));
  return buf;
}

// Hangul syllable constants (Unicode chapter 3.12).
inline constexpr char32_t kHangulSBase = 0xAC00;
inline constexpr char32_t kHangulLBase = 0x1100;
inline constexpr char32_t kHangulVBase = 0x1161;
inline constexpr char32_t kHangulTBase = 0x11A7;
inline constexpr char32_t kHangulLCount = 19;
inline constexpr char32_t kHangulVCount = 21;
inline constexpr char32_t kHangulTCount = 28;
inline constexpr char32_t kHangulNCount = kHangulVCount * kHangulTCount;
inline constexpr char32_t kHangulSCount = kHangulLCount * kHangulNCount;

inline constexpr bool is_hangul_syllable(char32_t cp) {
  return cp >= kHangulSBase && cp < kHangulSBase + kHangulSCount;
}

inline std::string hangul_syllable_name(char32_t cp) {
  static constexpr std::string_view kL[] = {"G", "GG", "N", "D", "DD", "R", "M", "B", "BB", "S",
                                            "SS", "", "J", "JJ", "C", "K", "T", "P", "H"};
  static constexpr std::string_view kV[] = {"A", "AE", "YA", "YAE", "EO", "E", "YEO",
                                            "YE", "O", "WA", "WAE", "OE", "YO", "U",
                                            "WEO", "WE", "WI", "YU", "EU", "YI", "I"};
  static constexpr std::string_view kT[] = {"", "G", "GG", "GS", "N", "NJ", "NH", "D", "L", "LG",
                                            "LM", "LB", "LS", "LT", "LP", "LH", "M", "B", "BS",
                                            "S", "SS", "NG", "J", "C", "K", "T", "P", "H"};
  char32_t s = cp - kHangulSBase;
  std::string name = "HANGUL SYLLABLE ";
  name += kL[s / kHangulNCount];
  name += kV[(s % kHangulNCount) / kHangulTCount];
  name += kT[s % kHangulTCount];
  return name;
}

enum EmojiFlag : std::uint8_t {
  kEmoji = 1 << 0,
  kEmojiPresentation = 1 << 1,
  kEmojiModifier = 1 << 2,
  kEmojiModifierBase = 1 << 3,
  kEmojiComponent = 1 << 4,
  kExtendedPictographic = 1 << 5,
};

inline std::uint8_t emoji_flags(char32_t cp) {
  const auto* r = find_range(ucd::kEmojiFlagRanges, cp);
  return r ? r->flags : 0;
}

}  // namespace detail

inline GeneralCategory general_category(char32_t cp) {
  const auto* r = detail::find_range(detail::ucd::kCategoryRuns, cp);
  return r ? static_cast<GeneralCategory>(r->category) : GeneralCategory::Cn;
}

/// Script property value (long name, e.g. "Latin"); "Unknown" if unlisted.
inline std::string_view script(char32_t cp) {
  const auto* r = detail::find_range(detail::ucd::kScriptRanges, cp);
  return detail::ucd::kScriptNames[r ? r->script : 0];
}

/// Block name, or "No_Block" outside every block.
inline std::string_view block(char32_t cp) {
  const auto* r = detail::find_range(detail::ucd::kBlockRanges, cp);
  return r ? r->name : std::string_view("No_Block");
}

/// Character name property. Empty for controls, surrogates, private use and
/// unassigned codepoints, which have no name.
inline std::string character_name(char32_t cp) {
  if (const auto* e = detail::find_exact(detail::ucd::kNames, cp)) return std::string(e->name);
  if (detail::is_hangul_syllable(cp)) return detail::hangul_syllable_name(cp);
  if (general_category(cp) == GeneralCategory::Lo) {
    auto sc = script(cp);
    if (sc == "Han") return "CJK UNIFIED IDEOGRAPH-" + detail::hex4(cp);
    if (sc == "Tangut") return "TANGUT IDEOGRAPH-" + detail::hex4(cp);
  }
  return {};
}

/// Name, or a code point label such as "<control-0009>" when there is none.
inline std::string display_name(char32_t cp) {
  auto n = character_name(cp);
  if (!n.empty()) return n;
  switch (general_category(cp)) {
    case GeneralCategory::Cc: return "<control-" + detail::hex4(cp) + ">";
    case GeneralCategory::Cs: return "<surrogate-" + detail::hex4(cp) + ">";
    case GeneralCategory::Co: return "<private-use-" + detail::hex4(cp) + ">";
    default: return "<reserved-" + detail::hex4(cp) + ">";
  }
}

inline std::uint8_t canonical_combining_class(char32_t cp) {
  const auto* e = detail::find_exact(detail::ucd::kCombiningClasses, cp);
  return e ? e->ccc : 0;
}

struct CharRecord {
  Codepoint cp;
  GeneralCategory general_category = GeneralCategory::Cn;
  std::string script;
  std::string block;
  std::string name;
};

/// Full property record for one scalar. Total over valid scalars:
/// unassigned codepoints get category Cn and script "Unknown".
inline CharRecord char_record(Codepoint cp) {
  return CharRecord{cp, general_category(cp), std::string(script(cp)), std::string(block(cp)),
                    character_name(cp)};
}

/// Printable unless the category is Cc, Cf, Cs, Co, Cn, Zl or Zp, or it is a
/// space separator other than U+0020.
inline bool is_printable(char32_t cp) {
  switch (general_category(cp)) {
    case GeneralCategory::Cc:
    case GeneralCategory::Cf:
    case GeneralCategory::Cs:
    case GeneralCategory::Co:
    case GeneralCategory::Cn:
    case GeneralCategory::Zl:
    case GeneralCategory::Zp:
      return false;
    case GeneralCategory::Zs:
      return cp == U' ';
    default:
      return true;
  }
}

/// White_Space property (PropList.txt, stable since Unicode 6.3).
inline constexpr bool is_whitespace(char32_t cp) {
  return (cp >= 0x09 && cp <= 0x0D) || cp == 0x20 || cp == 0x85 || cp == 0xA0 || cp == 0x1680 ||
         (cp >= 0x2000 && cp <= 0x200A) || cp == 0x2028 || cp == 0x2029 || cp == 0x202F ||
         cp == 0x205F || cp == 0x3000;
}

inline bool is_extended_pictographic(char32_t cp) {
  return detail::emoji_flags(cp) & detail::kExtendedPictographic;
}
inline bool is_emoji_modifier(char32_t cp) { return detail::emoji_flags(cp) & detail::kEmojiModifier; }
inline bool is_emoji_component(char32_t cp) {
  return detail::emoji_flags(cp) & detail::kEmojiComponent;
}
inline bool has_emoji_property(char32_t cp) { return detail::emoji_flags(cp) & detail::kEmoji; }

inline constexpr bool is_regional_indicator(char32_t cp) { return cp >= 0x1F1E6 && cp <= 0x1F1FF; }
inline constexpr bool is_variation_selector_15_16(char32_t cp) {
  return cp == 0xFE0E || cp == 0xFE0F;
}
inline constexpr bool is_emoji_tag(char32_t cp) { return cp >= 0xE0020 && cp <= 0xE007F; }
inline constexpr char32_t kZeroWidthJoiner = 0x200D;
inline constexpr char32_t kCombiningEnclosingKeycap = 0x20E3;

/// True for scalars that only occur as parts of emoji: ZWJ, VS15/VS16,
/// regional indicators, skin-tone modifiers, the keycap mark and tags.
inline bool is_emoji_sequence_part(char32_t cp) {
  return cp == kZeroWidthJoiner || is_variation_selector_15_16(cp) || is_regional_indicator(cp) ||
         is_emoji_modifier(cp) || cp == kCombiningEnclosingKeycap || is_emoji_tag(cp);
}

/// Full case folding (CaseFolding.txt statuses C and F).
inline void append_case_folded(ScalarString& out, char32_t cp) {
  if (const auto* e = detail::find_exact(detail::ucd::kCaseFolds, cp)) {
    out.append(detail::ucd::kCaseFoldPool + e->offset, e->length);
  } else {
    out += cp;
  }
}

inline ScalarString case_fold(ScalarView text) {
  ScalarString out;
  out.reserve(text.size());
  for (char32_t c : text) append_case_folded(out, c);
  return out;
}

}  // namespace faithful
