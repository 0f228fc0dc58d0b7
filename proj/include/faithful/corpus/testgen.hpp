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

// Generators for the two artificial corpora used to probe a corpus tool:
//
//   emoji<TAB><emoji><LF>          one line per distinct catalog emoji
//   character<TAB><scalar><LF>     one line per printable Latin/Common scalar
//
// A tool that tokenizes correctly reports every emoji (and every character)
// as a type of frequency 1.

#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "faithful/emoji_catalog.hpp"
#include "faithful/unicode/normalization.hpp"
#include "faithful/unicode/ucd.hpp"
#include "faithful/unicode/utf8.hpp"

namespace faithful {

inline constexpr std::string_view kEmojiLinePrefix = "emoji";
inline constexpr std::string_view kCharacterLinePrefix = "character";

/// One line per distinct emoji (fully-qualified and component rows), in
/// codepoint order.
inline std::string gen_emoji_testfile(const EmojiCatalog& catalog) {
  std::vector<ScalarView> keys;
  for (const EmojiEntry* e : catalog.distinct_entries()) keys.push_back(e->codepoints);
  std::sort(keys.begin(), keys.end());
  std::string out;
  for (ScalarView k : keys) {
    out += kEmojiLinePrefix;
    out += '\t';
    out += utf8::encode(k);
    out += '\n';
  }
  return out;
}

/// Every printable scalar whose script is Latin or Common, ascending.
inline std::vector<char32_t> homoglyph_test_scalars() {
  std::vector<char32_t> out;
  for (char32_t c = 0; c <= 0x10FFFF; ++c) {
    if (c == 0xD800) c = 0xE000;
    if (!is_printable(c)) continue;
    auto sc = script(c);
    if (sc == "Latin" || sc == "Common") out.push_back(c);
  }
  return out;
}

/// The character test file; with `normalized`, every scalar is replaced by
/// its NFKC form, which may be several scalars.
inline std::string gen_homoglyph_testfile(bool normalized = false) {
  std::string out;
  for (char32_t c : homoglyph_test_scalars()) {
    out += kCharacterLinePrefix;
    out += '\t';
    ScalarString one(1, c);
    out += utf8::encode(normalized ? nfkc(one) : one);
    out += '\n';
  }
  return out;
}

/// Character tokens and types of a character test file: each non-whitespace
/// scalar after the tab is one token; types are case-folded.
struct CharacterFileCounts {
  std::size_t lines = 0;
  std::size_t tokens = 0;
  std::size_t types = 0;
};

inline CharacterFileCounts count_character_file(std::string_view file) {
  CharacterFileCounts c;
  std::set<ScalarString> types;
  std::size_t pos = 0;
  while (pos < file.size()) {
    std::size_t nl = file.find('\n', pos);
    if (nl == std::string_view::npos) nl = file.size();
    std::string_view line = file.substr(pos, nl - pos);
    pos = nl + 1;
    ++c.lines;
    auto tab = line.find('\t');
    if (tab == std::string_view::npos) continue;
    for (char32_t s : utf8::decode(line.substr(tab + 1))) {
      if (is_whitespace(s)) continue;
      ++c.tokens;
      types.insert(case_fold(ScalarView(&s, 1)));
    }
  }
  c.types = types.size();
  return c;
}

/// Per-scalar itemization of the character test file, so that its size can
/// be reconciled against any other count. Each row carries the properties a
/// different selection rule might key on.
struct CharacterFileItem {
  char32_t cp;
  GeneralCategory category;
  std::string_view script;
  std::string_view block;
  bool emoji_key;          // the scalar alone is a catalog key
  bool emoji_property;     // Emoji=Yes in emoji-data
  std::size_t nfkc_length; // scalars in its NFKC form
};

inline std::vector<CharacterFileItem> explain_character_file(const EmojiCatalog& catalog) {
  std::vector<CharacterFileItem> out;
  for (char32_t c : homoglyph_test_scalars()) {
    ScalarString one(1, c);
    out.push_back(CharacterFileItem{c, general_category(c), script(c), block(c), catalog.contains(one),
                                    has_emoji_property(c), nfkc(one).size()});
  }
  return out;
}

}  // namespace faithful
