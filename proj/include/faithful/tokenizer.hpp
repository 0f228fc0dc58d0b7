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

// Emoji-aware segmentation of scalar text into Word, Emoji, Punctuation and
// Other tokens.
//
// Emoji are found by greedy longest match against the catalog, so a valid
// sequence is never split into fragments: a ZWJ sequence either matches as a
// whole or its parts match as the shorter keys they are.

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "faithful/emoji_catalog.hpp"
#include "faithful/error.hpp"
#include "faithful/unicode/ucd.hpp"
#include "faithful/unicode/utf8.hpp"

namespace faithful {

enum class TokenKind { Word, Emoji, TransliteratedEmoji, Punctuation, Other };

inline constexpr std::string_view to_string(TokenKind k) {
  switch (k) {
    case TokenKind::Word: return "word";
    case TokenKind::Emoji: return "emoji";
    case TokenKind::TransliteratedEmoji: return "transliterated-emoji";
    case TokenKind::Punctuation: return "punctuation";
    case TokenKind::Other: return "other";
  }
  return "?";
}

inline std::optional<TokenKind> parse_token_kind(std::string_view s) {
  if (s == "word") return TokenKind::Word;
  if (s == "emoji") return TokenKind::Emoji;
  if (s == "transliterated-emoji") return TokenKind::TransliteratedEmoji;
  if (s == "punctuation") return TokenKind::Punctuation;
  if (s == "other") return TokenKind::Other;
  return std::nullopt;
}

/// Half-open byte range [start, end) into a UTF-8 document.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - start; }
  friend bool operator==(const Span&, const Span&) = default;
};

struct Token {
  ScalarString text;
  TokenKind kind = TokenKind::Other;
  Span span;
  std::optional<ScalarString> orig;  // pre-normalization form, only when it differs

  friend bool operator==(const Token&, const Token&) = default;
};

/// Which scalars may compose a word token.
struct TokenDefinition {
  std::set<GeneralCategory> letter_categories{GeneralCategory::Lu, GeneralCategory::Ll,
                                              GeneralCategory::Lt, GeneralCategory::Lm,
                                              GeneralCategory::Lo};
  std::set<GeneralCategory> number_categories{GeneralCategory::Nd};
  std::set<char32_t> user_appended{U'^', U'{', U'}'};
  bool clitic_split = true;
  // Combining marks continue a word run, so a decomposed "e" + U+0301 stays
  // in its word. Emoji sequence parts (VS16, keycap) never attach.
  bool attach_marks = true;

  /// Throws InvalidArgument if a whitespace scalar was appended.
  void validate() const {
    for (char32_t c : user_appended)
      if (is_whitespace(c))
        throw InvalidArgument("token definition: whitespace " + Codepoint(c).label() +
                              " cannot be a word character");
  }

  bool is_word_start(char32_t c) const {
    if (user_appended.contains(c)) return true;
    auto gc = general_category(c);
    return letter_categories.contains(gc) || number_categories.contains(gc);
  }

  bool is_word_continue(char32_t c) const {
    if (is_word_start(c)) return true;
    return attach_marks && is_mark(general_category(c)) && !is_emoji_sequence_part(c);
  }

  bool is_letter_like(char32_t c) const { return letter_categories.contains(general_category(c)); }
};

inline constexpr bool is_apostrophe(char32_t c) { return c == U'\'' || c == 0x2019; }

/// One catalog match, in scalar indices of the scanned text.
struct EmojiMatch {
  std::size_t begin = 0;
  std::size_t end = 0;
  const EmojiEntry* entry = nullptr;
};

/// Longest catalog key starting at `pos`, bounded by max_len.
inline std::optional<EmojiMatch> match_emoji_at(ScalarView text, std::size_t pos,
                                                const EmojiCatalog& catalog) {
  if (pos >= text.size() || !catalog.is_first_scalar(text[pos])) return std::nullopt;
  std::size_t longest = std::min(catalog.max_len(), text.size() - pos);
  for (std::size_t len = longest; len > 0; --len) {
    if (const EmojiEntry* e = catalog.lookup(text.substr(pos, len))) return EmojiMatch{pos, pos + len, e};
  }
  return std::nullopt;
}

/// Greedy left-to-right longest-match scan. Matches never overlap.
inline std::vector<EmojiMatch> segment_emojis(ScalarView text, const EmojiCatalog& catalog) {
  std::vector<EmojiMatch> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (auto m = match_emoji_at(text, pos, catalog)) {
      out.push_back(*m);
      pos = m->end;
    } else {
      ++pos;
    }
  }
  return out;
}

/// Isolates every emoji match with single spaces, never doubling existing
/// whitespace.
inline ScalarString retokenise(ScalarView text, const EmojiCatalog& catalog) {
  ScalarString out;
  out.reserve(text.size() + text.size() / 4);
  bool space_after_emoji = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (auto m = match_emoji_at(text, pos, catalog)) {
      if (!out.empty() && !is_whitespace(out.back())) out += U' ';
      out.append(text.substr(m->begin, m->end - m->begin));
      space_after_emoji = true;
      pos = m->end;
      continue;
    }
    if (space_after_emoji && !is_whitespace(text[pos])) out += U' ';
    space_after_emoji = false;
    out += text[pos++];
  }
  return out;
}

namespace detail {

// Length of a clitic starting at the apostrophe `pos` in word run
// [.., end): the apostrophe plus 1-3 letters reaching exactly to `end`.
inline std::size_t clitic_length(ScalarView text, std::size_t pos, std::size_t end,
                                 const TokenDefinition& td) {
  if (!is_apostrophe(text[pos])) return 0;
  std::size_t letters = end - pos - 1;
  if (letters < 1 || letters > 3) return 0;
  for (std::size_t i = pos + 1; i < end; ++i) {
    bool mark = is_mark(general_category(text[i])) && td.attach_marks;
    if (!td.is_letter_like(text[i]) && !mark) return 0;
  }
  return end - pos;
}

}  // namespace detail

/// Tokenizes `text` (normally the output of retokenise). Spans are byte
/// offsets into the UTF-8 encoding of `text` shifted by `base_offset`.
inline std::vector<Token> tokenize(ScalarView text, const EmojiCatalog& catalog,
                                   const TokenDefinition& td, std::size_t base_offset = 0) {
  std::vector<Token> out;
  // Byte offset of each scalar index, computed incrementally.
  std::vector<std::size_t> offset(text.size() + 1);
  offset[0] = base_offset;
  for (std::size_t i = 0; i < text.size(); ++i) offset[i + 1] = offset[i] + utf8::encoded_length(text[i]);

  auto emit = [&](std::size_t b, std::size_t e, TokenKind kind) {
    out.push_back(Token{ScalarString(text.substr(b, e - b)), kind, Span{offset[b], offset[e]}, std::nullopt});
  };

  std::size_t pos = 0;
  while (pos < text.size()) {
    char32_t c = text[pos];
    if (is_whitespace(c)) {
      ++pos;
      continue;
    }
    if (auto m = match_emoji_at(text, pos, catalog)) {
      emit(m->begin, m->end, TokenKind::Emoji);
      pos = m->end;
      continue;
    }
    if (td.is_word_start(c)) {
      // A word run may contain apostrophes between word characters.
      std::size_t end = pos + 1;
      std::size_t last_apostrophe = std::string_view::npos;
      while (end < text.size()) {
        if (catalog.is_first_scalar(text[end]) && match_emoji_at(text, end, catalog)) break;
        if (td.is_word_continue(text[end])) {
          ++end;
        } else if (is_apostrophe(text[end]) && end + 1 < text.size() && td.is_word_start(text[end + 1]) &&
                   !match_emoji_at(text, end + 1, catalog)) {
          last_apostrophe = end;
          ++end;
        } else {
          break;
        }
      }
      std::size_t clitic = 0;
      if (td.clitic_split && last_apostrophe != std::string_view::npos)
        clitic = detail::clitic_length(text, last_apostrophe, end, td);
      if (clitic) {
        emit(pos, end - clitic, TokenKind::Word);
        emit(end - clitic, end, TokenKind::Word);
      } else {
        emit(pos, end, TokenKind::Word);
      }
      pos = end;
      continue;
    }
    emit(pos, pos + 1, is_punctuation(general_category(c)) ? TokenKind::Punctuation : TokenKind::Other);
    ++pos;
  }
  return out;
}

}  // namespace faithful
