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

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "faithful/normalizer.hpp"
#include "faithful/tokenizer.hpp"
#include "test_support.hpp"

namespace faithful {
namespace {

using testing::S;
using testing::U8;

const EmojiCatalog& cat() { return EmojiCatalog::bundled(); }

std::vector<std::string> texts(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens) out.push_back(U8(t.text));
  return out;
}

std::vector<TokenKind> kinds(const std::vector<Token>& tokens) {
  std::vector<TokenKind> out;
  for (const auto& t : tokens) out.push_back(t.kind);
  return out;
}

TEST(SegmentEmojisTest, TransgenderFlagIsOneMatch) {
  ScalarString flag = U"\U0001F3F3\uFE0F\u200D\u26A7\uFE0F";
  auto m = segment_emojis(flag, cat());
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].begin, 0u);
  EXPECT_EQ(m[0].end, 5u);
  EXPECT_EQ(m[0].entry->cldr_name, "transgender flag");
}

TEST(SegmentEmojisTest, ModifierSequenceIsOneMatch) {
  auto m = segment_emojis(U"\U0001F91D\U0001F3FC", cat());
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].end, 2u);
}

TEST(SegmentEmojisTest, NoEmoji) { EXPECT_TRUE(segment_emojis(U"abc", cat()).empty()); }

TEST(RetokeniseTest, Examples) {
  EXPECT_EQ(retokenise(U"\U0001F6FC\U0001F6FCdown", cat()), U"\U0001F6FC \U0001F6FC down");
  EXPECT_EQ(retokenise(U"go \U0001FA9E", cat()), U"go \U0001FA9E");
  EXPECT_EQ(retokenise(U"", cat()), U"");
  EXPECT_EQ(retokenise(U"a\U0001F6FC\nb", cat()), U"a \U0001F6FC\nb");
  EXPECT_EQ(retokenise(U"\U0001F1F7\U0001F1FA\U0001F1FA\U0001F1F8", cat()), U"\U0001F1F7\U0001F1FA \U0001F1FA\U0001F1F8");
}

TEST(RetokeniseTest, IsIdempotentOnRandomDocuments) {
  testing::DocumentGenerator gen(cat(), 11);
  for (int i = 0; i < 300; ++i) {
    ScalarString doc = gen.document(12);
    ScalarString once = retokenise(doc, cat());
    ASSERT_EQ(retokenise(once, cat()), once) << U8(doc);
    // Only spaces are inserted.
    ScalarString stripped;
    for (char32_t c : once)
      if (c != U' ') stripped += c;
    ScalarString expected;
    for (char32_t c : doc)
      if (c != U' ') expected += c;
    ASSERT_EQ(stripped, expected);
  }
}

TEST(TokenizeTest, ExampleTwoSentence) {
  ScalarString text = retokenise(S("No matter what, love is 𝕃𝕆𝕍𝔼! 🇷🇺🇺🇸"), cat());
  auto tokens = tokenize(text, cat(), TokenDefinition{});
  EXPECT_EQ(texts(tokens), (std::vector<std::string>{"No", "matter", "what", ",", "love", "is", "𝕃𝕆𝕍𝔼", "!",
                                                     "🇷🇺", "🇺🇸"}));
  std::size_t countable = 0;
  for (const auto& t : tokens) countable += is_countable(t.kind);
  EXPECT_EQ(countable, 8u);
}

TEST(TokenizeTest, LabelIsOneWord) {
  auto tokens = tokenize(U"{roller^skate}", cat(), TokenDefinition{});
  ASSERT_EQ(tokens.size(), 1u);
  EXPECT_EQ(tokens[0].kind, TokenKind::Word);
}

TEST(TokenizeTest, CliticSplit) {
  EXPECT_EQ(texts(tokenize(U"PRESIDENT'S", cat(), TokenDefinition{})),
            (std::vector<std::string>{"PRESIDENT", "'S"}));
  EXPECT_EQ(texts(tokenize(S("PRESIDENT’S"), cat(), TokenDefinition{})),
            (std::vector<std::string>{"PRESIDENT", "’S"}));
  EXPECT_EQ(texts(tokenize(U"they're", cat(), TokenDefinition{})), (std::vector<std::string>{"they", "'re"}));
  // Four letters after the apostrophe is not a clitic.
  EXPECT_EQ(texts(tokenize(U"rock'roll", cat(), TokenDefinition{})), (std::vector<std::string>{"rock'roll"}));
  // A trailing apostrophe is punctuation.
  EXPECT_EQ(texts(tokenize(U"dogs'", cat(), TokenDefinition{})), (std::vector<std::string>{"dogs", "'"}));
  TokenDefinition off;
  off.clitic_split = false;
  EXPECT_EQ(texts(tokenize(U"PRESIDENT'S", cat(), off)), (std::vector<std::string>{"PRESIDENT'S"}));
}

TEST(TokenizeTest, KindsAndPunctuation) {
  auto tokens = tokenize(U"well-known, 42!", cat(), TokenDefinition{});
  EXPECT_EQ(texts(tokens), (std::vector<std::string>{"well", "-", "known", ",", "42", "!"}));
  EXPECT_EQ(kinds(tokens), (std::vector<TokenKind>{TokenKind::Word, TokenKind::Punctuation, TokenKind::Word,
                                                   TokenKind::Punctuation, TokenKind::Word, TokenKind::Punctuation}));
  TokenDefinition hyphen;
  hyphen.user_appended.insert(U'-');
  EXPECT_EQ(texts(tokenize(U"well-known", cat(), hyphen)), (std::vector<std::string>{"well-known"}));
  EXPECT_EQ(tokenize(U"+", cat(), TokenDefinition{})[0].kind, TokenKind::Other);
}

TEST(TokenizeTest, CombiningMarksStayInWords) {
  auto tokens = tokenize(U"Chloe\u0301 x", cat(), TokenDefinition{});
  ASSERT_EQ(tokens.size(), 2u);
  EXPECT_EQ(tokens[0].text, U"Chloe\u0301");
  TokenDefinition detached;
  detached.attach_marks = false;
  EXPECT_EQ(tokenize(U"Chloe\u0301", cat(), detached).size(), 2u);
}

TEST(TokenizeTest, OrphanComponents) {
  // A lone ZWJ or regional indicator is not a catalog key.
  auto zwj = tokenize(U"a \u200D b", cat(), TokenDefinition{});
  ASSERT_EQ(zwj.size(), 3u);
  EXPECT_EQ(zwj[1].kind, TokenKind::Other);
  auto ri = tokenize(U"\U0001F1FA", cat(), TokenDefinition{});
  ASSERT_EQ(ri.size(), 1u);
  EXPECT_EQ(ri[0].kind, TokenKind::Other);
  // Skin tones are component rows of the catalog.
  auto tone = tokenize(U"\U0001F3FC", cat(), TokenDefinition{});
  ASSERT_EQ(tone.size(), 1u);
  EXPECT_EQ(tone[0].kind, TokenKind::Emoji);
  // VS16 never joins a word.
  auto vs = tokenize(U"a\uFE0F", cat(), TokenDefinition{});
  ASSERT_EQ(vs.size(), 2u);
  EXPECT_EQ(vs[1].kind, TokenKind::Other);
}

TEST(TokenizeTest, ZwjSequencesStayWhole) {
  for (ScalarString s : {ScalarString(U"\U0001F3F3\uFE0F\u200D\u26A7\uFE0F"), ScalarString(U"\U0001F426\u200D\u2B1B"),
                         ScalarString(U"\U0001F635\u200D\U0001F4AB")}) {
    auto tokens = tokenize(retokenise(s, cat()), cat(), TokenDefinition{});
    ASSERT_EQ(tokens.size(), 1u);
    EXPECT_EQ(tokens[0].kind, TokenKind::Emoji);
    EXPECT_EQ(tokens[0].text, s);
  }
}

TEST(TokenizeTest, SpansAreByteOffsets) {
  std::string utf8 = "\xC3\xA9 \xF0\x9F\x9B\xBC go";
  auto tokens = tokenize(S(utf8), cat(), TokenDefinition{}, 100);
  ASSERT_EQ(tokens.size(), 3u);
  for (const auto& t : tokens) EXPECT_EQ(utf8.substr(t.span.start - 100, t.span.size()), U8(t.text));
  EXPECT_EQ(tokens[1].span, (Span{103, 107}));
}

TEST(TokenDefinitionTest, RejectsWhitespace) {
  TokenDefinition td;
  td.user_appended.insert(U' ');
  EXPECT_THROW(td.validate(), InvalidArgument);
}

TEST(TokenKindTest, RoundTrip) {
  for (auto k : {TokenKind::Word, TokenKind::Emoji, TokenKind::TransliteratedEmoji, TokenKind::Punctuation,
                 TokenKind::Other})
    EXPECT_EQ(parse_token_kind(to_string(k)), k);
  EXPECT_FALSE(parse_token_kind("sentence"));
}

// Brute force: at each position try every catalog key and take the longest.
std::vector<std::pair<std::size_t, std::size_t>> brute_force_segments(ScalarView text) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t best = 0;
    for (const auto& e : cat().entries()) {
      const auto& k = e.codepoints;
      if (k.size() > best && text.substr(pos).starts_with(k)) best = k.size();
    }
    if (best) {
      out.emplace_back(pos, pos + best);
      pos += best;
    } else {
      ++pos;
    }
  }
  return out;
}

TEST(TokenizePropertyTest, GreedyMatchesBruteForce) {
  testing::DocumentGenerator gen(cat(), 3);
  for (int i = 0; i < 60; ++i) {
    ScalarString text;
    std::uniform_int_distribution<int> n(1, 6);
    for (int j = 0, k = n(gen.rng()); j < k; ++j) text += gen.random_entry().codepoints;
    auto fast = segment_emojis(text, cat());
    auto slow = brute_force_segments(text);
    ASSERT_EQ(fast.size(), slow.size()) << U8(text);
    for (std::size_t j = 0; j < fast.size(); ++j) {
      EXPECT_EQ(fast[j].begin, slow[j].first);
      EXPECT_EQ(fast[j].end, slow[j].second);
    }
  }
}

TEST(TokenizePropertyTest, LosslessModuloWhitespace) {
  testing::DocumentGenerator gen(cat(), 5);
  std::size_t checked = 0;
  for (int i = 0; i < 400; ++i) {
    ScalarString text = retokenise(gen.document(10), cat());
    auto tokens = tokenize(text, cat(), TokenDefinition{});
    // Skip documents with Other tokens, whose neighbours may abut them.
    bool other = false;
    for (const auto& t : tokens) other |= t.kind == TokenKind::Other;
    if (other) continue;
    ScalarString joined, squeezed;
    for (const auto& t : tokens) joined += t.text;
    for (char32_t c : text)
      if (!is_whitespace(c)) squeezed += c;
    ASSERT_EQ(joined, squeezed);
    // Tokens cover the text in order and without overlap.
    std::string utf8 = U8(text);
    for (std::size_t j = 0; j < tokens.size(); ++j) {
      ASSERT_EQ(utf8.substr(tokens[j].span.start, tokens[j].span.size()), U8(tokens[j].text));
      if (j) ASSERT_LE(tokens[j - 1].span.end, tokens[j].span.start);
    }
    ++checked;
  }
  EXPECT_GT(checked, 50u);
}

}  // namespace
}  // namespace faithful
