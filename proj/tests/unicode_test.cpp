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

#include <map>
#include <sstream>
#include <string>

#include "faithful/unicode/codepoint.hpp"
#include "faithful/unicode/ucd.hpp"
#include "faithful/unicode/utf8.hpp"
#include "test_support.hpp"

namespace faithful {
namespace {

using testing::S;

TEST(CharRecordTest, LatinCapitalA) {
  auto r = char_record(Codepoint(0x41u));
  EXPECT_EQ(r.name, "LATIN CAPITAL LETTER A");
  EXPECT_EQ(r.block, "Basic Latin");
  EXPECT_EQ(r.script, "Latin");
  EXPECT_EQ(r.general_category, GeneralCategory::Lu);
}

TEST(CharRecordTest, CurrencySigns) {
  auto euro = char_record(Codepoint(0x20ACu));
  EXPECT_EQ(euro.name, "EURO SIGN");
  EXPECT_EQ(euro.block, "Currency Symbols");
  EXPECT_EQ(euro.script, "Common");
  auto pound = char_record(Codepoint(0xA3u));
  EXPECT_EQ(pound.name, "POUND SIGN");
  EXPECT_EQ(pound.block, "Latin-1 Supplement");
  EXPECT_EQ(pound.script, "Common");
}

TEST(CharRecordTest, UnassignedIsCnUnknown) {
  auto r = char_record(Codepoint(0x0378u));
  EXPECT_EQ(r.general_category, GeneralCategory::Cn);
  EXPECT_EQ(r.script, "Unknown");
  EXPECT_EQ(r.name, "");
  EXPECT_EQ(char_record(Codepoint(0x10FFFFu)).general_category, GeneralCategory::Cn);
}

TEST(CharRecordTest, AlgorithmicNames) {
  EXPECT_EQ(character_name(0xAC00), "HANGUL SYLLABLE GA");
  EXPECT_EQ(character_name(0xD7A3), "HANGUL SYLLABLE HIH");
  EXPECT_EQ(character_name(0x4E00), "CJK UNIFIED IDEOGRAPH-4E00");
  EXPECT_EQ(character_name(0x20000), "CJK UNIFIED IDEOGRAPH-20000");
  EXPECT_EQ(display_name(0x09), "<control-0009>");
  EXPECT_EQ(display_name(0xE000), "<private-use-E000>");
}

TEST(CodepointTest, RejectsNonScalars) {
  EXPECT_THROW(Codepoint(0xD800u), InvalidArgument);
  EXPECT_THROW(Codepoint(0xDFFFu), InvalidArgument);
  EXPECT_THROW(Codepoint(0x110000u), InvalidArgument);
  EXPECT_NO_THROW(Codepoint(0x10FFFFu));
  EXPECT_EQ(Codepoint(0x41u).label(), "U+0041");
  EXPECT_EQ(Codepoint(0x1F6FCu).label(), "U+1F6FC");
}

TEST(PrintableTest, Examples) {
  EXPECT_TRUE(is_printable(U'A'));
  EXPECT_TRUE(is_printable(U' '));
  EXPECT_FALSE(is_printable(0x200D));  // Cf
  EXPECT_FALSE(is_printable(0x2028));  // Zl
  EXPECT_FALSE(is_printable(0x2029));  // Zp
  EXPECT_FALSE(is_printable(0xA0));    // Zs other than space
  EXPECT_FALSE(is_printable(0x09));    // Cc
  EXPECT_FALSE(is_printable(0xE000));  // Co
  EXPECT_FALSE(is_printable(0x0378));  // Cn
  EXPECT_TRUE(is_printable(0x1F6FC));
}

// Independent reading of UnicodeData.txt: every listed codepoint (and every
// range) must agree with the generated tables on category, name and
// combining class.
TEST(UcdOracleTest, UnicodeDataAgrees) {
  std::istringstream in(testing::read_text_file(testing::ucd_path("UnicodeData.txt")));
  ASSERT_TRUE(in.good());
  std::string line;
  std::size_t checked = 0;
  std::uint32_t range_start = 0;
  while (std::getline(in, line)) {
    std::vector<std::string> f;
    std::stringstream ls(line);
    for (std::string field; std::getline(ls, field, ';');) f.push_back(field);
    ASSERT_GE(f.size(), 4u) << line;
    auto cp = static_cast<std::uint32_t>(std::stoul(f[0], nullptr, 16));
    GeneralCategory gc;
    ASSERT_TRUE(parse_category(f[2], gc)) << line;
    if (f[1].ends_with(", First>")) {
      range_start = cp;
      continue;
    }
    std::uint32_t first = f[1].ends_with(", Last>") ? range_start : cp;
    for (std::uint32_t c = first; c <= cp; ++c) {
      ASSERT_EQ(general_category(c), gc) << std::hex << c;
      ASSERT_EQ(canonical_combining_class(c), std::stoi(f[3])) << std::hex << c;
      ++checked;
    }
    if (first == cp && f[1].front() != '<') ASSERT_EQ(character_name(cp), f[1]) << std::hex << cp;
  }
  EXPECT_GT(checked, 280000u);
}

TEST(UcdOracleTest, ScriptsAgree) {
  std::istringstream in(testing::read_text_file(testing::ucd_path("Scripts.txt")));
  std::string line;
  std::size_t checked = 0;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    auto semi = line.find(';');
    if (semi == std::string::npos) continue;
    std::string range = line.substr(0, semi), name = line.substr(semi + 1);
    name.erase(0, name.find_first_not_of(' '));
    name.erase(name.find_last_not_of(' ') + 1);
    auto dots = range.find("..");
    auto a = static_cast<std::uint32_t>(std::stoul(range.substr(0, dots), nullptr, 16));
    auto b = dots == std::string::npos ? a : static_cast<std::uint32_t>(std::stoul(range.substr(dots + 2), nullptr, 16));
    for (auto c = a; c <= b; ++c, ++checked) ASSERT_EQ(script(c), name) << std::hex << c;
  }
  EXPECT_GT(checked, 100000u);
}

TEST(CaseFoldTest, FullFolding) {
  EXPECT_EQ(case_fold(S("Straße")), S("strasse"));
  EXPECT_EQ(case_fold(S("LOVE")), S("love"));
  EXPECT_EQ(case_fold(S("ΣΑΣ")), S("σασ"));
}

TEST(Utf8Test, RoundTrip) {
  std::string s = "a£€𝕃🏳️‍⚧️";
  EXPECT_EQ(utf8::encode(utf8::decode(s)), s);
  EXPECT_EQ(utf8::decode(s).size(), 9u);
}

TEST(Utf8Test, StrictRejectsIllFormed) {
  for (std::string bad : {"\xC0\x80", "\xED\xA0\x80", "\xF4\x90\x80\x80", "\xE2\x82", "\x80", "\xFF", "ab\xF0\x9F\x98"}) {
    EXPECT_THROW(utf8::decode(bad), DecodeError) << bad;
    EXPECT_FALSE(utf8::is_valid(bad));
  }
  try {
    utf8::decode("ab\xFF");
  } catch (const DecodeError& e) {
    EXPECT_EQ(e.offset(), 2u);
  }
}

TEST(Utf8Test, LossyUsesMaximalSubparts) {
  std::size_t n = 0;
  EXPECT_EQ(utf8::decode("a\xF0\x80\x80z", utf8::DecodeMode::kLossy, &n), U"a���z");
  EXPECT_EQ(n, 3u);
  EXPECT_EQ(utf8::decode("a\xE2\x82z", utf8::DecodeMode::kLossy, &n), U"a�z");
  EXPECT_EQ(n, 1u);
}

TEST(Utf8Test, IngestNormalizesLineEndings) {
  auto r = utf8::ingest("\xEF\xBB\xBFone\r\ntwo\rthree\n");
  EXPECT_TRUE(r.had_bom);
  EXPECT_EQ(r.text, U"one\ntwo\nthree\n");
  EXPECT_EQ(r.converted_line_endings, 2u);
  auto plain = utf8::ingest("x\n");
  EXPECT_FALSE(plain.had_bom);
  EXPECT_EQ(plain.converted_line_endings, 0u);
}

}  // namespace
}  // namespace faithful
