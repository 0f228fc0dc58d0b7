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

#include <string>

#include "faithful/config.hpp"

namespace faithful {
namespace {

TEST(ConfigTest, DefaultsMatchThePipeline) {
  Settings s;
  EXPECT_TRUE(s.pipeline.translit);
  EXPECT_TRUE(s.pipeline.nfkc);
  EXPECT_EQ(s.pipeline.form, NormalizationForm::NFKC);
  EXPECT_TRUE(s.case_fold);
  EXPECT_FALSE(s.lossy);
  EXPECT_EQ(s.jobs, 1u);
}

TEST(ConfigTest, ParsesKeysCommentsAndBlankLines) {
  Settings s;
  parse_config(
      "# corpus settings\n"
      "\n"
      "translit = off\n"
      "nfkc=no\n"
      "form = NFC\n"
      "clitic_split = false\n"
      "attach_marks = 0\n"
      "case_fold = off\n"
      "lossy = on\n"
      "check_delimiters = off\n"
      "word_chars = -_\n"
      "emoji_data = /tmp/emoji-test.txt\n"
      "jobs = 4\n",
      s);
  EXPECT_FALSE(s.pipeline.translit);
  EXPECT_FALSE(s.pipeline.nfkc);
  EXPECT_EQ(s.pipeline.form, NormalizationForm::NFC);
  EXPECT_FALSE(s.pipeline.td.clitic_split);
  EXPECT_FALSE(s.pipeline.td.attach_marks);
  EXPECT_FALSE(s.case_fold);
  EXPECT_TRUE(s.lossy);
  EXPECT_FALSE(s.pipeline.check_delimiters);
  EXPECT_TRUE(s.pipeline.td.user_appended.contains(U'-'));
  EXPECT_TRUE(s.pipeline.td.user_appended.contains(U'_'));
  EXPECT_EQ(s.emoji_data, "/tmp/emoji-test.txt");
  EXPECT_EQ(s.jobs, 4u);
}

TEST(ConfigTest, DelimitersReplaceWordCharacters) {
  Settings s;
  apply_setting(s, "delimiters", "<>|");
  EXPECT_EQ(s.pipeline.delimiters, LabelDelimiters::parse("<>|"));
  EXPECT_FALSE(s.pipeline.td.user_appended.contains(U'{'));
  EXPECT_FALSE(s.pipeline.td.user_appended.contains(U'^'));
}

TEST(ConfigTest, ErrorsNameTheLine) {
  auto line_of = [](std::string_view text) -> std::size_t {
    Settings s;
    try {
      parse_config(text, s);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("translit = on\nbogus = 1\n"), 2u);
  EXPECT_EQ(line_of("# c\n\nno equals sign\n"), 3u);
  EXPECT_EQ(line_of("nfkc = maybe\n"), 1u);
  EXPECT_EQ(line_of("jobs = 0\n"), 1u);
  EXPECT_EQ(line_of("form = NFX\n"), 1u);
  EXPECT_EQ(line_of("word_chars = a b\n"), 1u);
  EXPECT_EQ(line_of(" = x\n"), 1u);
}

TEST(ConfigTest, MissingFile) {
  Settings s;
  EXPECT_THROW(load_config_file("/nonexistent/faithful.conf", s), Error);
}

}  // namespace
}  // namespace faithful
