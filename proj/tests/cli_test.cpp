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

// End-to-end runs of the command-line tool.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "test_support.hpp"

namespace faithful {
namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("faithful_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& content) {
    fs::path p = dir_ / name;
    fs::create_directories(p.parent_path());
    std::ofstream(p, std::ios::binary) << content;
    return p;
  }

  std::string read(const fs::path& p) { return testing::read_text_file(p.string()); }

  RunResult run(const std::string& args, const std::string& stdin_text = "") {
    fs::path in = write("stdin.txt", stdin_text), out = dir_ / "stdout.txt", err = dir_ / "stderr.txt";
    std::string cmd = std::string("NO_COLOR=1 '") + FAITHFUL_CLI_PATH + "' " + args + " < '" + in.string() +
                      "' > '" + out.string() + "' 2> '" + err.string() + "'";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = read(out);
    r.err = read(err);
    return r;
  }

  fs::path dir_;
};

TEST_F(CliTest, InspectPoundSign) {
  auto r = run("inspect '£'");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("U+00A3,£,POUND SIGN,Sc,Latin-1 Supplement,Common"), std::string::npos) << r.out;
}

TEST_F(CliTest, PreprocessTxtFromFile) {
  auto in = write("post.txt", "🛼🛼down\n");
  auto r = run("preprocess '" + in.string() + "'");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(r.out, "{roller^skate} {roller^skate} down\n");
  EXPECT_NE(r.err.find("# provenance {"), std::string::npos);
  EXPECT_NE(r.err.find("\"config_hash\""), std::string::npos);
}

TEST_F(CliTest, PreprocessXmlToFileWritesSidecar) {
  auto in = write("post.txt", "No matter what, love is 𝕃𝕆𝕍𝔼!\n");
  auto out = dir_ / "post.xml";
  auto r = run("preprocess -f xml -o '" + out.string() + "' '" + in.string() + "'");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  std::string xml = read(out);
  EXPECT_NE(xml.find("<norm orig=\"𝕃𝕆𝕍𝔼\">LOVE</norm>"), std::string::npos) << xml;
  EXPECT_TRUE(fs::exists(dir_ / "post.xml.provenance.json"));
}

TEST_F(CliTest, TestgenEmojiLineCount) {
  auto r = run("testgen emoji");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 3782);
}

TEST_F(CliTest, UsageErrorsExitOne) {
  EXPECT_EQ(run("preprocess --no-such-flag").exit_code, 1);
  EXPECT_EQ(run("").exit_code, 1);
  EXPECT_EQ(run("testgen sideways").exit_code, 1);
  EXPECT_EQ(run("preprocess /nonexistent/file.txt").exit_code, 1);
}

TEST_F(CliTest, InvalidUtf8NeedsLossy) {
  auto in = write("bad.txt", "ok \xFF here\n");
  auto strict = run("preprocess '" + in.string() + "'");
  EXPECT_EQ(strict.exit_code, 1);
  EXPECT_NE(strict.err.find("byte 3"), std::string::npos) << strict.err;
  auto lossy = run("preprocess --lossy '" + in.string() + "'");
  EXPECT_EQ(lossy.exit_code, 0) << lossy.err;
  EXPECT_EQ(lossy.out, "ok \xEF\xBF\xBD here\n");
}

TEST_F(CliTest, DelimiterCollisionIsReported) {
  auto in = write("braces.txt", "{already} here\n");
  auto r = run("preprocess '" + in.string() + "'");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.err.find("--translit-delims"), std::string::npos);
  auto ok = run("preprocess --translit-delims '<>|' '" + in.string() + "'");
  EXPECT_EQ(ok.exit_code, 0) << ok.err;
  // Braces are ordinary punctuation once they are no longer delimiters.
  EXPECT_EQ(ok.out, "{ already } here\n");
}

TEST_F(CliTest, JobsDoNotChangeOutput) {
  std::string corpus;
  for (int i = 0; i < 40; ++i) {
    write("corpus/doc" + std::to_string(100 + i) + ".txt",
          "post " + std::to_string(i) + " 🛼🛼 𝐏𝐑𝐄𝐒𝐈𝐃𝐄𝐍𝐓’𝐒 Chloe\xCC\x81 🏳️‍⚧️\n");
  }
  auto one = run("wordlist -j 1 '" + (dir_ / "corpus").string() + "'");
  auto many = run("wordlist -j 8 '" + (dir_ / "corpus").string() + "'");
  ASSERT_EQ(one.exit_code, 0) << one.err;
  ASSERT_EQ(many.exit_code, 0) << many.err;
  EXPECT_EQ(one.out, many.out);
  EXPECT_NE(one.out.find("{roller^skate},80\n"), std::string::npos) << one.out;
  EXPECT_NE(one.out.find("chlo\xC3\xA9,40\n"), std::string::npos) << one.out;
  auto pre1 = run("preprocess -f vrt -j 1 '" + (dir_ / "corpus").string() + "'");
  auto pre8 = run("preprocess -f vrt -j 8 '" + (dir_ / "corpus").string() + "'");
  EXPECT_EQ(pre1.out, pre8.out);
}

TEST_F(CliTest, AuditEndToEnd) {
  auto src = write("src.txt", "🏳️‍⚧️ pride 🛼🛼\n");
  auto inv = dir_ / "inv.csv";
  ASSERT_EQ(run("inventory -o '" + inv.string() + "' '" + src.string() + "'").exit_code, 0);
  // A tool that split the flag and fused the skates.
  auto ext = write("ext.csv", "rank,word,freq\n1,pride,1\n2,🏳️,1\n3,⚧️,1\n4,🛼🛼,1\n");
  auto r = run("audit --inventory '" + inv.string() + "' --wordlist '" + ext.string() + "' --ingest-map 2:3");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("total,unrecognised-emojis,,2\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("total,invalid-emoji-types,,3\n"), std::string::npos) << r.out;
  // Auditing the tool's own preprocessed wordlist is clean.
  auto own = dir_ / "own.csv";
  ASSERT_EQ(run("wordlist -o '" + own.string() + "' '" + src.string() + "'").exit_code, 0);
  auto self = run("audit --inventory '" + inv.string() + "' --wordlist '" + own.string() + "'");
  ASSERT_EQ(self.exit_code, 0) << self.err;
  EXPECT_NE(self.out.find("total,invalid-emoji-types,,0\n"), std::string::npos) << self.out;
  EXPECT_NE(self.out.find("total,missing-tokens,,0\n"), std::string::npos) << self.out;
}

TEST_F(CliTest, CatalogQueries) {
  auto stats = run("catalog stats");
  ASSERT_EQ(stats.exit_code, 0);
  EXPECT_NE(stats.out.find("distinct_with_components,3782\n"), std::string::npos);
  EXPECT_NE(stats.out.find("nfkc_sensitive,31\n"), std::string::npos);
  EXPECT_EQ(run("catalog check-labels").exit_code, 0);
  auto colliding = write("emoji.txt",
                         "1F6FC ; fully-qualified # x E13.0 roller skate\n"
                         "1F6F9 ; fully-qualified # x E11.0 roller-skate\n");
  EXPECT_EQ(run("catalog check-labels --emoji-data '" + colliding.string() + "'").exit_code, 2);
}

TEST_F(CliTest, ConfigFileAndFlagPrecedence) {
  auto conf = write("f.conf", "translit = off\n");
  auto in = write("in.txt", "🛼 𝐒\n");
  auto r = run("preprocess --config '" + conf.string() + "' '" + in.string() + "'");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(r.out, "🛼 S\n");
  auto flag = run("preprocess --config '" + conf.string() + "' --translit '" + in.string() + "'");
  EXPECT_EQ(flag.out, "{roller^skate} S\n");
  auto bad = write("bad.conf", "translit = on\nfrobnicate = 3\n");
  auto e = run("preprocess --config '" + bad.string() + "' '" + in.string() + "'");
  EXPECT_EQ(e.exit_code, 1);
  EXPECT_NE(e.err.find("line 2"), std::string::npos) << e.err;
}

}  // namespace
}  // namespace faithful
