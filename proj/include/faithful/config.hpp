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

// Line-oriented "key = value" configuration. Blank lines and lines starting
// with '#' are ignored; later keys override earlier ones.
//
//   translit = on
//   nfkc = on
//   form = NFKC
//   clitic_split = on
//   attach_marks = on
//   case_fold = on
//   lossy = off
//   delimiters = {}^
//   word_chars = -_
//   emoji_data = /path/to/emoji-test.txt
//   jobs = 4

#pragma once

#include <charconv>
#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "faithful/error.hpp"
#include "faithful/normalizer.hpp"
#include "faithful/transliterator.hpp"
#include "faithful/unicode/utf8.hpp"

namespace faithful {

/// Everything a config file can set. Unset keys keep their defaults.
struct Settings {
  PipelineConfig pipeline;
  bool case_fold = true;
  bool lossy = false;
  std::optional<std::string> emoji_data;
  std::size_t jobs = 1;
};

inline bool parse_switch(std::string_view key, std::string_view v) {
  if (v == "on" || v == "true" || v == "yes" || v == "1") return true;
  if (v == "off" || v == "false" || v == "no" || v == "0") return false;
  throw InvalidArgument("'" + std::string(key) + "' expects on/off, got '" + std::string(v) + "'");
}

/// Applies one key. Throws InvalidArgument on unknown keys or bad values.
inline void apply_setting(Settings& s, std::string_view key, std::string_view value) {
  if (key == "translit") {
    s.pipeline.translit = parse_switch(key, value);
  } else if (key == "nfkc") {
    s.pipeline.nfkc = parse_switch(key, value);
  } else if (key == "form") {
    s.pipeline.form = parse_normalization_form(value);
  } else if (key == "clitic_split") {
    s.pipeline.td.clitic_split = parse_switch(key, value);
  } else if (key == "attach_marks") {
    s.pipeline.td.attach_marks = parse_switch(key, value);
  } else if (key == "case_fold") {
    s.case_fold = parse_switch(key, value);
  } else if (key == "lossy") {
    s.lossy = parse_switch(key, value);
  } else if (key == "check_delimiters") {
    s.pipeline.check_delimiters = parse_switch(key, value);
  } else if (key == "delimiters") {
    auto& td = s.pipeline.td;
    const auto& old = s.pipeline.delimiters;
    for (char32_t c : {old.open, old.close, old.separator}) td.user_appended.erase(c);
    s.pipeline.delimiters = LabelDelimiters::parse(value);
  } else if (key == "word_chars") {
    if (!utf8::is_valid(value)) throw InvalidArgument("word_chars is not valid UTF-8");
    for (char32_t c : utf8::decode(value)) s.pipeline.td.user_appended.insert(c);
    s.pipeline.td.validate();
  } else if (key == "emoji_data") {
    s.emoji_data = std::string(value);
  } else if (key == "jobs") {
    std::size_t n = 0;
    auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
    if (ec != std::errc() || p != value.data() + value.size() || n == 0)
      throw InvalidArgument("jobs expects a positive integer, got '" + std::string(value) + "'");
    s.jobs = n;
  } else {
    throw InvalidArgument("unknown setting '" + std::string(key) + "'");
  }
}

/// Parses config text into `s`. Errors name the offending line.
inline void parse_config(std::string_view text, Settings& s) {
  std::size_t line_no = 0, pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = detail::trim_view(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
    auto key = detail::trim_view(line.substr(0, eq));
    auto value = detail::trim_view(line.substr(eq + 1));
    if (key.empty()) throw ParseError(line_no, "empty key");
    try {
      apply_setting(s, key, value);
    } catch (const InvalidArgument& e) {
      throw ParseError(line_no, e.what());
    }
  }
}

inline void load_config_file(const std::string& path, Settings& s) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  parse_config(ss.str(), s);
}

}  // namespace faithful
