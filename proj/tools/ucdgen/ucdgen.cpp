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

// Reads the plain-text Unicode Character Database files and the emoji-test
// data file and writes the C++ tables used by include/faithful/unicode.
//
// usage: ucdgen <ucd-dir> <emoji-test.txt> <out-dir>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

constexpr const char* kUnicodeVersion = "15.1.0";

// Order defines the numeric value of faithful::GeneralCategory.
const std::vector<std::string> kCategories = {
    "Lu", "Ll", "Lt", "Lm", "Lo", "Mn", "Mc", "Me", "Nd", "Nl",
    "No", "Pc", "Pd", "Ps", "Pe", "Pi", "Pf", "Po", "Sm", "Sc",
    "Sk", "So", "Zs", "Zl", "Zp", "Cc", "Cf", "Cs", "Co", "Cn"};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

char32_t hex(const std::string& s) {
  return static_cast<char32_t>(std::stoul(trim(s), nullptr, 16));
}

std::vector<char32_t> hex_list(const std::string& s) {
  std::vector<char32_t> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(hex(tok));
  return out;
}

std::pair<char32_t, char32_t> hex_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) {
    auto cp = hex(s);
    return {cp, cp};
  }
  return {hex(s.substr(0, dots)), hex(s.substr(dots + 2))};
}

std::ifstream open(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw std::runtime_error("cannot open " + p.string());
  return in;
}

// Strips comments and blank lines; yields the data part of each line.
template <typename F>
void for_each_data_line(const fs::path& p, F&& f) {
  auto in = open(p);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    f(line);
  }
}

std::string hex_literal(char32_t cp) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "0x%04X", static_cast<unsigned>(cp));
  return buf;
}

struct Record {
  std::string name;
  int category = 29;
  int ccc = 0;
  bool compat = false;
  std::vector<char32_t> mapping;
};

struct Ucd {
  std::map<char32_t, Record> records;
  // Category of every codepoint, including those inside First/Last ranges.
  std::vector<std::uint8_t> category = std::vector<std::uint8_t>(0x110000, 29);
  std::set<char32_t> full_composition_exclusion;
};

int category_index(const std::string& code) {
  auto it = std::find(kCategories.begin(), kCategories.end(), code);
  if (it == kCategories.end()) throw std::runtime_error("unknown category " + code);
  return static_cast<int>(it - kCategories.begin());
}

Ucd read_unicode_data(const fs::path& dir) {
  Ucd ucd;
  auto in = open(dir / "UnicodeData.txt");
  std::string line;
  char32_t range_first = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto f = split(line, ';');
    if (f.size() < 15) throw std::runtime_error("short UnicodeData line: " + line);
    char32_t cp = hex(f[0]);
    int cat = category_index(f[2]);
    const std::string& name = f[1];
    if (name.ends_with(", First>")) {
      range_first = cp;
      continue;
    }
    if (name.ends_with(", Last>")) {
      for (char32_t c = range_first; c <= cp; ++c) ucd.category[c] = static_cast<std::uint8_t>(cat);
      continue;
    }
    Record r;
    r.name = name == "<control>" ? std::string{} : name;
    r.category = cat;
    r.ccc = std::stoi(f[3]);
    std::string decomp = trim(f[5]);
    if (!decomp.empty()) {
      if (decomp[0] == '<') {
        r.compat = true;
        decomp = decomp.substr(decomp.find('>') + 1);
      }
      r.mapping = hex_list(decomp);
    }
    ucd.category[cp] = static_cast<std::uint8_t>(cat);
    ucd.records.emplace(cp, std::move(r));
  }
  for_each_data_line(dir / "DerivedNormalizationProps.txt", [&](const std::string& l) {
    auto f = split(l, ';');
    if (trim(f[1]) != "Full_Composition_Exclusion") return;
    auto [a, b] = hex_range(f[0]);
    for (char32_t c = a; c <= b; ++c) ucd.full_composition_exclusion.insert(c);
  });
  return ucd;
}

void full_decomposition(const Ucd& ucd, char32_t cp, bool compat, std::vector<char32_t>& out) {
  auto it = ucd.records.find(cp);
  if (it == ucd.records.end() || it->second.mapping.empty() ||
      (it->second.compat && !compat)) {
    out.push_back(cp);
    return;
  }
  for (char32_t c : it->second.mapping) full_decomposition(ucd, c, compat, out);
}

struct Ranges {
  std::vector<std::tuple<char32_t, char32_t, std::string>> items;
};

Ranges read_ranges(const fs::path& p) {
  Ranges r;
  for_each_data_line(p, [&](const std::string& l) {
    auto f = split(l, ';');
    auto [a, b] = hex_range(f[0]);
    r.items.emplace_back(a, b, trim(f[1]));
  });
  std::sort(r.items.begin(), r.items.end());
  return r;
}

void write_unicode_tables(const Ucd& ucd, const fs::path& dir, const fs::path& out_path) {
  std::ofstream out(out_path);
  out << "// Generated by tools/ucdgen from the Unicode " << kUnicodeVersion
      << " Character Database. Do not edit.\n"
      << "#pragma once\n\n#include <cstdint>\n#include <string_view>\n\n"
      << "namespace faithful::detail::ucd {\n\n"
      << "inline constexpr std::string_view kUnicodeVersion = \"" << kUnicodeVersion << "\";\n\n";

  // General category as runs.
  out << "struct CategoryRun { char32_t first; char32_t last; std::uint8_t category; };\n"
      << "inline constexpr CategoryRun kCategoryRuns[] = {\n";
  for (char32_t c = 0; c < 0x110000;) {
    char32_t e = c;
    while (e + 1 < 0x110000 && ucd.category[e + 1] == ucd.category[c]) ++e;
    if (ucd.category[c] != 29)
      out << "  {" << hex_literal(c) << ", " << hex_literal(e) << ", " << int(ucd.category[c]) << "},\n";
    c = e + 1;
  }
  out << "};\n\n";

  // Scripts.
  auto scripts = read_ranges(dir / "Scripts.txt");
  std::vector<std::string> script_names = {"Unknown"};
  for (auto& [a, b, n] : scripts.items)
    if (std::find(script_names.begin(), script_names.end(), n) == script_names.end())
      script_names.push_back(n);
  std::sort(script_names.begin() + 1, script_names.end());
  out << "inline constexpr std::string_view kScriptNames[] = {\n";
  for (auto& n : script_names) out << "  \"" << n << "\",\n";
  out << "};\n\n";
  out << "struct ScriptRange { char32_t first; char32_t last; std::uint16_t script; };\n"
      << "inline constexpr ScriptRange kScriptRanges[] = {\n";
  {
    // Merge adjacent ranges of the same script.
    std::vector<std::tuple<char32_t, char32_t, std::size_t>> merged;
    for (auto& [a, b, n] : scripts.items) {
      auto idx = static_cast<std::size_t>(
          std::find(script_names.begin(), script_names.end(), n) - script_names.begin());
      if (!merged.empty() && std::get<1>(merged.back()) + 1 == a && std::get<2>(merged.back()) == idx)
        std::get<1>(merged.back()) = b;
      else
        merged.emplace_back(a, b, idx);
    }
    for (auto& [a, b, i] : merged)
      out << "  {" << hex_literal(a) << ", " << hex_literal(b) << ", " << i << "},\n";
  }
  out << "};\n\n";

  // Blocks.
  auto blocks = read_ranges(dir / "Blocks.txt");
  out << "struct BlockRange { char32_t first; char32_t last; std::string_view name; };\n"
      << "inline constexpr BlockRange kBlockRanges[] = {\n";
  for (auto& [a, b, n] : blocks.items)
    out << "  {" << hex_literal(a) << ", " << hex_literal(b) << ", \"" << n << "\"},\n";
  out << "};\n\n";

  // Names.
  out << "struct NameEntry { char32_t cp; std::string_view name; };\n"
      << "inline constexpr NameEntry kNames[] = {\n";
  for (auto& [cp, r] : ucd.records)
    if (!r.name.empty()) out << "  {" << hex_literal(cp) << ", \"" << r.name << "\"},\n";
  out << "};\n\n";

  // Combining classes.
  out << "struct CombiningClass { char32_t cp; std::uint8_t ccc; };\n"
      << "inline constexpr CombiningClass kCombiningClasses[] = {\n";
  for (auto& [cp, r] : ucd.records)
    if (r.ccc != 0) out << "  {" << hex_literal(cp) << ", " << r.ccc << "},\n";
  out << "};\n\n";

  // Fully expanded decompositions, canonical and compatibility.
  auto emit_decompositions = [&](bool compat, const char* table, const char* pool) {
    std::vector<char32_t> data;
    std::vector<std::tuple<char32_t, std::size_t, std::size_t>> index;
    for (auto& [cp, r] : ucd.records) {
      if (r.mapping.empty()) continue;
      if (r.compat && !compat) continue;
      std::vector<char32_t> full;
      full_decomposition(ucd, cp, compat, full);
      if (full.size() == 1 && full[0] == cp) continue;
      index.emplace_back(cp, data.size(), full.size());
      data.insert(data.end(), full.begin(), full.end());
    }
    out << "inline constexpr char32_t " << pool << "[] = {";
    for (std::size_t i = 0; i < data.size(); ++i) {
      if (i % 12 == 0) out << "\n ";
      out << " " << hex_literal(data[i]) << ",";
    }
    out << "\n};\n";
    out << "inline constexpr Decomposition " << table << "[] = {\n";
    for (auto& [cp, off, len] : index)
      out << "  {" << hex_literal(cp) << ", " << off << ", " << len << "},\n";
    out << "};\n\n";
  };
  out << "struct Decomposition { char32_t cp; std::uint32_t offset; std::uint8_t length; };\n";
  emit_decompositions(false, "kCanonicalDecompositions", "kCanonicalPool");
  emit_decompositions(true, "kCompatibilityDecompositions", "kCompatibilityPool");

  // Primary composites: canonical pairs not excluded from composition.
  std::vector<std::tuple<char32_t, char32_t, char32_t>> pairs;
  for (auto& [cp, r] : ucd.records) {
    if (r.compat || r.mapping.size() != 2) continue;
    if (ucd.full_composition_exclusion.contains(cp)) continue;
    pairs.emplace_back(r.mapping[0], r.mapping[1], cp);
  }
  std::sort(pairs.begin(), pairs.end());
  out << "struct CompositionPair { char32_t first; char32_t second; char32_t composite; };\n"
      << "inline constexpr CompositionPair kCompositionPairs[] = {\n";
  for (auto& [a, b, c] : pairs)
    out << "  {" << hex_literal(a) << ", " << hex_literal(b) << ", " << hex_literal(c) << "},\n";
  out << "};\n\n";

  // Full case folding (statuses C and F).
  {
    std::vector<std::pair<char32_t, std::vector<char32_t>>> folds;
    for_each_data_line(dir / "CaseFolding.txt", [&](const std::string& l) {
      auto f = split(l, ';');
      auto status = trim(f[1]);
      if (status != "C" && status != "F") return;
      folds.emplace_back(hex(f[0]), hex_list(f[2]));
    });
    std::sort(folds.begin(), folds.end());
    std::vector<char32_t> data;
    out << "struct CaseFold { char32_t cp; std::uint16_t offset; std::uint8_t length; };\n"
        << "inline constexpr CaseFold kCaseFolds[] = {\n";
    for (auto& [cp, m] : folds) {
      out << "  {" << hex_literal(cp) << ", " << data.size() << ", " << m.size() << "},\n";
      data.insert(data.end(), m.begin(), m.end());
    }
    out << "};\ninline constexpr char32_t kCaseFoldPool[] = {";
    for (std::size_t i = 0; i < data.size(); ++i) {
      if (i % 12 == 0) out << "\n ";
      out << " " << hex_literal(data[i]) << ",";
    }
    out << "\n};\n\n";
  }

  // Emoji properties as bit flags per range.
  {
    const std::vector<std::string> props = {"Emoji", "Emoji_Presentation", "Emoji_Modifier",
                                            "Emoji_Modifier_Base", "Emoji_Component",
                                            "Extended_Pictographic"};
    std::map<char32_t, unsigned> flags;
    for_each_data_line(dir / "emoji-data.txt", [&](const std::string& l) {
      auto f = split(l, ';');
      auto prop = trim(f[1]);
      auto it = std::find(props.begin(), props.end(), prop);
      if (it == props.end()) throw std::runtime_error("unknown emoji property " + prop);
      auto [a, b] = hex_range(f[0]);
      for (char32_t c = a; c <= b; ++c) flags[c] |= 1u << (it - props.begin());
    });
    out << "struct EmojiFlagRange { char32_t first; char32_t last; std::uint8_t flags; };\n"
        << "inline constexpr EmojiFlagRange kEmojiFlagRanges[] = {\n";
    for (auto it = flags.begin(); it != flags.end();) {
      auto first = it->first;
      auto value = it->second;
      auto last = first;
      ++it;
      while (it != flags.end() && it->first == last + 1 && it->second == value) {
        last = it->first;
        ++it;
      }
      out << "  {" << hex_literal(first) << ", " << hex_literal(last) << ", " << value << "},\n";
    }
    out << "};\n\n";
  }

  out << "}  // namespace faithful::detail::ucd\n";
}

void write_emoji_data(const fs::path& emoji_test, const fs::path& out_path) {
  auto in = open(emoji_test);
  // Free-standing comments are dropped; group headers and data lines are kept.
  std::string text;
  std::string line;
  while (std::getline(in, line)) {
    if (line.starts_with("#") && !line.starts_with("# group:") && !line.starts_with("# subgroup:") &&
        !line.starts_with("# Version:"))
      continue;
    if (line.empty()) continue;
    text += line;
    text += '\n';
  }
  if (text.find(")emoji\"") != std::string::npos) throw std::runtime_error("delimiter clash");
  std::ofstream out(out_path);
  out << "// Generated by tools/ucdgen from " << emoji_test.filename().string()
      << ". Do not edit.\n#pragma once\n\n#include <string_view>\n\n"
      << "namespace faithful::detail {\n\n"
      << "inline constexpr char kBundledEmojiTestData[] =\n";
  // Split into pieces so no single literal exceeds common compiler limits.
  constexpr std::size_t kPiece = 8000;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = std::min(text.size(), pos + kPiece);
    while (end < text.size() && text[end - 1] != '\n') ++end;
    out << "    R\"emoji(" << text.substr(pos, end - pos) << ")emoji\"\n";
    pos = end;
  }
  out << "    ;\n\n"
      << "inline std::string_view bundled_emoji_test() {\n"
      << "  return {kBundledEmojiTestData, sizeof(kBundledEmojiTestData) - 1};\n}\n\n"
      << "}  // namespace faithful::detail\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 4) {
    std::cerr << "usage: ucdgen <ucd-dir> <emoji-test.txt> <out-dir>\n";
    return 1;
  }
  try {
    fs::path ucd_dir = argv[1];
    fs::path out_dir = argv[3];
    fs::create_directories(out_dir);
    auto ucd = read_unicode_data(ucd_dir);
    write_unicode_tables(ucd, ucd_dir, out_dir / "ucd_tables.hpp");
    write_emoji_data(argv[2], out_dir / "emoji_test_data.hpp");
  } catch (const std::exception& e) {
    std::cerr << "ucdgen: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
