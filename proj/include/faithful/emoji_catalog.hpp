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

// Inventory of valid emoji codepoint sequences, loaded from data in the
// Unicode emoji-test line format:
//
//   1F6FC ; fully-qualified # 🛼 E13.0 roller skate
//
// Every status (fully-qualified, minimally-qualified, unqualified, component)
// becomes an entry. Variants of one emoji share a name; the fully-qualified or
// component row is the "distinct emoji" that represents the group.

#pragma once

#include <algorithm>
#include <functional>
#include <cstddef>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "faithful/detail/emoji_test_data.hpp"
#include "faithful/error.hpp"
#include "faithful/unicode/normalization.hpp"
#include "faithful/unicode/ucd.hpp"
#include "faithful/unicode/utf8.hpp"

namespace faithful {

enum class Qualification { kFullyQualified, kMinimallyQualified, kUnqualified, kComponent };

inline constexpr std::string_view to_string(Qualification q) {
  switch (q) {
    case Qualification::kFullyQualified: return "fully-qualified";
    case Qualification::kMinimallyQualified: return "minimally-qualified";
    case Qualification::kUnqualified: return "unqualified";
    case Qualification::kComponent: return "component";
  }
  return "?";
}

inline std::optional<Qualification> parse_qualification(std::string_view s) {
  if (s == "fully-qualified") return Qualification::kFullyQualified;
  if (s == "minimally-qualified") return Qualification::kMinimallyQualified;
  if (s == "unqualified") return Qualification::kUnqualified;
  if (s == "component") return Qualification::kComponent;
  return std::nullopt;
}

struct EmojiEntry {
  ScalarString codepoints;
  std::string cldr_name;  // lowercased, otherwise exactly as in the data file
  Qualification qualification = Qualification::kFullyQualified;
  std::string version;  // e.g. "E13.0"
  std::string group;
  std::string subgroup;

  /// Fully-qualified and component rows; the others are presentation variants.
  bool is_distinct() const {
    return qualification == Qualification::kFullyQualified ||
           qualification == Qualification::kComponent;
  }

  std::string utf8() const { return utf8::encode(codepoints); }

  friend bool operator==(const EmojiEntry&, const EmojiEntry&) = default;
};

/// Counts reported by EmojiCatalog::stats().
struct CatalogStats {
  std::size_t entries = 0;
  std::size_t fully_qualified = 0;
  std::size_t minimally_qualified = 0;
  std::size_t unqualified = 0;
  std::size_t component = 0;
  std::size_t max_len = 0;
  std::string data_version;

  /// Fully-qualified plus component rows: one per distinct emoji.
  std::size_t distinct() const { return fully_qualified + component; }
};

class EmojiCatalog {
 public:
  EmojiCatalog() = default;

  /// Parses emoji-test formatted text. Throws ParseError (with the 1-based
  /// line number) on malformed data lines and on duplicate sequences.
  static EmojiCatalog parse(std::string_view text);

  /// The emoji-test 15.1 data compiled into the library.
  static const EmojiCatalog& bundled();

  static EmojiCatalog load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open emoji data file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
  }

  const EmojiEntry* lookup(ScalarView seq) const {
    auto it = index_.find(seq);
    return it == index_.end() ? nullptr : &entries_[it->second];
  }

  bool contains(ScalarView seq) const { return index_.find(seq) != index_.end(); }

  /// Entries in data-file order.
  const std::vector<EmojiEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  /// Longest key length in scalars (0 for an empty catalog).
  std::size_t max_len() const { return max_len_; }

  /// Whether some key starts with `cp`.
  bool is_first_scalar(char32_t cp) const { return first_scalars_.contains(cp); }

  /// The distinct emoji an entry is a variant of (itself when distinct).
  /// Variants are matched by name within the data file.
  const EmojiEntry& representative(const EmojiEntry& e) const {
    if (entries_.empty() || &e < entries_.data() || &e >= entries_.data() + entries_.size()) return e;
    auto it = representative_.find(static_cast<std::size_t>(&e - entries_.data()));
    return it == representative_.end() ? e : entries_[it->second];
  }

  /// Distinct emojis (fully-qualified and component rows), data-file order.
  std::vector<const EmojiEntry*> distinct_entries() const {
    std::vector<const EmojiEntry*> out;
    for (const auto& e : entries_)
      if (e.is_distinct()) out.push_back(&e);
    return out;
  }

  CatalogStats stats() const {
    CatalogStats s;
    s.entries = entries_.size();
    s.max_len = max_len_;
    s.data_version = data_version_;
    for (const auto& e : entries_) {
      switch (e.qualification) {
        case Qualification::kFullyQualified: ++s.fully_qualified; break;
        case Qualification::kMinimallyQualified: ++s.minimally_qualified; break;
        case Qualification::kUnqualified: ++s.unqualified; break;
        case Qualification::kComponent: ++s.component; break;
      }
    }
    return s;
  }

  /// Writes the entries back in emoji-test line format (no comments).
  std::string serialize() const {
    std::string out;
    for (const auto& e : entries_) {
      std::string cps;
      for (char32_t c : e.codepoints) {
        if (!cps.empty()) cps += ' ';
        cps += detail::hex4(c);
      }
      out += cps + " ; " + std::string(to_string(e.qualification)) + " # " + e.utf8() + " " +
             e.version + " " + e.cldr_name + "\n";
    }
    return out;
  }

 private:
  struct ScalarHash {
    using is_transparent = void;
    std::size_t operator()(ScalarView s) const noexcept { return std::hash<ScalarView>{}(s); }
  };

  void add(EmojiEntry e, std::size_t line_no) {
    if (index_.contains(e.codepoints))
      throw ParseError(line_no, "duplicate emoji sequence " + codepoint_labels(e.codepoints));
    max_len_ = std::max(max_len_, e.codepoints.size());
    first_scalars_.insert(e.codepoints.front());
    index_.emplace(e.codepoints, entries_.size());
    entries_.push_back(std::move(e));
  }

  void link_variants() {
    std::unordered_map<std::string, std::size_t> by_name;
    for (std::size_t i = 0; i < entries_.size(); ++i)
      if (entries_[i].is_distinct()) by_name.emplace(entries_[i].cldr_name, i);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (entries_[i].is_distinct()) continue;
      auto it = by_name.find(entries_[i].cldr_name);
      if (it != by_name.end()) representative_.emplace(i, it->second);
    }
  }

  std::vector<EmojiEntry> entries_;
  std::unordered_map<ScalarString, std::size_t, ScalarHash, std::equal_to<>> index_;
  std::unordered_set<char32_t> first_scalars_;
  std::unordered_map<std::size_t, std::size_t> representative_;
  std::size_t max_len_ = 0;
  std::string data_version_;
};

namespace detail {

inline std::string_view trim_view(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  return out;
}

// Lowercases a UTF-8 name scalar by scalar (simple case folding of letters).
inline std::string lower_name(std::string_view name) {
  ScalarString folded;
  for (char32_t c : utf8::decode(name)) {
    if (c < 0x80) {
      folded += (c >= U'A' && c <= U'Z') ? c - U'A' + U'a' : c;
    } else if (general_category(c) == GeneralCategory::Lu) {
      // Single-scalar folds only; names never contain multi-scalar folds.
      ScalarString f;
      append_case_folded(f, c);
      folded += f.size() == 1 ? f : ScalarString(1, c);
    } else {
      folded += c;
    }
  }
  return utf8::encode(folded);
}

}  // namespace detail

inline EmojiCatalog EmojiCatalog::parse(std::string_view text) {
  EmojiCatalog cat;
  std::string group, subgroup;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    line = detail::trim_view(line);
    if (line.empty()) continue;
    if (line.front() == '#') {
      auto body = detail::trim_view(line.substr(1));
      if (body.starts_with("subgroup:")) {
        subgroup = std::string(detail::trim_view(body.substr(9)));
      } else if (body.starts_with("group:")) {
        group = std::string(detail::trim_view(body.substr(6)));
        subgroup.clear();
      } else if (body.starts_with("Version:")) {
        cat.data_version_ = std::string(detail::trim_view(body.substr(8)));
      }
      continue;
    }
    auto semi = line.find(';');
    auto hash = line.find('#');
    if (semi == std::string_view::npos || hash == std::string_view::npos || hash < semi)
      throw ParseError(line_no, "expected 'codepoints ; status # glyph version name'");

    EmojiEntry e;
    std::istringstream cps{std::string(line.substr(0, semi))};
    std::string tok;
    while (cps >> tok) {
      std::uint32_t v = 0;
      try {
        std::size_t used = 0;
        v = static_cast<std::uint32_t>(std::stoul(tok, &used, 16));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError(line_no, "bad codepoint '" + tok + "'");
      }
      if (!is_scalar_value(v)) throw ParseError(line_no, "not a scalar value '" + tok + "'");
      if (is_whitespace(v)) throw ParseError(line_no, "whitespace scalar in emoji sequence");
      e.codepoints += static_cast<char32_t>(v);
    }
    if (e.codepoints.empty()) throw ParseError(line_no, "empty codepoint list");

    auto status = detail::trim_view(line.substr(semi + 1, hash - semi - 1));
    auto q = parse_qualification(status);
    if (!q) throw ParseError(line_no, "unknown status '" + std::string(status) + "'");
    e.qualification = *q;

    // Comment: "<glyph> E<version> <name>".
    auto comment = detail::trim_view(line.substr(hash + 1));
    auto sp1 = comment.find(' ');
    if (sp1 == std::string_view::npos) throw ParseError(line_no, "missing emoji version and name");
    auto rest = detail::trim_view(comment.substr(sp1 + 1));
    auto sp2 = rest.find(' ');
    if (sp2 == std::string_view::npos || rest.empty() || rest.front() != 'E')
      throw ParseError(line_no, "missing emoji version and name");
    e.version = std::string(rest.substr(0, sp2));
    auto name = detail::trim_view(rest.substr(sp2 + 1));
    if (name.empty()) throw ParseError(line_no, "empty name");
    if (!utf8::is_valid(name)) throw ParseError(line_no, "name is not valid UTF-8");
    e.cldr_name = detail::lower_name(name);
    e.group = group;
    e.subgroup = subgroup;
    cat.add(std::move(e), line_no);
  }
  cat.link_variants();
  return cat;
}

inline const EmojiCatalog& EmojiCatalog::bundled() {
  static const EmojiCatalog catalog = parse(detail::bundled_emoji_test());
  return catalog;
}

/// Entries whose codepoint sequence is changed by NFKC.
inline std::vector<const EmojiEntry*> nfkc_sensitive_entries(const EmojiCatalog& catalog) {
  std::vector<const EmojiEntry*> out;
  for (const auto& e : catalog.entries())
    if (!is_normalized(e.codepoints, NormalizationForm::NFKC)) out.push_back(&e);
  return out;
}

}  // namespace faithful
