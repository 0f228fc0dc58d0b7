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

// Type/frequency lists over preprocessed documents, and their CSV form
// ("type,frequency" header, one row per type).

#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "faithful/corpus/csv.hpp"
#include "faithful/error.hpp"
#include "faithful/normalizer.hpp"
#include "faithful/tokenizer.hpp"
#include "faithful/unicode/utf8.hpp"

namespace faithful {

struct WordlistOptions {
  std::set<TokenKind> counted_kinds{TokenKind::Word, TokenKind::Emoji, TokenKind::TransliteratedEmoji,
                                    TokenKind::Other};
  bool case_folded = true;
};

class Wordlist {
 public:
  explicit Wordlist(WordlistOptions opts = {}) : opts_(std::move(opts)) {}

  const WordlistOptions& options() const { return opts_; }

  void add(const Token& t) {
    if (!opts_.counted_kinds.contains(t.kind)) return;
    ++counts_[type_key(t, opts_.case_folded)];
    ++total_;
  }

  void add(const PreprocessedDocument& doc) {
    for (const auto& t : doc.tokens) add(t);
  }

  /// Adds a raw type count, e.g. from an external tool's CSV.
  void add(ScalarString type, std::size_t frequency) {
    if (frequency == 0) return;
    counts_[std::move(type)] += frequency;
    total_ += frequency;
  }

  /// Associative and commutative, so per-document lists can be reduced in
  /// any order.
  void merge(const Wordlist& other) {
    for (const auto& [type, n] : other.counts_) counts_[type] += n;
    total_ += other.total_;
  }

  std::size_t frequency(ScalarView type) const {
    auto it = counts_.find(ScalarString(type));
    return it == counts_.end() ? 0 : it->second;
  }
  std::size_t frequency(std::string_view utf8_type) const { return frequency(utf8::decode(utf8_type)); }

  std::size_t type_count() const { return counts_.size(); }
  std::size_t token_count() const { return total_; }
  bool empty() const { return counts_.empty(); }

  /// Codepoint-ordered map of type to frequency.
  const std::map<ScalarString, std::size_t>& counts() const { return counts_; }

  /// Descending frequency, ties in codepoint order.
  std::vector<std::pair<ScalarString, std::size_t>> sorted() const {
    std::vector<std::pair<ScalarString, std::size_t>> out(counts_.begin(), counts_.end());
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
    return out;
  }

  std::string to_csv() const {
    std::string out = "type,frequency\n";
    for (const auto& [type, n] : sorted()) out += csv::format_row({utf8::encode(type), std::to_string(n)});
    return out;
  }

 private:
  WordlistOptions opts_;
  std::map<ScalarString, std::size_t> counts_;
  std::size_t total_ = 0;
};

inline Wordlist wordlist(const std::vector<PreprocessedDocument>& docs, const WordlistOptions& opts = {}) {
  Wordlist wl(opts);
  for (const auto& d : docs) wl.add(d);
  return wl;
}

/// Which columns of an external CSV hold the type and the frequency
/// (0-based), and whether the first row is a header.
struct CsvColumnMap {
  std::size_t type_column = 0;
  std::size_t frequency_column = 1;
  bool has_header = true;

  /// Parses "type:frequency" with 1-based column numbers, e.g. "2:3".
  static CsvColumnMap parse(std::string_view spec) {
    auto colon = spec.find(':');
    auto number = [&](std::string_view s) {
      std::size_t v = 0;
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || p != s.data() + s.size() || v == 0)
        throw InvalidArgument("bad column map '" + std::string(spec) + "' (expected e.g. 1:2)");
      return v - 1;
    };
    if (colon == std::string_view::npos) throw InvalidArgument("bad column map '" + std::string(spec) + "'");
    return CsvColumnMap{number(spec.substr(0, colon)), number(spec.substr(colon + 1)), true};
  }
};

/// Reads a wordlist CSV. Throws ParseError naming the row on malformed
/// rows, invalid UTF-8 or non-numeric frequencies. Repeated types add up.
inline Wordlist read_wordlist_csv(std::string_view text, const CsvColumnMap& map = {}) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
  Wordlist wl(WordlistOptions{{}, false});
  auto rows = csv::parse(text);
  std::size_t need = std::max(map.type_column, map.frequency_column) + 1;
  for (std::size_t r = map.has_header ? 1 : 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.fields.size() < need)
      throw ParseError(row.line, "expected at least " + std::to_string(need) + " columns, got " +
                                     std::to_string(row.fields.size()));
    const std::string& type = row.fields[map.type_column];
    const std::string& freq = row.fields[map.frequency_column];
    if (type.empty()) throw ParseError(row.line, "empty type");
    if (!utf8::is_valid(type)) throw ParseError(row.line, "type is not valid UTF-8");
    std::size_t n = 0;
    auto [p, ec] = std::from_chars(freq.data(), freq.data() + freq.size(), n);
    if (ec != std::errc() || p != freq.data() + freq.size() || n == 0)
      throw ParseError(row.line, "frequency '" + freq + "' is not a positive integer");
    wl.add(utf8::decode(type), n);
  }
  return wl;
}

}  // namespace faithful
