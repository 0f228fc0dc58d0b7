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

// What the source data actually contains: emoji occurrences, homoglyph
// scalars, and how many tokens normalization produces. This is the ground
// truth an external tool's wordlist is audited against.
//
// CSV form, one row per item:
//
//   kind,item,codepoints,frequency
//   emoji,🛼,U+1F6FC,2
//   homoglyph,𝕃,U+1D543,1
//   total,tokens,,6

#pragma once

#include <charconv>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "faithful/corpus/csv.hpp"
#include "faithful/emoji_catalog.hpp"
#include "faithful/error.hpp"
#include "faithful/normalizer.hpp"
#include "faithful/tokenizer.hpp"
#include "faithful/unicode/utf8.hpp"

namespace faithful {

struct SourceInventory {
  std::map<ScalarString, std::size_t> emoji_types;   // catalog key -> occurrences
  std::map<char32_t, std::size_t> homoglyph_scalars;  // scalar -> occurrences
  std::size_t nfkc_norm_token_count = 0;
  std::size_t documents = 0;
  std::size_t tokens = 0;  // countable tokens after preprocessing
  std::size_t types = 0;   // their case-folded types

  std::size_t emoji_tokens() const {
    std::size_t n = 0;
    for (const auto& [_, f] : emoji_types) n += f;
    return n;
  }
  std::size_t homoglyph_tokens() const {
    std::size_t n = 0;
    for (const auto& [_, f] : homoglyph_scalars) n += f;
    return n;
  }

  friend bool operator==(const SourceInventory&, const SourceInventory&) = default;
};

/// Inventories raw documents. Emoji are found by segment_emojis; homoglyph
/// scalars are counted outside emoji matches (VS16 inside a sequence is
/// part of the emoji, not a homoglyph).
inline SourceInventory inventory(const std::vector<ScalarString>& raw_docs, const Pipeline& pipeline) {
  SourceInventory inv;
  const EmojiCatalog& catalog = pipeline.catalog();
  std::set<ScalarString> types;
  for (const auto& doc : raw_docs) {
    ++inv.documents;
    std::size_t pos = 0;
    for (const auto& m : segment_emojis(doc, catalog)) {
      for (; pos < m.begin; ++pos)
        if (is_homoglyph_scalar(doc[pos], pipeline.config().form)) ++inv.homoglyph_scalars[doc[pos]];
      ++inv.emoji_types[ScalarString(doc.substr(m.begin, m.end - m.begin))];
      pos = m.end;
    }
    for (; pos < doc.size(); ++pos)
      if (is_homoglyph_scalar(doc[pos], pipeline.config().form)) ++inv.homoglyph_scalars[doc[pos]];

    PreprocessedDocument pre = pipeline.run(doc);
    inv.nfkc_norm_token_count += pre.stats.n_nfkc_normalized_tokens;
    inv.tokens += pre.stats.n_tokens;
    for (const auto& t : pre.tokens)
      if (is_countable(t.kind)) types.insert(type_key(t));
  }
  inv.types = types.size();
  return inv;
}

inline SourceInventory inventory(const std::vector<ScalarString>& raw_docs, const EmojiCatalog& catalog,
                                 const PipelineConfig& config = {}) {
  return inventory(raw_docs, Pipeline(catalog, config));
}

inline std::string inventory_to_csv(const SourceInventory& inv) {
  std::string out = "kind,item,codepoints,frequency\n";
  for (const auto& [e, n] : inv.emoji_types)
    out += csv::format_row({"emoji", utf8::encode(e), codepoint_labels(e), std::to_string(n)});
  for (const auto& [c, n] : inv.homoglyph_scalars) {
    ScalarString one(1, c);
    out += csv::format_row({"homoglyph", utf8::encode(one), codepoint_labels(one), std::to_string(n)});
  }
  auto total = [&](const char* name, std::size_t v) { out += csv::format_row({"total", name, "", std::to_string(v)}); };
  total("documents", inv.documents);
  total("tokens", inv.tokens);
  total("types", inv.types);
  total("emojis", inv.emoji_tokens());
  total("homoglyphs", inv.homoglyph_tokens());
  total("nfkc-norm", inv.nfkc_norm_token_count);
  return out;
}

/// Reads inventory_to_csv output back. Derived totals (emojis, homoglyphs)
/// are checked against the item rows.
inline SourceInventory inventory_from_csv(std::string_view text) {
  SourceInventory inv;
  auto rows = csv::parse(text);
  if (rows.empty() || rows[0].fields != std::vector<std::string>{"kind", "item", "codepoints", "frequency"})
    throw ParseError(rows.empty() ? 1 : rows[0].line, "expected header 'kind,item,codepoints,frequency'");
  std::map<std::string, std::size_t> totals;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.fields.size() != 4) throw ParseError(row.line, "expected 4 columns");
    const std::string& freq = row.fields[3];
    std::size_t n = 0;
    auto [p, ec] = std::from_chars(freq.data(), freq.data() + freq.size(), n);
    if (ec != std::errc() || p != freq.data() + freq.size())
      throw ParseError(row.line, "frequency '" + freq + "' is not a non-negative integer");
    const std::string& kind = row.fields[0];
    if (!utf8::is_valid(row.fields[1])) throw ParseError(row.line, "item is not valid UTF-8");
    ScalarString item = utf8::decode(row.fields[1]);
    if (kind == "emoji") {
      if (item.empty()) throw ParseError(row.line, "empty emoji");
      inv.emoji_types[item] += n;
    } else if (kind == "homoglyph") {
      if (item.size() != 1) throw ParseError(row.line, "homoglyph item must be one scalar");
      inv.homoglyph_scalars[item[0]] += n;
    } else if (kind == "total") {
      totals[row.fields[1]] = n;
    } else {
      throw ParseError(row.line, "unknown kind '" + kind + "'");
    }
  }
  inv.documents = totals["documents"];
  inv.tokens = totals["tokens"];
  inv.types = totals["types"];
  inv.nfkc_norm_token_count = totals["nfkc-norm"];
  if (totals.contains("emojis") && totals["emojis"] != inv.emoji_tokens())
    throw ParseError(rows.back().line, "emoji total does not match the emoji rows");
  if (totals.contains("homoglyphs") && totals["homoglyphs"] != inv.homoglyph_tokens())
    throw ParseError(rows.back().line, "homoglyph total does not match the homoglyph rows");
  return inv;
}

}  // namespace faithful
