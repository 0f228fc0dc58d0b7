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

// Fidelity audit of an external wordlist against a source inventory.
//
// An external type is emoji-bearing when it contains a scalar that only
// occurs in emoji (Extended_Pictographic, regional indicators, ZWJ, VS15/16,
// skin-tone modifiers, the keycap mark, tags) or is a known emoji label.
// Exact catalog matching would be useless here: the point is to catch what
// is *not* a catalog key, such as the fragments of a split ZWJ sequence.
//
// An inventory emoji is matched by an external type equal to the emoji
// itself or to its label.
//
//   unrecognised  inventory emoji matched by no external type
//   invalid       emoji-bearing external types matching no inventory emoji
//   missing       inventory minus external emoji counts, types and tokens

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "faithful/corpus/csv.hpp"
#include "faithful/corpus/inventory.hpp"
#include "faithful/corpus/wordlist.hpp"
#include "faithful/emoji_catalog.hpp"
#include "faithful/transliterator.hpp"
#include "faithful/unicode/ucd.hpp"

namespace faithful {

struct AuditReport {
  std::size_t emoji_type_count = 0;   // emoji-bearing external types
  std::size_t emoji_token_count = 0;  // occurrences of those types
  std::size_t source_emoji_type_count = 0;
  std::size_t source_emoji_token_count = 0;  // emoji occurrences in the source
  std::vector<ScalarString> unrecognised_emojis;
  std::vector<ScalarString> invalid_emoji_types;
  std::int64_t missing_types = 0;
  std::int64_t missing_tokens = 0;

  bool clean() const {
    return unrecognised_emojis.empty() && invalid_emoji_types.empty() && missing_types == 0 &&
           missing_tokens == 0;
  }
};

/// Scalar classes that never occur outside emoji.
inline bool is_emoji_scalar(char32_t c) {
  return is_extended_pictographic(c) || is_emoji_sequence_part(c);
}

inline bool is_emoji_bearing(ScalarView type, const Transliterator& translit) {
  if (std::any_of(type.begin(), type.end(), is_emoji_scalar)) return true;
  return translit.is_label(type);
}

inline AuditReport audit(const SourceInventory& inv, const Wordlist& external, const Transliterator& translit) {
  const EmojiCatalog& catalog = translit.catalog();
  AuditReport r;

  // Every string by which an inventory emoji may appear externally.
  std::map<ScalarString, std::vector<ScalarView>> forms;
  for (const auto& [e, _] : inv.emoji_types) {
    forms[e].push_back(e);
    if (const EmojiEntry* entry = catalog.lookup(e)) forms[translit.transliterate(*entry)].push_back(e);
  }

  std::set<ScalarView> matched;
  std::set<ScalarString> projected;  // inventory types in the external's spelling
  for (const auto& [type, freq] : external.counts()) {
    if (!is_emoji_bearing(type, translit)) continue;
    ++r.emoji_type_count;
    r.emoji_token_count += freq;
    auto it = forms.find(type);
    if (it == forms.end()) {
      r.invalid_emoji_types.push_back(type);
      continue;
    }
    for (ScalarView e : it->second) {
      matched.insert(e);
      projected.insert(type);
    }
  }
  for (const auto& [e, _] : inv.emoji_types) {
    if (!matched.contains(e)) {
      r.unrecognised_emojis.push_back(e);
      projected.insert(e);
    }
  }

  r.source_emoji_type_count = inv.emoji_types.size();
  r.source_emoji_token_count = inv.emoji_tokens();
  // Variants that share a label count once on the external side, so the
  // type delta is taken in the external's spelling.
  r.missing_types = static_cast<std::int64_t>(projected.size()) - static_cast<std::int64_t>(r.emoji_type_count);
  r.missing_tokens =
      static_cast<std::int64_t>(r.source_emoji_token_count) - static_cast<std::int64_t>(r.emoji_token_count);
  return r;
}

inline std::string audit_to_csv(const AuditReport& r) {
  std::string out = "kind,item,codepoints,value\n";
  auto row = [&](const std::string& kind, const ScalarString& item, std::string value) {
    out += csv::format_row({kind, utf8::encode(item), codepoint_labels(item), std::move(value)});
  };
  for (const auto& e : r.unrecognised_emojis) row("unrecognised", e, "");
  for (const auto& e : r.invalid_emoji_types) row("invalid", e, "");
  auto total = [&](const char* name, std::int64_t v) { out += csv::format_row({"total", name, "", std::to_string(v)}); };
  total("emoji-types", static_cast<std::int64_t>(r.emoji_type_count));
  total("emoji-tokens", static_cast<std::int64_t>(r.emoji_token_count));
  total("source-emoji-types", static_cast<std::int64_t>(r.source_emoji_type_count));
  total("source-emoji-tokens", static_cast<std::int64_t>(r.source_emoji_token_count));
  total("unrecognised-emojis", static_cast<std::int64_t>(r.unrecognised_emojis.size()));
  total("invalid-emoji-types", static_cast<std::int64_t>(r.invalid_emoji_types.size()));
  total("missing-types", r.missing_types);
  total("missing-tokens", r.missing_tokens);
  return out;
}

}  // namespace faithful
