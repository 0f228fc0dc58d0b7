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

// Emoji <-> label mapping. An emoji is replaced by its CLDR short name with
// every run of non-alphanumerics collapsed to one separator and the result
// wrapped in braces: "roller skate" -> {roller^skate}.
//
// Labels are pure ASCII, so they survive NFKC untouched; this is why the
// pipeline transliterates before it normalizes.

#pragma once

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "faithful/emoji_catalog.hpp"
#include "faithful/error.hpp"
#include "faithful/tokenizer.hpp"
#include "faithful/unicode/normalization.hpp"
#include "faithful/unicode/ucd.hpp"
#include "faithful/unicode/utf8.hpp"

namespace faithful {

/// The three label delimiters. Each must be a non-alphanumeric,
/// non-whitespace scalar, and all three must differ.
struct LabelDelimiters {
  char32_t open = U'{';
  char32_t close = U'}';
  char32_t separator = U'^';

  void validate() const {
    for (char32_t c : {open, close, separator}) {
      if (!is_scalar_value(c) || is_whitespace(c) || (c < 0x80 && std::isalnum(static_cast<int>(c))))
        throw InvalidArgument("label delimiter " + Codepoint(c).label() +
                              " must be a non-alphanumeric, non-whitespace scalar");
    }
    if (open == close || open == separator || close == separator)
      throw InvalidArgument("label delimiters must be three distinct scalars");
  }

  bool contains(char32_t c) const { return c == open || c == close || c == separator; }

  /// Parses "{}^"-style strings: exactly three scalars, open/close/separator.
  static LabelDelimiters parse(std::string_view utf8_text) {
    ScalarString s = utf8::decode(utf8_text);
    if (s.size() != 3) throw InvalidArgument("expected three delimiter characters (open, close, separator)");
    LabelDelimiters d{s[0], s[1], s[2]};
    d.validate();
    return d;
  }

  friend bool operator==(const LabelDelimiters&, const LabelDelimiters&) = default;
};

namespace detail {

inline constexpr bool is_ascii_alnum(char32_t c) {
  return (c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z') || (c >= U'0' && c <= U'9');
}

// A name's final ": "-separated segment that has no alphanumerics at all
// ("keycap: #", "keycap: *") would vanish under the caret rule and collide.
// Such a segment is spelled out with the character names of its scalars.
inline ScalarString spell_symbol_segment(ScalarView name) {
  static constexpr ScalarView kColon = U": ";
  std::size_t cut = name.rfind(kColon);
  if (cut == ScalarView::npos) return ScalarString(name);
  ScalarView tail = name.substr(cut + kColon.size());
  if (tail.empty()) return ScalarString(name);
  for (char32_t c : tail)
    if (is_ascii_alnum(c) || is_letter(general_category(c)) || is_number(general_category(c)))
      return ScalarString(name);
  ScalarString out(name.substr(0, cut + kColon.size()));
  for (char32_t c : tail) {
    if (is_whitespace(c)) continue;
    out += U' ';
    std::string n = character_name(c);
    out += utf8::decode(detail::ascii_lower(n));
  }
  return out;
}

}  // namespace detail

/// Label body for a CLDR name, without delimiters: accents are reduced to
/// their NFKD base letters, then every non-alphanumeric run becomes one
/// separator; leading and trailing runs are dropped.
inline ScalarString label_body(std::string_view cldr_name, char32_t separator = U'^') {
  ScalarString name = detail::spell_symbol_segment(utf8::decode(cldr_name));
  ScalarString decomposed = normalize(name, NormalizationForm::NFKD);
  ScalarString body;
  bool pending = false;
  for (char32_t c : decomposed) {
    if (is_mark(general_category(c))) continue;  // accents stripped after NFKD
    if (detail::is_ascii_alnum(c)) {
      if (pending && !body.empty()) body += separator;
      pending = false;
      body += (c >= U'A' && c <= U'Z') ? c - U'A' + U'a' : c;
    } else {
      pending = true;
    }
  }
  return body;
}

/// Whether `text` is open + body + close with a body of ASCII alphanumerics
/// and single separators, neither leading nor trailing.
inline bool is_well_formed_label(ScalarView text, const LabelDelimiters& d = {}) {
  if (text.size() < 3 || text.front() != d.open || text.back() != d.close) return false;
  ScalarView body = text.substr(1, text.size() - 2);
  if (body.front() == d.separator || body.back() == d.separator) return false;
  for (std::size_t i = 0; i < body.size(); ++i) {
    char32_t c = body[i];
    if (c == d.separator) {
      if (body[i - 1] == d.separator) return false;
    } else if (!detail::is_ascii_alnum(c)) {
      return false;
    }
  }
  return true;
}

/// Two distinct emojis whose names reduce to the same label.
struct LabelCollision {
  ScalarString label;
  const EmojiEntry* first = nullptr;
  const EmojiEntry* second = nullptr;
};

/// Catalog-bound label mapping with a reverse index. Construction throws
/// LabelError on the first collision unless `allow_collisions` is set, in
/// which case collisions() lists them and the colliding labels are ambiguous.
class Transliterator {
 public:
  explicit Transliterator(const EmojiCatalog& catalog, LabelDelimiters delimiters = {},
                          bool allow_collisions = false)
      : catalog_(&catalog), delims_(delimiters) {
    delims_.validate();
    for (const auto& e : catalog.entries()) {
      const EmojiEntry& rep = catalog.representative(e);
      ScalarString label = transliterate(e);
      auto [it, inserted] = reverse_.emplace(label, &rep);
      if (inserted || it->second == &rep) continue;
      collisions_.push_back(LabelCollision{label, it->second, &rep});
      if (!allow_collisions) throw LabelError(describe(collisions_.back()));
    }
  }

  const EmojiCatalog& catalog() const { return *catalog_; }
  const LabelDelimiters& delimiters() const { return delims_; }
  const std::vector<LabelCollision>& collisions() const { return collisions_; }

  ScalarString transliterate(const EmojiEntry& e) const {
    ScalarString body = label_body(e.cldr_name, delims_.separator);
    if (body.empty())
      throw LabelError("emoji " + codepoint_labels(e.codepoints) + " (\"" + e.cldr_name +
                       "\") has no alphanumerics in its name");
    ScalarString out;
    out += delims_.open;
    out += body;
    out += delims_.close;
    return out;
  }

  /// The distinct catalog emoji carrying `label`. Variants that share a name
  /// (e.g. with and without VS16) resolve to the fully-qualified row.
  const EmojiEntry& detransliterate(ScalarView label) const {
    if (!is_well_formed_label(label, delims_))
      throw LabelError("malformed label '" + utf8::encode(label) + "'");
    auto it = reverse_.find(ScalarString(label));
    if (it == reverse_.end()) throw LabelError("unknown label '" + utf8::encode(label) + "'");
    for (const auto& c : collisions_)
      if (c.label == label) throw LabelError(describe(c));
    return *it->second;
  }

  bool is_label(ScalarView text) const { return reverse_.contains(ScalarString(text)); }

  /// Emoji tokens become TransliteratedEmoji tokens carrying the emoji as
  /// `orig`; every other token passes through.
  std::vector<Token> transliterate_tokens(std::vector<Token> tokens) const {
    for (auto& t : tokens) {
      if (t.kind != TokenKind::Emoji) continue;
      const EmojiEntry* e = catalog_->lookup(t.text);
      if (!e) throw InternalError("emoji token " + codepoint_labels(t.text) + " is not in the catalog");
      t.orig = std::move(t.text);
      t.text = transliterate(*e);
      t.kind = TokenKind::TransliteratedEmoji;
    }
    return tokens;
  }

 private:
  static std::string describe(const LabelCollision& c) {
    return "label collision on '" + utf8::encode(c.label) + "': " + codepoint_labels(c.first->codepoints) +
           " (\"" + c.first->cldr_name + "\") and " + codepoint_labels(c.second->codepoints) + " (\"" +
           c.second->cldr_name + "\")";
  }

  const EmojiCatalog* catalog_;
  LabelDelimiters delims_;
  std::map<ScalarString, const EmojiEntry*> reverse_;
  std::vector<LabelCollision> collisions_;
};

/// Label of `e` with the default delimiters.
inline ScalarString transliterate(const EmojiEntry& e) {
  ScalarString body = label_body(e.cldr_name);
  if (body.empty()) throw LabelError("emoji \"" + e.cldr_name + "\" has no alphanumerics in its name");
  return U"{" + body + U"}";
}

}  // namespace faithful
