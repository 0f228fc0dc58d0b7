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

// The preprocessing pipeline:
//
//   retokenise -> tokenize -> transliterate emoji -> normalize each token
//
// Normalization is per token. A token that is not already in the target
// form is normalized and tokenized again, because one homoglyph token can
// become several ("⒜" -> "(", "a", ")"). Every such change leaves a
// NormalizationRecord so the source text can be reconstructed.

#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "faithful/emoji_catalog.hpp"
#include "faithful/error.hpp"
#include "faithful/tokenizer.hpp"
#include "faithful/transliterator.hpp"
#include "faithful/unicode/normalization.hpp"
#include "faithful/unicode/ucd.hpp"
#include "faithful/unicode/utf8.hpp"

namespace faithful {

/// Stand-in token text when normalization leaves nothing behind.
inline constexpr char32_t kEmptyResultSentinel = 0x2205;  // EMPTY SET

struct NormalizationRecord {
  ScalarString orig;
  std::vector<ScalarString> normalized_tokens;  // {"∅"} when nothing survived
  Span span;

  bool is_empty_result() const {
    return normalized_tokens.size() == 1 && normalized_tokens[0] == ScalarString(1, kEmptyResultSentinel);
  }

  friend bool operator==(const NormalizationRecord&, const NormalizationRecord&) = default;
};

struct DocumentStats {
  std::size_t n_tokens = 0;  // countable tokens: everything except punctuation
  std::size_t n_types = 0;   // distinct countable tokens, words case-folded
  std::size_t n_emojis = 0;  // Emoji and TransliteratedEmoji tokens
  std::size_t n_homoglyph_scalars = 0;
  std::size_t n_nfkc_normalized_tokens = 0;

  friend bool operator==(const DocumentStats&, const DocumentStats&) = default;
};

struct PreprocessedDocument {
  std::string doc_id;
  std::string text;  // retokenised source (UTF-8); token spans index into it
  std::vector<Token> tokens;
  std::vector<NormalizationRecord> records;
  DocumentStats stats;
  std::vector<std::string> warnings;
};

struct PipelineConfig {
  TokenDefinition td;
  bool translit = true;
  bool nfkc = true;
  NormalizationForm form = NormalizationForm::NFKC;
  LabelDelimiters delimiters;
  // Refuse input that already contains a label delimiter, since such text
  // would be indistinguishable from a label after preprocessing.
  bool check_delimiters = true;
};

/// Scalars whose own normalization differs from themselves.
inline bool is_homoglyph_scalar(char32_t c, NormalizationForm form = NormalizationForm::NFKC) {
  if (c < 0x80) return false;
  ScalarString one(1, c);
  return normalize(one, form) != one;
}

inline std::size_t count_homoglyph_scalars(ScalarView text,
                                           NormalizationForm form = NormalizationForm::NFKC) {
  std::size_t n = 0;
  for (char32_t c : text) n += is_homoglyph_scalar(c, form);
  return n;
}

/// Whether a token of this kind counts towards token and type totals.
inline bool is_countable(TokenKind k) { return k != TokenKind::Punctuation; }

/// Type key of a token: words are full case-folded, everything else is kept.
inline ScalarString type_key(const Token& t, bool case_folded = true) {
  return case_folded && t.kind == TokenKind::Word ? case_fold(t.text) : t.text;
}

/// Recomputes document statistics from tokens and records alone.
inline DocumentStats compute_stats(const std::vector<Token>& tokens,
                                   const std::vector<NormalizationRecord>& records,
                                   NormalizationForm form = NormalizationForm::NFKC) {
  DocumentStats s;
  std::set<ScalarString> types;
  for (const auto& t : tokens) {
    if (t.kind == TokenKind::Emoji || t.kind == TokenKind::TransliteratedEmoji) ++s.n_emojis;
    if (!is_countable(t.kind)) continue;
    ++s.n_tokens;
    types.insert(type_key(t));
  }
  s.n_types = types.size();
  for (const auto& r : records) {
    s.n_homoglyph_scalars += count_homoglyph_scalars(r.orig, form);
    if (!r.is_empty_result()) s.n_nfkc_normalized_tokens += r.normalized_tokens.size();
  }
  // Tokens that were never normalized still report their homoglyphs.
  for (const auto& t : tokens)
    if (!t.orig && t.kind != TokenKind::Emoji && t.kind != TokenKind::TransliteratedEmoji)
      s.n_homoglyph_scalars += count_homoglyph_scalars(t.text, form);
  return s;
}

struct NormalizedToken {
  std::vector<Token> tokens;
  std::optional<NormalizationRecord> record;
};

/// Normalizes one token. Unchanged tokens come back as-is without a record;
/// changed ones are tokenized again, each piece keeping the input span and
/// the input text as `orig`.
inline NormalizedToken normalize_token(const Token& t, const EmojiCatalog& catalog,
                                       const TokenDefinition& td,
                                       NormalizationForm form = NormalizationForm::NFKC) {
  if (t.kind == TokenKind::TransliteratedEmoji || t.kind == TokenKind::Emoji)
    throw InvalidArgument("normalize_token: emoji tokens are never normalized");
  if (is_normalized(t.text, form)) return {{t}, std::nullopt};

  ScalarString normalized = normalize(t.text, form);
  std::vector<Token> pieces = tokenize(normalized, catalog, td);
  // A split-off clitic ("’𝐒") is an apostrophe plus letters; standing alone
  // it would fall apart into punctuation and a word, so it is kept whole.
  if (td.clitic_split && t.kind == TokenKind::Word && pieces.size() == 2 && is_apostrophe(t.text.front()) &&
      pieces[0].text.size() == 1 && is_apostrophe(pieces[0].text[0]) && pieces[1].kind == TokenKind::Word &&
      pieces[1].span.start == pieces[0].span.end && pieces[1].text.size() <= 3) {
    pieces[0].text += pieces[1].text;
    pieces[0].kind = TokenKind::Word;
    pieces[0].span.end = pieces[1].span.end;
    pieces.pop_back();
  }
  NormalizationRecord record{t.text, {}, t.span};
  for (auto& p : pieces) {
    record.normalized_tokens.push_back(p.text);
    p.span = t.span;
    p.orig = t.text;
  }
  if (pieces.empty()) record.normalized_tokens.push_back(ScalarString(1, kEmptyResultSentinel));
  return {std::move(pieces), std::move(record)};
}

/// A configured pipeline bound to a catalog. Stateless after construction,
/// so one instance may process documents from several threads.
class Pipeline {
 public:
  Pipeline(const EmojiCatalog& catalog, PipelineConfig config)
      : catalog_(&catalog), config_(std::move(config)), translit_(catalog, config_.delimiters) {
    if (config_.translit) {
      // Labels must read back as single word tokens.
      config_.td.user_appended.insert(config_.delimiters.open);
      config_.td.user_appended.insert(config_.delimiters.close);
      config_.td.user_appended.insert(config_.delimiters.separator);
    }
    config_.td.validate();
  }

  const PipelineConfig& config() const { return config_; }
  const Transliterator& transliterator() const { return translit_; }
  const EmojiCatalog& catalog() const { return *catalog_; }

  PreprocessedDocument run(ScalarView text, std::string doc_id = {}) const {
    if (config_.translit && config_.check_delimiters) check_delimiters(text);

    PreprocessedDocument doc;
    doc.doc_id = std::move(doc_id);
    ScalarString retokenised = retokenise(text, *catalog_);
    doc.text = utf8::encode(retokenised);
    std::vector<Token> tokens = tokenize(retokenised, *catalog_, config_.td);
    if (config_.translit) tokens = translit_.transliterate_tokens(std::move(tokens));

    if (config_.nfkc) {
      std::vector<Token> out;
      out.reserve(tokens.size());
      for (auto& t : tokens) {
        if (t.kind == TokenKind::Emoji || t.kind == TokenKind::TransliteratedEmoji) {
          out.push_back(std::move(t));
          continue;
        }
        auto r = normalize_token(t, *catalog_, config_.td, config_.form);
        if (r.record) {
          if (r.record->is_empty_result())
            doc.warnings.push_back("token " + codepoint_labels(t.text) + " at byte " +
                                   std::to_string(t.span.start) + " normalized to nothing");
          doc.records.push_back(std::move(*r.record));
        }
        for (auto& p : r.tokens) {
          // Normalization can surface an emoji; label it like any other.
          if (p.kind == TokenKind::Emoji && config_.translit) {
            ScalarString label = translit_.transliterate(*catalog_->lookup(p.text));
            p.text = std::move(label);
            p.kind = TokenKind::TransliteratedEmoji;
          }
          out.push_back(std::move(p));
        }
      }
      tokens = std::move(out);
    }
    doc.tokens = std::move(tokens);
    doc.stats = compute_stats(doc.tokens, doc.records, config_.form);
    return doc;
  }

 private:
  void check_delimiters(ScalarView text) const {
    std::size_t byte = 0;
    for (char32_t c : text) {
      if (config_.delimiters.contains(c))
        throw InvalidArgument("source text contains label delimiter '" + utf8::encode(ScalarString(1, c)) +
                              "' at byte " + std::to_string(byte) +
                              "; choose other delimiters (--translit-delims)");
      byte += utf8::encoded_length(c);
    }
  }

  const EmojiCatalog* catalog_;
  PipelineConfig config_;
  Transliterator translit_;
};

/// One-shot convenience over Pipeline.
inline PreprocessedDocument preprocess(ScalarView text, const EmojiCatalog& catalog,
                                       const PipelineConfig& config = {}, std::string doc_id = {}) {
  return Pipeline(catalog, config).run(text, std::move(doc_id));
}

}  // namespace faithful
