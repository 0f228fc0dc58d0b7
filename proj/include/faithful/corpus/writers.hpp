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

// Corpus file writers.
//
//   txt  tokens separated by single spaces, one source line per line
//   xml  <doc id="..."> root; normalized runs as <norm orig="...">, emoji
//        labels as <emoji orig="...">
//   vrt  one token per line: token, orig (or "-"), then two empty columns
//        reserved for part-of-speech and lemma from an external tagger;
//        &, < and > are escaped as in XML

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "faithful/error.hpp"
#include "faithful/normalizer.hpp"
#include "faithful/tokenizer.hpp"
#include "faithful/unicode/utf8.hpp"

namespace faithful {

enum class OutputFormat { txt, xml, vrt };

inline constexpr std::string_view to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::txt: return "txt";
    case OutputFormat::xml: return "xml";
    case OutputFormat::vrt: return "vrt";
  }
  return "?";
}

inline OutputFormat parse_output_format(std::string_view s) {
  if (s == "txt") return OutputFormat::txt;
  if (s == "xml") return OutputFormat::xml;
  if (s == "vrt") return OutputFormat::vrt;
  throw InvalidArgument("unknown output format '" + std::string(s) + "' (expected txt, xml or vrt)");
}

/// Escapes &, <, > and both quote characters; control characters other
/// than TAB and LF become character references.
inline std::string xml_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20 && c != '\t' && c != '\n') {
          out += "&#" + std::to_string(static_cast<int>(c)) + ";";
        } else {
          out += c;
        }
    }
  }
  return out;
}

/// A document id may not contain a double quote or a control character.
inline void validate_doc_id(std::string_view id) {
  if (!utf8::is_valid(id)) throw InvalidArgument("document id is not valid UTF-8");
  for (char32_t c : utf8::decode(id)) {
    if (c == U'"' || general_category(c) == GeneralCategory::Cc)
      throw InvalidArgument("document id '" + std::string(id) + "' contains a quote or control character");
  }
}

namespace detail {

// 0-based line index of every token, from the newlines before its span.
inline std::vector<std::size_t> token_lines(const PreprocessedDocument& doc) {
  std::vector<std::size_t> lines;
  lines.reserve(doc.tokens.size());
  std::size_t line = 0, scanned = 0;
  for (const auto& t : doc.tokens) {
    std::size_t upto = std::min(t.span.start, doc.text.size());
    if (upto > scanned) {
      line += static_cast<std::size_t>(std::count(doc.text.begin() + static_cast<std::ptrdiff_t>(scanned),
                                                  doc.text.begin() + static_cast<std::ptrdiff_t>(upto), '\n'));
      scanned = upto;
    }
    lines.push_back(line);
  }
  return lines;
}

inline std::size_t line_count(const PreprocessedDocument& doc) {
  if (doc.text.empty()) return 0;
  auto n = static_cast<std::size_t>(std::count(doc.text.begin(), doc.text.end(), '\n'));
  return doc.text.back() == '\n' ? n : n + 1;
}

// Token columns escape only what could be mistaken for markup.
inline std::string vrt_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '&') out += "&amp;";
    else if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else out += c;
  }
  return out;
}

// Tokens produced from the same normalized source token form one run.
inline bool same_run(const Token& a, const Token& b) {
  return a.orig && b.orig && a.kind != TokenKind::TransliteratedEmoji &&
         b.kind != TokenKind::TransliteratedEmoji && a.span == b.span;
}

}  // namespace detail

inline std::string write_txt(const PreprocessedDocument& doc) {
  auto lines = detail::token_lines(doc);
  std::size_t n_lines = detail::line_count(doc);
  std::vector<std::string> rendered(n_lines);
  for (std::size_t i = 0; i < doc.tokens.size(); ++i) {
    auto& l = rendered[lines[i]];
    if (!l.empty()) l += ' ';
    l += utf8::encode(doc.tokens[i].text);
  }
  std::string out;
  for (const auto& l : rendered) out += l + "\n";
  return out;
}

inline std::string write_xml(const PreprocessedDocument& doc) {
  validate_doc_id(doc.doc_id);
  auto lines = detail::token_lines(doc);
  std::size_t n_lines = detail::line_count(doc);
  std::vector<std::string> rendered(n_lines);
  for (std::size_t i = 0; i < doc.tokens.size();) {
    const Token& t = doc.tokens[i];
    auto& l = rendered[lines[i]];
    if (!l.empty()) l += ' ';
    if (t.kind == TokenKind::TransliteratedEmoji && t.orig) {
      l += "<emoji orig=\"" + xml_escape(utf8::encode(*t.orig)) + "\">" + xml_escape(utf8::encode(t.text)) +
           "</emoji>";
      ++i;
    } else if (t.orig) {
      std::size_t j = i + 1;
      while (j < doc.tokens.size() && detail::same_run(t, doc.tokens[j])) ++j;
      l += "<norm orig=\"" + xml_escape(utf8::encode(*t.orig)) + "\">";
      for (std::size_t k = i; k < j; ++k) {
        if (k > i) l += ' ';
        l += xml_escape(utf8::encode(doc.tokens[k].text));
      }
      l += "</norm>";
      i = j;
    } else {
      l += xml_escape(utf8::encode(t.text));
      ++i;
    }
  }
  std::string out = "<doc id=\"" + xml_escape(doc.doc_id) + "\">\n";
  for (const auto& l : rendered) out += l + "\n";
  out += "</doc>\n";
  return out;
}

inline std::string write_vrt(const PreprocessedDocument& doc) {
  validate_doc_id(doc.doc_id);
  std::string out = "<doc id=\"" + xml_escape(doc.doc_id) + "\">\n";
  for (const auto& t : doc.tokens) {
    out += detail::vrt_escape(utf8::encode(t.text));
    out += '\t';
    out += t.orig ? detail::vrt_escape(utf8::encode(*t.orig)) : "-";
    out += "\t\t\n";
  }
  out += "</doc>\n";
  return out;
}

inline std::string write_output(const PreprocessedDocument& doc, OutputFormat format) {
  switch (format) {
    case OutputFormat::txt: return write_txt(doc);
    case OutputFormat::xml: return write_xml(doc);
    case OutputFormat::vrt: return write_vrt(doc);
  }
  throw InternalError("unhandled output format");
}

}  // namespace faithful
