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

// Command-line frontend. Standard output carries data only; summaries,
// warnings and the provenance line go to standard error.
//
// Exit status: 0 success, 1 bad input or usage, 2 internal error.

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "faithful/faithful.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using namespace faithful;

namespace {

struct Options {
  std::optional<std::string> config_path;
  std::optional<std::string> emoji_data;
  std::optional<std::string> delimiters;
  std::optional<std::string> form;
  std::optional<std::string> word_chars;
  std::optional<bool> translit, nfkc, case_fold, clitic_split, lossy;
  std::optional<std::size_t> jobs;
  std::string output;
  std::vector<std::string> inputs;
};

// Loads the config file first, then lets explicit flags override it.
Settings resolve_settings(const Options& o) {
  Settings s;
  if (o.config_path) load_config_file(*o.config_path, s);
  if (o.emoji_data) s.emoji_data = *o.emoji_data;
  if (o.delimiters) apply_setting(s, "delimiters", *o.delimiters);
  if (o.form) apply_setting(s, "form", *o.form);
  if (o.word_chars) apply_setting(s, "word_chars", *o.word_chars);
  if (o.translit) s.pipeline.translit = *o.translit;
  if (o.nfkc) s.pipeline.nfkc = *o.nfkc;
  if (o.case_fold) s.case_fold = *o.case_fold;
  if (o.clitic_split) s.pipeline.td.clitic_split = *o.clitic_split;
  if (o.lossy) s.lossy = *o.lossy;
  if (o.jobs) s.jobs = *o.jobs;
  if (s.jobs == 0) throw InvalidArgument("--jobs must be positive");
  return s;
}

const EmojiCatalog& load_catalog(const Settings& s) {
  if (!s.emoji_data) return EmojiCatalog::bundled();
  static EmojiCatalog custom = EmojiCatalog::load_file(*s.emoji_data);
  return custom;
}

std::string canonical_settings(const Settings& s) {
  const auto& p = s.pipeline;
  std::string out = "translit=" + std::to_string(p.translit) + ";nfkc=" + std::to_string(p.nfkc) +
                    ";form=" + std::string(to_string(p.form)) + ";case_fold=" + std::to_string(s.case_fold) +
                    ";clitic_split=" + std::to_string(p.td.clitic_split) +
                    ";attach_marks=" + std::to_string(p.td.attach_marks) + ";lossy=" + std::to_string(s.lossy) +
                    ";delimiters=" +
                    utf8::encode(ScalarString{p.delimiters.open, p.delimiters.close, p.delimiters.separator}) +
                    ";word_chars=";
  for (char32_t c : p.td.user_appended) utf8::append(out, c);
  out += ";emoji_data=" + s.emoji_data.value_or("bundled");
  return out;
}

// FNV-1a, 64 bit: a stable fingerprint of the effective configuration.
std::string config_hash(const Settings& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical_settings(s)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// Provenance goes to a sidecar next to a named output, otherwise to stderr
// as a single comment line; it never enters counted data.
void emit_provenance(const std::string& command, const Settings& s, const std::string& output) {
  nlohmann::ordered_json j;
  j["tool"] = "faithful";
  j["version"] = std::string(kVersion);
  j["unicode"] = std::string(kUnicodeVersion);
  j["emoji_data"] = s.emoji_data.value_or("bundled");
  j["command"] = command;
  j["config"] = canonical_settings(s);
  j["config_hash"] = config_hash(s);
  if (output.empty() || output == "-") {
    std::cerr << "# provenance " << j.dump() << "\n";
  } else {
    std::ofstream(output + ".provenance.json", std::ios::binary) << j.dump(2) << "\n";
  }
}

bool use_color() { return std::getenv("NO_COLOR") == nullptr && isatty(fileno(stderr)); }

void summary(const std::string& title, const std::vector<std::pair<std::string, std::string>>& rows) {
  bool color = use_color();
  std::cerr << (color ? "\033[1m" : "") << title << (color ? "\033[0m" : "") << "\n";
  for (const auto& [k, v] : rows) std::cerr << "  " << k << ": " << v << "\n";
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Directory arguments expand to their regular files, ordered by codepoint
// comparison of the path so the order never depends on the filesystem.
std::vector<std::string> expand_inputs(const std::vector<std::string>& inputs) {
  if (inputs.empty()) return {"-"};
  std::vector<std::string> out;
  for (const auto& in : inputs) {
    if (in != "-" && fs::is_directory(in)) {
      std::vector<std::string> files;
      for (const auto& e : fs::recursive_directory_iterator(in))
        if (e.is_regular_file()) files.push_back(e.path().string());
      std::sort(files.begin(), files.end(), [](const std::string& a, const std::string& b) {
        return utf8::decode(a, utf8::DecodeMode::kLossy) < utf8::decode(b, utf8::DecodeMode::kLossy);
      });
      out.insert(out.end(), files.begin(), files.end());
    } else {
      out.push_back(in);
    }
  }
  return out;
}

std::string doc_id_for(const std::string& path) {
  return path == "-" ? "stdin" : fs::path(path).filename().string();
}

struct LoadedDoc {
  std::string path;
  ScalarString text;
  utf8::IngestResult stats;
};

LoadedDoc load_doc(const std::string& path, bool lossy) {
  std::string bytes = read_file(path);
  try {
    auto r = utf8::ingest(bytes, lossy ? utf8::DecodeMode::kLossy : utf8::DecodeMode::kStrict);
    ScalarString text = std::move(r.text);
    return LoadedDoc{path, std::move(text), std::move(r)};
  } catch (const DecodeError& e) {
    throw Error(path + ": " + e.what() + " (use --lossy to substitute U+FFFD)");
  }
}

// Runs `work(i)` for every index on up to `jobs` threads. Results are
// stored by index, so output order never depends on scheduling. The first
// exception is rethrown on the calling thread.
template <typename F>
void parallel_for(std::size_t n, std::size_t jobs, F work) {
  jobs = std::max<std::size_t>(1, std::min(jobs, n));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(n);
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < jobs; ++t) {
    threads.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) {
        try {
          work(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& th : threads) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

void write_output_text(const std::string& output, const std::string& data) {
  if (output.empty() || output == "-") {
    std::cout << data;
    std::cout.flush();
    return;
  }
  fs::path p(output);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(output, std::ios::binary);
  if (!out) throw Error("cannot write " + output);
  out << data;
}

struct DocResult {
  PreprocessedDocument doc;
  utf8::IngestResult ingest;
};

std::vector<DocResult> run_pipeline(const std::vector<std::string>& files, const Pipeline& pipeline,
                                    const Settings& s) {
  std::vector<DocResult> results(files.size());
  parallel_for(files.size(), s.jobs, [&](std::size_t i) {
    LoadedDoc d = load_doc(files[i], s.lossy);
    results[i].doc = pipeline.run(d.text, doc_id_for(files[i]));
    d.stats.text.clear();
    results[i].ingest = std::move(d.stats);
  });
  return results;
}

void report_ingest(const std::vector<DocResult>& results) {
  std::size_t endings = 0, replaced = 0, boms = 0;
  for (const auto& r : results) {
    endings += r.ingest.converted_line_endings;
    replaced += r.ingest.replacements;
    boms += r.ingest.had_bom;
    for (const auto& w : r.doc.warnings) std::cerr << "warning: " << r.doc.doc_id << ": " << w << "\n";
  }
  if (endings) std::cerr << "note: converted " << endings << " line endings to LF\n";
  if (replaced) std::cerr << "note: replaced " << replaced << " ill-formed sequences with U+FFFD\n";
  if (boms) std::cerr << "note: dropped " << boms << " byte order marks\n";
}

int cmd_preprocess(const Options& o, const std::string& format_name) {
  Settings s = resolve_settings(o);
  OutputFormat format = parse_output_format(format_name);
  const EmojiCatalog& catalog = load_catalog(s);
  Pipeline pipeline(catalog, s.pipeline);
  auto results = run_pipeline(expand_inputs(o.inputs), pipeline, s);
  std::string data;
  DocumentStats total;
  for (const auto& r : results) {
    data += write_output(r.doc, format);
    total.n_tokens += r.doc.stats.n_tokens;
    total.n_emojis += r.doc.stats.n_emojis;
    total.n_homoglyph_scalars += r.doc.stats.n_homoglyph_scalars;
    total.n_nfkc_normalized_tokens += r.doc.stats.n_nfkc_normalized_tokens;
  }
  write_output_text(o.output, data);
  report_ingest(results);
  emit_provenance("preprocess", s, o.output);
  summary("preprocess", {{"documents", std::to_string(results.size())},
                         {"tokens", std::to_string(total.n_tokens)},
                         {"emojis", std::to_string(total.n_emojis)},
                         {"homoglyph scalars", std::to_string(total.n_homoglyph_scalars)},
                         {"nfkc-normalized tokens", std::to_string(total.n_nfkc_normalized_tokens)}});
  return 0;
}

int cmd_wordlist(const Options& o, bool preprocessed) {
  Settings s = resolve_settings(o);
  const EmojiCatalog& catalog = load_catalog(s);
  PipelineConfig config = s.pipeline;
  if (preprocessed) {
    // Already tokenized text: split it again without rewriting anything.
    config.translit = false;
    config.nfkc = false;
    config.check_delimiters = false;
    for (char32_t c : {config.delimiters.open, config.delimiters.close, config.delimiters.separator})
      config.td.user_appended.insert(c);
  }
  Pipeline pipeline(catalog, config);
  auto results = run_pipeline(expand_inputs(o.inputs), pipeline, s);
  WordlistOptions wo;
  wo.case_folded = s.case_fold;
  Wordlist wl(wo);
  for (const auto& r : results) wl.add(r.doc);
  write_output_text(o.output, wl.to_csv());
  report_ingest(results);
  emit_provenance("wordlist", s, o.output);
  summary("wordlist", {{"documents", std::to_string(results.size())},
                       {"tokens", std::to_string(wl.token_count())},
                       {"types", std::to_string(wl.type_count())}});
  return 0;
}

int cmd_testgen(const Options& o, const std::string& kind, bool normalized, bool explain, bool counts) {
  Settings s = resolve_settings(o);
  const EmojiCatalog& catalog = load_catalog(s);
  if (kind == "emoji") {
    std::string file = gen_emoji_testfile(catalog);
    write_output_text(o.output, file);
    emit_provenance("testgen emoji", s, o.output);
    summary("testgen emoji", {{"lines", std::to_string(catalog.stats().distinct())}});
    return 0;
  }
  if (kind != "homoglyph") throw InvalidArgument("testgen expects 'emoji' or 'homoglyph'");
  if (explain) {
    // One row per scalar in the file, with the properties an alternative
    // selection rule might use, followed by per-block totals on stderr.
    std::string out = "codepoint,character,category,script,block,emoji_key,emoji_property,nfkc_length\n";
    std::map<std::string_view, std::size_t> per_block;
    std::size_t emoji_keys = 0, emoji_props = 0;
    auto items = explain_character_file(catalog);
    for (const auto& it : items) {
      ScalarString one(1, it.cp);
      out += csv::format_row({Codepoint(it.cp).label(), utf8::encode(one), std::string(to_string(it.category)),
                              std::string(it.script), std::string(it.block), it.emoji_key ? "1" : "0",
                              it.emoji_property ? "1" : "0", std::to_string(it.nfkc_length)});
      ++per_block[it.block];
      emoji_keys += it.emoji_key;
      emoji_props += it.emoji_property;
    }
    write_output_text(o.output, out);
    std::vector<std::pair<std::string, std::string>> rows{
        {"scalars", std::to_string(items.size())},
        {"single-scalar emoji keys", std::to_string(emoji_keys)},
        {"Emoji property", std::to_string(emoji_props)}};
    for (const auto& [b, n] : per_block) rows.emplace_back("block " + std::string(b), std::to_string(n));
    summary("homoglyph test file itemization", rows);
    emit_provenance("testgen homoglyph --explain-delta", s, o.output);
    return 0;
  }
  std::string file = gen_homoglyph_testfile(normalized);
  if (counts) {
    auto c = count_character_file(file);
    write_output_text(o.output, "lines,tokens,types\n" + std::to_string(c.lines) + "," + std::to_string(c.tokens) +
                                    "," + std::to_string(c.types) + "\n");
  } else {
    write_output_text(o.output, file);
  }
  emit_provenance(normalized ? "testgen homoglyph --normalized" : "testgen homoglyph", s, o.output);
  auto c = count_character_file(file);
  summary("testgen homoglyph", {{"lines", std::to_string(c.lines)},
                                {"character tokens", std::to_string(c.tokens)},
                                {"character types", std::to_string(c.types)}});
  return 0;
}

int cmd_inventory(const Options& o) {
  Settings s = resolve_settings(o);
  const EmojiCatalog& catalog = load_catalog(s);
  Pipeline pipeline(catalog, s.pipeline);
  auto files = expand_inputs(o.inputs);
  std::vector<SourceInventory> parts(files.size());
  parallel_for(files.size(), s.jobs, [&](std::size_t i) {
    LoadedDoc d = load_doc(files[i], s.lossy);
    parts[i] = inventory({d.text}, pipeline);
  });
  // Types cannot be summed across documents, so they are recomputed once.
  SourceInventory inv;
  for (const auto& p : parts) {
    for (const auto& [k, v] : p.emoji_types) inv.emoji_types[k] += v;
    for (const auto& [k, v] : p.homoglyph_scalars) inv.homoglyph_scalars[k] += v;
    inv.nfkc_norm_token_count += p.nfkc_norm_token_count;
    inv.tokens += p.tokens;
    inv.documents += p.documents;
  }
  if (files.size() == 1) {
    inv.types = parts[0].types;
  } else {
    std::set<ScalarString> types;
    auto results = run_pipeline(files, pipeline, s);
    for (const auto& r : results)
      for (const auto& t : r.doc.tokens)
        if (is_countable(t.kind)) types.insert(type_key(t));
    inv.types = types.size();
  }
  write_output_text(o.output, inventory_to_csv(inv));
  emit_provenance("inventory", s, o.output);
  summary("inventory", {{"documents", std::to_string(inv.documents)},
                        {"types", std::to_string(inv.types)},
                        {"tokens", std::to_string(inv.tokens)},
                        {"emojis", std::to_string(inv.emoji_tokens())},
                        {"emoji types", std::to_string(inv.emoji_types.size())},
                        {"homoglyphs", std::to_string(inv.homoglyph_tokens())},
                        {"nfkc-norm", std::to_string(inv.nfkc_norm_token_count)}});
  return 0;
}

int cmd_audit(const Options& o, const std::string& inventory_path, const std::string& wordlist_path,
              const std::optional<std::string>& ingest_map, bool no_header) {
  Settings s = resolve_settings(o);
  const EmojiCatalog& catalog = load_catalog(s);
  Transliterator translit(catalog, s.pipeline.delimiters);
  SourceInventory inv = inventory_from_csv(read_file(inventory_path));
  CsvColumnMap map = ingest_map ? CsvColumnMap::parse(*ingest_map) : CsvColumnMap{};
  map.has_header = !no_header;
  Wordlist external = read_wordlist_csv(read_file(wordlist_path), map);
  AuditReport r = audit(inv, external, translit);
  write_output_text(o.output, audit_to_csv(r));
  emit_provenance("audit", s, o.output);
  summary("audit", {{"emoji types (external)", std::to_string(r.emoji_type_count)},
                    {"emoji tokens (external)", std::to_string(r.emoji_token_count)},
                    {"emoji types (source)", std::to_string(r.source_emoji_type_count)},
                    {"emoji tokens (source)", std::to_string(r.source_emoji_token_count)},
                    {"unrecognised emojis", std::to_string(r.unrecognised_emojis.size())},
                    {"invalid emoji types", std::to_string(r.invalid_emoji_types.size())},
                    {"missing types", std::to_string(r.missing_types)},
                    {"missing tokens", std::to_string(r.missing_tokens)}});
  return 0;
}

int cmd_inspect(const Options& o, const std::string& text) {
  Settings s = resolve_settings(o);
  const EmojiCatalog& catalog = load_catalog(s);
  if (!utf8::is_valid(text)) throw InvalidArgument("argument is not valid UTF-8");
  ScalarString scalars = utf8::decode(text);
  std::string out = "codepoint,character,name,category,block,script\n";
  for (char32_t c : scalars) {
    CharRecord r = char_record(Codepoint(c));
    ScalarString one(1, c);
    out += csv::format_row({r.cp.label(), is_printable(c) ? utf8::encode(one) : "", display_name(c),
                            std::string(to_string(r.general_category)), r.block, r.script});
  }
  auto matches = segment_emojis(scalars, catalog);
  if (!matches.empty()) {
    Transliterator translit(catalog, s.pipeline.delimiters);
    out += "\nemoji,codepoints,name,qualification,label\n";
    for (const auto& m : matches) {
      out += csv::format_row({m.entry->utf8(), codepoint_labels(m.entry->codepoints), m.entry->cldr_name,
                              std::string(to_string(m.entry->qualification)),
                              utf8::encode(translit.transliterate(*m.entry))});
    }
  }
  write_output_text(o.output, out);
  return 0;
}

int cmd_catalog(const Options& o, const std::string& what) {
  Settings s = resolve_settings(o);
  const EmojiCatalog& catalog = load_catalog(s);
  if (what == "stats") {
    auto st = catalog.stats();
    std::string out = "key,value\n";
    auto row = [&](const char* k, const std::string& v) { out += csv::format_row({k, v}); };
    row("data_version", st.data_version);
    row("unicode_version", std::string(kUnicodeVersion));
    row("entries", std::to_string(st.entries));
    row("fully_qualified", std::to_string(st.fully_qualified));
    row("minimally_qualified", std::to_string(st.minimally_qualified));
    row("unqualified", std::to_string(st.unqualified));
    row("component", std::to_string(st.component));
    row("distinct_with_components", std::to_string(st.distinct()));
    row("distinct_without_components", std::to_string(st.fully_qualified));
    row("max_len", std::to_string(st.max_len));
    row("nfkc_sensitive", std::to_string(nfkc_sensitive_entries(catalog).size()));
    write_output_text(o.output, out);
    return 0;
  }
  if (what == "nfkc-sensitive") {
    std::string out = "emoji,codepoints,name,qualification,nfkc\n";
    for (const EmojiEntry* e : nfkc_sensitive_entries(catalog))
      out += csv::format_row({e->utf8(), codepoint_labels(e->codepoints), e->cldr_name,
                              std::string(to_string(e->qualification)), codepoint_labels(nfkc(e->codepoints))});
    write_output_text(o.output, out);
    return 0;
  }
  if (what == "check-labels") {
    // Collisions are a data-integrity failure, not a usage error.
    Transliterator translit(catalog, s.pipeline.delimiters, /*allow_collisions=*/true);
    for (const auto& c : translit.collisions())
      std::cerr << "collision: " << utf8::encode(c.label) << " <- " << codepoint_labels(c.first->codepoints)
                << " and " << codepoint_labels(c.second->codepoints) << "\n";
    if (!translit.collisions().empty())
      throw InternalError(std::to_string(translit.collisions().size()) + " label collisions");
    std::cerr << "labels: " << catalog.size() << " entries, 0 collisions\n";
    return 0;
  }
  throw InvalidArgument("catalog expects 'stats', 'nfkc-sensitive' or 'check-labels'");
}

void add_common(CLI::App* cmd, Options& o, bool pipeline_flags) {
  cmd->add_option("--config", o.config_path, "Read settings from a key = value file");
  cmd->add_option("--emoji-data", o.emoji_data, "Load emoji-test data from this file instead of the bundled 15.1 data");
  cmd->add_option("-o,--output", o.output, "Write to this file instead of standard output");
  cmd->add_option("--translit-delims", o.delimiters, "Label delimiters as three characters: open, close, separator");
  if (!pipeline_flags) return;
  cmd->add_option("--form", o.form, "Normalization form (NFC, NFD, NFKC, NFKD)");
  cmd->add_option("--word-chars", o.word_chars, "Extra characters treated as word characters");
  cmd->add_flag("--translit,!--no-translit", o.translit, "Replace emoji with labels");
  cmd->add_flag("--nfkc,!--no-nfkc", o.nfkc, "Normalize homoglyph tokens");
  cmd->add_flag("--case-fold,!--no-case-fold", o.case_fold, "Case-fold word types in wordlists");
  cmd->add_flag("--clitic-split,!--no-clitic-split", o.clitic_split, "Split clitics such as 's");
  cmd->add_flag("--lossy,!--strict", o.lossy, "Replace ill-formed UTF-8 with U+FFFD instead of failing");
  cmd->add_option("-j,--jobs", o.jobs, "Process files on this many threads")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Emoji- and homoglyph-faithful corpus preprocessing"};
  app.set_version_flag("--version", std::string(kVersion) + " (Unicode " + std::string(kUnicodeVersion) + ")");
  app.require_subcommand(1);
  Options o;

  std::string format = "txt";
  auto* pre = app.add_subcommand("preprocess", "Preprocess files into a txt, xml or vrt corpus");
  add_common(pre, o, true);
  pre->add_option("-f,--format", format, "Output format: txt, xml or vrt");
  pre->add_option("inputs", o.inputs, "Files or directories (default: standard input)");

  bool preprocessed = false;
  auto* wl = app.add_subcommand("wordlist", "Type/frequency CSV of files");
  add_common(wl, o, true);
  wl->add_flag("--preprocessed", preprocessed, "Inputs are already-preprocessed txt files");
  wl->add_option("inputs", o.inputs, "Files or directories (default: standard input)");

  std::string kind;
  bool normalized = false, explain = false, counts = false;
  auto* tg = app.add_subcommand("testgen", "Generate the emoji or character test file");
  add_common(tg, o, false);
  tg->add_option("kind", kind, "emoji or homoglyph")->required()->check(CLI::IsMember({"emoji", "homoglyph"}));
  tg->add_flag("--normalized", normalized, "Write the NFKC form of every character");
  tg->add_flag("--explain-delta", explain, "Itemize every scalar in the character file with its properties");
  tg->add_flag("--counts", counts, "Print line, token and type counts instead of the file");

  auto* inv = app.add_subcommand("inventory", "Count emojis and homoglyphs in raw files");
  add_common(inv, o, true);
  inv->add_option("inputs", o.inputs, "Files or directories (default: standard input)");

  std::string inventory_path, wordlist_path;
  std::optional<std::string> ingest_map;
  bool no_header = false;
  auto* au = app.add_subcommand("audit", "Audit an external wordlist against a source inventory");
  add_common(au, o, false);
  au->add_option("--inventory", inventory_path, "Inventory CSV from 'faithful inventory'")->required();
  au->add_option("--wordlist", wordlist_path, "Wordlist CSV exported by the tool under audit")->required();
  au->add_option("--ingest-map", ingest_map, "1-based type:frequency columns of the wordlist, e.g. 2:3");
  au->add_flag("--no-header", no_header, "The wordlist has no header row");

  std::string text;
  auto* ins = app.add_subcommand("inspect", "Show codepoint properties and emoji segmentation of a string");
  add_common(ins, o, false);
  ins->add_option("text", text, "UTF-8 text")->required();

  std::string what;
  auto* cat = app.add_subcommand("catalog", "Emoji catalog queries");
  add_common(cat, o, false);
  cat->add_option("query", what, "stats, nfkc-sensitive or check-labels")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*pre) return cmd_preprocess(o, format);
    if (*wl) return cmd_wordlist(o, preprocessed);
    if (*tg) return cmd_testgen(o, kind, normalized, explain, counts);
    if (*inv) return cmd_inventory(o);
    if (*au) return cmd_audit(o, inventory_path, wordlist_path, ingest_map, no_header);
    if (*ins) return cmd_inspect(o, text);
    if (*cat) return cmd_catalog(o, what);
  } catch (const InternalError& e) {
    std::cerr << "faithful: internal error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "faithful: " << e.what() << "\n";
    return 1;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "faithful: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "faithful: internal error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
