#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "treeswap/bleu.hpp"
#include "treeswap/conllu.hpp"
#include "treeswap/deptree.hpp"
#include "treeswap/eligibility.hpp"
#include "treeswap/error.hpp"
#include "treeswap/manifest.hpp"
#include "treeswap/noise.hpp"
#include "treeswap/parallel_text.hpp"
#include "treeswap/pipeline.hpp"
#include "treeswap/preprocess.hpp"
#include "treeswap/split.hpp"
#include "treeswap/strings.hpp"
#include "treeswap/swap.hpp"
#include "treeswap/tsv_cache.hpp"
#include "treeswap/types.hpp"

namespace fs = std::filesystem;

namespace {

std::string g_stage = "cli";

std::string fmt_num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string fmt_exact(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// Config file support. The file is line-oriented key=value text ('#' lines
// and blank lines skipped, the first '=' splits, both halves trimmed, the
// last occurrence of a key wins). Every key maps onto the subcommand flag of
// the same name: keys the chosen subcommand defines and the command line does
// not mention are appended as "--key=value" arguments, so explicit flags
// always win and keys belonging to other stages are ignored.

std::map<std::string, std::string> load_config(const fs::path& path) {
  std::map<std::string, std::string> config;
  std::size_t line_no = 0;
  for (const std::string& raw : treeswap::read_lines(path)) {
    ++line_no;
    std::string_view line = treeswap::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw treeswap::ParseError("config line missing '='", line_no);
    }
    std::string key(treeswap::trim(line.substr(0, eq)));
    if (key.empty()) {
      throw treeswap::ParseError("config line has an empty key", line_no);
    }
    config[key] = std::string(treeswap::trim(line.substr(eq + 1)));
  }
  return config;
}

bool arg_present(const std::vector<std::string>& args, const std::string& flag) {
  for (const std::string& arg : args) {
    if (arg == flag || arg.rfind(flag + "=", 0) == 0) return true;
  }
  return false;
}

void inject_config(std::vector<std::string>& args,
                   const std::map<std::string, CLI::App*>& subcommands) {
  std::string config_path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      config_path = args[i + 1];
    } else if (args[i].rfind("--config=", 0) == 0) {
      config_path = args[i].substr(9);
    }
  }
  if (config_path.empty()) return;

  CLI::App* sub = nullptr;
  for (std::size_t i = 0; i < args.size() && sub == nullptr; ++i) {
    if (args[i] == "--config") {
      ++i;  // skip the file argument
      continue;
    }
    const auto it = subcommands.find(args[i]);
    if (it != subcommands.end()) sub = it->second;
  }
  if (sub == nullptr) return;

  for (const auto& [key, value] : load_config(config_path)) {
    const std::string flag = "--" + key;
    if (sub->get_option_no_throw(flag) == nullptr) continue;
    if (arg_present(args, flag)) continue;
    args.push_back(flag + "=" + value);
  }
}

// ---------------------------------------------------------------------------
// Small shared helpers.

std::set<std::string> parse_label_set(const std::string& csv, const char* what) {
  std::set<std::string> labels;
  for (const std::string& piece : treeswap::split(csv, ',')) {
    std::string label(treeswap::trim(piece));
    if (!label.empty()) labels.insert(std::move(label));
  }
  if (labels.empty()) {
    throw treeswap::DataError(std::string(what) + " must name at least one label");
  }
  return labels;
}

std::string join_labels(const std::set<std::string>& labels) {
  std::vector<std::string> parts(labels.begin(), labels.end());
  return treeswap::join(parts, ",");
}

std::vector<double> parse_grid(const std::string& csv) {
  std::vector<double> grid;
  for (const std::string& piece : treeswap::split(csv, ',')) {
    const std::string_view token = treeswap::trim(piece);
    if (token.empty()) continue;
    const std::optional<double> value = treeswap::parse_double(token);
    if (!value) {
      throw treeswap::DataError("bad grid value: " + std::string(token));
    }
    grid.push_back(*value);
  }
  if (grid.empty()) throw treeswap::DataError("the threshold grid is empty");
  return grid;
}

void write_tsv(const fs::path& path,
               const std::vector<std::vector<std::string>>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw treeswap::DataError("cannot open " + path.string() + " for writing");
  }
  for (const auto& row : rows) out << treeswap::join(row, "\t") << '\n';
  out.flush();
  if (!out) throw treeswap::DataError("failed writing " + path.string());
}

std::string doc_line(const treeswap::SentencePair& pair) {
  if (pair.subcorpus.empty()) return pair.doc_id;
  return pair.doc_id + "\t" + pair.subcorpus;
}

treeswap::LabelConfig make_labels(const std::string& subject_csv,
                                  const std::string& object_csv,
                                  bool require_root) {
  treeswap::LabelConfig labels;
  labels.subject_labels = parse_label_set(subject_csv, "subject-labels");
  labels.object_labels = parse_label_set(object_csv, "object-labels");
  labels.require_root_predicate = require_root;
  return labels;
}

void stamp_labels(treeswap::Manifest& manifest,
                  const treeswap::LabelConfig& labels) {
  manifest.set("subject-labels", join_labels(labels.subject_labels));
  manifest.set("object-labels", join_labels(labels.object_labels));
  manifest.set("require-root-predicate",
               labels.require_root_predicate ? "true" : "false");
}

// ---------------------------------------------------------------------------
// cache: CoNLL-U in, token-level TSV parse cache out.

struct CacheOpts {
  std::string src_conllu, tgt_conllu, out;
  std::string doc_id;
  std::string docs;
};

void run_cache(const CacheOpts& o) {
  std::vector<treeswap::Sentence> src = treeswap::parse_conllu_file(o.src_conllu);
  std::vector<treeswap::Sentence> tgt = treeswap::parse_conllu_file(o.tgt_conllu);
  if (src.size() != tgt.size()) {
    throw treeswap::AlignmentError(
        "sentence counts differ: " + o.src_conllu + " has " +
        std::to_string(src.size()) + ", " + o.tgt_conllu + " has " +
        std::to_string(tgt.size()));
  }

  std::vector<treeswap::DocEntry> docs;
  if (!o.docs.empty()) {
    docs = treeswap::read_docs_file(o.docs);
    if (docs.size() != src.size()) {
      throw treeswap::AlignmentError("docs file has " +
                                     std::to_string(docs.size()) +
                                     " lines for " +
                                     std::to_string(src.size()) + " pairs");
    }
  }
  const std::string fallback_doc =
      o.doc_id.empty() ? fs::path(o.src_conllu).stem().string() : o.doc_id;

  std::vector<treeswap::TsvEntry> entries;
  entries.reserve(src.size() * 2);
  for (std::size_t i = 0; i < src.size(); ++i) {
    const std::string& doc = docs.empty() ? fallback_doc : docs[i].doc_id;
    std::string pair_id = doc + ":" + std::to_string(i);
    entries.push_back({pair_id, treeswap::Side::Src, std::move(src[i])});
    entries.push_back({std::move(pair_id), treeswap::Side::Tgt, std::move(tgt[i])});
  }
  treeswap::write_tsv_cache_file(entries, o.out);

  treeswap::Manifest manifest;
  manifest.set("stage", "cache");
  manifest.set("doc-id", fallback_doc);
  manifest.set("pairs", static_cast<std::uint64_t>(src.size()));
  manifest.set_digest("digest:src-conllu", o.src_conllu);
  manifest.set_digest("digest:tgt-conllu", o.tgt_conllu);
  if (!o.docs.empty()) manifest.set_digest("digest:docs", o.docs);
  manifest.set_digest("digest:out", o.out);
  manifest.write(o.out + ".manifest");

  std::cout << "cached " << src.size() << " pairs -> " << o.out << "\n";
}

// ---------------------------------------------------------------------------
// clean: normalize a raw parallel corpus and apply the length filter.

struct CleanOpts {
  std::string src, tgt, out_src, out_tgt;
  std::string docs, out_docs;
  int max_words = 32;
  int max_word_diff = 7;
  double max_word_ratio = 1.6;
  bool no_filter = false;
};

void run_clean(const CleanOpts& o) {
  std::vector<treeswap::SentencePair> pairs =
      treeswap::read_parallel_text(o.src, o.tgt);
  if (!o.docs.empty()) {
    if (o.out_docs.empty()) {
      throw treeswap::DataError("--docs requires --out-docs");
    }
    treeswap::apply_docs(pairs, treeswap::read_docs_file(o.docs));
  }
  const treeswap::FilterConfig filter{o.max_words, o.max_word_diff,
                                      o.max_word_ratio};

  std::vector<treeswap::SentencePair> kept;
  std::size_t dropped_empty = 0;
  std::size_t dropped_filter = 0;
  for (treeswap::SentencePair& pair : pairs) {
    treeswap::CleanOutcome outcome = treeswap::clean_pair(std::move(pair));
    if (outcome.dropped) {
      ++dropped_empty;
      continue;
    }
    if (!o.no_filter && !treeswap::length_filter(outcome.pair, filter)) {
      ++dropped_filter;
      continue;
    }
    kept.push_back(std::move(outcome.pair));
  }

  treeswap::write_parallel_text(kept, o.out_src, o.out_tgt);
  if (!o.docs.empty()) {
    std::vector<std::string> lines;
    lines.reserve(kept.size());
    for (const treeswap::SentencePair& pair : kept) lines.push_back(doc_line(pair));
    treeswap::write_lines(lines, o.out_docs);
  }

  treeswap::Manifest manifest;
  manifest.set("stage", "clean");
  manifest.set("max-words", o.max_words);
  manifest.set("max-word-diff", o.max_word_diff);
  manifest.set("max-word-ratio", o.max_word_ratio);
  manifest.set("no-filter", o.no_filter ? "true" : "false");
  manifest.set("input", static_cast<std::uint64_t>(pairs.size()));
  manifest.set("dropped-empty", static_cast<std::uint64_t>(dropped_empty));
  manifest.set("dropped-filter", static_cast<std::uint64_t>(dropped_filter));
  manifest.set("kept", static_cast<std::uint64_t>(kept.size()));
  manifest.set_digest("digest:src", o.src);
  manifest.set_digest("digest:tgt", o.tgt);
  if (!o.docs.empty()) manifest.set_digest("digest:docs", o.docs);
  manifest.set_digest("digest:out-src", o.out_src);
  manifest.set_digest("digest:out-tgt", o.out_tgt);
  if (!o.out_docs.empty() && !o.docs.empty()) {
    manifest.set_digest("digest:out-docs", o.out_docs);
  }
  manifest.write(o.out_src + ".manifest");

  std::cout << "kept " << kept.size() << " of " << pairs.size() << " pairs ("
            << dropped_empty << " empty after cleaning, " << dropped_filter
            << " filtered)\n";
}

// ---------------------------------------------------------------------------
// stats: length distribution report.

struct StatsOpts {
  std::string src, tgt, out;
};

std::vector<std::string> stats_row(const char* name,
                                   const treeswap::SummaryStats& s) {
  return {name,
          std::to_string(s.count),
          fmt_num(s.min),
          fmt_num(s.max),
          fmt_num(s.mean),
          fmt_num(s.stdev),
          fmt_num(s.q25),
          fmt_num(s.q50),
          fmt_num(s.q75),
          fmt_num(s.q99),
          fmt_num(s.q999)};
}

void run_stats(const StatsOpts& o) {
  const std::vector<treeswap::SentencePair> pairs =
      treeswap::read_parallel_text(o.src, o.tgt);
  const treeswap::CorpusStats stats = treeswap::compute_stats(pairs);

  std::vector<std::vector<std::string>> rows;
  rows.push_back({"series", "count", "min", "max", "mean", "stdev", "q25",
                  "q50", "q75", "q99", "q999"});
  rows.push_back(stats_row("src-words", stats.src_words));
  rows.push_back(stats_row("tgt-words", stats.tgt_words));
  rows.push_back(stats_row("src-chars", stats.src_chars));
  rows.push_back(stats_row("tgt-chars", stats.tgt_chars));
  rows.push_back(stats_row("word-diff", stats.word_diff));
  rows.push_back(stats_row("char-diff", stats.char_diff));
  rows.push_back(stats_row("word-ratio", stats.word_ratio));
  rows.push_back(stats_row("char-ratio", stats.char_ratio));
  write_tsv(o.out, rows);

  treeswap::Manifest manifest;
  manifest.set("stage", "stats");
  manifest.set("pairs", static_cast<std::uint64_t>(pairs.size()));
  manifest.set_digest("digest:src", o.src);
  manifest.set_digest("digest:tgt", o.tgt);
  manifest.set_digest("digest:out", o.out);
  manifest.write(o.out + ".manifest");

  std::cout << "stats over " << pairs.size() << " pairs -> " << o.out << "\n";
}

// ---------------------------------------------------------------------------
// sweep: surviving fraction per filter threshold.

struct SweepOpts {
  std::string src, tgt, axis, grid, out;
  int max_words = 32;
  int max_word_diff = 7;
  double max_word_ratio = 1.6;
};

void run_sweep(const SweepOpts& o) {
  const std::optional<treeswap::SweepAxis> axis = treeswap::parse_sweep_axis(o.axis);
  if (!axis) throw treeswap::DataError("unknown sweep axis: " + o.axis);
  const std::vector<double> grid = parse_grid(o.grid);
  const std::vector<treeswap::SentencePair> pairs =
      treeswap::read_parallel_text(o.src, o.tgt);
  const treeswap::FilterConfig fixed{o.max_words, o.max_word_diff,
                                     o.max_word_ratio};
  const std::vector<treeswap::SweepPoint> points =
      treeswap::threshold_sweep(pairs, *axis, grid, fixed);

  std::vector<std::vector<std::string>> rows;
  rows.push_back({"threshold", "remaining-fraction"});
  for (const treeswap::SweepPoint& point : points) {
    rows.push_back({fmt_num(point.threshold), fmt_exact(point.remaining_fraction)});
  }
  write_tsv(o.out, rows);

  treeswap::Manifest manifest;
  manifest.set("stage", "sweep");
  manifest.set("axis", treeswap::to_string(*axis));
  manifest.set("grid", o.grid);
  manifest.set("max-words", o.max_words);
  manifest.set("max-word-diff", o.max_word_diff);
  manifest.set("max-word-ratio", o.max_word_ratio);
  manifest.set("pairs", static_cast<std::uint64_t>(pairs.size()));
  manifest.set_digest("digest:src", o.src);
  manifest.set_digest("digest:tgt", o.tgt);
  manifest.set_digest("digest:out", o.out);
  manifest.write(o.out + ".manifest");

  std::cout << "swept " << points.size() << " thresholds -> " << o.out << "\n";
}

// ---------------------------------------------------------------------------
// split: document-stratified train/val/test split.

struct SplitOpts {
  std::string src, tgt, docs, out_dir;
  std::string prefix = "corpus";
  std::string val, test;
  std::uint64_t seed = 0;
};

void run_split(const SplitOpts& o) {
  std::vector<treeswap::SentencePair> pairs =
      treeswap::read_parallel_text(o.src, o.tgt);
  if (!o.docs.empty()) {
    treeswap::apply_docs(pairs, treeswap::read_docs_file(o.docs));
  }
  std::vector<std::string> doc_ids;
  doc_ids.reserve(pairs.size());
  for (const treeswap::SentencePair& pair : pairs) doc_ids.push_back(pair.doc_id);

  treeswap::SplitSpec spec;
  spec.val_size = treeswap::SplitAmount::parse(o.val);
  spec.test_size = treeswap::SplitAmount::parse(o.test);
  spec.seed = o.seed;
  const treeswap::SplitResult result = treeswap::stratified_split(doc_ids, spec);

  fs::create_directories(o.out_dir);
  treeswap::Manifest manifest;
  manifest.set("stage", "split");
  manifest.set("seed", o.seed);
  manifest.set("val", o.val);
  manifest.set("test", o.test);
  manifest.set("prefix", o.prefix);
  manifest.set("pairs", static_cast<std::uint64_t>(pairs.size()));
  manifest.set_digest("digest:src", o.src);
  manifest.set_digest("digest:tgt", o.tgt);
  if (!o.docs.empty()) manifest.set_digest("digest:docs", o.docs);

  const auto emit = [&](const std::vector<std::size_t>& indices,
                        const char* part) {
    std::vector<treeswap::SentencePair> subset;
    subset.reserve(indices.size());
    for (const std::size_t i : indices) subset.push_back(pairs[i]);
    const fs::path base = fs::path(o.out_dir) / (o.prefix + "." + part);
    const std::string src_path = base.string() + ".src";
    const std::string tgt_path = base.string() + ".tgt";
    treeswap::write_parallel_text(subset, src_path, tgt_path);
    if (!o.docs.empty()) {
      std::vector<std::string> lines;
      lines.reserve(subset.size());
      for (const treeswap::SentencePair& pair : subset) {
        lines.push_back(doc_line(pair));
      }
      treeswap::write_lines(lines, base.string() + ".docs");
    }
    manifest.set(std::string(part), static_cast<std::uint64_t>(subset.size()));
    manifest.set_digest("digest:" + std::string(part) + "-src", src_path);
    manifest.set_digest("digest:" + std::string(part) + "-tgt", tgt_path);
  };
  emit(result.train, "train");
  emit(result.val, "val");
  emit(result.test, "test");

  manifest.write((fs::path(o.out_dir) / (o.prefix + ".manifest")).string());

  std::cout << "split " << pairs.size() << " pairs -> train "
            << result.train.size() << ", val " << result.val.size()
            << ", test " << result.test.size() << "\n";
}

// ---------------------------------------------------------------------------
// eligible: swap eligibility report over a parse cache.

struct EligibleOpts {
  std::string cache, out_eligible, out_rejections;
  std::string subject_labels = "nsubj";
  std::string object_labels = "obj,dobj";
  bool require_root = false;
};

std::string span_str(const treeswap::Span& span) {
  return std::to_string(span.start) + "-" + std::to_string(span.end);
}

void run_eligible(const EligibleOpts& o) {
  const std::vector<treeswap::ParsedPair> pairs =
      treeswap::assemble_pairs(treeswap::read_tsv_cache_file(o.cache));
  const treeswap::LabelConfig labels =
      make_labels(o.subject_labels, o.object_labels, o.require_root);
  const treeswap::FilterResult result = treeswap::filter_corpus(pairs, labels);

  std::vector<std::vector<std::string>> rows;
  rows.push_back({"pair_id", "src_subject", "src_object", "src_predicate",
                  "tgt_subject", "tgt_object", "tgt_predicate"});
  for (const treeswap::EligiblePair& e : result.eligible) {
    rows.push_back({e.pair.pair_id, span_str(e.src_triplet.subject_span),
                    span_str(e.src_triplet.object_span),
                    std::to_string(e.src_triplet.predicate),
                    span_str(e.tgt_triplet.subject_span),
                    span_str(e.tgt_triplet.object_span),
                    std::to_string(e.tgt_triplet.predicate)});
  }
  write_tsv(o.out_eligible, rows);

  rows.clear();
  rows.push_back({"reason", "count"});
  for (const auto& [reason, count] : result.rejections) {
    rows.push_back({reason, std::to_string(count)});
  }
  write_tsv(o.out_rejections, rows);

  treeswap::Manifest manifest;
  manifest.set("stage", "eligible");
  stamp_labels(manifest, labels);
  manifest.set("pairs", static_cast<std::uint64_t>(pairs.size()));
  manifest.set("eligible", static_cast<std::uint64_t>(result.eligible.size()));
  for (const auto& [reason, count] : result.rejections) {
    manifest.set("rejection:" + reason, static_cast<std::uint64_t>(count));
  }
  manifest.set_digest("digest:cache", o.cache);
  manifest.set_digest("digest:out-eligible", o.out_eligible);
  manifest.set_digest("digest:out-rejections", o.out_rejections);
  manifest.write(o.out_eligible + ".manifest");

  std::cout << "eligible " << result.eligible.size() << " / " << pairs.size()
            << " pairs\n";
}

// ---------------------------------------------------------------------------
// augment: synthetic pair generation, both the subtree-swap methods and the
// depth-weighted noising methods.

struct AugmentOpts {
  std::string method;
  std::string cache, train_src, train_tgt, out_dir;
  std::string prefix;
  double ratio = 0.5;
  std::uint64_t seed = 0;
  std::string subject_labels = "nsubj";
  std::string object_labels = "obj,dobj";
  bool require_root = false;
  bool no_case_adjust = false;
  bool no_pred_lemma_exchange = false;
  bool keep_noop = false;
  std::string select_mode = "fixed";
  double select_ratio = treeswap::kDefaultSelectRatio;
  std::string freq;
  int threads = 1;
};

void run_augment(const AugmentOpts& o) {
  const std::optional<treeswap::SwapMethod> swap_method =
      treeswap::parse_swap_method(o.method);
  const std::optional<treeswap::NoiseMethod> noise_method =
      treeswap::parse_noise_method(o.method);
  if (!swap_method && !noise_method) {
    throw treeswap::DataError("unknown method: " + o.method);
  }

  const std::vector<treeswap::ParsedPair> parsed =
      treeswap::assemble_pairs(treeswap::read_tsv_cache_file(o.cache));
  std::vector<treeswap::SentencePair> train =
      treeswap::read_parallel_text(o.train_src, o.train_tgt);

  fs::create_directories(o.out_dir);
  const std::string prefix = o.prefix.empty() ? o.method : o.prefix;
  const std::string base = (fs::path(o.out_dir) / prefix).string();

  treeswap::Manifest manifest;
  manifest.set("stage", "augment");
  manifest.set("method", o.method);
  manifest.set("ratio", o.ratio);
  manifest.set("seed", o.seed);
  manifest.set("threads", o.threads);
  manifest.set("prefix", prefix);
  manifest.set("base", static_cast<std::uint64_t>(train.size()));
  manifest.set_digest("digest:cache", o.cache);
  manifest.set_digest("digest:train-src", o.train_src);
  manifest.set_digest("digest:train-tgt", o.train_tgt);

  std::vector<treeswap::SentencePair> synthetic;
  std::vector<std::vector<std::string>> provenance;
  provenance.push_back({"pair_id", "method", "donor_a", "donor_b"});

  if (swap_method) {
    treeswap::AugmentConfig config;
    config.method = *swap_method;
    config.ratio = o.ratio;
    config.seed = o.seed;
    config.labels = make_labels(o.subject_labels, o.object_labels, o.require_root);
    config.swap.adjust_case = !o.no_case_adjust;
    config.swap.exchange_pred_lemma = !o.no_pred_lemma_exchange;
    config.skip_noop = !o.keep_noop;

    const treeswap::AugmentResult result =
        treeswap::augment_corpus(parsed, train.size(), config);
    synthetic.reserve(result.synthetic.size());
    for (const treeswap::SyntheticRecord& record : result.synthetic) {
      synthetic.push_back({record.pair.src_text, record.pair.tgt_text,
                           "aug:" + o.method, "synthetic", record.pair_id});
      provenance.push_back({record.pair_id,
                            treeswap::to_string(record.pair.method),
                            record.pair.donor_a, record.pair.donor_b});
    }

    stamp_labels(manifest, config.labels);
    manifest.set("case-adjust", config.swap.adjust_case ? "true" : "false");
    manifest.set("pred-lemma-exchange",
                 config.swap.exchange_pred_lemma ? "true" : "false");
    manifest.set("keep-noop", o.keep_noop ? "true" : "false");
    manifest.set("eligible", static_cast<std::uint64_t>(result.eligible_count));
    manifest.set("target", static_cast<std::uint64_t>(result.target));
    manifest.set("shortfall", static_cast<std::uint64_t>(result.shortfall));
    manifest.set("skipped-noop", static_cast<std::uint64_t>(result.skipped_noop));
    for (const auto& [reason, count] : result.rejections) {
      manifest.set("rejection:" + reason, static_cast<std::uint64_t>(count));
    }
  } else {
    treeswap::NoiseConfig config;
    config.method = *noise_method;
    const std::optional<treeswap::SelectMode> mode =
        treeswap::parse_select_mode(o.select_mode);
    if (!mode) throw treeswap::DataError("unknown select mode: " + o.select_mode);
    config.mode = *mode;
    config.select_ratio = o.select_ratio;
    config.ratio = o.ratio;
    config.seed = o.seed;

    std::optional<treeswap::FreqTable> freq;
    if (!o.freq.empty()) {
      std::ifstream in(o.freq, std::ios::binary);
      if (!in) throw treeswap::DataError("cannot open " + o.freq);
      freq = treeswap::FreqTable::read_tsv(in);
      manifest.set_digest("digest:freq", o.freq);
    } else if (config.method == treeswap::NoiseMethod::Replace) {
      std::vector<std::string> src_lines;
      src_lines.reserve(train.size());
      for (const treeswap::SentencePair& pair : train) src_lines.push_back(pair.src);
      freq = treeswap::FreqTable::from_lines(src_lines);
      const std::string freq_path = base + ".freq.tsv";
      std::ofstream out(freq_path, std::ios::binary);
      if (!out) {
        throw treeswap::DataError("cannot open " + freq_path + " for writing");
      }
      freq->write_tsv(out);
      out.flush();
      if (!out) throw treeswap::DataError("failed writing " + freq_path);
      manifest.set_digest("digest:freq", freq_path);
    }

    std::vector<std::string> raw_tgt;
    raw_tgt.reserve(train.size());
    for (const treeswap::SentencePair& pair : train) raw_tgt.push_back(pair.tgt);

    treeswap::NoiseResult result = treeswap::noise_corpus(
        parsed, raw_tgt, train.size(), config, freq ? &*freq : nullptr);
    synthetic = std::move(result.synthetic);
    for (const auto& [pair_id, origin] : result.provenance) {
      provenance.push_back({pair_id, o.method, origin, "-"});
    }

    manifest.set("select-mode", treeswap::to_string(config.mode));
    manifest.set("select-ratio", config.select_ratio);
    manifest.set("target", static_cast<std::uint64_t>(result.target));
    manifest.set("shortfall", static_cast<std::uint64_t>(result.shortfall));
    manifest.set("skipped-empty", static_cast<std::uint64_t>(result.skipped_empty));
  }

  const std::size_t produced = synthetic.size();
  manifest.set("produced", static_cast<std::uint64_t>(produced));

  treeswap::write_parallel_text(synthetic, base + ".aug.src", base + ".aug.tgt");
  write_tsv(base + ".provenance.tsv", provenance);
  treeswap::shuffle_into_training(train, std::move(synthetic), o.seed);
  treeswap::write_parallel_text(train, base + ".src", base + ".tgt");

  manifest.set_digest("digest:aug-src", base + ".aug.src");
  manifest.set_digest("digest:aug-tgt", base + ".aug.tgt");
  manifest.set_digest("digest:provenance", base + ".provenance.tsv");
  manifest.set_digest("digest:out-src", base + ".src");
  manifest.set_digest("digest:out-tgt", base + ".tgt");
  manifest.write(base + ".manifest");

  std::cout << "augment " << o.method << ": " << produced
            << " synthetic pairs, combined training set " << train.size()
            << " -> " << base << ".*\n";
}

// ---------------------------------------------------------------------------
// bleu: corpus BLEU of a hypothesis file against a reference file.

struct BleuOpts {
  std::string hyp, ref, out;
};

void run_bleu(const BleuOpts& o) {
  const std::vector<std::string> hyp_lines = treeswap::read_lines(o.hyp);
  const std::vector<std::string> ref_lines = treeswap::read_lines(o.ref);
  std::vector<std::vector<std::string>> hyps, refs;
  hyps.reserve(hyp_lines.size());
  refs.reserve(ref_lines.size());
  for (const std::string& line : hyp_lines) {
    hyps.push_back(treeswap::tokenize_for_bleu(line));
  }
  for (const std::string& line : ref_lines) {
    refs.push_back(treeswap::tokenize_for_bleu(line));
  }
  const treeswap::BleuReport report = treeswap::corpus_bleu(hyps, refs);

  char score[32];
  std::snprintf(score, sizeof score, "%.1f", report.bleu * 100.0);
  std::cout << "BLEU = " << score << "\n";

  std::vector<std::vector<std::string>> rows;
  rows.push_back({"metric", "value"});
  rows.push_back({"bleu", fmt_exact(report.bleu)});
  rows.push_back({"brevity-penalty", fmt_exact(report.brevity_penalty)});
  for (int n = 0; n < 4; ++n) {
    const std::string suffix = std::to_string(n + 1);
    rows.push_back({"precision-" + suffix, fmt_exact(report.precisions[n])});
    rows.push_back({"matched-" + suffix, std::to_string(report.matched[n])});
    rows.push_back({"total-" + suffix, std::to_string(report.total[n])});
  }
  rows.push_back({"hyp-length", std::to_string(report.hyp_length)});
  rows.push_back({"ref-length", std::to_string(report.ref_length)});
  rows.push_back({"segments", std::to_string(hyps.size())});

  if (o.out.empty()) {
    for (const auto& row : rows) std::cout << treeswap::join(row, "\t") << "\n";
  } else {
    write_tsv(o.out, rows);
    treeswap::Manifest manifest;
    manifest.set("stage", "bleu");
    manifest.set("segments", static_cast<std::uint64_t>(hyps.size()));
    manifest.set_digest("digest:hyp", o.hyp);
    manifest.set_digest("digest:ref", o.ref);
    manifest.set_digest("digest:out", o.out);
    manifest.write(o.out + ".manifest");
  }
}

// ---------------------------------------------------------------------------
// inspect: human-readable dump of cached pairs.

struct InspectOpts {
  std::string cache, pair_id;
  std::size_t limit = 10;
  std::string subject_labels = "nsubj";
  std::string object_labels = "obj,dobj";
  bool require_root = false;
};

void print_side(const treeswap::Sentence& sentence, treeswap::Side side) {
  std::cout << "  " << treeswap::to_string(side) << ": "
            << treeswap::linearize(sentence.tokens) << "\n";
  for (const treeswap::Token& token : sentence.tokens) {
    std::cout << "    " << token.id << "\t" << token.form << "\t" << token.lemma
              << "\t" << token.upos << "\t" << token.head << "\t"
              << token.deprel << (token.space_after ? "" : "\t[glued]")
              << "\n";
  }
}

void print_triplet(const char* side, const treeswap::Triplet& triplet) {
  std::cout << "  " << side << " triplet: subject " << span_str(triplet.subject_span)
            << ", object " << span_str(triplet.object_span) << ", predicate "
            << triplet.predicate << "\n";
}

void run_inspect(const InspectOpts& o) {
  const std::vector<treeswap::ParsedPair> pairs =
      treeswap::assemble_pairs(treeswap::read_tsv_cache_file(o.cache));
  const treeswap::LabelConfig labels =
      make_labels(o.subject_labels, o.object_labels, o.require_root);

  bool found = false;
  std::size_t shown = 0;
  for (const treeswap::ParsedPair& pair : pairs) {
    if (!o.pair_id.empty() && pair.pair_id != o.pair_id) continue;
    found = true;
    std::cout << "pair " << pair.pair_id << " (doc " << pair.doc_id << ")\n";
    print_side(pair.src, treeswap::Side::Src);
    print_side(pair.tgt, treeswap::Side::Tgt);
    const treeswap::CheckOutcome outcome = treeswap::check_pair(pair, labels);
    if (outcome.pair) {
      print_triplet("src", outcome.pair->src_triplet);
      print_triplet("tgt", outcome.pair->tgt_triplet);
    } else {
      std::cout << "  rejected: " << treeswap::to_string(outcome.rejection.side)
                << ":" << treeswap::to_string(outcome.rejection.reason) << "\n";
    }
    std::cout << "\n";
    ++shown;
    if (o.pair_id.empty() && shown >= o.limit) break;
  }
  if (!o.pair_id.empty() && !found) {
    throw treeswap::DataError("pair not found: " + o.pair_id);
  }
}

void add_label_options(CLI::App* sub, std::string& subject, std::string& object,
                       bool& require_root) {
  sub->add_option("--subject-labels", subject,
                  "comma-separated subject dependency labels");
  sub->add_option("--object-labels", object,
                  "comma-separated object dependency labels");
  sub->add_flag("--require-root-predicate", require_root,
                "only accept triplets whose predicate is the sentence root");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deterministic toolkit for dependency-parsed parallel corpora"};
  app.name("treeswap");
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path,
                 "key=value config file; command-line flags override it");

  std::map<std::string, CLI::App*> subs;

  auto cache_opts = std::make_shared<CacheOpts>();
  CLI::App* cache = app.add_subcommand(
      "cache", "parse CoNLL-U files into a token-level TSV cache");
  cache->add_option("--src-conllu", cache_opts->src_conllu, "source-side CoNLL-U file")
      ->required();
  cache->add_option("--tgt-conllu", cache_opts->tgt_conllu, "target-side CoNLL-U file")
      ->required();
  cache->add_option("--out", cache_opts->out, "output cache path")->required();
  cache->add_option("--doc-id", cache_opts->doc_id,
                    "document id for every pair (default: source file stem)");
  cache->add_option("--docs", cache_opts->docs,
                    "per-line document id file aligned with the sentences");
  cache->callback([cache_opts] {
    g_stage = "cache";
    run_cache(*cache_opts);
  });
  subs["cache"] = cache;

  auto clean_opts = std::make_shared<CleanOpts>();
  CLI::App* clean = app.add_subcommand(
      "clean", "normalize a parallel corpus and drop out-of-bounds pairs");
  clean->add_option("--src", clean_opts->src, "source text, one sentence per line")
      ->required();
  clean->add_option("--tgt", clean_opts->tgt, "target text, one sentence per line")
      ->required();
  clean->add_option("--out-src", clean_opts->out_src, "cleaned source output")
      ->required();
  clean->add_option("--out-tgt", clean_opts->out_tgt, "cleaned target output")
      ->required();
  clean->add_option("--docs", clean_opts->docs,
                    "per-line document id file aligned with the corpus");
  clean->add_option("--out-docs", clean_opts->out_docs,
                    "document id output for the kept pairs");
  clean->add_option("--max-words", clean_opts->max_words,
                    "keep pairs strictly shorter than this word count");
  clean->add_option("--max-word-diff", clean_opts->max_word_diff,
                    "length-difference bound of the filter");
  clean->add_option("--max-word-ratio", clean_opts->max_word_ratio,
                    "length-ratio bound of the filter");
  clean->add_flag("--no-filter", clean_opts->no_filter,
                  "normalize only, keep every non-empty pair");
  clean->callback([clean_opts] {
    g_stage = "clean";
    run_clean(*clean_opts);
  });
  subs["clean"] = clean;

  auto stats_opts = std::make_shared<StatsOpts>();
  CLI::App* stats = app.add_subcommand(
      "stats", "length distribution report over a parallel corpus");
  stats->add_option("--src", stats_opts->src, "source text")->required();
  stats->add_option("--tgt", stats_opts->tgt, "target text")->required();
  stats->add_option("--out", stats_opts->out, "output TSV path")->required();
  stats->callback([stats_opts] {
    g_stage = "stats";
    run_stats(*stats_opts);
  });
  subs["stats"] = stats;

  auto sweep_opts = std::make_shared<SweepOpts>();
  CLI::App* sweep = app.add_subcommand(
      "sweep", "surviving corpus fraction per filter threshold");
  sweep->add_option("--src", sweep_opts->src, "source text")->required();
  sweep->add_option("--tgt", sweep_opts->tgt, "target text")->required();
  sweep->add_option("--axis", sweep_opts->axis,
                    "max-words, ratio-fixed-count or ratio-fixed-diff")
      ->required();
  sweep->add_option("--grid", sweep_opts->grid,
                    "comma-separated thresholds to evaluate")
      ->required();
  sweep->add_option("--out", sweep_opts->out, "output TSV path")->required();
  sweep->add_option("--max-words", sweep_opts->max_words,
                    "fixed word-count bound for the ratio axes");
  sweep->add_option("--max-word-diff", sweep_opts->max_word_diff,
                    "fixed length-difference bound for ratio-fixed-diff");
  sweep->add_option("--max-word-ratio", sweep_opts->max_word_ratio,
                    "unused by the sweep axes; kept for config symmetry");
  sweep->callback([sweep_opts] {
    g_stage = "sweep";
    run_sweep(*sweep_opts);
  });
  subs["sweep"] = sweep;

  auto split_opts = std::make_shared<SplitOpts>();
  CLI::App* split = app.add_subcommand(
      "split", "document-stratified train/val/test split");
  split->add_option("--src", split_opts->src, "source text")->required();
  split->add_option("--tgt", split_opts->tgt, "target text")->required();
  split->add_option("--docs", split_opts->docs,
                    "per-line document id file aligned with the corpus");
  split->add_option("--val", split_opts->val,
                    "validation size: pair count, or fraction in [0,1]")
      ->required();
  split->add_option("--test", split_opts->test,
                    "test size: pair count, or fraction in [0,1]")
      ->required();
  split->add_option("--seed", split_opts->seed, "random seed");
  split->add_option("--out-dir", split_opts->out_dir, "output directory")
      ->required();
  split->add_option("--prefix", split_opts->prefix,
                    "output file prefix (default: corpus)");
  split->callback([split_opts] {
    g_stage = "split";
    run_split(*split_opts);
  });
  subs["split"] = split;

  auto eligible_opts = std::make_shared<EligibleOpts>();
  CLI::App* eligible = app.add_subcommand(
      "eligible", "swap eligibility report over a parse cache");
  eligible->add_option("--cache", eligible_opts->cache, "parse cache path")
      ->required();
  eligible->add_option("--out-eligible", eligible_opts->out_eligible,
                       "TSV of eligible pairs and their spans")
      ->required();
  eligible->add_option("--out-rejections", eligible_opts->out_rejections,
                       "TSV tally of rejection reasons")
      ->required();
  add_label_options(eligible, eligible_opts->subject_labels,
                    eligible_opts->object_labels, eligible_opts->require_root);
  eligible->callback([eligible_opts] {
    g_stage = "eligible";
    run_eligible(*eligible_opts);
  });
  subs["eligible"] = eligible;

  auto augment_opts = std::make_shared<AugmentOpts>();
  CLI::App* augment = app.add_subcommand(
      "augment", "generate synthetic pairs and mix them into the training set");
  augment->add_option("--method", augment_opts->method,
                      "obj, subj, obj-lemma, subj-lemma, pred, blank, dropout "
                      "or replace")
      ->required();
  augment->add_option("--cache", augment_opts->cache, "parse cache path")
      ->required();
  augment->add_option("--train-src", augment_opts->train_src,
                      "training source text")
      ->required();
  augment->add_option("--train-tgt", augment_opts->train_tgt,
                      "training target text")
      ->required();
  augment->add_option("--out-dir", augment_opts->out_dir, "output directory")
      ->required();
  augment->add_option("--prefix", augment_opts->prefix,
                      "output file prefix (default: the method name)");
  augment->add_option("--ratio", augment_opts->ratio,
                      "synthetic pairs per training pair");
  augment->add_option("--seed", augment_opts->seed, "random seed");
  add_label_options(augment, augment_opts->subject_labels,
                    augment_opts->object_labels, augment_opts->require_root);
  augment->add_flag("--no-case-adjust", augment_opts->no_case_adjust,
                    "keep first-token casing as-is after a swap");
  augment->add_flag("--no-pred-lemma-exchange",
                    augment_opts->no_pred_lemma_exchange,
                    "swap only the predicate form, not its lemma");
  augment->add_flag("--keep-noop", augment_opts->keep_noop,
                    "keep synthetic pairs identical to their donors");
  augment->add_option("--select-mode", augment_opts->select_mode,
                      "noising selection: fixed or bernoulli");
  augment->add_option("--select-ratio", augment_opts->select_ratio,
                      "fixed-mode fraction of tokens to noise");
  augment->add_option("--freq", augment_opts->freq,
                      "frequency table TSV for the replace method "
                      "(default: built from the training source)");
  augment->add_option("--threads", augment_opts->threads,
                      "reserved; outputs are independent of thread count")
      ->check(CLI::PositiveNumber);
  augment->callback([augment_opts] {
    g_stage = "augment";
    run_augment(*augment_opts);
  });
  subs["augment"] = augment;

  auto bleu_opts = std::make_shared<BleuOpts>();
  CLI::App* bleu = app.add_subcommand(
      "bleu", "corpus BLEU of a hypothesis file against a reference file");
  bleu->add_option("--hyp", bleu_opts->hyp, "hypothesis text, one per line")
      ->required();
  bleu->add_option("--ref", bleu_opts->ref, "reference text, one per line")
      ->required();
  bleu->add_option("--out", bleu_opts->out,
                   "report TSV path (default: print to stdout)");
  bleu->callback([bleu_opts] {
    g_stage = "bleu";
    run_bleu(*bleu_opts);
  });
  subs["bleu"] = bleu;

  auto inspect_opts = std::make_shared<InspectOpts>();
  CLI::App* inspect = app.add_subcommand(
      "inspect", "human-readable dump of cached pairs");
  inspect->add_option("--cache", inspect_opts->cache, "parse cache path")
      ->required();
  inspect->add_option("--pair-id", inspect_opts->pair_id,
                      "show only this pair");
  inspect->add_option("--limit", inspect_opts->limit,
                      "number of pairs to show (default: 10)");
  add_label_options(inspect, inspect_opts->subject_labels,
                    inspect_opts->object_labels, inspect_opts->require_root);
  inspect->callback([inspect_opts] {
    g_stage = "inspect";
    run_inspect(*inspect_opts);
  });
  subs["inspect"] = inspect;

  for (auto& [name, sub] : subs) sub->fallthrough();

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    inject_config(args, subs);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const treeswap::Error& e) {
    std::cerr << "treeswap: " << g_stage << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "treeswap: " << g_stage << ": " << e.what() << "\n";
    return 2;
  }
  return 0;
}
