#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "treeswap/types.hpp"

namespace treeswap {

// The keep condition is, on whitespace word counts ws/wt:
//   0 < ws < max_words  ∧  0 < wt < max_words  ∧
//   (|ws - wt| < max_word_diff  ∨  max(ws,wt)/min(ws,wt) < max_word_ratio)
struct FilterConfig {
  int max_words = 32;
  int max_word_diff = 7;
  double max_word_ratio = 1.6;
};

// Normalizes one pair: soft hyphens (U+00AD) become "-", then leading and
// trailing whitespace and quotation marks (straight and typographic) are
// stripped to a fixpoint. A pair left empty on either side is dropped.
// Interior characters other than soft hyphens are never altered.
struct CleanOutcome {
  bool dropped = false;
  SentencePair pair;
};

CleanOutcome clean_pair(SentencePair pair);

bool length_filter(const SentencePair& pair, const FilterConfig& config);

std::size_t word_count(std::string_view text);
std::size_t char_count(std::string_view text);  // Unicode codepoints

// Nearest-rank quantiles: q(v) = sorted[ceil(v * N) - 1]. stdev is the
// population form, so a single value has stdev 0.
struct SummaryStats {
  std::size_t count = 0;
  double min = 0, max = 0, mean = 0, stdev = 0;
  double q25 = 0, q50 = 0, q75 = 0, q99 = 0, q999 = 0;
};

SummaryStats summarize(std::vector<double> values);

// Length distributions per side and unit, plus the pairwise |difference| and
// max/min ratio distributions. Ratio series cover only pairs with both
// counts > 0 (their count field says how many).
struct CorpusStats {
  SummaryStats src_words, tgt_words, src_chars, tgt_chars;
  SummaryStats word_diff, char_diff;
  SummaryStats word_ratio, char_ratio;
};

CorpusStats compute_stats(std::span<const SentencePair> pairs);

enum class SweepAxis {
  MaxWords,         // keep iff 0 < wc < t on both sides
  RatioFixedCount,  // keep iff 0 < wc < max_words and ratio < t
  RatioFixedDiff,   // keep iff 0 < wc and (diff < max_word_diff or ratio < t)
};

std::optional<SweepAxis> parse_sweep_axis(std::string_view name);
const char* to_string(SweepAxis axis);

struct SweepPoint {
  double threshold = 0;
  double remaining_fraction = 0;
};

// Surviving fraction per threshold. An empty corpus survives vacuously
// (fraction 1). The grid must be non-empty.
std::vector<SweepPoint> threshold_sweep(std::span<const SentencePair> pairs,
                                        SweepAxis axis,
                                        std::span<const double> grid,
                                        const FilterConfig& fixed = {});

}  // namespace treeswap
