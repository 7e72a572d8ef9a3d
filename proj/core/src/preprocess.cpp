#include "treeswap/preprocess.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "treeswap/error.hpp"
#include "treeswap/strings.hpp"
#include "treeswap/utf8.hpp"

namespace treeswap {
namespace {

// Straight and typographic quotation marks, as UTF-8 byte strings.
constexpr std::string_view kQuotes[] = {
    "\"", "'", "`",
    "‘", "’", "‚",  // ' ' ‚
    "“", "”", "„",  // " " „
    "«", "»",            // « »
    "‹", "›",            // ‹ ›
};

std::string replace_soft_hyphens(std::string_view s) {
  constexpr std::string_view kSoftHyphen = "­";
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (s.substr(i, kSoftHyphen.size()) == kSoftHyphen) {
      out += '-';
      i += kSoftHyphen.size();
    } else {
      out += s[i++];
    }
  }
  return out;
}

bool strip_one_quote(std::string_view& s) {
  bool changed = false;
  for (std::string_view quote : kQuotes) {
    if (s.substr(0, quote.size()) == quote) {
      s.remove_prefix(quote.size());
      changed = true;
    }
    if (s.size() >= quote.size() &&
        s.substr(s.size() - quote.size()) == quote) {
      s.remove_suffix(quote.size());
      changed = true;
    }
  }
  return changed;
}

std::string clean_side(std::string_view raw) {
  const std::string dehyphenated = replace_soft_hyphens(raw);
  std::string_view s = dehyphenated;
  while (true) {
    const std::string_view trimmed = trim(s);
    bool changed = trimmed.size() != s.size();
    s = trimmed;
    changed |= strip_one_quote(s);
    if (!changed) break;
  }
  return std::string(s);
}

double ratio_of(std::size_t a, std::size_t b) {
  const auto hi = static_cast<double>(std::max(a, b));
  const auto lo = static_cast<double>(std::min(a, b));
  return hi / lo;
}

}  // namespace

CleanOutcome clean_pair(SentencePair pair) {
  pair.src = clean_side(pair.src);
  pair.tgt = clean_side(pair.tgt);
  return {pair.src.empty() || pair.tgt.empty(), std::move(pair)};
}

std::size_t word_count(std::string_view text) {
  return split_whitespace(text).size();
}

std::size_t char_count(std::string_view text) { return codepoint_count(text); }

bool length_filter(const SentencePair& pair, const FilterConfig& config) {
  const std::size_t ws = word_count(pair.src);
  const std::size_t wt = word_count(pair.tgt);
  if (ws == 0 || wt == 0) return false;
  if (ws >= static_cast<std::size_t>(config.max_words) ||
      wt >= static_cast<std::size_t>(config.max_words)) {
    return false;
  }
  const std::size_t diff = ws > wt ? ws - wt : wt - ws;
  return diff < static_cast<std::size_t>(config.max_word_diff) ||
         ratio_of(ws, wt) < config.max_word_ratio;
}

SummaryStats summarize(std::vector<double> values) {
  if (values.empty()) {
    throw DataError("summary statistics over an empty series");
  }
  std::sort(values.begin(), values.end());
  SummaryStats stats;
  stats.count = values.size();
  stats.min = values.front();
  stats.max = values.back();

  double sum = 0;
  for (double v : values) sum += v;
  stats.mean = sum / static_cast<double>(values.size());

  double sq = 0;
  for (double v : values) sq += (v - stats.mean) * (v - stats.mean);
  stats.stdev = std::sqrt(sq / static_cast<double>(values.size()));

  const auto rank = [&](double q) {
    const auto n = static_cast<double>(values.size());
    const auto idx = static_cast<std::size_t>(std::ceil(q * n));
    return values[std::max<std::size_t>(idx, 1) - 1];
  };
  stats.q25 = rank(0.25);
  stats.q50 = rank(0.5);
  stats.q75 = rank(0.75);
  stats.q99 = rank(0.99);
  stats.q999 = rank(0.999);
  return stats;
}

CorpusStats compute_stats(std::span<const SentencePair> pairs) {
  if (pairs.empty()) throw DataError("statistics over an empty corpus");

  std::vector<double> sw, tw, sc, tc, wdiff, cdiff, wratio, cratio;
  for (const SentencePair& pair : pairs) {
    const std::size_t ws = word_count(pair.src);
    const std::size_t wt = word_count(pair.tgt);
    const std::size_t cs = char_count(pair.src);
    const std::size_t ct = char_count(pair.tgt);
    sw.push_back(static_cast<double>(ws));
    tw.push_back(static_cast<double>(wt));
    sc.push_back(static_cast<double>(cs));
    tc.push_back(static_cast<double>(ct));
    wdiff.push_back(static_cast<double>(ws > wt ? ws - wt : wt - ws));
    cdiff.push_back(static_cast<double>(cs > ct ? cs - ct : ct - cs));
    if (ws > 0 && wt > 0) wratio.push_back(ratio_of(ws, wt));
    if (cs > 0 && ct > 0) cratio.push_back(ratio_of(cs, ct));
  }

  CorpusStats stats;
  stats.src_words = summarize(std::move(sw));
  stats.tgt_words = summarize(std::move(tw));
  stats.src_chars = summarize(std::move(sc));
  stats.tgt_chars = summarize(std::move(tc));
  stats.word_diff = summarize(std::move(wdiff));
  stats.char_diff = summarize(std::move(cdiff));
  stats.word_ratio = summarize(std::move(wratio));
  stats.char_ratio = summarize(std::move(cratio));
  return stats;
}

std::optional<SweepAxis> parse_sweep_axis(std::string_view name) {
  if (name == "max-words") return SweepAxis::MaxWords;
  if (name == "ratio-fixed-count") return SweepAxis::RatioFixedCount;
  if (name == "ratio-fixed-diff") return SweepAxis::RatioFixedDiff;
  return std::nullopt;
}

const char* to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::MaxWords: return "max-words";
    case SweepAxis::RatioFixedCount: return "ratio-fixed-count";
    case SweepAxis::RatioFixedDiff: return "ratio-fixed-diff";
  }
  return "unknown";
}

std::vector<SweepPoint> threshold_sweep(std::span<const SentencePair> pairs,
                                        SweepAxis axis,
                                        std::span<const double> grid,
                                        const FilterConfig& fixed) {
  if (grid.empty()) throw DataError("threshold sweep with an empty grid");

  struct Lengths {
    std::size_t ws, wt;
  };
  std::vector<Lengths> lengths;
  lengths.reserve(pairs.size());
  for (const SentencePair& pair : pairs) {
    lengths.push_back({word_count(pair.src), word_count(pair.tgt)});
  }

  std::vector<SweepPoint> points;
  points.reserve(grid.size());
  for (double t : grid) {
    std::size_t kept = 0;
    for (const Lengths& len : lengths) {
      const bool nonzero = len.ws > 0 && len.wt > 0;
      if (!nonzero) continue;
      const std::size_t diff =
          len.ws > len.wt ? len.ws - len.wt : len.wt - len.ws;
      bool keep = false;
      switch (axis) {
        case SweepAxis::MaxWords:
          keep = static_cast<double>(len.ws) < t &&
                 static_cast<double>(len.wt) < t;
          break;
        case SweepAxis::RatioFixedCount:
          keep = len.ws < static_cast<std::size_t>(fixed.max_words) &&
                 len.wt < static_cast<std::size_t>(fixed.max_words) &&
                 ratio_of(len.ws, len.wt) < t;
          break;
        case SweepAxis::RatioFixedDiff:
          keep = diff < static_cast<std::size_t>(fixed.max_word_diff) ||
                 ratio_of(len.ws, len.wt) < t;
          break;
      }
      if (keep) ++kept;
    }
    const double fraction =
        pairs.empty() ? 1.0
                      : static_cast<double>(kept) / static_cast<double>(pairs.size());
    points.push_back({t, fraction});
  }
  return points;
}

}  // namespace treeswap
