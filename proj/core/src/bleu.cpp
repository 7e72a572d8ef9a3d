#include "treeswap/bleu.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "treeswap/error.hpp"
#include "treeswap/strings.hpp"

namespace treeswap {

namespace {

using NgramCounts = std::map<std::vector<std::string>, std::uint64_t>;

NgramCounts count_ngrams(const std::vector<std::string>& tokens,
                         std::size_t n) {
  NgramCounts counts;
  if (tokens.size() < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::vector<std::string> gram(tokens.begin() + i, tokens.begin() + i + n);
    ++counts[std::move(gram)];
  }
  return counts;
}

bool is_split_punct(char c) {
  return c == '.' || c == ',' || c == '!' || c == '?' || c == ';' || c == ':';
}

bool all_split_punct(std::string_view token) {
  return std::all_of(token.begin(), token.end(), is_split_punct);
}

}  // namespace

BleuReport corpus_bleu(std::span<const std::vector<std::string>> hypotheses,
                       std::span<const std::vector<std::string>> references) {
  if (hypotheses.size() != references.size()) {
    throw AlignmentError("hypothesis/reference count mismatch: " +
                         std::to_string(hypotheses.size()) + " vs " +
                         std::to_string(references.size()));
  }
  if (hypotheses.empty()) throw DataError("empty corpus for BLEU");

  BleuReport report;
  for (std::size_t i = 0; i < hypotheses.size(); ++i) {
    const auto& hyp = hypotheses[i];
    const auto& ref = references[i];
    report.hyp_length += hyp.size();
    report.ref_length += ref.size();
    for (std::size_t n = 1; n <= 4; ++n) {
      const NgramCounts hyp_counts = count_ngrams(hyp, n);
      const NgramCounts ref_counts = count_ngrams(ref, n);
      for (const auto& [gram, count] : hyp_counts) {
        const auto it = ref_counts.find(gram);
        const std::uint64_t clip = it == ref_counts.end() ? 0 : it->second;
        report.matched[n - 1] += std::min(count, clip);
      }
      if (hyp.size() + 1 > n) report.total[n - 1] += hyp.size() + 1 - n;
    }
  }

  double log_sum = 0.0;
  bool any_zero = false;
  for (std::size_t n = 0; n < 4; ++n) {
    report.precisions[n] =
        report.total[n] == 0
            ? 0.0
            : static_cast<double>(report.matched[n]) /
                  static_cast<double>(report.total[n]);
    if (report.precisions[n] == 0.0) {
      any_zero = true;
    } else {
      log_sum += std::log(report.precisions[n]);
    }
  }

  report.brevity_penalty =
      (report.hyp_length > 0 && report.hyp_length < report.ref_length)
          ? std::exp(1.0 - static_cast<double>(report.ref_length) /
                               static_cast<double>(report.hyp_length))
          : 1.0;
  report.bleu =
      any_zero ? 0.0 : report.brevity_penalty * std::exp(log_sum / 4.0);
  return report;
}

std::vector<std::string> tokenize_for_bleu(std::string_view text) {
  std::vector<std::string> tokens;
  for (std::string_view raw : split_whitespace(text)) {
    std::vector<char> peeled;
    while (raw.size() > 1 && is_split_punct(raw.back()) &&
           !all_split_punct(raw)) {
      peeled.push_back(raw.back());
      raw.remove_suffix(1);
    }
    tokens.emplace_back(raw);
    for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
      tokens.emplace_back(1, *it);
    }
  }
  return tokens;
}

}  // namespace treeswap
