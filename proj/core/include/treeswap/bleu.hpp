#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace treeswap {

struct BleuReport {
  double bleu = 0.0;
  double brevity_penalty = 1.0;
  std::array<double, 4> precisions{};
  std::array<std::uint64_t, 4> matched{};
  std::array<std::uint64_t, 4> total{};
  std::uint64_t hyp_length = 0;
  std::uint64_t ref_length = 0;
};

// Corpus-level BLEU over clipped 1..4-gram counts aggregated across all
// segments, with geometric-mean precision and the standard brevity penalty
// exp(1 - ref/hyp) applied when the hypotheses are shorter than the
// references. Any precision of zero zeroes the score.
BleuReport corpus_bleu(std::span<const std::vector<std::string>> hypotheses,
                       std::span<const std::vector<std::string>> references);

// Whitespace tokenization plus punctuation splitting: trailing . , ! ? ; :
// characters are peeled off one at a time as separate tokens, unless the
// token consists of punctuation only.
std::vector<std::string> tokenize_for_bleu(std::string_view text);

}  // namespace treeswap
