#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "treeswap/eligibility.hpp"
#include "treeswap/rng.hpp"

namespace treeswap {

// Absolute pair count, or fraction of the corpus in [0, 1]. Text that parses
// as a plain integer means a count; anything else a fraction.
struct SplitAmount {
  double value = 0;
  bool is_fraction = true;

  std::size_t resolve(std::size_t corpus_size) const;
  static SplitAmount parse(std::string_view text);
};

struct SplitSpec {
  SplitAmount val_size;
  SplitAmount test_size;
  std::uint64_t seed = 0;
};

// Index lists in input order; together an exact partition of 0..n-1.
struct SplitResult {
  std::vector<std::size_t> train, val, test;
};

// Document-level stratified split: every document contributes to val/test
// proportionally to its share of the corpus, integerized by the largest-
// remainder method (ties broken by doc id ascending); members are drawn by a
// per-document shuffle seeded from (seed, doc id). The remainder is train.
SplitResult stratified_split(std::span<const std::string> doc_ids,
                             const SplitSpec& spec);

// Donor plan for the swap pipeline: disjoint unordered index pairs drawn
// uniformly without replacement from 0..eligible_count-1. Each donor pair
// yields two synthetic sentences, so ceil(target/2) pairs are drawn for a
// target of ceil(ratio * base_size); when 2*pairs exceeds the target the
// final sentence is trimmed downstream. A pool too small to meet the target
// is reported as shortfall rather than an error.
struct SwapPlan {
  std::vector<std::pair<std::size_t, std::size_t>> donors;
  std::size_t target = 0;
  std::size_t shortfall = 0;
};

SwapPlan plan_swaps(std::size_t eligible_count, std::size_t base_size,
                    double ratio, Rng& rng);

// Eligible pairs grouped by (src predicate lemma, tgt predicate lemma).
// std::map keeps the group order deterministic.
using LemmaKey = std::pair<std::string, std::string>;
using LemmaIndex = std::map<LemmaKey, std::vector<std::size_t>>;

LemmaIndex build_lemma_index(std::span<const EligiblePair> eligible);

// Draws `demand` donor pairs by round-robin over groups of size >= 2 in key
// order, taking one disjoint pair per group visit from a per-group shuffle,
// until the demand is met or every group is exhausted. An accept predicate
// may veto a draw; vetoed draws still consume their two members.
std::vector<std::pair<std::size_t, std::size_t>> sample_lemma_pairs(
    const LemmaIndex& index, std::size_t demand, Rng& rng,
    const std::function<bool(std::size_t, std::size_t)>& accept = {});

}  // namespace treeswap
