#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "treeswap/deptree.hpp"
#include "treeswap/rng.hpp"
#include "treeswap/types.hpp"

namespace treeswap {

inline constexpr std::string_view kBlankToken = "BLANK";
inline constexpr double kDefaultSelectRatio = 0.15;

// Per-token selection chances: q_i = 1 - 1/2^(d_i - 1) with depth(root) = 1,
// so the root is never favored (q = 0) and deep tokens approach 1. p is the
// softmax of q and sums to 1.
struct SelectionModel {
  std::vector<int> depth;  // depth[i] is the depth of token id i+1
  std::vector<double> q;
  std::vector<double> p;
};

SelectionModel selection_probs(const DepTree& tree);

// max(1, round(ratio * n)): at least one token is always selected.
std::size_t default_select_count(std::size_t n, double ratio = kDefaultSelectRatio);

// `count` distinct token ids drawn without replacement proportionally to p,
// returned ascending. count must not exceed the sentence length.
std::vector<int> select_words(const SelectionModel& model, std::size_t count,
                              Rng& rng);

// Independent per-token draws with probability q_i (the root never selected).
std::vector<int> select_words_bernoulli(const SelectionModel& model, Rng& rng);

// Unigram counts over token forms. Serialized as TSV (word, count) sorted by
// count descending, then word ascending.
class FreqTable {
 public:
  void add(std::string_view word, std::uint64_t count = 1);

  static FreqTable from_sentences(std::span<const Sentence> sentences);
  static FreqTable from_lines(std::span<const std::string> lines);

  std::uint64_t count(std::string_view word) const;  // 0 when absent
  std::size_t size() const { return counts_.size(); }

  // The different word whose count is nearest to `word`'s (a word missing
  // from the table counts as 0); ties broken lexicographically. Throws
  // DataError when no alternative word exists.
  std::string nearest_different(std::string_view word) const;

  void write_tsv(std::ostream& out) const;
  static FreqTable read_tsv(std::istream& in);

 private:
  void build_index() const;

  std::map<std::string, std::uint64_t, std::less<>> counts_;
  mutable std::vector<std::pair<std::uint64_t, std::string_view>> by_count_;
  mutable bool index_valid_ = false;
};

// The noising outputs are tokenized text: forms joined by single spaces.
// Selected ids must be valid token ids of the sentence.
std::string apply_blank(const Sentence& sentence, std::span<const int> selected);
std::string apply_dropout(const Sentence& sentence, std::span<const int> selected);
std::string apply_replace(const Sentence& sentence, std::span<const int> selected,
                          const FreqTable& freq);

}  // namespace treeswap
