#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "treeswap/eligibility.hpp"
#include "treeswap/noise.hpp"
#include "treeswap/swap.hpp"
#include "treeswap/types.hpp"

namespace treeswap {

// ---------------------------------------------------------------------------
// Subtree-swap augmentation.

struct AugmentConfig {
  SwapMethod method = SwapMethod::Obj;
  double ratio = 0.5;  // synthetic target = ceil(ratio * base_size)
  std::uint64_t seed = 0;
  LabelConfig labels;
  SwapOptions swap;
  // Drop synthetic pairs whose surface text reproduces the frame donor on
  // both sides (possible when the exchanged material happens to coincide).
  bool skip_noop = true;
};

struct SyntheticRecord {
  std::string pair_id;  // "aug:<method>:<k>", k counting from 0
  AugmentedPair pair;
};

struct AugmentResult {
  std::vector<SyntheticRecord> synthetic;         // at most `target` records
  std::size_t target = 0;
  std::size_t shortfall = 0;                      // target - synthetic.size()
  std::size_t eligible_count = 0;
  std::size_t skipped_noop = 0;
  std::map<std::string, std::size_t> rejections;  // "side:reason" → count
};

// Runs the full swap pipeline over a parsed corpus: eligibility filtering,
// donor planning (uniform pairing, or same-predicate-lemma grouping for the
// lemma methods), swapping, no-op skipping, and trimming to the target.
AugmentResult augment_corpus(const std::vector<ParsedPair>& parsed,
                             std::size_t base_size,
                             const AugmentConfig& config);

// ---------------------------------------------------------------------------
// Depth-weighted noising over the source side.

enum class NoiseMethod { Blank, Dropout, Replace };
enum class SelectMode { Fixed, Bernoulli };

const char* to_string(NoiseMethod method);
const char* to_string(SelectMode mode);
std::optional<NoiseMethod> parse_noise_method(std::string_view name);
std::optional<SelectMode> parse_select_mode(std::string_view name);

struct NoiseConfig {
  NoiseMethod method = NoiseMethod::Blank;
  SelectMode mode = SelectMode::Fixed;
  double select_ratio = kDefaultSelectRatio;  // fixed mode: max(1, round(r*n))
  double ratio = 0.5;  // synthetic target = ceil(ratio * base_size)
  std::uint64_t seed = 0;
};

struct NoiseResult {
  std::vector<SentencePair> synthetic;  // src noised, tgt verbatim
  // synthetic pair_id → pair_id of the sentence it was noised from
  std::vector<std::pair<std::string, std::string>> provenance;
  std::size_t target = 0;
  std::size_t shortfall = 0;
  std::size_t skipped_empty = 0;  // dropout left nothing behind
};

// Draws candidates without replacement in a seed-derived shuffle order and
// noises each source sentence with its own "noise-sent:<pair_id>" stream, so
// a pair's noise is independent of corpus order. raw_tgt[i] is pair i's
// original target text, copied into the synthetic pair verbatim. The replace
// method requires a frequency table.
NoiseResult noise_corpus(const std::vector<ParsedPair>& parsed,
                         std::span<const std::string> raw_tgt,
                         std::size_t base_size, const NoiseConfig& config,
                         const FreqTable* freq = nullptr);

// ---------------------------------------------------------------------------

// Appends the synthetic pairs to the training set, then shuffles the whole
// set with the "shuffle" stream of `seed`.
void shuffle_into_training(std::vector<SentencePair>& train,
                           std::vector<SentencePair> synthetic,
                           std::uint64_t seed);

}  // namespace treeswap
