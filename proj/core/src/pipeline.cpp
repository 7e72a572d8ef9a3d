#include "treeswap/pipeline.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <iterator>
#include <numeric>

#include "treeswap/deptree.hpp"
#include "treeswap/error.hpp"
#include "treeswap/rng.hpp"
#include "treeswap/split.hpp"

namespace treeswap {

namespace {

std::size_t synthetic_target(double ratio, std::size_t base_size) {
  if (ratio <= 0.0) throw DataError("augmentation ratio must be positive");
  return static_cast<std::size_t>(
      std::ceil(ratio * static_cast<double>(base_size) - 1e-9));
}

bool is_noop(const AugmentedPair& out, const EligiblePair& host) {
  return out.src_text == linearize(host.pair.src.tokens) &&
         out.tgt_text == linearize(host.pair.tgt.tokens);
}

std::pair<AugmentedPair, AugmentedPair> run_swap(const EligiblePair& a,
                                                 const EligiblePair& b,
                                                 const AugmentConfig& config) {
  switch (config.method) {
    case SwapMethod::Obj:
      return swap_objects(a, b, config.swap, SwapMethod::Obj);
    case SwapMethod::ObjLemma:
      return swap_objects(a, b, config.swap, SwapMethod::ObjLemma);
    case SwapMethod::Subj:
      return swap_subjects(a, b, config.swap, SwapMethod::Subj);
    case SwapMethod::SubjLemma:
      return swap_subjects(a, b, config.swap, SwapMethod::SubjLemma);
    case SwapMethod::Pred:
      return swap_predicates(a, b, config.swap);
  }
  throw DataError("unknown swap method");
}

bool is_lemma_method(SwapMethod method) {
  return method == SwapMethod::ObjLemma || method == SwapMethod::SubjLemma;
}

}  // namespace

AugmentResult augment_corpus(const std::vector<ParsedPair>& parsed,
                             std::size_t base_size,
                             const AugmentConfig& config) {
  AugmentResult result;
  result.target = synthetic_target(config.ratio, base_size);

  FilterResult filtered = filter_corpus(parsed, config.labels);
  const std::vector<EligiblePair>& eligible = filtered.eligible;
  result.eligible_count = eligible.size();
  result.rejections = std::move(filtered.rejections);

  if (result.target == 0) return result;

  const Rng base(config.seed);
  std::vector<std::pair<std::size_t, std::size_t>> donors;
  if (is_lemma_method(config.method)) {
    std::function<bool(std::size_t, std::size_t)> accept;
    if (config.skip_noop) {
      accept = [&](std::size_t i, std::size_t j) {
        auto [first, second] = run_swap(eligible[i], eligible[j], config);
        if (is_noop(first, eligible[i]) && is_noop(second, eligible[j])) {
          result.skipped_noop += 2;
          return false;
        }
        return true;
      };
    }
    const LemmaIndex index = build_lemma_index(eligible);
    const std::size_t demand = (result.target + 1) / 2;
    Rng sampler_rng = base;
    donors = sample_lemma_pairs(index, demand, sampler_rng, accept);
  } else {
    Rng plan_rng = base.derive("plan");
    SwapPlan plan =
        plan_swaps(eligible.size(), base_size, config.ratio, plan_rng);
    donors = std::move(plan.donors);
  }

  for (const auto& [ia, ib] : donors) {
    if (result.synthetic.size() == result.target) break;
    auto [first, second] = run_swap(eligible[ia], eligible[ib], config);
    const std::array<std::pair<AugmentedPair*, const EligiblePair*>, 2> framed{
        {{&first, &eligible[ia]}, {&second, &eligible[ib]}}};
    for (auto [out, host] : framed) {
      if (result.synthetic.size() == result.target) break;
      if (config.skip_noop && is_noop(*out, *host)) {
        ++result.skipped_noop;
        continue;
      }
      SyntheticRecord record;
      record.pair_id = "aug:" + std::string(to_string(config.method)) + ":" +
                       std::to_string(result.synthetic.size());
      record.pair = std::move(*out);
      result.synthetic.push_back(std::move(record));
    }
  }
  result.shortfall = result.target - result.synthetic.size();
  return result;
}

const char* to_string(NoiseMethod method) {
  switch (method) {
    case NoiseMethod::Blank:
      return "blank";
    case NoiseMethod::Dropout:
      return "dropout";
    case NoiseMethod::Replace:
      return "replace";
  }
  return "?";
}

const char* to_string(SelectMode mode) {
  return mode == SelectMode::Fixed ? "fixed" : "bernoulli";
}

std::optional<NoiseMethod> parse_noise_method(std::string_view name) {
  if (name == "blank") return NoiseMethod::Blank;
  if (name == "dropout") return NoiseMethod::Dropout;
  if (name == "replace") return NoiseMethod::Replace;
  return std::nullopt;
}

std::optional<SelectMode> parse_select_mode(std::string_view name) {
  if (name == "fixed") return SelectMode::Fixed;
  if (name == "bernoulli") return SelectMode::Bernoulli;
  return std::nullopt;
}

NoiseResult noise_corpus(const std::vector<ParsedPair>& parsed,
                         std::span<const std::string> raw_tgt,
                         std::size_t base_size, const NoiseConfig& config,
                         const FreqTable* freq) {
  if (parsed.size() != raw_tgt.size()) {
    throw AlignmentError("parsed/raw target count mismatch: " +
                         std::to_string(parsed.size()) + " vs " +
                         std::to_string(raw_tgt.size()));
  }
  if (config.method == NoiseMethod::Replace && freq == nullptr) {
    throw DataError("replace noising requires a frequency table");
  }
  if (config.mode == SelectMode::Fixed &&
      (config.select_ratio <= 0.0 || config.select_ratio > 1.0)) {
    throw DataError("selection ratio must lie in (0, 1]");
  }

  NoiseResult result;
  result.target = synthetic_target(config.ratio, base_size);
  if (result.target == 0) return result;

  const Rng base(config.seed);
  std::vector<std::size_t> order(parsed.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng shuffle_rng = base.derive("noise");
  shuffle_rng.shuffle(order);

  const std::string method_name = to_string(config.method);
  for (std::size_t idx : order) {
    if (result.synthetic.size() == result.target) break;
    const ParsedPair& source = parsed[idx];
    const DepTree tree = DepTree::build(source.src);
    const SelectionModel model = selection_probs(tree);
    Rng rng = base.derive("noise-sent:" + source.pair_id);

    std::vector<int> selected;
    if (config.mode == SelectMode::Fixed) {
      selected = select_words(
          model, default_select_count(model.depth.size(), config.select_ratio),
          rng);
    } else {
      selected = select_words_bernoulli(model, rng);
    }

    std::string noised;
    switch (config.method) {
      case NoiseMethod::Blank:
        noised = apply_blank(source.src, selected);
        break;
      case NoiseMethod::Dropout:
        noised = apply_dropout(source.src, selected);
        break;
      case NoiseMethod::Replace:
        noised = apply_replace(source.src, selected, *freq);
        break;
    }
    if (config.method == NoiseMethod::Dropout && noised.empty()) {
      ++result.skipped_empty;
      continue;
    }

    SentencePair out;
    out.pair_id = "aug:" + method_name + ":" +
                  std::to_string(result.synthetic.size());
    out.doc_id = "aug:" + method_name;
    out.subcorpus = "synthetic";
    out.src = std::move(noised);
    out.tgt = std::string(raw_tgt[idx]);
    result.provenance.emplace_back(out.pair_id, source.pair_id);
    result.synthetic.push_back(std::move(out));
  }
  result.shortfall = result.target - result.synthetic.size();
  return result;
}

void shuffle_into_training(std::vector<SentencePair>& train,
                           std::vector<SentencePair> synthetic,
                           std::uint64_t seed) {
  train.reserve(train.size() + synthetic.size());
  std::move(synthetic.begin(), synthetic.end(), std::back_inserter(train));
  Rng rng = Rng(seed).derive("shuffle");
  rng.shuffle(train);
}

}  // namespace treeswap
