#include "treeswap/split.hpp"

#include <algorithm>
#include <cmath>

#include "treeswap/error.hpp"
#include "treeswap/strings.hpp"

namespace treeswap {

std::size_t SplitAmount::resolve(std::size_t corpus_size) const {
  if (!is_fraction) {
    if (value < 0) throw DataError("negative split size");
    return static_cast<std::size_t>(value);
  }
  if (value < 0.0 || value > 1.0) {
    throw DataError("split fraction must lie in [0, 1]");
  }
  return static_cast<std::size_t>(
      std::llround(value * static_cast<double>(corpus_size)));
}

SplitAmount SplitAmount::parse(std::string_view text) {
  if (const auto count = parse_int(text)) {
    return {static_cast<double>(*count), false};
  }
  const auto fraction = parse_double(text);
  if (!fraction) throw DataError("unparseable split size '" + std::string(text) + "'");
  return {*fraction, true};
}

namespace {

struct DocBucket {
  std::string id;
  std::vector<std::size_t> members;  // input order
};

// Largest-remainder allocation of `total` units over docs, proportional to
// original doc sizes but capped by per-doc capacity. Ties on the fractional
// part fall back to doc order (ids ascending).
std::vector<std::size_t> allocate(const std::vector<DocBucket>& docs,
                                  const std::vector<std::size_t>& capacity,
                                  std::size_t corpus_size, std::size_t total) {
  const std::size_t n = docs.size();
  std::vector<std::size_t> alloc(n, 0);
  std::vector<double> fraction(n, 0.0);
  std::size_t assigned = 0;

  for (std::size_t d = 0; d < n; ++d) {
    const double quota = static_cast<double>(total) *
                         static_cast<double>(docs[d].members.size()) /
                         static_cast<double>(corpus_size);
    const double base = std::floor(quota);
    alloc[d] = std::min(static_cast<std::size_t>(base), capacity[d]);
    fraction[d] = quota - base;
    assigned += alloc[d];
  }

  std::vector<std::size_t> order(n);
  for (std::size_t d = 0; d < n; ++d) order[d] = d;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return fraction[a] > fraction[b];
  });

  while (assigned < total) {
    bool progressed = false;
    for (std::size_t d : order) {
      if (assigned == total) break;
      if (alloc[d] < capacity[d]) {
        ++alloc[d];
        ++assigned;
        progressed = true;
      }
    }
    if (!progressed) {
      throw DataError("split sizes exceed corpus capacity");
    }
  }
  return alloc;
}

}  // namespace

SplitResult stratified_split(std::span<const std::string> doc_ids,
                             const SplitSpec& spec) {
  const std::size_t n = doc_ids.size();
  const std::size_t val_total = spec.val_size.resolve(n);
  const std::size_t test_total = spec.test_size.resolve(n);
  if (val_total + test_total > n) {
    throw DataError("requested val+test size " +
                    std::to_string(val_total + test_total) +
                    " exceeds corpus size " + std::to_string(n));
  }

  std::map<std::string, std::vector<std::size_t>> grouped;
  for (std::size_t i = 0; i < n; ++i) grouped[doc_ids[i]].push_back(i);
  std::vector<DocBucket> docs;
  docs.reserve(grouped.size());
  for (auto& [id, members] : grouped) {
    docs.push_back({id, std::move(members)});
  }

  std::vector<std::size_t> capacity;
  capacity.reserve(docs.size());
  for (const DocBucket& doc : docs) capacity.push_back(doc.members.size());
  const std::vector<std::size_t> val_alloc =
      n == 0 ? std::vector<std::size_t>{}
             : allocate(docs, capacity, n, val_total);
  for (std::size_t d = 0; d < docs.size(); ++d) capacity[d] -= val_alloc[d];
  const std::vector<std::size_t> test_alloc =
      n == 0 ? std::vector<std::size_t>{}
             : allocate(docs, capacity, n, test_total);

  const Rng base(spec.seed);
  SplitResult result;
  for (std::size_t d = 0; d < docs.size(); ++d) {
    std::vector<std::size_t> members = docs[d].members;
    Rng rng = base.derive("split:" + docs[d].id);
    rng.shuffle(members);
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i < val_alloc[d]) {
        result.val.push_back(members[i]);
      } else if (i < val_alloc[d] + test_alloc[d]) {
        result.test.push_back(members[i]);
      } else {
        result.train.push_back(members[i]);
      }
    }
  }
  std::sort(result.train.begin(), result.train.end());
  std::sort(result.val.begin(), result.val.end());
  std::sort(result.test.begin(), result.test.end());
  return result;
}

SwapPlan plan_swaps(std::size_t eligible_count, std::size_t base_size,
                    double ratio, Rng& rng) {
  if (ratio <= 0.0) throw DataError("augmentation ratio must be positive");
  if (eligible_count < 2) {
    throw DataError("need at least 2 eligible pairs to plan swaps, have " +
                    std::to_string(eligible_count));
  }

  SwapPlan plan;
  plan.target = static_cast<std::size_t>(
      std::ceil(ratio * static_cast<double>(base_size) - 1e-9));
  const std::size_t want = (plan.target + 1) / 2;
  const std::size_t available = eligible_count / 2;
  const std::size_t draws = std::min(want, available);

  std::vector<std::size_t> indices(eligible_count);
  for (std::size_t i = 0; i < eligible_count; ++i) indices[i] = i;
  rng.shuffle(indices);

  plan.donors.reserve(draws);
  for (std::size_t i = 0; i < draws; ++i) {
    plan.donors.emplace_back(indices[2 * i], indices[2 * i + 1]);
  }
  const std::size_t produced = 2 * draws;
  plan.shortfall = plan.target > produced ? plan.target - produced : 0;
  return plan;
}

LemmaIndex build_lemma_index(std::span<const EligiblePair> eligible) {
  LemmaIndex index;
  for (std::size_t i = 0; i < eligible.size(); ++i) {
    const EligiblePair& pair = eligible[i];
    LemmaKey key{
        pair.pair.src.tokens[pair.src_triplet.predicate - 1].lemma,
        pair.pair.tgt.tokens[pair.tgt_triplet.predicate - 1].lemma,
    };
    index[std::move(key)].push_back(i);
  }
  return index;
}

std::vector<std::pair<std::size_t, std::size_t>> sample_lemma_pairs(
    const LemmaIndex& index, std::size_t demand, Rng& rng,
    const std::function<bool(std::size_t, std::size_t)>& accept) {
  struct Group {
    std::vector<std::size_t> members;
    std::size_t cursor = 0;
  };
  std::vector<Group> groups;
  for (const auto& [key, members] : index) {
    if (members.size() < 2) continue;
    Group group;
    group.members = members;
    Rng group_rng =
        rng.derive("lemma:" + key.first + "\x1f" + key.second);
    group_rng.shuffle(group.members);
    groups.push_back(std::move(group));
  }
  if (groups.empty()) {
    throw DataError("no lemma group holds two or more eligible pairs");
  }

  std::vector<std::pair<std::size_t, std::size_t>> drawn;
  bool any_left = true;
  while (drawn.size() < demand && any_left) {
    any_left = false;
    for (Group& group : groups) {
      if (drawn.size() == demand) break;
      if (group.members.size() - group.cursor < 2) continue;
      const std::size_t a = group.members[group.cursor];
      const std::size_t b = group.members[group.cursor + 1];
      group.cursor += 2;
      any_left = true;
      if (!accept || accept(a, b)) drawn.emplace_back(a, b);
    }
  }
  return drawn;
}

}  // namespace treeswap
