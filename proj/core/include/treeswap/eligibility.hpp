#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "treeswap/deptree.hpp"
#include "treeswap/types.hpp"

namespace treeswap {

struct LabelConfig {
  std::set<std::string> subject_labels{"nsubj"};
  std::set<std::string> object_labels{"obj", "dobj"};
  // When set, the shared head of the two edges must be the sentence root.
  bool require_root_predicate = false;
};

enum class RejectReason {
  MissingSubject,
  MultipleSubjects,
  MissingObject,
  MultipleObjects,
  PredicateMismatch,
  PredicateNotRoot,
  NonContiguousSubject,
  NonContiguousObject,
  OverlappingSpans,
};

const char* to_string(RejectReason reason);

// The anatomy a swap needs: one subject edge and one object edge hanging off
// the same predicate, each dependent's subtree occupying a contiguous span.
struct Triplet {
  int subject_head = 0;
  Span subject_span;
  int object_head = 0;
  Span object_span;
  int predicate = 0;

  bool operator==(const Triplet&) const = default;
};

// Either a triplet or the first failed condition, checked in order:
// subject edge count, object edge count, shared head, subject contiguity,
// object contiguity, span disjointness.
struct TripletOutcome {
  std::optional<Triplet> triplet;
  RejectReason reason{};
};

TripletOutcome find_triplet(const DepTree& tree, const LabelConfig& labels);

struct PairRejection {
  Side side = Side::Src;
  RejectReason reason{};
};

struct EligiblePair {
  ParsedPair pair;
  Triplet src_triplet;
  Triplet tgt_triplet;
};

struct CheckOutcome {
  std::optional<EligiblePair> pair;
  PairRejection rejection;  // valid when !pair; source side checked first
};

CheckOutcome check_pair(const ParsedPair& pair, const LabelConfig& labels);

struct FilterResult {
  std::vector<EligiblePair> eligible;                // corpus order
  std::map<std::string, std::size_t> rejections;     // "side:reason" → count
};

FilterResult filter_corpus(const std::vector<ParsedPair>& pairs,
                           const LabelConfig& labels);

}  // namespace treeswap
