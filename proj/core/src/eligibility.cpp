#include "treeswap/eligibility.hpp"

#include "treeswap/error.hpp"

namespace treeswap {

const char* to_string(RejectReason reason) {
  switch (reason) {
    case RejectReason::MissingSubject: return "missing-subject";
    case RejectReason::MultipleSubjects: return "multiple-subjects";
    case RejectReason::MissingObject: return "missing-object";
    case RejectReason::MultipleObjects: return "multiple-objects";
    case RejectReason::PredicateMismatch: return "predicate-mismatch";
    case RejectReason::PredicateNotRoot: return "predicate-not-root";
    case RejectReason::NonContiguousSubject: return "non-contiguous-subject";
    case RejectReason::NonContiguousObject: return "non-contiguous-object";
    case RejectReason::OverlappingSpans: return "overlapping-spans";
  }
  return "unknown";
}

TripletOutcome find_triplet(const DepTree& tree, const LabelConfig& labels) {
  if (labels.subject_labels.empty() || labels.object_labels.empty()) {
    throw DataError("label config with an empty label set");
  }
  for (const std::string& label : labels.subject_labels) {
    if (labels.object_labels.contains(label)) {
      throw DataError("label '" + label + "' is both a subject and an object label");
    }
  }

  int subject = 0, object = 0;
  int subjects = 0, objects = 0;
  for (const Token& tok : tree.sentence().tokens) {
    if (labels.subject_labels.contains(tok.deprel)) {
      ++subjects;
      subject = tok.id;
    }
    if (labels.object_labels.contains(tok.deprel)) {
      ++objects;
      object = tok.id;
    }
  }
  if (subjects == 0) return {std::nullopt, RejectReason::MissingSubject};
  if (subjects > 1) return {std::nullopt, RejectReason::MultipleSubjects};
  if (objects == 0) return {std::nullopt, RejectReason::MissingObject};
  if (objects > 1) return {std::nullopt, RejectReason::MultipleObjects};

  const int predicate = tree.parent(subject);
  if (predicate != tree.parent(object) || predicate == 0) {
    return {std::nullopt, RejectReason::PredicateMismatch};
  }
  if (labels.require_root_predicate && predicate != tree.root()) {
    return {std::nullopt, RejectReason::PredicateNotRoot};
  }

  const std::vector<int> subject_ids = tree.subtree_ids(subject);
  const std::optional<Span> subject_span = contiguous_span(subject_ids);
  if (!subject_span) return {std::nullopt, RejectReason::NonContiguousSubject};

  const std::vector<int> object_ids = tree.subtree_ids(object);
  const std::optional<Span> object_span = contiguous_span(object_ids);
  if (!object_span) return {std::nullopt, RejectReason::NonContiguousObject};

  const bool disjoint = subject_span->end < object_span->start ||
                        object_span->end < subject_span->start;
  if (!disjoint || subject_span->contains(predicate) ||
      object_span->contains(predicate)) {
    return {std::nullopt, RejectReason::OverlappingSpans};
  }

  Triplet triplet;
  triplet.subject_head = subject;
  triplet.subject_span = *subject_span;
  triplet.object_head = object;
  triplet.object_span = *object_span;
  triplet.predicate = predicate;
  return {triplet, RejectReason{}};
}

CheckOutcome check_pair(const ParsedPair& pair, const LabelConfig& labels) {
  const TripletOutcome src = find_triplet(DepTree::build(pair.src), labels);
  if (!src.triplet) return {std::nullopt, {Side::Src, src.reason}};
  const TripletOutcome tgt = find_triplet(DepTree::build(pair.tgt), labels);
  if (!tgt.triplet) return {std::nullopt, {Side::Tgt, tgt.reason}};

  EligiblePair eligible;
  eligible.pair = pair;
  eligible.src_triplet = *src.triplet;
  eligible.tgt_triplet = *tgt.triplet;
  return {std::move(eligible), {}};
}

FilterResult filter_corpus(const std::vector<ParsedPair>& pairs,
                           const LabelConfig& labels) {
  FilterResult result;
  for (const ParsedPair& pair : pairs) {
    CheckOutcome outcome = check_pair(pair, labels);
    if (outcome.pair) {
      result.eligible.push_back(std::move(*outcome.pair));
    } else {
      const std::string key = std::string(to_string(outcome.rejection.side)) +
                              ":" + to_string(outcome.rejection.reason);
      ++result.rejections[key];
    }
  }
  return result;
}

}  // namespace treeswap
