#include "treeswap/swap.hpp"

#include "treeswap/deptree.hpp"
#include "treeswap/error.hpp"
#include "treeswap/utf8.hpp"

namespace treeswap {

const char* to_string(SwapMethod method) {
  switch (method) {
    case SwapMethod::Obj: return "obj";
    case SwapMethod::Subj: return "subj";
    case SwapMethod::ObjLemma: return "obj-lemma";
    case SwapMethod::SubjLemma: return "subj-lemma";
    case SwapMethod::Pred: return "pred";
  }
  return "unknown";
}

std::optional<SwapMethod> parse_swap_method(std::string_view name) {
  if (name == "obj") return SwapMethod::Obj;
  if (name == "subj") return SwapMethod::Subj;
  if (name == "obj-lemma") return SwapMethod::ObjLemma;
  if (name == "subj-lemma") return SwapMethod::SubjLemma;
  if (name == "pred") return SwapMethod::Pred;
  return std::nullopt;
}

namespace {

// The unique token of the slice whose head lies outside [lo, hi]; every
// other head must stay inside, otherwise the slice is not a closed subtree.
std::size_t subtree_root_index(std::span<const Token> slice, int lo, int hi,
                               const char* what) {
  std::size_t root = slice.size();
  for (std::size_t i = 0; i < slice.size(); ++i) {
    const int head = slice[i].head;
    if (head < lo || head > hi) {
      if (root != slice.size()) {
        throw StructuralError(std::string(what) +
                              " is not a closed subtree: two outward heads");
      }
      root = i;
    }
  }
  if (root == slice.size()) {
    throw StructuralError(std::string(what) +
                          " is not a closed subtree: no outward head");
  }
  return root;
}

}  // namespace

void adjust_case(std::vector<Token>& tokens, std::size_t span_first,
                 CaseMove move) {
  if (span_first >= tokens.size()) {
    throw StructuralError("case adjustment index out of range");
  }
  Token& tok = tokens[span_first];
  if (move.now_initial && first_is_lowercase(tok.form)) {
    tok.form = uppercase_first(tok.form);
  }
  if (move.was_initial && !move.now_initial && tok.upos != "PROPN") {
    tok.form = lowercase_first(tok.form);
  }
}

std::vector<Token> splice(std::span<const Token> tokens, Span span,
                          std::span<const Token> replacement,
                          const SpliceContext& ctx) {
  const int n = static_cast<int>(tokens.size());
  if (span.start < 1 || span.end > n || span.start > span.end) {
    throw StructuralError("splice span " + std::to_string(span.start) + ".." +
                          std::to_string(span.end) + " out of range for " +
                          std::to_string(n) + " tokens");
  }
  if (replacement.empty()) {
    throw StructuralError("splice with an empty replacement");
  }
  for (std::size_t i = 0; i + 1 < replacement.size(); ++i) {
    if (replacement[i + 1].id != replacement[i].id + 1) {
      throw StructuralError("replacement token ids are not contiguous");
    }
  }

  const int rep_lo = replacement.front().id;
  const int rep_hi = replacement.back().id;
  const std::size_t rep_root =
      subtree_root_index(replacement, rep_lo, rep_hi, "replacement");

  const std::span<const Token> removed =
      tokens.subspan(span.start - 1, span.size());
  const std::size_t span_root =
      subtree_root_index(removed, span.start, span.end, "splice span");
  const int attach = removed[span_root].head;  // outside the span, maybe 0
  const std::string& attach_deprel = removed[span_root].deprel;

  const int delta = static_cast<int>(replacement.size()) - span.size();
  auto map_host_head = [&](int head) {
    if (head == 0) return 0;
    if (head < span.start) return head;
    if (head > span.end) return head + delta;
    throw StructuralError("splice span is not closed: external token "
                          "depends on span interior");
  };

  std::vector<Token> out;
  out.reserve(tokens.size() + replacement.size() - span.size());

  for (int i = 0; i < span.start - 1; ++i) {
    Token tok = tokens[i];
    tok.head = map_host_head(tok.head);
    out.push_back(std::move(tok));
  }
  for (std::size_t i = 0; i < replacement.size(); ++i) {
    Token tok = replacement[i];
    tok.id = span.start + static_cast<int>(i);
    if (i == rep_root) {
      tok.head = attach == 0 ? 0 : (attach < span.start ? attach : attach + delta);
      tok.deprel = attach_deprel;
    } else {
      tok.head = tok.head - rep_lo + span.start;
    }
    out.push_back(std::move(tok));
  }
  for (int i = span.end; i < n; ++i) {
    Token tok = tokens[i];
    tok.id = tok.id + delta;
    tok.head = map_host_head(tok.head);
    out.push_back(std::move(tok));
  }

  // Boundary spacing follows the host sentence.
  out[span.start - 1 + replacement.size() - 1].space_after =
      removed.back().space_after;

  if (ctx.adjust_case) {
    adjust_case(out, span.start - 1,
                {ctx.replacement_was_initial, span.start == 1});
  }
  return out;
}

namespace {

std::span<const Token> span_slice(const Sentence& sentence, Span span) {
  return std::span<const Token>(sentence.tokens)
      .subspan(span.start - 1, span.size());
}

Sentence spliced_sentence(const Sentence& host, Span host_span,
                          const Sentence& donor, Span donor_span,
                          bool adjust) {
  Sentence out;
  out.tokens = splice(host.tokens, host_span, span_slice(donor, donor_span),
                      {donor_span.start == 1, adjust});
  out.text = linearize(out.tokens);
  return out;
}

using SpanSelector = Span Triplet::*;

std::pair<AugmentedPair, AugmentedPair> swap_spans(const EligiblePair& a,
                                                   const EligiblePair& b,
                                                   SpanSelector selector,
                                                   const SwapOptions& opts,
                                                   SwapMethod label) {
  AugmentedPair first, second;
  first.src = spliced_sentence(a.pair.src, a.src_triplet.*selector, b.pair.src,
                               b.src_triplet.*selector, opts.adjust_case);
  first.tgt = spliced_sentence(a.pair.tgt, a.tgt_triplet.*selector, b.pair.tgt,
                               b.tgt_triplet.*selector, opts.adjust_case);
  second.src = spliced_sentence(b.pair.src, b.src_triplet.*selector, a.pair.src,
                                a.src_triplet.*selector, opts.adjust_case);
  second.tgt = spliced_sentence(b.pair.tgt, b.tgt_triplet.*selector, a.pair.tgt,
                                a.tgt_triplet.*selector, opts.adjust_case);
  first.src_text = *first.src.text;
  first.tgt_text = *first.tgt.text;
  second.src_text = *second.src.text;
  second.tgt_text = *second.tgt.text;
  first.method = second.method = label;
  first.donor_a = a.pair.pair_id;
  first.donor_b = b.pair.pair_id;
  second.donor_a = b.pair.pair_id;
  second.donor_b = a.pair.pair_id;
  return {std::move(first), std::move(second)};
}

}  // namespace

std::pair<AugmentedPair, AugmentedPair> swap_objects(const EligiblePair& a,
                                                     const EligiblePair& b,
                                                     const SwapOptions& opts,
                                                     SwapMethod label) {
  return swap_spans(a, b, &Triplet::object_span, opts, label);
}

std::pair<AugmentedPair, AugmentedPair> swap_subjects(const EligiblePair& a,
                                                      const EligiblePair& b,
                                                      const SwapOptions& opts,
                                                      SwapMethod label) {
  return swap_spans(a, b, &Triplet::subject_span, opts, label);
}

std::pair<AugmentedPair, AugmentedPair> swap_predicates(
    const EligiblePair& a, const EligiblePair& b, const SwapOptions& opts) {
  auto exchange = [&](const EligiblePair& host, const EligiblePair& donor) {
    Sentence src = host.pair.src;
    Sentence tgt = host.pair.tgt;
    Token& src_pred = src.tokens[host.src_triplet.predicate - 1];
    Token& tgt_pred = tgt.tokens[host.tgt_triplet.predicate - 1];
    const Token& src_donor =
        donor.pair.src.tokens[donor.src_triplet.predicate - 1];
    const Token& tgt_donor =
        donor.pair.tgt.tokens[donor.tgt_triplet.predicate - 1];
    src_pred.form = src_donor.form;
    tgt_pred.form = tgt_donor.form;
    if (opts.exchange_pred_lemma) {
      src_pred.lemma = src_donor.lemma;
      tgt_pred.lemma = tgt_donor.lemma;
    }
    src.text = linearize(src.tokens);
    tgt.text = linearize(tgt.tokens);

    AugmentedPair out;
    out.src_text = *src.text;
    out.tgt_text = *tgt.text;
    out.src = std::move(src);
    out.tgt = std::move(tgt);
    out.method = SwapMethod::Pred;
    out.donor_a = host.pair.pair_id;
    out.donor_b = donor.pair.pair_id;
    return out;
  };
  return {exchange(a, b), exchange(b, a)};
}

}  // namespace treeswap
