#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "treeswap/eligibility.hpp"
#include "treeswap/types.hpp"

namespace treeswap {

enum class SwapMethod { Obj, Subj, ObjLemma, SubjLemma, Pred };

const char* to_string(SwapMethod method);
std::optional<SwapMethod> parse_swap_method(std::string_view name);

struct SwapOptions {
  bool adjust_case = true;
  bool exchange_pred_lemma = true;
};

// One synthetic sentence pair. donor_a is the pair that contributed the
// sentence frames, donor_b the pair that contributed the swapped-in subtree.
struct AugmentedPair {
  Sentence src;
  Sentence tgt;
  std::string src_text;
  std::string tgt_text;
  SwapMethod method = SwapMethod::Obj;
  std::string donor_a;
  std::string donor_b;
};

struct SpliceContext {
  bool replacement_was_initial = false;  // donor span started its sentence
  bool adjust_case = false;
};

// Replaces tokens[span] with the replacement slice, renumbering ids to 1..n'
// and remapping heads. The span must be a closed subtree of the host (no
// edges cross its boundary except the span root's head), and the replacement
// a closed subtree slice in its donor's numbering; the replacement's root
// attaches where the removed subtree's root attached, inheriting the host
// deprel. Boundary spacing follows the host: the replacement's last token
// takes the removed span's final space_after flag.
std::vector<Token> splice(std::span<const Token> tokens, Span span,
                          std::span<const Token> replacement,
                          const SpliceContext& ctx = {});

struct CaseMove {
  bool was_initial = false;
  bool now_initial = false;
};

// First-token casing after a span moved: capitalize a lowercase span that now
// begins its sentence; lowercase a formerly sentence-initial non-PROPN span
// that no longer does.
void adjust_case(std::vector<Token>& tokens, std::size_t span_first,
                 CaseMove move);

// Each swap exchanges material between the two pairs simultaneously on both
// language sides and returns both results: first the a-framed pair, then the
// b-framed one. `label` is recorded as the method (the same-lemma variants
// reuse these operations; only the sampler differs).
std::pair<AugmentedPair, AugmentedPair> swap_objects(
    const EligiblePair& a, const EligiblePair& b, const SwapOptions& opts = {},
    SwapMethod label = SwapMethod::Obj);

std::pair<AugmentedPair, AugmentedPair> swap_subjects(
    const EligiblePair& a, const EligiblePair& b, const SwapOptions& opts = {},
    SwapMethod label = SwapMethod::Subj);

// Exchanges only the predicate tokens' form (and lemma, unless disabled);
// positions, heads and spacing stay put.
std::pair<AugmentedPair, AugmentedPair> swap_predicates(
    const EligiblePair& a, const EligiblePair& b, const SwapOptions& opts = {});

}  // namespace treeswap
