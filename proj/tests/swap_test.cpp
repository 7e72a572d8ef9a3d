#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "fixtures.hpp"
#include "generators.hpp"
#include "treeswap/deptree.hpp"
#include "treeswap/error.hpp"
#include "treeswap/swap.hpp"

using namespace treeswap;

namespace {

// today(advmod) children(nsubj) eat(root) apples(obj) .
Sentence adverb_first(const std::string& adv, const std::string& subj,
                      const std::string& verb, const std::string& obj) {
  Sentence s;
  s.tokens.push_back(generators::token(1, adv, "ADV", 3, "advmod"));
  s.tokens.push_back(generators::token(2, subj, "NOUN", 3, "nsubj"));
  s.tokens.push_back(generators::token(3, verb, "VERB", 0, "root"));
  s.tokens.push_back(generators::token(4, obj, "NOUN", 3, "obj"));
  s.tokens.push_back(generators::token(5, ".", "PUNCT", 3, "punct"));
  s.tokens[3].space_after = false;
  return s;
}

EligiblePair eligible_pair(const std::string& id, Sentence src, Sentence tgt) {
  ParsedPair p;
  p.pair_id = id;
  p.doc_id = "t";
  p.src = std::move(src);
  p.tgt = std::move(tgt);
  return fixtures::eligible(p);
}

}  // namespace

TEST(Splice, RenumbersAndRemapsHeads) {
  // host: the(2) dog(3←subj) chased(0) cats(3→obj... ) — replace span 1..2
  // with a three-token subtree.
  std::vector<Token> host;
  host.push_back(generators::token(1, "the", "DET", 2, "det"));
  host.push_back(generators::token(2, "dog", "NOUN", 3, "nsubj"));
  host.push_back(generators::token(3, "ran", "VERB", 0, "root"));
  host.push_back(generators::token(4, "home", "NOUN", 3, "obj"));

  std::vector<Token> rep;  // ids in donor numbering
  rep.push_back(generators::token(6, "a", "DET", 8, "det"));
  rep.push_back(generators::token(7, "grey", "ADJ", 8, "amod"));
  rep.push_back(generators::token(8, "cat", "NOUN", 2, "nsubj"));

  const std::vector<Token> out = splice(host, Span{1, 2}, rep);
  ASSERT_EQ(out.size(), 5u);
  for (int i = 0; i < 5; ++i) EXPECT_EQ(out[i].id, i + 1);
  EXPECT_EQ(out[0].form, "a");
  EXPECT_EQ(out[0].head, 3);
  EXPECT_EQ(out[1].head, 3);
  EXPECT_EQ(out[2].form, "cat");
  EXPECT_EQ(out[2].head, 4);           // attaches where "dog" attached
  EXPECT_EQ(out[2].deprel, "nsubj");   // inherits the host deprel
  EXPECT_EQ(out[3].form, "ran");
  EXPECT_EQ(out[3].head, 0);
  EXPECT_EQ(out[4].head, 4);           // shifted by the size delta
}

TEST(Splice, BoundarySpacingFollowsHost) {
  std::vector<Token> host;
  host.push_back(generators::token(1, "eat", "VERB", 0, "root"));
  host.push_back(generators::token(2, "apples", "NOUN", 1, "obj"));
  host.push_back(generators::token(3, ".", "PUNCT", 1, "punct"));
  host[1].space_after = false;  // glued to the period

  std::vector<Token> rep;
  rep.push_back(generators::token(4, "ripe", "ADJ", 5, "amod"));
  rep.push_back(generators::token(5, "pears", "NOUN", 1, "obj"));
  rep[1].space_after = true;  // donor had a space here

  const std::vector<Token> out = splice(host, Span{2, 2}, rep);
  ASSERT_EQ(out.size(), 4u);
  EXPECT_TRUE(out[1].space_after);    // interior spacing follows the donor
  EXPECT_FALSE(out[2].space_after);   // boundary spacing follows the host
  EXPECT_EQ(linearize(out), "eat ripe pears.");
}

TEST(Splice, RejectsOpenSubtrees) {
  std::vector<Token> host;
  host.push_back(generators::token(1, "a", "DET", 2, "det"));
  host.push_back(generators::token(2, "b", "NOUN", 3, "nsubj"));
  host.push_back(generators::token(3, "c", "VERB", 0, "root"));
  std::vector<Token> rep{generators::token(1, "x", "NOUN", 0, "dep")};

  // span interior referenced from outside
  EXPECT_THROW(splice(host, Span{2, 2}, rep), StructuralError);
  // span out of range / empty replacement
  EXPECT_THROW(splice(host, Span{0, 1}, rep), StructuralError);
  EXPECT_THROW(splice(host, Span{1, 1}, std::vector<Token>{}), StructuralError);
  // replacement with two outward heads
  std::vector<Token> torn;
  torn.push_back(generators::token(5, "x", "X", 1, "dep"));
  torn.push_back(generators::token(6, "y", "X", 2, "dep"));
  EXPECT_THROW(splice(host, Span{1, 2}, torn), StructuralError);
}

TEST(AdjustCase, CapitalizesNewInitial) {
  std::vector<Token> tokens{generators::token(1, "children", "NOUN", 2, "nsubj"),
                            generators::token(2, "eat", "VERB", 0, "root")};
  adjust_case(tokens, 0, CaseMove{false, true});
  EXPECT_EQ(tokens[0].form, "Children");
}

TEST(AdjustCase, LowercasesFormerInitial) {
  std::vector<Token> tokens{generators::token(1, "x", "X", 2, "dep"),
                            generators::token(2, "Dogs", "NOUN", 0, "root")};
  adjust_case(tokens, 1, CaseMove{true, false});
  EXPECT_EQ(tokens[1].form, "dogs");
}

TEST(AdjustCase, KeepsProperNounsCapitalized) {
  std::vector<Token> tokens{generators::token(1, "x", "X", 2, "dep"),
                            generators::token(2, "Sauron", "PROPN", 0, "root")};
  adjust_case(tokens, 1, CaseMove{true, false});
  EXPECT_EQ(tokens[1].form, "Sauron");
}

TEST(AdjustCase, LeavesCapitalsAloneWhenStillInitial) {
  std::vector<Token> tokens{generators::token(1, "The", "DET", 0, "root")};
  adjust_case(tokens, 0, CaseMove{true, true});
  EXPECT_EQ(tokens[0].form, "The");
}

TEST(SwapObjects, ExchangesObjectSubtrees) {
  const auto a = fixtures::eligible(
      fixtures::pair("fx:0", fixtures::kEnChasing, fixtures::kHuChasing));
  const auto b = fixtures::eligible(
      fixtures::pair("fx:1", fixtures::kEnCooking, fixtures::kHuCooking));
  const auto [oa, ob] = swap_objects(a, b);
  EXPECT_EQ(oa.src_text, "The black dog is chasing a delicious soup.");
  EXPECT_EQ(ob.src_text, "Gordon Ramsay is cooking the red cat.");
  EXPECT_EQ(oa.method, SwapMethod::Obj);
  EXPECT_EQ(oa.donor_a, "fx:0");
  EXPECT_EQ(oa.donor_b, "fx:1");
  EXPECT_EQ(ob.donor_a, "fx:1");
  EXPECT_EQ(ob.donor_b, "fx:0");
  // outputs remain valid trees
  EXPECT_NO_THROW(DepTree::build(oa.src));
  EXPECT_NO_THROW(DepTree::build(oa.tgt));
}

TEST(SwapObjects, RecordsRequestedMethodLabel) {
  const auto a = fixtures::eligible(
      fixtures::pair("fx:4", fixtures::kEnWorthThat, fixtures::kHuWorthThat));
  const auto b = fixtures::eligible(fixtures::pair(
      "fx:5", fixtures::kEnWorthMillions, fixtures::kHuWorthMillions));
  const auto [oa, ob] = swap_objects(a, b, SwapOptions{}, SwapMethod::ObjLemma);
  EXPECT_EQ(oa.method, SwapMethod::ObjLemma);
  EXPECT_EQ(ob.method, SwapMethod::ObjLemma);
  EXPECT_EQ(oa.src_text, "Nothing should be worth millions.");
}

TEST(SwapSubjects, AdjustsCaseAtBothEnds) {
  const auto a = eligible_pair(
      "a", adverb_first("today", "children", "eat", "apples"),
      adverb_first("tnow", "tkids", "teat", "tapples"));

  Sentence b_src;  // Dogs chase cats .
  b_src.tokens.push_back(generators::token(1, "Dogs", "NOUN", 2, "nsubj"));
  b_src.tokens.push_back(generators::token(2, "chase", "VERB", 0, "root"));
  b_src.tokens.push_back(generators::token(3, "cats", "NOUN", 2, "obj"));
  b_src.tokens.push_back(generators::token(4, ".", "PUNCT", 2, "punct"));
  b_src.tokens[2].space_after = false;
  Sentence b_tgt = b_src;
  b_tgt.tokens[0].form = "Tdogs";
  const auto b = eligible_pair("b", b_src, b_tgt);

  const auto [oa, ob] = swap_subjects(a, b);
  EXPECT_EQ(oa.src_text, "today dogs eat apples.");      // lowercased
  EXPECT_EQ(ob.src_text, "Children chase cats.");        // capitalized

  const auto [pa, pb] = swap_subjects(a, b, SwapOptions{.adjust_case = false});
  EXPECT_EQ(pa.src_text, "today Dogs eat apples.");
  EXPECT_EQ(pb.src_text, "children chase cats.");
}

TEST(SwapPredicates, ExchangesFormAndLemmaInPlace) {
  const auto a = fixtures::eligible(
      fixtures::pair("fx:6", fixtures::kEnGets, fixtures::kHuGets));
  const auto b = fixtures::eligible(
      fixtures::pair("fx:7", fixtures::kEnHiding, fixtures::kHuHiding));
  const auto [oa, ob] = swap_predicates(a, b);
  EXPECT_EQ(oa.src_text, "Everybody hiding the rocket ship.");
  EXPECT_EQ(ob.src_text, "Someone is gets something.");
  EXPECT_EQ(oa.method, SwapMethod::Pred);

  const int pred_a = a.src_triplet.predicate;
  const int pred_b = b.src_triplet.predicate;
  EXPECT_EQ(oa.src.tokens[pred_a - 1].lemma, "hide");
  EXPECT_EQ(ob.src.tokens[pred_b - 1].lemma, "get");
  // everything but the predicate token is untouched
  ASSERT_EQ(oa.src.tokens.size(), a.pair.src.tokens.size());
  for (std::size_t i = 0; i < oa.src.tokens.size(); ++i) {
    if (static_cast<int>(i) == pred_a - 1) continue;
    EXPECT_EQ(oa.src.tokens[i], a.pair.src.tokens[i]);
  }
}

TEST(SwapPredicates, CanKeepLemmas) {
  const auto a = fixtures::eligible(
      fixtures::pair("fx:6", fixtures::kEnGets, fixtures::kHuGets));
  const auto b = fixtures::eligible(
      fixtures::pair("fx:7", fixtures::kEnHiding, fixtures::kHuHiding));
  const auto [oa, ob] =
      swap_predicates(a, b, SwapOptions{.exchange_pred_lemma = false});
  EXPECT_EQ(oa.src.tokens[a.src_triplet.predicate - 1].form, "hiding");
  EXPECT_EQ(oa.src.tokens[a.src_triplet.predicate - 1].lemma, "get");
  EXPECT_EQ(ob.src.tokens[b.src_triplet.predicate - 1].lemma, "hide");
}

TEST(SwapMethods, RoundTripNames) {
  for (SwapMethod m : {SwapMethod::Obj, SwapMethod::Subj, SwapMethod::ObjLemma,
                       SwapMethod::SubjLemma, SwapMethod::Pred}) {
    EXPECT_EQ(parse_swap_method(to_string(m)), m);
  }
  EXPECT_EQ(parse_swap_method("bogus"), std::nullopt);
}
