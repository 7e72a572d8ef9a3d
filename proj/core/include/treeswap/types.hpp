#pragma once

#include <optional>
#include <string>
#include <vector>

namespace treeswap {

// One syntactic word. `id` is the 1-based position in its sentence, `head`
// the id of the governing token (0 for the root). `space_after` is false
// when no space separates the token from its successor in the raw text.
struct Token {
  int id = 0;
  std::string form;
  std::string lemma;
  std::string upos = "_";
  int head = 0;
  std::string deprel;
  bool space_after = true;

  bool operator==(const Token&) const = default;
};

struct Sentence {
  std::vector<Token> tokens;
  std::optional<std::string> text;     // raw surface string when known
  std::vector<std::string> comments;   // verbatim comment lines, sans "# text"

  bool operator==(const Sentence&) const = default;
};

// Untokenized bilingual pair, the unit of cleaning/filtering/splitting.
struct SentencePair {
  std::string src;
  std::string tgt;
  std::string doc_id;
  std::string subcorpus;
  std::string pair_id;  // "<doc_id>:<line_index>"

  bool operator==(const SentencePair&) const = default;
};

// Pair with both sides parsed, the unit of eligibility and augmentation.
struct ParsedPair {
  std::string pair_id;
  std::string doc_id;
  Sentence src;
  Sentence tgt;

  bool operator==(const ParsedPair&) const = default;
};

enum class Side { Src, Tgt };

inline const char* to_string(Side s) { return s == Side::Src ? "src" : "tgt"; }

}  // namespace treeswap
