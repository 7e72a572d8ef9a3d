#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "treeswap/types.hpp"

namespace treeswap {

// Inclusive 1-based token range.
struct Span {
  int start = 0;
  int end = 0;

  int size() const { return end - start + 1; }
  bool contains(int id) const { return id >= start && id <= end; }
  bool operator==(const Span&) const = default;
};

// Immutable dependency tree over one sentence. Construction validates that
// the head relation forms a single tree: every token reaches the unique root
// and no cycles exist.
class DepTree {
 public:
  static DepTree build(Sentence sentence);

  const Sentence& sentence() const { return sentence_; }
  int size() const { return static_cast<int>(sentence_.tokens.size()); }
  int root() const { return root_; }

  const Token& token(int id) const;
  int parent(int id) const;  // 0 for the root
  std::span<const int> children(int id) const;

  // The node and its transitive dependents, ascending.
  std::vector<int> subtree_ids(int id) const;

  // Edges on the path to the root, plus one: depth(root) == 1.
  int depth(int id) const;

 private:
  DepTree() = default;
  void check_id(int id) const;

  Sentence sentence_;
  std::vector<std::vector<int>> children_;  // children_[0] unused
  std::vector<int> depth_;
  int root_ = 0;
};

// Span(min, max) when ids form exactly the range {min..max}, else nullopt.
// ids must be non-empty, sorted ascending, duplicate-free.
std::optional<Span> contiguous_span(std::span<const int> ids);

// Rebuilds surface text: a single space after every token whose space_after
// is true, none after the last. When every flag is true the flags are taken
// as absent and punctuation heuristics apply instead: no space before any of
// . , ! ? ; : ) ] } and none after any of ( [ {.
std::string linearize(std::span<const Token> tokens);

}  // namespace treeswap
