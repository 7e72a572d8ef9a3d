#include "treeswap/deptree.hpp"

#include <algorithm>

#include "treeswap/conllu.hpp"
#include "treeswap/error.hpp"

namespace treeswap {

DepTree DepTree::build(Sentence sentence) {
  validate_sentence(sentence);
  const int n = static_cast<int>(sentence.tokens.size());

  DepTree tree;
  tree.sentence_ = std::move(sentence);
  tree.children_.assign(n + 1, {});
  tree.depth_.assign(n + 1, 0);

  for (const Token& tok : tree.sentence_.tokens) {
    if (tok.head == 0) {
      tree.root_ = tok.id;
    } else {
      tree.children_[tok.head].push_back(tok.id);
    }
  }

  // Depths via one pass per chain with cycle detection: a token whose chain
  // never reaches the root sits on a cycle.
  for (int id = 1; id <= n; ++id) {
    if (tree.depth_[id] != 0) continue;
    std::vector<int> chain;
    int cur = id;
    while (cur != 0 && tree.depth_[cur] == 0) {
      chain.push_back(cur);
      if (static_cast<int>(chain.size()) > n) break;  // cycle, cannot recur
      cur = tree.sentence_.tokens[cur - 1].head;
    }
    if (cur != 0 && tree.depth_[cur] == 0) {
      throw StructuralError("head cycle involving token " + std::to_string(id));
    }
    int base = cur == 0 ? 0 : tree.depth_[cur];
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      tree.depth_[*it] = ++base;
    }
  }
  return tree;
}

void DepTree::check_id(int id) const {
  if (id < 1 || id > size()) {
    throw StructuralError("token id " + std::to_string(id) +
                          " out of range 1.." + std::to_string(size()));
  }
}

const Token& DepTree::token(int id) const {
  check_id(id);
  return sentence_.tokens[id - 1];
}

int DepTree::parent(int id) const {
  check_id(id);
  return sentence_.tokens[id - 1].head;
}

std::span<const int> DepTree::children(int id) const {
  check_id(id);
  return children_[id];
}

std::vector<int> DepTree::subtree_ids(int id) const {
  check_id(id);
  std::vector<int> ids;
  std::vector<int> stack{id};
  while (!stack.empty()) {
    const int cur = stack.back();
    stack.pop_back();
    ids.push_back(cur);
    for (int child : children_[cur]) stack.push_back(child);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

int DepTree::depth(int id) const {
  check_id(id);
  return depth_[id];
}

std::optional<Span> contiguous_span(std::span<const int> ids) {
  if (ids.empty()) {
    throw StructuralError("contiguous_span over an empty id set");
  }
  const int min = ids.front();
  const int max = ids.back();
  if (max - min + 1 != static_cast<int>(ids.size())) return std::nullopt;
  for (std::size_t i = 0; i + 1 < ids.size(); ++i) {
    if (ids[i + 1] != ids[i] + 1) return std::nullopt;
  }
  return Span{min, max};
}

namespace {

bool no_space_before(const std::string& form) {
  if (form.size() != 1) return false;
  switch (form[0]) {
    case '.': case ',': case '!': case '?': case ';': case ':':
    case ')': case ']': case '}':
      return true;
    default:
      return false;
  }
}

bool no_space_after(const std::string& form) {
  return form.size() == 1 &&
         (form[0] == '(' || form[0] == '[' || form[0] == '{');
}

}  // namespace

std::string linearize(std::span<const Token> tokens) {
  const bool flags_absent =
      std::all_of(tokens.begin(), tokens.end(),
                  [](const Token& t) { return t.space_after; });

  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    out += tokens[i].form;
    if (i + 1 == tokens.size()) break;
    bool space = tokens[i].space_after;
    if (flags_absent) {
      space = !no_space_after(tokens[i].form) &&
              !no_space_before(tokens[i + 1].form);
    }
    if (space) out += ' ';
  }
  return out;
}

}  // namespace treeswap
