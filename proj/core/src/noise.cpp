#include "treeswap/noise.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>

#include "treeswap/error.hpp"
#include "treeswap/strings.hpp"
#include "treeswap/tsv_cache.hpp"

namespace treeswap {

SelectionModel selection_probs(const DepTree& tree) {
  const int n = tree.size();
  SelectionModel model;
  model.depth.resize(n);
  model.q.resize(n);
  model.p.resize(n);

  for (int id = 1; id <= n; ++id) {
    const int d = tree.depth(id);
    model.depth[id - 1] = d;
    model.q[id - 1] = 1.0 - std::ldexp(1.0, -(d - 1));
  }
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    model.p[i] = std::exp(model.q[i]);
    total += model.p[i];
  }
  for (int i = 0; i < n; ++i) model.p[i] /= total;
  return model;
}

std::size_t default_select_count(std::size_t n, double ratio) {
  const auto rounded = std::llround(ratio * static_cast<double>(n));
  return std::max<long long>(1, rounded);
}

std::vector<int> select_words(const SelectionModel& model, std::size_t count,
                              Rng& rng) {
  const std::size_t n = model.p.size();
  if (count > n) {
    throw DataError("selection count " + std::to_string(count) +
                    " exceeds sentence length " + std::to_string(n));
  }
  std::vector<int> ids(n);
  std::vector<double> weight(model.p);
  for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<int>(i) + 1;

  std::vector<int> selected;
  selected.reserve(count);
  std::size_t remaining = n;
  for (std::size_t k = 0; k < count; ++k) {
    double total = 0.0;
    for (std::size_t i = 0; i < remaining; ++i) total += weight[i];
    const double r = rng.real01() * total;
    double acc = 0.0;
    std::size_t chosen = remaining - 1;  // fallback for fp tail
    for (std::size_t i = 0; i < remaining; ++i) {
      acc += weight[i];
      if (r < acc) {
        chosen = i;
        break;
      }
    }
    selected.push_back(ids[chosen]);
    --remaining;
    ids[chosen] = ids[remaining];
    weight[chosen] = weight[remaining];
  }
  std::sort(selected.begin(), selected.end());
  return selected;
}

std::vector<int> select_words_bernoulli(const SelectionModel& model, Rng& rng) {
  std::vector<int> selected;
  for (std::size_t i = 0; i < model.q.size(); ++i) {
    if (rng.real01() < model.q[i]) selected.push_back(static_cast<int>(i) + 1);
  }
  return selected;
}

void FreqTable::add(std::string_view word, std::uint64_t count) {
  auto it = counts_.find(word);
  if (it == counts_.end()) {
    counts_.emplace(std::string(word), count);
  } else {
    it->second += count;
  }
  index_valid_ = false;
}

FreqTable FreqTable::from_sentences(std::span<const Sentence> sentences) {
  FreqTable table;
  for (const Sentence& sentence : sentences) {
    for (const Token& tok : sentence.tokens) table.add(tok.form);
  }
  return table;
}

FreqTable FreqTable::from_lines(std::span<const std::string> lines) {
  FreqTable table;
  for (const std::string& line : lines) {
    for (std::string_view word : split_whitespace(line)) table.add(word);
  }
  return table;
}

std::uint64_t FreqTable::count(std::string_view word) const {
  const auto it = counts_.find(word);
  return it == counts_.end() ? 0 : it->second;
}

void FreqTable::build_index() const {
  if (index_valid_) return;
  by_count_.clear();
  by_count_.reserve(counts_.size());
  for (const auto& [word, cnt] : counts_) {
    by_count_.emplace_back(cnt, std::string_view(word));
  }
  std::sort(by_count_.begin(), by_count_.end());
  index_valid_ = true;
}

std::string FreqTable::nearest_different(std::string_view word) const {
  build_index();
  const std::uint64_t c = count(word);

  std::string_view best;
  std::uint64_t best_delta = 0;
  bool found = false;
  auto consider = [&](const std::pair<std::uint64_t, std::string_view>& entry) {
    if (entry.second == word) return;
    const std::uint64_t delta =
        entry.first > c ? entry.first - c : c - entry.first;
    if (!found || delta < best_delta ||
        (delta == best_delta && entry.second < best)) {
      best = entry.second;
      best_delta = delta;
      found = true;
    }
  };

  const auto lb = std::lower_bound(
      by_count_.begin(), by_count_.end(),
      std::pair<std::uint64_t, std::string_view>(c, std::string_view()));
  for (auto it = lb; it != by_count_.end(); ++it) {
    if (found && it->first - c > best_delta) break;
    consider(*it);
  }
  for (auto it = lb; it != by_count_.begin();) {
    --it;
    if (found && c - it->first > best_delta) break;
    consider(*it);
  }
  if (!found) {
    throw DataError("frequency table has no alternative for '" +
                    std::string(word) + "'");
  }
  return std::string(best);
}

void FreqTable::write_tsv(std::ostream& out) const {
  std::vector<std::pair<std::uint64_t, std::string_view>> rows;
  rows.reserve(counts_.size());
  for (const auto& [word, cnt] : counts_) {
    rows.emplace_back(cnt, std::string_view(word));
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  for (const auto& [cnt, word] : rows) {
    out << escape_tsv_field(word) << '\t' << cnt << '\n';
  }
}

FreqTable FreqTable::read_tsv(std::istream& in) {
  FreqTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> cols = split(line, '\t');
    if (cols.size() != 2) {
      throw ParseError("expected 2 tab-separated columns, got " +
                           std::to_string(cols.size()),
                       line_no);
    }
    const auto cnt = parse_int(cols[1]);
    if (!cnt || *cnt < 0) throw ParseError("bad count '" + cols[1] + "'", line_no);
    const std::string word = unescape_tsv_field(cols[0], line_no);
    if (table.counts_.contains(word)) {
      throw ParseError("duplicate word '" + word + "'", line_no);
    }
    table.add(word, static_cast<std::uint64_t>(*cnt));
  }
  return table;
}

namespace {

void check_selected(const Sentence& sentence, std::span<const int> selected) {
  const int n = static_cast<int>(sentence.tokens.size());
  for (int id : selected) {
    if (id < 1 || id > n) {
      throw DataError("selected id " + std::to_string(id) +
                      " out of range 1.." + std::to_string(n));
    }
  }
}

bool is_selected(std::span<const int> selected, int id) {
  return std::find(selected.begin(), selected.end(), id) != selected.end();
}

std::string join_forms(const Sentence& sentence,
                       const std::function<std::optional<std::string>(const Token&)>& render) {
  std::string out;
  for (const Token& tok : sentence.tokens) {
    const std::optional<std::string> piece = render(tok);
    if (!piece) continue;
    if (!out.empty()) out += ' ';
    out += *piece;
  }
  return out;
}

}  // namespace

std::string apply_blank(const Sentence& sentence, std::span<const int> selected) {
  check_selected(sentence, selected);
  return join_forms(sentence, [&](const Token& tok) -> std::optional<std::string> {
    if (is_selected(selected, tok.id)) return std::string(kBlankToken);
    return tok.form;
  });
}

std::string apply_dropout(const Sentence& sentence, std::span<const int> selected) {
  check_selected(sentence, selected);
  return join_forms(sentence, [&](const Token& tok) -> std::optional<std::string> {
    if (is_selected(selected, tok.id)) return std::nullopt;
    return tok.form;
  });
}

std::string apply_replace(const Sentence& sentence, std::span<const int> selected,
                          const FreqTable& freq) {
  check_selected(sentence, selected);
  return join_forms(sentence, [&](const Token& tok) -> std::optional<std::string> {
    if (is_selected(selected, tok.id)) return freq.nearest_different(tok.form);
    return tok.form;
  });
}

}  // namespace treeswap
