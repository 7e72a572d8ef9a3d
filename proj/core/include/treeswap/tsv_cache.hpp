#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "treeswap/types.hpp"

namespace treeswap {

// One parsed sentence of one side of one pair, as stored in the parse cache.
struct TsvEntry {
  std::string pair_id;
  Side side = Side::Src;
  Sentence sentence;

  bool operator==(const TsvEntry&) const = default;
};

// Cache layout: one row per token with columns pair_id, side, id, form,
// lemma, upos, head, deprel, space_after (0/1); one blank line between
// sentences. Tabs, newlines and backslashes inside string fields are escaped
// C-style so read ∘ write is the identity on token content.
void write_tsv_cache(const std::vector<TsvEntry>& entries, std::ostream& out);
std::vector<TsvEntry> read_tsv_cache(std::istream& in);

void write_tsv_cache_file(const std::vector<TsvEntry>& entries,
                          const std::filesystem::path& path);
std::vector<TsvEntry> read_tsv_cache_file(const std::filesystem::path& path);

// Groups cache entries into pairs: every pair_id must occur with exactly one
// src and one tgt sentence. Pair order follows first appearance; doc_id is
// recovered from the "<doc_id>:<line_index>" pair id shape.
std::vector<ParsedPair> assemble_pairs(const std::vector<TsvEntry>& entries);

std::string escape_tsv_field(std::string_view s);
std::string unescape_tsv_field(std::string_view s, std::size_t line_no);

}  // namespace treeswap
