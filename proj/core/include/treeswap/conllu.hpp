#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "treeswap/types.hpp"

namespace treeswap {

// Parses CoNLL-U text into sentences. Blocks are separated by blank lines;
// multiword range lines ("3-4") and empty nodes ("3.1") are skipped; the
// MISC column is consulted only for SpaceAfter=No. Throws ParseError for
// malformed lines (with the 1-based line number) and StructuralError for
// id gaps, out-of-range heads, or a root count other than one.
std::vector<Sentence> parse_conllu(std::string_view text);

std::vector<Sentence> parse_conllu_file(const std::filesystem::path& path);

// Serializes one sentence as a CoNLL-U block, trailing newline included.
// Unused columns are written as "_".
std::string to_conllu(const Sentence& sentence);

// Enforces the sentence invariants: ids are exactly 1..n in order, heads lie
// in [0, n] with no self-reference, and exactly one token has head 0.
void validate_sentence(const Sentence& sentence);

}  // namespace treeswap
