#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "treeswap/types.hpp"

namespace treeswap {

std::vector<std::string> read_lines(const std::filesystem::path& path);

// Reads a line-aligned bilingual corpus: pair i is (src line i, tgt line i).
// Line counts must agree. pair_id is "<doc_id>:<line_index>" with a 0-based
// index; doc_id defaults to the source file's stem.
std::vector<SentencePair> read_parallel_text(const std::filesystem::path& src,
                                             const std::filesystem::path& tgt,
                                             std::string_view doc_id = {});

// Optional third aligned file carrying "doc_id" or "doc_id<TAB>subcorpus"
// per line, for corpora that mix documents in one file.
struct DocEntry {
  std::string doc_id;
  std::string subcorpus;
};
std::vector<DocEntry> read_docs_file(const std::filesystem::path& path);

void apply_docs(std::vector<SentencePair>& pairs,
                const std::vector<DocEntry>& docs);

// One line per pair, "\n" endings, final newline included. Texts must not
// contain newlines.
void write_parallel_text(std::span<const SentencePair> pairs,
                         const std::filesystem::path& src,
                         const std::filesystem::path& tgt);

void write_lines(std::span<const std::string> lines,
                 const std::filesystem::path& path);

}  // namespace treeswap
