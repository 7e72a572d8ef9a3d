#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "treeswap/deptree.hpp"
#include "treeswap/error.hpp"
#include "treeswap/tsv_cache.hpp"

namespace fs = std::filesystem;
using namespace treeswap;

namespace {

std::vector<TsvEntry> sample_entries() {
  std::vector<TsvEntry> entries;
  entries.push_back({"doc:0", Side::Src, fixtures::sentence(fixtures::kEnChasing)});
  entries.push_back({"doc:0", Side::Tgt, fixtures::sentence(fixtures::kHuChasing)});
  entries.push_back({"doc:1", Side::Src, fixtures::sentence(fixtures::kEnGets)});
  entries.push_back({"doc:1", Side::Tgt, fixtures::sentence(fixtures::kHuGets)});
  return entries;
}

// The cache stores token rows only; raw text and comments do not survive.
void expect_same_entries(const std::vector<TsvEntry>& got,
                         const std::vector<TsvEntry>& want) {
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    EXPECT_EQ(got[i].pair_id, want[i].pair_id);
    EXPECT_EQ(got[i].side, want[i].side);
    EXPECT_EQ(got[i].sentence.tokens, want[i].sentence.tokens);
  }
}

}  // namespace

TEST(TsvEscape, RoundTripsControlCharacters) {
  const std::string nasty = "a\tb\nc\\d";
  const std::string escaped = escape_tsv_field(nasty);
  EXPECT_EQ(escaped.find('\t'), std::string::npos);
  EXPECT_EQ(escaped.find('\n'), std::string::npos);
  EXPECT_EQ(unescape_tsv_field(escaped, 1), nasty);
  EXPECT_EQ(escape_tsv_field("plain"), "plain");
}

TEST(TsvEscape, RejectsDanglingEscapes) {
  EXPECT_THROW(unescape_tsv_field("bad\\", 3), ParseError);
  EXPECT_THROW(unescape_tsv_field("bad\\q", 3), ParseError);
}

TEST(TsvCache, RoundTripsEntries) {
  const std::vector<TsvEntry> entries = sample_entries();
  std::ostringstream out;
  write_tsv_cache(entries, out);
  std::istringstream in(out.str());
  expect_same_entries(read_tsv_cache(in), entries);
}

TEST(TsvCache, RoundTripsAwkwardForms) {
  Sentence s;
  s.tokens.push_back(generators::token(1, "has\ttab", "X", 0, "root"));
  s.tokens.push_back(generators::token(2, "has\nnewline", "X", 1, "dep"));
  s.tokens[0].space_after = false;
  const std::vector<TsvEntry> entries{{"weird:0", Side::Src, s}};
  std::ostringstream out;
  write_tsv_cache(entries, out);
  std::istringstream in(out.str());
  EXPECT_EQ(read_tsv_cache(in), entries);
}

TEST(TsvCache, FileRoundTrip) {
  const fs::path path = fs::temp_directory_path() /
                        ("treeswap_cache_test_" + std::to_string(::getpid()) + ".tsv");
  const std::vector<TsvEntry> entries = sample_entries();
  write_tsv_cache_file(entries, path);
  expect_same_entries(read_tsv_cache_file(path), entries);
  fs::remove(path);
  EXPECT_THROW(read_tsv_cache_file(path), DataError);
}

TEST(TsvCache, RejectsMalformedRows) {
  std::istringstream bad_cols("doc:0\tsrc\t1\tform\tlemma\tX\t0\n");
  EXPECT_THROW(read_tsv_cache(bad_cols), ParseError);
  std::istringstream bad_side("doc:0\tmid\t1\tform\tlemma\tX\t0\troot\t1\n");
  EXPECT_THROW(read_tsv_cache(bad_side), ParseError);
  std::istringstream bad_flag("doc:0\tsrc\t1\tform\tlemma\tX\t0\troot\t2\n");
  EXPECT_THROW(read_tsv_cache(bad_flag), ParseError);
}

TEST(AssemblePairs, PairsByIdAndRecoversDocId) {
  const std::vector<ParsedPair> pairs = assemble_pairs(sample_entries());
  ASSERT_EQ(pairs.size(), 2u);
  EXPECT_EQ(pairs[0].pair_id, "doc:0");
  EXPECT_EQ(pairs[0].doc_id, "doc");
  EXPECT_EQ(pairs[0].src.tokens.size(), 9u);
  EXPECT_EQ(pairs[1].pair_id, "doc:1");
  EXPECT_EQ(linearize(pairs[1].src.tokens), "Everybody gets the rocket ship.");
}

TEST(AssemblePairs, PreservesFirstAppearanceOrder) {
  std::vector<TsvEntry> entries = sample_entries();
  std::swap(entries[0], entries[3]);  // interleave the two pairs
  const std::vector<ParsedPair> pairs = assemble_pairs(entries);
  ASSERT_EQ(pairs.size(), 2u);
  EXPECT_EQ(pairs[0].pair_id, "doc:1");
  EXPECT_EQ(pairs[1].pair_id, "doc:0");
}

TEST(AssemblePairs, RequiresBothSidesExactlyOnce) {
  std::vector<TsvEntry> missing = sample_entries();
  missing.pop_back();
  EXPECT_THROW(assemble_pairs(missing), DataError);

  std::vector<TsvEntry> doubled = sample_entries();
  doubled.push_back(doubled[0]);
  EXPECT_THROW(assemble_pairs(doubled), DataError);
}
