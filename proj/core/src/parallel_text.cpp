#include "treeswap/parallel_text.hpp"

#include <fstream>
#include <sstream>

#include "treeswap/error.hpp"
#include "treeswap/strings.hpp"

namespace treeswap {

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = std::move(buf).str();

  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    std::string_view line(text.data() + start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.emplace_back(line);
    start = end + 1;
  }
  return lines;
}

std::vector<SentencePair> read_parallel_text(const std::filesystem::path& src,
                                             const std::filesystem::path& tgt,
                                             std::string_view doc_id) {
  std::vector<std::string> src_lines = read_lines(src);
  std::vector<std::string> tgt_lines = read_lines(tgt);
  if (src_lines.size() != tgt_lines.size()) {
    throw AlignmentError("line counts differ: " + src.string() + " has " +
                         std::to_string(src_lines.size()) + " lines, " +
                         tgt.string() + " has " +
                         std::to_string(tgt_lines.size()));
  }
  const std::string doc =
      doc_id.empty() ? src.stem().string() : std::string(doc_id);

  std::vector<SentencePair> pairs;
  pairs.reserve(src_lines.size());
  for (std::size_t i = 0; i < src_lines.size(); ++i) {
    SentencePair pair;
    pair.src = std::move(src_lines[i]);
    pair.tgt = std::move(tgt_lines[i]);
    pair.doc_id = doc;
    pair.pair_id = doc + ":" + std::to_string(i);
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

std::vector<DocEntry> read_docs_file(const std::filesystem::path& path) {
  std::vector<DocEntry> docs;
  for (const std::string& line : read_lines(path)) {
    const std::vector<std::string> cols = split(line, '\t');
    DocEntry entry;
    entry.doc_id = cols[0];
    if (cols.size() > 1) entry.subcorpus = cols[1];
    docs.push_back(std::move(entry));
  }
  return docs;
}

void apply_docs(std::vector<SentencePair>& pairs,
                const std::vector<DocEntry>& docs) {
  if (pairs.size() != docs.size()) {
    throw AlignmentError("docs file has " + std::to_string(docs.size()) +
                         " lines for " + std::to_string(pairs.size()) +
                         " pairs");
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    pairs[i].doc_id = docs[i].doc_id;
    pairs[i].subcorpus = docs[i].subcorpus;
    pairs[i].pair_id = docs[i].doc_id + ":" + std::to_string(i);
  }
}

void write_lines(std::span<const std::string> lines,
                 const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open " + path.string() + " for writing");
  for (const std::string& line : lines) {
    if (line.find('\n') != std::string::npos) {
      throw DataError("line content contains a newline");
    }
    out << line << '\n';
  }
  if (!out) throw DataError("failed writing " + path.string());
}

void write_parallel_text(std::span<const SentencePair> pairs,
                         const std::filesystem::path& src,
                         const std::filesystem::path& tgt) {
  std::vector<std::string> src_lines, tgt_lines;
  src_lines.reserve(pairs.size());
  tgt_lines.reserve(pairs.size());
  for (const SentencePair& pair : pairs) {
    src_lines.push_back(pair.src);
    tgt_lines.push_back(pair.tgt);
  }
  write_lines(src_lines, src);
  write_lines(tgt_lines, tgt);
}

}  // namespace treeswap
