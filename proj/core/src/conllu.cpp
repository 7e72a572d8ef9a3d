#include "treeswap/conllu.hpp"

#include <fstream>
#include <sstream>

#include "treeswap/error.hpp"
#include "treeswap/strings.hpp"

namespace treeswap {
namespace {

constexpr std::string_view kTextPrefix = "# text = ";

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

// True for multiword ranges ("3-4") and empty nodes ("3.1").
bool is_skipped_id(std::string_view id) {
  for (char sep : {'-', '.'}) {
    const std::size_t pos = id.find(sep);
    if (pos != std::string_view::npos && all_digits(id.substr(0, pos)) &&
        all_digits(id.substr(pos + 1))) {
      return true;
    }
  }
  return false;
}

void finish_sentence(Sentence& current, bool& in_block, std::size_t line_no,
                     std::vector<Sentence>& out) {
  if (!in_block) return;
  if (current.tokens.empty()) {
    throw ParseError("sentence block with no token lines", line_no);
  }
  validate_sentence(current);
  out.push_back(std::move(current));
  current = Sentence{};
  in_block = false;
}

}  // namespace

std::vector<Sentence> parse_conllu(std::string_view text) {
  std::vector<Sentence> out;
  Sentence current;
  bool in_block = false;
  std::size_t line_no = 0;
  std::size_t start = 0;

  while (start <= text.size()) {
    ++line_no;
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (start > text.size() && line.empty()) break;  // no line after final \n
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (line.empty()) {
      finish_sentence(current, in_block, line_no, out);
      continue;
    }
    in_block = true;
    if (line.front() == '#') {
      if (line.substr(0, kTextPrefix.size()) == kTextPrefix) {
        current.text = std::string(line.substr(kTextPrefix.size()));
      } else {
        current.comments.emplace_back(line);
      }
      continue;
    }

    const std::vector<std::string> cols = split(line, '\t');
    if (cols.size() != 10) {
      throw ParseError("expected 10 tab-separated columns, got " +
                           std::to_string(cols.size()),
                       line_no);
    }
    if (is_skipped_id(cols[0])) continue;
    if (!all_digits(cols[0])) {
      throw ParseError("unparseable token id '" + cols[0] + "'", line_no);
    }
    if (!all_digits(cols[6])) {
      throw ParseError("non-numeric head '" + cols[6] + "'", line_no);
    }
    if (cols[1].empty() || cols[2].empty()) {
      throw ParseError("empty form or lemma", line_no);
    }

    Token tok;
    tok.id = static_cast<int>(*parse_int(cols[0]));
    tok.form = cols[1];
    tok.lemma = cols[2];
    tok.upos = cols[3];
    tok.head = static_cast<int>(*parse_int(cols[6]));
    tok.deprel = cols[7];
    for (const std::string& attr : split(cols[9], '|')) {
      if (attr == "SpaceAfter=No") tok.space_after = false;
    }
    current.tokens.push_back(std::move(tok));
  }
  finish_sentence(current, in_block, line_no, out);
  return out;
}

std::vector<Sentence> parse_conllu_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_conllu(buf.str());
  } catch (const Error& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

std::string to_conllu(const Sentence& sentence) {
  std::string out;
  if (sentence.text) {
    out += std::string(kTextPrefix) + *sentence.text + "\n";
  }
  for (const std::string& comment : sentence.comments) {
    out += comment + "\n";
  }
  for (const Token& tok : sentence.tokens) {
    for (const std::string* field : {&tok.form, &tok.lemma, &tok.upos, &tok.deprel}) {
      if (field->find('\t') != std::string::npos ||
          field->find('\n') != std::string::npos) {
        throw DataError("token field contains tab or newline");
      }
    }
    if (tok.form.empty() || tok.lemma.empty()) {
      throw DataError("token with empty form or lemma");
    }
    out += std::to_string(tok.id);
    out += '\t';
    out += tok.form;
    out += '\t';
    out += tok.lemma;
    out += '\t';
    out += tok.upos.empty() ? "_" : tok.upos;
    out += "\t_\t_\t";
    out += std::to_string(tok.head);
    out += '\t';
    out += tok.deprel.empty() ? "_" : tok.deprel;
    out += "\t_\t";
    out += tok.space_after ? "_" : "SpaceAfter=No";
    out += '\n';
  }
  return out;
}

void validate_sentence(const Sentence& sentence) {
  const int n = static_cast<int>(sentence.tokens.size());
  int roots = 0;
  for (int i = 0; i < n; ++i) {
    const Token& tok = sentence.tokens[i];
    if (tok.id != i + 1) {
      throw StructuralError("non-contiguous token ids: expected " +
                            std::to_string(i + 1) + ", got " +
                            std::to_string(tok.id));
    }
    if (tok.head < 0 || tok.head > n) {
      throw StructuralError("token " + std::to_string(tok.id) +
                            " references nonexistent head " +
                            std::to_string(tok.head));
    }
    if (tok.head == tok.id) {
      throw StructuralError("token " + std::to_string(tok.id) +
                            " is its own head");
    }
    if (tok.head == 0) ++roots;
  }
  if (roots != 1) {
    throw StructuralError("sentence has " + std::to_string(roots) +
                          " roots, expected exactly 1");
  }
}

}  // namespace treeswap
