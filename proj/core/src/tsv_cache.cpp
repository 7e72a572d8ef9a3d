#include "treeswap/tsv_cache.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "treeswap/conllu.hpp"
#include "treeswap/error.hpp"
#include "treeswap/strings.hpp"

namespace treeswap {
namespace {

void write_entry(const TsvEntry& entry, std::ostream& out) {
  for (const Token& tok : entry.sentence.tokens) {
    out << escape_tsv_field(entry.pair_id) << '\t' << to_string(entry.side)
        << '\t' << tok.id << '\t' << escape_tsv_field(tok.form) << '\t'
        << escape_tsv_field(tok.lemma) << '\t' << escape_tsv_field(tok.upos)
        << '\t' << tok.head << '\t' << escape_tsv_field(tok.deprel) << '\t'
        << (tok.space_after ? '1' : '0') << '\n';
  }
}

void finish_entry(std::vector<TsvEntry>& out, TsvEntry& current, bool& open) {
  if (!open) return;
  validate_sentence(current.sentence);
  out.push_back(std::move(current));
  current = TsvEntry{};
  open = false;
}

}  // namespace

std::string escape_tsv_field(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  return out;
}

std::string unescape_tsv_field(std::string_view s, std::size_t line_no) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '\\') {
      out += s[i];
      continue;
    }
    if (i + 1 == s.size()) throw ParseError("dangling backslash", line_no);
    switch (s[++i]) {
      case '\\': out += '\\'; break;
      case 't': out += '\t'; break;
      case 'n': out += '\n'; break;
      case 'r': out += '\r'; break;
      default:
        throw ParseError(std::string("unknown escape '\\") + s[i] + "'",
                         line_no);
    }
  }
  return out;
}

void write_tsv_cache(const std::vector<TsvEntry>& entries, std::ostream& out) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0) out << '\n';
    write_entry(entries[i], out);
  }
}

std::vector<TsvEntry> read_tsv_cache(std::istream& in) {
  std::vector<TsvEntry> out;
  TsvEntry current;
  bool open = false;
  std::string line;
  std::size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      finish_entry(out, current, open);
      continue;
    }
    const std::vector<std::string> cols = split(line, '\t');
    if (cols.size() != 9) {
      throw ParseError("expected 9 tab-separated columns, got " +
                           std::to_string(cols.size()),
                       line_no);
    }
    const std::string pair_id = unescape_tsv_field(cols[0], line_no);
    Side side;
    if (cols[1] == "src") {
      side = Side::Src;
    } else if (cols[1] == "tgt") {
      side = Side::Tgt;
    } else {
      throw ParseError("side must be 'src' or 'tgt', got '" + cols[1] + "'",
                       line_no);
    }
    const auto id = parse_int(cols[2]);
    const auto head = parse_int(cols[6]);
    if (!id || !head) throw ParseError("non-numeric id or head", line_no);
    if (cols[8] != "0" && cols[8] != "1") {
      throw ParseError("space_after must be 0 or 1", line_no);
    }

    if (!open) {
      current.pair_id = pair_id;
      current.side = side;
      open = true;
    } else if (current.pair_id != pair_id || current.side != side) {
      throw ParseError("sentence block mixes (pair_id, side) values", line_no);
    }

    Token tok;
    tok.id = static_cast<int>(*id);
    tok.form = unescape_tsv_field(cols[3], line_no);
    tok.lemma = unescape_tsv_field(cols[4], line_no);
    tok.upos = unescape_tsv_field(cols[5], line_no);
    tok.head = static_cast<int>(*head);
    tok.deprel = unescape_tsv_field(cols[7], line_no);
    tok.space_after = cols[8] == "1";
    current.sentence.tokens.push_back(std::move(tok));
  }
  finish_entry(out, current, open);
  return out;
}

void write_tsv_cache_file(const std::vector<TsvEntry>& entries,
                          const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open " + path.string() + " for writing");
  write_tsv_cache(entries, out);
  if (!out) throw DataError("failed writing " + path.string());
}

std::vector<TsvEntry> read_tsv_cache_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  try {
    return read_tsv_cache(in);
  } catch (const Error& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

std::vector<ParsedPair> assemble_pairs(const std::vector<TsvEntry>& entries) {
  std::vector<ParsedPair> pairs;
  std::map<std::string, std::size_t> index;
  std::vector<std::pair<bool, bool>> seen;  // (has src, has tgt)

  for (const TsvEntry& entry : entries) {
    auto [it, inserted] = index.try_emplace(entry.pair_id, pairs.size());
    if (inserted) {
      ParsedPair pair;
      pair.pair_id = entry.pair_id;
      const std::size_t colon = entry.pair_id.rfind(':');
      if (colon != std::string::npos) pair.doc_id = entry.pair_id.substr(0, colon);
      pairs.push_back(std::move(pair));
      seen.emplace_back(false, false);
    }
    ParsedPair& pair = pairs[it->second];
    auto& [has_src, has_tgt] = seen[it->second];
    const bool dup = entry.side == Side::Src ? has_src : has_tgt;
    if (dup) {
      throw DataError("pair '" + entry.pair_id + "' has duplicate " +
                      to_string(entry.side) + " sentence");
    }
    (entry.side == Side::Src ? pair.src : pair.tgt) = entry.sentence;
    (entry.side == Side::Src ? has_src : has_tgt) = true;
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (!seen[i].first || !seen[i].second) {
      throw DataError("pair '" + pairs[i].pair_id + "' is missing its " +
                      (seen[i].first ? "tgt" : "src") + " sentence");
    }
  }
  return pairs;
}

}  // namespace treeswap
