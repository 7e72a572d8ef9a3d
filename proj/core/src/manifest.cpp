#include "treeswap/manifest.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "treeswap/error.hpp"
#include "treeswap/rng.hpp"

namespace treeswap {

std::uint64_t file_digest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw DataError("read failure on " + path.string());
  return fnv1a64(buffer.str());
}

std::string hex64(std::uint64_t value) {
  static const char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[value & 0xF];
    value >>= 4;
  }
  return out;
}

void Manifest::set(std::string_view key, std::string_view value) {
  if (key.empty() || key.find('=') != std::string_view::npos ||
      key.find('\n') != std::string_view::npos) {
    throw DataError("bad manifest key '" + std::string(key) + "'");
  }
  if (value.find('\n') != std::string_view::npos) {
    throw DataError("manifest value for '" + std::string(key) +
                    "' contains a newline");
  }
  for (auto& entry : entries_) {
    if (entry.first == key) {
      entry.second = std::string(value);
      return;
    }
  }
  entries_.emplace_back(std::string(key), std::string(value));
}

void Manifest::set(std::string_view key, std::uint64_t value) {
  set(key, std::string_view(std::to_string(value)));
}

void Manifest::set(std::string_view key, std::int64_t value) {
  set(key, std::string_view(std::to_string(value)));
}

void Manifest::set(std::string_view key, int value) {
  set(key, std::string_view(std::to_string(value)));
}

void Manifest::set(std::string_view key, double value) {
  std::ostringstream out;
  out.precision(17);
  out << value;
  set(key, std::string_view(out.str()));
}

void Manifest::set_digest(std::string_view key,
                          const std::filesystem::path& file) {
  set(key, std::string_view(hex64(file_digest(file))));
}

bool Manifest::contains(std::string_view key) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const auto& e) { return e.first == key; });
}

std::string Manifest::to_string() const {
  std::string out;
  for (const auto& [key, value] : entries_) {
    out += key;
    out += '=';
    out += value;
    out += '\n';
  }
  return out;
}

void Manifest::write(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open " + path.string());
  out << to_string();
  if (!out.flush()) throw DataError("write failure on " + path.string());
}

Manifest Manifest::read(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  Manifest manifest;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ParseError("manifest line is not key=value", line_no);
    }
    manifest.set(std::string_view(line).substr(0, eq),
                 std::string_view(line).substr(eq + 1));
  }
  return manifest;
}

}  // namespace treeswap
