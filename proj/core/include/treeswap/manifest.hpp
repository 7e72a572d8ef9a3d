#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace treeswap {

// FNV-1a over the file's raw bytes, as a 16-digit hex string.
std::uint64_t file_digest(const std::filesystem::path& path);
std::string hex64(std::uint64_t value);

// Run record: "key=value" lines in insertion order, one per entry. Keys are
// unique and may not contain '=' or newlines; values may not contain
// newlines.
class Manifest {
 public:
  void set(std::string_view key, std::string_view value);
  void set(std::string_view key, std::uint64_t value);
  void set(std::string_view key, std::int64_t value);
  void set(std::string_view key, int value);
  void set(std::string_view key, double value);
  void set_digest(std::string_view key, const std::filesystem::path& file);

  bool contains(std::string_view key) const;
  std::string to_string() const;
  void write(const std::filesystem::path& path) const;

  static Manifest read(const std::filesystem::path& path);

  const std::vector<std::pair<std::string, std::string>>& entries() const {
    return entries_;
  }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

}  // namespace treeswap
