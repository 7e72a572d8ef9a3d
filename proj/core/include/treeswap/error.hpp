#pragma once

#include <stdexcept>
#include <string>

namespace treeswap {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text (bad column count, non-numeric field, ...).
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line)
      : Error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Well-formed text describing an invalid structure (bad head, cycle, ...).
class StructuralError : public Error {
 public:
  using Error::Error;
};

// Line-aligned inputs whose lengths disagree.
class AlignmentError : public Error {
 public:
  using Error::Error;
};

// Anything else that makes the data unusable (missing file, bad value, ...).
class DataError : public Error {
 public:
  using Error::Error;
};

}  // namespace treeswap
