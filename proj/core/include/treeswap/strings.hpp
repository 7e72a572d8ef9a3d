#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace treeswap {

std::vector<std::string> split(std::string_view s, char delim);

// Fields separated by runs of ASCII whitespace; no empty fields.
std::vector<std::string_view> split_whitespace(std::string_view s);

std::string_view trim(std::string_view s);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

// Whole-string numeric parses; nullopt unless every character is consumed.
std::optional<long long> parse_int(std::string_view s);
std::optional<double> parse_double(std::string_view s);

}  // namespace treeswap
