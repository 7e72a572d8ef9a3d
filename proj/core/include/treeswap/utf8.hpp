#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace treeswap {

// Number of Unicode codepoints (counts UTF-8 lead bytes; malformed bytes
// count as one codepoint each).
std::size_t codepoint_count(std::string_view s);

// Case-map the first codepoint only. Covers ASCII, Latin-1 Supplement and
// Latin Extended-A, which is all of English and Hungarian; anything else is
// returned unchanged. Irregular singletons (ß, ı, İ, ſ) are left alone.
std::string uppercase_first(std::string_view s);
std::string lowercase_first(std::string_view s);

// True when the first codepoint has a distinct uppercase form.
bool first_is_lowercase(std::string_view s);

}  // namespace treeswap
