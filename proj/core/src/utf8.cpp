#include "treeswap/utf8.hpp"

namespace treeswap {
namespace {

struct Decoded {
  char32_t cp = 0;
  std::size_t len = 0;  // bytes consumed; 0 when input is empty
};

Decoded decode_first(std::string_view s) {
  if (s.empty()) return {};
  const auto b0 = static_cast<unsigned char>(s[0]);
  if (b0 < 0x80) return {b0, 1};
  auto cont = [&](std::size_t i) {
    return i < s.size() && (static_cast<unsigned char>(s[i]) & 0xc0) == 0x80;
  };
  if ((b0 & 0xe0) == 0xc0 && cont(1)) {
    return {static_cast<char32_t>(((b0 & 0x1f) << 6) |
                                  (static_cast<unsigned char>(s[1]) & 0x3f)),
            2};
  }
  if ((b0 & 0xf0) == 0xe0 && cont(1) && cont(2)) {
    return {static_cast<char32_t>(((b0 & 0x0f) << 12) |
                                  ((static_cast<unsigned char>(s[1]) & 0x3f) << 6) |
                                  (static_cast<unsigned char>(s[2]) & 0x3f)),
            3};
  }
  if ((b0 & 0xf8) == 0xf0 && cont(1) && cont(2) && cont(3)) {
    return {static_cast<char32_t>(((b0 & 0x07) << 18) |
                                  ((static_cast<unsigned char>(s[1]) & 0x3f) << 12) |
                                  ((static_cast<unsigned char>(s[2]) & 0x3f) << 6) |
                                  (static_cast<unsigned char>(s[3]) & 0x3f)),
            4};
  }
  return {b0, 1};  // malformed byte, pass through
}

std::string encode(char32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xc0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xe0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  } else {
    out.push_back(static_cast<char>(0xf0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3f)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  }
  return out;
}

// Latin Extended-A alternates upper/lower in pairs, with the parity flipping
// twice and a few unpaired singletons in between.
bool latin_a_pair(char32_t cp, bool& upper_is_even) {
  if (cp >= 0x0100 && cp <= 0x0137) {
    if (cp == 0x0130 || cp == 0x0131) return false;  // Turkish dotted/dotless i
    upper_is_even = true;
    return true;
  }
  if (cp >= 0x0139 && cp <= 0x0148) {
    upper_is_even = false;
    return true;
  }
  if (cp >= 0x014a && cp <= 0x0177) {
    upper_is_even = true;
    return true;
  }
  if (cp >= 0x0179 && cp <= 0x017e) {
    upper_is_even = false;
    return true;
  }
  return false;
}

char32_t to_upper_cp(char32_t cp) {
  if (cp >= 'a' && cp <= 'z') return cp - 0x20;
  if (cp >= 0x00e0 && cp <= 0x00fe && cp != 0x00f7) return cp - 0x20;
  if (cp == 0x00ff) return 0x0178;
  bool upper_is_even = false;
  if (latin_a_pair(cp, upper_is_even)) {
    const bool is_lower = (cp % 2 == 0) != upper_is_even;
    return is_lower ? cp - 1 : cp;
  }
  return cp;
}

char32_t to_lower_cp(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
  if (cp >= 0x00c0 && cp <= 0x00de && cp != 0x00d7) return cp + 0x20;
  if (cp == 0x0178) return 0x00ff;
  bool upper_is_even = false;
  if (latin_a_pair(cp, upper_is_even)) {
    const bool is_upper = (cp % 2 == 0) == upper_is_even;
    return is_upper ? cp + 1 : cp;
  }
  return cp;
}

std::string map_first(std::string_view s, char32_t (*f)(char32_t)) {
  const Decoded d = decode_first(s);
  if (d.len == 0) return std::string(s);
  const char32_t mapped = f(d.cp);
  if (mapped == d.cp) return std::string(s);
  return encode(mapped) + std::string(s.substr(d.len));
}

}  // namespace

std::size_t codepoint_count(std::string_view s) {
  std::size_t n = 0;
  for (unsigned char c : s) {
    if ((c & 0xc0) != 0x80) ++n;
  }
  return n;
}

std::string uppercase_first(std::string_view s) { return map_first(s, to_upper_cp); }

std::string lowercase_first(std::string_view s) { return map_first(s, to_lower_cp); }

bool first_is_lowercase(std::string_view s) {
  const Decoded d = decode_first(s);
  return d.len > 0 && to_upper_cp(d.cp) != d.cp;
}

}  // namespace treeswap
