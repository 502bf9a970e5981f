#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tassel {

// Binary strings are std::string over '0' and '1'.
using BitString = std::string;

inline void require_bits(const BitString& s) {
  for (char ch : s)
    if (ch != '0' && ch != '1') throw std::invalid_argument("not a binary string: \"" + s + "\"");
}

inline BitString reversed(BitString s) {
  std::reverse(s.begin(), s.end());
  return s;
}

// Representative up to reversal: the lexicographically smaller orientation.
inline BitString canonical(const BitString& s) { return std::min(s, reversed(s)); }

inline bool has_one(const BitString& s) { return s.find('1') != BitString::npos; }

inline int leading_zeros(const BitString& s) {
  auto p = s.find('1');
  return static_cast<int>(p == BitString::npos ? s.size() : p);
}

inline int trailing_zeros(const BitString& s) {
  auto p = s.rfind('1');
  return static_cast<int>(p == BitString::npos ? s.size() : s.size() - 1 - p);
}

// Starts and ends with at least c zeros and contains a one.
inline bool is_c_padded(const BitString& s, int c) {
  return has_one(s) && leading_zeros(s) >= c && trailing_zeros(s) >= c;
}

// p or its reverse occurs in text as a consecutive substring.
inline bool occurs_up_to_reversal(const BitString& text, const BitString& p) {
  return text.find(p) != BitString::npos || text.find(reversed(p)) != BitString::npos;
}

}  // namespace tassel
