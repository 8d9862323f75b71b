#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "positroid/error.hpp"

namespace positroid {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p/q", "p" or "-p/q". Whitespace is not accepted.
inline Rational parse_rational(std::string_view text) {
  if (text.empty()) throw InvalidInput("empty rational");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  bool seen_slash = false;
  bool digit_before = false, digit_after = false;
  for (std::size_t i = start; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '/') {
      if (seen_slash) throw InvalidInput("bad rational: " + std::string(text));
      seen_slash = true;
    } else if (ch >= '0' && ch <= '9') {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      throw InvalidInput("bad rational: " + std::string(text));
    }
  }
  if (!digit_before || (seen_slash && !digit_after))
    throw InvalidInput("bad rational: " + std::string(text));
  std::string body(text.substr(text[0] == '+' ? 1 : 0));
  Rational value;
  value.set_str(body, 10);
  if (value.get_den() == 0) throw InvalidInput("zero denominator: " + body);
  value.canonicalize();
  return value;
}

inline std::string to_string(const Rational& value) { return value.get_str(); }

}  // namespace positroid
