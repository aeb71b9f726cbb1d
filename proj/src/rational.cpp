#include "opgb/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace opgb {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
  size_t i = text[0] == '-' || text[0] == '+' ? 1 : 0;
  bool seen_digit = false, seen_slash = false;
  for (; i < text.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      seen_digit = true;
    } else if (text[i] == '/' && seen_digit && !seen_slash) {
      seen_slash = true;
      seen_digit = false;  // digits required after the slash too
    } else {
      throw std::invalid_argument("parse_rational: bad rational '" + text + "'");
    }
  }
  if (!seen_digit) throw std::invalid_argument("parse_rational: bad rational '" + text + "'");
  Rational q(text);
  if (seen_slash && q.get_den() == 0)
    throw std::invalid_argument("parse_rational: zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& value) { return value.get_str(); }

}  // namespace opgb
