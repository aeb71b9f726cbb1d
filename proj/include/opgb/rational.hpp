#pragma once

#include <gmpxx.h>

#include <string>

namespace opgb {

// Exact rational coefficients. GMP keeps values canonical under arithmetic;
// raw numerator/denominator pairs go through make_rational so they get
// canonicalized exactly once.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// Accepts "7", "-7", "3/2", "-3/2". Throws std::invalid_argument otherwise.
Rational parse_rational(const std::string& text);

// "7" or "3/2"; denominator printed only when it is not 1.
std::string format_rational(const Rational& value);

}  // namespace opgb
