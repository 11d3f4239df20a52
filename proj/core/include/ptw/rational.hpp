#pragma once

#include <gmpxx.h>

#include <string>

namespace ptw {

// Exact rational scalar. GMP keeps values canonical (den > 0, reduced).
using Rational = mpq_class;

// Accepts "p", "-p", "p/q"; throws InputError otherwise or on q == 0.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

// q^e for any integer exponent; throws MathError on 0^negative.
Rational pow(const Rational& q, long e);

}  // namespace ptw
