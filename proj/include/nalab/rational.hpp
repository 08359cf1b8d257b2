#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>

namespace nalab {

// Exact arbitrary-precision scalars. mpq keeps values reduced with a
// positive denominator, so equality is structural.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline Rational make_rational(long long num, long long den = 1) {
  return Rational(Integer(num), Integer(den));
}

std::string rat_text(const Rational& q);

// Parses "p", "-p", "p/q". When `pos` is given, starts there and advances it
// past the literal; otherwise the whole string must be consumed.
Rational parse_rational(std::string_view text, std::size_t* pos = nullptr);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);
Rational rat_pow(const Rational& q, unsigned n);

}  // namespace nalab
