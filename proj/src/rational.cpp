#include "nalab/rational.hpp"

#include <cctype>

#include "nalab/error.hpp"

namespace nalab {

std::string rat_text(const Rational& q) { return q.str(); }

Rational parse_rational(std::string_view text, std::size_t* pos) {
  std::size_t i = pos ? *pos : 0;
  std::size_t start = i;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  std::size_t digits = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == digits) fail(Errc::SyntaxError, "expected rational at offset " + std::to_string(start));
  if (i < text.size() && text[i] == '/') {
    ++i;
    std::size_t d2 = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == d2) fail(Errc::SyntaxError, "expected denominator at offset " + std::to_string(i));
  }
  std::string lit(text.substr(start, i - start));
  Rational q(lit);
  if (pos) {
    *pos = i;
  } else if (i != text.size()) {
    fail(Errc::SyntaxError, "trailing characters after rational: '" + std::string(text) + "'");
  }
  return q;
}

Integer factorial(unsigned n) {
  Integer r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Integer r = 1;
  for (unsigned j = 1; j <= k; ++j) {
    r *= (n - k + j);
    r /= j;
  }
  return r;
}

Rational rat_pow(const Rational& q, unsigned n) {
  Rational r = 1;
  Rational base = q;
  while (n) {
    if (n & 1u) r *= base;
    base *= base;
    n >>= 1u;
  }
  return r;
}

}  // namespace nalab
