#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nalab/rational.hpp"

namespace nalab {

/// A variable is identified by a family name plus an index. Scalar variables
/// (no index) use index == -1 and print as the bare family name; indexed ones
/// print as `family_index`, e.g. `t_3`.
struct VarId {
  std::string family;
  int index = -1;

  bool operator==(const VarId&) const = default;
  bool operator<(const VarId& o) const {
    if (family != o.family) return family < o.family;
    return index < o.index;
  }
  std::string text() const {
    return index < 0 ? family : family + "_" + std::to_string(index);
  }
};

/// Commutative monomial: sorted (variable, exponent) pairs, exponents > 0.
class Monomial {
 public:
  Monomial() = default;
  static Monomial one() { return Monomial(); }
  static Monomial var(const VarId& v, int exp = 1);

  bool is_one() const { return factors_.empty(); }
  int degree() const;
  int exponent(const VarId& v) const;
  const std::vector<std::pair<VarId, int>>& factors() const { return factors_; }

  Monomial times(const Monomial& o) const;
  // Removes one power of v; precondition: exponent(v) > 0.
  Monomial divided_by_var(const VarId& v) const;

  bool operator==(const Monomial&) const = default;
  // deglex: total degree first, then lexicographic exponent comparison over
  // ascending variable order.
  static bool deglex_less(const Monomial& a, const Monomial& b);

  std::string text() const;

 private:
  std::vector<std::pair<VarId, int>> factors_;
};

struct MonoLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::deglex_less(a, b);
  }
};

/// Exact multivariate polynomial; no zero coefficients are stored and the
/// zero polynomial has an empty term map.
class PolyElement {
 public:
  PolyElement() = default;
  static PolyElement zero() { return PolyElement(); }
  static PolyElement constant(const Rational& c);
  static PolyElement variable(const VarId& v, int exp = 1);
  static PolyElement monomial(const Monomial& m, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  int degree() const;  // max total degree; -1 for the zero polynomial
  const std::map<Monomial, Rational, MonoLess>& terms() const { return terms_; }
  Rational coeff(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);

  PolyElement operator+(const PolyElement& o) const;
  PolyElement operator-(const PolyElement& o) const;
  PolyElement operator*(const PolyElement& o) const;
  PolyElement operator-() const;
  PolyElement scaled(const Rational& c) const;
  PolyElement pow(unsigned n) const;
  bool operator==(const PolyElement&) const = default;

  // Drops every term of total degree above `cap`.
  PolyElement truncated(int cap) const;

  // Collects the distinct variables of the support.
  std::vector<VarId> variables() const;

  std::string text() const;
  static PolyElement parse(std::string_view text);

 private:
  std::map<Monomial, Rational, MonoLess> terms_;
};

PolyElement poly_add(const PolyElement& p, const PolyElement& q);
PolyElement poly_mul(const PolyElement& p, const PolyElement& q);

/// Derivation given by its action on variables: explicit images plus shift
/// families with D(f_i) = f_{i+1} (and D(f_last) = 0 when bounded).
struct DerivationSpec {
  struct Shift {
    std::string family;
    std::optional<int> last_index;  // f_last maps to 0 when set
  };

  std::map<VarId, PolyElement> action;
  std::vector<Shift> shifts;

  // Image of a single variable; nullopt when the derivation is undefined on it.
  std::optional<PolyElement> image_of(const VarId& v) const;
};

/// Leibniz extension of D to the whole ring.
PolyElement derive(const DerivationSpec& d, const PolyElement& p);

/// Ring-homomorphism extension of the variable map; every variable of p must
/// be mapped.
PolyElement substitute_hom(const std::map<VarId, PolyElement>& map, const PolyElement& p);

/// Variable universe of a polynomial ring together with an optional degree
/// truncation: the ring acts as the quotient by all monomials above the cap.
struct RingSpec {
  struct Family {
    std::string name;
    bool indexed = false;
    int max_index = -1;  // for indexed families: largest admissible index, -1 = unbounded
  };

  std::vector<Family> families;
  std::optional<int> degree_cap;

  bool contains(const VarId& v) const;
  PolyElement reduce(const PolyElement& p) const;
  // All monomials of total degree <= bound over the (bounded) universe.
  std::vector<Monomial> monomials_up_to(int bound) const;
  std::vector<VarId> bounded_vars(int fallback_index_bound) const;
};

}  // namespace nalab
