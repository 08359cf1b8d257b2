#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nalab/exterior.hpp"
#include "nalab/rational.hpp"

namespace nalab {

/// Point of the index semigroup V, encoded as an integer tuple under
/// componentwise addition.
using AvfPoint = std::vector<long long>;

std::string avf_point_text(const AvfPoint& v);

/// Superalgebra of vector fields on a line: even basis {a_v}, odd basis
/// {x_v}, products
///   a_u a_v = a_{u+v},  a_u x_v = x_u a_v = x_{u+v},
///   x_u x_v = (4 tau(u) + 2 tau(v)) a_{lambda(u+v)}.
/// tau is additive (a weight vector); lambda(u) = u - lambda_shift on its
/// domain. tau_override exists so suites can install a deliberately broken
/// tau as a negative control.
struct AvfAlgebra {
  std::string id;
  int dim = 1;
  std::vector<Rational> tau_weights;
  AvfPoint lambda_shift;
  std::function<Rational(const AvfPoint&)> tau_override;

  Rational tau(const AvfPoint& u) const;
  // nullopt when u is outside the domain of lambda
  std::optional<AvfPoint> lambda(const AvfPoint& u) const;
};

struct AvfElement {
  std::map<AvfPoint, Rational> even;  // coefficients of a_v
  std::map<AvfPoint, Rational> odd;   // coefficients of x_v

  bool is_zero() const { return even.empty() && odd.empty(); }
  bool operator==(const AvfElement&) const = default;

  static AvfElement a(const AvfPoint& v, const Rational& c = 1);
  static AvfElement x(const AvfPoint& v, const Rational& c = 1);
};

AvfElement avf_add(const AvfElement& p, const AvfElement& q);
AvfElement avf_sub(const AvfElement& p, const AvfElement& q);
AvfElement avf_scale(const Rational& c, const AvfElement& p);
AvfElement avf_mul(const AvfAlgebra& A, const AvfElement& p, const AvfElement& q);
Parity avf_parity(const AvfElement& p);

std::string avf_text(const AvfElement& p);
AvfElement avf_parse(std::string_view text);

}  // namespace nalab
