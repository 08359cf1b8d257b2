#pragma once

#include <string>

#include "nalab/exterior.hpp"
#include "nalab/poly.hpp"

namespace nalab {

enum class VtFlavor { Twisted, Jordan };

/// Superalgebra of even vector type over a commutative polynomial ring G with
/// derivation D: the space G + bar(G), even part G, odd part bar(G).
///
/// Twisted flavor:  a*b = ab,  a*bar(b) = bar(a)*b = bar(ab),
///                  bar(a)*bar(b) = gamma ab + 2 D(a) b + a D(b).
/// Jordan flavor:   same even/odd rules with
///                  bar(a)*bar(b) = delta(a) b - a delta(b), delta = D/2.
struct VtAlgebra {
  std::string id;
  RingSpec ring;
  DerivationSpec deriv;
  PolyElement gamma;  // ignored by the Jordan flavor
  VtFlavor flavor = VtFlavor::Twisted;
  bool even_without_unit = false;  // basis of the even part omits constants

  PolyElement reduce(const PolyElement& p) const { return ring.reduce(p); }
  void check_member(const PolyElement& p) const;
};

struct VtElement {
  PolyElement plain;  // even component, an element of G
  PolyElement bar;    // odd component bar(b)

  bool is_zero() const { return plain.is_zero() && bar.is_zero(); }
  bool operator==(const VtElement&) const = default;

  static VtElement even(PolyElement p) { return {std::move(p), {}}; }
  static VtElement odd(PolyElement b) { return {{}, std::move(b)}; }
};

VtElement vt_add(const VtElement& x, const VtElement& y);
VtElement vt_sub(const VtElement& x, const VtElement& y);
VtElement vt_scale(const Rational& c, const VtElement& x);
VtElement vt_mul(const VtAlgebra& B, const VtElement& x, const VtElement& y);
Parity vt_parity(const VtElement& x);

std::string vt_text(const VtElement& x);
VtElement vt_parse(std::string_view text);

}  // namespace nalab
