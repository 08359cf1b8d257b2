#include "nalab/vt.hpp"

#include <cctype>

#include "nalab/error.hpp"

namespace nalab {

void VtAlgebra::check_member(const PolyElement& p) const {
  for (const auto& v : p.variables())
    if (!ring.contains(v))
      fail(Errc::RingMismatch, "variable " + v.text() + " is not in the ring of " + id);
}

VtElement vt_add(const VtElement& x, const VtElement& y) {
  return {x.plain + y.plain, x.bar + y.bar};
}

VtElement vt_sub(const VtElement& x, const VtElement& y) {
  return {x.plain - y.plain, x.bar - y.bar};
}

VtElement vt_scale(const Rational& c, const VtElement& x) {
  return {x.plain.scaled(c), x.bar.scaled(c)};
}

namespace {
void mul_into(PolyElement& into, const PolyElement& p, const PolyElement& q, const Rational& c) {
  if (c == 0) return;
  for (const auto& [m1, c1] : p.terms())
    for (const auto& [m2, c2] : q.terms()) into.add_term(m1.times(m2), c1 * c2 * c);
}
}  // namespace

VtElement vt_mul(const VtAlgebra& B, const VtElement& x, const VtElement& y) {
  const PolyElement& a = x.plain;
  const PolyElement& b = x.bar;
  const PolyElement& c = y.plain;
  const PolyElement& d = y.bar;

  PolyElement even;
  mul_into(even, a, c, 1);
  if (!b.is_zero() && !d.is_zero()) {
    if (B.flavor == VtFlavor::Twisted) {
      if (!B.gamma.is_zero()) mul_into(even, B.gamma * b, d, 1);
      mul_into(even, derive(B.deriv, b), d, 2);
      mul_into(even, b, derive(B.deriv, d), 1);
    } else {
      // delta = D/2
      mul_into(even, derive(B.deriv, b), d, Rational(1, 2));
      mul_into(even, b, derive(B.deriv, d), Rational(-1, 2));
    }
  }
  PolyElement bar;
  mul_into(bar, a, d, 1);
  mul_into(bar, b, c, 1);
  return {B.reduce(even), B.reduce(bar)};
}

Parity vt_parity(const VtElement& x) {
  bool even = !x.plain.is_zero(), odd = !x.bar.is_zero();
  if (even && odd) return Parity::Mixed;
  if (odd) return Parity::Odd;
  return Parity::Even;
}

std::string vt_text(const VtElement& x) {
  if (x.is_zero()) return "0";
  std::string s;
  if (!x.plain.is_zero()) s += x.plain.text();
  if (!x.bar.is_zero()) {
    if (!s.empty()) s += " + ";
    s += "bar(" + x.bar.text() + ")";
  }
  return s;
}

VtElement vt_parse(std::string_view t) {
  // canonical form: "<poly>", "bar(<poly>)", "<poly> + bar(<poly>)", or "0"
  auto trim = [](std::string_view v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
    return v;
  };
  std::string_view s = trim(t);
  if (s == "0") return {};
  VtElement r;
  auto bar_at = s.find("bar(");
  if (bar_at == std::string_view::npos) {
    r.plain = PolyElement::parse(s);
    return r;
  }
  if (!s.ends_with(")")) fail(Errc::SyntaxError, "unterminated bar(...)");
  std::string_view inner = s.substr(bar_at + 4, s.size() - bar_at - 5);
  r.bar = PolyElement::parse(trim(inner));
  std::string_view head = trim(s.substr(0, bar_at));
  if (!head.empty()) {
    if (!head.ends_with("+")) fail(Errc::SyntaxError, "expected '+' before bar(...)");
    head.remove_suffix(1);
    r.plain = PolyElement::parse(trim(head));
  }
  return r;
}

}  // namespace nalab
