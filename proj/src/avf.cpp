#include "nalab/avf.hpp"

#include <cctype>

#include "nalab/error.hpp"

namespace nalab {

namespace {

AvfPoint add_points(const AvfPoint& u, const AvfPoint& v) {
  AvfPoint r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] + v[i];
  return r;
}

bool is_origin(const AvfPoint& u) {
  for (long long c : u)
    if (c) return false;
  return true;
}

}  // namespace

std::string avf_point_text(const AvfPoint& v) {
  if (v.size() == 1) return std::to_string(v[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

Rational AvfAlgebra::tau(const AvfPoint& u) const {
  if (tau_override) return tau_override(u);
  Rational r = 0;
  for (std::size_t i = 0; i < u.size() && i < tau_weights.size(); ++i)
    r += tau_weights[i] * Rational(u[i]);
  return r;
}

std::optional<AvfPoint> AvfAlgebra::lambda(const AvfPoint& u) const {
  if (is_origin(u)) return std::nullopt;
  AvfPoint r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    r[i] = u[i] - (i < lambda_shift.size() ? lambda_shift[i] : 0);
    if (r[i] < 0) return std::nullopt;  // stays inside V
  }
  return r;
}

AvfElement AvfElement::a(const AvfPoint& v, const Rational& c) {
  AvfElement e;
  if (c != 0) e.even.emplace(v, c);
  return e;
}

AvfElement AvfElement::x(const AvfPoint& v, const Rational& c) {
  AvfElement e;
  if (c != 0) e.odd.emplace(v, c);
  return e;
}

namespace {
void accumulate(std::map<AvfPoint, Rational>& into, const AvfPoint& v, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = into.try_emplace(v, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) into.erase(it);
  }
}
}  // namespace

AvfElement avf_add(const AvfElement& p, const AvfElement& q) {
  AvfElement r = p;
  for (const auto& [v, c] : q.even) accumulate(r.even, v, c);
  for (const auto& [v, c] : q.odd) accumulate(r.odd, v, c);
  return r;
}

AvfElement avf_sub(const AvfElement& p, const AvfElement& q) {
  AvfElement r = p;
  for (const auto& [v, c] : q.even) accumulate(r.even, v, -c);
  for (const auto& [v, c] : q.odd) accumulate(r.odd, v, -c);
  return r;
}

AvfElement avf_scale(const Rational& c, const AvfElement& p) {
  AvfElement r;
  if (c == 0) return r;
  for (const auto& [v, k] : p.even) r.even.emplace(v, k * c);
  for (const auto& [v, k] : p.odd) r.odd.emplace(v, k * c);
  return r;
}

AvfElement avf_mul(const AvfAlgebra& A, const AvfElement& p, const AvfElement& q) {
  AvfElement r;
  for (const auto& [u, cu] : p.even)
    for (const auto& [v, cv] : q.even) accumulate(r.even, add_points(u, v), cu * cv);
  for (const auto& [u, cu] : p.even)
    for (const auto& [v, cv] : q.odd) accumulate(r.odd, add_points(u, v), cu * cv);
  for (const auto& [u, cu] : p.odd)
    for (const auto& [v, cv] : q.even) accumulate(r.odd, add_points(u, v), cu * cv);
  for (const auto& [u, cu] : p.odd) {
    for (const auto& [v, cv] : q.odd) {
      Rational coef = (A.tau(u) * 4 + A.tau(v) * 2) * cu * cv;
      if (coef == 0) continue;
      auto target = A.lambda(add_points(u, v));
      if (!target)
        fail(Errc::LambdaUndefined,
             "x_" + avf_point_text(u) + " * x_" + avf_point_text(v) + " needs lambda(" +
                 avf_point_text(add_points(u, v)) + ")");
      accumulate(r.even, *target, coef);
    }
  }
  return r;
}

Parity avf_parity(const AvfElement& p) {
  bool even = !p.even.empty(), odd = !p.odd.empty();
  if (even && odd) return Parity::Mixed;
  if (odd) return Parity::Odd;
  return Parity::Even;
}

std::string avf_text(const AvfElement& p) {
  if (p.is_zero()) return "0";
  std::string s;
  auto emit = [&](char kind, const AvfPoint& v, const Rational& c) {
    bool neg = c < 0;
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    Rational a = neg ? Rational(-c) : c;
    if (a != 1) s += rat_text(a) + "*";
    s += kind;
    s += "_" + avf_point_text(v);
  };
  for (const auto& [v, c] : p.even) emit('a', v, c);
  for (const auto& [v, c] : p.odd) emit('x', v, c);
  return s;
}

namespace {
AvfPoint parse_point(std::string_view t, std::size_t& i) {
  AvfPoint v;
  auto parse_int = [&]() {
    std::size_t d = i;
    if (i < t.size() && t[i] == '-') ++i;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
    if (i == d) fail(Errc::SyntaxError, "expected integer in index tuple");
    return std::stoll(std::string(t.substr(d, i - d)));
  };
  if (i < t.size() && t[i] == '(') {
    ++i;
    while (true) {
      v.push_back(parse_int());
      if (i < t.size() && t[i] == ',') {
        ++i;
        continue;
      }
      if (i < t.size() && t[i] == ')') {
        ++i;
        break;
      }
      fail(Errc::SyntaxError, "unterminated index tuple");
    }
  } else {
    v.push_back(parse_int());
  }
  return v;
}
}  // namespace

AvfElement avf_parse(std::string_view t) {
  AvfElement e;
  std::size_t i = 0;
  auto skip = [&] { while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i; };
  skip();
  if (i >= t.size()) fail(Errc::SyntaxError, "empty element");
  if (t.substr(i) == "0") return e;
  bool neg = false;
  if (t[i] == '-') { neg = true; ++i; }
  while (true) {
    skip();
    Rational c = 1;
    if (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
      c = parse_rational(t, &i);
      skip();
      if (i < t.size() && t[i] == '*') { ++i; skip(); }
    }
    if (i >= t.size() || (t[i] != 'a' && t[i] != 'x'))
      fail(Errc::SyntaxError, "expected a_ or x_ basis symbol");
    char kind = t[i];
    ++i;
    if (i >= t.size() || t[i] != '_') fail(Errc::SyntaxError, "expected '_' after basis symbol");
    ++i;
    AvfPoint v = parse_point(t, i);
    Rational coef = neg ? Rational(-c) : c;
    if (kind == 'a') accumulate(e.even, v, coef);
    else accumulate(e.odd, v, coef);
    skip();
    if (i >= t.size()) break;
    if (t[i] == '+') { neg = false; ++i; }
    else if (t[i] == '-') { neg = true; ++i; }
    else fail(Errc::SyntaxError, "unexpected character in element");
  }
  return e;
}

}  // namespace nalab
