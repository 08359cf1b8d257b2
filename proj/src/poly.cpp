#include "nalab/poly.hpp"

#include <algorithm>
#include <cctype>

#include "nalab/error.hpp"

namespace nalab {

Monomial Monomial::var(const VarId& v, int exp) {
  Monomial m;
  if (exp > 0) m.factors_.push_back({v, exp});
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [v, e] : factors_) d += e;
  return d;
}

int Monomial::exponent(const VarId& v) const {
  for (const auto& [w, e] : factors_)
    if (w == v) return e;
  return 0;
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial r;
  r.factors_.reserve(factors_.size() + o.factors_.size());
  auto a = factors_.begin(), ae = factors_.end();
  auto b = o.factors_.begin(), be = o.factors_.end();
  while (a != ae && b != be) {
    if (a->first < b->first) {
      r.factors_.push_back(*a++);
    } else if (b->first < a->first) {
      r.factors_.push_back(*b++);
    } else {
      r.factors_.push_back({a->first, a->second + b->second});
      ++a;
      ++b;
    }
  }
  r.factors_.insert(r.factors_.end(), a, ae);
  r.factors_.insert(r.factors_.end(), b, be);
  return r;
}

Monomial Monomial::divided_by_var(const VarId& v) const {
  Monomial r;
  for (const auto& [w, e] : factors_) {
    if (w == v) {
      if (e > 1) r.factors_.push_back({w, e - 1});
    } else {
      r.factors_.push_back({w, e});
    }
  }
  return r;
}

bool Monomial::deglex_less(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  auto i = a.factors_.begin(), ie = a.factors_.end();
  auto j = b.factors_.begin(), je = b.factors_.end();
  while (i != ie && j != je) {
    if (i->first != j->first) {
      // The monomial holding a power of the earlier variable is the larger one.
      return j->first < i->first;
    }
    if (i->second != j->second) return i->second < j->second;
    ++i;
    ++j;
  }
  // Equal on the shared prefix and same total degree: only possible when both
  // are exhausted.
  return false;
}

std::string Monomial::text() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& [v, e] : factors_) {
    if (!s.empty()) s += "*";
    s += v.text();
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

PolyElement PolyElement::constant(const Rational& c) {
  PolyElement p;
  p.add_term(Monomial::one(), c);
  return p;
}

PolyElement PolyElement::variable(const VarId& v, int exp) {
  PolyElement p;
  p.add_term(Monomial::var(v, exp), 1);
  return p;
}

PolyElement PolyElement::monomial(const Monomial& m, const Rational& c) {
  PolyElement p;
  p.add_term(m, c);
  return p;
}

bool PolyElement::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational PolyElement::constant_term() const {
  auto it = terms_.find(Monomial::one());
  return it == terms_.end() ? Rational(0) : it->second;
}

int PolyElement::degree() const {
  if (terms_.empty()) return -1;
  // deglex keeps the highest-degree monomial last
  return terms_.rbegin()->first.degree();
}

Rational PolyElement::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void PolyElement::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

PolyElement PolyElement::operator+(const PolyElement& o) const {
  PolyElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

PolyElement PolyElement::operator-(const PolyElement& o) const {
  PolyElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

PolyElement PolyElement::operator-() const {
  PolyElement r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

PolyElement PolyElement::operator*(const PolyElement& o) const {
  PolyElement r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(m1.times(m2), c1 * c2);
  return r;
}

PolyElement PolyElement::scaled(const Rational& c) const {
  PolyElement r;
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

PolyElement PolyElement::pow(unsigned n) const {
  PolyElement r = PolyElement::constant(1);
  for (unsigned i = 0; i < n; ++i) r = r * *this;
  return r;
}

PolyElement PolyElement::truncated(int cap) const {
  PolyElement r;
  for (const auto& [m, c] : terms_)
    if (m.degree() <= cap) r.terms_.emplace(m, c);
  return r;
}

std::vector<VarId> PolyElement::variables() const {
  std::vector<VarId> vs;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors())
      if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
  std::sort(vs.begin(), vs.end());
  return vs;
}

std::string PolyElement::text() const {
  if (terms_.empty()) return "0";
  std::string s;
  // print leading (highest) terms first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Monomial& m = it->first;
    Rational c = it->second;
    bool neg = c < 0;
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    Rational a = neg ? Rational(-c) : c;
    if (m.is_one()) {
      s += rat_text(a);
    } else if (a == 1) {
      s += m.text();
    } else {
      s += rat_text(a) + "*" + m.text();
    }
  }
  return s;
}

namespace {

void skip_ws(std::string_view t, std::size_t& i) {
  while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i;
}

bool parse_var_name(std::string_view t, std::size_t& i, VarId& out) {
  std::size_t start = i;
  if (i >= t.size() || !std::isalpha(static_cast<unsigned char>(t[i]))) return false;
  ++i;
  while (i < t.size() && std::isalnum(static_cast<unsigned char>(t[i]))) ++i;
  out.family = std::string(t.substr(start, i - start));
  out.index = -1;
  if (i < t.size() && t[i] == '_') {
    std::size_t j = i + 1, d = j;
    while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
    if (j == d) fail(Errc::SyntaxError, "expected index after '_' at offset " + std::to_string(i));
    out.index = std::stoi(std::string(t.substr(d, j - d)));
    i = j;
  }
  return true;
}

// term := [rational '*'?] (var ['^' int]) ('*' var ['^' int])*  |  rational
std::pair<Monomial, Rational> parse_poly_term(std::string_view t, std::size_t& i) {
  skip_ws(t, i);
  Rational coeff = 1;
  Monomial mono;
  bool have_coeff = false;
  if (i < t.size() && (std::isdigit(static_cast<unsigned char>(t[i])))) {
    coeff = parse_rational(t, &i);
    have_coeff = true;
    skip_ws(t, i);
    if (i < t.size() && t[i] == '*') {
      ++i;
      skip_ws(t, i);
    } else {
      return {mono, coeff};  // bare constant
    }
  }
  bool any_var = false;
  while (true) {
    VarId v;
    std::size_t save = i;
    if (!parse_var_name(t, i, v)) {
      if (!any_var && !have_coeff)
        fail(Errc::SyntaxError, "expected term at offset " + std::to_string(save));
      if (!any_var) fail(Errc::SyntaxError, "expected variable at offset " + std::to_string(save));
      break;
    }
    any_var = true;
    int exp = 1;
    if (i < t.size() && t[i] == '^') {
      ++i;
      std::size_t d = i;
      while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
      if (i == d) fail(Errc::SyntaxError, "expected exponent at offset " + std::to_string(i));
      exp = std::stoi(std::string(t.substr(d, i - d)));
    }
    mono = mono.times(Monomial::var(v, exp));
    skip_ws(t, i);
    if (i < t.size() && t[i] == '*') {
      ++i;
      skip_ws(t, i);
      continue;
    }
    break;
  }
  return {mono, coeff};
}

}  // namespace

PolyElement PolyElement::parse(std::string_view text) {
  PolyElement p;
  std::size_t i = 0;
  skip_ws(text, i);
  if (i >= text.size()) fail(Errc::SyntaxError, "empty polynomial");
  bool neg = false;
  if (text[i] == '-') {
    neg = true;
    ++i;
  } else if (text[i] == '+') {
    ++i;
  }
  while (true) {
    auto [mono, coeff] = parse_poly_term(text, i);
    p.add_term(mono, neg ? Rational(-coeff) : coeff);
    skip_ws(text, i);
    if (i >= text.size()) break;
    if (text[i] == '+') {
      neg = false;
      ++i;
    } else if (text[i] == '-') {
      neg = true;
      ++i;
    } else {
      fail(Errc::SyntaxError, "unexpected character at offset " + std::to_string(i));
    }
  }
  return p;
}

PolyElement poly_add(const PolyElement& p, const PolyElement& q) { return p + q; }
PolyElement poly_mul(const PolyElement& p, const PolyElement& q) { return p * q; }

std::optional<PolyElement> DerivationSpec::image_of(const VarId& v) const {
  auto it = action.find(v);
  if (it != action.end()) return it->second;
  for (const auto& s : shifts) {
    if (s.family == v.family && v.index >= 0) {
      if (s.last_index && v.index >= *s.last_index) return PolyElement::zero();
      return PolyElement::variable(VarId{v.family, v.index + 1});
    }
  }
  return std::nullopt;
}

PolyElement derive(const DerivationSpec& d, const PolyElement& p) {
  PolyElement r;
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [v, e] : m.factors()) {
      auto img = d.image_of(v);
      if (!img) fail(Errc::UnknownVariable, "derivation undefined on " + v.text());
      if (img->is_zero()) continue;
      PolyElement rest = PolyElement::monomial(m.divided_by_var(v), c * e);
      r = r + rest * *img;
    }
  }
  return r;
}

PolyElement substitute_hom(const std::map<VarId, PolyElement>& map, const PolyElement& p) {
  PolyElement r;
  for (const auto& [m, c] : p.terms()) {
    PolyElement term = PolyElement::constant(c);
    for (const auto& [v, e] : m.factors()) {
      auto it = map.find(v);
      if (it == map.end()) fail(Errc::UnknownVariable, "substitution undefined on " + v.text());
      term = term * it->second.pow(static_cast<unsigned>(e));
    }
    r = r + term;
  }
  return r;
}

bool RingSpec::contains(const VarId& v) const {
  for (const auto& f : families) {
    if (f.name != v.family) continue;
    if (!f.indexed) return v.index < 0;
    if (v.index < 0) return false;
    return f.max_index < 0 || v.index <= f.max_index;
  }
  return false;
}

PolyElement RingSpec::reduce(const PolyElement& p) const {
  if (!degree_cap) return p;
  return p.truncated(*degree_cap);
}

std::vector<VarId> RingSpec::bounded_vars(int fallback_index_bound) const {
  std::vector<VarId> vs;
  for (const auto& f : families) {
    if (!f.indexed) {
      vs.push_back(VarId{f.name, -1});
    } else {
      int hi = f.max_index >= 0 ? f.max_index : fallback_index_bound;
      for (int i = 0; i <= hi; ++i) vs.push_back(VarId{f.name, i});
    }
  }
  std::sort(vs.begin(), vs.end());
  return vs;
}

namespace {
void enumerate_monos(const std::vector<VarId>& vars, std::size_t from, int budget, Monomial cur,
                     std::vector<Monomial>& out) {
  out.push_back(cur);
  for (std::size_t i = from; i < vars.size(); ++i) {
    Monomial next = cur;
    for (int e = 1; e <= budget; ++e) {
      next = next.times(Monomial::var(vars[i]));
      enumerate_monos(vars, i + 1, budget - e, next, out);
    }
  }
}
}  // namespace

std::vector<Monomial> RingSpec::monomials_up_to(int bound) const {
  // For unbounded indexed families only indices <= bound can appear in a
  // monomial of degree <= bound built from generators; callers that need more
  // should bound the family.
  std::vector<Monomial> out;
  std::vector<Monomial> all;
  enumerate_monos(bounded_vars(bound), 0, bound, Monomial::one(), all);
  // enumerate_monos may emit the unit several times only via distinct paths;
  // it does not, but keep the output deterministic and duplicate-free.
  std::map<Monomial, bool, MonoLess> seen;
  for (const auto& m : all)
    if (seen.emplace(m, true).second) out.push_back(m);
  return out;
}

}  // namespace nalab
