#include "nalab/algebra.hpp"

#include "nalab/error.hpp"

namespace nalab {

namespace {

template <class T>
const T& as(const AnyElem& e, const std::string& who) {
  const T* p = std::get_if<T>(&e);
  if (!p) fail(Errc::ContextMismatch, "element does not belong to " + who);
  return *p;
}

class VtHandle final : public Algebra {
 public:
  explicit VtHandle(VtAlgebra alg) : alg_(std::move(alg)) {}

  const std::string& name() const override { return alg_.id; }
  bool graded_super() const override { return true; }
  AnyElem zero() const override { return VtElement{}; }

  AnyElem add(const AnyElem& a, const AnyElem& b) const override {
    return vt_add(as<VtElement>(a, alg_.id), as<VtElement>(b, alg_.id));
  }
  AnyElem scale(const Rational& c, const AnyElem& a) const override {
    return vt_scale(c, as<VtElement>(a, alg_.id));
  }
  AnyElem mul(const AnyElem& a, const AnyElem& b) const override {
    return vt_mul(alg_, as<VtElement>(a, alg_.id), as<VtElement>(b, alg_.id));
  }
  void add_scaled(AnyElem& into, const Rational& c, const AnyElem& x) const override {
    VtElement* t = std::get_if<VtElement>(&into);
    const VtElement& s = as<VtElement>(x, alg_.id);
    if (!t) fail(Errc::ContextMismatch, "element does not belong to " + alg_.id);
    for (const auto& [m, v] : s.plain.terms()) t->plain.add_term(m, v * c);
    for (const auto& [m, v] : s.bar.terms()) t->bar.add_term(m, v * c);
  }
  bool is_zero(const AnyElem& a) const override { return as<VtElement>(a, alg_.id).is_zero(); }
  Parity parity(const AnyElem& a) const override { return vt_parity(as<VtElement>(a, alg_.id)); }

  AnyElem component(const AnyElem& a, Parity p) const override {
    const auto& x = as<VtElement>(a, alg_.id);
    if (p == Parity::Even) return VtElement::even(x.plain);
    if (p == Parity::Odd) return VtElement::odd(x.bar);
    fail(Errc::InvalidParameter, "component requires a definite parity");
  }

  std::map<std::string, Rational> coords(const AnyElem& a) const override {
    const auto& x = as<VtElement>(a, alg_.id);
    std::map<std::string, Rational> r;
    for (const auto& [m, c] : x.plain.terms()) r.emplace("p:" + m.text(), c);
    for (const auto& [m, c] : x.bar.terms()) r.emplace("b:" + m.text(), c);
    return r;
  }

  std::string show(const AnyElem& a) const override { return vt_text(as<VtElement>(a, alg_.id)); }

  AnyElem parse_elem(std::string_view text) const override {
    VtElement e = vt_parse(text);
    alg_.check_member(e.plain);
    alg_.check_member(e.bar);
    return e;
  }

  std::vector<SpanningElement> basis(int degree_cap) const override {
    std::vector<SpanningElement> out;
    for (const auto& m : alg_.ring.monomials_up_to(degree_cap)) {
      if (!(alg_.even_without_unit && m.is_one())) {
        out.push_back({VtElement::even(PolyElement::monomial(m, 1)), Parity::Even, m.degree(),
                       m.text()});
      }
      out.push_back({VtElement::odd(PolyElement::monomial(m, 1)), Parity::Odd, m.degree(),
                     "bar(" + m.text() + ")"});
    }
    return out;
  }

  std::optional<ExtWord> single_word(const AnyElem&) const override { return ExtWord{0}; }

  const VtAlgebra& data() const { return alg_; }

 private:
  VtAlgebra alg_;
};

class AvfHandle final : public Algebra {
 public:
  explicit AvfHandle(AvfAlgebra alg) : alg_(std::move(alg)) {}

  const std::string& name() const override { return alg_.id; }
  bool graded_super() const override { return true; }
  AnyElem zero() const override { return AvfElement{}; }

  AnyElem add(const AnyElem& a, const AnyElem& b) const override {
    return avf_add(as<AvfElement>(a, alg_.id), as<AvfElement>(b, alg_.id));
  }
  AnyElem scale(const Rational& c, const AnyElem& a) const override {
    return avf_scale(c, as<AvfElement>(a, alg_.id));
  }
  AnyElem mul(const AnyElem& a, const AnyElem& b) const override {
    return avf_mul(alg_, as<AvfElement>(a, alg_.id), as<AvfElement>(b, alg_.id));
  }
  void add_scaled(AnyElem& into, const Rational& c, const AnyElem& x) const override {
    AvfElement* t = std::get_if<AvfElement>(&into);
    if (!t) fail(Errc::ContextMismatch, "element does not belong to " + alg_.id);
    *t = avf_add(*t, avf_scale(c, as<AvfElement>(x, alg_.id)));
  }
  bool is_zero(const AnyElem& a) const override { return as<AvfElement>(a, alg_.id).is_zero(); }
  Parity parity(const AnyElem& a) const override { return avf_parity(as<AvfElement>(a, alg_.id)); }

  AnyElem component(const AnyElem& a, Parity p) const override {
    const auto& x = as<AvfElement>(a, alg_.id);
    AvfElement r;
    if (p == Parity::Even) r.even = x.even;
    else if (p == Parity::Odd) r.odd = x.odd;
    else fail(Errc::InvalidParameter, "component requires a definite parity");
    return r;
  }

  std::map<std::string, Rational> coords(const AnyElem& a) const override {
    const auto& x = as<AvfElement>(a, alg_.id);
    std::map<std::string, Rational> r;
    for (const auto& [v, c] : x.even) r.emplace("a:" + avf_point_text(v), c);
    for (const auto& [v, c] : x.odd) r.emplace("x:" + avf_point_text(v), c);
    return r;
  }

  std::string show(const AnyElem& a) const override { return avf_text(as<AvfElement>(a, alg_.id)); }
  AnyElem parse_elem(std::string_view text) const override { return avf_parse(text); }

  std::vector<SpanningElement> basis(int degree_cap) const override {
    std::vector<SpanningElement> out;
    std::vector<AvfPoint> pts;
    AvfPoint cur(alg_.dim, 0);
    enumerate_points(cur, 0, degree_cap, pts);
    for (const auto& v : pts) {
      int d = 0;
      for (long long c : v) d += static_cast<int>(c);
      out.push_back({AvfElement::a(v), Parity::Even, d, "a_" + avf_point_text(v)});
      out.push_back({AvfElement::x(v), Parity::Odd, d, "x_" + avf_point_text(v)});
    }
    return out;
  }

  std::optional<ExtWord> single_word(const AnyElem&) const override { return ExtWord{0}; }

  const AvfAlgebra& data() const { return alg_; }

 private:
  static void enumerate_points(AvfPoint& cur, std::size_t at, int budget,
                               std::vector<AvfPoint>& out) {
    if (at == cur.size()) {
      out.push_back(cur);
      return;
    }
    for (int c = 0; c <= budget; ++c) {
      cur[at] = c;
      enumerate_points(cur, at + 1, budget - c, out);
    }
    cur[at] = 0;
  }

  AvfAlgebra alg_;
};

class SymHandle final : public Algebra {
 public:
  explicit SymHandle(AlgebraPtr inner)
      : inner_(std::move(inner)), name_("sym(" + inner_->name() + ")") {}

  const std::string& name() const override { return name_; }
  bool graded_super() const override { return inner_->graded_super(); }
  AnyElem zero() const override { return inner_->zero(); }
  AnyElem add(const AnyElem& a, const AnyElem& b) const override { return inner_->add(a, b); }
  AnyElem scale(const Rational& c, const AnyElem& a) const override { return inner_->scale(c, a); }

  AnyElem mul(const AnyElem& a, const AnyElem& b) const override {
    const Rational half(1, 2);
    if (!inner_->graded_super()) {
      return inner_->scale(half, inner_->add(inner_->mul(a, b), inner_->mul(b, a)));
    }
    // supersymmetrization: x*y + (-1)^{|x||y|} y*x on homogeneous parts
    AnyElem a0 = inner_->component(a, Parity::Even);
    AnyElem a1 = inner_->component(a, Parity::Odd);
    AnyElem b0 = inner_->component(b, Parity::Even);
    AnyElem b1 = inner_->component(b, Parity::Odd);
    AnyElem r = inner_->mul(a, b);
    r = inner_->add(r, inner_->mul(b0, a0));
    r = inner_->add(r, inner_->mul(b0, a1));
    r = inner_->add(r, inner_->mul(b1, a0));
    r = inner_->add(r, inner_->scale(Rational(-1), inner_->mul(b1, a1)));
    return inner_->scale(half, r);
  }

  void add_scaled(AnyElem& into, const Rational& c, const AnyElem& x) const override {
    inner_->add_scaled(into, c, x);
  }
  bool is_zero(const AnyElem& a) const override { return inner_->is_zero(a); }
  Parity parity(const AnyElem& a) const override { return inner_->parity(a); }
  AnyElem component(const AnyElem& a, Parity p) const override { return inner_->component(a, p); }
  std::map<std::string, Rational> coords(const AnyElem& a) const override {
    return inner_->coords(a);
  }
  std::string show(const AnyElem& a) const override { return inner_->show(a); }
  AnyElem parse_elem(std::string_view text) const override { return inner_->parse_elem(text); }
  std::vector<SpanningElement> basis(int cap) const override { return inner_->basis(cap); }
  std::optional<ExtWord> single_word(const AnyElem& a) const override {
    return inner_->single_word(a);
  }

 private:
  AlgebraPtr inner_;
  std::string name_;
};

}  // namespace

AlgebraPtr make_vt_handle(VtAlgebra alg) { return std::make_shared<VtHandle>(std::move(alg)); }
AlgebraPtr make_avf_handle(AvfAlgebra alg) { return std::make_shared<AvfHandle>(std::move(alg)); }
AlgebraPtr make_symmetrized(const AlgebraPtr& inner) { return std::make_shared<SymHandle>(inner); }

const VtAlgebra* vt_data(const Algebra& a) {
  if (auto* h = dynamic_cast<const VtHandle*>(&a)) return &h->data();
  return nullptr;
}

const AvfAlgebra* avf_data(const Algebra& a) {
  if (auto* h = dynamic_cast<const AvfHandle*>(&a)) return &h->data();
  return nullptr;
}

}  // namespace nalab
