#include <cctype>

#include "nalab/algebra.hpp"
#include "nalab/error.hpp"

namespace nalab {

namespace {

// Typed carrier operations shared by the two envelope instantiations.
struct VtOps {
  using Elem = VtElement;
  VtAlgebra alg;
  Elem mul(const Elem& a, const Elem& b) const { return vt_mul(alg, a, b); }
  static Elem add(const Elem& a, const Elem& b) { return vt_add(a, b); }
  static Elem scale(const Rational& c, const Elem& a) { return vt_scale(c, a); }
  static Parity parity(const Elem& a) { return vt_parity(a); }
  static std::string show(const Elem& a) { return vt_text(a); }
  static Elem parse(std::string_view t) { return vt_parse(t); }
  static std::map<std::string, Rational> coords(const Elem& a) {
    std::map<std::string, Rational> r;
    for (const auto& [m, c] : a.plain.terms()) r.emplace("p:" + m.text(), c);
    for (const auto& [m, c] : a.bar.terms()) r.emplace("b:" + m.text(), c);
    return r;
  }
};

struct AvfOps {
  using Elem = AvfElement;
  AvfAlgebra alg;
  Elem mul(const Elem& a, const Elem& b) const { return avf_mul(alg, a, b); }
  static Elem add(const Elem& a, const Elem& b) { return avf_add(a, b); }
  static Elem scale(const Rational& c, const Elem& a) { return avf_scale(c, a); }
  static Parity parity(const Elem& a) { return avf_parity(a); }
  static std::string show(const Elem& a) { return avf_text(a); }
  static Elem parse(std::string_view t) { return avf_parse(t); }
  static std::map<std::string, Rational> coords(const Elem& a) {
    std::map<std::string, Rational> r;
    for (const auto& [v, c] : a.even) r.emplace("a:" + avf_point_text(v), c);
    for (const auto& [v, c] : a.odd) r.emplace("x:" + avf_point_text(v), c);
    return r;
  }
};

template <class Ops>
class EnvHandle final : public Algebra {
 public:
  using C = typename Ops::Elem;
  using E = Tensor<C>;

  EnvHandle(Ops ops, AlgebraPtr base, int rank)
      : ops_(std::move(ops)), base_(std::move(base)), rank_(rank),
        name_("G(" + base_->name() + ";m=" + std::to_string(rank) + ")") {
    if (rank < 1 || rank > 62) fail(Errc::InvalidParameter, "exterior rank out of range");
  }

  const std::string& name() const override { return name_; }
  bool graded_super() const override { return false; }
  AnyElem zero() const override { return E{}; }

  AnyElem add(const AnyElem& a, const AnyElem& b) const override {
    E r = get(a);
    for (const auto& [w, c] : get(b).terms) acc(r, w, c);
    return r;
  }

  AnyElem scale(const Rational& q, const AnyElem& a) const override {
    E r;
    if (q == 0) return r;
    for (const auto& [w, c] : get(a).terms) r.terms.emplace(w, Ops::scale(q, c));
    return r;
  }

  AnyElem mul(const AnyElem& a, const AnyElem& b) const override {
    E r;
    for (const auto& [w1, c1] : get(a).terms) {
      for (const auto& [w2, c2] : get(b).terms) {
        int sign = ext_merge_sign(w1, w2);
        if (!sign) continue;
        C prod = ops_.mul(c1, c2);
        if (sign < 0) prod = Ops::scale(Rational(-1), prod);
        acc(r, w1 | w2, prod);
      }
    }
    return r;
  }

  void add_scaled(AnyElem& into, const Rational& q, const AnyElem& x) const override {
    E* t = std::get_if<E>(&into);
    if (!t) fail(Errc::ContextMismatch, "element does not belong to " + name_);
    for (const auto& [w, c] : get(x).terms) acc(*t, w, Ops::scale(q, c));
  }

  bool is_zero(const AnyElem& a) const override { return get(a).terms.empty(); }

  Parity parity(const AnyElem& a) const override {
    bool even = false, odd = false;
    for (const auto& [w, c] : get(a).terms) (ext_word_parity(w) ? odd : even) = true;
    if (even && odd) return Parity::Mixed;
    return odd ? Parity::Odd : Parity::Even;
  }

  AnyElem component(const AnyElem& a, Parity p) const override {
    if (p == Parity::Mixed) fail(Errc::InvalidParameter, "component requires a definite parity");
    E r;
    int want = p == Parity::Odd ? 1 : 0;
    for (const auto& [w, c] : get(a).terms)
      if (ext_word_parity(w) == want) r.terms.emplace(w, c);
    return r;
  }

  std::map<std::string, Rational> coords(const AnyElem& a) const override {
    std::map<std::string, Rational> r;
    for (const auto& [w, c] : get(a).terms)
      for (const auto& [k, q] : Ops::coords(c)) r.emplace(ext_word_text(w) + "|" + k, q);
    return r;
  }

  std::string show(const AnyElem& a) const override {
    const E& e = get(a);
    if (e.terms.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : e.terms) {
      if (!s.empty()) s += " + ";
      s += "(" + Ops::show(c) + ")@" + ext_word_text(w);
    }
    return s;
  }

  AnyElem parse_elem(std::string_view t) const override {
    E r;
    std::size_t i = 0;
    auto skip = [&] { while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i; };
    skip();
    if (t.substr(i) == "0") return r;
    while (true) {
      skip();
      if (i >= t.size() || t[i] != '(')
        fail(Errc::SyntaxError, "expected '(' in tensor term at offset " + std::to_string(i));
      int depth = 0;
      std::size_t start = ++i;
      while (i < t.size() && (depth > 0 || t[i] != ')')) {
        if (t[i] == '(') ++depth;
        if (t[i] == ')') --depth;
        ++i;
      }
      if (i >= t.size()) fail(Errc::SyntaxError, "unterminated tensor term");
      C c = Ops::parse(t.substr(start, i - start));
      ++i;
      if (i >= t.size() || t[i] != '@') fail(Errc::SyntaxError, "expected '@' after carrier");
      ++i;
      ExtWord w = parse_ext_word(t, &i);
      acc(r, w, c);
      skip();
      if (i >= t.size()) break;
      if (t[i] == '+') { ++i; continue; }
      fail(Errc::SyntaxError, "unexpected character in tensor element");
    }
    validate(r);
    return r;
  }

  std::vector<SpanningElement> basis(int degree_cap) const override {
    std::vector<SpanningElement> out;
    auto carrier = base_->basis(degree_cap);
    for (const auto& b : carrier) {
      const C& c = std::get<C>(b.value);
      int want = b.parity == Parity::Odd ? 1 : 0;
      for (ExtWord w = 0; w < (ExtWord{1} << rank_); ++w) {
        int len = ext_word_len(w);
        if ((len & 1) != want || b.degree + len > degree_cap) continue;
        E e;
        e.terms.emplace(w, c);
        out.push_back({e, Parity::Even, b.degree + len,
                       "(" + b.label + ")@" + ext_word_text(w)});
      }
    }
    return out;
  }

  std::optional<ExtWord> single_word(const AnyElem& a) const override {
    const E& e = get(a);
    if (e.terms.empty()) return ExtWord{0};
    if (e.terms.size() == 1) return e.terms.begin()->first;
    return std::nullopt;
  }

 private:
  const E& get(const AnyElem& a) const {
    const E* p = std::get_if<E>(&a);
    if (!p) fail(Errc::ContextMismatch, "element does not belong to " + name_);
    return *p;
  }

  void acc(E& r, ExtWord w, const C& c) const {
    if (rank_ < 62 && (w >> rank_)) fail(Errc::ContextMismatch, "word beyond envelope rank");
    auto [it, inserted] = r.terms.try_emplace(w, c);
    if (!inserted) {
      it->second = Ops::add(it->second, c);
      if (it->second.is_zero()) r.terms.erase(it);
    }
    if (inserted && it->second.is_zero()) r.terms.erase(it);
  }

  void validate(const E& e) const {
    for (const auto& [w, c] : e.terms) {
      Parity p = Ops::parity(c);
      bool ok = (p == Parity::Even && ext_word_parity(w) == 0) ||
                (p == Parity::Odd && ext_word_parity(w) == 1);
      if (!ok)
        fail(Errc::ParityViolation,
             "tensor term parity mismatch at word " + ext_word_text(w));
    }
  }

  Ops ops_;
  AlgebraPtr base_;
  int rank_;
  std::string name_;
};

}  // namespace

AlgebraPtr make_envelope(const AlgebraPtr& base, int rank) {
  if (const VtAlgebra* vt = vt_data(*base))
    return std::make_shared<EnvHandle<VtOps>>(VtOps{*vt}, base, rank);
  if (const AvfAlgebra* avf = avf_data(*base))
    return std::make_shared<EnvHandle<AvfOps>>(AvfOps{*avf}, base, rank);
  fail(Errc::InvalidParameter, "envelope requires a vector-type or vector-fields base");
}

}  // namespace nalab
