#include "nalab/named.hpp"

#include <cctype>

#include "nalab/error.hpp"

namespace nalab {

namespace {

VtAlgebra ring_zs(const std::string& id, const PolyElement& gamma, VtFlavor flavor,
                  bool without_unit) {
  // Phi[z,s] with D = s d/dz
  VtAlgebra B;
  B.id = id;
  B.ring.families = {{"s", false, -1}, {"z", false, -1}};
  B.deriv.action.emplace(VarId{"z", -1}, PolyElement::variable(VarId{"s", -1}));
  B.deriv.action.emplace(VarId{"s", -1}, PolyElement::zero());
  B.gamma = gamma;
  B.flavor = flavor;
  B.even_without_unit = without_unit;
  return B;
}

VtAlgebra ring_tzs(const std::string& id) {
  // Phi[t,z,s] with D = s d/dz and gamma = t
  VtAlgebra B;
  B.id = id;
  B.ring.families = {{"s", false, -1}, {"t", false, -1}, {"z", false, -1}};
  B.deriv.action.emplace(VarId{"z", -1}, PolyElement::variable(VarId{"s", -1}));
  B.deriv.action.emplace(VarId{"s", -1}, PolyElement::zero());
  B.deriv.action.emplace(VarId{"t", -1}, PolyElement::zero());
  B.gamma = PolyElement::variable(VarId{"t", -1});
  B.even_without_unit = true;
  return B;
}

VtAlgebra ring_tfree(const std::string& id, int zfamilies, bool with_t, bool without_unit,
                     VtFlavor flavor) {
  // Phi[T_Z]: family t (when present) and z1..zk, all shift-derived
  VtAlgebra B;
  B.id = id;
  if (with_t) {
    B.ring.families.push_back({"t", true, -1});
    B.deriv.shifts.push_back({"t", std::nullopt});
    B.gamma = PolyElement::variable(VarId{"t", 0});
  }
  for (int j = 1; j <= zfamilies; ++j) {
    std::string fam = "z" + std::to_string(j);
    B.ring.families.push_back({fam, true, -1});
    B.deriv.shifts.push_back({fam, std::nullopt});
  }
  B.flavor = flavor;
  B.even_without_unit = without_unit;
  return B;
}

VtAlgebra ring_truncated(const std::string& id, int nvars, int cap, VtFlavor flavor) {
  // Phi[t_0..t_{nvars-1}] with D(t_i) = t_{i+1}, D(t_last) = 0, degree-capped
  VtAlgebra B;
  B.id = id;
  B.ring.families = {{"t", true, nvars - 1}};
  B.ring.degree_cap = cap;
  B.deriv.shifts.push_back({"t", nvars - 1});
  B.gamma = PolyElement::variable(VarId{"t", 0});
  B.flavor = flavor;
  return B;
}

AvfAlgebra avf_naturals(const std::string& id, bool corrupt_tau) {
  AvfAlgebra A;
  A.id = id;
  A.dim = 1;
  A.tau_weights = {Rational(1)};
  A.lambda_shift = {1};
  if (corrupt_tau) {
    // deliberately non-additive control
    A.tau_override = [](const AvfPoint& u) { return Rational(u[0]) * Rational(u[0]); };
  }
  return A;
}

struct SpecParser {
  std::string_view t;
  std::size_t i = 0;

  void skip() { while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i; }

  std::string ident() {
    skip();
    std::size_t s = i;
    while (i < t.size() && (std::isalnum(static_cast<unsigned char>(t[i])) || t[i] == '_')) ++i;
    if (s == i) fail(Errc::UnknownAlgebra, "expected algebra id in '" + std::string(t) + "'");
    return std::string(t.substr(s, i - s));
  }

  int number() {
    skip();
    std::size_t s = i;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
    if (s == i) fail(Errc::UnknownAlgebra, "expected number in algebra spec");
    return std::stoi(std::string(t.substr(s, i - s)));
  }

  bool eat(char c) {
    skip();
    if (i < t.size() && t[i] == c) { ++i; return true; }
    return false;
  }

  NamedAlgebra parse();
};

AnyElem env_gen(const AlgebraPtr& env, const std::string& carrier_text, ExtWord w) {
  std::string text = "(" + carrier_text + ")@" + ext_word_text(w);
  return env->parse_elem(text);
}

NamedAlgebra SpecParser::parse() {
  std::string head = ident();
  NamedAlgebra named;

  if (head == "env") {
    if (!eat('(')) fail(Errc::UnknownAlgebra, "env expects (spec,rank)");
    NamedAlgebra inner = parse();
    if (!eat(',')) fail(Errc::UnknownAlgebra, "env expects a rank argument");
    int m = number();
    if (!eat(')')) fail(Errc::UnknownAlgebra, "unterminated env(...)");
    named.id = "env(" + inner.id + "," + std::to_string(m) + ")";
    named.algebra = make_envelope(inner.algebra, m);
    // inherit even generators as g(x)1 tensors
    for (const auto& [gname, gval] : inner.generators) {
      if (inner.algebra->parity(gval) == Parity::Even) {
        named.generators.push_back(
            {gname, env_gen(named.algebra, inner.algebra->show(gval), 0)});
      }
    }
    return named;
  }

  if (head == "sym") {
    if (!eat('(')) fail(Errc::UnknownAlgebra, "sym expects (spec)");
    NamedAlgebra inner = parse();
    if (!eat(')')) fail(Errc::UnknownAlgebra, "unterminated sym(...)");
    named.id = "sym(" + inner.id + ")";
    named.algebra = make_symmetrized(inner.algebra);
    named.generators = inner.generators;
    return named;
  }

  auto vt_gens = [&](NamedAlgebra& n, const std::vector<std::string>& evens, bool with_x) {
    for (const auto& g : evens)
      n.generators.push_back({g, n.algebra->parse_elem(g)});
    if (with_x) n.generators.push_back({"x", VtElement::odd(PolyElement::constant(1))});
  };

  if (head == "F0") {
    named.id = "F0";
    named.algebra = make_vt_handle(ring_zs("F0", PolyElement::zero(), VtFlavor::Twisted, true));
    vt_gens(named, {"z"}, true);
    return named;
  }
  if (head == "F1") {
    named.id = "F1";
    named.algebra = make_vt_handle(ring_zs("F1", PolyElement::constant(1), VtFlavor::Twisted, false));
    vt_gens(named, {"z"}, true);
    return named;
  }
  if (head == "Ft") {
    named.id = "Ft";
    named.algebra = make_vt_handle(ring_tzs("Ft"));
    vt_gens(named, {"z"}, true);
    return named;
  }
  if (head == "JF0") {
    named.id = "JF0";
    named.algebra = make_vt_handle(ring_zs("JF0", PolyElement::zero(), VtFlavor::Jordan, true));
    vt_gens(named, {"z"}, true);
    return named;
  }
  if (head == "free11") {
    named.id = "free11";
    named.algebra = make_vt_handle(ring_tfree("free11", 0, true, true, VtFlavor::Twisted));
    vt_gens(named, {}, true);
    return named;
  }
  if (head == "FZx" || head == "F0Zx" || head == "JZx") {
    if (!eat(':')) fail(Errc::UnknownAlgebra, head + " expects :k");
    int k = number();
    if (k < 1) fail(Errc::InvalidParameter, head + " needs at least one even generator");
    named.id = head + ":" + std::to_string(k);
    named.algebra = make_vt_handle(ring_tfree(
        named.id, k, head == "FZx", true,
        head == "JZx" ? VtFlavor::Jordan : VtFlavor::Twisted));
    std::vector<std::string> evens;
    for (int j = 1; j <= k; ++j) evens.push_back("z" + std::to_string(j) + "_0");
    vt_gens(named, evens, true);
    return named;
  }
  if (head == "Bt" || head == "Jt") {
    if (!eat(':')) fail(Errc::UnknownAlgebra, head + " expects :nvars,cap");
    int nv = number();
    if (!eat(',')) fail(Errc::UnknownAlgebra, head + " expects :nvars,cap");
    int cap = number();
    if (nv < 1 || cap < 1) fail(Errc::InvalidParameter, "bad truncation parameters");
    named.id = head + ":" + std::to_string(nv) + "," + std::to_string(cap);
    named.algebra = make_vt_handle(ring_truncated(
        named.id, nv, cap, head == "Bt" ? VtFlavor::Twisted : VtFlavor::Jordan));
    named.generators.push_back({"t0", VtElement::even(PolyElement::variable(VarId{"t", 0}))});
    named.generators.push_back({"x", VtElement::odd(PolyElement::constant(1))});
    return named;
  }
  if (head == "A0" || head == "Abar0" || head == "Jbar0") {
    if (!eat(':')) fail(Errc::UnknownAlgebra, head + " expects :m");
    int m = number();
    named.id = head + ":" + std::to_string(m);
    bool unital_gamma = head == "A0";
    VtAlgebra B = ring_zs("B(z,s;" + std::string(unital_gamma ? "1" : "0") + ")",
                          unital_gamma ? PolyElement::constant(1) : PolyElement::zero(),
                          VtFlavor::Twisted, false);
    AlgebraPtr base = make_vt_handle(std::move(B));
    AlgebraPtr env = make_envelope(base, m);
    if (head == "Jbar0") env = make_symmetrized(env);
    named.algebra = env;
    named.generators.push_back({"z", env_gen(env, "z", 0)});
    for (int j = 1; j <= m; ++j)
      named.generators.push_back(
          {"e" + std::to_string(j), env_gen(env, "bar(1)", ExtWord{1} << (j - 1))});
    return named;
  }
  if (head == "G11") {
    if (!eat(':')) fail(Errc::UnknownAlgebra, "G11 expects :m");
    int m = number();
    named.id = "G11:" + std::to_string(m);
    AlgebraPtr base =
        make_vt_handle(ring_tfree("B0(T;t_0)", 0, true, true, VtFlavor::Twisted));
    named.algebra = make_envelope(base, m);
    for (int j = 1; j <= m; ++j)
      named.generators.push_back(
          {"x" + std::to_string(j), env_gen(named.algebra, "bar(1)", ExtWord{1} << (j - 1))});
    return named;
  }
  if (head == "avfN" || head == "avfN_badtau") {
    named.id = head;
    named.algebra = make_avf_handle(avf_naturals(head, head == "avfN_badtau"));
    named.generators.push_back({"a1", AvfElement::a({1})});
    named.generators.push_back({"x0", AvfElement::x({0})});
    named.generators.push_back({"x1", AvfElement::x({1})});
    return named;
  }
  fail(Errc::UnknownAlgebra, "unknown algebra id '" + head + "'");
}

}  // namespace

const AnyElem& NamedAlgebra::generator(const std::string& name) const {
  for (const auto& [n, v] : generators)
    if (n == name) return v;
  fail(Errc::InvalidParameter, "no generator '" + name + "' in " + id);
}

bool NamedAlgebra::has_generator(const std::string& name) const {
  for (const auto& [n, v] : generators)
    if (n == name) return true;
  return false;
}

NamedAlgebra make_named(const std::string& spec) {
  SpecParser p{spec};
  NamedAlgebra n = p.parse();
  p.skip();
  if (p.i != p.t.size()) fail(Errc::UnknownAlgebra, "trailing characters in algebra spec");
  return n;
}

}  // namespace nalab
