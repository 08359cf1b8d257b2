#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nalab/basis.hpp"
#include "nalab/engine.hpp"
#include "nalab/error.hpp"
#include "nalab/linalg.hpp"

using namespace nalab;

namespace {

int count_at(const std::string& id, const MultiDeg& d) { return dim_count(id, d); }

MultiDeg md(std::initializer_list<std::pair<const char*, int>> axes) {
  MultiDeg d;
  for (const auto& [a, v] : axes) d.axes[a] = v;
  return d;
}

}  // namespace

TEST_CASE("free-on-x enumeration matches partition counts") {
  // even part of degree 8: multi-indices with sum i_k (2+2k) = 8 <-> p(4)
  auto labels = basis_enumerate("free-on-x", 8);
  int even8 = 0;
  for (const auto& l : labels)
    if (l.deg.at("x") == 8 && l.eps == 0) ++even8;
  CHECK(even8 == 5);

  // degree-d dimensions 1..8: 1,1,1,2,2,3,3,5
  std::vector<int> want = {1, 1, 1, 2, 2, 3, 3, 5};
  for (int d = 1; d <= 8; ++d) CHECK(count_at("free-on-x", md({{"x", d}})) == want[d - 1]);
}

TEST_CASE("F0 label solving") {
  CHECK(count_at("F0", md({{"z", 3}, {"x", 4}})) == 1);
  CHECK(count_at("F1", md({{"z", 2}, {"x", 2}})) == 1);
  // JF0 at (z:1,x:2): n=0,k=1,eps=0
  CHECK(count_at("JF0", md({{"z", 1}, {"x", 2}})) == 1);
}

TEST_CASE("Abar0 labels at z-degree 1 and E-degree 3") {
  CHECK(count_at("Abar0:6", md({{"z", 1}, {"E", 3}})) == 20);  // C(6,3)
}

TEST_CASE("G11 labels pair free basis elements with words of matching length") {
  CHECK(count_at("G11:4", md({{"n", 2}})) == 6);  // C(4,2) * dim_free(2)
  CHECK(count_at("G11:6", md({{"n", 4}})) == 2 * 15);  // dim_free(4)=2, C(6,4)=15
}

TEST_CASE("dim tables serialize deterministically") {
  DimTable t = dim_table("free-on-x", 4);
  std::string text = dim_table_text("free-on-x", t);
  CHECK(text ==
        "# dim table: free-on-x\n"
        "x=1 : 1\n"
        "x=2 : 1\n"
        "x=3 : 1\n"
        "x=4 : 2\n");
}

TEST_CASE("normal forms in the named quotients") {
  NamedAlgebra F0 = make_named("F0");
  CHECK(F0.algebra->show(normal_form(F0, parse_term("even z ; odd x ; (* (* z x) x)"))) == "2*s");
  CHECK(F0.algebra->show(normal_form(F0, parse_term("odd x ; (* x x)"))) == "0");
  NamedAlgebra F1 = make_named("F1");
  CHECK(F1.algebra->show(normal_form(F1, parse_term("odd x ; (* x x)"))) == "1");
  CHECK_THROWS_AS(normal_form(F0, parse_term("even w ; (* w w)")), Error);
}

TEST_CASE("normal form is multiplicative") {
  NamedAlgebra F0 = make_named("F0");
  const Algebra& a = *F0.algebra;
  TermPoly u = parse_term("even z ; odd x ; (* (* z x) x)");
  TermPoly v = parse_term("even z ; odd x ; (* z z)");
  AnyElem nu = normal_form(F0, u), nv = normal_form(F0, v);
  AnyElem nuv = normal_form(F0, u * v);
  CHECK(a.equal(nuv, a.mul(nu, nv)));
}

TEST_CASE("span ranks of the free realization match the free basis") {
  NamedAlgebra F = make_named("free11");
  // single generator x; counts indexed by generators (t0, x)
  SpanRanker ranker(F);
  auto counts = [&](int xdeg) {
    std::vector<int> c(F.generators.size(), 0);
    for (std::size_t g = 0; g < F.generators.size(); ++g)
      if (F.generators[g].first == "x") c[g] = xdeg;
    return c;
  };
  CHECK(ranker.rank(counts(1)) == 1);
  CHECK(ranker.rank(counts(4)) == 2);
  std::vector<int> dims = {1, 1, 1, 2, 2, 3};
  for (int d = 1; d <= 6; ++d) CHECK(ranker.rank(counts(d)) == dims[d - 1]);
}

TEST_CASE("JF0 span rank at multidegree (z:1, x:2)") {
  NamedAlgebra J = make_named("JF0");
  SpanRanker ranker(J);
  std::vector<int> c(J.generators.size(), 0);
  for (std::size_t g = 0; g < J.generators.size(); ++g) {
    if (J.generators[g].first == "z") c[g] = 1;
    if (J.generators[g].first == "x") c[g] = 2;
  }
  CHECK(ranker.rank(c) == 1);
  CHECK(count_at("JF0", md({{"z", 1}, {"x", 2}})) == 1);
}

TEST_CASE("basis labels realize to independent elements") {
  for (const std::string id : {"F0", "Ft", "JF0", "Abar0:4", "A0:4", "G11:4"}) {
    NamedAlgebra named = realization_for(id);
    Echelon<std::string> ech;
    for (const auto& l : basis_enumerate(id, 4)) {
      AnyElem e = realize_label(named, l);
      CHECK(!named.algebra->is_zero(e));
      CHECK(ech.insert(named.algebra->coords(e)));
    }
  }
}

TEST_CASE("basis labels span what the generators span (low degrees)") {
  // F0 at a few multidegrees: the realized labels and the generated span agree
  NamedAlgebra F0 = make_named("F0");
  SpanRanker ranker(F0);
  for (int zd = 0; zd <= 3; ++zd) {
    for (int xd = 0; xd <= 4; ++xd) {
      if (zd + xd == 0) continue;
      std::vector<int> c(F0.generators.size(), 0);
      for (std::size_t g = 0; g < F0.generators.size(); ++g) {
        if (F0.generators[g].first == "z") c[g] = zd;
        if (F0.generators[g].first == "x") c[g] = xd;
      }
      CHECK(ranker.rank(c) == count_at("F0", md({{"z", zd}, {"x", xd}})));
    }
  }
}

TEST_CASE("Cor 7.7: J[Z;x] has base of monomials in z R^i times optional x") {
  NamedAlgebra J = make_named("JZx:1");
  SpanRanker ranker(J);
  for (int zd = 0; zd <= 3; ++zd) {
    for (int xd = 0; xd <= 4; ++xd) {
      if (zd + xd == 0) continue;
      std::vector<int> c(J.generators.size(), 0);
      for (std::size_t g = 0; g < J.generators.size(); ++g) {
        if (J.generators[g].first == "z1_0") c[g] = zd;
        if (J.generators[g].first == "x") c[g] = xd;
      }
      CHECK(ranker.rank(c) == count_at("JZx:1", md({{"z1", zd}, {"x", xd}})));
    }
  }
}

TEST_CASE("Cor 7.8: J[{s,z};x] matches the symmetrized F[z;x] under the label bijection") {
  // LHS: JZx:2 with z1 playing s and z2 playing z; RHS: sym(FZx:1) with the
  // x^2 letters playing s and z1 playing z.
  NamedAlgebra L = make_named("JZx:2");
  NamedAlgebra Rr = make_named("FZx:1");
  AlgebraPtr Rsym = make_symmetrized(Rr.algebra);

  // every s-letter doubles in degree under the bijection, so the right-hand
  // enumeration needs twice the bound to cover the image
  const int bound = 5;
  auto lhs_labels = basis_enumerate("JZx:2", bound);
  auto rhs_labels = basis_enumerate("FZx:1", 2 * bound);

  // label bijection key: (I0, I1, eps) with I0 = J[1] on the left and I on the
  // right, I1 = J[2] left and J[1] right
  auto lkey = [](const BasisLabel& l) {
    std::string s = "I0=";
    auto it = l.J.find(1);
    if (it != l.J.end())
      for (int v : it->second) s += std::to_string(v) + ",";
    s += ";I1=";
    it = l.J.find(2);
    if (it != l.J.end())
      for (int v : it->second) s += std::to_string(v) + ",";
    return s + ";" + std::to_string(l.eps);
  };
  auto rkey = [](const BasisLabel& l) {
    std::string s = "I0=";
    for (int v : l.I) s += std::to_string(v) + ",";
    s += ";I1=";
    auto it = l.J.find(1);
    if (it != l.J.end())
      for (int v : it->second) s += std::to_string(v) + ",";
    return s + ";" + std::to_string(l.eps);
  };

  std::map<std::string, std::size_t> lidx, ridx;
  for (std::size_t i = 0; i < lhs_labels.size(); ++i) lidx[lkey(lhs_labels[i])] = i;
  for (std::size_t i = 0; i < rhs_labels.size(); ++i) ridx[rkey(rhs_labels[i])] = i;
  REQUIRE(lidx.size() == lhs_labels.size());
  REQUIRE(ridx.size() == rhs_labels.size());
  for (const auto& [k, i] : lidx) REQUIRE(ridx.count(k) == 1);

  // expansion machinery over realized labels; the right-hand letters are
  // R-powers in the symmetrized product, where x^2 R^k realizes as (1/2)^k t_k
  // and z R^l as (1/2)^l z_l
  auto realize_rhs = [&](const BasisLabel& l) -> AnyElem {
    PolyElement poly = PolyElement::constant(1);
    Monomial m;
    Rational c = 1;
    for (std::size_t k = 0; k < l.I.size(); ++k) {
      if (!l.I[k]) continue;
      m = m.times(Monomial::var(VarId{"t", static_cast<int>(k)}, l.I[k]));
      c *= rat_pow(Rational(1, 2), static_cast<unsigned>(k) * static_cast<unsigned>(l.I[k]));
    }
    auto it = l.J.find(1);
    if (it != l.J.end()) {
      for (std::size_t k = 0; k < it->second.size(); ++k) {
        if (!it->second[k]) continue;
        m = m.times(Monomial::var(VarId{"z1", static_cast<int>(k)}, it->second[k]));
        c *= rat_pow(Rational(1, 2),
                     static_cast<unsigned>(k) * static_cast<unsigned>(it->second[k]));
      }
    }
    poly = PolyElement::monomial(m, c);
    return l.eps ? VtElement::odd(poly) : VtElement::even(poly);
  };

  Echelon<std::string> lech(true), rech(true);
  std::vector<AnyElem> lreal, rreal;
  for (std::size_t i = 0; i < lhs_labels.size(); ++i) {
    lreal.push_back(realize_label(L, lhs_labels[i]));
    REQUIRE(lech.insert(L.algebra->coords(lreal.back()), static_cast<int>(i)));
  }
  for (std::size_t i = 0; i < rhs_labels.size(); ++i) {
    rreal.push_back(realize_rhs(rhs_labels[i]));
    REQUIRE(rech.insert(Rr.algebra->coords(rreal.back()), static_cast<int>(i)));
  }

  // products of label pairs of small joint degree match coefficientwise
  long long compared = 0;
  for (std::size_t i = 0; i < lhs_labels.size(); ++i) {
    for (std::size_t j = 0; j < lhs_labels.size(); ++j) {
      if (lhs_labels[i].deg.total() + lhs_labels[j].deg.total() > bound) continue;
      AnyElem lp = L.algebra->mul(lreal[i], lreal[j]);
      std::size_t ri = ridx.at(lkey(lhs_labels[i]));
      std::size_t rj = ridx.at(lkey(lhs_labels[j]));
      AnyElem rp = Rsym->mul(rreal[ri], rreal[rj]);
      auto lcoef = lech.membership(L.algebra->coords(lp));
      auto rcoef = rech.membership(Rr.algebra->coords(rp));
      REQUIRE(lcoef.has_value());
      REQUIRE(rcoef.has_value());
      // translate left label ids to right label ids
      std::map<int, Rational> translated;
      for (const auto& [src, c] : *lcoef)
        translated[static_cast<int>(ridx.at(lkey(lhs_labels[src])))] = c;
      std::map<int, Rational> rmap;
      for (const auto& [src, c] : *rcoef) rmap[src] = c;
      CHECK(translated == rmap);
      ++compared;
    }
  }
  CHECK(compared > 0);
}
