#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nalab/error.hpp"
#include "nalab/poly.hpp"

using namespace nalab;

namespace {

VarId T(int i) { return VarId{"t", i}; }

PolyElement tvar(int i) { return PolyElement::variable(T(i)); }

DerivationSpec shift_spec() {
  DerivationSpec d;
  d.shifts.push_back({"t", std::nullopt});
  return d;
}

PolyElement random_poly(std::mt19937_64& rng, int maxdeg = 3, int terms = 3) {
  PolyElement p;
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    int deg = static_cast<int>(rng() % (maxdeg + 1));
    for (int j = 0; j < deg; ++j) m = m.times(Monomial::var(T(static_cast<int>(rng() % 3))));
    long long num = static_cast<long long>(rng() % 9) - 4;
    long long den = 1 + static_cast<long long>(rng() % 3);
    p.add_term(m, Rational(Integer(num), Integer(den)));
  }
  return p;
}

}  // namespace

TEST_CASE("addition examples") {
  CHECK((tvar(0) + (-tvar(0))).is_zero());
  PolyElement s = tvar(0) + tvar(1);
  CHECK(s.terms().size() == 2);
  CHECK(s.text() == "t_0 + t_1");
  PolyElement half_sq = PolyElement::monomial(Monomial::var(T(0), 2), Rational(1, 2));
  CHECK((half_sq + half_sq).text() == "t_0^2");
}

TEST_CASE("multiplication examples") {
  PolyElement one = PolyElement::constant(1);
  std::mt19937_64 rng(7);
  PolyElement p = random_poly(rng);
  CHECK(one * p == p);
  PolyElement d = (tvar(0) + tvar(1)) * (tvar(0) - tvar(1));
  PolyElement want =
      PolyElement::monomial(Monomial::var(T(0), 2), 1) - PolyElement::monomial(Monomial::var(T(1), 2), 1);
  CHECK(d == want);
  PolyElement zs = PolyElement::variable(VarId{"z", -1}) * PolyElement::variable(VarId{"s", -1});
  CHECK(zs.text() == "s*z");
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    PolyElement a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
  }
}

TEST_CASE("derivation shifts indexed families") {
  DerivationSpec d = shift_spec();
  CHECK(derive(d, tvar(0)) == tvar(1));
  CHECK(derive(d, PolyElement::constant(Rational(5, 3))).is_zero());
}

TEST_CASE("derivation satisfies the Leibniz rule") {
  DerivationSpec d = shift_spec();
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    PolyElement p = random_poly(rng), q = random_poly(rng);
    CHECK(derive(d, p * q) == derive(d, p) * q + p * derive(d, q));
  }
}

TEST_CASE("s d/dz acts correctly") {
  DerivationSpec d;
  VarId z{"z", -1}, s{"s", -1};
  d.action.emplace(z, PolyElement::variable(s));
  d.action.emplace(s, PolyElement::zero());
  PolyElement z2 = PolyElement::variable(z, 2);
  PolyElement want = PolyElement::monomial(Monomial::var(z).times(Monomial::var(s)), 2);
  CHECK(derive(d, z2) == want);
}

TEST_CASE("derivation undefined on foreign variables") {
  DerivationSpec d = shift_spec();
  PolyElement p = PolyElement::variable(VarId{"w", -1});
  CHECK_THROWS_AS(derive(d, p), Error);
  try {
    derive(d, p);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnknownVariable);
  }
}

TEST_CASE("substitution is a ring homomorphism and intertwines derivations") {
  // t_i |-> D^i(z) under s d/dz: t_0 -> z, t_1 -> s... check on t_1 via the
  // compatibility derive(s d/dz, image(t_0)) == image(t_1).
  DerivationSpec dz;
  VarId z{"z", -1}, s{"s", -1};
  dz.action.emplace(z, PolyElement::variable(s));
  dz.action.emplace(s, PolyElement::zero());

  std::map<VarId, PolyElement> img;
  img.emplace(T(0), PolyElement::variable(z, 2));
  img.emplace(T(1), derive(dz, PolyElement::variable(z, 2)));  // 2zs
  CHECK(derive(dz, img.at(T(0))) == img.at(T(1)));

  PolyElement p = tvar(0) * tvar(1) + tvar(0);
  PolyElement sub = substitute_hom(img, p);
  CHECK(sub == img.at(T(0)) * img.at(T(1)) + img.at(T(0)));

  // identity map
  std::map<VarId, PolyElement> ident;
  ident.emplace(T(0), tvar(0));
  ident.emplace(T(1), tvar(1));
  CHECK(substitute_hom(ident, p) == p);

  // annihilation
  std::map<VarId, PolyElement> kill;
  kill.emplace(T(0), PolyElement::zero());
  kill.emplace(T(1), tvar(1));
  CHECK(substitute_hom(kill, tvar(0) * tvar(1)).is_zero());

  std::map<VarId, PolyElement> partial;
  partial.emplace(T(0), tvar(0));
  CHECK_THROWS_AS(substitute_hom(partial, p), Error);
}

TEST_CASE("substitution is multiplicative on random pairs") {
  std::mt19937_64 rng(5);
  std::map<VarId, PolyElement> img;
  img.emplace(T(0), random_poly(rng, 2, 2));
  img.emplace(T(1), random_poly(rng, 2, 2));
  img.emplace(T(2), PolyElement::constant(2));
  for (int trial = 0; trial < 40; ++trial) {
    PolyElement p = random_poly(rng), q = random_poly(rng);
    CHECK(substitute_hom(img, p * q) == substitute_hom(img, p) * substitute_hom(img, q));
    CHECK(substitute_hom(img, p + q) == substitute_hom(img, p) + substitute_hom(img, q));
  }
}

TEST_CASE("deglex order and canonical text") {
  PolyElement p = tvar(1) + tvar(0) + PolyElement::monomial(Monomial::var(T(0), 2), Rational(3, 2)) +
                  PolyElement::constant(-1);
  CHECK(p.text() == "3/2*t_0^2 + t_0 + t_1 - 1");
}

TEST_CASE("text round trip") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    PolyElement p = random_poly(rng, 4, 4);
    CHECK(PolyElement::parse(p.text()) == p);
  }
  CHECK(PolyElement::parse("0").is_zero());
  CHECK(PolyElement::parse("z") == PolyElement::variable(VarId{"z", -1}));
  CHECK(PolyElement::parse("2*s").text() == "2*s");
  CHECK_THROWS_AS(PolyElement::parse("t_"), Error);
  CHECK_THROWS_AS(PolyElement::parse("1 +"), Error);
}

TEST_CASE("truncation drops high-degree terms") {
  PolyElement p = PolyElement::monomial(Monomial::var(T(0), 3), 1) + tvar(1);
  CHECK(p.truncated(2) == tvar(1));
  // derivation preserves total degree, so truncation commutes with it
  DerivationSpec d = shift_spec();
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    PolyElement q = random_poly(rng, 4, 4);
    CHECK(derive(d, q.truncated(3)).truncated(3) == derive(d, q).truncated(3));
  }
}

TEST_CASE("ring spec membership and monomial enumeration") {
  RingSpec ring;
  ring.families = {{"t", true, 3}, {"z", false, -1}};
  CHECK(ring.contains(VarId{"t", 0}));
  CHECK(ring.contains(VarId{"t", 3}));
  CHECK(!ring.contains(VarId{"t", 4}));
  CHECK(ring.contains(VarId{"z", -1}));
  CHECK(!ring.contains(VarId{"z", 1}));
  CHECK(!ring.contains(VarId{"w", -1}));

  auto monos = ring.monomials_up_to(2);
  // 5 variables (t_0..t_3, z): C(5,0)+C(5,1)+C(6,2)= 1 + 5 + 15 = 21
  CHECK(monos.size() == 21);
}
