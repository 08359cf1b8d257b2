#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nalab/error.hpp"
#include "nalab/term.hpp"

using namespace nalab;

namespace {

struct Fixture {
  std::shared_ptr<TermContext> ctx = std::make_shared<TermContext>();
  int x, y, z, t;
  Fixture() {
    x = ctx->declare("x", 0);
    y = ctx->declare("y", 0);
    z = ctx->declare("z", 0);
    t = ctx->declare("t", 0);
  }
  TermPoly v(int idx) const { return TermPoly::variable(ctx, idx); }
};

TermPoly random_term(const Fixture& f, std::mt19937_64& rng, int nodes) {
  TermPoly p = f.v(static_cast<int>(rng() % 3));
  for (int i = 1; i < nodes; ++i) {
    TermPoly q = f.v(static_cast<int>(rng() % 3));
    p = (rng() & 1) ? p * q : q * p;
  }
  return p;
}

}  // namespace

TEST_CASE("parser expands the sugar forms") {
  TermPoly assoc = parse_term("even x y z ; (assoc x y z)");
  Fixture f;
  // (xy)z - x(yz), rebuilt against an equal context
  TermPoly want = t_assoc(f.v(f.x), f.v(f.y), f.v(f.z));
  CHECK(assoc.text() == "(+ (scale -1 (* x (* y z))) (* (* x y) z))");
  CHECK(want.text() == assoc.text());

  CHECK(parse_term("even x y ; (comm x y)").text() == "(+ (* x y) (scale -1 (* y x)))");
  CHECK(parse_term("odd x y ; (scomm x y)").text() == "(+ (* x y) (* y x))");
  CHECK(parse_term("even x y ; (scomm x y)").text() == "(+ (* x y) (scale -1 (* y x)))");
}

TEST_CASE("parser reports positions and undeclared variables") {
  CHECK_THROWS_AS(parse_term("even x ; (comm x w)"), Error);
  try {
    parse_term("even x ; (comm x w)");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UndeclaredVariable);
  }
  CHECK_THROWS_AS(parse_term("even x ; (comm x"), Error);
  CHECK_THROWS_AS(parse_term("even x ; 7"), Error);
  CHECK(parse_term("even x ; 0").is_zero());
  CHECK_THROWS_AS(parse_term("even x x ; x"), Error);
}

TEST_CASE("operator vocabulary") {
  Fixture f;
  TermPoly zz = f.v(f.z), xx = f.v(f.x), aa = f.v(f.y);
  // z R_{x,x} = (zx)x - z x^2
  TermPoly want = (zz * xx) * xx - zz * (xx * xx);
  CHECK(op_Rab(zz, xx, xx).equals(want));
  CHECK(op_Q(xx, aa).equals(t_assoc(aa, aa, xx)));
  CHECK(op_Dab(xx, aa, zz).equals(t_assoc(aa, xx, zz)));
  CHECK(op_R(xx, aa).equals(xx * aa));
  CHECK(op_L(xx, aa).equals(aa * xx));

  TermPoly via_parse = parse_term("even x z ; (op Rab x x z)");
  CHECK(via_parse.text() == op_Rab(zz, xx, xx).text());
}

TEST_CASE("k and h functions") {
  Fixture f;
  TermPoly x = f.v(f.x), y = f.v(f.y), z = f.v(f.z), t = f.v(f.t);
  // h_x(a,a) = 0
  CHECK(h_func(x, y, y).is_zero());
  // the x,y-symmetry of k needs commutativity; the difference is nonzero as a
  // free term and vanishes under every commutative substitution (checked in
  // the engine tests via the consequence machinery)
  CHECK(!k_func(x, y, z, t).equals(k_func(y, x, z, t)));
  // k(x;y) agrees with the four-argument specialization
  CHECK(k_xy(x, y).equals(k_func(x, x, y, y)));
}

TEST_CASE("symmetrize replaces products by half-sums") {
  Fixture f;
  TermPoly x = f.v(f.x), y = f.v(f.y);
  TermPoly sym_xy = symmetrize_term(x * y);
  CHECK(sym_xy.equals((x * y + y * x).scaled(Rational(1, 2))));
  CHECK(symmetrize_term(x * x).equals(x * x));
  // multiplicative over grafting: (uv)^+ = 1/2 (u^+ v^+ + v^+ u^+)
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    TermPoly u = random_term(f, rng, 3), v = random_term(f, rng, 2);
    TermPoly lhs = symmetrize_term(u * v);
    TermPoly su = symmetrize_term(u), sv = symmetrize_term(v);
    CHECK(lhs.equals((su * sv + sv * su).scaled(Rational(1, 2))));
  }
}

TEST_CASE("full linearization of the square") {
  Fixture f;
  TermPoly x = f.v(f.x);
  TermPoly sq = x * x;
  TermPoly lin = full_linearize(sq, f.x, LinMode::Plain);
  // x1 x2 + x2 x1 over the extended context
  CHECK(lin.terms().size() == 2);
  for (const auto& [t, c] : lin.terms()) CHECK(c == 1);
}

TEST_CASE("alternating linearization of the square") {
  Fixture f;
  TermPoly x = f.v(f.x);
  TermPoly alt = full_linearize(x * x, f.x, LinMode::Alternating);
  // id: +x1x2 ; swap: -x2x1
  CHECK(alt.terms().size() == 2);
  Rational sum = 0;
  for (const auto& [t, c] : alt.terms()) sum += c;
  CHECK(sum == 0);
}

TEST_CASE("alternating sum over declared variables") {
  auto ctx = std::make_shared<TermContext>();
  int x1 = ctx->declare("x1", 0);
  int x2 = ctx->declare("x2", 0);
  TermPoly f = TermPoly::variable(ctx, x1) * TermPoly::variable(ctx, x2);
  TermPoly alt = alternating_sum(f, {x1, x2});
  TermPoly want = TermPoly::variable(ctx, x1) * TermPoly::variable(ctx, x2) -
                  TermPoly::variable(ctx, x2) * TermPoly::variable(ctx, x1);
  CHECK(alt.equals(want));
}

TEST_CASE("linearization of the cube of a single variable") {
  Fixture f;
  TermPoly x = f.v(f.x);
  TermPoly assoc3 = t_assoc(x, x, x);
  TermPoly lin = full_linearize(assoc3, f.x, LinMode::Plain);
  // six associator instances
  int terms = 0;
  for (const auto& [t, c] : lin.terms()) {
    (void)t;
    ++terms;
  }
  CHECK(terms == 12);  // each associator expands to two trees
}

TEST_CASE("setting the linearization variables back recovers n! f") {
  Fixture f;
  std::mt19937_64 rng(17);
  auto random_yz = [&](int nodes) {
    TermPoly p = f.v(1 + static_cast<int>(rng() % 2));
    for (int i = 1; i < nodes; ++i) {
      TermPoly q = f.v(1 + static_cast<int>(rng() % 2));
      p = (rng() & 1) ? p * q : q * p;
    }
    return p;
  };
  for (int trial = 0; trial < 20; ++trial) {
    TermPoly base = random_yz(2);
    TermPoly p = (base * f.v(f.x)) * (f.v(f.x) * base);  // degree 2 in x
    TermPoly lin = full_linearize(p, f.x, LinMode::Plain);
    // substitute x1, x2 -> x
    const auto& ctx = lin.ctx();
    TermPoly back = lin;
    for (const auto& name : {"x1", "x2"}) {
      int idx = ctx->find(name);
      REQUIRE(idx >= 0);
      back = substitute_var(back, idx, TermPoly::variable(ctx, ctx->find("x")));
    }
    TermPoly scaled(ctx);
    for (const auto& [t, c] : p.terms()) scaled.add_term(t, c * 2);  // 2! = 2
    CHECK(back.equals(scaled));
  }
}

TEST_CASE("linearization requires homogeneity") {
  Fixture f;
  TermPoly x = f.v(f.x), y = f.v(f.y);
  TermPoly mixed = x + x * x;
  CHECK_THROWS_AS(full_linearize(mixed, f.x, LinMode::Plain), Error);
  CHECK_THROWS_AS(full_linearize(y, f.x, LinMode::Plain), Error);
}

TEST_CASE("partial linearization") {
  Fixture f;
  TermPoly x = f.v(f.x), y = f.v(f.y);
  CHECK(partial_linearize(x * x, f.x, f.y, 1).equals(x * y + y * x));
  CHECK(partial_linearize(x * x, f.x, f.y, 2).equals(y * y));
  CHECK_THROWS_AS(partial_linearize(x * x, f.x, f.y, 3), Error);
  try {
    partial_linearize(x * x, f.x, f.y, 3);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DegreeTooLow);
  }
}

TEST_CASE("partial linearization matches the f(x+y) expansion") {
  // Delta_x^i(y) is the y-multidegree-i component of f(x+y); collapsing y
  // back to x multiplies by the number of i-subsets of the occurrences.
  Fixture f;
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 15; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);  // degree in x up to 5
    TermPoly p = f.v(f.x);
    for (int j = 1; j < n; ++j) p = (rng() & 1) ? p * f.v(f.x) : f.v(f.x) * p;
    TermPoly shifted = substitute_var(p, f.x, f.v(f.x) + f.v(f.y));
    for (int i = 1; i <= n; ++i) {
      TermPoly d = partial_linearize(p, f.x, f.y, i);
      // independent oracle: extract the y-degree-i component of f(x+y)
      TermPoly component(shifted.ctx());
      for (const auto& [t, c] : shifted.terms()) {
        std::vector<int> deg;
        term_multideg(t, deg);
        deg.resize(4, 0);
        if (deg[f.y] == i) component.add_term(t, c);
      }
      CHECK(d.equals(component));
      TermPoly back = substitute_var(d, f.y, f.v(f.x));
      Rational factor(binomial(static_cast<unsigned>(n), static_cast<unsigned>(i)));
      CHECK(back.equals(p.scaled(factor)));
    }
  }
}

TEST_CASE("pretty printer is inverse to the parser") {
  Fixture f;
  std::mt19937_64 rng(31);
  auto ctx_header = "even x y z t ; ";
  for (int trial = 0; trial < 30; ++trial) {
    TermPoly p = random_term(f, rng, 4) - random_term(f, rng, 3).scaled(Rational(3, 2));
    TermPoly q = parse_term(ctx_header + p.text());
    CHECK(q.text() == p.text());
  }
}

TEST_CASE("multilinearize produces a multilinear polynomial") {
  Fixture f;
  TermPoly x = f.v(f.x), y = f.v(f.y);
  TermPoly p = t_assoc(x * x, y, x);
  TermPoly m = multilinearize(p);
  CHECK(m.is_multilinear());
  CHECK(m.ctx()->size() == 7);  // x,y,z,t + x1,x2,x3
}
