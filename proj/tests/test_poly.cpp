#include <doctest.h>

#include "polydec/instancegen.hpp"
#include "polydec/poly.hpp"
#include "polydec/serialize.hpp"
#include "test_util.hpp"

using namespace polydec;
using testutil::P;

namespace {
const FieldCtx Q = FieldCtx::rationals();
}

TEST_CASE("sparse arithmetic basics") {
  // (x+y)(x-y) = x^2 - y^2
  MultiPoly a = P(Q, 2, {{{1, 0}, 1}, {{0, 1}, 1}});
  MultiPoly b = P(Q, 2, {{{1, 0}, 1}, {{0, 1}, -1}});
  CHECK(a * b == P(Q, 2, {{{2, 0}, 1}, {{0, 2}, -1}}));

  MultiPoly zero(Q, 2);
  CHECK(a + zero == a);
  CHECK(zero.degree() == -1);
  CHECK(a.degree() == 1);

  // (x+1)^4 has coefficients 1 4 6 4 1
  MultiPoly xp1 = P(Q, 1, {{{1}, 1}, {{0}, 1}});
  CHECK(xp1.pow(4) ==
        P(Q, 1, {{{4}, 1}, {{3}, 4}, {{2}, 6}, {{1}, 4}, {{0}, 1}}));

  CHECK_THROWS_AS(a + P(Q, 3, {{{1, 0, 0}, 1}}), ArityMismatch);
  CHECK_THROWS_AS(a + P(FieldCtx::gf(7), 2, {{{1, 0}, 1}}), CtxMismatch);
}

TEST_CASE("canonical text form") {
  MultiPoly p = P(Q, 3, {{{2, 1, 0}, 3}, {{0, 0, 1}, 1}, {{0, 0, 0}, 5}});
  CHECK(p.to_string() == "3*x1^2*x2 + x3 + 5");
  CHECK(MultiPoly(Q, 3).to_string() == "0");
  MultiPoly q = P(Q, 2, {{{1, 0}, 1}, {{0, 1}, -2}});
  CHECK(q.to_string() == "x1 - 2*x2");
  // Homogenized systems print the extra variable as x0.
  CHECK(P(Q, 2, {{{3, 1}, 1}}).to_string(0) == "x0^3*x1");
}

TEST_CASE("composition reproduces the worked instance") {
  auto ex = testutil::worked_instance(Q);
  CHECK(compose(ex.g, ex.h) == ex.f);
}

TEST_CASE("composition with the identity tuple") {
  const FieldCtx K = FieldCtx::gf(101);
  SeededRng rng(5);
  PolySystem h = random_system(K, 4, 4, 2, false, rng);
  PolySystem id(K, 4);
  for (int i = 0; i < 4; ++i) id.push_back(MultiPoly::variable(K, 4, i));
  CHECK(compose(id, h) == h);
  CHECK(compose(h, id) == h);
}

TEST_CASE("composition agrees with pointwise evaluation") {
  const FieldCtx K = FieldCtx::gf(101);
  SeededRng rng(99);
  for (int trial = 0; trial < 5; ++trial) {
    PolySystem h = random_system(K, 4, 4, 2, false, rng);
    PolySystem g = random_system(K, 4, 4, 2, false, rng);
    PolySystem f = compose(g, h);
    for (int pt = 0; pt < 20; ++pt) {
      std::vector<FieldElem> x;
      for (int i = 0; i < 4; ++i) x.push_back(K.sample_uniform(rng));
      CHECK(evaluate(f, x) == evaluate(g, evaluate(h, x)));
    }
  }
}

TEST_CASE("formal partial derivatives") {
  // d(x y^2 z)/dy = 2 x y z
  MultiPoly p = P(Q, 3, {{{1, 2, 1}, 1}});
  CHECK(p.partial_derivative(1) == P(Q, 3, {{{1, 1, 1}, 2}}));
  CHECK(P(Q, 3, {{{0, 0, 0}, 9}}).partial_derivative(0) == MultiPoly(Q, 3));
  CHECK_THROWS_AS(p.partial_derivative(3), IndexOutOfRange);
  CHECK_THROWS_AS(p.partial_derivative(-1), IndexOutOfRange);
}

TEST_CASE("Leibniz rule on random polynomials") {
  const FieldCtx K = FieldCtx::gf(65537);
  SeededRng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    MultiPoly a = random_poly(K, 3, 3, false, rng);
    MultiPoly b = random_poly(K, 3, 2, false, rng);
    for (int j = 0; j < 3; ++j) {
      CHECK((a * b).partial_derivative(j) ==
            a * b.partial_derivative(j) + b * a.partial_derivative(j));
    }
  }
}

TEST_CASE("chain rule through composition") {
  const FieldCtx K = FieldCtx::gf(65537);
  SeededRng rng(32);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3;
    PolySystem h = random_system(K, n, n, 2, false, rng);
    PolySystem g = random_system(K, n, n, 2, false, rng);
    PolySystem f = compose(g, h);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        MultiPoly lhs = f[i].partial_derivative(j);
        MultiPoly rhs(K, n);
        for (int k = 0; k < n; ++k) {
          PolySystem dgi(K, n);
          dgi.push_back(g[i].partial_derivative(k));
          rhs = rhs + compose(dgi, h)[0] * h[k].partial_derivative(j);
        }
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("homogenization shape") {
  // f = (x^4 + y) over 2 vars, d = 4  ->  (x0^4, x1^4 + x0^3 x2)
  PolySystem f(Q, 2);
  f.push_back(P(Q, 2, {{{4, 0}, 1}, {{0, 1}, 1}}));
  PolySystem F = homogenize(f, 4);
  REQUIRE(F.size() == 2);
  CHECK(F.nvars() == 3);
  CHECK(F[0] == P(Q, 3, {{{4, 0, 0}, 1}}));
  CHECK(F[1] == P(Q, 3, {{{0, 4, 0}, 1}, {{3, 0, 1}, 1}}));
  CHECK(F.is_homogeneous_of_degree(4));

  // Already homogeneous input: components unchanged apart from the prepended
  // power.
  auto ex = testutil::worked_instance(Q);
  PolySystem Fh = homogenize(ex.f, 4);
  CHECK(Fh[0] == P(Q, 4, {{{4, 0, 0, 0}, 1}}));
  for (int i = 0; i < ex.f.size(); ++i) {
    PolyAccum acc(Q, 4);
    for (const auto& [m, c] : ex.f[i].terms()) acc.add(m.insert_var(0, 0), c);
    CHECK(Fh[i + 1] == acc.take());
  }

  CHECK_THROWS_AS(homogenize(f, 3), DegreeTooSmall);
}

TEST_CASE("dehomogenization") {
  PolySystem F(Q, 2);
  F.push_back(P(Q, 2, {{{4, 0}, 1}}));                            // x0^4
  F.push_back(P(Q, 2, {{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}}));  // x0^2+x0x1+x1^2
  PolySystem f = dehomogenize(F);
  CHECK(f[0] == P(Q, 1, {{{0}, 1}}));
  CHECK(f[1] == P(Q, 1, {{{0}, 1}, {{1}, 1}, {{2}, 1}}));
}

TEST_CASE("homogenize/dehomogenize round-trip on random systems") {
  const FieldCtx K = FieldCtx::gf(101);
  SeededRng rng(77);
  int checked = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(4));
    const int deg = 1 + static_cast<int>(rng.below(4));
    PolySystem f =
        random_system(K, n, 1 + static_cast<int>(rng.below(3)), deg, false, rng);
    if (f.degree() < 1) continue;
    PolySystem F = homogenize(f, f.degree());
    for (int i = 0; i < F.size(); ++i)
      CHECK((F[i].is_zero() ||
             (F[i].is_homogeneous() && F[i].degree() == f.degree())));
    PolySystem back = dehomogenize(F);
    PolySystem tail(K, n);
    for (int i = 1; i < back.size(); ++i) tail.push_back(back[i]);
    CHECK(tail == f);
    ++checked;
  }
  CHECK(checked >= 40);
}

TEST_CASE("homogenization law for compositions") {
  const FieldCtx K = FieldCtx::gf(65537);
  SeededRng rng(123);
  int checked = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(3));
    PolySystem h = random_system(K, n, n, 2, false, rng);
    PolySystem g = random_system(K, n, n, 2, false, rng);
    PolySystem f = compose(g, h);
    if (f.degree() < 0) continue;
    // x0^{d_g d_h - d_f} * (f star) = (g star) o (h star)
    const int s = g.degree() * h.degree() - f.degree();
    REQUIRE(s >= 0);
    PolySystem fstar = homogenize(f, f.degree());
    PolySystem lhs(K, n + 1);
    const Monomial x0s = Monomial(n + 1).times_var(0, s);
    for (const auto& p : fstar.polys()) lhs.push_back(p.mul_by_monomial(x0s));
    PolySystem rhs =
        compose(homogenize(g, g.degree()), homogenize(h, h.degree()));
    CHECK(lhs == rhs);
    ++checked;
  }
  CHECK(checked >= 40);

  // Forced top-degree cancellation: g1 = y1^2 - y2^2 with h2 = h1 + lower,
  // so d_f < d_g*d_h and the x0 exponent is positive.
  PolySystem h(K, 2);
  MultiPoly h1 = P(K, 2, {{{2, 0}, 1}, {{1, 1}, 3}});
  MultiPoly low = P(K, 2, {{{1, 0}, 2}, {{0, 0}, 5}});
  h.push_back(h1);
  h.push_back(h1 + low);
  PolySystem g(K, 2);
  g.push_back(P(K, 2, {{{2, 0}, 1}, {{0, 2}, -1}}));
  g.push_back(P(K, 2, {{{1, 0}, 1}}));
  PolySystem f = compose(g, h);
  CHECK(f.degree() == 3);
  const int exponent = g.degree() * h.degree() - f.degree();
  CHECK(exponent == 1);
  PolySystem fstar = homogenize(f, f.degree());
  PolySystem lhs(K, 3);
  for (const auto& p : fstar.polys())
    lhs.push_back(p.mul_by_monomial(Monomial(3).times_var(0, exponent)));
  CHECK(lhs == compose(homogenize(g, g.degree()), homogenize(h, h.degree())));
}

TEST_CASE("dehomogenized composition law for degree-proper pairs") {
  const FieldCtx K = FieldCtx::gf(65537);
  SeededRng rng(321);
  int checked = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(3));
    PolySystem h = random_system(K, n, n, 2, false, rng);
    PolySystem g = random_system(K, n, n, 2, false, rng);
    PolySystem f = compose(g, h);
    if (g.degree() != 2 || h.degree() != 2 || f.degree() != 4) continue;
    PolySystem back = dehomogenize(compose(homogenize(g, 2), homogenize(h, 2)));
    REQUIRE(back.size() == f.size() + 1);
    CHECK(back[0] == MultiPoly::constant(K, n, K.one()));
    for (int i = 0; i < f.size(); ++i) CHECK(back[i + 1] == f[i]);
    ++checked;
  }
  CHECK(checked >= 15);
}

TEST_CASE("evaluation") {
  MultiPoly p = P(Q, 2, {{{2, 0}, 1}, {{0, 1}, 1}});  // x^2 + y
  CHECK(p.evaluate({Q.from_int(2), Q.from_int(3)}) == Q.from_int(7));
  MultiPoly r = P(Q, 2, {{{2, 1}, 4}, {{0, 0}, -9}});
  CHECK(r.evaluate({Q.zero(), Q.zero()}) == Q.from_int(-9));
  CHECK_THROWS_AS(p.evaluate({Q.one()}), ArityMismatch);
}

TEST_CASE("system JSON encoding is canonical and round-trips") {
  auto ex = testutil::worked_instance(Q);
  const std::string bytes = serialize(ex.f);
  CHECK(bytes ==
        R"({"field":"q","nvars":3,"polys":[{"terms":[[[1,2,1],"1"]]},{"terms":[[[2,2,0],"1"],[[1,2,1],"1"]]},{"terms":[[[1,2,1],"1"],[[0,2,2],"1"]]}]})");
  CHECK(parse_system(bytes) == ex.f);
}
