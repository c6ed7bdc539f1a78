#include <doctest.h>

#include <json.hpp>

#include "polydec/decomposer.hpp"
#include "polydec/instancegen.hpp"
#include "polydec/oracles.hpp"
#include "test_util.hpp"

using namespace polydec;
using testutil::P;

namespace {

const FieldCtx Q = FieldCtx::rationals();
const FieldCtx K = FieldCtx::gf(65537);

// Inverse of an invertible linear map given as a system of linear forms.
PolySystem invert_linear(const PolySystem& L) {
  const int n = L.nvars();
  Matrix aug(L.ctx(), n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      aug.at(i, j) = L[i].coeff(Monomial(n).times_var(j));
    aug.at(i, n + i) = L.ctx().one();
  }
  RrefResult red = rref_partial(aug, n);
  REQUIRE(red.rank() == n);
  PolySystem inv(L.ctx(), n);
  // Row i of the inverse matrix M^{-1} satisfies x_i = sum_j (M^{-1})_{ij} y_j.
  for (int i = 0; i < n; ++i) {
    PolyAccum acc(L.ctx(), n);
    for (int j = 0; j < n; ++j)
      acc.add(Monomial(n).times_var(j), red.mat.at(i, n + j));
    inv.push_back(acc.take());
  }
  return inv;
}

}  // namespace

TEST_CASE("right factor recovery and padding") {
  auto ex = testutil::worked_instance(Q);
  PolySpace R = span(ex.h);
  PolySystem rec = recover_right_factor(R, 3);
  CHECK(rec.size() == 3);
  CHECK(span(rec) == R);

  // Rank-two tuple: basis plus the first element repeated.
  MultiPoly sum_sq = P(Q, 3, {{{2, 0, 0}, 1}, {{0, 2, 0}, 1}, {{0, 0, 2}, 1}});
  MultiPoly x2_sq = P(Q, 3, {{{0, 2, 0}, 1}});
  PolySpace R2 = span(Q, 3, {sum_sq, x2_sq});
  PolySystem padded = recover_right_factor(R2, 3);
  REQUIRE(padded.size() == 3);
  CHECK(padded[2] == padded[0]);
  CHECK(span(padded) == R2);

  // A permuted generating set recovers the same space.
  PolySystem shuffled(Q, 3);
  shuffled.push_back(ex.h[2]);
  shuffled.push_back(ex.h[0] + ex.h[1]);
  shuffled.push_back(ex.h[1]);
  CHECK(span(recover_right_factor(span(shuffled), 3)) == R);

  CHECK_THROWS_AS(recover_right_factor(PolySpace::zero_space(Q, 3), 3),
                  EmptySpace);
  PolySpace big = span(Q, 3, {P(Q, 3, {{{1, 0, 0}, 1}}),
                              P(Q, 3, {{{0, 1, 0}, 1}}),
                              P(Q, 3, {{{0, 0, 1}, 1}})});
  CHECK_THROWS_AS(recover_right_factor(big, 2), DimExceedsN);
}

TEST_CASE("left factor solving on the worked instance") {
  auto ex = testutil::worked_instance(Q);
  auto g = solve_left_factor(ex.f, ex.h, 2);
  REQUIRE(g.has_value());
  CHECK(compose(*g, ex.h) == ex.f);
  // The published outer tuple is one valid witness.
  CHECK(verify(ex.f, ex.g, ex.h).equal);
}

TEST_CASE("left factor solving at degree one is the identity") {
  SeededRng rng(44);
  PolySystem h = random_system(K, 4, 4, 2, false, rng);
  auto g = solve_left_factor(h, h, 1);
  REQUIRE(g.has_value());
  PolySystem id(K, 4);
  for (int i = 0; i < 4; ++i) id.push_back(MultiPoly::variable(K, 4, i));
  CHECK(*g == id);
}

TEST_CASE("left factor solving rejects wrong candidates") {
  SeededRng rng(45);
  for (int trial = 0; trial < 5; ++trial) {
    // Direct random quartic, not a composition.
    PolySystem f = random_system(K, 3, 3, 4, false, rng);
    PolySystem h = random_system(K, 3, 3, 2, false, rng);
    auto g = solve_left_factor(f, h, 2);
    if (g) CHECK(compose(*g, h) == f);  // accidental hit must still be exact
    CHECK_FALSE(g.has_value());
  }
}

TEST_CASE("homogeneous pipeline round-trips random instances") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    GenSpec spec;
    spec.ctx = K;
    spec.n = 5;
    spec.homogeneous = true;
    spec.seed = seed;
    Instance inst = gen_decomposable(spec);
    DecompOutcome out = decompose_homogeneous(inst.f, seed);
    REQUIRE(succeeded(out));
    const DecompResult& r = result_of(out);
    CHECK(r.verified);
    CHECK(compose(r.g, r.h) == inst.f);  // soundness re-checked here
    CHECK(r.factor_space_dim == 5);
    CHECK_FALSE(r.padding_used);
    CHECK(span(r.h) == span(inst.h));
    CHECK(verify(inst.f, r.g, r.h).degree_proper);
  }
}

TEST_CASE("homogeneous pipeline preconditions") {
  auto ex = testutil::worked_instance(Q);
  PolySystem two(Q, 3);
  two.push_back(ex.f[0]);
  two.push_back(ex.f[1]);
  CHECK_THROWS_AS(decompose_homogeneous(two, 1), ArityMismatch);
  PolySystem affine(Q, 1);
  affine.push_back(P(Q, 1, {{{4}, 1}, {{1}, 1}}));
  CHECK_THROWS_AS(decompose_homogeneous(affine, 1), PreconditionError);
}

TEST_CASE("below the guarantee the pipeline never lies") {
  // n = 2 square pair: the quotient strictly exceeds the factor space, so
  // the run may fail, but a success must be exact.
  auto ex = testutil::square_pair_instance(Q);
  DecompOutcome out = decompose_homogeneous(ex.f, 11);
  if (succeeded(out)) {
    CHECK(result_of(out).verified);
    CHECK(compose(result_of(out).g, result_of(out).h) == ex.f);
  } else {
    CHECK_FALSE(failure_of(out).stage.empty());
  }
}

TEST_CASE("rank-deficient instances decompose with padding") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    GenSpec spec;
    spec.ctx = K;
    spec.n = 5;
    spec.homogeneous = true;
    spec.seed = seed;
    Instance inst = gen_rank_deficient(spec, 2);
    DecompOutcome out = decompose_homogeneous(inst.f, seed);
    REQUIRE(succeeded(out));
    const DecompResult& r = result_of(out);
    CHECK(r.verified);
    CHECK(r.padding_used);
    CHECK(r.factor_space_dim == 2);
    CHECK(compose(r.g, r.h) == inst.f);
    CHECK(span(r.h) == span(inst.h));
  }
}

TEST_CASE("full algorithm on affine instances") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    GenSpec spec;
    spec.ctx = K;
    spec.n = 5;
    spec.seed = seed;
    Instance inst = gen_decomposable(spec);
    REQUIRE(inst.f.degree() == 4);
    DecompOutcome out = fdpmp4(inst.f, seed);
    REQUIRE(succeeded(out));
    const DecompResult& r = result_of(out);
    CHECK(r.verified);
    CHECK(compose(r.g, r.h) == inst.f);
    CHECK(r.conjecture1_held);
    CHECK(verify(inst.f, r.g, r.h).degree_proper);
    if (r.padding_used) CHECK(r.factor_space_dim < 5);
  }
}

TEST_CASE("full algorithm agrees with the homogeneous pipeline") {
  GenSpec spec;
  spec.ctx = K;
  spec.n = 5;
  spec.homogeneous = true;
  spec.seed = 77;
  Instance inst = gen_decomposable(spec);
  DecompOutcome a = fdpmp4(inst.f, 1);
  DecompOutcome b = decompose_homogeneous(inst.f, 2);
  REQUIRE(succeeded(a));
  REQUIRE(succeeded(b));
  CHECK(span(result_of(a).h) == span(result_of(b).h));
}

TEST_CASE("full algorithm preconditions") {
  PolySystem linear(K, 2);
  linear.push_back(P(K, 2, {{{1, 0}, 1}}));
  linear.push_back(P(K, 2, {{{0, 1}, 1}}));
  CHECK_THROWS_AS(fdpmp4(linear, 1), PreconditionError);

  PolySystem high(K, 2);
  high.push_back(P(K, 2, {{{5, 0}, 1}}));
  high.push_back(P(K, 2, {{{0, 4}, 1}}));
  CHECK_THROWS_AS(fdpmp4(high, 1), PreconditionError);

  PolySystem wrong_count(K, 2);
  wrong_count.push_back(P(K, 2, {{{4, 0}, 1}}));
  CHECK_THROWS_AS(fdpmp4(wrong_count, 1), ArityMismatch);
}

TEST_CASE("equivalent decompositions yield the same factor space") {
  GenSpec spec;
  spec.ctx = K;
  spec.n = 5;
  spec.seed = 31;
  Instance inst = gen_decomposable(spec);

  SeededRng rng(57);
  PolySystem L = random_invertible_linear(K, 5, rng);
  PolySystem Linv = invert_linear(L);
  // (g o Linv, L o h) composes to the same f with the same factor space.
  PolySystem h2 = compose(L, inst.h);
  PolySystem g2 = compose(inst.g, Linv);
  CHECK(compose(g2, h2) == inst.f);
  CHECK(span(h2) == span(inst.h));

  DecompOutcome a = fdpmp4(inst.f, 101);
  DecompOutcome b = fdpmp4(inst.f, 202);
  REQUIRE(succeeded(a));
  REQUIRE(succeeded(b));
  CHECK(span(result_of(a).h) == span(result_of(b).h));
}

TEST_CASE("underdetermined pipeline") {
  // u = n-1 at n = 6 with one multiplier degree.
  SeededRng rng(9);
  PolySystem h = random_system(K, 6, 6, 2, true, rng);
  PolySystem g(K, 6);
  for (int i = 0; i < 5; ++i) g.push_back(random_poly(K, 6, 2, true, rng));
  PolySystem f = compose(g, h);
  DecompOutcome out = decompose_underdetermined(f, 1, 9);
  REQUIRE(succeeded(out));
  CHECK(result_of(out).verified);
  CHECK(compose(result_of(out).g, result_of(out).h) == f);
  CHECK(span(result_of(out).h) == span(h));
}

TEST_CASE("underdetermined collapse at u = n, d = 0") {
  SeededRng rng(3);
  PolySystem h = random_system(K, 5, 5, 2, true, rng);
  PolySystem g = random_system(K, 5, 5, 2, true, rng);
  PolySystem f = compose(g, h);
  DecompOutcome a = decompose_underdetermined(f, 0, 3);
  DecompOutcome b = decompose_homogeneous(f, 3);
  REQUIRE(succeeded(a));
  REQUIRE(succeeded(b));
  CHECK(span(result_of(a).h) == span(result_of(b).h));
}

TEST_CASE("underdetermined pipeline reports oversized quotients") {
  // u = 2 generic quadratics in 3 variables fill the quartics completely, so
  // the multiplier space is too big and the quotient blows past n.
  SeededRng rng(104);
  PolySystem h = random_system(K, 3, 3, 2, true, rng);
  PolySystem g2(K, 3);
  g2.push_back(random_poly(K, 3, 2, true, rng));
  g2.push_back(random_poly(K, 3, 2, true, rng));
  PolySystem f = compose(g2, h);
  DecompOutcome out = decompose_underdetermined(f, 1, 4);
  REQUIRE_FALSE(succeeded(out));
  CHECK(failure_of(out).stage == "quotient");
  CHECK(failure_of(out).diagnostics.find("suspect") != std::string::npos);
}

TEST_CASE("verification report") {
  auto ex = testutil::worked_instance(Q);
  VerifyReport rep = verify(ex.f, ex.g, ex.h);
  CHECK(rep.equal);
  CHECK(rep.degree_proper);  // 4 = 2*2

  // One perturbed coefficient breaks equality.
  PolySystem h2(Q, 3);
  h2.push_back(ex.h[0] + P(Q, 3, {{{0, 0, 1}, 1}}));
  h2.push_back(ex.h[1]);
  h2.push_back(ex.h[2]);
  CHECK_FALSE(verify(ex.f, ex.g, h2).equal);

  // Linear pairs are degree proper (1 = 1*1) and trivially verified.
  SeededRng rng(6);
  PolySystem lg = random_invertible_linear(K, 3, rng);
  PolySystem lh = random_invertible_linear(K, 3, rng);
  VerifyReport lin = verify(compose(lg, lh), lg, lh);
  CHECK(lin.equal);
  CHECK(lin.degree_proper);

  CHECK_THROWS_AS(verify(ex.f, ex.g, PolySystem(Q, 3)), ArityMismatch);
}

TEST_CASE("outcome JSON shapes") {
  GenSpec spec;
  spec.ctx = K;
  spec.n = 5;
  spec.seed = 2;
  Instance inst = gen_decomposable(spec);
  DecompOutcome out = fdpmp4(inst.f, 2);
  REQUIRE(succeeded(out));
  nlohmann::json j = nlohmann::json::parse(outcome_to_json(out));
  CHECK(j["verified"] == true);
  CHECK(j["factor_space_dim"] == result_of(out).factor_space_dim);
  CHECK(j.contains("stage_timings_ms"));
  CHECK(j.contains("g"));
  CHECK(j.contains("h"));
  CHECK(j["conjecture1_held"].is_boolean());

  DecompFailure fail{"quotient", "probe"};
  nlohmann::json jf = nlohmann::json::parse(fail.to_json());
  CHECK(jf["verified"] == false);
  CHECK(jf["failure_stage"] == "quotient");
}
