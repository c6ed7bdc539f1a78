#include <doctest.h>

#include "polydec/decomposer.hpp"
#include "polydec/instancegen.hpp"
#include "polydec/oracles.hpp"
#include "test_util.hpp"

using namespace polydec;
using testutil::P;

namespace {
const FieldCtx K = FieldCtx::gf(65537);
}

TEST_CASE("generation is deterministic per seed") {
  GenSpec spec;
  spec.ctx = FieldCtx::gf(7);
  spec.n = 2;
  spec.seed = 42;
  Instance a = gen_decomposable(spec);
  Instance b = gen_decomposable(spec);
  CHECK(a.f == b.f);
  CHECK(a.g == b.g);
  CHECK(a.h == b.h);
  CHECK(serialize(a.f) == serialize(b.f));

  spec.seed = 43;
  CHECK(gen_decomposable(spec).f != a.f);
}

TEST_CASE("homogeneous generation has exact degrees") {
  GenSpec spec;
  spec.ctx = K;
  spec.n = 4;
  spec.homogeneous = true;
  spec.seed = 9;
  Instance inst = gen_decomposable(spec);
  CHECK(inst.g.is_homogeneous_of_degree(2));
  CHECK(inst.h.is_homogeneous_of_degree(2));
  CHECK(inst.f.is_homogeneous_of_degree(4));
  CHECK(compose(inst.g, inst.h) == inst.f);
}

TEST_CASE("composition degree law over many seeds") {
  int proper = 0;
  const int trials = 40;
  for (std::uint64_t seed = 1; seed <= trials; ++seed) {
    GenSpec spec;
    spec.ctx = K;
    spec.n = 3;
    spec.seed = seed;
    Instance inst = gen_decomposable(spec);
    const int df = inst.f.degree();
    CHECK(df <= inst.g.degree() * inst.h.degree());
    if (df == inst.g.degree() * inst.h.degree()) ++proper;
  }
  // Top-degree cancellation is a measure-zero event; expect near-all proper.
  CHECK(proper >= trials - 2);
}

TEST_CASE("spec validation") {
  GenSpec spec;
  spec.ctx = K;
  spec.n = 3;
  spec.d_g = 3;
  spec.d_h = 2;
  CHECK_THROWS_AS(spec.validate(), PreconditionError);
  spec.d_g = 2;
  CHECK_NOTHROW(spec.validate());
  spec.n = 0;
  CHECK_THROWS_AS(spec.validate(), PreconditionError);
}

TEST_CASE("rank-deficient generation") {
  GenSpec spec;
  spec.ctx = K;
  spec.n = 5;
  spec.seed = 4;
  CHECK_THROWS_AS(gen_rank_deficient(spec, 0), InvalidRank);
  CHECK_THROWS_AS(gen_rank_deficient(spec, 5), InvalidRank);
  for (int k : {1, 2, 3, 4}) {
    Instance inst = gen_rank_deficient(spec, k);
    CHECK(span(inst.h).dim() == k);
    CHECK(compose(inst.g, inst.h) == inst.f);
  }

  Instance inst = gen_rank_deficient(spec, 2);
  DecompOutcome out = fdpmp4(inst.f, 4);
  REQUIRE(succeeded(out));
  CHECK(result_of(out).verified);
  CHECK(result_of(out).padding_used);
}

TEST_CASE("the published rank-two shape decomposes with padding") {
  // h = (x1^2+x2^2+x3^2, x2^2, x2^2): the factor space always has rank two.
  PolySystem h(K, 3);
  h.push_back(P(K, 3, {{{2, 0, 0}, 1}, {{0, 2, 0}, 1}, {{0, 0, 2}, 1}}));
  h.push_back(P(K, 3, {{{0, 2, 0}, 1}}));
  h.push_back(P(K, 3, {{{0, 2, 0}, 1}}));
  CHECK(span(h).dim() == 2);
  SeededRng rng(8);
  PolySystem g = random_system(K, 3, 3, 2, true, rng);
  PolySystem f = compose(g, h);
  DecompOutcome out = decompose_homogeneous(f, 8);
  REQUIRE(succeeded(out));
  CHECK(result_of(out).padding_used);
  CHECK(result_of(out).factor_space_dim == 2);
  CHECK(span(result_of(out).h) == span(h));
}

TEST_CASE("keypair generation and attack validation") {
  TwoRKeypair kp = gen_2r_keypair(K, 5, 20240809);
  CHECK(kp.pub.size() == 5);
  CHECK(kp.pub.degree() == 4);
  for (const auto& p : kp.pub.polys()) CHECK(p.degree() <= 4);
  CHECK(kp.inner.degree() == 2);
  CHECK(kp.outer.degree() == 2);
  CHECK(compose(kp.outer, kp.inner) == kp.pub);

  // Decryption consistency: evaluating the public map equals chaining the
  // five private maps.
  SeededRng rng(55);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<FieldElem> x;
    for (int i = 0; i < 5; ++i) x.push_back(K.sample_uniform(rng));
    auto chained = evaluate(
        kp.t, evaluate(kp.psi, evaluate(kp.s, evaluate(kp.phi, evaluate(kp.r, x)))));
    CHECK(evaluate(kp.pub, x) == chained);
  }

  // The attack recovers a factor pair whose inner span matches the private
  // chain.
  DecompOutcome out = fdpmp4(kp.pub, 1);
  REQUIRE(succeeded(out));
  CHECK(result_of(out).verified);
  CHECK(span(result_of(out).h) == span(kp.inner));

  CHECK_THROWS_AS(gen_2r_keypair(FieldCtx::rationals(), 3, 1), PreconditionError);
}

TEST_CASE("serialization round-trips random systems") {
  SeededRng rng(314);
  for (int trial = 0; trial < 100; ++trial) {
    const FieldCtx ctx =
        trial % 3 == 0 ? FieldCtx::rationals(20) : FieldCtx::gf(65537);
    const int n = 1 + static_cast<int>(rng.below(5));
    PolySystem sys = random_system(ctx, n, 1 + static_cast<int>(rng.below(4)),
                                   static_cast<int>(rng.below(5)), false, rng);
    CHECK(parse_system(serialize(sys)) == sys);
  }
}

TEST_CASE("parser rejects malformed input") {
  CHECK_THROWS_AS(parse_system("{bad"), ParseError);
  CHECK_THROWS_AS(parse_system("[]"), ParseError);
  CHECK_THROWS_AS(parse_system(R"({"field":"gf:6","nvars":1,"polys":[]})"),
                  PreconditionError);  // 6 is not prime
  CHECK_THROWS_AS(parse_system(R"({"field":"gf:7","nvars":0,"polys":[]})"),
                  ParseError);
  // Bare term arrays without the terms key.
  CHECK_THROWS_AS(
      parse_system(R"({"field":"gf:7","nvars":1,"polys":[[[[1],"3"]]]})"),
      ParseError);
  // Exponent vector of the wrong length.
  CHECK_THROWS_AS(
      parse_system(
          R"({"field":"gf:7","nvars":2,"polys":[{"terms":[[[1],"3"]]}]})"),
      ParseError);
  // Negative exponent.
  CHECK_THROWS_AS(
      parse_system(
          R"({"field":"gf:7","nvars":1,"polys":[{"terms":[[[-1],"3"]]}]})"),
      ParseError);
  // Out-of-field coefficient.
  CHECK_THROWS_AS(
      parse_system(
          R"({"field":"gf:7","nvars":1,"polys":[{"terms":[[[1],"9"]]}]})"),
      ParseError);
  // Stored zero coefficient.
  CHECK_THROWS_AS(
      parse_system(
          R"({"field":"gf:7","nvars":1,"polys":[{"terms":[[[1],"0"]]}]})"),
      ParseError);
  // Duplicate monomial.
  CHECK_THROWS_AS(
      parse_system(
          R"({"field":"gf:7","nvars":1,"polys":[{"terms":[[[1],"3"],[[1],"2"]]}]})"),
      ParseError);
}

TEST_CASE("modulus guidance") {
  CHECK(modulus_ample(FieldCtx::gf(101), 5));        // 101 > 50
  CHECK_FALSE(modulus_ample(FieldCtx::gf(41), 5));   // 41 <= 50
  CHECK(modulus_ample(FieldCtx::rationals(), 100));  // no modulus at all
}
