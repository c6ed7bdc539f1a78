#ifndef POLYDEC_INSTANCEGEN_HPP
#define POLYDEC_INSTANCEGEN_HPP

#include <cstdint>

#include "polydec/poly.hpp"
#include "polydec/serialize.hpp"

namespace polydec {

/// Parameters for seeded instance generation. "Random polynomial" means
/// i.i.d. uniform coefficients over every monomial of the ansatz, zero draws
/// included, which matches the dense parameter-space view behind the
/// genericity arguments.
struct GenSpec {
  FieldCtx ctx = FieldCtx::gf(65537);
  int n = 5;
  int u = -1;  // -1 means u = n
  bool homogeneous = false;
  int d_g = 2;
  int d_h = 2;
  std::uint64_t seed = 0;
  std::int64_t coeff_bound = 100;  // rationals only

  int effective_u() const { return u < 0 ? n : u; }
  /// Rational contexts are rebuilt with coeff_bound as the sampling range.
  FieldCtx effective_ctx() const;
  void validate() const;  // throws PreconditionError on bad combinations
};

struct Instance {
  PolySystem f;
  PolySystem g;
  PolySystem h;
};

/// Draws random g (u components) and h (n components) of the requested
/// degrees and returns (compose(g,h), g, h). Deterministic per seed.
Instance gen_decomposable(const GenSpec& spec);

/// Like gen_decomposable but span(h) has dimension exactly k < n: the first k
/// components are independent random quadratics, the rest random combinations
/// of them.
Instance gen_rank_deficient(const GenSpec& spec, int k);

/// Single random polynomial with the given shape; exposed for oracles and
/// tests that need raw (possibly non-decomposable) systems.
MultiPoly random_poly(const FieldCtx& ctx, int nvars, int degree,
                      bool homogeneous, SeededRng& rng);
PolySystem random_system(const FieldCtx& ctx, int nvars, int count, int degree,
                         bool homogeneous, SeededRng& rng);

/// Composition-shape key material in the style of two-round public-key maps:
/// pub = t o psi o s o phi o r with r,s,t invertible linear and phi,psi
/// quadratic (no constant terms). The private chain is retained so an attack
/// can be validated against span(inner).
struct TwoRKeypair {
  PolySystem r;
  PolySystem phi;
  PolySystem s;
  PolySystem psi;
  PolySystem t;
  PolySystem pub;    // t o psi o s o phi o r, degree four
  PolySystem inner;  // s o phi o r — the planted right factor
  PolySystem outer;  // t o psi — the planted left factor
};

TwoRKeypair gen_2r_keypair(const FieldCtx& ctx, int n, std::uint64_t seed);

/// Random invertible linear map as a system of n linear forms
/// (rejection-sampled until nonsingular).
PolySystem random_invertible_linear(const FieldCtx& ctx, int n, SeededRng& rng);

/// True when the modulus comfortably exceeds the 2n^2 degree bound that
/// drives the success probabilities; generators warn (via callers) below it.
bool modulus_ample(const FieldCtx& ctx, int n);

}  // namespace polydec

#endif
