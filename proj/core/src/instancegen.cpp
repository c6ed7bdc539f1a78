#include "polydec/instancegen.hpp"

#include "polydec/linalg.hpp"
#include "polydec/polyspace.hpp"

namespace polydec {

FieldCtx GenSpec::effective_ctx() const {
  if (ctx.is_prime_field()) return ctx;
  return FieldCtx::rationals(coeff_bound);
}

void GenSpec::validate() const {
  if (n < 1) throw PreconditionError("n must be >= 1");
  if (effective_u() < 1) throw PreconditionError("u must be >= 1");
  if (d_g < 1 || d_h < 1) throw PreconditionError("degrees must be >= 1");
  if (d_g * d_h > 4)
    throw PreconditionError(
        "d_g*d_h > 4: instance would not be pipeline-compatible");
  if (!ctx.is_prime_field() && coeff_bound < 1)
    throw PreconditionError("coeff_bound must be >= 1");
}

MultiPoly random_poly(const FieldCtx& ctx, int nvars, int degree,
                      bool homogeneous, SeededRng& rng) {
  const std::vector<Monomial> ansatz =
      homogeneous ? monomials_of_degree(nvars, degree)
                  : monomials_up_to_degree(nvars, degree);
  PolyAccum acc(ctx, nvars);
  for (const auto& m : ansatz) acc.add(m, ctx.sample_uniform(rng));
  return acc.take();
}

PolySystem random_system(const FieldCtx& ctx, int nvars, int count, int degree,
                         bool homogeneous, SeededRng& rng) {
  PolySystem sys(ctx, nvars);
  for (int i = 0; i < count; ++i)
    sys.push_back(random_poly(ctx, nvars, degree, homogeneous, rng));
  return sys;
}

Instance gen_decomposable(const GenSpec& spec) {
  spec.validate();
  const FieldCtx ctx = spec.effective_ctx();
  SeededRng rng(spec.seed);
  PolySystem h =
      random_system(ctx, spec.n, spec.n, spec.d_h, spec.homogeneous, rng);
  PolySystem g = random_system(ctx, spec.n, spec.effective_u(), spec.d_g,
                               spec.homogeneous, rng);
  PolySystem f = compose(g, h);
  return {std::move(f), std::move(g), std::move(h)};
}

Instance gen_rank_deficient(const GenSpec& spec, int k) {
  spec.validate();
  if (k < 1 || k >= spec.n)
    throw InvalidRank("rank k must satisfy 1 <= k < n");
  const FieldCtx ctx = spec.effective_ctx();
  SeededRng rng(spec.seed);

  PolySystem core(ctx, spec.n);
  // Rejection: re-draw until the k core components are independent (a
  // dependent draw is a ~1/q event).
  for (;;) {
    PolySystem candidate(ctx, spec.n);
    for (int i = 0; i < k; ++i)
      candidate.push_back(
          random_poly(ctx, spec.n, spec.d_h, spec.homogeneous, rng));
    if (span(candidate).dim() == k) {
      core = std::move(candidate);
      break;
    }
  }
  PolySystem h = core;
  for (int i = k; i < spec.n; ++i) {
    PolyAccum acc(ctx, spec.n);
    for (int j = 0; j < k; ++j)
      acc.add_scaled(core[j], ctx.sample_uniform(rng));
    h.push_back(acc.take());
  }
  PolySystem g = random_system(ctx, spec.n, spec.effective_u(), spec.d_g,
                               spec.homogeneous, rng);
  PolySystem f = compose(g, h);
  return {std::move(f), std::move(g), std::move(h)};
}

PolySystem random_invertible_linear(const FieldCtx& ctx, int n,
                                    SeededRng& rng) {
  for (;;) {
    Matrix m(ctx, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = ctx.sample_uniform(rng);
    if (rref(m).rank() != n) continue;
    PolySystem sys(ctx, n);
    for (int i = 0; i < n; ++i) {
      PolyAccum acc(ctx, n);
      for (int j = 0; j < n; ++j)
        acc.add(Monomial(n).times_var(j), m.at(i, j));
      sys.push_back(acc.take());
    }
    return sys;
  }
}

namespace {

// Quadratic map without constant terms: monomials of degree 1 and 2. Keeping
// constants out makes span(inner) directly comparable with the recovered
// factor space.
PolySystem random_quadratic_map(const FieldCtx& ctx, int n, SeededRng& rng) {
  std::vector<Monomial> ansatz = monomials_of_degree(n, 2);
  const auto linear = monomials_of_degree(n, 1);
  ansatz.insert(ansatz.end(), linear.begin(), linear.end());
  PolySystem sys(ctx, n);
  for (int i = 0; i < n; ++i) {
    PolyAccum acc(ctx, n);
    for (const auto& m : ansatz) acc.add(m, ctx.sample_uniform(rng));
    sys.push_back(acc.take());
  }
  return sys;
}

}  // namespace

TwoRKeypair gen_2r_keypair(const FieldCtx& ctx, int n, std::uint64_t seed) {
  if (!ctx.is_prime_field())
    throw PreconditionError("keypair generation requires a prime field");
  if (n < 1) throw PreconditionError("n must be >= 1");
  SeededRng rng(seed);
  PolySystem r = random_invertible_linear(ctx, n, rng);
  PolySystem phi = random_quadratic_map(ctx, n, rng);
  PolySystem s = random_invertible_linear(ctx, n, rng);
  PolySystem psi = random_quadratic_map(ctx, n, rng);
  PolySystem t = random_invertible_linear(ctx, n, rng);

  PolySystem inner = compose(s, compose(phi, r));
  PolySystem outer = compose(t, psi);
  PolySystem pub = compose(outer, inner);
  return {std::move(r),   std::move(phi),   std::move(s),
          std::move(psi), std::move(t),     std::move(pub),
          std::move(inner), std::move(outer)};
}

bool modulus_ample(const FieldCtx& ctx, int n) {
  if (!ctx.is_prime_field()) return true;
  return ctx.modulus() > 2 * static_cast<std::uint64_t>(n) * n;
}

}  // namespace polydec
