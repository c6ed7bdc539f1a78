#ifndef POLYDEC_DECOMPOSER_HPP
#define POLYDEC_DECOMPOSER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include "polydec/polyspace.hpp"

namespace polydec {

/// A recovered decomposition f = g o h together with how it was obtained.
/// verified == true is a hard guarantee: compose(g, h) was re-checked to
/// equal the input exactly.
struct DecompResult {
  PolySystem g;
  PolySystem h;
  int factor_space_dim = 0;
  bool padding_used = false;
  /// Whether the required power of the homogenizing variable was observed in
  /// the recovered homogeneous factor space. Trivially true for pipelines
  /// that never homogenize.
  bool conjecture1_held = true;
  bool verified = false;
  std::map<std::string, double> stage_timings_ms;

  std::string to_json() const;
};

/// Honest failure: which stage gave up and why. Never a wrong answer marked
/// verified.
struct DecompFailure {
  std::string stage;
  std::string diagnostics;

  std::string to_json() const;
};

using DecompOutcome = std::variant<DecompResult, DecompFailure>;

inline bool succeeded(const DecompOutcome& o) {
  return std::holds_alternative<DecompResult>(o);
}
inline const DecompResult& result_of(const DecompOutcome& o) {
  return std::get<DecompResult>(o);
}
inline const DecompFailure& failure_of(const DecompOutcome& o) {
  return std::get<DecompFailure>(o);
}
std::string outcome_to_json(const DecompOutcome& o);

/// Right decomposition factor from a factor space basis: the basis itself
/// when dim = n, otherwise (b_1,...,b_k,b_1,...,b_1) padded to n components.
/// Throws EmptySpace / DimExceedsN outside 1 <= dim <= n.
PolySystem recover_right_factor(const PolySpace& R, int n);

/// Finds g with compose(g, h) = f by solving the linear system in the
/// coefficients of g (full ansatz of degree <= d_g, constants included).
/// nullopt means h is not a right factor of f at this outer degree.
std::optional<PolySystem> solve_left_factor(const PolySystem& f,
                                            const PolySystem& h, int d_g);

struct VerifyReport {
  bool equal = false;
  bool degree_proper = false;
};

/// equal <=> compose(g,h) = f exactly; degree_proper <=> d_f = d_g * d_h.
VerifyReport verify(const PolySystem& f, const PolySystem& g,
                    const PolySystem& h);

/// Pipeline for quartic homogeneous f with u = n: derivative span, colon
/// quotient by a random linear form (falling back to the intersection over
/// all variables), factor recovery with padding, left-factor solve, exact
/// verification.
DecompOutcome decompose_homogeneous(const PolySystem& f, std::uint64_t seed);

/// Full algorithm for f of degree <= 4 (at least one component of degree 4),
/// u = n: homogenize with the extra x0^4 component, quotient the derivative
/// span by a random linear form in all n+1 variables, set x0 = 1, eliminate
/// to a basis (dropping constants that arise as images of x0 powers), pad if
/// rank-deficient, solve for g with the affine quadratic ansatz, verify.
/// May fail even when a decomposition exists.
DecompOutcome fdpmp4(const PolySystem& f, std::uint64_t seed);

/// Variant for u < n homogeneous quartic systems: derivative span enlarged by
/// degree-d monomial multipliers, colon quotient by x_i^{d+1}. Collapses to
/// the homogeneous pipeline behavior at u = n, d = 0.
DecompOutcome decompose_underdetermined(const PolySystem& f, int d,
                                        std::uint64_t seed);

}  // namespace polydec

#endif
