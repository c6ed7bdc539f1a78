#ifndef POLYDEC_ORACLES_HPP
#define POLYDEC_ORACLES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polydec/decomposer.hpp"
#include "polydec/instancegen.hpp"
#include "polydec/polyspace.hpp"

namespace polydec {

/// Ground-truth span {x_i h_j : all i, j}, built directly from a known inner
/// system h. This is what the derivative span is tested against.
PolySpace brute_vf(const PolySystem& h);

/// Extended ground truth {m' h_j : m' of degree d+1}; d = 0 collapses to
/// brute_vf.
PolySpace brute_vfd(const PolySystem& h, int d);

/// One trial of the quotient-recovery event for quadratic forms: draw a
/// random n-dimensional space W of quadratic forms, set V = sum_i x_i W, and
/// test whether (V : L) = W.
bool quadratic_recovery_trial(int n, const FieldCtx& ctx, std::uint64_t seed);

/// One trial of the higher-degree quotient event: draw h_1..h_n homogeneous
/// of degree d_h, build U(h,d') = span{m h_i : deg m = d'}, and test whether
/// (U : x_1^{d'}) = span(h). The hypotheses d' < d_h and n > 2 d_h are
/// enforced unless allow_hypothesis_violation is set (useful for probing the
/// known breakdown outside them).
bool power_quotient_trial(int n, int d_h, int d_prime, const FieldCtx& ctx,
                     std::uint64_t seed,
                     bool allow_hypothesis_violation = false);

/// One trial of derivative-span equality: random homogeneous quadratic g, h;
/// does build_vtilde(compose(g,h)) equal brute_vf(h)?
bool vtilde_equality_trial(int n, const FieldCtx& ctx, std::uint64_t seed);

/// Aggregated Monte Carlo outcome. rate is exact (successes/trials).
struct TrialReport {
  std::string campaign;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t seed_start = 0;
  int n = 0;
  std::string field;
  int d = 0;        // multiplier degree, when it applies
  int d_h = 0;      // inner degree, when it applies
  int d_prime = 0;  // quotient power, when it applies
  /// Theoretical lower bound on the success rate, when one is stated.
  std::optional<std::string> bound;

  double rate() const {
    return trials == 0 ? 0.0
                       : static_cast<double>(successes) / static_cast<double>(trials);
  }
  std::string rate_string() const {
    return std::to_string(successes) + "/" + std::to_string(trials);
  }
  std::string to_json() const;
  /// Aligned one-line text form for tables.
  std::string to_table_row() const;
  static std::string table_header();

  /// Associative merge for fanned-out seed ranges.
  TrialReport merged_with(const TrialReport& o) const;
};

enum class CampaignKind {
  vtilde_equality,
  quadratic_recovery,
  power_quotient,
  decompose_homogeneous,
  fdpmp4_roundtrip,
};

CampaignKind campaign_from_name(std::string_view name);
std::string campaign_name(CampaignKind kind);

struct CampaignParams {
  CampaignKind kind = CampaignKind::quadratic_recovery;
  FieldCtx ctx = FieldCtx::gf(65537);
  int n = 5;
  std::uint64_t trials = 100;
  std::uint64_t seed_start = 1;
  int d_h = 3;      // power-quotient campaign only
  int d_prime = 1;  // power-quotient campaign only
};

/// Runs trials over seeds [seed_start, seed_start + trials).
TrialReport run_campaign(const CampaignParams& params);

/// Exhaustive ground truth at toy scale: enumerates candidate right factor
/// spaces (all subspaces of the <=2-degree polynomials with a degree-2
/// element, dimensions 1..n), solves for the left factor over each, and
/// returns every exact quadratic decomposition, one representative per
/// factor space. Throws BudgetExceeded when more candidate spaces than
/// `budget` would be examined.
std::vector<std::pair<PolySystem, PolySystem>> exhaustive_decompose(
    const PolySystem& f, std::uint64_t budget = 1000000);

}  // namespace polydec

#endif
