#include "polydec/oracles.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace polydec {

PolySpace brute_vf(const PolySystem& h) {
  std::vector<MultiPoly> gens;
  gens.reserve(static_cast<std::size_t>(h.size()) * h.nvars());
  for (int i = 0; i < h.nvars(); ++i) {
    const Monomial xi = Monomial(h.nvars()).times_var(i);
    for (const auto& p : h.polys()) gens.push_back(p.mul_by_monomial(xi));
  }
  return span(h.ctx(), h.nvars(), gens);
}

PolySpace brute_vfd(const PolySystem& h, int d) {
  if (d < 0) throw PreconditionError("multiplier degree must be >= 0");
  std::vector<MultiPoly> gens;
  for (const auto& m : monomials_of_degree(h.nvars(), d + 1))
    for (const auto& p : h.polys()) gens.push_back(p.mul_by_monomial(m));
  return span(h.ctx(), h.nvars(), gens);
}

bool quadratic_recovery_trial(int n, const FieldCtx& ctx, std::uint64_t seed) {
  if (n < 2) throw PreconditionError("trial needs n >= 2");
  SeededRng rng(seed);
  PolySystem w = random_system(ctx, n, n, 2, /*homogeneous=*/true, rng);
  PolySpace W = span(w);
  PolySpace V = brute_vf(w);  // sum_i x_i W
  return quotient_by_all_vars(V) == W;
}

bool power_quotient_trial(int n, int d_h, int d_prime, const FieldCtx& ctx,
                     std::uint64_t seed, bool allow_hypothesis_violation) {
  if (n < 1 || d_h < 1 || d_prime < 0)
    throw PreconditionError("bad trial parameters");
  if (!allow_hypothesis_violation && (d_prime >= d_h || n <= 2 * d_h))
    throw HypothesisViolated(
        "guarantee hypotheses need d' < d_h and n > 2*d_h (got d'=" +
        std::to_string(d_prime) + ", d_h=" + std::to_string(d_h) +
        ", n=" + std::to_string(n) + ")");
  SeededRng rng(seed);
  PolySystem h = random_system(ctx, n, n, d_h, /*homogeneous=*/true, rng);
  std::vector<MultiPoly> gens;
  for (const auto& m : monomials_of_degree(n, d_prime))
    for (const auto& p : h.polys()) gens.push_back(p.mul_by_monomial(m));
  PolySpace U = span(ctx, n, gens);
  return quotient_by_power(U, 0, d_prime) == span(h);
}

bool vtilde_equality_trial(int n, const FieldCtx& ctx, std::uint64_t seed) {
  SeededRng rng(seed);
  PolySystem h = random_system(ctx, n, n, 2, /*homogeneous=*/true, rng);
  PolySystem g = random_system(ctx, n, n, 2, /*homogeneous=*/true, rng);
  return build_vtilde(compose(g, h)) == brute_vf(h);
}

namespace {

std::uint64_t binomial_u64(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// Lower bounds on the trial success probability over GF(q): the failure locus
// sits inside the zero set of polynomials of the listed degree, so success
// has probability at least (q - degree)/q. Over the rationals the failure
// locus is a proper subvariety and the bound is 1.
std::optional<std::string> campaign_bound(CampaignKind kind, int n, int d_h,
                                          int d_prime, const FieldCtx& ctx) {
  std::int64_t degree = 0;
  switch (kind) {
    case CampaignKind::vtilde_equality:
      degree = 2ll * n * n;
      break;
    case CampaignKind::quadratic_recovery:
      degree = static_cast<std::int64_t>(n - 1) * binomial_u64(n + 1, 3);
      break;
    case CampaignKind::power_quotient:
      degree = static_cast<std::int64_t>(n - 1) *
               binomial_u64(n + d_h + d_prime - 2, d_h + d_prime);
      break;
    default:
      return std::nullopt;  // no per-pipeline composite bound is claimed
  }
  if (!ctx.is_prime_field()) return "1";
  const std::int64_t q = static_cast<std::int64_t>(ctx.modulus());
  if (degree >= q) return "0";
  return std::to_string(q - degree) + "/" + std::to_string(q);
}

}  // namespace

CampaignKind campaign_from_name(std::string_view name) {
  if (name == "vtilde") return CampaignKind::vtilde_equality;
  if (name == "quadratic-recovery") return CampaignKind::quadratic_recovery;
  if (name == "power-quotient") return CampaignKind::power_quotient;
  if (name == "homogeneous") return CampaignKind::decompose_homogeneous;
  if (name == "affine") return CampaignKind::fdpmp4_roundtrip;
  throw PreconditionError("unknown campaign: " + std::string(name));
}

std::string campaign_name(CampaignKind kind) {
  switch (kind) {
    case CampaignKind::vtilde_equality:
      return "vtilde";
    case CampaignKind::quadratic_recovery:
      return "quadratic-recovery";
    case CampaignKind::power_quotient:
      return "power-quotient";
    case CampaignKind::decompose_homogeneous:
      return "homogeneous";
    case CampaignKind::fdpmp4_roundtrip:
      return "affine";
  }
  return "?";
}

TrialReport run_campaign(const CampaignParams& params) {
  if (params.trials < 1) throw PreconditionError("trials must be >= 1");
  TrialReport rep;
  rep.campaign = campaign_name(params.kind);
  rep.trials = params.trials;
  rep.seed_start = params.seed_start;
  rep.n = params.n;
  rep.field = params.ctx.spec_string();
  rep.d_h = params.d_h;
  rep.d_prime = params.d_prime;
  rep.bound = campaign_bound(params.kind, params.n, params.d_h, params.d_prime,
                             params.ctx);

  for (std::uint64_t i = 0; i < params.trials; ++i) {
    const std::uint64_t seed = params.seed_start + i;
    bool ok = false;
    switch (params.kind) {
      case CampaignKind::vtilde_equality:
        ok = vtilde_equality_trial(params.n, params.ctx, seed);
        break;
      case CampaignKind::quadratic_recovery:
        ok = quadratic_recovery_trial(params.n, params.ctx, seed);
        break;
      case CampaignKind::power_quotient:
        ok = power_quotient_trial(params.n, params.d_h, params.d_prime, params.ctx,
                             seed);
        break;
      case CampaignKind::decompose_homogeneous: {
        GenSpec spec;
        spec.ctx = params.ctx;
        spec.n = params.n;
        spec.homogeneous = true;
        spec.seed = seed;
        Instance inst = gen_decomposable(spec);
        DecompOutcome out = decompose_homogeneous(inst.f, seed);
        ok = succeeded(out) && result_of(out).verified;
        break;
      }
      case CampaignKind::fdpmp4_roundtrip: {
        GenSpec spec;
        spec.ctx = params.ctx;
        spec.n = params.n;
        spec.homogeneous = false;
        spec.seed = seed;
        Instance inst = gen_decomposable(spec);
        if (inst.f.degree() != 4) break;  // degenerate draw, counted as miss
        DecompOutcome out = fdpmp4(inst.f, seed);
        ok = succeeded(out) && result_of(out).verified;
        break;
      }
    }
    if (ok) ++rep.successes;
  }
  return rep;
}

std::string TrialReport::to_json() const {
  nlohmann::json j{{"campaign", campaign},
                   {"trials", trials},
                   {"successes", successes},
                   {"rate", rate_string()},
                   {"seed_start", seed_start},
                   {"seed_end", trials == 0 ? seed_start : seed_start + trials - 1},
                   {"params",
                    {{"n", n},
                     {"field", field},
                     {"d", d},
                     {"d_h", d_h},
                     {"d_prime", d_prime}}}};
  if (bound) j["bound"] = *bound;
  return j.dump();
}

std::string TrialReport::table_header() {
  std::ostringstream os;
  os << std::left << std::setw(20) << "campaign" << std::setw(12) << "field"
     << std::setw(5) << "n" << std::setw(8) << "trials" << std::setw(10)
     << "success" << std::setw(12) << "rate" << "bound";
  return os.str();
}

std::string TrialReport::to_table_row() const {
  std::ostringstream os;
  os << std::left << std::setw(20) << campaign << std::setw(12) << field
     << std::setw(5) << n << std::setw(8) << trials << std::setw(10)
     << successes << std::setw(12) << rate_string() << bound.value_or("-");
  return os.str();
}

TrialReport TrialReport::merged_with(const TrialReport& o) const {
  if (campaign != o.campaign || n != o.n || field != o.field)
    throw PreconditionError("merging reports from different campaigns");
  TrialReport r = *this;
  r.trials += o.trials;
  r.successes += o.successes;
  r.seed_start = std::min(seed_start, o.seed_start);
  return r;
}

namespace {

// Iterates every RREF shape of a k-dimensional subspace: choose increasing
// pivot columns, then run an odometer over the free entries.
class SubspaceEnumerator {
 public:
  SubspaceEnumerator(const FieldCtx& ctx, int ambient_dim, int k)
      : ctx_(ctx), dim_(ambient_dim), k_(k), pivots_(k) {
    for (int i = 0; i < k; ++i) pivots_[i] = i;
    load_free_positions();
  }

  // Returns the next basis matrix (rows = coordinate vectors), or nullopt.
  std::optional<std::vector<std::vector<FieldElem>>> next() {
    if (done_) return std::nullopt;
    auto out = materialize();
    advance();
    return out;
  }

 private:
  std::vector<std::vector<FieldElem>> materialize() {
    std::vector<std::vector<FieldElem>> rows(
        k_, std::vector<FieldElem>(dim_, ctx_.zero()));
    for (int r = 0; r < k_; ++r) rows[r][pivots_[r]] = ctx_.one();
    for (std::size_t i = 0; i < free_pos_.size(); ++i) {
      auto [r, c] = free_pos_[i];
      rows[r][c] = ctx_.from_int(static_cast<std::int64_t>(counters_[i]));
    }
    return rows;
  }

  void load_free_positions() {
    free_pos_.clear();
    std::vector<bool> is_pivot(dim_, false);
    for (int c : pivots_) is_pivot[c] = true;
    for (int r = 0; r < k_; ++r)
      for (int c = pivots_[r] + 1; c < dim_; ++c)
        if (!is_pivot[c]) free_pos_.emplace_back(r, c);
    counters_.assign(free_pos_.size(), 0);
  }

  void advance() {
    const std::uint64_t q = ctx_.modulus();
    for (std::size_t i = 0; i < counters_.size(); ++i) {
      if (++counters_[i] < q) return;
      counters_[i] = 0;
    }
    // Odometer rolled over: next pivot combination.
    int i = k_ - 1;
    while (i >= 0 && pivots_[i] == dim_ - k_ + i) --i;
    if (i < 0) {
      done_ = true;
      return;
    }
    ++pivots_[i];
    for (int j = i + 1; j < k_; ++j) pivots_[j] = pivots_[j - 1] + 1;
    load_free_positions();
  }

  const FieldCtx& ctx_;
  int dim_, k_;
  std::vector<int> pivots_;
  std::vector<std::pair<int, int>> free_pos_;
  std::vector<std::uint64_t> counters_;
  bool done_ = false;
};

}  // namespace

std::vector<std::pair<PolySystem, PolySystem>> exhaustive_decompose(
    const PolySystem& f, std::uint64_t budget) {
  if (!f.ctx().is_prime_field())
    throw PreconditionError("exhaustive search requires a finite field");
  const FieldCtx& ctx = f.ctx();
  const int n = f.nvars();
  const std::vector<Monomial> ambient = monomials_up_to_degree(n, 2);
  const int D = static_cast<int>(ambient.size());

  std::vector<std::pair<PolySystem, PolySystem>> found;
  std::uint64_t examined = 0;
  for (int k = 1; k <= n; ++k) {
    SubspaceEnumerator e(ctx, D, k);
    while (auto rows = e.next()) {
      if (++examined > budget)
        throw BudgetExceeded("more than " + std::to_string(budget) +
                             " candidate spaces");
      // Decode the RREF rows over the ambient monomial list; padding repeats
      // the first basis element, mirroring the padding rule of factor recovery.
      PolySystem h(ctx, n);
      for (int r = 0; r < k; ++r) {
        PolyAccum acc(ctx, n);
        for (int c = 0; c < D; ++c) acc.add(ambient[c], (*rows)[r][c]);
        h.push_back(acc.take());
      }
      for (int r = k; r < n; ++r) h.push_back(h[0]);
      auto g = solve_left_factor(f, h, 2);
      if (!g) continue;
      if (compose(*g, h) != f) continue;  // paranoia; the solve is exact
      found.emplace_back(std::move(*g), std::move(h));
    }
  }
  return found;
}

}  // namespace polydec
