#include "polydec/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace polydec {

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_)
    if (e < 0) throw PreconditionError("negative exponent in monomial");
  degree_ = std::accumulate(exps_.begin(), exps_.end(), 0);
}

Monomial Monomial::times(const Monomial& o) const {
  if (o.nvars() != nvars()) throw ArityMismatch("monomial arity mismatch");
  Monomial r = *this;
  for (int i = 0; i < nvars(); ++i) r.exps_[i] += o.exps_[i];
  r.degree_ += o.degree_;
  return r;
}

Monomial Monomial::times_var(int var, int k) const {
  if (var < 0 || var >= nvars()) throw IndexOutOfRange("variable index");
  Monomial r = *this;
  r.exps_[var] += k;
  r.degree_ += k;
  return r;
}

Monomial Monomial::divide_var(int var, int k) const {
  if (var < 0 || var >= nvars()) throw IndexOutOfRange("variable index");
  if (exps_[var] < k) throw PreconditionError("monomial not divisible");
  Monomial r = *this;
  r.exps_[var] -= k;
  r.degree_ -= k;
  return r;
}

Monomial Monomial::drop_var(int var) const {
  if (var < 0 || var >= nvars()) throw IndexOutOfRange("variable index");
  Monomial r(nvars() - 1);
  int j = 0;
  for (int i = 0; i < nvars(); ++i)
    if (i != var) r.exps_[j++] = exps_[i];
  r.degree_ = degree_ - exps_[var];
  return r;
}

Monomial Monomial::insert_var(int var, int e) const {
  if (var < 0 || var > nvars()) throw IndexOutOfRange("variable index");
  if (e < 0) throw PreconditionError("negative exponent");
  Monomial r(nvars() + 1);
  for (int i = 0; i < var; ++i) r.exps_[i] = exps_[i];
  r.exps_[var] = e;
  for (int i = var; i < nvars(); ++i) r.exps_[i + 1] = exps_[i];
  r.degree_ = degree_ + e;
  return r;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
  if (auto c = degree_ <=> o.degree_; c != 0) return c;
  // Same total degree: plain lex, variable 0 most significant.
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (auto c = exps_[i] <=> o.exps_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::string Monomial::to_string(int first_index) const {
  std::string s;
  for (int i = 0; i < nvars(); ++i) {
    if (exps_[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + first_index);
    if (exps_[i] > 1) s += "^" + std::to_string(exps_[i]);
  }
  return s.empty() ? "1" : s;
}

namespace {

void enumerate_degree(int nvars, int d, int var, std::vector<int>& exps,
                      std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    exps[var] = d;
    out.emplace_back(exps);
    exps[var] = 0;
    return;
  }
  for (int e = d; e >= 0; --e) {
    exps[var] = e;
    enumerate_degree(nvars, d - e, var + 1, exps, out);
  }
  exps[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  if (nvars < 1) throw PreconditionError("nvars must be >= 1");
  if (d < 0) throw PreconditionError("degree must be >= 0");
  std::vector<Monomial> out;
  std::vector<int> exps(nvars, 0);
  enumerate_degree(nvars, d, 0, exps, out);
  return out;
}

std::vector<Monomial> monomials_up_to_degree(int nvars, int d) {
  std::vector<Monomial> out;
  for (int k = d; k >= 0; --k) {
    auto level = monomials_of_degree(nvars, k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace polydec
