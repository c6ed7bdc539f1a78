#include "polydec/polyspace.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace polydec {

PolySpace::PolySpace(FieldCtx ctx, int nvars, std::vector<Monomial> index,
                     Matrix basis)
    : ctx_(std::move(ctx)),
      nvars_(nvars),
      index_(std::move(index)),
      basis_(std::move(basis)) {
  if (dim() > 0) {
    int common = -1;
    bool homogeneous = true;
    for (int r = 0; r < basis_.nrows() && homogeneous; ++r) {
      int lo = -1, hi = -1;
      for (int c = 0; c < basis_.ncols(); ++c) {
        if (basis_.at(r, c).is_zero()) continue;
        const int d = index_[c].degree();
        if (lo < 0) lo = hi = d;
        lo = std::min(lo, d);
        hi = std::max(hi, d);
      }
      if (lo < 0 || lo != hi || (common >= 0 && common != lo))
        homogeneous = false;
      else
        common = lo;
    }
    if (homogeneous) degree_ = common;
  }
}

PolySpace PolySpace::zero_space(const FieldCtx& ctx, int nvars) {
  return PolySpace(ctx, nvars, {}, Matrix(ctx, 0, 0));
}

MultiPoly PolySpace::basis_poly(int i) const {
  if (i < 0 || i >= dim()) throw IndexOutOfRange("basis row index");
  PolyAccum acc(ctx_, nvars_);
  for (int c = 0; c < basis_.ncols(); ++c)
    acc.add(index_[c], basis_.at(i, c));
  return acc.take();
}

std::vector<MultiPoly> PolySpace::basis_polys() const {
  std::vector<MultiPoly> out;
  out.reserve(dim());
  for (int i = 0; i < dim(); ++i) out.push_back(basis_poly(i));
  return out;
}

bool PolySpace::operator==(const PolySpace& o) const {
  return ctx_ == o.ctx_ && nvars_ == o.nvars_ && index_ == o.index_ &&
         basis_ == o.basis_;
}

std::string PolySpace::to_json() const {
  std::string s = "{\"field\":\"" + ctx_.spec_string() +
                  "\",\"nvars\":" + std::to_string(nvars_) + ",\"monomials\":[";
  for (std::size_t i = 0; i < index_.size(); ++i) {
    if (i) s += ",";
    s += "[";
    for (int v = 0; v < nvars_; ++v) {
      if (v) s += ",";
      s += std::to_string(index_[i].exp(v));
    }
    s += "]";
  }
  s += "],\"basis\":[";
  for (int r = 0; r < basis_.nrows(); ++r) {
    if (r) s += ",";
    s += "[";
    for (int c = 0; c < basis_.ncols(); ++c) {
      if (c) s += ",";
      s += "\"" + basis_.at(r, c).to_string() + "\"";
    }
    s += "]";
  }
  s += "]}";
  return s;
}

namespace {

std::vector<Monomial> support_union(const std::vector<MultiPoly>& gens) {
  std::set<Monomial, GrlexDescending> mono;
  for (const auto& g : gens)
    for (const auto& [m, c] : g.terms()) mono.insert(m);
  return {mono.begin(), mono.end()};
}

Matrix coordinate_matrix(const FieldCtx& ctx,
                         const std::vector<MultiPoly>& gens,
                         const std::vector<Monomial>& index) {
  std::map<Monomial, int, GrlexDescending> col;
  for (std::size_t i = 0; i < index.size(); ++i)
    col.emplace(index[i], static_cast<int>(i));
  Matrix m(ctx, static_cast<int>(gens.size()), static_cast<int>(index.size()));
  for (std::size_t r = 0; r < gens.size(); ++r)
    for (const auto& [mono, c] : gens[r].terms())
      m.at(static_cast<int>(r), col.at(mono)) = c;
  return m;
}

}  // namespace

PolySpace span(const FieldCtx& ctx, int nvars,
               const std::vector<MultiPoly>& gens) {
  for (const auto& g : gens) {
    if (g.ctx() != ctx) throw CtxMismatch("span over mixed fields");
    if (g.nvars() != nvars) throw ArityMismatch("span over mixed arities");
  }
  std::vector<Monomial> index = support_union(gens);
  if (index.empty()) return PolySpace::zero_space(ctx, nvars);
  RrefResult red = rref(coordinate_matrix(ctx, gens, index));
  Matrix basis(ctx, red.rank(), static_cast<int>(index.size()));
  for (int r = 0; r < red.rank(); ++r)
    for (int c = 0; c < basis.ncols(); ++c) basis.at(r, c) = red.mat.at(r, c);
  // The support of the span equals the union of generator supports (every
  // generator lies in the row space), so no column can be identically zero
  // and the index is canonical for the space.
  return PolySpace(ctx, nvars, std::move(index), std::move(basis));
}

PolySpace span(const PolySystem& sys) {
  return span(sys.ctx(), sys.nvars(), sys.polys());
}

PolySpace build_vtilde(const PolySystem& f) {
  std::vector<MultiPoly> gens;
  gens.reserve(static_cast<std::size_t>(f.size()) * f.nvars());
  for (const auto& p : f.polys())
    for (int j = 0; j < f.nvars(); ++j)
      gens.push_back(p.partial_derivative(j));
  return span(f.ctx(), f.nvars(), gens);
}

PolySpace build_vtilde_d(const PolySystem& f, int d) {
  if (d < 0) throw PreconditionError("multiplier degree must be >= 0");
  const auto multipliers = monomials_of_degree(f.nvars(), d);
  std::vector<MultiPoly> gens;
  for (const auto& p : f.polys())
    for (int j = 0; j < f.nvars(); ++j) {
      MultiPoly dp = p.partial_derivative(j);
      if (dp.is_zero()) continue;
      for (const auto& m : multipliers) gens.push_back(dp.mul_by_monomial(m));
    }
  return span(f.ctx(), f.nvars(), gens);
}

namespace {

/// Shared elimination core of the colon quotients: basis of
/// {h : x_var^k * h in span(gens)}, computed by ordering the columns so
/// monomials *not* divisible by x_var^k come first. After RREF, a row lies
/// entirely in the divisible block exactly when its pivot does, and those
/// rows span the divisible members of the space.
std::vector<MultiPoly> divisible_filter(const FieldCtx& ctx, int nvars,
                                        const std::vector<MultiPoly>& gens,
                                        int var, int k) {
  std::set<Monomial, GrlexDescending> mono;
  for (const auto& g : gens)
    for (const auto& [m, c] : g.terms()) mono.insert(m);
  std::vector<Monomial> index;
  index.reserve(mono.size());
  for (const auto& m : mono)
    if (!m.divisible_by_var(var, k)) index.push_back(m);
  const int split = static_cast<int>(index.size());
  for (const auto& m : mono)
    if (m.divisible_by_var(var, k)) index.push_back(m);

  RrefResult red = rref(coordinate_matrix(ctx, gens, index));
  std::vector<MultiPoly> out;
  for (int r = 0; r < red.rank(); ++r) {
    if (red.pivots[r] < split) continue;
    PolyAccum acc(ctx, nvars);
    for (int c = red.pivots[r]; c < static_cast<int>(index.size()); ++c)
      acc.add(index[c], red.mat.at(r, c));
    out.push_back(acc.take().divide_by_var(var, k));
  }
  return out;
}

}  // namespace

PolySpace quotient_by_linear(const PolySpace& V, const MultiPoly& l) {
  if (l.is_zero()) throw DegenerateLinearForm("quotient by the zero form");
  if (l.degree() != 1 || !l.is_homogeneous())
    throw DegenerateLinearForm("quotient form must be homogeneous linear");
  if (l.ctx() != V.ctx()) throw CtxMismatch("form over a different field");
  if (l.nvars() != V.nvars()) throw ArityMismatch("form arity mismatch");
  if (V.dim() == 0) return V;
  if (!V.degree())
    throw PreconditionError("quotient requires a homogeneous space");

  const FieldCtx& ctx = V.ctx();
  const int n = V.nvars();

  // Leading variable of l (first variable with a nonzero coefficient);
  // normalize that coefficient to 1 — scaling l does not change the quotient.
  int j = 0;
  while (l.leading_monomial().exp(j) == 0) ++j;
  const MultiPoly unit_l =
      l.scaled(l.coeff(Monomial(n).times_var(j)).inv());
  const MultiPoly tail =
      unit_l - MultiPoly::variable(ctx, n, j);  // l = x_j + tail

  const bool is_single_var = tail.is_zero();

  std::vector<MultiPoly> transformed;
  if (is_single_var) {
    transformed = V.basis_polys();
  } else {
    // Unit-triangular change of variables x_j <- y_j - tail(y), identity on
    // the other variables; it maps l to the single variable y_j.
    PolySystem forward(ctx, n);
    for (int i = 0; i < n; ++i)
      forward.push_back(i == j ? MultiPoly::variable(ctx, n, j) - tail
                               : MultiPoly::variable(ctx, n, i));
    PolySystem basis_sys(ctx, n, V.basis_polys());
    transformed = compose(basis_sys, forward).polys();
  }

  std::vector<MultiPoly> quotient =
      divisible_filter(ctx, n, transformed, j, 1);

  if (!is_single_var && !quotient.empty()) {
    // Inverse substitution x_j <- l restores the original coordinates.
    PolySystem backward(ctx, n);
    for (int i = 0; i < n; ++i)
      backward.push_back(i == j ? unit_l : MultiPoly::variable(ctx, n, i));
    PolySystem q_sys(ctx, n, std::move(quotient));
    quotient = compose(q_sys, backward).polys();
  }
  return span(ctx, n, quotient);
}

PolySpace quotient_by_power(const PolySpace& V, int var, int k) {
  if (k < 1) throw PreconditionError("power must be >= 1");
  if (var < 0 || var >= V.nvars()) throw IndexOutOfRange("variable index");
  if (V.dim() == 0) return V;
  if (!V.degree())
    throw PreconditionError("quotient requires a homogeneous space");
  return span(V.ctx(), V.nvars(),
              divisible_filter(V.ctx(), V.nvars(), V.basis_polys(), var, k));
}

PolySpace quotient_by_all_vars(const PolySpace& V) {
  PolySpace acc = quotient_by_power(V, 0, 1);
  for (int i = 1; i < V.nvars() && acc.dim() > 0; ++i)
    acc = intersect(acc, quotient_by_power(V, i, 1));
  return acc;
}

PolySpace intersect(const PolySpace& a, const PolySpace& b) {
  if (a.ctx() != b.ctx()) throw CtxMismatch("spaces over different fields");
  if (a.nvars() != b.nvars()) throw ArityMismatch("spaces over different arities");
  if (a.dim() == 0) return a;
  if (b.dim() == 0) return b;
  std::set<Monomial, GrlexDescending> mono(a.monomial_index().begin(),
                                           a.monomial_index().end());
  mono.insert(b.monomial_index().begin(), b.monomial_index().end());
  std::vector<Monomial> index(mono.begin(), mono.end());
  Matrix ma = coordinate_matrix(a.ctx(), a.basis_polys(), index);
  Matrix mb = coordinate_matrix(b.ctx(), b.basis_polys(), index);
  Matrix inter = row_space_intersect(ma, mb);
  std::vector<MultiPoly> polys;
  for (int r = 0; r < inter.nrows(); ++r) {
    PolyAccum acc(a.ctx(), a.nvars());
    for (int c = 0; c < inter.ncols(); ++c) acc.add(index[c], inter.at(r, c));
    polys.push_back(acc.take());
  }
  return span(a.ctx(), a.nvars(), polys);
}

bool member(const PolySpace& V, const MultiPoly& p) {
  if (p.ctx() != V.ctx()) throw CtxMismatch("membership over a different field");
  if (p.nvars() != V.nvars()) throw ArityMismatch("membership arity mismatch");
  MultiPoly r = p;
  for (int i = 0; i < V.dim() && !r.is_zero(); ++i) {
    // The pivot of row i is the leading monomial of its polynomial, with
    // coefficient 1 by RREF normalization.
    MultiPoly b = V.basis_poly(i);
    FieldElem c = r.coeff(b.leading_monomial());
    if (!c.is_zero()) r = r - b.scaled(c);
  }
  return r.is_zero();
}

}  // namespace polydec
