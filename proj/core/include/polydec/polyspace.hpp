#ifndef POLYDEC_POLYSPACE_HPP
#define POLYDEC_POLYSPACE_HPP

#include <optional>
#include <string>
#include <vector>

#include "polydec/linalg.hpp"
#include "polydec/poly.hpp"

namespace polydec {

/// Finite-dimensional vector space of polynomials, stored as an RREF basis
/// matrix over an explicit monomial index (descending graded-lex). The form
/// is canonical: two PolySpace values represent the same space iff all their
/// fields compare equal, because the index is exactly the support of the
/// space and RREF is unique.
class PolySpace {
 public:
  static PolySpace zero_space(const FieldCtx& ctx, int nvars);

  const FieldCtx& ctx() const { return ctx_; }
  int nvars() const { return nvars_; }
  int dim() const { return basis_.nrows(); }
  const std::vector<Monomial>& monomial_index() const { return index_; }
  const Matrix& basis() const { return basis_; }
  /// Common total degree when every basis element is homogeneous of the same
  /// degree; empty otherwise (and for the zero space).
  std::optional<int> degree() const { return degree_; }

  /// Decodes basis row i back into a polynomial.
  MultiPoly basis_poly(int i) const;
  std::vector<MultiPoly> basis_polys() const;

  bool operator==(const PolySpace& o) const;
  bool operator!=(const PolySpace& o) const { return !(*this == o); }

  /// {"field","nvars","monomials","basis"} — used for golden-file tests.
  std::string to_json() const;

 private:
  friend PolySpace span(const FieldCtx&, int, const std::vector<MultiPoly>&);
  PolySpace(FieldCtx ctx, int nvars, std::vector<Monomial> index, Matrix basis);

  FieldCtx ctx_;
  int nvars_;
  std::vector<Monomial> index_;
  Matrix basis_;
  std::optional<int> degree_;
};

/// Canonical span of the given polynomials; zero generators are dropped.
PolySpace span(const FieldCtx& ctx, int nvars,
               const std::vector<MultiPoly>& gens);
PolySpace span(const PolySystem& sys);

/// Span of all first partials of the system's components.
PolySpace build_vtilde(const PolySystem& f);

/// Span of m * (partial f_i / partial x_j) over all monomials m of degree d;
/// d = 0 reduces to build_vtilde.
PolySpace build_vtilde_d(const PolySystem& f, int d);

/// Colon quotient (V : l) = {h : l*h in V} for a nonzero homogeneous linear
/// form l and a homogeneous V. Implemented by an invertible change of
/// variables sending l to a single variable, an elimination whose columns put
/// the monomials not divisible by that variable first, and the inverse
/// transform.
PolySpace quotient_by_linear(const PolySpace& V, const MultiPoly& l);

/// Colon quotient (V : x_var^k) by direct divisibility filtering.
PolySpace quotient_by_power(const PolySpace& V, int var, int k);

/// (V : L) where L is the span of all variables, i.e. the intersection of
/// (V : x_i) over every i.
PolySpace quotient_by_all_vars(const PolySpace& V);

PolySpace intersect(const PolySpace& a, const PolySpace& b);

/// True iff p reduces to zero against the RREF basis.
bool member(const PolySpace& V, const MultiPoly& p);

}  // namespace polydec

#endif
