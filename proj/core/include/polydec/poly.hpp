#ifndef POLYDEC_POLY_HPP
#define POLYDEC_POLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polydec/field.hpp"
#include "polydec/monomial.hpp"

namespace polydec {

/// Sparse exact multivariate polynomial: a map monomial -> nonzero
/// coefficient, iterated in descending graded-lex order so the leading term
/// comes first and every printed/serialized form is bit-stable.
///
/// Values are immutable after construction; all operations return fresh
/// polynomials and are safe to run concurrently on shared inputs.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, FieldElem, GrlexDescending>;

  MultiPoly(FieldCtx ctx, int nvars);  // the zero polynomial

  static MultiPoly constant(const FieldCtx& ctx, int nvars, const FieldElem& c);
  static MultiPoly variable(const FieldCtx& ctx, int nvars, int var);
  static MultiPoly from_monomial(const FieldCtx& ctx, Monomial m,
                                 const FieldElem& c);
  /// Convenience builder: integer coefficients, one exponent vector per term.
  static MultiPoly from_terms(
      const FieldCtx& ctx, int nvars,
      const std::vector<std::pair<std::vector<int>, std::int64_t>>& terms);

  const FieldCtx& ctx() const { return ctx_; }
  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  int term_count() const { return static_cast<int>(terms_.size()); }

  bool is_zero() const { return terms_.empty(); }
  /// Total degree; the zero polynomial reports -1 so max() over a system
  /// stays well-defined.
  int degree() const;
  bool is_homogeneous() const;
  bool is_constant() const { return terms_.empty() || degree() == 0; }

  /// Coefficient of m (zero element if absent).
  FieldElem coeff(const Monomial& m) const;
  const Monomial& leading_monomial() const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly scaled(const FieldElem& c) const;
  MultiPoly mul_by_monomial(const Monomial& m) const;
  MultiPoly pow(int k) const;
  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  /// Formal partial derivative with respect to variable `var` (0-based).
  MultiPoly partial_derivative(int var) const;

  FieldElem evaluate(const std::vector<FieldElem>& point) const;

  /// Sets variable `var` to 1 and removes it; arity shrinks by one.
  MultiPoly substitute_one(int var) const;

  /// Divides every term by x_var^k; all terms must be divisible.
  MultiPoly divide_by_var(int var, int k) const;

  std::string to_string(int first_index = 1) const;

 private:
  friend class PolyAccum;
  MultiPoly(FieldCtx ctx, int nvars, TermMap terms)
      : ctx_(std::move(ctx)), nvars_(nvars), terms_(std::move(terms)) {}

  void check_compatible(const MultiPoly& o) const;

  FieldCtx ctx_;
  int nvars_;
  TermMap terms_;
};

/// Mutable accumulator used to build polynomials term by term without paying
/// for repeated normalization; zero coefficients are dropped on the fly.
class PolyAccum {
 public:
  PolyAccum(FieldCtx ctx, int nvars) : ctx_(std::move(ctx)), nvars_(nvars) {}

  void add(const Monomial& m, const FieldElem& c);
  void add_poly(const MultiPoly& p);
  void add_scaled(const MultiPoly& p, const FieldElem& c);
  MultiPoly take();

 private:
  FieldCtx ctx_;
  int nvars_;
  MultiPoly::TermMap terms_;
};

/// Ordered tuple of polynomials sharing one variable set and field.
class PolySystem {
 public:
  PolySystem(FieldCtx ctx, int nvars) : ctx_(std::move(ctx)), nvars_(nvars) {}
  PolySystem(FieldCtx ctx, int nvars, std::vector<MultiPoly> polys);

  const FieldCtx& ctx() const { return ctx_; }
  int nvars() const { return nvars_; }
  int size() const { return static_cast<int>(polys_.size()); }
  const MultiPoly& operator[](int i) const { return polys_.at(i); }
  const std::vector<MultiPoly>& polys() const { return polys_; }
  void push_back(MultiPoly p);

  /// Componentwise max degree (-1 for an all-zero / empty system).
  int degree() const;
  bool is_homogeneous_of_degree(int d) const;

  bool operator==(const PolySystem& o) const;
  bool operator!=(const PolySystem& o) const { return !(*this == o); }

  std::string to_string(int first_index = 1) const;

 private:
  FieldCtx ctx_;
  int nvars_;
  std::vector<MultiPoly> polys_;
};

/// Functional composition g(h_1,...,h_m): g ranges over m variables, h has m
/// components over n variables; the result has g.size() components over n
/// variables. Power products of the h_k are memoized across components, so a
/// quadratic g costs little more than the pairwise products h_k*h_l.
PolySystem compose(const PolySystem& g, const PolySystem& h);

/// Degree-d homogenization: prepends the component x0^d, then maps each f_i to
/// x0^d * f_i(x1/x0, ..., xn/x0). Variable 0 of the output is the new
/// homogenizing variable; every component is homogeneous of degree exactly d.
PolySystem homogenize(const PolySystem& f, int d);

/// Sets the homogenizing variable (variable 0) to 1 in every component and
/// removes it. All components are kept, including the one that collapses to a
/// constant.
PolySystem dehomogenize(const PolySystem& F);

/// Evaluates each component at the point.
std::vector<FieldElem> evaluate(const PolySystem& f,
                                const std::vector<FieldElem>& point);

}  // namespace polydec

#endif
