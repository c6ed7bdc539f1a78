#ifndef POLYDEC_MONOMIAL_HPP
#define POLYDEC_MONOMIAL_HPP

#include <compare>
#include <string>
#include <vector>

#include "polydec/errors.hpp"

namespace polydec {

/// Exponent vector of fixed arity with a cached total degree. Ordered by
/// graded lex: total degree first, then lexicographically with variable 0
/// most significant. This is the one monomial order used everywhere, so all
/// eliminations and printed forms are canonical.
class Monomial {
 public:
  explicit Monomial(int nvars) : exps_(nvars, 0), degree_(0) {}
  explicit Monomial(std::vector<int> exps);

  int nvars() const { return static_cast<int>(exps_.size()); }
  int degree() const { return degree_; }
  int exp(int var) const { return exps_[var]; }
  const std::vector<int>& exponents() const { return exps_; }
  bool is_constant() const { return degree_ == 0; }

  Monomial times(const Monomial& o) const;
  Monomial times_var(int var, int k = 1) const;
  bool divisible_by_var(int var, int k = 1) const { return exps_[var] >= k; }
  Monomial divide_var(int var, int k = 1) const;
  /// Drops variable `var` from the exponent vector (arity shrinks by one).
  Monomial drop_var(int var) const;
  /// Inserts a fresh variable with exponent `e` at position `var`.
  Monomial insert_var(int var, int e) const;

  std::strong_ordering operator<=>(const Monomial& o) const;
  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }

  /// "x1^2*x2" style; first_index controls the printed index of variable 0.
  std::string to_string(int first_index = 1) const;

 private:
  std::vector<int> exps_;
  int degree_;
};

/// Comparator giving descending graded-lex iteration (leading term first).
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return b < a; }
};

/// All monomials in `nvars` variables of total degree exactly d,
/// in descending graded-lex order.
std::vector<Monomial> monomials_of_degree(int nvars, int d);

/// All monomials of total degree <= d, in descending graded-lex order.
std::vector<Monomial> monomials_up_to_degree(int nvars, int d);

}  // namespace polydec

#endif
