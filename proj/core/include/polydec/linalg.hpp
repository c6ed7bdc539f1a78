#ifndef POLYDEC_LINALG_HPP
#define POLYDEC_LINALG_HPP

#include <optional>
#include <string>
#include <vector>

#include "polydec/field.hpp"

namespace polydec {

/// Dense matrix over an exact field. Pivoting is "first nonzero in column
/// order"; there are no numerical concerns, and the caller controls column
/// meaning (the polynomial layer arranges monomial columns before calling
/// in, which is what makes the divisibility quotients work).
class Matrix {
 public:
  Matrix(FieldCtx ctx, int nrows, int ncols);
  static Matrix identity(const FieldCtx& ctx, int n);
  static Matrix from_rows(const FieldCtx& ctx, int ncols,
                          const std::vector<std::vector<FieldElem>>& rows);

  const FieldCtx& ctx() const { return ctx_; }
  int nrows() const { return nrows_; }
  int ncols() const { return ncols_; }

  const FieldElem& at(int r, int c) const { return e_[idx(r, c)]; }
  FieldElem& at(int r, int c) { return e_[idx(r, c)]; }

  std::vector<FieldElem> row(int r) const;
  bool row_is_zero(int r) const;

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  /// Debug dump: one row per line, canonical field text separated by tabs.
  std::string to_tsv() const;

 private:
  std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r) * ncols_ + c;
  }
  FieldCtx ctx_;
  int nrows_, ncols_;
  std::vector<FieldElem> e_;
};

struct RrefResult {
  Matrix mat;
  std::vector<int> pivots;  // strictly increasing pivot column indices
  int rank() const { return static_cast<int>(pivots.size()); }
};

/// Reduced row echelon form. Row space is preserved; zero rows sink to the
/// bottom.
RrefResult rref(const Matrix& m);

/// RREF with pivots restricted to the first `pivot_cols` columns; the
/// remaining columns ride along. Used to carry right-hand sides through one
/// elimination.
RrefResult rref_partial(const Matrix& m, int pivot_cols);

/// One exact solution of A x = b with free variables set to zero, or nullopt
/// when the system is inconsistent.
std::optional<std::vector<FieldElem>> solve(const Matrix& A,
                                            const std::vector<FieldElem>& b);

/// Rows span the null space {x : A x = 0}.
Matrix kernel(const Matrix& A);

/// True iff the two row spaces coincide (identical RREF).
bool row_space_equal(const Matrix& a, const Matrix& b);

/// Basis of the intersection of the two row spaces, as an RREF matrix
/// (Zassenhaus block elimination on [[A A],[B 0]]).
Matrix row_space_intersect(const Matrix& a, const Matrix& b);

}  // namespace polydec

#endif
