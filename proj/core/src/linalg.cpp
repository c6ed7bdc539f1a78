#include "polydec/linalg.hpp"

#include <algorithm>
#include <utility>

namespace polydec {

Matrix::Matrix(FieldCtx ctx, int nrows, int ncols)
    : ctx_(std::move(ctx)),
      nrows_(nrows),
      ncols_(ncols),
      e_(static_cast<std::size_t>(nrows) * ncols, ctx_.zero()) {
  if (nrows < 0 || ncols < 0) throw DimMismatch("negative matrix dimension");
}

Matrix Matrix::identity(const FieldCtx& ctx, int n) {
  Matrix m(ctx, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = ctx.one();
  return m;
}

Matrix Matrix::from_rows(const FieldCtx& ctx, int ncols,
                         const std::vector<std::vector<FieldElem>>& rows) {
  Matrix m(ctx, static_cast<int>(rows.size()), ncols);
  for (int r = 0; r < m.nrows(); ++r) {
    if (static_cast<int>(rows[r].size()) != ncols)
      throw DimMismatch("ragged rows");
    for (int c = 0; c < ncols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

std::vector<FieldElem> Matrix::row(int r) const {
  std::vector<FieldElem> out;
  out.reserve(ncols_);
  for (int c = 0; c < ncols_; ++c) out.push_back(at(r, c));
  return out;
}

bool Matrix::row_is_zero(int r) const {
  for (int c = 0; c < ncols_; ++c)
    if (!at(r, c).is_zero()) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  return ctx_ == o.ctx_ && nrows_ == o.nrows_ && ncols_ == o.ncols_ &&
         e_ == o.e_;
}

std::string Matrix::to_tsv() const {
  std::string s;
  for (int r = 0; r < nrows_; ++r) {
    for (int c = 0; c < ncols_; ++c) {
      if (c) s += "\t";
      s += at(r, c).to_string();
    }
    s += "\n";
  }
  return s;
}

namespace {

std::uint64_t gf_inv(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw DivisionByZero("pivot inverse of zero");
  __int128 t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    const __int128 q = r / nr;
    __int128 tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

// Flat uint64 elimination for prime fields. Moduli below 2^31 run on plain
// 64-bit products (a + f*(p-b) stays under 2^63); larger moduli go through a
// widening 128-bit multiply.
RrefResult rref_partial_gf(const Matrix& m, int pivot_cols) {
  const std::uint64_t p = m.ctx().modulus();
  const int nr = m.nrows(), nc = m.ncols();
  std::vector<std::uint64_t> a(static_cast<std::size_t>(nr) * nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j)
      a[static_cast<std::size_t>(i) * nc + j] = m.at(i, j).residue();

  const bool small_p = p < (std::uint64_t{1} << 31);
  std::vector<int> pivots;
  int r = 0;
  for (int col = 0; col < pivot_cols && r < nr; ++col) {
    int pivot = -1;
    for (int i = r; i < nr; ++i) {
      if (a[static_cast<std::size_t>(i) * nc + col] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int c = col; c < nc; ++c)
        std::swap(a[static_cast<std::size_t>(r) * nc + c],
                  a[static_cast<std::size_t>(pivot) * nc + c]);
    std::uint64_t* row_r = &a[static_cast<std::size_t>(r) * nc];
    const std::uint64_t inv = gf_inv(row_r[col], p);
    if (small_p) {
      for (int c = col; c < nc; ++c) row_r[c] = row_r[c] * inv % p;
      for (int i = 0; i < nr; ++i) {
        if (i == r) continue;
        std::uint64_t* row_i = &a[static_cast<std::size_t>(i) * nc];
        const std::uint64_t f = row_i[col];
        if (f == 0) continue;
        for (int c = col; c < nc; ++c) {
          const std::uint64_t sub = f * (p - row_r[c]) % p;
          row_i[c] = (row_i[c] + sub) % p;
        }
      }
    } else {
      auto mul = [p](std::uint64_t x, std::uint64_t y) {
        return static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(x) * y % p);
      };
      for (int c = col; c < nc; ++c) row_r[c] = mul(row_r[c], inv);
      for (int i = 0; i < nr; ++i) {
        if (i == r) continue;
        std::uint64_t* row_i = &a[static_cast<std::size_t>(i) * nc];
        const std::uint64_t f = row_i[col];
        if (f == 0) continue;
        for (int c = col; c < nc; ++c) {
          const std::uint64_t sub = mul(f, p - row_r[c]);
          std::uint64_t v = row_i[c] + sub;
          if (v >= p) v -= p;
          row_i[c] = v;
        }
      }
    }
    pivots.push_back(col);
    ++r;
  }
  Matrix out(m.ctx(), nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j)
      out.at(i, j) = m.ctx().from_int(static_cast<std::int64_t>(
          a[static_cast<std::size_t>(i) * nc + j]));
  return {std::move(out), std::move(pivots)};
}

}  // namespace

RrefResult rref_partial(const Matrix& m, int pivot_cols) {
  if (m.ctx().is_prime_field() && m.nrows() > 0 && m.ncols() > 0)
    return rref_partial_gf(m, pivot_cols);
  Matrix a = m;
  std::vector<int> pivots;
  int r = 0;
  for (int col = 0; col < pivot_cols && r < a.nrows(); ++col) {
    int pivot = -1;
    for (int i = r; i < a.nrows(); ++i) {
      if (!a.at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int c = col; c < a.ncols(); ++c)
        std::swap(a.at(r, c), a.at(pivot, c));
    const FieldElem inv = a.at(r, col).inv();
    for (int c = col; c < a.ncols(); ++c) a.at(r, c) *= inv;
    for (int i = 0; i < a.nrows(); ++i) {
      if (i == r || a.at(i, col).is_zero()) continue;
      const FieldElem f = a.at(i, col);
      for (int c = col; c < a.ncols(); ++c)
        a.at(i, c) -= f * a.at(r, c);
    }
    pivots.push_back(col);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

RrefResult rref(const Matrix& m) { return rref_partial(m, m.ncols()); }

std::optional<std::vector<FieldElem>> solve(const Matrix& A,
                                            const std::vector<FieldElem>& b) {
  if (static_cast<int>(b.size()) != A.nrows())
    throw DimMismatch("right-hand side length != row count");
  Matrix aug(A.ctx(), A.nrows(), A.ncols() + 1);
  for (int r = 0; r < A.nrows(); ++r) {
    for (int c = 0; c < A.ncols(); ++c) aug.at(r, c) = A.at(r, c);
    aug.at(r, A.ncols()) = b[r];
  }
  RrefResult red = rref_partial(aug, A.ncols());
  // Inconsistent iff some row is zero on the coefficient side but not on b.
  for (int r = red.rank(); r < red.mat.nrows(); ++r)
    if (!red.mat.at(r, A.ncols()).is_zero()) return std::nullopt;
  std::vector<FieldElem> x(A.ncols(), A.ctx().zero());
  for (int r = 0; r < red.rank(); ++r)
    x[red.pivots[r]] = red.mat.at(r, A.ncols());
  return x;
}

Matrix kernel(const Matrix& A) {
  RrefResult red = rref(A);
  std::vector<int> free_cols;
  {
    std::vector<bool> is_pivot(A.ncols(), false);
    for (int c : red.pivots) is_pivot[c] = true;
    for (int c = 0; c < A.ncols(); ++c)
      if (!is_pivot[c]) free_cols.push_back(c);
  }
  Matrix K(A.ctx(), static_cast<int>(free_cols.size()), A.ncols());
  for (int i = 0; i < K.nrows(); ++i) {
    const int fc = free_cols[i];
    K.at(i, fc) = A.ctx().one();
    for (int r = 0; r < red.rank(); ++r)
      K.at(i, red.pivots[r]) = -red.mat.at(r, fc);
  }
  return K;
}

namespace {

// Rank rows of the RREF, for canonical comparison.
Matrix rref_trimmed(const Matrix& m) {
  RrefResult red = rref(m);
  Matrix t(m.ctx(), red.rank(), m.ncols());
  for (int r = 0; r < red.rank(); ++r)
    for (int c = 0; c < m.ncols(); ++c) t.at(r, c) = red.mat.at(r, c);
  return t;
}

}  // namespace

bool row_space_equal(const Matrix& a, const Matrix& b) {
  if (a.ctx() != b.ctx()) throw CtxMismatch("matrices over different fields");
  if (a.ncols() != b.ncols()) throw DimMismatch("column counts differ");
  return rref_trimmed(a) == rref_trimmed(b);
}

Matrix row_space_intersect(const Matrix& a, const Matrix& b) {
  if (a.ctx() != b.ctx()) throw CtxMismatch("matrices over different fields");
  if (a.ncols() != b.ncols()) throw DimMismatch("column counts differ");
  const int c = a.ncols();
  Matrix stacked(a.ctx(), a.nrows() + b.nrows(), 2 * c);
  for (int r = 0; r < a.nrows(); ++r)
    for (int j = 0; j < c; ++j) {
      stacked.at(r, j) = a.at(r, j);
      stacked.at(r, c + j) = a.at(r, j);
    }
  for (int r = 0; r < b.nrows(); ++r)
    for (int j = 0; j < c; ++j) stacked.at(a.nrows() + r, j) = b.at(r, j);
  RrefResult red = rref(stacked);
  // Rows that eliminated to zero on the left carry intersection vectors on
  // the right.
  std::vector<std::vector<FieldElem>> rows;
  for (int r = 0; r < red.mat.nrows(); ++r) {
    bool left_zero = true;
    for (int j = 0; j < c && left_zero; ++j)
      left_zero = red.mat.at(r, j).is_zero();
    if (!left_zero) continue;
    bool right_zero = true;
    std::vector<FieldElem> row;
    row.reserve(c);
    for (int j = 0; j < c; ++j) {
      row.push_back(red.mat.at(r, c + j));
      if (!row.back().is_zero()) right_zero = false;
    }
    if (!right_zero) rows.push_back(std::move(row));
  }
  return rref_trimmed(Matrix::from_rows(a.ctx(), c, rows));
}

}  // namespace polydec
