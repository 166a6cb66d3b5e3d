#include "leibniz/linalg.hpp"

#include <utility>

#include "leibniz/errors.hpp"

namespace leibniz {

namespace {

using IntRow = std::vector<mpz_class>;

struct Echelon {
  std::vector<IntRow> rows;
  std::vector<std::size_t> pivot_cols;
  mpz_class row_scale = 1;  // product of the per-row clearing factors
  bool odd_swaps = false;
};

// Multiplies each row by the lcm of its denominators, then runs Bareiss
// elimination to row echelon form. After the k-th pivot step every entry
// below the pivot rows is a (k+1)-minor of the cleared matrix, so the
// division by the previous pivot is exact.
Echelon bareiss_echelon(const Matrix& m) {
  Echelon e;
  const std::size_t nrows = m.rows();
  const std::size_t ncols = m.cols();
  e.rows.assign(nrows, IntRow(ncols));
  for (std::size_t i = 0; i < nrows; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < ncols; ++j) {
      const mpz_class d = m(i, j).denominator();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    for (std::size_t j = 0; j < ncols; ++j) {
      e.rows[i][j] = m(i, j).numerator() * (l / m(i, j).denominator());
    }
    e.row_scale *= l;
  }

  mpz_class prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
    std::size_t p = row;
    while (p < nrows && e.rows[p][col] == 0) ++p;
    if (p == nrows) continue;
    if (p != row) {
      std::swap(e.rows[p], e.rows[row]);
      e.odd_swaps = !e.odd_swaps;
    }
    const mpz_class& pivot = e.rows[row][col];
    for (std::size_t i = row + 1; i < nrows; ++i) {
      auto& r = e.rows[i];
      for (std::size_t j = col + 1; j < ncols; ++j) {
        mpz_class t = pivot * r[j] - r[col] * e.rows[row][j];
        mpz_divexact(r[j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      r[col] = 0;
    }
    prev = pivot;
    e.pivot_cols.push_back(col);
    ++row;
  }
  return e;
}

}  // namespace

std::vector<Vector> kernel_basis(const Matrix& m) {
  const std::size_t ncols = m.cols();
  const Echelon e = bareiss_echelon(m);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;

  std::vector<Vector> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(ncols);
    v[f] = 1;
    for (std::size_t r = e.pivot_cols.size(); r-- > 0;) {
      const std::size_t pc = e.pivot_cols[r];
      Rational acc;
      for (std::size_t j = pc + 1; j < ncols; ++j) {
        if (v[j].is_zero() || e.rows[r][j] == 0) continue;
        acc.add_product(Rational(e.rows[r][j], 1), v[j]);
      }
      v[pc] = -acc / Rational(e.rows[r][pc], 1);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const Matrix& m) { return bareiss_echelon(m).pivot_cols.size(); }

Rational det(const Matrix& m) {
  if (!m.is_square()) throw ShapeError("det: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  const Echelon e = bareiss_echelon(m);
  if (e.pivot_cols.size() < n) return 0;
  mpz_class last = e.rows[n - 1][n - 1];
  if (e.odd_swaps) last = -last;
  return Rational(last, e.row_scale);
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw ShapeError("inverse: matrix is not square");
  const std::size_t n = m.rows();
  Matrix a = m;
  Matrix inv = Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a(p, col).is_zero()) ++p;
    if (p == n) throw InvertibilityError("matrix is singular");
    if (p != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(col, j));
        std::swap(inv(p, j), inv(col, j));
      }
    }
    const Rational scale = Rational(1) / a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col).is_zero()) continue;
      const Rational f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

}  // namespace leibniz
