#pragma once

// Independent oracles and generators shared by the test binaries. Nothing in
// here calls into linalg.cpp; the oracles are deliberately naive.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/matrix.hpp"
#include "leibniz/representation.hpp"

namespace leibniz::testing {

class RationalGen {
 public:
  explicit RationalGen(std::uint64_t seed) : rng_(seed) {}

  /// p/q with p in [-bound, bound], q in [1, bound].
  Rational rational(long bound = 5) {
    const long p = static_cast<long>(rng_() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
    const long q = 1 + static_cast<long>(rng_() % static_cast<std::uint64_t>(bound));
    return Rational(p, q);
  }

  /// Roughly half the entries zero, to exercise rank deficiency.
  Rational sparse_rational(long bound = 5) {
    return rng_() % 2 == 0 ? Rational(0) : rational(bound);
  }

  Matrix matrix(std::size_t rows, std::size_t cols, bool sparse = false) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = sparse ? sparse_rational() : rational();
    return m;
  }

  Vector vector(std::size_t n) {
    Vector v(n);
    for (auto& x : v) x = rational();
    return v;
  }

  /// Unit upper-triangular times unit lower-triangular: always invertible.
  Matrix invertible(std::size_t n) {
    Matrix upper = Matrix::identity(n);
    Matrix lower = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        upper(i, j) = rational(3);
        lower(j, i) = rational(3);
      }
    for (std::size_t i = 0; i < n; ++i) {
      Rational d = rational(3);
      if (d.is_zero()) d = 1;
      upper(i, i) = d;
    }
    return upper * lower;
  }

  std::uint64_t next() { return rng_(); }

 private:
  std::mt19937_64 rng_;
};

/// Laplace expansion along the first row.
inline Rational cofactor_det(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational total;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    Matrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t c2 = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, c2++) = m(r, c);
      }
    }
    const Rational term = m(0, j) * cofactor_det(minor);
    if (j % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

/// Plain rational row reduction; returns the rank.
inline std::size_t naive_rank(Matrix m) {
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    for (std::size_t i = row + 1; i < m.rows(); ++i) {
      const Rational f = m(i, col) / m(row, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    ++row;
  }
  return row;
}

inline Vector add(Vector a, const Vector& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

inline Vector sub(Vector a, const Vector& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
  return a;
}

inline Vector scale(Vector a, const Rational& s) {
  for (auto& x : a) x *= s;
  return a;
}

/// Seeded corpus of random left Leibniz algebras with dim <= 3. Seeds are
/// taken in order; zero algebras are skipped when `nonzero_only` so the
/// corpus exercises nontrivial products.
inline std::vector<Algebra> random_corpus(std::size_t count, bool nonzero_only = true) {
  std::vector<Algebra> out;
  for (std::uint64_t seed = 1; out.size() < count; ++seed) {
    const std::size_t dim = 1 + seed % 3;
    auto a = random_leibniz(dim, seed, 10000);
    if (!a) continue;
    if (nonzero_only && a->product.is_zero()) continue;
    out.push_back(std::move(*a));
  }
  return out;
}

inline std::vector<Algebra> catalog_corpus() {
  std::vector<Algebra> out;
  for (int n = 1; n <= 4; ++n) out.push_back(catalog("abelian:" + std::to_string(n)));
  for (const char* name : {"leibniz2", "sl2", "heisenberg"}) out.push_back(catalog(name));
  return out;
}

struct NamedRep {
  std::string label;
  LeibnizRep rep;
};

/// adjoint, dual of adjoint, symmetric and antisymmetric reps built from the
/// adjoint l family, and `conjugates` random conjugates of the adjoint.
inline std::vector<NamedRep> rep_corpus(const Algebra& a, std::uint64_t seed,
                                        std::size_t conjugates = 5) {
  std::vector<NamedRep> out;
  const LeibnizRep adj = adjoint_rep(a);
  out.push_back({"adjoint", adj});
  out.push_back({"dual-of-adjoint", dual_rep(adj)});
  out.push_back({"symmetric", symmetric_rep_from(a, adj.l)});
  out.push_back({"antisymmetric", antisymmetric_rep_from(a, adj.l)});
  RationalGen gen(seed);
  for (std::size_t k = 0; k < conjugates; ++k) {
    out.push_back({"conjugate-" + std::to_string(k), conjugate_rep(adj, gen.invertible(a.dim()))});
  }
  return out;
}

}  // namespace leibniz::testing
