#include "leibniz/representation.hpp"

namespace leibniz {

namespace {

const std::vector<std::string> kLYRepOrder = {"R1", "R2", "R3", "R4", "R5", "R6", "R7"};

void require_family(const std::vector<Matrix>& family, std::size_t count, std::size_t dim_v,
                    const char* what) {
  if (family.size() != count) {
    throw ShapeError(std::string(what) + ": expected " + std::to_string(count) +
                     " matrices, got " + std::to_string(family.size()));
  }
  for (const auto& m : family) {
    if (m.rows() != dim_v || m.cols() != dim_v) {
      throw ShapeError(std::string(what) + ": matrix is not " + std::to_string(dim_v) + "x" +
                       std::to_string(dim_v));
    }
  }
}

void validate_shapes(const LYRep& rep) {
  const std::size_t n = rep.dim();
  require_family(rep.rho, n, rep.dim_v, "rho family");
  require_family(rep.theta_mats, n * n, rep.dim_v, "theta family");
  require_family(rep.d_mats, n * n, rep.dim_v, "D family");
}

Matrix pair_combine(std::span<const Matrix> family, std::size_t n, std::span<const Rational> x,
                    std::span<const Rational> y, std::size_t dim_v) {
  if (x.size() != n || y.size() != n) throw ShapeError("coordinate vector length mismatch");
  Matrix out(dim_v, dim_v);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      out.add_scaled(x[i] * y[j], family[i * n + j]);
    }
  }
  return out;
}

}  // namespace

LYRep::LYRep(LYAlgebra algebra, std::size_t dim_v, std::vector<Matrix> rho,
             std::vector<Matrix> theta_mats, std::vector<Matrix> d_mats)
    : algebra(std::move(algebra)),
      dim_v(dim_v),
      rho(std::move(rho)),
      theta_mats(std::move(theta_mats)),
      d_mats(std::move(d_mats)) {
  validate_shapes(*this);
}

Matrix LYRep::rho_of(std::span<const Rational> x) const {
  if (x.size() != dim()) throw ShapeError("coordinate vector length mismatch");
  Matrix out(dim_v, dim_v);
  for (std::size_t k = 0; k < x.size(); ++k) out.add_scaled(x[k], rho[k]);
  return out;
}

Matrix LYRep::theta_of(std::span<const Rational> x, std::span<const Rational> y) const {
  return pair_combine(theta_mats, dim(), x, y, dim_v);
}

Matrix LYRep::d_of(std::span<const Rational> x, std::span<const Rational> y) const {
  return pair_combine(d_mats, dim(), x, y, dim_v);
}

LYRep LYRep::zero(const LYAlgebra& a, std::size_t dim_v) {
  const std::size_t n = a.dim();
  return {a, dim_v, std::vector<Matrix>(n, Matrix(dim_v, dim_v)),
          std::vector<Matrix>(n * n, Matrix(dim_v, dim_v)),
          std::vector<Matrix>(n * n, Matrix(dim_v, dim_v))};
}

AxiomReport check_ly_rep(const LYRep& rep) {
  validate_shapes(rep);
  const std::size_t n = rep.dim();
  const LYAlgebra& g = rep.algebra;
  std::vector<Vector> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(unit_vector(n, i));
  auto br = [&](std::size_t a, std::size_t b) { return g.bracket(e[a], e[b]); };
  auto tri = [&](std::size_t a, std::size_t b, std::size_t c) {
    return Vector(g.ternary.fiber(a, b, c).begin(), g.ternary.fiber(a, b, c).end());
  };
  const auto& rho = rep.rho;
  auto theta = [&](std::size_t a, std::size_t b) -> const Matrix& { return rep.theta(a, b); };
  auto d = [&](std::size_t a, std::size_t b) -> const Matrix& { return rep.d(a, b); };

  AxiomReport report;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      report.check("R1", {x, y},
                   d(x, y) - theta(y, x) + theta(x, y) + rep.rho_of(br(x, y)) -
                       commutator(rho[x], rho[y]));
    }
  }

  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        report.check("R2", {x, y, z},
                     rep.d_of(br(x, y), e[z]) + rep.d_of(br(y, z), e[x]) +
                         rep.d_of(br(z, x), e[y]));
        report.check("R3", {x, y, z},
                     rep.theta_of(br(x, y), e[z]) - theta(x, z) * rho[y] + theta(y, z) * rho[x]);
        report.check("R4", {x, y, z}, commutator(d(x, y), rho[z]) - rep.rho_of(tri(x, y, z)));
        report.check("R5", {x, y, z},
                     rep.theta_of(e[x], br(y, z)) - rho[y] * theta(x, z) + rho[z] * theta(x, y));
      }
    }
  }

  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          report.check("R6", {u, v, x, y},
                       commutator(d(u, v), theta(x, y)) - rep.theta_of(tri(u, v, x), e[y]) -
                           rep.theta_of(e[x], tri(u, v, y)));
        }
      }
    }
  }

  // R7 ranges over (u, x, y, z).
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          report.check("R7", {u, x, y, z},
                       rep.theta_of(e[u], tri(x, y, z)) - theta(y, z) * theta(u, x) +
                           theta(x, z) * theta(u, y) - d(x, y) * theta(u, z));
        }
      }
    }
  }

  report.sort(kLYRepOrder);
  return report;
}

LYRep ly_adjoint_rep(const LYAlgebra& l) {
  const std::size_t n = l.dim();
  std::vector<Matrix> rho(n, Matrix(n, n));
  std::vector<Matrix> theta(n * n, Matrix(n, n));
  std::vector<Matrix> d(n * n, Matrix(n, n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) rho[i].set_column(k, l.binary.fiber(i, k));
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        // theta puts the acted-on vector in the first ternary slot.
        theta[i * n + j].set_column(k, l.ternary.fiber(k, i, j));
        d[i * n + j].set_column(k, l.ternary.fiber(i, j, k));
      }
    }
  }
  return {l, n, std::move(rho), std::move(theta), std::move(d)};
}

std::vector<Matrix> d_from_r1(std::span<const Matrix> rho, std::span<const Matrix> theta_mats,
                              const LYAlgebra& l) {
  const std::size_t n = l.dim();
  if (rho.size() != n || theta_mats.size() != n * n) {
    throw ShapeError("d_from_r1: family sizes do not match the LY algebra");
  }
  const std::size_t dim_v = n == 0 ? 0 : rho.front().rows();
  std::vector<Matrix> d;
  d.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Matrix m = theta_mats[j * n + i] - theta_mats[i * n + j] + commutator(rho[i], rho[j]);
      const auto bij = l.binary.fiber(i, j);
      for (std::size_t k = 0; k < n; ++k) m.add_scaled(-bij[k], rho[k]);
      if (m.rows() != dim_v) throw ShapeError("d_from_r1: inconsistent matrix sizes");
      d.push_back(std::move(m));
    }
  }
  return d;
}

}  // namespace leibniz
