#include "leibniz/algebra.hpp"

#include <vector>

namespace leibniz {

namespace {

const std::vector<std::string> kLYOrder = {"LY01", "LY02", "LY1", "LY2", "LY3", "LY4"};

Vector operator+(Vector a, const Vector& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

Vector operator-(Vector a, const Vector& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
  return a;
}

std::vector<Vector> standard_basis(std::size_t n) {
  std::vector<Vector> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(unit_vector(n, i));
  return e;
}

}  // namespace

LYAlgebra::LYAlgebra(Tensor3 binary, Tensor4 ternary, std::string name)
    : binary(std::move(binary)), ternary(std::move(ternary)), name(std::move(name)) {
  if (this->binary.dim() != this->ternary.dim()) {
    throw ShapeError("LY algebra: binary and ternary brackets differ in dimension");
  }
}

NotLeibnizError::NotLeibnizError(AxiomReport report)
    : PreconditionError("algebra fails the left Leibniz identity (" +
                        std::to_string(report.violations().size()) + " violating triples)"),
      report_(std::move(report)) {}

AxiomReport check_left_leibniz(const Algebra& a) {
  const std::size_t n = a.dim();
  const auto e = standard_basis(n);
  AxiomReport report;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Vector xy = a.multiply(e[x], e[y]);
      for (std::size_t z = 0; z < n; ++z) {
        const Vector lhs = a.multiply(e[x], a.multiply(e[y], e[z]));
        const Vector rhs = a.multiply(xy, e[z]) + a.multiply(e[y], a.multiply(e[x], e[z]));
        report.check("leibniz", {x, y, z}, lhs - rhs);
      }
    }
  }
  return report;
}

AxiomReport check_ly(const LYAlgebra& l, const LYCheckOptions& options) {
  const std::size_t n = l.dim();
  if (n > options.ly4_max_dim) {
    throw ShapeError("check_ly: dimension " + std::to_string(n) + " exceeds the LY4 cap " +
                     std::to_string(options.ly4_max_dim));
  }
  const auto e = standard_basis(n);
  auto br = [&](const Vector& x, const Vector& y) { return l.bracket(x, y); };
  auto tr = [&](const Vector& x, const Vector& y, const Vector& z) { return l.triple(x, y, z); };

  AxiomReport report;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      report.check("LY01", {x, y}, br(e[x], e[y]) + br(e[y], e[x]));
      for (std::size_t z = 0; z < n; ++z) {
        report.check("LY02", {x, y, z}, tr(e[x], e[y], e[z]) + tr(e[y], e[x], e[z]));
      }
    }
  }

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        auto term = [&](std::size_t a, std::size_t b, std::size_t c) {
          return br(br(e[a], e[b]), e[c]) + tr(e[a], e[b], e[c]);
        };
        report.check("LY1", {x, y, z}, term(x, y, z) + term(y, z, x) + term(z, x, y));
      }

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t u = 0; u < n; ++u) {
          auto term = [&](std::size_t a, std::size_t b, std::size_t c) {
            return tr(br(e[a], e[b]), e[c], e[u]);
          };
          report.check("LY2", {x, y, z, u}, term(x, y, z) + term(y, z, x) + term(z, x, y));
        }

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
          const Vector lhs = tr(e[x], e[y], br(e[u], e[v]));
          const Vector rhs = br(tr(e[x], e[y], e[u]), e[v]) + br(e[u], tr(e[x], e[y], e[v]));
          report.check("LY3", {x, y, u, v}, lhs - rhs);
        }

  bool ly4_failed = false;
  for (std::size_t x = 0; x < n && !ly4_failed; ++x)
    for (std::size_t y = 0; y < n && !ly4_failed; ++y)
      for (std::size_t u = 0; u < n && !ly4_failed; ++u)
        for (std::size_t v = 0; v < n && !ly4_failed; ++v)
          for (std::size_t w = 0; w < n && !ly4_failed; ++w) {
            const Vector lhs = tr(e[x], e[y], tr(e[u], e[v], e[w]));
            const Vector rhs = tr(tr(e[x], e[y], e[u]), e[v], e[w]) +
                               tr(e[u], tr(e[x], e[y], e[v]), e[w]) +
                               tr(e[u], e[v], tr(e[x], e[y], e[w]));
            const Vector defect = lhs - rhs;
            if (!is_zero(defect)) {
              report.check("LY4", {x, y, u, v, w}, defect);
              ly4_failed = options.ly4_early_exit;
            }
          }

  report.sort(kLYOrder);
  return report;
}

LYAlgebra leibniz_to_ly(const Algebra& a) {
  AxiomReport report = check_left_leibniz(a);
  if (!report.passed()) throw NotLeibnizError(std::move(report));

  const std::size_t n = a.dim();
  Tensor3 binary(n);
  Tensor4 ternary(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) binary(i, j, k) = a.product(i, j, k) - a.product(j, i, k);
      // [[e_i, e_j, e_k]] = -sum_m c[i][j][m] (e_m . e_k)
      for (std::size_t m = 0; m < n; ++m) {
        const Rational& cijm = a.product(i, j, m);
        if (cijm.is_zero()) continue;
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t out = 0; out < n; ++out)
            ternary(i, j, k, out).add_product(-cijm, a.product(m, k, out));
      }
    }
  }
  LYAlgebra ly(std::move(binary), std::move(ternary), a.name.empty() ? "" : "ly(" + a.name + ")");
  return ly;
}

}  // namespace leibniz
