#include "leibniz/linalg.hpp"
#include "leibniz/representation.hpp"

namespace leibniz {

namespace {

const std::vector<std::string> kLeibnizRepOrder = {"LR1", "LR2", "LR3", "LR23"};

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

void validate_shapes(const LeibnizRep& rep) {
  require_family(rep.l, rep.dim(), rep.dim_v, "l family");
  require_family(rep.r, rep.dim(), rep.dim_v, "r family");
}

Matrix combine(std::span<const Matrix> family, std::span<const Rational> x, std::size_t dim_v) {
  if (x.size() != family.size()) throw ShapeError("coordinate vector length mismatch");
  Matrix out(dim_v, dim_v);
  for (std::size_t k = 0; k < x.size(); ++k) out.add_scaled(x[k], family[k]);
  return out;
}

void require_rep(const LeibnizRep& rep, const char* what) {
  AxiomReport report = check_leibniz_rep(rep);
  if (!report.passed()) {
    throw NotRepresentationError(std::string(what) + ": input is not a left representation",
                                 std::move(report));
  }
}

}  // namespace

LeibnizRep::LeibnizRep(Algebra algebra, std::size_t dim_v, std::vector<Matrix> l,
                       std::vector<Matrix> r)
    : algebra(std::move(algebra)), dim_v(dim_v), l(std::move(l)), r(std::move(r)) {
  validate_shapes(*this);
}

Matrix LeibnizRep::l_of(std::span<const Rational> x) const { return combine(l, x, dim_v); }
Matrix LeibnizRep::r_of(std::span<const Rational> x) const { return combine(r, x, dim_v); }

LeibnizRep LeibnizRep::zero(const Algebra& a, std::size_t dim_v) {
  std::vector<Matrix> z(a.dim(), Matrix(dim_v, dim_v));
  return {a, dim_v, z, z};
}

std::string_view to_string(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::antisymmetric:
      return "antisymmetric";
    case SymmetryClass::symmetric:
      return "symmetric";
    case SymmetryClass::neither:
      return "neither";
  }
  return "neither";
}

NotRepresentationError::NotRepresentationError(const std::string& what, AxiomReport report)
    : PreconditionError(what), report_(std::move(report)) {}

AxiomReport check_leibniz_rep(const LeibnizRep& rep) {
  validate_shapes(rep);
  const std::size_t n = rep.dim();
  AxiomReport report;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto xy = rep.algebra.product.fiber(x, y);
      const Matrix l_xy = rep.l_of(xy);
      const Matrix r_xy = rep.r_of(xy);
      const Matrix& lx = rep.l[x];
      const Matrix& rx = rep.r[x];
      const Matrix& ly = rep.l[y];
      const Matrix& ry = rep.r[y];
      report.check("LR1", {x, y}, l_xy - commutator(lx, ly));
      report.check("LR2", {x, y}, r_xy - ry * rx - lx * ry);
      report.check("LR3", {x, y}, r_xy - commutator(lx, ry));
      report.check("LR23", {x, y}, ry * rx + ry * lx);
    }
  }
  report.sort(kLeibnizRepOrder);
  return report;
}

LeibnizRep adjoint_rep(const Algebra& a) {
  AxiomReport report = check_left_leibniz(a);
  if (!report.passed()) throw NotLeibnizError(std::move(report));
  const std::size_t n = a.dim();
  std::vector<Matrix> l(n, Matrix(n, n)), r(n, Matrix(n, n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      l[i].set_column(j, a.product.fiber(i, j));
      r[i].set_column(j, a.product.fiber(j, i));
    }
  }
  return {a, n, std::move(l), std::move(r)};
}

LeibnizRep dual_rep(const LeibnizRep& rep) {
  require_rep(rep, "dual_rep");
  std::vector<Matrix> l, r;
  for (std::size_t i = 0; i < rep.dim(); ++i) {
    const Matrix lt = rep.l[i].transpose();
    l.push_back(-lt);
    r.push_back(lt + rep.r[i].transpose());
  }
  return {rep.algebra, rep.dim_v, std::move(l), std::move(r)};
}

namespace {

LeibnizRep rep_from_l_family(const Algebra& a, std::vector<Matrix> l_family, bool symmetric) {
  if (l_family.size() != a.dim()) throw ShapeError("l family size does not match algebra");
  const std::size_t dim_v = l_family.empty() ? 0 : l_family.front().rows();
  std::vector<Matrix> r;
  for (const auto& m : l_family) r.push_back(symmetric ? -m : Matrix(m.rows(), m.cols()));
  LeibnizRep rep(a, dim_v, std::move(l_family), std::move(r));

  const AxiomReport full = check_leibniz_rep(rep);
  AxiomReport lr1;
  for (const auto& v : full.violations()) {
    if (v.axiom == "LR1") lr1.check(v.axiom, v.indices, v.defect);
  }
  if (!lr1.passed()) {
    throw NotRepresentationError("l family does not satisfy l(x.y) = [l(x), l(y)]",
                                 std::move(lr1));
  }
  return rep;
}

}  // namespace

LeibnizRep symmetric_rep_from(const Algebra& a, std::vector<Matrix> l_family) {
  return rep_from_l_family(a, std::move(l_family), true);
}

LeibnizRep antisymmetric_rep_from(const Algebra& a, std::vector<Matrix> l_family) {
  return rep_from_l_family(a, std::move(l_family), false);
}

SymmetryClass classify_symmetry(const LeibnizRep& rep) {
  bool all_zero = true;
  bool all_minus_l = true;
  for (std::size_t i = 0; i < rep.r.size(); ++i) {
    all_zero = all_zero && rep.r[i].is_zero();
    all_minus_l = all_minus_l && (rep.r[i] + rep.l[i]).is_zero();
  }
  if (all_zero) return SymmetryClass::antisymmetric;
  if (all_minus_l) return SymmetryClass::symmetric;
  return SymmetryClass::neither;
}

LeibnizRep conjugate_rep(const LeibnizRep& rep, const Matrix& psi) {
  if (!psi.is_square() || psi.rows() != rep.dim_v) {
    throw ShapeError("conjugate_rep: psi must be dim_v x dim_v");
  }
  const Matrix psi_inv = inverse(psi);
  std::vector<Matrix> l, r;
  for (std::size_t i = 0; i < rep.dim(); ++i) {
    l.push_back(psi * rep.l[i] * psi_inv);
    r.push_back(psi * rep.r[i] * psi_inv);
  }
  return {rep.algebra, rep.dim_v, std::move(l), std::move(r)};
}

LYRep induce_ly_rep(const LeibnizRep& rep) {
  require_rep(rep, "induce_ly_rep");
  LYAlgebra ly = leibniz_to_ly(rep.algebra);
  const std::size_t n = rep.dim();
  std::vector<Matrix> rho, theta, d;
  for (std::size_t i = 0; i < n; ++i) rho.push_back(rep.l[i] - rep.r[i]);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      theta.push_back(-(rep.r[j] * rep.r[i]));
      d.push_back(-rep.l_of(rep.algebra.product.fiber(i, j)));
    }
  }
  return {std::move(ly), rep.dim_v, std::move(rho), std::move(theta), std::move(d)};
}

}  // namespace leibniz
