#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/axiom_report.hpp"
#include "leibniz/matrix.hpp"

namespace leibniz {

/// Left representation (V, l, r) of a left Leibniz algebra: one m x m matrix
/// l(e_i) and one r(e_i) per basis element.
///
/// Axiom ids used by check_leibniz_rep:
///   "LR1"  l(x.y) = [l(x), l(y)]
///   "LR2"  r(x.y) = r(y) r(x) + l(x) r(y)
///   "LR3"  r(x.y) = [l(x), r(y)]
///   "LR23" r(y) r(x) + r(y) l(x) = 0, a consequence of LR2 and LR3 that is
///          reported as a separate cross-check.
struct LeibnizRep {
  Algebra algebra;
  std::size_t dim_v = 0;
  std::vector<Matrix> l;
  std::vector<Matrix> r;

  LeibnizRep() = default;
  /// Throws ShapeError unless there are dim(algebra) square dim_v matrices
  /// in each family.
  LeibnizRep(Algebra algebra, std::size_t dim_v, std::vector<Matrix> l, std::vector<Matrix> r);

  std::size_t dim() const { return algebra.dim(); }
  /// l and r extended linearly to coordinate vectors of the algebra.
  Matrix l_of(std::span<const Rational> x) const;
  Matrix r_of(std::span<const Rational> x) const;

  static LeibnizRep zero(const Algebra& a, std::size_t dim_v);
};

/// Representation (V, rho, theta, D) of an LY algebra. theta and D are
/// indexed by basis pairs; theta(i, j) is the operator theta(e_i, e_j).
///
/// D is determined by the others through R1 but is stored explicitly;
/// check_ly_rep validates it through R1.
struct LYRep {
  LYAlgebra algebra;
  std::size_t dim_v = 0;
  std::vector<Matrix> rho;
  std::vector<Matrix> theta_mats;  // row-major n x n
  std::vector<Matrix> d_mats;      // row-major n x n

  LYRep() = default;
  LYRep(LYAlgebra algebra, std::size_t dim_v, std::vector<Matrix> rho,
        std::vector<Matrix> theta_mats, std::vector<Matrix> d_mats);

  std::size_t dim() const { return algebra.dim(); }
  const Matrix& theta(std::size_t i, std::size_t j) const { return theta_mats[i * dim() + j]; }
  const Matrix& d(std::size_t i, std::size_t j) const { return d_mats[i * dim() + j]; }
  Matrix& theta(std::size_t i, std::size_t j) { return theta_mats[i * dim() + j]; }
  Matrix& d(std::size_t i, std::size_t j) { return d_mats[i * dim() + j]; }

  Matrix rho_of(std::span<const Rational> x) const;
  Matrix theta_of(std::span<const Rational> x, std::span<const Rational> y) const;
  Matrix d_of(std::span<const Rational> x, std::span<const Rational> y) const;

  static LYRep zero(const LYAlgebra& a, std::size_t dim_v);
};

enum class SymmetryClass { antisymmetric, symmetric, neither };
std::string_view to_string(SymmetryClass c);

/// Thrown by constructors whose input family fails a representation axiom.
class NotRepresentationError : public PreconditionError {
 public:
  NotRepresentationError(const std::string& what, AxiomReport report);
  const AxiomReport& report() const { return report_; }

 private:
  AxiomReport report_;
};

// --- Leibniz representations ------------------------------------------------

/// Checks LR1, LR2, LR3 and the LR23 cross-check on all basis pairs.
AxiomReport check_leibniz_rep(const LeibnizRep& rep);

/// (g, L, R) with L_x y = x.y and R_x y = y.x. Throws NotLeibnizError when the
/// algebra is not left Leibniz.
LeibnizRep adjoint_rep(const Algebra& a);

/// The dual module (V*, l*, -l* - r*), with l*(x) xi = -xi l(x). In dual-basis
/// coordinates precomposition by M acts as M^T, so the output families are
/// -l(e_i)^T and l(e_i)^T + r(e_i)^T.
LeibnizRep dual_rep(const LeibnizRep& rep);

/// r = -l and r = 0 respectively. The l family must satisfy LR1, otherwise
/// NotRepresentationError.
LeibnizRep symmetric_rep_from(const Algebra& a, std::vector<Matrix> l_family);
LeibnizRep antisymmetric_rep_from(const Algebra& a, std::vector<Matrix> l_family);

/// antisymmetric if every r(e_i) = 0, else symmetric if every r(e_i) = -l(e_i),
/// else neither. The zero representation is antisymmetric.
SymmetryClass classify_symmetry(const LeibnizRep& rep);

/// l'(x) = psi l(x) psi^-1, r'(x) = psi r(x) psi^-1. Throws
/// InvertibilityError for singular psi.
LeibnizRep conjugate_rep(const LeibnizRep& rep, const Matrix& psi);

// --- LY representations -----------------------------------------------------

/// The induced representation of the associated LY algebra:
///   rho(x) = l(x) - r(x),  theta(x,y) = -r(y) r(x),  D(x,y) = -l(x.y).
LYRep induce_ly_rep(const LeibnizRep& rep);

/// R1..R7 on all basis tuples of the right arity.
AxiomReport check_ly_rep(const LYRep& rep);

/// rho(x) y = [x,y], theta(x,y) z = [[z,x,y]], D(x,y) z = [[x,y,z]].
LYRep ly_adjoint_rep(const LYAlgebra& l);

/// D(e_i,e_j) = theta(e_j,e_i) - theta(e_i,e_j) - rho([e_i,e_j]) + [rho(e_i), rho(e_j)].
std::vector<Matrix> d_from_r1(std::span<const Matrix> rho, std::span<const Matrix> theta_mats,
                              const LYAlgebra& l);

}  // namespace leibniz
