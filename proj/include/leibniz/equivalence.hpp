#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "leibniz/axiom_report.hpp"
#include "leibniz/matrix.hpp"
#include "leibniz/representation.hpp"

namespace leibniz {

/// All linear maps psi : V1 -> V2 (dim_v2 x dim_v1 matrices) commuting with
/// the representation operators. Invertibility is not imposed.
struct IntertwinerSpace {
  std::size_t dim_v1 = 0;
  std::size_t dim_v2 = 0;
  std::vector<Matrix> basis;

  std::size_t dimension() const { return basis.size(); }
};

enum class Equivalence { equivalent, not_equivalent, inconclusive };
std::string_view to_string(Equivalence e);

struct EquivalenceVerdict {
  Equivalence status = Equivalence::inconclusive;
  /// Present iff status is equivalent: invertible, satisfies every
  /// intertwining equation, first nonzero entry (row-major) equal to 1.
  std::optional<Matrix> witness;
  std::string note;
};

struct EquivalenceOptions {
  /// Largest grid {0..m}^t evaluated exhaustively.
  std::uint64_t grid_budget = 1'000'000;
  /// Evaluations used when the grid is over budget.
  std::size_t random_samples = 200;
  std::uint64_t seed = 0x1eb2a1;
};

/// psi l1(e_i) = l2(e_i) psi and psi r1(e_i) = r2(e_i) psi for all i.
/// Throws DomainError if the representations are over different algebras.
IntertwinerSpace intertwiner_space_leibniz(const LeibnizRep& rep1, const LeibnizRep& rep2);

/// psi rho1(e_i) = rho2(e_i) psi and psi theta1(e_i,e_j) = theta2(e_i,e_j) psi.
/// D is deliberately not constrained.
IntertwinerSpace intertwiner_space_ly(const LYRep& rep1, const LYRep& rep2);

/// Decides whether the intertwiner space contains an invertible map.
///
/// The identity is tried first when it intertwines. Otherwise
/// lambda -> det(sum_s lambda_s K_s) has degree <= m in each variable, so it
/// vanishes identically iff it vanishes on {0..m}^t; the grid is scanned in
/// lexicographic order and the first nonzero point is the witness. Grids over
/// budget fall back to seeded random sampling, which can only prove
/// equivalence and otherwise reports inconclusive.
EquivalenceVerdict decide_equivalence_leibniz(const LeibnizRep& rep1, const LeibnizRep& rep2,
                                              const EquivalenceOptions& options = {});
EquivalenceVerdict decide_equivalence_ly(const LYRep& rep1, const LYRep& rep2,
                                         const EquivalenceOptions& options = {});

/// Intertwining defects psi A1 - A2 psi for each operator; axiom ids "l", "r"
/// (Leibniz) or "rho", "theta", "D" (LY).
AxiomReport intertwining_defects(const LeibnizRep& rep1, const LeibnizRep& rep2,
                                 const Matrix& psi);
AxiomReport intertwining_defects(const LYRep& rep1, const LYRep& rep2, const Matrix& psi,
                                 bool include_d);

struct InducedEquivalenceReport {
  bool passed = false;
  /// rho / theta defects of psi on the induced pair; empty iff passed.
  AxiomReport defects;
  /// Whether psi also intertwines the induced D families. Not part of the
  /// pass criterion.
  bool d_intertwined = false;
};

/// Given psi witnessing equivalence of two Leibniz representations, checks
/// that the same psi intertwines rho and theta of the induced LY
/// representations. Throws PreconditionError if psi is singular or does not
/// intertwine rep1 and rep2.
InducedEquivalenceReport verify_induced_equivalence(const LeibnizRep& rep1,
                                                    const LeibnizRep& rep2, const Matrix& psi);

}  // namespace leibniz
