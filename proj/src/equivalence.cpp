#include "leibniz/equivalence.hpp"

#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "leibniz/linalg.hpp"

namespace leibniz {

namespace {

struct OperatorPair {
  const Matrix* on_v1;
  const Matrix* on_v2;
};

// Stacks psi A - B psi = 0 for every (A, B) pair, with psi flattened
// row-major: unknown p * m1 + q is psi(p, q).
Matrix intertwining_system(const std::vector<OperatorPair>& pairs, std::size_t m1,
                           std::size_t m2) {
  const std::size_t unknowns = m1 * m2;
  Matrix system(pairs.size() * unknowns, unknowns);
  std::size_t row = 0;
  for (const auto& [a, b] : pairs) {
    for (std::size_t p = 0; p < m2; ++p) {
      for (std::size_t q = 0; q < m1; ++q, ++row) {
        for (std::size_t s = 0; s < m1; ++s) system(row, p * m1 + s) += (*a)(s, q);
        for (std::size_t s = 0; s < m2; ++s) system(row, s * m1 + q) -= (*b)(p, s);
      }
    }
  }
  return system;
}

IntertwinerSpace solve_space(const std::vector<OperatorPair>& pairs, std::size_t m1,
                             std::size_t m2) {
  IntertwinerSpace space{m1, m2, {}};
  for (const auto& v : kernel_basis(intertwining_system(pairs, m1, m2))) {
    space.basis.emplace_back(m2, m1, v);
  }
  return space;
}

Matrix normalized(Matrix m) {
  for (const auto& x : m.entries()) {
    if (!x.is_zero()) {
      const Rational scale = Rational(1) / x;
      return m * scale;
    }
  }
  return m;
}

std::string format_point(const std::vector<long>& lambda) {
  std::ostringstream os;
  os << '(';
  for (std::size_t s = 0; s < lambda.size(); ++s) os << (s ? "," : "") << lambda[s];
  os << ')';
  return os.str();
}

using Verifier = std::function<AxiomReport(const Matrix&)>;

EquivalenceVerdict accept(Matrix candidate, const Verifier& verify, std::string note) {
  Matrix w = normalized(std::move(candidate));
  if (!verify(w).passed() || det(w).is_zero()) {
    throw std::logic_error("equivalence: witness failed re-verification");
  }
  return {Equivalence::equivalent, std::move(w), std::move(note)};
}

Matrix combination(const IntertwinerSpace& space, const std::vector<long>& lambda) {
  Matrix m(space.dim_v2, space.dim_v1);
  for (std::size_t s = 0; s < lambda.size(); ++s) {
    if (lambda[s] != 0) m.add_scaled(Rational(lambda[s]), space.basis[s]);
  }
  return m;
}

EquivalenceVerdict decide(const IntertwinerSpace& space, const Verifier& verify,
                          const EquivalenceOptions& options) {
  if (space.dim_v1 != space.dim_v2) {
    return {Equivalence::not_equivalent, std::nullopt,
            "dimension mismatch: " + std::to_string(space.dim_v1) + " vs " +
                std::to_string(space.dim_v2)};
  }
  const std::size_t m = space.dim_v1;
  if (verify(Matrix::identity(m)).passed()) {
    return accept(Matrix::identity(m), verify, "identity intertwines");
  }
  if (space.basis.empty()) {
    return {Equivalence::not_equivalent, std::nullopt, "intertwiner space is zero"};
  }

  const std::size_t t = space.basis.size();
  const std::uint64_t base = m + 1;
  std::uint64_t grid = 1;
  bool over_budget = false;
  for (std::size_t s = 0; s < t && !over_budget; ++s) {
    if (grid > options.grid_budget / base) over_budget = true;
    grid *= base;
  }
  over_budget = over_budget || grid > options.grid_budget;

  std::vector<long> lambda(t, 0);
  if (!over_budget) {
    for (std::uint64_t point = 0; point < grid; ++point) {
      std::uint64_t rest = point;
      for (std::size_t s = t; s-- > 0;) {
        lambda[s] = static_cast<long>(rest % base);
        rest /= base;
      }
      Matrix candidate = combination(space, lambda);
      if (!det(candidate).is_zero()) {
        return accept(std::move(candidate), verify, "grid point " + format_point(lambda));
      }
    }
    return {Equivalence::not_equivalent, std::nullopt,
            "determinant vanishes on the whole grid {0.." + std::to_string(m) + "}^" +
                std::to_string(t) + " (intertwiner space dimension " + std::to_string(t) +
                ")"};
  }

  std::mt19937_64 rng(options.seed);
  const std::uint64_t spread = static_cast<std::uint64_t>(m) * m;
  for (std::size_t sample = 0; sample < options.random_samples; ++sample) {
    for (auto& l : lambda) {
      l = static_cast<long>(rng() % (2 * spread + 1)) - static_cast<long>(spread);
    }
    Matrix candidate = combination(space, lambda);
    if (!det(candidate).is_zero()) {
      return accept(std::move(candidate), verify, "random point " + format_point(lambda));
    }
  }
  return {Equivalence::inconclusive, std::nullopt,
          "grid of " + std::to_string(t) + " variables exceeds budget; determinant vanished at " +
              std::to_string(options.random_samples) + " random points"};
}

void require_same_algebra(bool same) {
  if (!same) throw DomainError("representations are over different algebras");
}

void add_defects(AxiomReport& report, const std::string& id, std::vector<std::size_t> index,
                 const Matrix& psi, const Matrix& a1, const Matrix& a2) {
  report.check(id, std::move(index), psi * a1 - a2 * psi);
}

void require_psi_shape(const Matrix& psi, std::size_t m1, std::size_t m2) {
  if (psi.rows() != m2 || psi.cols() != m1) {
    throw ShapeError("psi must be " + std::to_string(m2) + "x" + std::to_string(m1));
  }
}

}  // namespace

std::string_view to_string(Equivalence e) {
  switch (e) {
    case Equivalence::equivalent:
      return "equivalent";
    case Equivalence::not_equivalent:
      return "not_equivalent";
    case Equivalence::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

IntertwinerSpace intertwiner_space_leibniz(const LeibnizRep& rep1, const LeibnizRep& rep2) {
  require_same_algebra(rep1.algebra.same_structure(rep2.algebra));
  std::vector<OperatorPair> pairs;
  for (std::size_t i = 0; i < rep1.dim(); ++i) {
    pairs.push_back({&rep1.l[i], &rep2.l[i]});
    pairs.push_back({&rep1.r[i], &rep2.r[i]});
  }
  return solve_space(pairs, rep1.dim_v, rep2.dim_v);
}

IntertwinerSpace intertwiner_space_ly(const LYRep& rep1, const LYRep& rep2) {
  require_same_algebra(rep1.algebra.same_structure(rep2.algebra));
  std::vector<OperatorPair> pairs;
  for (std::size_t i = 0; i < rep1.dim(); ++i) pairs.push_back({&rep1.rho[i], &rep2.rho[i]});
  for (std::size_t k = 0; k < rep1.theta_mats.size(); ++k) {
    pairs.push_back({&rep1.theta_mats[k], &rep2.theta_mats[k]});
  }
  return solve_space(pairs, rep1.dim_v, rep2.dim_v);
}

AxiomReport intertwining_defects(const LeibnizRep& rep1, const LeibnizRep& rep2,
                                 const Matrix& psi) {
  require_same_algebra(rep1.algebra.same_structure(rep2.algebra));
  require_psi_shape(psi, rep1.dim_v, rep2.dim_v);
  AxiomReport report;
  for (std::size_t i = 0; i < rep1.dim(); ++i) add_defects(report, "l", {i}, psi, rep1.l[i], rep2.l[i]);
  for (std::size_t i = 0; i < rep1.dim(); ++i) add_defects(report, "r", {i}, psi, rep1.r[i], rep2.r[i]);
  return report;
}

AxiomReport intertwining_defects(const LYRep& rep1, const LYRep& rep2, const Matrix& psi,
                                 bool include_d) {
  require_same_algebra(rep1.algebra.same_structure(rep2.algebra));
  require_psi_shape(psi, rep1.dim_v, rep2.dim_v);
  const std::size_t n = rep1.dim();
  AxiomReport report;
  for (std::size_t i = 0; i < n; ++i) {
    add_defects(report, "rho", {i}, psi, rep1.rho[i], rep2.rho[i]);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      add_defects(report, "theta", {i, j}, psi, rep1.theta(i, j), rep2.theta(i, j));
  if (include_d) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        add_defects(report, "D", {i, j}, psi, rep1.d(i, j), rep2.d(i, j));
  }
  return report;
}

EquivalenceVerdict decide_equivalence_leibniz(const LeibnizRep& rep1, const LeibnizRep& rep2,
                                              const EquivalenceOptions& options) {
  const IntertwinerSpace space = intertwiner_space_leibniz(rep1, rep2);
  return decide(
      space, [&](const Matrix& psi) { return intertwining_defects(rep1, rep2, psi); }, options);
}

EquivalenceVerdict decide_equivalence_ly(const LYRep& rep1, const LYRep& rep2,
                                         const EquivalenceOptions& options) {
  const IntertwinerSpace space = intertwiner_space_ly(rep1, rep2);
  return decide(
      space, [&](const Matrix& psi) { return intertwining_defects(rep1, rep2, psi, false); },
      options);
}

InducedEquivalenceReport verify_induced_equivalence(const LeibnizRep& rep1,
                                                    const LeibnizRep& rep2, const Matrix& psi) {
  if (rep1.dim_v != rep2.dim_v || !psi.is_square() || psi.rows() != rep1.dim_v) {
    throw PreconditionError("psi must be a square map between modules of equal dimension");
  }
  if (det(psi).is_zero()) throw PreconditionError("psi is singular");
  if (!intertwining_defects(rep1, rep2, psi).passed()) {
    throw PreconditionError("psi does not intertwine the Leibniz representations");
  }
  const LYRep ly1 = induce_ly_rep(rep1);
  const LYRep ly2 = induce_ly_rep(rep2);
  InducedEquivalenceReport out;
  out.defects = intertwining_defects(ly1, ly2, psi, false);
  out.passed = out.defects.passed();
  AxiomReport with_d = intertwining_defects(ly1, ly2, psi, true);
  out.d_intertwined = !with_d.violates("D");
  return out;
}

}  // namespace leibniz
