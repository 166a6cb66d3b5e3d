#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leibniz/equivalence.hpp"
#include "leibniz/linalg.hpp"
#include "support.hpp"

using namespace leibniz;
using leibniz::testing::RationalGen;

namespace {

const Matrix E10 = Matrix::unit(2, 1, 0);

// Solves psi A1 = A2 psi over every 2x2 matrix with entries in {-1, 0, 1}
// and returns the rank of the solutions found, as a lower bound on the
// intertwiner dimension that does not go through linalg.cpp.
std::size_t brute_force_rank(const LeibnizRep& a, const LeibnizRep& b) {
  std::vector<Vector> hits;
  for (int code = 0; code < 81; ++code) {
    Matrix psi(2, 2);
    int rest = code;
    for (std::size_t k = 0; k < 4; ++k) {
      psi(k / 2, k % 2) = rest % 3 - 1;
      rest /= 3;
    }
    if (intertwining_defects(a, b, psi).passed()) {
      hits.emplace_back(psi.entries().begin(), psi.entries().end());
    }
  }
  if (hits.empty()) return 0;
  Matrix stacked(hits.size(), 4);
  for (std::size_t i = 0; i < hits.size(); ++i)
    for (std::size_t k = 0; k < 4; ++k) stacked(i, k) = hits[i][k];
  return testing::naive_rank(stacked);
}

Rational first_nonzero(const Matrix& m) {
  for (const auto& x : m.entries())
    if (!x.is_zero()) return x;
  return 0;
}

}  // namespace

TEST_CASE("intertwiner_space_leibniz examples") {
  const Algebra l2 = catalog("leibniz2");
  const IntertwinerSpace zero = intertwiner_space_leibniz(LeibnizRep::zero(l2, 2),
                                                          LeibnizRep::zero(l2, 2));
  CHECK(zero.dimension() == 4);
  for (std::size_t k = 0; k < 4; ++k) CHECK(zero.basis[k] == Matrix::unit(2, k / 2, k % 2));

  const LeibnizRep adj = adjoint_rep(l2);
  const IntertwinerSpace self = intertwiner_space_leibniz(adj, adj);
  CHECK(self.dimension() == 2);
  // Commutant of E10: span{I, E10}.
  for (const auto& m : self.basis) CHECK(intertwining_defects(adj, adj, m).passed());
  Matrix span(2, 4);
  for (std::size_t s = 0; s < 2; ++s)
    for (std::size_t k = 0; k < 4; ++k) span(s, k) = self.basis[s].entries()[k];
  CHECK(testing::naive_rank(span) == 2);
  for (const Matrix& target : {Matrix::identity(2), E10}) {
    Matrix with(3, 4);
    for (std::size_t s = 0; s < 2; ++s)
      for (std::size_t k = 0; k < 4; ++k) with(s, k) = span(s, k);
    for (std::size_t k = 0; k < 4; ++k) with(2, k) = target.entries()[k];
    CHECK(testing::naive_rank(with) == 2);
  }
}

TEST_CASE("intertwiner dimension agrees with a brute-force count") {
  const Algebra l2 = catalog("leibniz2");
  const LeibnizRep adj = adjoint_rep(l2);
  const LeibnizRep zero = LeibnizRep::zero(l2, 2);
  const LeibnizRep dual = dual_rep(adj);
  for (const auto* a : {&adj, &zero, &dual})
    for (const auto* b : {&adj, &zero, &dual}) {
      const IntertwinerSpace s = intertwiner_space_leibniz(*a, *b);
      CHECK(s.dimension() == brute_force_rank(*a, *b));
      for (const auto& m : s.basis) CHECK(intertwining_defects(*a, *b, m).passed());
    }
  CHECK(intertwiner_space_leibniz(adj, zero).dimension() == 2);
}

TEST_CASE("intertwiner spaces between different dimensions") {
  const Algebra ab = catalog("abelian:1");
  const IntertwinerSpace s =
      intertwiner_space_leibniz(LeibnizRep::zero(ab, 2), LeibnizRep::zero(ab, 3));
  CHECK(s.dim_v1 == 2);
  CHECK(s.dim_v2 == 3);
  CHECK(s.dimension() == 6);
  for (const auto& m : s.basis) {
    CHECK(m.rows() == 3);
    CHECK(m.cols() == 2);
  }
}

TEST_CASE("decide_equivalence_leibniz examples") {
  const Algebra l2 = catalog("leibniz2");
  const LeibnizRep adj = adjoint_rep(l2);

  const EquivalenceVerdict self = decide_equivalence_leibniz(adj, adj);
  CHECK(self.status == Equivalence::equivalent);
  REQUIRE(self.witness);
  CHECK(*self.witness == Matrix::identity(2));
  CHECK(self.note == "identity intertwines");

  const Matrix psi{{1, 1}, {0, 1}};
  const LeibnizRep conj = conjugate_rep(adj, psi);
  const EquivalenceVerdict v = decide_equivalence_leibniz(adj, conj);
  CHECK(v.status == Equivalence::equivalent);
  REQUIRE(v.witness);
  CHECK(intertwining_defects(adj, conj, *v.witness).passed());
  CHECK_FALSE(det(*v.witness).is_zero());
  CHECK(first_nonzero(*v.witness) == Rational(1));

  const EquivalenceVerdict no = decide_equivalence_leibniz(adj, LeibnizRep::zero(l2, 2));
  CHECK(no.status == Equivalence::not_equivalent);
  CHECK_FALSE(no.witness);
  CHECK(no.note.find("vanishes on the whole grid {0..2}^2") != std::string::npos);

  const EquivalenceVerdict dims =
      decide_equivalence_leibniz(LeibnizRep::zero(l2, 2), LeibnizRep::zero(l2, 3));
  CHECK(dims.status == Equivalence::not_equivalent);
  CHECK(dims.note == "dimension mismatch: 2 vs 3");

  // adjoint vs its dual: l(e0) = E10 against -E01 has no invertible solution.
  const EquivalenceVerdict ad = decide_equivalence_leibniz(adj, dual_rep(adj));
  CHECK(ad.status == Equivalence::not_equivalent);
}

TEST_CASE("zero intertwiner space is reported directly") {
  const Algebra ab = catalog("abelian:1");
  LeibnizRep a = LeibnizRep::zero(ab, 1);
  LeibnizRep b = LeibnizRep::zero(ab, 1);
  a.l[0] = Matrix{{1}};
  a.r[0] = Matrix{{-1}};
  b.l[0] = Matrix{{2}};
  b.r[0] = Matrix{{-2}};
  REQUIRE(check_leibniz_rep(a).passed());
  REQUIRE(check_leibniz_rep(b).passed());
  const EquivalenceVerdict v = decide_equivalence_leibniz(a, b);
  CHECK(v.status == Equivalence::not_equivalent);
  CHECK(v.note == "intertwiner space is zero");
}

TEST_CASE("decider recovers random conjugates") {
  RationalGen gen(77);
  for (const auto& a : testing::catalog_corpus()) {
    const LeibnizRep adj = adjoint_rep(a);
    for (int trial = 0; trial < 3; ++trial) {
      const Matrix psi = gen.invertible(a.dim());
      const LeibnizRep conj = conjugate_rep(adj, psi);
      CAPTURE(a.name);
      const EquivalenceVerdict v = decide_equivalence_leibniz(adj, conj);
      REQUIRE(v.status == Equivalence::equivalent);
      CHECK(intertwining_defects(adj, conj, *v.witness).passed());
      CHECK(first_nonzero(*v.witness) == Rational(1));
      CHECK(decide_equivalence_leibniz(conj, adj).status == Equivalence::equivalent);
    }
  }
}

TEST_CASE("decider is symmetric and deterministic") {
  for (const auto& a : testing::catalog_corpus()) {
    const auto reps = testing::rep_corpus(a, 3, 1);
    for (const auto& x : reps)
      for (const auto& y : reps) {
        CAPTURE(a.name);
        CAPTURE(x.label);
        CAPTURE(y.label);
        const EquivalenceVerdict forward = decide_equivalence_leibniz(x.rep, y.rep);
        const EquivalenceVerdict backward = decide_equivalence_leibniz(y.rep, x.rep);
        CHECK(forward.status == backward.status);
        CHECK(forward.status != Equivalence::inconclusive);
        const EquivalenceVerdict again = decide_equivalence_leibniz(x.rep, y.rep);
        CHECK(again.status == forward.status);
        CHECK(again.note == forward.note);
        CHECK(again.witness == forward.witness);
      }
  }
}

TEST_CASE("transposing intertwiners between duals preserves dimension") {
  for (const auto& a : testing::catalog_corpus()) {
    const auto reps = testing::rep_corpus(a, 6, 1);
    for (const auto& x : reps)
      for (const auto& y : reps) {
        const IntertwinerSpace forward = intertwiner_space_leibniz(x.rep, y.rep);
        const LeibnizRep dx = dual_rep(x.rep), dy = dual_rep(y.rep);
        CHECK(forward.dimension() == intertwiner_space_leibniz(dy, dx).dimension());
        for (const auto& m : forward.basis) {
          CHECK(intertwining_defects(dy, dx, m.transpose()).passed());
        }
      }
  }
}

TEST_CASE("over-budget grids fall back to sampling") {
  const Algebra l2 = catalog("leibniz2");
  const LeibnizRep adj = adjoint_rep(l2);
  EquivalenceOptions tiny;
  tiny.grid_budget = 1;

  const EquivalenceVerdict v = decide_equivalence_leibniz(adj, LeibnizRep::zero(l2, 2), tiny);
  CHECK(v.status == Equivalence::inconclusive);
  CHECK_FALSE(v.witness);

  const LeibnizRep conj = conjugate_rep(adj, Matrix{{1, 1}, {0, 1}});
  const EquivalenceVerdict w = decide_equivalence_leibniz(adj, conj, tiny);
  CHECK(w.status == Equivalence::equivalent);
  CHECK(w.note.rfind("random point", 0) == 0);
  CHECK(intertwining_defects(adj, conj, *w.witness).passed());
}

TEST_CASE("different algebras are rejected") {
  const LeibnizRep a = LeibnizRep::zero(catalog("abelian:2"), 2);
  const LeibnizRep b = LeibnizRep::zero(catalog("leibniz2"), 2);
  CHECK_THROWS_AS(intertwiner_space_leibniz(a, b), DomainError);
  CHECK_THROWS_AS(decide_equivalence_leibniz(a, b), DomainError);
  // Both of those have the zero LY algebra, so their induced reps are comparable.
  CHECK_NOTHROW(intertwiner_space_ly(induce_ly_rep(a), induce_ly_rep(b)));
  const LYRep s = induce_ly_rep(adjoint_rep(catalog("sl2")));
  const LYRep h = induce_ly_rep(adjoint_rep(catalog("heisenberg")));
  CHECK_THROWS_AS(intertwiner_space_ly(s, h), DomainError);
  CHECK_THROWS_AS(decide_equivalence_ly(s, h), DomainError);
}

TEST_CASE("LY intertwiners and equivalence") {
  const Algebra sl2 = catalog("sl2");
  const LYRep adj = ly_adjoint_rep(leibniz_to_ly(sl2));
  const EquivalenceVerdict self = decide_equivalence_ly(adj, adj);
  CHECK(self.status == Equivalence::equivalent);
  CHECK(*self.witness == Matrix::identity(3));

  const LYRep z2 = LYRep::zero(leibniz_to_ly(catalog("leibniz2")), 2);
  const LYRep z3 = LYRep::zero(leibniz_to_ly(catalog("leibniz2")), 3);
  const EquivalenceVerdict dims = decide_equivalence_ly(z2, z3);
  CHECK(dims.status == Equivalence::not_equivalent);
  CHECK(dims.note == "dimension mismatch: 2 vs 3");
  CHECK(intertwiner_space_ly(z2, z3).dimension() == 6);

  // The induced adjoint of leibniz2 is the zero LY representation.
  const LYRep ind = induce_ly_rep(adjoint_rep(catalog("leibniz2")));
  CHECK(decide_equivalence_ly(ind, z2).status == Equivalence::equivalent);

  RationalGen gen(19);
  const Matrix psi = gen.invertible(3);
  const LYRep from_conj = induce_ly_rep(conjugate_rep(adjoint_rep(sl2), psi));
  const EquivalenceVerdict v = decide_equivalence_ly(induce_ly_rep(adjoint_rep(sl2)), from_conj);
  REQUIRE(v.status == Equivalence::equivalent);
  CHECK(intertwining_defects(induce_ly_rep(adjoint_rep(sl2)), from_conj, *v.witness, false).passed());

  // D is not constrained by the intertwiner space.
  LYRep d_changed = z2;
  d_changed.d(0, 0) = E10;
  CHECK(intertwiner_space_ly(z2, d_changed).dimension() == 4);
}

TEST_CASE("verify_induced_equivalence") {
  const LeibnizRep adj = adjoint_rep(catalog("leibniz2"));
  const InducedEquivalenceReport id = verify_induced_equivalence(adj, adj, Matrix::identity(2));
  CHECK(id.passed);
  CHECK(id.defects.passed());
  CHECK(id.d_intertwined);

  const Matrix psi{{1, 0}, {0, 2}};
  const LeibnizRep conj = conjugate_rep(adj, psi);
  CHECK(verify_induced_equivalence(adj, conj, psi).passed);

  CHECK_THROWS_AS(verify_induced_equivalence(adj, conj, Matrix{{1, 0}, {0, 3}}), PreconditionError);
  CHECK_THROWS_AS(verify_induced_equivalence(adj, adj, Matrix{{1, 1}, {1, 1}}), PreconditionError);
  CHECK_THROWS_AS(verify_induced_equivalence(adj, adj, Matrix::identity(3)), PreconditionError);
}

TEST_CASE("equivalence transfers to induced representations across the corpus") {
  RationalGen gen(29);
  std::vector<Algebra> corpus = testing::catalog_corpus();
  for (auto& a : testing::random_corpus(25)) corpus.push_back(std::move(a));
  for (const auto& a : corpus) {
    for (const auto& [label, rep] : testing::rep_corpus(a, 31, 0)) {
      CAPTURE(a.name);
      CAPTURE(label);
      for (int trial = 0; trial < 3; ++trial) {
        const Matrix psi = gen.invertible(rep.dim_v);
        const LeibnizRep other = conjugate_rep(rep, psi);
        const InducedEquivalenceReport report = verify_induced_equivalence(rep, other, psi);
        CHECK(report.passed);
        CHECK(report.d_intertwined);
        const EquivalenceVerdict v =
            decide_equivalence_ly(induce_ly_rep(rep), induce_ly_rep(other));
        CHECK(v.status == Equivalence::equivalent);
      }
    }
  }
}
