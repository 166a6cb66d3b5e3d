#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leibniz/algebra.hpp"
#include "support.hpp"

using namespace leibniz;
using leibniz::testing::RationalGen;

namespace {

// x.(y.z) - (x.y).z - y.(x.z), evaluated pointwise on arbitrary vectors.
Vector leibniz_defect(const Algebra& a, const Vector& x, const Vector& y, const Vector& z) {
  using testing::sub;
  const Vector lhs = a.multiply(x, a.multiply(y, z));
  return sub(sub(lhs, a.multiply(a.multiply(x, y), z)), a.multiply(y, a.multiply(x, z)));
}

Algebra from_constants(std::size_t n, std::initializer_list<std::tuple<int, int, int, int>> c) {
  Tensor3 t(n);
  for (auto [i, j, k, v] : c) t(i, j, k) = v;
  return Algebra(std::move(t));
}

}  // namespace

TEST_CASE("check_left_leibniz examples") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(check_left_leibniz(Algebra(Tensor3(n))).passed());
  }
  CHECK(check_left_leibniz(from_constants(2, {{0, 0, 1, 1}})).passed());

  const AxiomReport bad = check_left_leibniz(from_constants(1, {{0, 0, 0, 1}}));
  REQUIRE(bad.violations().size() == 1);
  CHECK(bad.violations()[0].axiom == "leibniz");
  CHECK(bad.violations()[0].indices == std::vector<std::size_t>{0, 0, 0});
  CHECK(bad.violations()[0].defect == Vector{Rational(-1)});
}

TEST_CASE("check_left_leibniz locates a perturbed sl2 constant") {
  Algebra a = catalog("sl2");
  a.product(0, 1, 2) += 1;  // [e,f] = 2h now
  const AxiomReport report = check_left_leibniz(a);
  REQUIRE_FALSE(report.passed());
  // Brute-force over all basis triples with the pointwise evaluator.
  std::vector<std::vector<std::size_t>> expected;
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y)
      for (std::size_t z = 0; z < 3; ++z) {
        const Vector d =
            leibniz_defect(a, unit_vector(3, x), unit_vector(3, y), unit_vector(3, z));
        if (!is_zero(d)) expected.push_back({x, y, z});
      }
  std::vector<std::vector<std::size_t>> got;
  for (const auto& v : report.violations()) got.push_back(v.indices);
  CHECK(got == expected);
  for (const auto& v : report.violations()) {
    CHECK(v.defect == leibniz_defect(a, unit_vector(3, v.indices[0]), unit_vector(3, v.indices[1]),
                                     unit_vector(3, v.indices[2])));
  }
}

TEST_CASE("basis check agrees with random-vector evaluation") {
  RationalGen gen(99);
  std::vector<Algebra> corpus = testing::catalog_corpus();
  for (auto& a : testing::random_corpus(10)) corpus.push_back(std::move(a));
  for (const auto& a : corpus) {
    REQUIRE(check_left_leibniz(a).passed());
    for (int s = 0; s < 20; ++s) {
      const std::size_t n = a.dim();
      CHECK(is_zero(leibniz_defect(a, gen.vector(n), gen.vector(n), gen.vector(n))));
    }
  }
  // And a failing algebra shows a nonzero defect on generic vectors.
  const Algebra bad = from_constants(2, {{0, 0, 0, 1}, {0, 1, 1, 1}});
  REQUIRE_FALSE(check_left_leibniz(bad).passed());
  bool seen_nonzero = false;
  for (int s = 0; s < 20; ++s) {
    seen_nonzero = seen_nonzero || !is_zero(leibniz_defect(bad, gen.vector(2), gen.vector(2),
                                                           gen.vector(2)));
  }
  CHECK(seen_nonzero);
}

TEST_CASE("catalog") {
  const Algebra ab = catalog("abelian:3");
  CHECK(ab.dim() == 3);
  CHECK(ab.product.is_zero());
  CHECK(ab.verified);

  const Algebra l2 = catalog("leibniz2");
  CHECK(l2.verified);
  CHECK_FALSE(is_zero(l2.product.fiber(0, 0)));  // e0.e0 != 0, so not Lie

  const Algebra sl2 = catalog("sl2");
  CHECK(sl2.verified);
  for (std::size_t i = 0; i < 3; ++i) CHECK(is_zero(sl2.product.fiber(i, i)));
  // [h,e] = 2e, [h,f] = -2f, [e,f] = h
  CHECK(sl2.multiply(unit_vector(3, 2), unit_vector(3, 0)) == testing::scale(unit_vector(3, 0), 2));
  CHECK(sl2.multiply(unit_vector(3, 2), unit_vector(3, 1)) ==
        testing::scale(unit_vector(3, 1), -2));
  CHECK(sl2.multiply(unit_vector(3, 0), unit_vector(3, 1)) == unit_vector(3, 2));

  const Algebra h = catalog("heisenberg");
  CHECK(h.verified);
  CHECK(h.multiply(unit_vector(3, 0), unit_vector(3, 1)) == unit_vector(3, 2));
  CHECK(h.multiply(unit_vector(3, 1), unit_vector(3, 0)) == testing::scale(unit_vector(3, 2), -1));

  for (const char* bad : {"nope", "abelian:", "abelian:0", "abelian:x", "abelian:02", "sl3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(catalog(bad), LookupError);
  }
}

TEST_CASE("leibniz_to_ly examples") {
  const LYAlgebra ab = leibniz_to_ly(catalog("abelian:2"));
  CHECK(ab.binary.is_zero());
  CHECK(ab.ternary.is_zero());

  const LYAlgebra l2 = leibniz_to_ly(catalog("leibniz2"));
  CHECK(l2.binary.is_zero());
  CHECK(l2.ternary.is_zero());

  const Algebra sl2 = catalog("sl2");
  const LYAlgebra ly = leibniz_to_ly(sl2);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t k = 0; k < 3; ++k) {
        CHECK(ly.binary(i, j, k) == sl2.product(i, j, k) - sl2.product(j, i, k));
        CHECK(ly.binary(i, j, k) == Rational(2) * sl2.product(i, j, k));
        const auto ei = unit_vector(3, i), ej = unit_vector(3, j), ek = unit_vector(3, k);
        const Vector expected = testing::scale(sl2.multiply(sl2.multiply(ei, ej), ek), -1);
        CHECK(ly.triple(ei, ej, ek) == expected);
        const auto fiber = ly.ternary.fiber(i, j, k);
        CHECK(Vector(fiber.begin(), fiber.end()) == expected);
      }
    }

  try {
    leibniz_to_ly(from_constants(1, {{0, 0, 0, 1}}));
    FAIL("expected NotLeibnizError");
  } catch (const NotLeibnizError& e) {
    CHECK(e.report().violations().size() == 1);
  }
}

TEST_CASE("ternary bracket matches two pointwise products on random vectors") {
  RationalGen gen(3);
  for (const auto& a : testing::random_corpus(8)) {
    const LYAlgebra ly = leibniz_to_ly(a);
    const std::size_t n = a.dim();
    for (int s = 0; s < 5; ++s) {
      const Vector x = gen.vector(n), y = gen.vector(n), z = gen.vector(n);
      CHECK(ly.triple(x, y, z) == testing::scale(a.multiply(a.multiply(x, y), z), -1));
      CHECK(ly.bracket(x, y) == testing::sub(a.multiply(x, y), a.multiply(y, x)));
    }
  }
}

TEST_CASE("check_ly examples") {
  CHECK(check_ly(LYAlgebra(Tensor3(3), Tensor4(3))).passed());
  CHECK(check_ly(leibniz_to_ly(catalog("leibniz2"))).passed());

  Tensor3 sym(2);
  sym(0, 1, 0) = 1;
  sym(1, 0, 0) = 1;
  const AxiomReport r = check_ly(LYAlgebra(sym, Tensor4(2)));
  const auto ly01 = r.of("LY01");
  REQUIRE(ly01.size() == 1);
  CHECK(ly01[0].indices == std::vector<std::size_t>{0, 1});
  CHECK(ly01[0].defect == Vector{Rational(2), Rational(0)});

  CHECK_THROWS_AS(check_ly(LYAlgebra(Tensor3(7), Tensor4(7))), ShapeError);
  LYCheckOptions wide;
  wide.ly4_max_dim = 7;
  CHECK(check_ly(LYAlgebra(Tensor3(7), Tensor4(7)), wide).passed());
}

TEST_CASE("check_ly catches a perturbed ternary bracket") {
  LYAlgebra ly = leibniz_to_ly(catalog("sl2"));
  REQUIRE(check_ly(ly).passed());
  ly.ternary(0, 1, 2, 0) += 1;
  const AxiomReport r = check_ly(ly);
  CHECK_FALSE(r.passed());
  CHECK(r.violates("LY02"));
  // Early exit keeps LY4 to at most one entry.
  CHECK(r.of("LY4").size() <= 1);
  LYCheckOptions all;
  all.ly4_early_exit = false;
  CHECK(check_ly(ly, all).of("LY4").size() >= r.of("LY4").size());
}

TEST_CASE("associated LY algebras satisfy the LY axioms") {
  for (const auto& a : testing::catalog_corpus()) {
    CAPTURE(a.name);
    CHECK(check_ly(leibniz_to_ly(a)).passed());
  }
  for (const auto& a : testing::random_corpus(25)) {
    CAPTURE(a.name);
    CHECK(check_ly(leibniz_to_ly(a)).passed());
  }
}

TEST_CASE("random_leibniz") {
  for (std::uint64_t seed : {1u, 2u, 3u, 42u}) {
    const auto a = random_leibniz(1, seed, 100000);
    REQUIRE(a.has_value());
    CHECK(a->product.is_zero());
  }
  const auto first = random_leibniz(2, 1234, 1000);
  const auto second = random_leibniz(2, 1234, 1000);
  REQUIRE(first.has_value());
  REQUIRE(second.has_value());
  CHECK(first->product == second->product);
  CHECK(first->verified);
  CHECK(check_left_leibniz(*first).passed());
  CHECK_FALSE(random_leibniz(2, 1234, 0).has_value());

  // The generator reaches nonzero algebras in every dimension above one.
  for (std::size_t dim = 2; dim <= 4; ++dim) {
    bool nonzero = false;
    for (std::uint64_t seed = 1; seed < 40 && !nonzero; ++seed) {
      const auto a = random_leibniz(dim, seed, 1000);
      nonzero = a && !a->product.is_zero();
    }
    CHECK(nonzero);
  }
}
