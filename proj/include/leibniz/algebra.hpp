#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "leibniz/axiom_report.hpp"
#include "leibniz/errors.hpp"
#include "leibniz/tensor.hpp"

namespace leibniz {

/// Finite-dimensional algebra given by structure constants of its product,
/// e_i . e_j = sum_k c[i][j][k] e_k.
///
/// `verified` is advisory: it records that check_left_leibniz passed when the
/// value was built, and consumers re-check whatever they rely on.
struct Algebra {
  Tensor3 product;
  std::string name;
  bool verified = false;

  Algebra() = default;
  explicit Algebra(Tensor3 product, std::string name = {})
      : product(std::move(product)), name(std::move(name)) {}

  std::size_t dim() const { return product.dim(); }
  Vector multiply(std::span<const Rational> x, std::span<const Rational> y) const {
    return bilinear_apply(product, x, y);
  }
  /// Same structure constants; the name is ignored.
  bool same_structure(const Algebra& o) const { return product == o.product; }
};

/// Lie-Yamaguti algebra: a binary bracket [,] and a ternary bracket [[,,]].
struct LYAlgebra {
  Tensor3 binary;
  Tensor4 ternary;
  std::string name;
  bool verified = false;

  LYAlgebra() = default;
  LYAlgebra(Tensor3 binary, Tensor4 ternary, std::string name = {});

  std::size_t dim() const { return binary.dim(); }
  Vector bracket(std::span<const Rational> x, std::span<const Rational> y) const {
    return bilinear_apply(binary, x, y);
  }
  Vector triple(std::span<const Rational> x, std::span<const Rational> y,
                std::span<const Rational> z) const {
    return trilinear_apply(ternary, x, y, z);
  }
  bool same_structure(const LYAlgebra& o) const {
    return binary == o.binary && ternary == o.ternary;
  }
};

/// Thrown when a construction needs a left Leibniz algebra and the input is
/// not one. Carries the failing report.
class NotLeibnizError : public PreconditionError {
 public:
  explicit NotLeibnizError(AxiomReport report);
  const AxiomReport& report() const { return report_; }

 private:
  AxiomReport report_;
};

/// Defect x.(y.z) - (x.y).z - y.(x.z) on every basis triple; axiom id
/// "leibniz". Trilinearity makes the basis check complete.
AxiomReport check_left_leibniz(const Algebra& a);

struct LYCheckOptions {
  /// LY4 ranges over n^5 basis tuples; above this dimension the check
  /// refuses to run.
  std::size_t ly4_max_dim = 6;
  /// Stop LY4 at its first violating tuple.
  bool ly4_early_exit = true;
};

/// Checks LY01, LY02, LY1, LY2, LY3 and LY4 on all basis tuples.
/// Throws ShapeError if dim exceeds options.ly4_max_dim.
AxiomReport check_ly(const LYAlgebra& l, const LYCheckOptions& options = {});

/// The natural LY structure on a left Leibniz algebra:
///   [x,y] = x.y - y.x,   [[x,y,z]] = -(x.y).z.
/// Throws NotLeibnizError when the input fails check_left_leibniz.
LYAlgebra leibniz_to_ly(const Algebra& a);

/// Named test algebras: "abelian:n", "leibniz2", "sl2", "heisenberg".
/// Throws LookupError for anything else.
Algebra catalog(const std::string& name);
std::span<const std::string_view> catalog_names();

/// Rejection sampling of a left Leibniz algebra. Each draw sets between 1 and
/// `dim` random structure constants to values in {-2,...,2}; the first draw
/// that passes check_left_leibniz is returned. Deterministic in `seed` on
/// every platform. Returns nullopt after `max_attempts` rejected draws.
std::optional<Algebra> random_leibniz(std::size_t dim, std::uint64_t seed,
                                      std::size_t max_attempts);

}  // namespace leibniz
