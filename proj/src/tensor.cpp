#include "leibniz/tensor.hpp"

#include "leibniz/errors.hpp"

namespace leibniz {

Vector bilinear_apply(const Tensor3& t, std::span<const Rational> x,
                      std::span<const Rational> y) {
  const std::size_t n = t.dim();
  if (x.size() != n || y.size() != n) throw ShapeError("bilinear_apply: vector length mismatch");
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Rational coeff = x[i] * y[j];
      const auto f = t.fiber(i, j);
      for (std::size_t k = 0; k < n; ++k) out[k].add_product(coeff, f[k]);
    }
  }
  return out;
}

Vector trilinear_apply(const Tensor4& t, std::span<const Rational> x,
                       std::span<const Rational> y, std::span<const Rational> z) {
  const std::size_t n = t.dim();
  if (x.size() != n || y.size() != n || z.size() != n) {
    throw ShapeError("trilinear_apply: vector length mismatch");
  }
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Rational xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (z[k].is_zero()) continue;
        const Rational coeff = xy * z[k];
        const auto f = t.fiber(i, j, k);
        for (std::size_t m = 0; m < n; ++m) out[m].add_product(coeff, f[m]);
      }
    }
  }
  return out;
}

}  // namespace leibniz
