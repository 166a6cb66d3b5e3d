#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "leibniz/matrix.hpp"
#include "leibniz/rational.hpp"

namespace leibniz {

/// Cubic n x n x n array of structure constants, c[i][j][k].
///
/// Encodes a bilinear map by e_i * e_j = sum_k c[i][j][k] e_k.
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(std::size_t dim) : dim_(dim), entries_(dim * dim * dim) {}

  std::size_t dim() const { return dim_; }

  Rational& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return entries_[(i * dim_ + j) * dim_ + k];
  }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return entries_[(i * dim_ + j) * dim_ + k];
  }

  /// The coefficient vector of e_i * e_j.
  std::span<const Rational> fiber(std::size_t i, std::size_t j) const {
    return {entries_.data() + (i * dim_ + j) * dim_, dim_};
  }

  bool is_zero() const { return leibniz::is_zero(entries_); }
  friend bool operator==(const Tensor3&, const Tensor3&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> entries_;
};

/// n^4 array t[i][j][k][m] encoding a trilinear map.
class Tensor4 {
 public:
  Tensor4() = default;
  explicit Tensor4(std::size_t dim) : dim_(dim), entries_(dim * dim * dim * dim) {}

  std::size_t dim() const { return dim_; }

  Rational& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t m) {
    return entries_[((i * dim_ + j) * dim_ + k) * dim_ + m];
  }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k,
                             std::size_t m) const {
    return entries_[((i * dim_ + j) * dim_ + k) * dim_ + m];
  }

  std::span<const Rational> fiber(std::size_t i, std::size_t j, std::size_t k) const {
    return {entries_.data() + ((i * dim_ + j) * dim_ + k) * dim_, dim_};
  }

  bool is_zero() const { return leibniz::is_zero(entries_); }
  friend bool operator==(const Tensor4&, const Tensor4&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> entries_;
};

/// (x * y)_k = sum_{i,j} x_i y_j c[i][j][k]. Zero coordinates are skipped,
/// so basis-vector arguments cost O(n).
Vector bilinear_apply(const Tensor3& t, std::span<const Rational> x,
                      std::span<const Rational> y);

/// Full contraction of the first three slots of t with x, y, z.
Vector trilinear_apply(const Tensor4& t, std::span<const Rational> x,
                       std::span<const Rational> y, std::span<const Rational> z);

}  // namespace leibniz
