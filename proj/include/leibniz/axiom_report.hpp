#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "leibniz/matrix.hpp"

namespace leibniz {

/// One failed identity instance: which axiom, on which basis tuple, and the
/// (nonzero) defect. Matrix-valued defects are flattened row-major.
struct Violation {
  std::string axiom;
  std::vector<std::size_t> indices;
  Vector defect;

  friend bool operator==(const Violation&, const Violation&) = default;
};

class AxiomReport {
 public:
  bool passed() const { return violations_.empty(); }
  const std::vector<Violation>& violations() const { return violations_; }

  /// Records a violation unless the defect is zero.
  void check(std::string axiom, std::vector<std::size_t> indices, Vector defect);
  void check(std::string axiom, std::vector<std::size_t> indices, const Matrix& defect);

  void merge(const AxiomReport& other);
  /// Violations of a single axiom id, in report order.
  std::vector<Violation> of(const std::string& axiom) const;
  bool violates(const std::string& axiom) const;

  /// Stable order: first by axiom position in `axiom_order`, then by index
  /// tuple. Checkers call this before returning.
  void sort(const std::vector<std::string>& axiom_order);

 private:
  std::vector<Violation> violations_;
};

}  // namespace leibniz
