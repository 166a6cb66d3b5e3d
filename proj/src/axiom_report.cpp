#include "leibniz/axiom_report.hpp"

#include <algorithm>
#include <iterator>

namespace leibniz {

void AxiomReport::check(std::string axiom, std::vector<std::size_t> indices, Vector defect) {
  if (is_zero(defect)) return;
  violations_.push_back({std::move(axiom), std::move(indices), std::move(defect)});
}

void AxiomReport::check(std::string axiom, std::vector<std::size_t> indices,
                        const Matrix& defect) {
  if (defect.is_zero()) return;
  const auto e = defect.entries();
  violations_.push_back({std::move(axiom), std::move(indices), Vector(e.begin(), e.end())});
}

void AxiomReport::merge(const AxiomReport& other) {
  violations_.insert(violations_.end(), other.violations_.begin(), other.violations_.end());
}

std::vector<Violation> AxiomReport::of(const std::string& axiom) const {
  std::vector<Violation> out;
  std::copy_if(violations_.begin(), violations_.end(), std::back_inserter(out),
               [&](const Violation& v) { return v.axiom == axiom; });
  return out;
}

bool AxiomReport::violates(const std::string& axiom) const {
  return std::any_of(violations_.begin(), violations_.end(),
                     [&](const Violation& v) { return v.axiom == axiom; });
}

void AxiomReport::sort(const std::vector<std::string>& axiom_order) {
  auto rank_of = [&](const std::string& a) {
    return static_cast<std::size_t>(std::find(axiom_order.begin(), axiom_order.end(), a) -
                                    axiom_order.begin());
  };
  std::stable_sort(violations_.begin(), violations_.end(),
                   [&](const Violation& a, const Violation& b) {
                     const auto ra = rank_of(a.axiom);
                     const auto rb = rank_of(b.axiom);
                     if (ra != rb) return ra < rb;
                     return a.indices < b.indices;
                   });
}

}  // namespace leibniz
