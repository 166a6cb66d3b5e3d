#include <array>
#include <charconv>
#include <random>

#include "leibniz/algebra.hpp"

namespace leibniz {

namespace {

constexpr std::array<std::string_view, 4> kCatalogNames = {"abelian:n", "leibniz2", "sl2",
                                                           "heisenberg"};

Algebra verified(Tensor3 product, std::string name) {
  Algebra a(std::move(product), std::move(name));
  a.verified = check_left_leibniz(a).passed();
  return a;
}

// Bounded draw from raw engine output. std::uniform_int_distribution is
// implementation-defined, which would make seeded corpora differ between
// standard libraries; the modulo bias is irrelevant at these ranges.
std::size_t draw(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>(rng() % bound);
}

}  // namespace

std::span<const std::string_view> catalog_names() { return kCatalogNames; }

Algebra catalog(const std::string& name) {
  constexpr std::string_view abelian_prefix = "abelian:";
  if (name.starts_with(abelian_prefix)) {
    const std::string_view digits = std::string_view(name).substr(abelian_prefix.size());
    std::size_t n = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size() || n == 0 ||
        digits.front() == '0') {
      throw LookupError("catalog: bad abelian dimension in '" + name + "'");
    }
    return verified(Tensor3(n), name);
  }
  if (name == "leibniz2") {
    Tensor3 c(2);
    c(0, 0, 1) = 1;
    return verified(std::move(c), name);
  }
  if (name == "sl2") {
    // Basis (e, f, h) = (e_0, e_1, e_2): [e,f] = h, [h,e] = 2e, [h,f] = -2f.
    Tensor3 c(3);
    c(0, 1, 2) = 1;
    c(1, 0, 2) = -1;
    c(2, 0, 0) = 2;
    c(0, 2, 0) = -2;
    c(2, 1, 1) = -2;
    c(1, 2, 1) = 2;
    return verified(std::move(c), name);
  }
  if (name == "heisenberg") {
    Tensor3 c(3);
    c(0, 1, 2) = 1;
    c(1, 0, 2) = -1;
    return verified(std::move(c), name);
  }
  throw LookupError("catalog: unknown algebra '" + name + "'");
}

std::optional<Algebra> random_leibniz(std::size_t dim, std::uint64_t seed,
                                      std::size_t max_attempts) {
  if (dim == 0) throw ShapeError("random_leibniz: dimension must be positive");
  std::mt19937_64 rng(seed);
  const std::size_t slots = dim * dim * dim;
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    Tensor3 c(dim);
    const std::size_t nonzero = 1 + draw(rng, dim);
    for (std::size_t s = 0; s < nonzero; ++s) {
      const std::size_t slot = draw(rng, slots);
      const long value = static_cast<long>(draw(rng, 5)) - 2;
      c(slot / (dim * dim), (slot / dim) % dim, slot % dim) = value;
    }
    Algebra a(std::move(c), "random:" + std::to_string(dim) + ":" + std::to_string(seed));
    if (check_left_leibniz(a).passed()) {
      a.verified = true;
      return a;
    }
  }
  return std::nullopt;
}

}  // namespace leibniz
