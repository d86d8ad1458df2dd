#include "zfarkas/relations.hpp"

#include <optional>

#include "zfarkas/rational_linalg.hpp"

namespace zfarkas {

VectorFamily sub_family(const VectorFamily& family, const std::vector<Index>& indices) {
  VectorFamily out(family.rows(), static_cast<Index>(indices.size()));
  for (std::size_t k = 0; k < indices.size(); ++k) out.col(static_cast<Index>(k)) = family.col(indices[k]);
  return out;
}

std::optional<Circuit> circuit_on(const VectorFamily& family, const std::vector<Index>& subset) {
  const RatMatrix kernel = kernel_basis<Rat>(sub_family(family, subset));
  if (kernel.cols() != 1) return std::nullopt;
  for (Index k = 0; k < kernel.rows(); ++k) {
    if (kernel(k, 0).is_zero()) return std::nullopt;
  }
  Int den(1);
  for (Index k = 0; k < kernel.rows(); ++k) den = lcm(den, kernel(k, 0).den());
  std::vector<Int> coeffs;
  Int g(0);
  for (Index k = 0; k < kernel.rows(); ++k) {
    coeffs.push_back(kernel(k, 0).num() * exact_div(den, kernel(k, 0).den()));
    g = gcd(g, coeffs.back());
  }
  const bool flip = coeffs.front().sign() < 0;
  for (auto& c : coeffs) {
    c = exact_div(c, g);
    if (flip) c = -c;
  }
  return Circuit{subset, std::move(coeffs)};
}

std::vector<Circuit> circuits(const VectorFamily& family, const RelationLimits& limits) {
  const Index m = family.cols();
  if (m > limits.max_vectors) {
    throw ResourceLimit("circuit enumeration limited to " + std::to_string(limits.max_vectors) +
                        " vectors, got " + std::to_string(m));
  }
  const Index rank = matrix_rank<Rat>(family);
  if (rank > limits.max_rank) {
    throw ResourceLimit("circuit enumeration limited to rank " + std::to_string(limits.max_rank) +
                        ", got " + std::to_string(rank));
  }
  // A circuit is minimally dependent, so its size is at most rank + 1.
  const Index max_size = std::min(m, rank + 1);
  std::vector<Circuit> out;
  std::vector<Index> subset;
  // Lexicographic enumeration of subsets of size <= max_size.
  auto visit = [&](auto&& self, Index next) -> void {
    if (!subset.empty()) {
      if (auto c = circuit_on(family, subset)) out.push_back(std::move(*c));
    }
    if (static_cast<Index>(subset.size()) == max_size) return;
    for (Index i = next; i < m; ++i) {
      subset.push_back(i);
      self(self, i + 1);
      subset.pop_back();
    }
  };
  visit(visit, 0);
  return out;
}

PrimeSet prime_set(const std::vector<Circuit>& circuits) {
  PrimeSet out;
  for (const auto& c : circuits) {
    for (const auto& coeff : c.coeffs) out = out.united(prime_factors(coeff));
  }
  return out;
}

PrimeSet prime_set(const VectorFamily& family, const RelationLimits& limits) {
  return prime_set(circuits(family, limits));
}

}  // namespace zfarkas
