#pragma once

// Elementary integral relations (circuits) of a finite family of rational
// vectors, and the prime set they generate.

#include <optional>
#include <vector>

#include "zfarkas/exactnum.hpp"

namespace zfarkas {

/// A family v_1, ..., v_m in Q^n, stored as the columns of an n x m matrix.
using VectorFamily = RatMatrix;

/// A minimal-support primitive integral relation sum c_i v_i = 0.
///
/// support is ascending, coeffs[k] belongs to support[k], all coefficients
/// are nonzero with gcd one, and the first coefficient is positive.
struct Circuit {
  std::vector<Index> support;
  std::vector<Int> coeffs;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

struct RelationLimits {
  Index max_vectors = 20;
  Index max_rank = 8;
};

/// All circuits, ordered lexicographically by support. A zero vector v_i
/// gives the singleton circuit 1 * v_i = 0.
/// Throws ResourceLimit when the family exceeds the limits.
std::vector<Circuit> circuits(const VectorFamily& family, const RelationLimits& limits = {});

/// Primes dividing some coefficient of some circuit.
PrimeSet prime_set(const std::vector<Circuit>& circuits);
PrimeSet prime_set(const VectorFamily& family, const RelationLimits& limits = {});

/// The one-dimensional kernel of the sub-family on `subset`, made primitive
/// and sign-normalized, if the subset is a circuit support.
std::optional<Circuit> circuit_on(const VectorFamily& family, const std::vector<Index>& subset);

/// Columns of `family` listed in `indices`.
VectorFamily sub_family(const VectorFamily& family, const std::vector<Index>& indices);

}  // namespace zfarkas
