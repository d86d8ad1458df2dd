#pragma once

// Finite sets of mod-linear functions deciding whether a lattice in the class
// meets an integer box [a, b]: the box holds a lattice point iff every
// function is nonnegative at (a, b).

#include <cstdint>
#include <optional>
#include <vector>

#include "zfarkas/eclass.hpp"
#include "zfarkas/modlin.hpp"

namespace zfarkas {

/// Integer box a <= x <= b.
struct Box {
  IntVector lower;
  IntVector upper;

  /// Throws DimensionMismatch on unequal lengths and InvalidArgument when
  /// some lower bound exceeds its upper bound.
  Box(IntVector a, IntVector b);

  Index dim() const { return lower.size(); }
  bool contains(const IntVector& x) const;
};

struct CertificateSet {
  Index n = 0;
  Index rank = 0;
  std::vector<ModLinExpr> exprs;
};

/// Bounds of the image coordinates of L_v, indexed like LvIndexMap. Pair
/// bounds may cross (lower > upper); the child decision then fails.
struct ReducedBox {
  IntVector lower;
  IntVector upper;
};

struct ReducedBoundExprs {
  std::vector<ModLinExpr> lower;
  std::vector<ModLinExpr> upper;
};

/// Certificates for the rank-one lattice Zv in Z^n: for every ordered pair
/// (i, j) of support coordinates the gap between the upper t-bound from j
/// and the lower t-bound from i, and -a_k, b_k for each zero coordinate k.
CertificateSet rank1_certificates(const DivisorVector& div, Index n);

/// Mod-linear expressions for the bounds a_ij, b_ij of each pair coordinate
/// (and a_i, b_i for zero coordinates) of the image box.
ReducedBoundExprs reduced_bounds_exprs(const DivisorVector& div, const LvIndexMap& map);

/// Numeric counterpart of reduced_bounds_exprs.
ReducedBox reduced_box(const DivisorVector& div, const LvIndexMap& map, const IntVector& a,
                       const IntVector& b);

/// The full certificate set for the certified lattice.
CertificateSet generate_certificates(const EClassCertificate& cert);

Int evaluate(const ModLinExpr& e, const IntVector& a, const IntVector& b);

/// True iff every expression is nonnegative at the box bounds.
bool feasible_by_certificates(const CertificateSet& set, const Box& box);

/// A lattice point in the box, built level by level along the certificate
/// (smallest feasible multiple of v at each level), or nullopt.
std::optional<IntVector> solve_box(const EClassCertificate& cert, const Box& box);

inline constexpr std::uint64_t kDefaultOracleCap = 1'000'000;

/// First lattice point of the box in lexicographic order, by exhaustive scan.
/// Throws ResourceLimit when the box holds more than `cap` integer points.
std::optional<IntVector> brute_force_solve(const Lattice& lattice, const Box& box,
                                           std::uint64_t cap = kDefaultOracleCap);

}  // namespace zfarkas
