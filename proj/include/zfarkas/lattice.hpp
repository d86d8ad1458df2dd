#pragma once

#include <optional>
#include <string>

#include "zfarkas/exactnum.hpp"
#include "zfarkas/normal_form.hpp"

namespace zfarkas {

/// A subgroup of Z^n, held by its canonical basis.
///
/// Basis vectors are the rows of basis(), kept in row-style Hermite normal
/// form, so two lattices compare equal iff they are the same subgroup.
class Lattice {
 public:
  /// The zero subgroup of Z^n.
  explicit Lattice(Index ambient_dim = 0);

  /// Z-span of the rows of `gens`. Throws DimensionMismatch if
  /// gens.cols() != ambient_dim.
  static Lattice from_generators(Index ambient_dim, const IntMatrix& gens);

  Index ambient_dim() const { return ambient_dim_; }
  Index rank() const { return basis_.rows(); }
  bool is_zero() const { return basis_.rows() == 0; }
  const IntMatrix& basis() const { return basis_; }
  IntVector basis_vector(Index k) const { return basis_.row(k).transpose(); }

  bool contains(const IntVector& w) const;

  /// Coordinates of w in basis(); nullopt when w is not in the lattice.
  std::optional<IntVector> solve_integral(const IntVector& w) const;

  /// d_i generates the projection of the lattice on coordinate i (d_i >= 0).
  IntVector projection_gcds() const;

  /// Stable textual key, usable for memoization.
  std::string key() const;

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
  }

 private:
  Index ambient_dim_;
  IntMatrix basis_;
};

/// A subgroup B with L = B (+) Zv.
///
/// Throws PreconditionViolated when v is zero or not in L, and when L / Zv has
/// torsion (the coordinates of v in the basis are not coprime).
Lattice complement_of(const Lattice& lattice, const IntVector& v);

/// Smith decomposition M = U * D * W over the integers.
SmithForm<Int> smith_decompose(const IntMatrix& m);

}  // namespace zfarkas
