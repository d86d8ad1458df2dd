#pragma once

// Seeded generators shared by the unit and acceptance tests.

#include <cstdint>
#include <random>
#include <vector>

#include "zfarkas/exactnum.hpp"
#include "zfarkas/lattice.hpp"

namespace zfarkas::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long long uniform(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng_);
  }
  bool coin() { return uniform(0, 1) == 1; }

  Int integer(long long lo, long long hi) { return Int(uniform(lo, hi)); }

  Int nonzero(long long lo, long long hi) {
    for (;;) {
      const long long x = uniform(lo, hi);
      if (x != 0) return Int(x);
    }
  }

  Rat rational(long long num_bound, long long den_max) {
    return Rat(Int(uniform(-num_bound, num_bound)), Int(uniform(1, den_max)));
  }

  IntVector int_vector(Index n, long long lo, long long hi) {
    IntVector v(n);
    for (Index i = 0; i < n; ++i) v(i) = integer(lo, hi);
    return v;
  }

  IntMatrix int_matrix(Index rows, Index cols, long long lo, long long hi) {
    IntMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i)
      for (Index j = 0; j < cols; ++j) m(i, j) = integer(lo, hi);
    return m;
  }

  RatMatrix rat_matrix(Index rows, Index cols, long long num_bound, long long den_max) {
    RatMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i)
      for (Index j = 0; j < cols; ++j) m(i, j) = rational(num_bound, den_max);
    return m;
  }

  /// Generators are rows; `gens` of them with entries in [lo, hi].
  Lattice lattice(Index n, Index gens, long long lo, long long hi) {
    return Lattice::from_generators(n, int_matrix(gens, n, lo, hi));
  }

  /// Random lower/upper pair with each lower <= upper.
  std::pair<IntVector, IntVector> box(Index n, long long lo, long long hi) {
    IntVector a(n), b(n);
    for (Index i = 0; i < n; ++i) {
      long long x = uniform(lo, hi), y = uniform(lo, hi);
      if (x > y) std::swap(x, y);
      a(i) = Int(x);
      b(i) = Int(y);
    }
    return {a, b};
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// A random member of the lattice with basis coefficients in [-c, c].
inline IntVector random_member(Gen& g, const Lattice& l, long long c) {
  IntVector w = IntVector::Zero(l.ambient_dim());
  for (Index k = 0; k < l.rank(); ++k) w += Int(g.uniform(-c, c)) * l.basis_vector(k);
  return w;
}

}  // namespace zfarkas::testing
