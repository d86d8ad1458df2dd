#pragma once

// Box-constrained solutions of sum x_i v_i = w over Q and over the
// localized ring Q_P, where P is the prime set of the family's circuits.

#include <cstdint>
#include <optional>
#include <vector>

#include "zfarkas/exactnum.hpp"
#include "zfarkas/relations.hpp"

namespace zfarkas {

/// A point x with sum x_i v_i = w and lower <= x <= upper, by Fourier-Motzkin
/// elimination in ascending variable order (equalities are used for
/// substitution first). Back-substitution takes the smallest admissible value
/// of each variable.
std::optional<RatVector> rational_box_solve(const VectorFamily& vectors, const RatVector& target,
                                            const RatVector& lower, const RatVector& upper);

/// Coefficients in Q_P expressing the target in the Q_P-span of the family,
/// or nullopt. Computed through the Smith form of the denominator-cleared
/// system; free coordinates are set to zero.
std::optional<RatVector> qp_solve_exact(const VectorFamily& vectors, const RatVector& target,
                                        const PrimeSet& primes);

struct QpBoxInstance {
  VectorFamily vectors;
  RatVector target;
  RatVector lower;
  RatVector upper;
  PrimeSet primes;

  /// Validates shapes and lower <= upper, computes the prime set unless one is
  /// supplied, and checks that the bounds lie in Q_P. A supplied prime set
  /// must contain the family's prime set.
  /// Throws DimensionMismatch, InvalidArgument, BoundsNotInQp.
  static QpBoxInstance make(VectorFamily vectors, RatVector target, RatVector lower,
                            RatVector upper, std::optional<PrimeSet> primes = std::nullopt);
};

enum class RefinementCase { Base, Independent, Case1, Case2, IntegralFallback };

const char* to_string(RefinementCase c);

/// One step of the refinement recursion. Indices refer to the caller's family.
struct RefinementStep {
  RefinementCase kind = RefinementCase::Base;
  std::vector<Index> indices;
  /// Primes of the ring the step works in.
  PrimeSet ring;

  // Case2: clearing factor k, numerators N = k x, the circuit used, the
  // pivot coordinate, the chosen Q_P value for it and the shift r.
  Int k{1};
  RatVector numerators;
  std::optional<Circuit> circuit;
  Index pivot = -1;
  Rat pivot_value;
  Rat r;
  Index in_ring_before = 0;
  Index in_ring_after = 0;

  // Case1: the fixed coordinate and its value, the prime set P' of the rest,
  // the ring used for the rest, and the scaling M.
  Index fixed = -1;
  Rat fixed_value;
  PrimeSet reduced_primes;
  PrimeSet next_ring;
  Int scale{1};
};

struct RefinementTrace {
  std::vector<RefinementStep> steps;
};

struct Refinement {
  RatVector solution;
  RefinementTrace trace;
};

struct RefineOptions {
  /// Integer points examined by the integral fallback (empty prime set).
  std::uint64_t enumeration_cap = 1'000'000;
};

/// Turns a rational box solution x into one with every coordinate in Q_P.
/// Throws PreconditionViolated when x is not a solution or leaves the box,
/// NotInQpSpan when the target is outside the Q_P-span, and ResourceLimit
/// when the integral fallback exceeds its cap.
Refinement refine_to_qp(const QpBoxInstance& instance, const RatVector& x,
                        const RefineOptions& options = {});

enum class QpFailure { None, NotInSpan, NoRationalSolution };

const char* to_string(QpFailure f);

struct NearIntegersResult {
  std::optional<RatVector> solution;
  QpFailure reason = QpFailure::None;
  PrimeSet primes;
  std::optional<RatVector> rational_solution;
  RefinementTrace trace;
};

/// Decides whether the instance has a box solution in Q_P and produces one.
NearIntegersResult near_integers_solve(const QpBoxInstance& instance,
                                       const RefineOptions& options = {});

}  // namespace zfarkas
