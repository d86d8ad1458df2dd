#pragma once

// Membership in the recursive lattice class E_n: a lattice belongs to the
// class when it holds a nonzero vector v dividing every member coordinatewise
// and the image of the lattice under the pairwise-quotient map L_v is zero or
// again in the class.

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "zfarkas/exactnum.hpp"
#include "zfarkas/lattice.hpp"

namespace zfarkas {

/// Coordinates of v split by sign. Indices are 0-based and ascending.
struct SignPartition {
  std::vector<Index> pos;
  std::vector<Index> neg;
  std::vector<Index> zero;

  static SignPartition of(const IntVector& v);

  Index support_size() const { return static_cast<Index>(pos.size() + neg.size()); }
  /// pos and neg merged in ascending index order.
  std::vector<Index> support() const;
};

/// A member v of a lattice with v_i | w_i for all members w and all i with
/// v_i != 0.
struct DivisorVector {
  IntVector v;
  SignPartition partition;

  explicit DivisorVector(IntVector vec);
};

/// Output layout of L_v: all pairs (i, j), i < j, in the support of v in
/// lexicographic order, followed by the zero coordinates of v.
struct LvIndexMap {
  std::vector<std::pair<Index, Index>> pair_coords;
  std::vector<Index> zero_coords;

  static LvIndexMap of(const SignPartition& partition);

  Index output_dim() const { return static_cast<Index>(pair_coords.size() + zero_coords.size()); }
};

/// Recursive witness that a lattice is in the class. A null child means the
/// image under L_v is the zero lattice.
struct EClassCertificate {
  Lattice lattice;
  DivisorVector divisor;
  LvIndexMap index_map;
  std::shared_ptr<const EClassCertificate> child;

  Index chain_length() const { return child ? 1 + child->chain_length() : 1; }
};

struct CertifyOptions {
  /// Images of larger ambient dimension are not explored.
  Index max_ambient_dim = 64;
  /// Divisor candidates are enumerated over 2^s sign patterns; larger s is not explored.
  Index max_support = 20;
};

/// All v in L dividing every member of L, in lexicographic sign-pattern
/// order (+ before -, first support coordinate varying slowest).
/// Throws InvalidArgument for the zero lattice and ResourceLimit when the
/// support of the projection gcds exceeds max_support.
std::vector<DivisorVector> divisor_candidates(const Lattice& lattice,
                                              Index max_support = CertifyOptions{}.max_support);

/// t -> (t_i / v_i - t_j / v_j for each pair, then t_i for each zero coordinate).
/// Throws PreconditionViolated when v_i does not divide t_i.
IntVector lv_apply(const DivisorVector& div, const LvIndexMap& map, const IntVector& t);

Lattice lv_image(const Lattice& lattice, const DivisorVector& div);

/// Depth-first search for a certificate. Returns nullopt when the lattice is
/// provably not in the class. Throws InvalidArgument for the zero lattice and
/// ResourceLimit when no certificate was found but part of the search space
/// was cut off by the options.
std::optional<EClassCertificate> certify(const Lattice& lattice, const CertifyOptions& options = {});

}  // namespace zfarkas
