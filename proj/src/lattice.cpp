#include "zfarkas/lattice.hpp"

#include <sstream>

namespace zfarkas {

namespace {

void check_length(const Lattice& l, const IntVector& w) {
  if (w.size() != l.ambient_dim()) {
    throw DimensionMismatch("vector of length " + std::to_string(w.size()) +
                            " for a lattice in Z^" + std::to_string(l.ambient_dim()));
  }
}

}  // namespace

Lattice::Lattice(Index ambient_dim) : ambient_dim_(ambient_dim), basis_(0, ambient_dim) {}

Lattice Lattice::from_generators(Index ambient_dim, const IntMatrix& gens) {
  if (gens.cols() != ambient_dim && gens.rows() > 0) {
    throw DimensionMismatch("generators have " + std::to_string(gens.cols()) +
                            " coordinates, expected " + std::to_string(ambient_dim));
  }
  Lattice l(ambient_dim);
  if (gens.rows() > 0) l.basis_ = hermite_normal_form<Int>(gens);
  return l;
}

bool Lattice::contains(const IntVector& w) const { return solve_integral(w).has_value(); }

std::optional<IntVector> Lattice::solve_integral(const IntVector& w) const {
  check_length(*this, w);
  return hermite_coordinates<Int>(basis_, w);
}

IntVector Lattice::projection_gcds() const {
  IntVector d = IntVector::Zero(ambient_dim_);
  for (Index i = 0; i < ambient_dim_; ++i) {
    for (Index k = 0; k < basis_.rows(); ++k) d(i) = gcd(d(i), basis_(k, i));
  }
  return d;
}

std::string Lattice::key() const {
  std::ostringstream os;
  os << ambient_dim_ << ':';
  for (Index k = 0; k < basis_.rows(); ++k) {
    for (Index i = 0; i < ambient_dim_; ++i) os << basis_(k, i) << ',';
    os << ';';
  }
  return os.str();
}

Lattice complement_of(const Lattice& lattice, const IntVector& v) {
  if (v.size() != lattice.ambient_dim()) {
    throw DimensionMismatch("complement_of: vector length does not match lattice");
  }
  if (v.isZero()) throw PreconditionViolated("complement_of: v must be nonzero");
  auto coords = lattice.solve_integral(v);
  if (!coords) throw PreconditionViolated("complement_of: v is not a member of the lattice");

  // c = u * [g 0 ... 0] * W with W unimodular; g = 1 iff L / Zv is torsion-free.
  // Then the first row of W is u * c, and the remaining rows of W, applied to
  // the basis, span a complement of Zv.
  IntMatrix c = coords->transpose();
  const auto s = smith_decompose(c);
  if (s.D(0, 0) != Int(1)) {
    throw PreconditionViolated("complement_of: quotient by Zv has torsion of order " +
                               s.D(0, 0).to_string());
  }
  const Index r = lattice.rank();
  IntMatrix rest = s.W.bottomRows(r - 1) * lattice.basis();
  return Lattice::from_generators(lattice.ambient_dim(), rest);
}

SmithForm<Int> smith_decompose(const IntMatrix& m) { return smith_decompose<Int>(m); }

}  // namespace zfarkas
