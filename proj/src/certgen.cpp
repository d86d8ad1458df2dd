#include "zfarkas/certgen.hpp"

#include <algorithm>

#include "zfarkas/rational_linalg.hpp"

namespace zfarkas {

Box::Box(IntVector a, IntVector b) : lower(std::move(a)), upper(std::move(b)) {
  if (lower.size() != upper.size()) throw DimensionMismatch("box bounds differ in length");
  for (Index i = 0; i < lower.size(); ++i) {
    if (lower(i) > upper(i)) {
      throw InvalidArgument("box lower bound exceeds upper bound at coordinate " +
                            std::to_string(i + 1));
    }
  }
}

bool Box::contains(const IntVector& x) const {
  if (x.size() != dim()) return false;
  for (Index i = 0; i < dim(); ++i) {
    if (x(i) < lower(i) || x(i) > upper(i)) return false;
  }
  return true;
}

namespace {

// For a support coordinate i, x_i = t v_i + y_i lies in [a_i, b_i] iff the
// integer t + y_i / v_i lies in [lo_i, hi_i]: the bounds swap roles when
// v_i < 0.
ModLinExpr lower_t_expr(const IntVector& v, Index i) {
  auto src = v(i).sign() > 0 ? ModLinExpr::input_a(i) : ModLinExpr::input_b(i);
  return ModLinExpr::ceil_div(std::move(src), v(i));
}

ModLinExpr upper_t_expr(const IntVector& v, Index i) {
  auto src = v(i).sign() > 0 ? ModLinExpr::input_b(i) : ModLinExpr::input_a(i);
  return ModLinExpr::floor_div(std::move(src), v(i));
}

Int lower_t(const IntVector& v, Index i, const IntVector& a, const IntVector& b) {
  return ceil_div(v(i).sign() > 0 ? a(i) : b(i), v(i));
}

Int upper_t(const IntVector& v, Index i, const IntVector& a, const IntVector& b) {
  return floor_div(v(i).sign() > 0 ? b(i) : a(i), v(i));
}

void check_dims(Index n, const IntVector& a, const IntVector& b) {
  if (a.size() != n || b.size() != n) {
    throw DimensionMismatch("box of dimension " + std::to_string(a.size()) +
                            " for a lattice in Z^" + std::to_string(n));
  }
}

}  // namespace

CertificateSet rank1_certificates(const DivisorVector& div, Index n) {
  if (div.v.size() != n) throw DimensionMismatch("rank1_certificates: length mismatch");
  CertificateSet set{n, 1, {}};
  const auto support = div.partition.support();
  for (Index i : support) {
    for (Index j : support) {
      set.exprs.push_back(ModLinExpr::diff(upper_t_expr(div.v, j), lower_t_expr(div.v, i)));
    }
  }
  // Members of Zv vanish where v does, so the box must straddle zero there:
  // a_k <= 0 <= b_k. The difference b_k - a_k alone is not sufficient.
  for (Index k : div.partition.zero) {
    set.exprs.push_back(ModLinExpr::neg(ModLinExpr::input_a(k)));
    set.exprs.push_back(ModLinExpr::input_b(k));
  }
  return set;
}

ReducedBoundExprs reduced_bounds_exprs(const DivisorVector& div, const LvIndexMap& map) {
  ReducedBoundExprs out;
  for (const auto& [i, j] : map.pair_coords) {
    out.lower.push_back(ModLinExpr::diff(lower_t_expr(div.v, i), upper_t_expr(div.v, j)));
    out.upper.push_back(ModLinExpr::diff(upper_t_expr(div.v, i), lower_t_expr(div.v, j)));
  }
  for (Index k : map.zero_coords) {
    out.lower.push_back(ModLinExpr::input_a(k));
    out.upper.push_back(ModLinExpr::input_b(k));
  }
  return out;
}

ReducedBox reduced_box(const DivisorVector& div, const LvIndexMap& map, const IntVector& a,
                       const IntVector& b) {
  check_dims(div.v.size(), a, b);
  ReducedBox out{IntVector(map.output_dim()), IntVector(map.output_dim())};
  Index k = 0;
  for (const auto& [i, j] : map.pair_coords) {
    out.lower(k) = lower_t(div.v, i, a, b) - upper_t(div.v, j, a, b);
    out.upper(k) = upper_t(div.v, i, a, b) - lower_t(div.v, j, a, b);
    ++k;
  }
  for (Index z : map.zero_coords) {
    out.lower(k) = a(z);
    out.upper(k) = b(z);
    ++k;
  }
  return out;
}

CertificateSet generate_certificates(const EClassCertificate& cert) {
  const Index n = cert.lattice.ambient_dim();
  if (!cert.child) {
    if (cert.lattice.rank() != 1) {
      throw InternalInconsistency("certificate without child must have rank one");
    }
    return rank1_certificates(cert.divisor, n);
  }
  CertificateSet set{n, cert.lattice.rank(), {}};
  for (Index i : cert.divisor.partition.support()) {
    set.exprs.push_back(
        ModLinExpr::diff(upper_t_expr(cert.divisor.v, i), lower_t_expr(cert.divisor.v, i)));
  }
  const auto bounds = reduced_bounds_exprs(cert.divisor, cert.index_map);
  const auto child = generate_certificates(*cert.child);
  set.exprs.reserve(set.exprs.size() + child.exprs.size());
  for (const auto& e : child.exprs) set.exprs.push_back(e.substitute(bounds.lower, bounds.upper));
  return set;
}

Int evaluate(const ModLinExpr& e, const IntVector& a, const IntVector& b) { return e.evaluate(a, b); }

bool feasible_by_certificates(const CertificateSet& set, const Box& box) {
  check_dims(set.n, box.lower, box.upper);
  return std::all_of(set.exprs.begin(), set.exprs.end(), [&](const ModLinExpr& e) {
    return e.evaluate(box.lower, box.upper).sign() >= 0;
  });
}

namespace {

// Preimage under L_v of an image point, taken inside the complement B of Zv.
IntVector lift_to_complement(const EClassCertificate& cert, const IntVector& z) {
  const Lattice complement = complement_of(cert.lattice, cert.divisor.v);
  const Index r = complement.rank();
  RatMatrix images(z.size(), r);
  for (Index k = 0; k < r; ++k) {
    images.col(k) = lv_apply(cert.divisor, cert.index_map, complement.basis_vector(k)).cast<Rat>();
  }
  auto coeffs = solve_linear<Rat>(images, z.cast<Rat>());
  if (!coeffs) throw InternalInconsistency("image point has no preimage in the complement");
  IntVector y = IntVector::Zero(cert.lattice.ambient_dim());
  for (Index k = 0; k < r; ++k) {
    if (!(*coeffs)(k).is_integer()) {
      throw InternalInconsistency("image point lifts to a non-integral combination");
    }
    y += (*coeffs)(k).num() * complement.basis_vector(k);
  }
  return y;
}

std::optional<IntVector> solve_level(const EClassCertificate& cert, const IntVector& a,
                                     const IntVector& b) {
  const IntVector& v = cert.divisor.v;
  const auto support = cert.divisor.partition.support();

  if (!cert.child) {
    for (Index k : cert.divisor.partition.zero) {
      if (a(k).sign() > 0 || b(k).sign() < 0) return std::nullopt;
    }
    std::optional<Int> t_lo;
    std::optional<Int> t_hi;
    for (Index i : support) {
      Int lo = lower_t(v, i, a, b);
      Int hi = upper_t(v, i, a, b);
      if (!t_lo || lo > *t_lo) t_lo = lo;
      if (!t_hi || hi < *t_hi) t_hi = hi;
    }
    if (*t_lo > *t_hi) return std::nullopt;
    return IntVector(*t_lo * v);
  }

  for (Index i : support) {
    if (lower_t(v, i, a, b) > upper_t(v, i, a, b)) return std::nullopt;
  }
  const ReducedBox rb = reduced_box(cert.divisor, cert.index_map, a, b);
  auto z = solve_level(*cert.child, rb.lower, rb.upper);
  if (!z) return std::nullopt;

  const IntVector y = lift_to_complement(cert, *z);
  for (Index k : cert.divisor.partition.zero) {
    if (y(k) < a(k) || y(k) > b(k)) {
      throw InternalInconsistency("lifted point violates a zero-coordinate bound");
    }
  }
  std::optional<Int> t_lo;
  std::optional<Int> t_hi;
  for (Index i : support) {
    const Int shift = exact_div(y(i), v(i));
    Int lo = lower_t(v, i, a, b) - shift;
    Int hi = upper_t(v, i, a, b) - shift;
    if (!t_lo || lo > *t_lo) t_lo = lo;
    if (!t_hi || hi < *t_hi) t_hi = hi;
  }
  if (*t_lo > *t_hi) throw InternalInconsistency("reduced box feasible but no multiple of v fits");
  return IntVector(*t_lo * v + y);
}

}  // namespace

std::optional<IntVector> solve_box(const EClassCertificate& cert, const Box& box) {
  check_dims(cert.lattice.ambient_dim(), box.lower, box.upper);
  return solve_level(cert, box.lower, box.upper);
}

std::optional<IntVector> brute_force_solve(const Lattice& lattice, const Box& box,
                                           std::uint64_t cap) {
  check_dims(lattice.ambient_dim(), box.lower, box.upper);
  const Index n = box.dim();
  Int count(1);
  for (Index i = 0; i < n; ++i) count *= box.upper(i) - box.lower(i) + Int(1);
  if (count > Int(static_cast<long long>(cap))) {
    throw ResourceLimit("box holds " + count.to_string() + " points, oracle cap is " +
                        std::to_string(cap));
  }
  IntVector x = box.lower;
  for (;;) {
    if (lattice.contains(x)) return x;
    Index i = n - 1;
    while (i >= 0 && x(i) == box.upper(i)) {
      x(i) = box.lower(i);
      --i;
    }
    if (i < 0) return std::nullopt;
    x(i) += Int(1);
  }
}

}  // namespace zfarkas
