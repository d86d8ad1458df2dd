#pragma once

// Hermite and Smith normal forms over a Euclidean scalar.
//
// Scalar must provide floor_div(Scalar, Scalar) (found by ADL or as a
// built-in signed integral overload), comparison with Scalar(0), unary minus
// and the ring operations. zfarkas::Int and the built-in signed integers
// both qualify.

#include <optional>
#include <utility>

#include <Eigen/Core>

#include "zfarkas/exactnum.hpp"

namespace zfarkas {

namespace detail {

template <typename Scalar>
Scalar abs_value(const Scalar& x) {
  return x < Scalar(0) ? Scalar(-x) : x;
}

}  // namespace detail

/// Row-style Hermite normal form of the row span of `gens`.
///
/// The result has one row per basis vector: rows are in echelon form, each
/// pivot is positive, and every entry above a pivot lies in [0, pivot).
/// Zero rows are dropped, so the result is the unique canonical basis of the
/// subgroup generated by the rows of `gens`.
template <typename Scalar>
Matrix<Scalar> hermite_normal_form(Matrix<Scalar> h) {
  using std::swap;
  const Index rows = h.rows();
  const Index cols = h.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    bool has_pivot = false;
    for (;;) {
      Index best = -1;
      for (Index i = r; i < rows; ++i) {
        if (h(i, c) == Scalar(0)) continue;
        if (best < 0 || detail::abs_value(h(i, c)) < detail::abs_value(h(best, c))) best = i;
      }
      if (best < 0) break;
      has_pivot = true;
      if (best != r) h.row(best).swap(h.row(r));
      bool clean = true;
      for (Index i = r + 1; i < rows; ++i) {
        if (h(i, c) == Scalar(0)) continue;
        Scalar q = floor_div(h(i, c), h(r, c));
        h.row(i) -= q * h.row(r);
        if (h(i, c) != Scalar(0)) clean = false;
      }
      if (clean) break;
    }
    if (!has_pivot) continue;
    if (h(r, c) < Scalar(0)) h.row(r) = -h.row(r);
    for (Index i = 0; i < r; ++i) {
      Scalar q = floor_div(h(i, c), h(r, c));
      if (q != Scalar(0)) h.row(i) -= q * h.row(r);
    }
    ++r;
  }
  return h.topRows(r);
}

/// Coordinates of `w` in a basis held in row-style Hermite normal form, or
/// nullopt when `w` is not an integral combination of the rows.
template <typename Scalar>
std::optional<Vector<Scalar>> hermite_coordinates(const Matrix<Scalar>& hnf,
                                                  Vector<Scalar> w) {
  const Index r = hnf.rows();
  Vector<Scalar> coeffs = Vector<Scalar>::Zero(r);
  Index col = 0;
  for (Index k = 0; k < r; ++k) {
    Index pivot = col;
    while (hnf(k, pivot) == Scalar(0)) ++pivot;
    for (; col < pivot; ++col) {
      if (w(col) != Scalar(0)) return std::nullopt;
    }
    const Scalar& p = hnf(k, pivot);
    Scalar q = floor_div(w(pivot), p);
    if (q * p != w(pivot)) return std::nullopt;
    coeffs(k) = q;
    if (q != Scalar(0)) w -= q * hnf.row(k).transpose();
    col = pivot + 1;
  }
  for (; col < w.size(); ++col) {
    if (w(col) != Scalar(0)) return std::nullopt;
  }
  return coeffs;
}

/// M = U * D * W with U, W unimodular and D diagonal, d_1 | d_2 | ... .
/// The inverses of U and W are tracked alongside so callers can solve
/// M x = g as D (W x) = U^{-1} g without a separate inversion.
template <typename Scalar>
struct SmithForm {
  Matrix<Scalar> U;
  Matrix<Scalar> D;
  Matrix<Scalar> W;
  Matrix<Scalar> U_inv;
  Matrix<Scalar> W_inv;
  Index rank = 0;
};

template <typename Scalar>
SmithForm<Scalar> smith_decompose(const Matrix<Scalar>& m) {
  const Index p = m.rows();
  const Index q = m.cols();
  SmithForm<Scalar> s;
  s.D = m;
  s.U = Matrix<Scalar>::Identity(p, p);
  s.U_inv = Matrix<Scalar>::Identity(p, p);
  s.W = Matrix<Scalar>::Identity(q, q);
  s.W_inv = Matrix<Scalar>::Identity(q, q);

  // row_i += c * row_j on D; U absorbs the inverse as a column operation.
  auto add_row = [&](Index i, Index j, const Scalar& c) {
    s.D.row(i) += c * s.D.row(j);
    s.U_inv.row(i) += c * s.U_inv.row(j);
    s.U.col(j) -= c * s.U.col(i);
  };
  auto swap_rows = [&](Index i, Index j) {
    s.D.row(i).swap(s.D.row(j));
    s.U_inv.row(i).swap(s.U_inv.row(j));
    s.U.col(i).swap(s.U.col(j));
  };
  auto negate_row = [&](Index i) {
    s.D.row(i) = -s.D.row(i);
    s.U_inv.row(i) = -s.U_inv.row(i);
    s.U.col(i) = -s.U.col(i);
  };
  // col_i += c * col_j on D; W absorbs the inverse as a row operation.
  auto add_col = [&](Index i, Index j, const Scalar& c) {
    s.D.col(i) += c * s.D.col(j);
    s.W_inv.col(i) += c * s.W_inv.col(j);
    s.W.row(j) -= c * s.W.row(i);
  };
  auto swap_cols = [&](Index i, Index j) {
    s.D.col(i).swap(s.D.col(j));
    s.W_inv.col(i).swap(s.W_inv.col(j));
    s.W.row(i).swap(s.W.row(j));
  };

  const Index diag = std::min(p, q);
  Index t = 0;
  for (; t < diag; ++t) {
    for (;;) {
      Index bi = -1;
      Index bj = -1;
      for (Index i = t; i < p; ++i) {
        for (Index j = t; j < q; ++j) {
          if (s.D(i, j) == Scalar(0)) continue;
          if (bi < 0 || detail::abs_value(s.D(i, j)) < detail::abs_value(s.D(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      }
      if (bi < 0) break;
      if (bi != t) swap_rows(bi, t);
      if (bj != t) swap_cols(bj, t);

      bool clean = true;
      for (Index i = t + 1; i < p; ++i) {
        if (s.D(i, t) == Scalar(0)) continue;
        add_row(i, t, Scalar(-floor_div(s.D(i, t), s.D(t, t))));
        if (s.D(i, t) != Scalar(0)) clean = false;
      }
      for (Index j = t + 1; j < q; ++j) {
        if (s.D(t, j) == Scalar(0)) continue;
        add_col(j, t, Scalar(-floor_div(s.D(t, j), s.D(t, t))));
        if (s.D(t, j) != Scalar(0)) clean = false;
      }
      if (!clean) continue;

      // Enforce divisibility of the remaining block by the pivot.
      Index bad = -1;
      for (Index i = t + 1; i < p && bad < 0; ++i) {
        for (Index j = t + 1; j < q; ++j) {
          const Scalar& e = s.D(i, j);
          if (floor_div(e, s.D(t, t)) * s.D(t, t) != e) {
            bad = i;
            break;
          }
        }
      }
      if (bad < 0) break;
      add_row(t, bad, Scalar(1));
    }
    if (t >= p || t >= q || s.D(t, t) == Scalar(0)) break;
    if (s.D(t, t) < Scalar(0)) negate_row(t);
  }
  s.rank = t;
  return s;
}

}  // namespace zfarkas
