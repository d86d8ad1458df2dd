#pragma once

// Exact Gauss-Jordan elimination over a field scalar (Rat in practice).

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "zfarkas/exactnum.hpp"

namespace zfarkas {

template <typename Scalar>
struct EchelonForm {
  Matrix<Scalar> reduced;
  std::vector<Index> pivot_cols;
  Index rank() const { return static_cast<Index>(pivot_cols.size()); }
};

/// Reduced row echelon form; pivots are scaled to one.
template <typename Scalar>
EchelonForm<Scalar> reduced_row_echelon(Matrix<Scalar> a) {
  EchelonForm<Scalar> out;
  Index r = 0;
  for (Index c = 0; c < a.cols() && r < a.rows(); ++c) {
    Index piv = -1;
    for (Index i = r; i < a.rows(); ++i) {
      if (a(i, c) != Scalar(0)) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r) a.row(piv).swap(a.row(r));
    const Scalar inv = Scalar(1) / a(r, c);
    a.row(r) *= inv;
    for (Index i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == Scalar(0)) continue;
      const Scalar f = a(i, c);
      a.row(i) -= f * a.row(r);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.reduced = std::move(a);
  return out;
}

template <typename Scalar>
Index matrix_rank(const Matrix<Scalar>& a) {
  return reduced_row_echelon(a).rank();
}

/// Basis of the right kernel {x : a x = 0}, one column per free variable.
template <typename Scalar>
Matrix<Scalar> kernel_basis(const Matrix<Scalar>& a) {
  const auto e = reduced_row_echelon(a);
  const Index n = a.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index c : e.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  Matrix<Scalar> k = Matrix<Scalar>::Zero(n, n - e.rank());
  Index col = 0;
  for (Index f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    k(f, col) = Scalar(1);
    for (Index r = 0; r < e.rank(); ++r) k(e.pivot_cols[static_cast<std::size_t>(r)], col) = -e.reduced(r, f);
    ++col;
  }
  return k;
}

/// A solution of a x = b with free variables set to zero, or nullopt.
template <typename Scalar>
std::optional<Vector<Scalar>> solve_linear(const Matrix<Scalar>& a, const Vector<Scalar>& b) {
  Matrix<Scalar> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  const auto e = reduced_row_echelon(aug);
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == a.cols()) return std::nullopt;
  Vector<Scalar> x = Vector<Scalar>::Zero(a.cols());
  for (Index r = 0; r < e.rank(); ++r) x(e.pivot_cols[static_cast<std::size_t>(r)]) = e.reduced(r, a.cols());
  return x;
}

}  // namespace zfarkas
