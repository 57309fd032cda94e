#pragma once

#include <vector>

#include "heckelab/scalar/eigen_support.hpp"
#include "heckelab/scalar/traits.hpp"
#include "heckelab/util/error.hpp"

namespace heckelab {

// Gauss-Jordan reduction to reduced row echelon form, in place.
// Pivot choice is deterministic: the first row with a nonzero entry in the
// current column, scanning columns left to right. Returns the pivot columns.
template <class F>
std::vector<Eigen::Index> rref_in_place(DenseMatrix<F>& m) {
  static_assert(is_field_v<F>, "rref needs field scalars");
  std::vector<Eigen::Index> pivots;
  Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (!is_zero(m(i, c))) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r) m.row(piv).swap(m.row(r));
    F pi = inv(m(r, c));
    for (Eigen::Index j = c; j < cols; ++j) m(r, j) = m(r, j) * pi;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      F f = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
DenseMatrix<F> rref(DenseMatrix<F> m) {
  rref_in_place(m);
  return m;
}

template <class Derived>
Eigen::Index rank_of(const Eigen::MatrixBase<Derived>& m) {
  DenseMatrix<typename Derived::Scalar> work = m;
  return static_cast<Eigen::Index>(rref_in_place(work).size());
}

// Canonical basis of the right nullspace {v : m v = 0}, rows of the returned
// matrix, themselves in reduced row echelon form.
template <class F>
DenseMatrix<F> nullspace(const DenseMatrix<F>& m) {
  DenseMatrix<F> work = m;
  std::vector<Eigen::Index> pivots = rref_in_place(work);
  Eigen::Index cols = m.cols();
  Eigen::Index rank = static_cast<Eigen::Index>(pivots.size());
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Eigen::Index c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  DenseMatrix<F> basis(cols - rank, cols);
  basis.setConstant(F(0));
  Eigen::Index bi = 0;
  for (Eigen::Index fc = 0; fc < cols; ++fc) {
    if (is_pivot[static_cast<std::size_t>(fc)]) continue;
    basis(bi, fc) = F(1);
    for (Eigen::Index k = 0; k < rank; ++k) basis(bi, pivots[static_cast<std::size_t>(k)]) = -work(k, fc);
    ++bi;
  }
  rref_in_place(basis);  // canonical form, leading coefficients 1
  return basis;
}

// Solve m x = b; the system must be consistent (checked).
template <class F>
DenseVector<F> solve_exact(const DenseMatrix<F>& m, const DenseVector<F>& b) {
  require(m.rows() == b.rows(), errc::ambient_mismatch, "solve_exact: shape mismatch");
  DenseMatrix<F> aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  std::vector<Eigen::Index> pivots = rref_in_place(aug);
  DenseVector<F> x(m.cols());
  x.setConstant(F(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    require(pivots[k] < m.cols(), errc::internal, "solve_exact: inconsistent system");
    x(pivots[k]) = aug(static_cast<Eigen::Index>(k), m.cols());
  }
  return x;
}

}  // namespace heckelab
