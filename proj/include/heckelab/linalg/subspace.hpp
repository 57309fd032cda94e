#pragma once

#include <string>
#include <vector>

#include "heckelab/linalg/rref.hpp"

namespace heckelab {

enum class SubspaceRelation { equal, u_in_v, v_in_u, incomparable };

inline const char* to_string(SubspaceRelation r) {
  switch (r) {
    case SubspaceRelation::equal: return "equal";
    case SubspaceRelation::u_in_v: return "u_in_v";
    case SubspaceRelation::v_in_u: return "v_in_u";
    case SubspaceRelation::incomparable: return "incomparable";
  }
  return "?";
}

// Subspace of F^ambient, held as a canonical rref basis (one basis vector per
// row). Two subspaces are equal iff their basis matrices are entrywise equal.
template <class F>
class Subspace {
 public:
  Subspace() : ambient_(0) {}
  explicit Subspace(Eigen::Index ambient) : ambient_(ambient), basis_(0, ambient) {}
  Subspace(Eigen::Index ambient, DenseMatrix<F> rref_basis)
      : ambient_(ambient), basis_(std::move(rref_basis)) {
    require(basis_.cols() == ambient_, errc::ambient_mismatch, "basis width != ambient");
  }

  // Span of arbitrary row vectors; canonicalized here.
  static Subspace from_span(const DenseMatrix<F>& rows) {
    DenseMatrix<F> work = rows;
    std::vector<Eigen::Index> pivots = rref_in_place(work);
    return Subspace(rows.cols(),
                    DenseMatrix<F>(work.topRows(static_cast<Eigen::Index>(pivots.size()))));
  }

  Eigen::Index ambient() const { return ambient_; }
  Eigen::Index dim() const { return basis_.rows(); }
  const DenseMatrix<F>& basis() const { return basis_; }

  bool contains(const DenseVector<F>& v) const {
    require(v.rows() == ambient_, errc::ambient_mismatch, "vector/ambient mismatch");
    // reduce v against the rref basis
    DenseVector<F> w = v;
    for (Eigen::Index r = 0; r < basis_.rows(); ++r) {
      Eigen::Index lead = leading_col(r);
      if (lead < 0) continue;
      F f = w(lead);
      if (is_zero(f)) continue;
      for (Eigen::Index j = 0; j < ambient_; ++j) w(j) = w(j) - f * basis_(r, j);
    }
    for (Eigen::Index j = 0; j < ambient_; ++j)
      if (!is_zero(w(j))) return false;
    return true;
  }

  bool contains(const Subspace& other) const {
    require(other.ambient_ == ambient_, errc::ambient_mismatch, "ambient mismatch");
    if (other.dim() > dim()) return false;
    for (Eigen::Index r = 0; r < other.basis_.rows(); ++r) {
      DenseVector<F> v = other.basis_.row(r).transpose();
      if (!contains(v)) return false;
    }
    return true;
  }

  friend Subspace operator+(const Subspace& a, const Subspace& b) {
    require(a.ambient_ == b.ambient_, errc::ambient_mismatch, "ambient mismatch");
    DenseMatrix<F> rows(a.dim() + b.dim(), a.ambient_);
    rows.topRows(a.dim()) = a.basis_;
    rows.bottomRows(b.dim()) = b.basis_;
    return from_span(rows);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_ || a.dim() != b.dim()) return false;
    return a.basis_ == b.basis_;
  }

 private:
  Eigen::Index leading_col(Eigen::Index r) const {
    for (Eigen::Index j = 0; j < ambient_; ++j)
      if (!is_zero(basis_(r, j))) return j;
    return -1;
  }

  Eigen::Index ambient_;
  DenseMatrix<F> basis_;
};

template <class F>
SubspaceRelation subspace_compare(const Subspace<F>& u, const Subspace<F>& v) {
  require(u.ambient() == v.ambient(), errc::ambient_mismatch, "subspace ambient mismatch");
  bool uv = v.contains(u);
  bool vu = u.contains(v);
  if (uv && vu) return SubspaceRelation::equal;
  if (uv) return SubspaceRelation::u_in_v;
  if (vu) return SubspaceRelation::v_in_u;
  return SubspaceRelation::incomparable;
}

}  // namespace heckelab
