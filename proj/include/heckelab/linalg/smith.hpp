#pragma once

#include <vector>

#include "heckelab/scalar/eigen_support.hpp"
#include "heckelab/scalar/fp.hpp"
#include "heckelab/scalar/rational.hpp"

namespace heckelab {

// Full-rank sublattice data: canonical Hermite-form generator rows plus the
// elementary divisors of the defining system (the matrix whose kernel it is).
struct IntegerLattice {
  Eigen::Index ambient = 0;
  DenseMatrix<Integer> basis;  // rows, row-style Hermite normal form
  std::vector<Integer> system_divisors;

  Eigen::Index dim() const { return basis.rows(); }
};

struct SmithResult {
  std::vector<Integer> divisors;  // positive, d1 | d2 | ...
  IntegerLattice kernel;          // saturated integer kernel of the input
};

// Smith normal form by gcd pivoting on the minimal-absolute-value entry.
SmithResult smith_normal_form(const DenseMatrix<Integer>& m);

// Row-style Hermite normal form (positive pivots, entries above a pivot
// reduced into [0, pivot)). Zero rows are dropped.
DenseMatrix<Integer> hermite_normal_form(const DenseMatrix<Integer>& rows);

// Fraction-free Bareiss elimination; returns the rank.
Eigen::Index bareiss_rank(const DenseMatrix<Integer>& m);

// A lattice given as the kernel of an integer system is saturated iff all
// elementary divisors of its generator matrix are 1.
bool is_saturated(const IntegerLattice& lattice);

bool lattice_contains(const IntegerLattice& lattice, const DenseVector<Integer>& v);

DenseMatrix<Fp> reduce_mod_p(const DenseMatrix<Integer>& m, std::uint64_t p);
DenseMatrix<Rational> to_rational(const DenseMatrix<Integer>& m);

// Exact conversion; fails with NonIntegralParameter if an entry has a
// denominator.
DenseMatrix<Integer> to_integer(const DenseMatrix<Rational>& m);

}  // namespace heckelab
