#pragma once

#include <vector>

#include "heckelab/combin/partition.hpp"
#include "heckelab/group/perm.hpp"

namespace heckelab {

// Standard Young tableau: rows increase left to right, columns top to bottom,
// entries 1..n each once.
class StandardTableau {
 public:
  StandardTableau(Partition shape, std::vector<std::vector<int>> rows);

  const Partition& shape() const { return shape_; }
  int degree() const { return shape_.degree(); }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int entry(int r, int c) const { return rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }

  StandardTableau transpose() const;
  // shape of the restriction to entries <= m
  Partition restriction_shape(int m) const;

  friend bool operator==(const StandardTableau& a, const StandardTableau& b) {
    return a.rows_ == b.rows_;
  }
  friend std::string to_string(const StandardTableau& t);

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

// Superstandard tableau: 1..lambda_1 along the first row, then the second
// row, and so on.
StandardTableau superstandard_tableau(const Partition& lambda);

// All standard tableaux of the given shape; the first element is the
// superstandard one.
std::vector<StandardTableau> standard_tableaux(const Partition& lambda);

// s dominates-below t: the restriction shapes satisfy [s|m] <= [t|m] for all m.
bool tableau_dominance_leq(const StandardTableau& s, const StandardTableau& t);

// The permutation d with s = d ∘ t^lambda positionwise; d(t^lambda(r,c)) = s(r,c).
Perm d_permutation(const StandardTableau& s);

// Number of standard tableaux of the shape, computed both by enumeration and
// by the hook length formula; the two must agree.
long spec_dimension(const Partition& lambda);

// Sum of spec_dimension(lambda)^2 over partitions of n with first part >= m.
long capital_N(int n, int m);

}  // namespace heckelab
