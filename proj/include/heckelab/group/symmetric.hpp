#pragma once

#include <vector>

#include "heckelab/combin/partition.hpp"
#include "heckelab/group/perm.hpp"

namespace heckelab {

// Generator indices interior to the blocks of the composition: for blocks
// [p+1, p+alpha_r], the indices i with p < i < p + alpha_r. Zero parts
// contribute nothing.
std::vector<int> j_set(const Composition& alpha);

// All elements of the Young subgroup Sigma(alpha) of Sym(n), n = deg(alpha).
std::vector<Perm> young_subgroup(const Composition& alpha);

// Minimal-length representatives of the cosets w * Sigma(lambda), sorted by
// (length, lexicographic one-line).
std::vector<Perm> min_coset_reps(const Partition& lambda);

// w belongs to D_lambda iff its one-line word ascends inside every block.
bool is_min_coset_rep(const Perm& w, const Partition& lambda);

struct CosetFactorisation {
  Perm d;  // in D_lambda
  Perm v;  // in Sigma(lambda)
};

// w = d * v with l(w) = l(d) + l(v).
CosetFactorisation coset_factorise(const Perm& w, const Partition& lambda);

// Closure of the given generators inside Sym(m).
std::vector<Perm> subgroup_closure(int m, const std::vector<Perm>& generators);

}  // namespace heckelab
