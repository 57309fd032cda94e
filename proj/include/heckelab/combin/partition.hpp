#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "heckelab/util/error.hpp"

namespace heckelab {

// Partition of n: weakly decreasing positive parts. The empty partition is
// the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int degree() const { return degree_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int part(int r) const { return r < rows() ? parts_[static_cast<std::size_t>(r)] : 0; }

  Partition transpose() const;
  bool is_hook() const;  // (a, 1^b), including (n) and (1^n)
  int hook_arm() const;  // the a of (a, 1^b)

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  // canonical (reverse-lexicographic) order: (n) first, (1^n) last
  friend bool canon_less(const Partition& a, const Partition& b);

  friend std::string to_string(const Partition& p);
  friend std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << to_string(p); }

 private:
  std::vector<int> parts_;
  int degree_ = 0;
};

// Composition: nonnegative integer parts, zero parts retained.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  explicit Composition(const Partition& p) : Composition(p.parts()) {}

  const std::vector<int>& parts() const { return parts_; }
  int degree() const { return degree_; }

  Partition to_partition() const;  // sort descending, drop zeros

 private:
  std::vector<int> parts_;
  int degree_ = 0;
};

// Finite set of partitions of a common degree, kept sorted in the canonical
// order with no duplicates.
class PartitionSet {
 public:
  explicit PartitionSet(int n) : n_(n) {}
  PartitionSet(int n, std::vector<Partition> members);

  int degree() const { return n_; }
  const std::vector<Partition>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(const Partition& p) const;
  void insert(const Partition& p);

  friend bool operator==(const PartitionSet& a, const PartitionSet& b) {
    return a.n_ == b.n_ && a.members_ == b.members_;
  }

 private:
  int n_;
  std::vector<Partition> members_;
};

PartitionSet partitions_of(int n);

bool dominance_leq(const Partition& a, const Partition& b);

// Closure under merging two parts into one, iterated.
PartitionSet coarsening_closure(const PartitionSet& sigma);
// All partitions dominance-greater-or-equal to some member.
PartitionSet dominance_upward_closure(const PartitionSet& sigma);
bool is_cosaturated(const PartitionSet& sigma);

PartitionSet set_complement(const PartitionSet& sigma);  // inside Par(n)
PartitionSet set_union(const PartitionSet& a, const PartitionSet& b);

}  // namespace heckelab
