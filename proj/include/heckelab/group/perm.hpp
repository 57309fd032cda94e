#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "heckelab/util/error.hpp"

namespace heckelab {

// Permutation of {1..n} in one-line notation, stored 0-based.
// Composition convention throughout: (u * w)(i) = u(w(i)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(int n);                      // identity
  explicit Perm(std::vector<int> one_line);  // 0-based images

  static Perm identity(int n) { return Perm(n); }
  static Perm transposition(int n, int a, int b);        // 0-based points
  static Perm adjacent(int n, int i);                    // s_i, 1-based generator index
  static Perm from_one_line_1based(const std::vector<int>& img);

  int size() const { return static_cast<int>(img_.size()); }
  int apply(int i) const { return img_[static_cast<std::size_t>(i)]; }  // 0-based
  const std::vector<int>& images() const { return img_; }
  std::vector<int> one_line_1based() const;

  Perm operator*(const Perm& w) const;  // (u*w)(i) = u(w(i))
  Perm inverse() const;
  bool is_identity() const;

  int length() const;  // inversion count
  // Generator indices i_1..i_l (1-based) with *this == s_{i_1} * ... * s_{i_l}.
  std::vector<int> reduced_word() const;

  // true iff l(s_i * w) = l(w) + 1, generator index 1-based
  bool left_mult_lengthens(int i) const;

  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
  friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

  friend std::string to_string(const Perm& w);
  friend std::ostream& operator<<(std::ostream& os, const Perm& w) { return os << to_string(w); }

 private:
  std::vector<int> img_;
};

std::vector<Perm> all_perms(int n);          // lexicographic one-line order
std::size_t perm_index(const Perm& w);       // rank within all_perms(w.size())
long factorial(int n);

}  // namespace heckelab
