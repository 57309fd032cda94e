#include "heckelab/group/perm.hpp"

#include <algorithm>
#include <numeric>

namespace heckelab {

Perm::Perm(int n) : img_(static_cast<std::size_t>(n)) {
  std::iota(img_.begin(), img_.end(), 0);
}

Perm::Perm(std::vector<int> one_line) : img_(std::move(one_line)) {
  std::vector<bool> seen(img_.size(), false);
  for (int x : img_) {
    require(x >= 0 && x < static_cast<int>(img_.size()) && !seen[static_cast<std::size_t>(x)],
            errc::range_error, "not a permutation");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Perm Perm::transposition(int n, int a, int b) {
  Perm w(n);
  std::swap(w.img_[static_cast<std::size_t>(a)], w.img_[static_cast<std::size_t>(b)]);
  return w;
}

Perm Perm::adjacent(int n, int i) {
  require(i >= 1 && i < n, errc::range_error, "generator index out of range");
  return transposition(n, i - 1, i);
}

Perm Perm::from_one_line_1based(const std::vector<int>& img) {
  std::vector<int> z;
  z.reserve(img.size());
  for (int x : img) z.push_back(x - 1);
  return Perm(std::move(z));
}

std::vector<int> Perm::one_line_1based() const {
  std::vector<int> out;
  out.reserve(img_.size());
  for (int x : img_) out.push_back(x + 1);
  return out;
}

Perm Perm::operator*(const Perm& w) const {
  require(size() == w.size(), errc::rank_mismatch, "composing permutations of different degree");
  std::vector<int> z(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i)
    z[i] = img_[static_cast<std::size_t>(w.img_[i])];
  return Perm(std::move(z));
}

Perm Perm::inverse() const {
  std::vector<int> z(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) z[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
  return Perm(std::move(z));
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i)) return false;
  return true;
}

int Perm::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < img_.size(); ++i)
    for (std::size_t j = i + 1; j < img_.size(); ++j)
      if (img_[i] > img_[j]) ++inv;
  return inv;
}

std::vector<int> Perm::reduced_word() const {
  // Bubble sort: repeatedly kill a position descent by right multiplication,
  // then reverse the collected letters.
  std::vector<int> word;
  std::vector<int> v = img_;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i] > v[i + 1]) {
        std::swap(v[i], v[i + 1]);
        word.push_back(static_cast<int>(i) + 1);
        moved = true;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

bool Perm::left_mult_lengthens(int i) const {
  // l(s_i w) > l(w) iff the value i-1 appears before the value i (0-based)
  int a = -1, b = -1;
  for (std::size_t k = 0; k < img_.size(); ++k) {
    if (img_[k] == i - 1) a = static_cast<int>(k);
    if (img_[k] == i) b = static_cast<int>(k);
  }
  return a < b;
}

std::string to_string(const Perm& w) {
  std::string s = "[";
  auto ol = w.one_line_1based();
  for (std::size_t i = 0; i < ol.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(ol[i]);
  }
  return s + "]";
}

std::vector<Perm> all_perms(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  std::vector<Perm> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::size_t perm_index(const Perm& w) {
  // Lehmer code, lexicographic rank of the one-line word
  const auto& img = w.images();
  std::size_t n = img.size();
  std::size_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (img[j] < img[i]) ++smaller;
    rank += smaller * static_cast<std::size_t>(factorial(static_cast<int>(n - 1 - i)));
  }
  return rank;
}

long factorial(int n) {
  long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace heckelab
