#pragma once

#include <map>
#include <string>
#include <vector>

#include "heckelab/combin/partition.hpp"
#include "heckelab/group/perm.hpp"
#include "heckelab/group/symmetric.hpp"
#include "heckelab/scalar/eigen_support.hpp"
#include "heckelab/util/error.hpp"

namespace heckelab {

template <class F>
F scalar_pow(F base, long e) {
  F acc(1);
  for (long k = 0; k < e; ++k) acc = acc * base;
  return acc;
}

// Element of the Hecke algebra Hec(n) over the scalar domain F at parameter q,
// held as a sparse coefficient map on the T_w basis. Zero coefficients are
// never stored.
//
// Defining relations (on the left):
//   T_i T_w = T_{s_i w}                 if l(s_i w) > l(w)
//   T_i T_w = q T_{s_i w} + (q-1) T_w   otherwise
// so T_i^2 = (q-1) T_i + q.
template <class F>
class HeckeElement {
 public:
  HeckeElement(int n, F q) : n_(n), q_(std::move(q)) {}

  static HeckeElement zero(int n, F q) { return HeckeElement(n, std::move(q)); }
  static HeckeElement basis(int n, F q, const Perm& w) {
    HeckeElement e(n, std::move(q));
    require(w.size() == n, errc::rank_mismatch, "permutation degree != rank");
    e.coeffs_[w] = F(1);
    return e;
  }
  static HeckeElement unit(int n, F q) { return basis(n, q, Perm::identity(n)); }

  int rank() const { return n_; }
  const F& q() const { return q_; }
  const std::map<Perm, F>& coeffs() const { return coeffs_; }
  bool zero_element() const { return coeffs_.empty(); }
  std::size_t support_size() const { return coeffs_.size(); }

  F coeff(const Perm& w) const {
    auto it = coeffs_.find(w);
    return it == coeffs_.end() ? F(0) : it->second;
  }

  void add_term(const Perm& w, const F& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = coeffs_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) coeffs_.erase(it);
    }
  }

  friend HeckeElement operator+(const HeckeElement& a, const HeckeElement& b) {
    a.check_compatible(b);
    HeckeElement out = a;
    for (const auto& [w, c] : b.coeffs_) out.add_term(w, c);
    return out;
  }
  friend HeckeElement operator-(const HeckeElement& a, const HeckeElement& b) {
    a.check_compatible(b);
    HeckeElement out = a;
    for (const auto& [w, c] : b.coeffs_) out.add_term(w, -c);
    return out;
  }
  HeckeElement operator-() const {
    HeckeElement out(n_, q_);
    for (const auto& [w, c] : coeffs_) out.coeffs_[w] = -c;
    return out;
  }
  friend HeckeElement operator*(const F& s, const HeckeElement& a) {
    HeckeElement out(a.n_, a.q_);
    for (const auto& [w, c] : a.coeffs_) out.add_term(w, s * c);
    return out;
  }

  // T_i * this, generator index 1-based.
  HeckeElement mul_gen_left(int i) const {
    HeckeElement out(n_, q_);
    Perm si = Perm::adjacent(n_, i);
    for (const auto& [w, c] : coeffs_) {
      Perm sw = si * w;
      if (w.left_mult_lengthens(i)) {
        out.add_term(sw, c);
      } else {
        out.add_term(sw, q_ * c);
        out.add_term(w, (q_ - F(1)) * c);
      }
    }
    return out;
  }

  // this * T_i.
  HeckeElement mul_gen_right(int i) const {
    HeckeElement out(n_, q_);
    Perm si = Perm::adjacent(n_, i);
    for (const auto& [w, c] : coeffs_) {
      Perm ws = w * si;
      if (w.apply(i - 1) < w.apply(i)) {
        out.add_term(ws, c);
      } else {
        out.add_term(ws, q_ * c);
        out.add_term(w, (q_ - F(1)) * c);
      }
    }
    return out;
  }

  friend HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) {
    a.check_compatible(b);
    HeckeElement out(a.n_, a.q_);
    for (const auto& [w, c] : a.coeffs_) {
      // T_w b by left-multiplying generator by generator along a reduced word
      HeckeElement acc = b;
      std::vector<int> word = w.reduced_word();
      for (std::size_t k = word.size(); k-- > 0;) acc = acc.mul_gen_left(word[k]);
      for (const auto& [v, cv] : acc.coeffs_) out.add_term(v, c * cv);
    }
    return out;
  }

  friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
    return a.n_ == b.n_ && a.q_ == b.q_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const HeckeElement& a, const HeckeElement& b) { return !(a == b); }

  DenseVector<F> to_vector() const {
    DenseVector<F> v(factorial(n_));
    v.setConstant(F(0));
    for (const auto& [w, c] : coeffs_) v(static_cast<Eigen::Index>(perm_index(w))) = c;
    return v;
  }
  static HeckeElement from_vector(int n, F q, const DenseVector<F>& v) {
    HeckeElement out(n, std::move(q));
    std::vector<Perm> basis_perms = all_perms(n);
    require(v.rows() == static_cast<Eigen::Index>(basis_perms.size()), errc::ambient_mismatch,
            "coordinate vector has wrong length");
    for (std::size_t k = 0; k < basis_perms.size(); ++k)
      out.add_term(basis_perms[k], v(static_cast<Eigen::Index>(k)));
    return out;
  }

  friend std::string to_string(const HeckeElement& a) {
    if (a.coeffs_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : a.coeffs_) {
      if (!s.empty()) s += " + ";
      s += "(" + to_string(c) + ")*T" + to_string(w);
    }
    return s;
  }

 private:
  void check_compatible(const HeckeElement& o) const {
    require(n_ == o.n_, errc::rank_mismatch, "Hecke elements of different rank");
    require(q_ == o.q_, errc::mixed_parameters, "Hecke elements with different parameters");
  }

  int n_;
  F q_;
  std::map<Perm, F> coeffs_;
};

// Linear anti-automorphism with (T_w)* = T_{w^{-1}}.
template <class F>
HeckeElement<F> star_involution(const HeckeElement<F>& a) {
  HeckeElement<F> out(a.rank(), a.q());
  for (const auto& [w, c] : a.coeffs()) out.add_term(w.inverse(), c);
  return out;
}

// Involutory algebra automorphism with sharp(T_i) = -T_i + (q-1).
template <class F>
HeckeElement<F> sharp_automorphism(const HeckeElement<F>& a) {
  const int n = a.rank();
  const F& q = a.q();
  HeckeElement<F> out(n, q);
  for (const auto& [w, c] : a.coeffs()) {
    HeckeElement<F> acc = HeckeElement<F>::unit(n, q);
    std::vector<int> word = w.reduced_word();
    for (std::size_t k = word.size(); k-- > 0;) {
      HeckeElement<F> ti_acc = acc.mul_gen_left(word[k]);
      acc = (q - F(1)) * acc - ti_acc;
    }
    for (const auto& [v, cv] : acc.coeffs()) out.add_term(v, c * cv);
  }
  return out;
}

// The third involution: an anti-automorphism, the composite of * and sharp.
template <class F>
HeckeElement<F> dagger_involution(const HeckeElement<F>& a) {
  return sharp_automorphism(star_involution(a));
}

template <class F>
HeckeElement<F> x_element(const Composition& alpha, F q) {
  const int n = alpha.degree();
  HeckeElement<F> out(n, q);
  for (const Perm& w : young_subgroup(alpha)) out.add_term(w, F(1));
  return out;
}

template <class F>
HeckeElement<F> y_element(const Composition& alpha, F q) {
  const int n = alpha.degree();
  const long big_n = static_cast<long>(n) * (n - 1) / 2;
  HeckeElement<F> out(n, q);
  for (const Perm& w : young_subgroup(alpha))
    out.add_term(w, scalar_pow(-q, big_n - w.length()));
  return out;
}

// Symmetric bilinear form: the coefficient of T_e in a b*.
template <class F>
F pairing(const HeckeElement<F>& a, const HeckeElement<F>& b) {
  require(a.rank() == b.rank(), errc::rank_mismatch, "pairing of different ranks");
  HeckeElement<F> prod = a * star_involution(b);
  return prod.coeff(Perm::identity(a.rank()));
}

}  // namespace heckelab
