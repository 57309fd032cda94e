#pragma once

#include <ostream>
#include <string>
#include <utility>

#include "heckelab/scalar/polynomial.hpp"
#include "heckelab/util/error.hpp"

namespace heckelab {

// Rational function over the field F, stored as a reduced fraction with monic
// denominator. Zero is 0/1.
template <class F>
class RationalFunc {
 public:
  RationalFunc() : num_(), den_(Polynomial<F>(F(1))) {}
  RationalFunc(int x) : num_(Polynomial<F>(F(x))), den_(Polynomial<F>(F(1))) {}  // NOLINT
  explicit RationalFunc(const F& c) : num_(Polynomial<F>(c)), den_(Polynomial<F>(F(1))) {}
  explicit RationalFunc(Polynomial<F> n) : num_(std::move(n)), den_(Polynomial<F>(F(1))) {}
  RationalFunc(Polynomial<F> n, Polynomial<F> d) : num_(std::move(n)), den_(std::move(d)) {
    require(!den_.zero(), errc::division_by_zero, "rational function with zero denominator");
    reduce();
  }

  static RationalFunc t() { return RationalFunc(Polynomial<F>::t()); }

  const Polynomial<F>& num() const { return num_; }
  const Polynomial<F>& den() const { return den_; }

  friend RationalFunc operator+(const RationalFunc& a, const RationalFunc& b) {
    return RationalFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunc operator-(const RationalFunc& a, const RationalFunc& b) {
    return RationalFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunc operator*(const RationalFunc& a, const RationalFunc& b) {
    return RationalFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunc operator/(const RationalFunc& a, const RationalFunc& b) {
    require(!b.num_.zero(), errc::division_by_zero, "rational function division by zero");
    return RationalFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  RationalFunc operator-() const {
    RationalFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }
  RationalFunc& operator+=(const RationalFunc& o) { return *this = *this + o; }
  RationalFunc& operator-=(const RationalFunc& o) { return *this = *this - o; }
  RationalFunc& operator*=(const RationalFunc& o) { return *this = *this * o; }
  RationalFunc& operator/=(const RationalFunc& o) { return *this = *this / o; }

  friend bool operator==(const RationalFunc& a, const RationalFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunc& a, const RationalFunc& b) { return !(a == b); }

  friend RationalFunc inv(const RationalFunc& a) {
    require(!a.num_.zero(), errc::division_by_zero, "inverse of zero rational function");
    return RationalFunc(a.den_, a.num_);
  }

  friend bool is_zero(const RationalFunc& a) { return a.num_.zero(); }
  friend bool is_one(const RationalFunc& a) { return is_one(a.num_) && is_one(a.den_); }

  // +-c * t^k with k >= 0 and c a unit: the "unit monomial" test used for
  // pairing diagnostics. Returns (true, k, c) on success.
  struct MonomialView {
    bool is_monomial = false;
    long exponent = 0;
    F coefficient = F(0);
  };
  MonomialView as_monomial() const {
    MonomialView mv;
    if (num_.zero()) return mv;
    if (!is_one(den_)) {
      // allow monomial denominators t^m: then exponent may be negative
      for (long i = 0; i < den_.degree(); ++i)
        if (!is_zero(den_.coeff(static_cast<std::size_t>(i)))) return mv;
    }
    long lead = -1;
    for (long i = 0; i <= num_.degree(); ++i) {
      if (!is_zero(num_.coeff(static_cast<std::size_t>(i)))) {
        if (lead >= 0) return mv;
        lead = i;
      }
    }
    mv.is_monomial = true;
    mv.exponent = lead - den_.degree();
    mv.coefficient = num_.coeff(static_cast<std::size_t>(lead));
    return mv;
  }

  friend std::string to_string(const RationalFunc& a) {
    if (is_one(a.den_)) return to_string(a.num_);
    return "(" + to_string(a.num_) + ")/(" + to_string(a.den_) + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const RationalFunc& a) { return os << to_string(a); }

 private:
  void reduce() {
    if (num_.zero()) {
      den_ = Polynomial<F>(F(1));
      return;
    }
    Polynomial<F> g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
    F lc = den_.leading();
    if (!is_one(lc)) {
      F li = inv(lc);
      num_ = num_ * Polynomial<F>(li);
      den_ = den_ * Polynomial<F>(li);
    }
  }

  Polynomial<F> num_, den_;
};

}  // namespace heckelab
