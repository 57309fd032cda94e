#pragma once

#include <ostream>
#include <string>
#include <utility>

#include "heckelab/scalar/polynomial.hpp"
#include "heckelab/util/error.hpp"

namespace heckelab {

// Laurent polynomial over F: body * t^low, where the body has a nonzero
// constant term. Zero has the canonical empty representation (low = 0).
template <class F>
class LaurentPoly {
 public:
  LaurentPoly() : low_(0) {}
  LaurentPoly(int x) : low_(0), body_(Polynomial<F>(F(x))) {}  // NOLINT
  explicit LaurentPoly(const F& c) : low_(0), body_(Polynomial<F>(c)) {}
  LaurentPoly(long low, Polynomial<F> body) : low_(low), body_(std::move(body)) { normalize(); }

  static LaurentPoly t() { return LaurentPoly(1, Polynomial<F>(F(1))); }
  static LaurentPoly t_pow(long k, F c = F(1)) { return LaurentPoly(k, Polynomial<F>(std::move(c))); }

  bool zero() const { return body_.zero(); }
  long lowest_exponent() const {
    require(!zero(), errc::internal, "exponent range of zero Laurent polynomial");
    return low_;
  }
  long highest_exponent() const {
    require(!zero(), errc::internal, "exponent range of zero Laurent polynomial");
    return low_ + body_.degree();
  }
  F coeff(long k) const {
    if (zero() || k < low_ || k > low_ + body_.degree()) return F(0);
    return body_.coeff(static_cast<std::size_t>(k - low_));
  }
  const Polynomial<F>& body() const { return body_; }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.zero()) return b;
    if (b.zero()) return a;
    long low = std::min(a.low_, b.low_);
    return LaurentPoly(low, a.shifted_body(low) + b.shifted_body(low));
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }
  LaurentPoly operator-() const { return LaurentPoly(low_, -body_); }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.zero() || b.zero()) return LaurentPoly();
    return LaurentPoly(a.low_ + b.low_, a.body_ * b.body_);
  }
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.body_ == b.body_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  // Inverse exists only for unit monomials c * t^k.
  friend LaurentPoly inv(const LaurentPoly& a) {
    require(!a.zero() && a.body_.degree() == 0, errc::division_by_zero,
            "Laurent polynomial is not a unit");
    return LaurentPoly(-a.low_, Polynomial<F>(inv(a.body_.coeff(0))));
  }

  friend bool is_zero(const LaurentPoly& a) { return a.zero(); }
  friend bool is_one(const LaurentPoly& a) { return a.low_ == 0 && is_one(a.body_); }

  friend std::string to_string(const LaurentPoly& a) {
    if (a.zero()) return "0";
    if (a.low_ == 0) return to_string(a.body_);
    return "t^(" + std::to_string(a.low_) + ")*(" + to_string(a.body_) + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& a) { return os << to_string(a); }

 private:
  void normalize() {
    if (body_.zero()) {
      low_ = 0;
      return;
    }
    std::size_t shift = 0;
    while (is_zero(body_.coeff(shift))) ++shift;
    if (shift > 0) {
      std::vector<F> c(body_.coeffs().begin() + static_cast<long>(shift), body_.coeffs().end());
      body_ = Polynomial<F>(std::move(c));
      low_ += static_cast<long>(shift);
    }
  }

  Polynomial<F> shifted_body(long new_low) const {
    std::vector<F> c(static_cast<std::size_t>(low_ - new_low), F(0));
    for (const auto& x : body_.coeffs()) c.push_back(x);
    return Polynomial<F>(std::move(c));
  }

  long low_;
  Polynomial<F> body_;
};

}  // namespace heckelab
