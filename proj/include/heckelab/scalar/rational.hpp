#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>

#include "heckelab/util/error.hpp"

namespace heckelab {

// Arbitrary-precision integer, value-semantic wrapper around mpz_class.
class Integer {
 public:
  Integer() : v_(0) {}
  Integer(int x) : v_(x) {}          // NOLINT: implicit by design, Eigen builds Scalar(0)
  Integer(long x) : v_(static_cast<long>(x)) {}
  explicit Integer(const mpz_class& x) : v_(x) {}
  explicit Integer(const std::string& s) : v_(s) {}

  const mpz_class& raw() const { return v_; }

  friend Integer operator+(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ + b.v_)); }
  friend Integer operator-(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ - b.v_)); }
  friend Integer operator*(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ * b.v_)); }
  Integer operator-() const { return Integer(mpz_class(-v_)); }
  Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
  Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
  Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }
  friend bool operator==(const Integer& a, const Integer& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Integer& a, const Integer& b) { return a.v_ != b.v_; }
  friend bool operator<(const Integer& a, const Integer& b) { return a.v_ < b.v_; }

  // Exact quotient; the caller guarantees divisibility.
  friend Integer exact_div(const Integer& a, const Integer& b) {
    require(b.v_ != 0, errc::division_by_zero, "exact_div by zero");
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    require(r == 0, errc::internal, "exact_div: not divisible");
    return Integer(q);
  }

  // Floor division / remainder (remainder has the sign of b ... use fdiv: remainder in [0,|b|) for b>0).
  friend Integer fdiv_q(const Integer& a, const Integer& b) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return Integer(q);
  }
  friend Integer fdiv_r(const Integer& a, const Integer& b) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return Integer(r);
  }

  friend Integer gcd(const Integer& a, const Integer& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return Integer(g);
  }

  friend Integer abs(const Integer& a) { return Integer(mpz_class(abs(a.v_))); }

  bool divides(const Integer& b) const {
    if (v_ == 0) return b.v_ == 0;
    return mpz_divisible_p(b.v_.get_mpz_t(), v_.get_mpz_t()) != 0;
  }

  long to_long() const {
    require(v_.fits_slong_p(), errc::range_error, "Integer does not fit in long");
    return v_.get_si();
  }

  friend bool is_zero(const Integer& a) { return a.v_ == 0; }
  friend bool is_one(const Integer& a) { return a.v_ == 1; }
  friend std::string to_string(const Integer& a) { return a.v_.get_str(); }
  friend std::ostream& operator<<(std::ostream& os, const Integer& a) { return os << to_string(a); }

 private:
  mpz_class v_;
};

// Exact rational number; always stored reduced with positive denominator
// (mpq_class canonical form).
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int x) : v_(x) {}  // NOLINT: implicit by design
  Rational(long num, long den) : v_(num, den) {
    require(den != 0, errc::division_by_zero, "Rational with zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& x) : v_(x) { v_.canonicalize(); }
  explicit Rational(const Integer& x) : v_(x.raw()) {}
  explicit Rational(const std::string& s) : v_(s) { v_.canonicalize(); }

  const mpq_class& raw() const { return v_; }
  Integer num() const { return Integer(v_.get_num()); }
  Integer den() const { return Integer(v_.get_den()); }

  friend Rational operator+(const Rational& a, const Rational& b) { return wrap(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return wrap(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return wrap(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    require(b.v_ != 0, errc::division_by_zero, "Rational division by zero");
    return wrap(a.v_ / b.v_);
  }
  Rational operator-() const { return wrap(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

  friend Rational inv(const Rational& a) {
    require(a.v_ != 0, errc::division_by_zero, "inverse of zero");
    return wrap(1 / a.v_);
  }

  friend bool is_zero(const Rational& a) { return a.v_ == 0; }
  friend bool is_one(const Rational& a) { return a.v_ == 1; }
  friend std::string to_string(const Rational& a) { return a.v_.get_str(); }
  friend std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << to_string(a); }

  bool is_integral() const { return v_.get_den() == 1; }

 private:
  static Rational wrap(const mpq_class& x) {
    Rational r;
    r.v_ = x;
    r.v_.canonicalize();
    return r;
  }
  mpq_class v_;
};

}  // namespace heckelab
