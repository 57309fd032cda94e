#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "heckelab/util/error.hpp"

namespace heckelab {

// Element of a prime field F_p with the modulus carried per value.
//
// A value constructed from a bare integer (as Eigen does internally for
// Scalar(0)/Scalar(1)) is "untagged" (p == 0) and adopts the modulus of the
// first tagged value it meets. Untagged values behave as plain integers until
// then; inverting an untagged value is only defined for +-1.
class Fp {
 public:
  Fp() : v_(0), p_(0) {}
  Fp(int x) : v_(x), p_(0) {}  // NOLINT: implicit by design
  Fp(long x) : v_(x), p_(0) {}
  Fp(std::int64_t value, std::uint64_t p) : v_(value), p_(p) {
    require(p == 0 || p < (1ull << 31), errc::range_error, "modulus too large");
    normalize();
  }

  std::uint64_t modulus() const { return p_; }
  std::int64_t value() const { return v_; }

  friend Fp operator+(const Fp& a, const Fp& b) {
    auto [x, y, p] = align(a, b);
    Fp r;
    r.v_ = x + y;
    r.p_ = p;
    r.normalize();
    return r;
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    auto [x, y, p] = align(a, b);
    Fp r;
    r.v_ = x - y;
    r.p_ = p;
    r.normalize();
    return r;
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    auto [x, y, p] = align(a, b);
    Fp r;
    r.v_ = x * y;
    r.p_ = p;
    r.normalize();
    return r;
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * inv(b); }
  Fp operator-() const {
    Fp r = *this;
    r.v_ = -r.v_;
    r.normalize();
    return r;
  }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  Fp& operator/=(const Fp& o) { return *this = *this / o; }

  friend bool operator==(const Fp& a, const Fp& b) {
    auto [x, y, p] = align(a, b);
    if (p == 0) return x == y;
    return x == y;  // both already reduced mod p by align
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  friend Fp inv(const Fp& a) {
    if (a.p_ == 0) {
      require(a.v_ == 1 || a.v_ == -1, errc::division_by_zero,
              "inverse of untagged Fp value " + std::to_string(a.v_));
      return a;
    }
    require(a.v_ != 0, errc::division_by_zero, "inverse of zero in F_p");
    // extended Euclid
    std::int64_t p = static_cast<std::int64_t>(a.p_);
    std::int64_t t = 0, newt = 1, r = p, newr = a.v_;
    while (newr != 0) {
      std::int64_t q = r / newr;
      std::int64_t tmp = t - q * newt;
      t = newt;
      newt = tmp;
      tmp = r - q * newr;
      r = newr;
      newr = tmp;
    }
    require(r == 1, errc::domain_mismatch, "modulus is not prime (non-invertible element)");
    return Fp(t, a.p_);
  }

  friend bool is_zero(const Fp& a) { return a.v_ == 0; }
  friend bool is_one(const Fp& a) { return a.p_ == 0 ? a.v_ == 1 : a.v_ == 1; }
  friend std::string to_string(const Fp& a) { return std::to_string(a.v_); }
  friend std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << to_string(a); }

 private:
  void normalize() {
    if (p_ == 0) return;
    std::int64_t p = static_cast<std::int64_t>(p_);
    v_ %= p;
    if (v_ < 0) v_ += p;
  }

  struct Aligned {
    std::int64_t x, y;
    std::uint64_t p;
  };
  static Aligned align(const Fp& a, const Fp& b) {
    std::uint64_t p = a.p_ ? a.p_ : b.p_;
    if (a.p_ && b.p_ && a.p_ != b.p_)
      fail(errc::domain_mismatch, "F_p values with different moduli " + std::to_string(a.p_) +
                                      " and " + std::to_string(b.p_));
    auto red = [p](std::int64_t v) {
      if (p == 0) return v;
      std::int64_t m = static_cast<std::int64_t>(p);
      v %= m;
      if (v < 0) v += m;
      return v;
    };
    return {red(a.v_), red(b.v_), p};
  }

  std::int64_t v_;
  std::uint64_t p_;
};

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace heckelab
