#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "heckelab/util/error.hpp"

namespace heckelab {

// Dense univariate polynomial over an exact field F, coefficients in
// ascending degree order with no trailing zeros.
template <class F>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(F c) {
    if (!is_zero(c)) coeffs_.push_back(std::move(c));
  }
  explicit Polynomial(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial t() { return monomial(F(1), 1); }
  static Polynomial monomial(F c, std::size_t deg) {
    Polynomial p;
    if (is_zero(c)) return p;
    p.coeffs_.assign(deg + 1, F(0));
    p.coeffs_[deg] = std::move(c);
    return p;
  }

  const std::vector<F>& coeffs() const { return coeffs_; }
  bool zero() const { return coeffs_.empty(); }
  // degree of the zero polynomial is -1 by convention
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const F& leading() const {
    require(!zero(), errc::internal, "leading coefficient of zero polynomial");
    return coeffs_.back();
  }
  F coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : F(0); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<F> c(std::max(a.coeffs_.size(), b.coeffs_.size()), F(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.zero() || b.zero()) return Polynomial();
    std::vector<F> c(a.coeffs_.size() + b.coeffs_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
  }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Euclidean division by a polynomial with invertible leading coefficient.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    require(!b.zero(), errc::division_by_zero, "polynomial division by zero");
    Polynomial rem = a, quot;
    F lb = inv(b.leading());
    long db = b.degree();
    while (!rem.zero() && rem.degree() >= db) {
      long k = rem.degree() - db;
      F c = rem.leading() * lb;
      Polynomial mono = Polynomial::monomial(c, static_cast<std::size_t>(k));
      quot += mono;
      rem -= mono * b;
    }
    return {quot, rem};
  }

  friend Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a, y = b;
    while (!y.zero()) {
      auto [q, r] = divmod(x, y);
      x = y;
      y = r;
    }
    if (x.zero()) return x;
    return x.monic();
  }

  Polynomial monic() const {
    if (zero()) return *this;
    F li = inv(leading());
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = c * li;
    return r;
  }

  template <class G>
  G evaluate_mapped(const G& x, G (*coeff_map)(const F&)) const {
    G acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeff_map(coeffs_[i]);
    return acc;
  }

  F evaluate(const F& x) const {
    F acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
  }

  friend bool is_zero(const Polynomial& a) { return a.zero(); }
  friend bool is_one(const Polynomial& a) { return a.coeffs_.size() == 1 && is_one(a.coeffs_[0]); }

  friend std::string to_string(const Polynomial& a) {
    if (a.zero()) return "0";
    std::string s;
    for (std::size_t i = a.coeffs_.size(); i-- > 0;) {
      if (is_zero(a.coeffs_[i])) continue;
      if (!s.empty()) s += " + ";
      std::string c = to_string(a.coeffs_[i]);
      if (i == 0) {
        s += c;
      } else {
        std::string tpow = (i == 1) ? "t" : "t^" + std::to_string(i);
        s += (c == "1") ? tpow : (c == "-1" ? "-" + tpow : c + "*" + tpow);
      }
    }
    return s;
  }
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& a) { return os << to_string(a); }

 private:
  void trim() {
    while (!coeffs_.empty() && is_zero(coeffs_.back())) coeffs_.pop_back();
  }
  std::vector<F> coeffs_;
};

}  // namespace heckelab
