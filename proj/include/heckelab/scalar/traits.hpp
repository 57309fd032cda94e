#pragma once

#include <string>
#include <type_traits>

#include "heckelab/scalar/fp.hpp"
#include "heckelab/scalar/laurent.hpp"
#include "heckelab/scalar/polynomial.hpp"
#include "heckelab/scalar/rational.hpp"
#include "heckelab/scalar/rational_function.hpp"
#include "heckelab/util/error.hpp"

namespace heckelab {

template <class F>
struct scalar_info;

template <>
struct scalar_info<Rational> {
  static constexpr bool is_field = true;
  static std::string name() { return "Q"; }
};
template <>
struct scalar_info<Integer> {
  static constexpr bool is_field = false;
  static std::string name() { return "Z"; }
};
template <>
struct scalar_info<Fp> {
  static constexpr bool is_field = true;
  static std::string name() { return "Fp"; }
};
template <class F>
struct scalar_info<RationalFunc<F>> {
  static constexpr bool is_field = true;
  static std::string name() { return scalar_info<F>::name() + "(t)"; }
};
template <class F>
struct scalar_info<LaurentPoly<F>> {
  static constexpr bool is_field = false;
  static std::string name() { return scalar_info<F>::name() + "[t,1/t]"; }
};

template <class F>
inline constexpr bool is_field_v = scalar_info<F>::is_field;

// ---- coefficient maps between domains -------------------------------------
//
// map_into(x, proto) carries x into the domain of proto; proto supplies any
// runtime context (an F_p modulus). Used by specialization.

inline Rational map_into(const Rational& x, const Rational&) { return x; }

inline Fp map_into(const Rational& x, const Fp& proto) {
  require(proto.modulus() != 0, errc::domain_mismatch, "target F_p value carries no modulus");
  std::uint64_t p = proto.modulus();
  Integer pz(static_cast<long>(p));
  Fp den(fdiv_r(x.den(), pz).to_long(), p);
  require(!is_zero(den), errc::denominator_vanishes,
          "denominator of " + to_string(x) + " vanishes mod " + std::to_string(p));
  Fp num(fdiv_r(x.num(), pz).to_long(), p);
  return num / den;
}

inline Fp map_into(const Fp& x, const Fp& proto) {
  if (x.modulus() != 0 && proto.modulus() != 0)
    require(x.modulus() == proto.modulus(), errc::domain_mismatch, "F_p modulus mismatch");
  return x + (proto - proto);  // absorbs the target modulus
}

template <class F>
RationalFunc<F> map_into(const F& x, const RationalFunc<F>&) {
  return RationalFunc<F>(x);
}

// ---- specialization t -> qbar ----------------------------------------------

template <class F, class G>
G specialize(const RationalFunc<F>& s, const G& qbar) {
  static_assert(is_field_v<G>, "specialization target must be a field");
  require(!is_zero(qbar), errc::zero_parameter, "specialization at q = 0");
  auto eval = [&](const Polynomial<F>& p) {
    G acc(0);
    for (std::size_t i = p.coeffs().size(); i-- > 0;)
      acc = acc * qbar + map_into(p.coeffs()[i], qbar);
    return acc;
  };
  G den = eval(s.den());
  require(!is_zero(den), errc::denominator_vanishes,
          "denominator of " + to_string(s) + " vanishes at the given parameter");
  return eval(s.num()) / den;
}

template <class F, class G>
G specialize(const LaurentPoly<F>& s, const G& qbar) {
  static_assert(is_field_v<G>, "specialization target must be a field");
  require(!is_zero(qbar), errc::zero_parameter, "specialization at q = 0");
  if (s.zero()) return G(0);
  G acc(0);
  G qinvpow(1);
  // t^low * body(t): evaluate body by Horner, then multiply by qbar^low.
  for (std::size_t i = s.body().coeffs().size(); i-- > 0;)
    acc = acc * qbar + map_into(s.body().coeffs()[i], qbar);
  long low = s.lowest_exponent();
  if (low >= 0) {
    for (long k = 0; k < low; ++k) acc = acc * qbar;
  } else {
    G qi = inv(qbar);
    for (long k = 0; k < -low; ++k) acc = acc * qi;
  }
  (void)qinvpow;
  return acc;
}

}  // namespace heckelab
