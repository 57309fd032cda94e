#pragma once

#include <Eigen/Core>

#include "heckelab/scalar/fp.hpp"
#include "heckelab/scalar/rational.hpp"
#include "heckelab/scalar/rational_function.hpp"

namespace Eigen {

namespace heckelab_detail {
template <class S>
struct ExactNumTraits {
  typedef S Real;
  typedef S NonInteger;
  typedef S Nested;
  typedef S Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60
  };
  static inline Real epsilon() { return S(0); }
  static inline Real dummy_precision() { return S(0); }
  static inline int digits10() { return 0; }
};
}  // namespace heckelab_detail

template <>
struct NumTraits<heckelab::Rational> : heckelab_detail::ExactNumTraits<heckelab::Rational> {};
template <>
struct NumTraits<heckelab::Integer> : heckelab_detail::ExactNumTraits<heckelab::Integer> {};
template <>
struct NumTraits<heckelab::Fp> : heckelab_detail::ExactNumTraits<heckelab::Fp> {};
template <class F>
struct NumTraits<heckelab::RationalFunc<F>>
    : heckelab_detail::ExactNumTraits<heckelab::RationalFunc<F>> {};

}  // namespace Eigen

namespace heckelab {

template <class F>
using DenseMatrix = Eigen::Matrix<F, Eigen::Dynamic, Eigen::Dynamic>;
template <class F>
using DenseVector = Eigen::Matrix<F, Eigen::Dynamic, 1>;

}  // namespace heckelab
