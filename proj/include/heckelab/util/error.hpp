#pragma once

#include <stdexcept>
#include <string>

namespace heckelab {

enum class errc {
  domain_mismatch,
  rank_mismatch,
  degree_mismatch,
  shape_mismatch,
  ambient_mismatch,
  basis_mismatch,
  mixed_parameters,
  invalid_partition,
  not_a_young_sum,
  not_a_hook_sum,
  not_an_involution,
  wrong_characteristic,
  range_error,
  denominator_vanishes,
  zero_parameter,
  non_integral_parameter,
  domain_not_field,
  hypothesis_fails,
  triangularity_violation,
  division_by_zero,
  internal,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::domain_mismatch: return "DomainMismatch";
    case errc::rank_mismatch: return "RankMismatch";
    case errc::degree_mismatch: return "DegreeMismatch";
    case errc::shape_mismatch: return "ShapeMismatch";
    case errc::ambient_mismatch: return "AmbientMismatch";
    case errc::basis_mismatch: return "BasisMismatch";
    case errc::mixed_parameters: return "MixedParameters";
    case errc::invalid_partition: return "InvalidPartition";
    case errc::not_a_young_sum: return "NotAYoungSum";
    case errc::not_a_hook_sum: return "NotAHookSum";
    case errc::not_an_involution: return "NotAnInvolution";
    case errc::wrong_characteristic: return "WrongCharacteristic";
    case errc::range_error: return "RangeError";
    case errc::denominator_vanishes: return "DenominatorVanishes";
    case errc::zero_parameter: return "ZeroParameter";
    case errc::non_integral_parameter: return "NonIntegralParameter";
    case errc::domain_not_field: return "DomainNotField";
    case errc::hypothesis_fails: return "HypothesisFails";
    case errc::triangularity_violation: return "TriangularityViolation";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::internal: return "InternalError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace heckelab
