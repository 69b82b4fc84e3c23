#pragma once

// Uniform hooks used by the generic containers (TPoly, Series, echelon).
//
// Coefficient types follow one convention: C() is zero, C(Fe) embeds the
// working field, x.is_zero() tests zero and x.frob(k) is the q^k-Frobenius
// twist of the coefficient. unit_inv() inverts units and throws otherwise.

#include "dlab/ratfunc.hpp"

#include <stdexcept>

namespace dlab {

inline Fe unit_inv(Fe x) { return x.inv(); }
inline RatFunc unit_inv(const RatFunc& x) { return x.inv(); }
inline ThetaPoly unit_inv(const ThetaPoly& x) {
  if (x.deg() != 0) throw std::domain_error("not a unit in A: " + x.to_string());
  return ThetaPoly(x.lead().inv());
}

inline std::string coeff_string(Fe x) { return x.to_string(); }
inline std::string coeff_string(const ThetaPoly& x) { return x.to_string(); }
inline std::string coeff_string(const RatFunc& x) { return x.to_string(); }

/// True if the coefficient is an exact zero divisor-free field element
/// (division is always allowed).
template <class C> struct is_field_coeff : std::false_type {};
template <> struct is_field_coeff<Fe> : std::true_type {};
template <> struct is_field_coeff<RatFunc> : std::true_type {};

} // namespace dlab
