#pragma once

// Truncated Laurent series in x = y^{-1}, y^{q-1} = -theta, with
// coefficients in F_{q^2} (a subfield of the working field). This is the
// numeric model of C: theta = -x^{-(q-1)} exactly.
//
// Precision is absolute: coefficients of x^j are known for j < prec().
// Exact values (finite Laurent polynomials) have prec() == kExact; inverting
// one truncates it first so the result is known below working_precision().

#include "dlab/series.hpp"

#include <string>

namespace dlab {

/// Absolute precision used when an exact value must be inverted or summed
/// as an infinite series. Thread-local; see PrecisionScope.
long working_precision();
void set_working_precision(long P);

class PrecisionScope {
public:
  explicit PrecisionScope(long P) : prev_(working_precision()) { set_working_precision(P); }
  ~PrecisionScope() { set_working_precision(prev_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
  long prev_;
};

class InfLaurent {
public:
  InfLaurent() = default;
  InfLaurent(Fe c) : s_(c) {}
  explicit InfLaurent(SeriesF s) : s_(std::move(s)) {}

  /// c x^j, exact.
  static InfLaurent monomial(Fe c, long j) { return InfLaurent(SeriesF::monomial(c, j)); }
  static InfLaurent x() { return monomial(Fe::one(), 1); }
  /// y = (-theta)^{1/(q-1)} = x^{-1}.
  static InfLaurent y() { return monomial(Fe::one(), -1); }
  static InfLaurent theta();
  static InfLaurent from_A(const ThetaPoly& a);
  static InfLaurent from_K(const RatFunc& a);
  static InfLaurent zero_to(long P) { return InfLaurent(SeriesF::zero(P)); }

  const SeriesF& series() const { return s_; }
  long prec() const { return s_.N(); }
  bool exact() const { return s_.exact(); }
  /// Lowest nonzero exponent, or prec() if zero to precision.
  long val() const { return s_.valuation(); }
  bool is_zero() const { return s_.is_zero(); }
  Fe coeff(long j) const { return s_.coeff(j); }
  /// Leading coefficient; throws PrecisionError when zero to precision.
  Fe lead() const { return s_.lead(); }

  InfLaurent truncate(long P) const { return InfLaurent(s_.truncate(P)); }

  InfLaurent operator-() const { return InfLaurent(-s_); }
  friend InfLaurent operator+(const InfLaurent& a, const InfLaurent& b) {
    return InfLaurent(a.s_ + b.s_);
  }
  friend InfLaurent operator-(const InfLaurent& a, const InfLaurent& b) {
    return InfLaurent(a.s_ - b.s_);
  }
  friend InfLaurent operator*(const InfLaurent& a, const InfLaurent& b) {
    return InfLaurent(a.s_ * b.s_);
  }
  friend InfLaurent operator/(const InfLaurent& a, const InfLaurent& b) { return a * b.inv(); }
  InfLaurent& operator+=(const InfLaurent& b) { return *this = *this + b; }
  InfLaurent& operator-=(const InfLaurent& b) { return *this = *this - b; }
  InfLaurent& operator*=(const InfLaurent& b) { return *this = *this * b; }

  InfLaurent inv() const;
  /// Inverse known below absolute exponent P (exact inputs are truncated
  /// accordingly; inexact inputs keep their own bound).
  InfLaurent inv_to(long P) const;
  InfLaurent pow(long n) const;
  /// x -> x^{q^k}: the q^k-th power map (Frobenius), also the coefficient twist.
  InfLaurent frob(int k = 1) const { return InfLaurent(s_.twist(k)); }

  /// Laurent polynomial in theta^{-1/(q-1)} with an O(.) marker.
  std::string to_string(long max_terms = 12) const;

private:
  SeriesF s_;
};

inline InfLaurent unit_inv(const InfLaurent& x) { return x.inv(); }
inline std::string coeff_string(const InfLaurent& x) { return x.to_string(); }

/// Decomposes c in F_{q^2} as a + b*zeta with a, b in F_q.
std::pair<Fe, Fe> fq2_coords(Fe c);

/// Distance exponent of z from K_infty: the smallest j such that the x^j
/// term of z is not in K_infty; |z|_i = q^{-j/(q-1)}. Throws if z is in
/// K_infty to precision.
long imaginary_exponent(const InfLaurent& z);

} // namespace dlab
