#pragma once

// Polynomials in theta over the working field; elements of A = F_q[theta]
// when all coefficients lie in F_q.

#include "dlab/field.hpp"

#include <string>
#include <utility>
#include <vector>

namespace dlab {

class ThetaPoly {
public:
  ThetaPoly() = default;
  ThetaPoly(Fe c) {
    if (!c.is_zero()) c_.push_back(c);
  }
  explicit ThetaPoly(std::vector<Fe> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static ThetaPoly theta() { return monomial(Fe::one(), 1); }
  static ThetaPoly monomial(Fe c, int d);
  static ThetaPoly from_int(long n) { return ThetaPoly(Fe::from_int(n)); }
  /// From F_q codes, low degree first.
  static ThetaPoly from_codes(const std::vector<int>& codes);

  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_const() const { return c_.size() <= 1; }
  Fe lead() const { return c_.empty() ? Fe() : c_.back(); }
  Fe coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Fe(); }
  const std::vector<Fe>& coeffs() const { return c_; }
  /// Lowest degree with a nonzero coefficient; -1 for zero.
  int low_deg() const;
  bool in_A() const;

  ThetaPoly operator-() const;
  friend ThetaPoly operator+(const ThetaPoly& a, const ThetaPoly& b);
  friend ThetaPoly operator-(const ThetaPoly& a, const ThetaPoly& b);
  friend ThetaPoly operator*(const ThetaPoly& a, const ThetaPoly& b);
  friend ThetaPoly operator*(const ThetaPoly& a, Fe s);
  ThetaPoly& operator+=(const ThetaPoly& b);
  ThetaPoly& operator-=(const ThetaPoly& b);
  ThetaPoly& operator*=(const ThetaPoly& b) { return *this = *this * b; }
  friend bool operator==(const ThetaPoly& a, const ThetaPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const ThetaPoly& a, const ThetaPoly& b) { return !(a == b); }
  /// Total order: by degree, then coefficients from the top.
  friend bool operator<(const ThetaPoly& a, const ThetaPoly& b);

  /// Euclidean division; throws on zero divisor.
  static void divmod(const ThetaPoly& a, const ThetaPoly& b, ThetaPoly& quo, ThetaPoly& rem);
  friend ThetaPoly operator%(const ThetaPoly& a, const ThetaPoly& b);
  /// Exact division; throws std::domain_error when b does not divide a.
  ThetaPoly exact_div(const ThetaPoly& b) const;
  bool divides(const ThetaPoly& a) const;
  ThetaPoly monic() const;
  static ThetaPoly gcd(ThetaPoly a, ThetaPoly b);

  ThetaPoly shift(int d) const;
  ThetaPoly pow(long n) const;
  /// a^{q^k}: coefficients raised to q^k, theta -> theta^{q^k}.
  ThetaPoly frob(int k = 1) const;
  Fe eval(Fe x) const;
  /// Composition a(b).
  ThetaPoly compose(const ThetaPoly& b) const;

  std::string to_string(const std::string& var = "theta") const;

private:
  void normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Fe> c_;
};

std::ostream& operator<<(std::ostream& os, const ThetaPoly& a);

} // namespace dlab
