#pragma once

// Elements of K = F_q(theta) in reduced form with monic denominator.

#include "dlab/theta_poly.hpp"

namespace dlab {

class RatFunc {
public:
  RatFunc() : den_(Fe::one()) {}
  RatFunc(const ThetaPoly& n) : num_(n), den_(Fe::one()) {}
  RatFunc(Fe c) : num_(c), den_(Fe::one()) {}
  RatFunc(const ThetaPoly& n, const ThetaPoly& d);

  static RatFunc theta() { return RatFunc(ThetaPoly::theta()); }
  static RatFunc from_int(long n) { return RatFunc(Fe::from_int(n)); }

  const ThetaPoly& num() const { return num_; }
  const ThetaPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_poly() const { return den_.is_one(); }
  /// Throws if not a polynomial.
  const ThetaPoly& as_poly() const;
  /// deg num - deg den; the infinity valuation is its negative.
  int degree() const;

  RatFunc operator-() const { return RatFunc(-num_, den_, true); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }
  friend bool operator<(const RatFunc& a, const RatFunc& b) {
    if (a.num_ != b.num_) return a.num_ < b.num_;
    return a.den_ < b.den_;
  }

  RatFunc inv() const;
  RatFunc pow(long n) const;
  RatFunc frob(int k = 1) const { return RatFunc(num_.frob(k), den_.frob(k), true); }
  /// Evaluates at theta = x; throws if the denominator vanishes.
  Fe eval(Fe x) const;

  std::string to_string() const;

private:
  RatFunc(ThetaPoly n, ThetaPoly d, bool /*reduced*/) : num_(std::move(n)), den_(std::move(d)) {}
  ThetaPoly num_, den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& a);

} // namespace dlab
