#pragma once

// Polynomials in t over a coefficient ring C. The twist acts on
// coefficients only; t is fixed.

#include "dlab/ring.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace dlab {

template <class C> class TPoly {
public:
  TPoly() = default;
  TPoly(const C& c) {
    if (!c.is_zero()) c_.push_back(c);
  }
  TPoly(Fe c) : TPoly(C(c)) {}
  explicit TPoly(std::vector<C> v) : c_(std::move(v)) { normalize(); }

  static TPoly t() { return monomial(C(Fe::one()), 1); }
  static TPoly monomial(const C& c, int d) {
    TPoly r;
    if (c.is_zero()) return r;
    r.c_.assign(d + 1, C());
    r.c_[d] = c;
    return r;
  }

  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_const() const { return c_.size() <= 1; }
  const C& coeff_ref(int i) const { return c_[i]; }
  C coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : C(); }
  const std::vector<C>& coeffs() const { return c_; }
  C constant() const { return coeff(0); }

  TPoly operator-() const {
    TPoly r = *this;
    for (C& x : r.c_) x = -x;
    return r;
  }
  TPoly& operator+=(const TPoly& b) {
    if (b.c_.size() > c_.size()) c_.resize(b.c_.size());
    for (size_t i = 0; i < b.c_.size(); ++i) c_[i] += b.c_[i];
    normalize();
    return *this;
  }
  TPoly& operator-=(const TPoly& b) {
    if (b.c_.size() > c_.size()) c_.resize(b.c_.size());
    for (size_t i = 0; i < b.c_.size(); ++i) c_[i] -= b.c_[i];
    normalize();
    return *this;
  }
  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(const TPoly& a, const TPoly& b) {
    if (a.is_zero() || b.is_zero()) return TPoly();
    if (b.c_.size() == 1) return a.scale(b.c_[0]);
    if (a.c_.size() == 1) return b.scale(a.c_[0]);
    std::vector<C> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j].is_zero()) continue;
        r[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return TPoly(std::move(r));
  }
  TPoly& operator*=(const TPoly& b) { return *this = *this * b; }
  friend bool operator==(const TPoly& a, const TPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const TPoly& a, const TPoly& b) { return !(a == b); }

  TPoly scale(const C& s) const {
    if (s.is_zero()) return TPoly();
    TPoly r = *this;
    for (C& x : r.c_) x *= s;
    r.normalize();
    return r;
  }
  TPoly frob(int k = 1) const {
    TPoly r = *this;
    for (C& x : r.c_) x = x.frob(k);
    return r;
  }
  TPoly pow(long n) const {
    TPoly result(C(Fe::one())), base = *this;
    while (n > 0) {
      if (n & 1) result *= base;
      n >>= 1;
      if (n) base *= base;
    }
    return result;
  }
  template <class X> X eval(const X& x) const {
    X r;
    for (int i = deg(); i >= 0; --i) r = r * x + X(c_[i]);
    return r;
  }
  /// Applies f to every coefficient.
  template <class F> auto map(F&& f) const {
    using D = decltype(f(std::declval<const C&>()));
    std::vector<D> v;
    v.reserve(c_.size());
    for (const C& x : c_) v.push_back(f(x));
    return TPoly<D>(std::move(v));
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = deg(); i >= 0; --i) {
      if (c_[i].is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      std::string s = coeff_string(c_[i]);
      if (i == 0) {
        os << s;
        continue;
      }
      if (s != "1") os << "(" << s << ")*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
    return os.str();
  }

private:
  void normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<C> c_;
};

template <class C> TPoly<C> unit_inv(const TPoly<C>& x) {
  if (x.deg() != 0) throw std::domain_error("not a unit in the t-polynomial ring");
  return TPoly<C>(unit_inv(x.coeff(0)));
}

template <class C> std::string coeff_string(const TPoly<C>& x) { return x.to_string(); }

using TA = TPoly<ThetaPoly>; ///< F_q[t, theta]
using TK = TPoly<RatFunc>;   ///< K[t]
using TF = TPoly<Fe>;        ///< F_{q^k}[t], theta specialized

/// t - theta^{q^k} in F_q[t, theta].
inline TA t_minus_theta_qk(int k) {
  return TA::t() - TA(ThetaPoly::theta().frob(k));
}

/// Specializes t = theta: F_q[t,theta] -> A.
inline ThetaPoly at_t_theta(const TA& x) { return x.eval(ThetaPoly::theta()); }

} // namespace dlab
