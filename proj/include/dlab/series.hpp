#pragma once

// Truncated Laurent series in u over a coefficient ring C.
//
// A series stores coefficients for exponents n0, n0+1, ... and a truncation
// order N: coefficients of u^n are known for n < N. Storage may end before
// N; missing entries are zero. N == kExact marks an exact (finite) series.

#include "dlab/ring.hpp"
#include "dlab/tpoly.hpp"

#include <algorithm>
#include <climits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dlab {

class PrecisionError : public std::runtime_error {
public:
  PrecisionError(const std::string& what, long needed = -1)
      : std::runtime_error(what), needed_(needed) {}
  long needed() const { return needed_; }

private:
  long needed_;
};

/// Grading tag (mu, nu, m, l): weight, t-weight, type, depth.
struct Grade {
  int mu = 0, nu = 0, m = 0, l = 0;
  friend bool operator==(const Grade&, const Grade&) = default;
};

inline constexpr long kExact = 1L << 40;

template <class C> class Series {
public:
  Series() : n0_(0), N_(kExact) {}
  /// Exact constant.
  Series(const C& c) : n0_(0), N_(kExact) {
    if (!c.is_zero()) c_.push_back(c);
  }
  Series(long n0, std::vector<C> coeffs, long N) : n0_(n0), N_(N), c_(std::move(coeffs)) {
    clip();
  }

  /// c * u^n, exact.
  static Series monomial(const C& c, long n) { return Series(n, {c}, kExact); }
  static Series u() { return monomial(C(Fe::one()), 1); }
  /// Zero with truncation N.
  static Series zero(long N) { return Series(0, {}, N); }

  long n0() const { return n0_; }
  long N() const { return N_; }
  bool exact() const { return N_ >= kExact; }
  const std::vector<C>& raw() const { return c_; }
  long end() const { return n0_ + static_cast<long>(c_.size()); }

  const std::optional<Grade>& grade() const { return grade_; }
  Series& set_grade(Grade g) {
    grade_ = g;
    return *this;
  }

  /// Coefficient of u^n; n must be below the truncation.
  C coeff(long n) const {
    if (n >= N_)
      throw PrecisionError("coefficient u^" + std::to_string(n) + " beyond truncation " +
                               std::to_string(N_),
                           n + 1);
    if (n < n0_ || n >= end()) return C();
    return c_[n - n0_];
  }
  const C* coeff_ptr(long n) const {
    if (n < n0_ || n >= end()) return nullptr;
    return &c_[n - n0_];
  }

  /// Lowest exponent with nonzero coefficient, or N if zero to precision.
  long valuation() const {
    for (size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return n0_ + static_cast<long>(i);
    return N_;
  }
  bool is_zero() const { return valuation() >= N_; }
  C lead() const {
    long v = valuation();
    if (v >= N_) throw PrecisionError("series is zero to precision " + std::to_string(N_));
    return c_[v - n0_];
  }

  Series truncate(long N) const {
    if (N >= N_) return *this;
    Series r = *this;
    r.N_ = N;
    r.clip();
    return r;
  }

  Series operator-() const {
    Series r = *this;
    for (C& x : r.c_) x = -x;
    return r;
  }
  friend Series operator+(const Series& a, const Series& b) { return combine(a, b, false); }
  friend Series operator-(const Series& a, const Series& b) { return combine(a, b, true); }
  Series& operator+=(const Series& b) { return *this = *this + b; }
  Series& operator-=(const Series& b) { return *this = *this - b; }

  friend Series operator*(const Series& a, const Series& b) {
    const long va = a.valuation(), vb = b.valuation();
    long N = std::min(sat(a.N_, vb), sat(b.N_, va));
    Series r;
    r.N_ = N;
    if (va >= a.N_ || vb >= b.N_) {
      r.n0_ = std::min(N, va + vb);
      r.tag_product(a, b);
      return r;
    }
    r.n0_ = va + vb;
    long top = std::min(N, a.end() + b.end() - 1);
    if (top > r.n0_) r.c_.assign(top - r.n0_, C());
    // Collect nonzero entries of b once; u-supports are often sparse.
    std::vector<std::pair<long, const C*>> bnz;
    for (long j = vb; j < b.end(); ++j) {
      const C& y = b.c_[j - b.n0_];
      if (!y.is_zero()) bnz.emplace_back(j, &y);
    }
    for (long i = va; i < a.end(); ++i) {
      const C& x = a.c_[i - a.n0_];
      if (x.is_zero()) continue;
      for (auto& [j, y] : bnz) {
        long e = i + j;
        if (e >= top) break;
        r.c_[e - r.n0_] += x * *y;
      }
    }
    r.clip();
    r.tag_product(a, b);
    return r;
  }
  Series& operator*=(const Series& b) { return *this = *this * b; }

  Series scale(const C& s) const {
    Series r = *this;
    for (C& x : r.c_) x *= s;
    r.clip();
    return r;
  }
  /// Multiplication by u^k.
  Series shift(long k) const {
    Series r = *this;
    r.n0_ += k;
    if (!r.exact()) r.N_ += k;
    return r;
  }

  /// Multiplicative inverse; the lowest nonzero coefficient must be a unit.
  Series inv() const {
    const long v = valuation();
    if (v >= N_) throw PrecisionError("inverse of a series that is zero to precision");
    const C l = unit_inv(c_[v - n0_]);
    // f = u^v F, F known mod u^{N-v}; 1/f = u^{-v} G, G known mod u^{N-v}.
    long len;
    if (exact()) {
      // An exact non-monomial series has an infinite inverse; callers must
      // truncate first.
      if (end() - v > 1)
        throw PrecisionError("inverse of an exact polynomial needs a truncation");
      return Series(-v, {l}, kExact);
    }
    len = N_ - v;
    std::vector<std::pair<long, const C*>> fnz;
    for (long k = 1; v + k < end(); ++k) {
      const C& y = c_[v + k - n0_];
      if (!y.is_zero()) fnz.emplace_back(k, &y);
    }
    std::vector<C> g(len);
    g[0] = l;
    for (long n = 1; n < len; ++n) {
      C s;
      for (auto& [k, y] : fnz) {
        if (k > n) break;
        const C& gk = g[n - k];
        if (!gk.is_zero()) s += *y * gk;
      }
      if (!s.is_zero()) g[n] = -(s * l);
    }
    Series r(-v, std::move(g), N_ - 2 * v);
    if (grade_) r.grade_ = Grade{-grade_->mu, -grade_->nu, -grade_->m, 0};
    return r;
  }
  friend Series operator/(const Series& a, const Series& b) { return a * b.inv(); }

  Series pow(long n) const {
    if (n < 0) return inv().pow(-n);
    Series result(C(Fe::one())), base = *this;
    while (n > 0) {
      if (n & 1) result *= base;
      n >>= 1;
      if (n) base *= base;
    }
    return result;
  }

  /// Anderson twist: c u^j -> c^{(k)} u^{q^k j}.
  Series twist(int k = 1) const {
    if (k == 0) return *this;
    long qk = 1;
    for (int i = 0; i < k; ++i) qk *= field().q();
    Series r;
    r.n0_ = n0_ * qk;
    r.N_ = exact() ? kExact : N_ * qk;
    if (!c_.empty()) {
      r.c_.assign((c_.size() - 1) * qk + 1, C());
      for (size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) r.c_[i * qk] = c_[i].frob(k);
    }
    r.grade_ = grade_;
    if (r.grade_) r.grade_->mu *= static_cast<int>(qk);
    r.clip();
    return r;
  }

  /// Applies f to every coefficient.
  template <class F> auto map(F&& f) const {
    using D = decltype(f(std::declval<const C&>()));
    std::vector<D> v;
    v.reserve(c_.size());
    for (const C& x : c_) v.push_back(f(x));
    Series<D> r(n0_, std::move(v), N_);
    if (grade_) r.set_grade(*grade_);
    return r;
  }

  /// True when every nonzero coefficient below N sits at an exponent
  /// congruent to r mod d.
  bool support_congruent(long r, long d) const {
    for (long n = n0_; n < end(); ++n) {
      if (c_[n - n0_].is_zero()) continue;
      if (((n - r) % d + d) % d != 0) return false;
    }
    return true;
  }

  /// Equality of all coefficients below min(N_a, N_b).
  friend bool agree(const Series& a, const Series& b) { return (a - b).is_zero(); }

  std::string to_string(const std::string& var = "u") const {
    std::string s;
    for (long n = n0_; n < end(); ++n) {
      const C& x = c_[n - n0_];
      if (x.is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += "(" + coeff_string(x) + ")";
      if (n != 0) s += "*" + var + (n == 1 ? "" : "^" + std::to_string(n));
    }
    if (s.empty()) s = "0";
    if (!exact()) s += " + O(" + var + "^" + std::to_string(N_) + ")";
    return s;
  }

private:
  static long sat(long a, long b) { return a >= kExact ? kExact : std::min(kExact, a + b); }

  static Series combine(const Series& a, const Series& b, bool sub) {
    Series r;
    r.N_ = std::min(a.N_, b.N_);
    // Empty operands carry arbitrary n0_; keep them out of the range.
    if (a.c_.empty()) r.n0_ = b.c_.empty() ? std::min(a.n0_, b.n0_) : b.n0_;
    else if (b.c_.empty()) r.n0_ = a.n0_;
    else r.n0_ = std::min(a.n0_, b.n0_);
    r.n0_ = std::min(r.n0_, r.N_);
    long top = std::min(r.N_, std::max(a.c_.empty() ? r.n0_ : a.end(), b.c_.empty() ? r.n0_ : b.end()));
    if (top > r.n0_) r.c_.assign(top - r.n0_, C());
    for (long n = a.n0_; n < std::min(a.end(), top); ++n) r.c_[n - r.n0_] = a.c_[n - a.n0_];
    for (long n = b.n0_; n < std::min(b.end(), top); ++n) {
      if (sub)
        r.c_[n - r.n0_] -= b.c_[n - b.n0_];
      else
        r.c_[n - r.n0_] += b.c_[n - b.n0_];
    }
    r.clip();
    if (a.grade_ && b.grade_ && *a.grade_ == *b.grade_) r.grade_ = a.grade_;
    else if (a.grade_ && !b.grade_) r.grade_ = a.grade_;
    else if (b.grade_ && !a.grade_) r.grade_ = b.grade_;
    return r;
  }

  void tag_product(const Series& a, const Series& b) {
    if (a.grade_ && b.grade_)
      grade_ = Grade{a.grade_->mu + b.grade_->mu, a.grade_->nu + b.grade_->nu,
                     a.grade_->m + b.grade_->m, a.grade_->l + b.grade_->l};
  }

  // Drops storage at or beyond N and trailing zeros.
  void clip() {
    if (!exact() && end() > N_) c_.resize(std::max(0L, N_ - n0_));
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  long n0_;
  long N_;
  std::vector<C> c_;
  std::optional<Grade> grade_;
};

using SeriesA = Series<ThetaPoly>;
using SeriesK = Series<RatFunc>;
using SeriesF = Series<Fe>;
using SeriesTA = Series<TA>;
using SeriesTF = Series<TF>;
using SeriesTK = Series<TK>;

} // namespace dlab
