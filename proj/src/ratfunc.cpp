#include "dlab/ratfunc.hpp"

#include <stdexcept>

namespace dlab {

RatFunc::RatFunc(const ThetaPoly& n, const ThetaPoly& d) {
  if (d.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (n.is_zero()) {
    den_ = ThetaPoly(Fe::one());
    return;
  }
  ThetaPoly g = ThetaPoly::gcd(n, d);
  num_ = n.exact_div(g);
  den_ = d.exact_div(g);
  Fe l = den_.lead();
  if (!l.is_one()) {
    Fe li = l.inv();
    num_ = num_ * li;
    den_ = den_ * li;
  }
}

const ThetaPoly& RatFunc::as_poly() const {
  if (!is_poly()) throw std::domain_error("rational function is not a polynomial: " + to_string());
  return num_;
}

int RatFunc::degree() const { return num_.deg() - den_.deg(); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.is_one()) return RatFunc(a.num_ + b.num_, a.den_, true);
    return RatFunc(a.num_ + b.num_, a.den_);
  }
  if (a.is_poly()) return RatFunc(a.num_ * b.den_ + b.num_, b.den_, true);
  if (b.is_poly()) return RatFunc(a.num_ + b.num_ * a.den_, a.den_, true);
  ThetaPoly g = ThetaPoly::gcd(a.den_, b.den_);
  ThetaPoly ad = a.den_.exact_div(g), bd = b.den_.exact_div(g);
  return RatFunc(a.num_ * bd + b.num_ * ad, a.den_ * bd);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  if (a.is_poly() && b.is_poly()) return RatFunc(a.num_ * b.num_, a.den_, true);
  // Cross-cancel before multiplying.
  ThetaPoly g1 = ThetaPoly::gcd(a.num_, b.den_);
  ThetaPoly g2 = ThetaPoly::gcd(b.num_, a.den_);
  ThetaPoly n = a.num_.exact_div(g1) * b.num_.exact_div(g2);
  ThetaPoly d = a.den_.exact_div(g2) * b.den_.exact_div(g1);
  Fe l = d.lead();
  if (!l.is_one()) {
    Fe li = l.inv();
    n = n * li;
    d = d * li;
  }
  return RatFunc(std::move(n), std::move(d), true);
}

RatFunc RatFunc::inv() const {
  if (is_zero()) throw std::domain_error("inverse of zero in K");
  Fe l = num_.lead().inv();
  return RatFunc(den_ * l, num_ * l, true);
}

RatFunc RatFunc::pow(long n) const {
  if (n < 0) return inv().pow(-n);
  return RatFunc(num_.pow(n), den_.pow(n), true);
}

Fe RatFunc::eval(Fe x) const {
  Fe d = den_.eval(x);
  if (d.is_zero()) throw std::domain_error("pole at evaluation point");
  return num_.eval(x) / d;
}

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::string n = num_.to_string(), d = den_.to_string();
  if (num_.deg() > 0 && n.find(" + ") != std::string::npos) n = "(" + n + ")";
  if (d.find(" + ") != std::string::npos || d.find('*') != std::string::npos ||
      d.find('^') != std::string::npos)
    d = "(" + d + ")";
  return n + "/" + d;
}

std::ostream& operator<<(std::ostream& os, const RatFunc& a) { return os << a.to_string(); }

} // namespace dlab
