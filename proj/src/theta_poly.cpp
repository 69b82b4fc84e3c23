#include "dlab/theta_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace dlab {

ThetaPoly ThetaPoly::monomial(Fe c, int d) {
  ThetaPoly r;
  if (c.is_zero()) return r;
  r.c_.assign(d + 1, Fe());
  r.c_[d] = c;
  return r;
}

ThetaPoly ThetaPoly::from_codes(const std::vector<int>& codes) {
  std::vector<Fe> v;
  v.reserve(codes.size());
  for (int c : codes) v.push_back(Fe::from_code(c));
  return ThetaPoly(std::move(v));
}

int ThetaPoly::low_deg() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return static_cast<int>(i);
  return -1;
}

bool ThetaPoly::in_A() const {
  for (Fe x : c_)
    if (!x.in_fq()) return false;
  return true;
}

ThetaPoly ThetaPoly::operator-() const {
  ThetaPoly r = *this;
  for (Fe& x : r.c_) x = -x;
  return r;
}

ThetaPoly& ThetaPoly::operator+=(const ThetaPoly& b) {
  if (b.c_.size() > c_.size()) c_.resize(b.c_.size());
  for (size_t i = 0; i < b.c_.size(); ++i) c_[i] += b.c_[i];
  normalize();
  return *this;
}

ThetaPoly& ThetaPoly::operator-=(const ThetaPoly& b) {
  if (b.c_.size() > c_.size()) c_.resize(b.c_.size());
  for (size_t i = 0; i < b.c_.size(); ++i) c_[i] -= b.c_[i];
  normalize();
  return *this;
}

ThetaPoly operator+(const ThetaPoly& a, const ThetaPoly& b) {
  ThetaPoly r = a;
  r += b;
  return r;
}

ThetaPoly operator-(const ThetaPoly& a, const ThetaPoly& b) {
  ThetaPoly r = a;
  r -= b;
  return r;
}

ThetaPoly operator*(const ThetaPoly& a, const ThetaPoly& b) {
  if (a.is_zero() || b.is_zero()) return ThetaPoly();
  std::vector<Fe> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    Fe ai = a.c_[i];
    if (ai.is_zero()) continue;
    Fe* out = r.data() + i;
    for (size_t j = 0; j < b.c_.size(); ++j) out[j] += ai * b.c_[j];
  }
  return ThetaPoly(std::move(r));
}

ThetaPoly operator*(const ThetaPoly& a, Fe s) {
  if (s.is_zero()) return ThetaPoly();
  ThetaPoly r = a;
  for (Fe& x : r.c_) x *= s;
  return r;
}

bool operator<(const ThetaPoly& a, const ThetaPoly& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg();
  for (int i = a.deg(); i >= 0; --i)
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  return false;
}

void ThetaPoly::divmod(const ThetaPoly& a, const ThetaPoly& b, ThetaPoly& quo, ThetaPoly& rem) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Fe> r = a.c_;
  const int db = b.deg();
  const int da = a.deg();
  if (da < db) {
    quo = ThetaPoly();
    rem = a;
    return;
  }
  std::vector<Fe> qv(da - db + 1);
  Fe inv_lead = b.lead().inv();
  for (int i = da; i >= db; --i) {
    Fe c = r[i];
    if (c.is_zero()) continue;
    Fe f = c * inv_lead;
    qv[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.c_[j];
  }
  r.resize(db);
  quo = ThetaPoly(std::move(qv));
  rem = ThetaPoly(std::move(r));
}

ThetaPoly operator%(const ThetaPoly& a, const ThetaPoly& b) {
  ThetaPoly q, r;
  ThetaPoly::divmod(a, b, q, r);
  return r;
}

ThetaPoly ThetaPoly::exact_div(const ThetaPoly& b) const {
  if (b.is_const() && !b.is_zero()) return *this * b.lead().inv();
  ThetaPoly q, r;
  divmod(*this, b, q, r);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

bool ThetaPoly::divides(const ThetaPoly& a) const {
  if (is_zero()) return a.is_zero();
  return (a % *this).is_zero();
}

ThetaPoly ThetaPoly::monic() const {
  if (is_zero()) return *this;
  return *this * lead().inv();
}

ThetaPoly ThetaPoly::gcd(ThetaPoly a, ThetaPoly b) {
  while (!b.is_zero()) {
    ThetaPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ThetaPoly ThetaPoly::shift(int d) const {
  if (is_zero() || d == 0) return *this;
  ThetaPoly r;
  if (d > 0) {
    r.c_.assign(d, Fe());
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  } else {
    if (-d >= static_cast<int>(c_.size())) return r;
    r.c_.assign(c_.begin() - d, c_.end());
  }
  return r;
}

ThetaPoly ThetaPoly::pow(long n) const {
  if (n < 0) throw std::domain_error("negative power of polynomial");
  ThetaPoly result(Fe::one()), base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

ThetaPoly ThetaPoly::frob(int k) const {
  if (is_zero() || k == 0) return *this;
  long qk = 1;
  for (int i = 0; i < k; ++i) qk *= field().q();
  ThetaPoly r;
  r.c_.assign(static_cast<size_t>(deg()) * qk + 1, Fe());
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i * qk] = c_[i].frob(k);
  return r;
}

Fe ThetaPoly::eval(Fe x) const {
  Fe r;
  for (int i = deg(); i >= 0; --i) r = r * x + c_[i];
  return r;
}

ThetaPoly ThetaPoly::compose(const ThetaPoly& b) const {
  ThetaPoly r;
  for (int i = deg(); i >= 0; --i) r = r * b + ThetaPoly(c_[i]);
  return r;
}

std::string ThetaPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = deg(); i >= 0; --i) {
    Fe c = c_[i];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    bool unit = c.is_one() && i > 0;
    if (!unit) {
      std::string s = c.to_string();
      if (i > 0 && s.find_first_of("^") != std::string::npos && s[0] != 'c')
        os << "(" << s << ")";
      else
        os << s;
      if (i > 0) os << "*";
    }
    if (i >= 1) os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ThetaPoly& a) { return os << a.to_string(); }

} // namespace dlab
