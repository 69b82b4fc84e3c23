#include "dlab/inf_laurent.hpp"

#include <sstream>

namespace dlab {

namespace {
thread_local long g_working_precision = 80;
}

long working_precision() { return g_working_precision; }
void set_working_precision(long P) { g_working_precision = P; }

InfLaurent InfLaurent::theta() {
  const int q = field().q();
  return monomial(-Fe::one(), -(q - 1));
}

InfLaurent InfLaurent::from_A(const ThetaPoly& a) {
  // theta^k = (-1)^k x^{-k(q-1)}
  const int q = field().q();
  if (a.is_zero()) return InfLaurent();
  const long d = a.deg();
  std::vector<Fe> c((q - 1) * d + 1);
  for (long k = 0; k <= d; ++k) {
    Fe ck = a.coeff(static_cast<int>(k));
    if (ck.is_zero()) continue;
    if (k % 2 == 1) ck = -ck;
    c[(d - k) * (q - 1)] = ck;
  }
  return InfLaurent(SeriesF(-d * (q - 1), std::move(c), kExact));
}

InfLaurent InfLaurent::from_K(const RatFunc& a) {
  if (a.is_poly()) return from_A(a.num());
  return from_A(a.num()) / from_A(a.den());
}

InfLaurent InfLaurent::inv() const {
  if (exact() && s_.end() - s_.valuation() > 1) {
    const long v = s_.valuation();
    return InfLaurent(s_.truncate(2 * v + working_precision()).inv());
  }
  return InfLaurent(s_.inv());
}

InfLaurent InfLaurent::inv_to(long P) const {
  const long v = s_.valuation();
  if (exact() && s_.end() - v > 1) {
    // The inverse has valuation -v; nothing of it is visible below P when -v >= P.
    if (-v >= P) return zero_to(P);
    return InfLaurent(s_.truncate(2 * v + P).inv());
  }
  return InfLaurent(s_.inv());
}

InfLaurent InfLaurent::pow(long n) const {
  if (n < 0) return inv().pow(-n);
  // Split n in base p: Frobenius powers are exact and cheap.
  const int p = field().p();
  InfLaurent result(Fe::one());
  InfLaurent base = *this;
  const bool prime = field().e() == 1;
  while (n > 0) {
    long digit = n % p;
    for (long i = 0; i < digit; ++i) result *= base;
    n /= p;
    if (n) {
      if (prime) {
        base = base.frob(1);
      } else {
        InfLaurent b = base;
        for (int i = 1; i < p; ++i) b *= base;
        base = b;
      }
    }
  }
  return result;
}

std::string InfLaurent::to_string(long max_terms) const {
  std::ostringstream os;
  const int q = field().q();
  long shown = 0;
  for (long j = s_.n0(); j < s_.end() && shown < max_terms; ++j) {
    Fe c = s_.raw()[j - s_.n0()];
    if (c.is_zero()) continue;
    if (shown) os << " + ";
    os << c.to_string();
    if (j != 0) os << "*theta^(" << -j << "/" << (q - 1) << ")";
    ++shown;
  }
  if (!shown) os << "0";
  if (!exact()) os << " + O(theta^(" << -prec() << "/" << (q - 1) << "))";
  return os.str();
}

std::pair<Fe, Fe> fq2_coords(Fe c) {
  const Fe z = Fe::fq2_generator();
  const Fe denom = z - z.frob(1);
  Fe b = (c - c.frob(1)) / denom;
  Fe a = c - b * z;
  return {a, b};
}

long imaginary_exponent(const InfLaurent& z) {
  const int q = field().q();
  const SeriesF& s = z.series();
  for (long j = s.n0(); j < s.end(); ++j) {
    Fe c = s.raw()[j - s.n0()];
    if (c.is_zero()) continue;
    if (((j % (q - 1)) + (q - 1)) % (q - 1) != 0) return j;
    auto [a, b] = fq2_coords(c);
    (void)a;
    if (!b.is_zero()) return j;
  }
  throw PrecisionError("point lies in K_infty to precision");
}

} // namespace dlab
