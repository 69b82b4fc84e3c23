#include "dlab/carlitz.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace dlab {

namespace {

// Per-field memo tables, reset when the field changes.
struct CarlitzCache {
  std::uint64_t gen = 0;
  std::vector<ThetaPoly> d;
  std::map<int, std::vector<RatFunc>> goss;
};

CarlitzCache& cache() {
  static CarlitzCache c;
  if (c.gen != field().generation()) {
    c = CarlitzCache();
    c.gen = field().generation();
    c.d.push_back(ThetaPoly(Fe::one()));
  }
  return c;
}

std::mutex g_mutex;

} // namespace

ThetaPoly bracket(int i) {
  ThetaPoly t = ThetaPoly::theta();
  return t.frob(i) - t;
}

ThetaPoly carlitz_d(int i) {
  std::lock_guard<std::mutex> lock(g_mutex);
  auto& c = cache();
  while (static_cast<int>(c.d.size()) <= i) {
    int j = static_cast<int>(c.d.size());
    c.d.push_back(bracket(j) * c.d.back().frob());
  }
  return c.d[i];
}

SkewPoly skew_compose(const SkewPoly& x, const SkewPoly& y) {
  if (x.empty() || y.empty()) return {};
  SkewPoly r(x.size() + y.size() - 1);
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j].frob(static_cast<int>(i));
  while (!r.empty() && r.back().is_zero()) r.pop_back();
  return r;
}

SkewPoly carlitz_coeffs(const ThetaPoly& a) {
  SkewPoly phi;
  const ThetaPoly t = ThetaPoly::theta();
  // Horner in theta: phi <- (theta + tau) o phi + a_j.
  for (int j = a.deg(); j >= 0; --j) {
    SkewPoly next(phi.size() + 1);
    for (size_t i = 0; i < phi.size(); ++i) {
      next[i] += t * phi[i];
      next[i + 1] += phi[i].frob();
    }
    if (next.empty()) next.resize(1);
    next[0] += ThetaPoly(a.coeff(j));
    while (!next.empty() && next.back().is_zero()) next.pop_back();
    phi = std::move(next);
  }
  return phi;
}

std::vector<ThetaPoly> monics(int d) {
  const int q = field().q();
  long count = 1;
  for (int i = 0; i < d; ++i) count *= q;
  std::vector<ThetaPoly> out;
  out.reserve(count);
  std::vector<int> codes(d + 1, 0);
  codes[d] = 1;
  for (long n = 0; n < count; ++n) {
    long r = n;
    for (int i = 0; i < d; ++i) {
      codes[i] = static_cast<int>(r % q);
      r /= q;
    }
    out.push_back(ThetaPoly::from_codes(codes));
  }
  return out;
}

int max_monic_degree(long N) {
  const int q = field().q();
  int d = 0;
  long qd = q;
  while (qd < N) {
    ++d;
    qd *= q;
  }
  return d;
}

SeriesA u_a_series(const ThetaPoly& a, long N) {
  if (a.is_zero() || !a.lead().is_one()) throw std::invalid_argument("u_a_series: a must be monic");
  const int d = a.deg();
  long qd = 1;
  for (int i = 0; i < d; ++i) qd *= field().q();
  if (N < qd) throw PrecisionError("truncation below leading exponent", qd);
  SkewPoly phi = carlitz_coeffs(a);
  // f_a(u) = sum_i <a>_i u^{q^d - q^i}
  std::vector<ThetaPoly> f(qd);
  long qi = 1;
  for (int i = 0; i <= d; ++i) {
    f[qd - qi] += phi[i];
    qi *= field().q();
  }
  SeriesA fa(0, std::move(f), N - qd);
  if (N == qd) return SeriesA::zero(N);
  return fa.inv().shift(qd);
}

const std::vector<RatFunc>& goss_poly(int n) {
  if (n < 1) throw std::invalid_argument("goss_poly: n >= 1");
  std::lock_guard<std::mutex> lock(g_mutex);
  auto& c = cache();
  auto it = c.goss.find(n);
  if (it != c.goss.end()) return it->second;
  const int q = field().q();
  // Build iteratively from 1 to n.
  for (int m = 1; m <= n; ++m) {
    if (c.goss.count(m)) continue;
    std::vector<RatFunc> g;
    if (m <= q) {
      g.assign(m + 1, RatFunc());
      g[m] = RatFunc(Fe::one());
    } else {
      std::vector<RatFunc> acc = c.goss.at(m - 1);
      long qi = q;
      for (int i = 1; qi <= m - 1; ++i, qi *= q) {
        const auto& prev = c.goss.at(static_cast<int>(m - qi));
        if (prev.size() > acc.size()) acc.resize(prev.size());
        ThetaPoly di = c.d.size() > static_cast<size_t>(i) ? c.d[i] : ThetaPoly();
        if (di.is_zero()) {
          while (static_cast<int>(c.d.size()) <= i)
            c.d.push_back(bracket(static_cast<int>(c.d.size())) * c.d.back().frob());
          di = c.d[i];
        }
        RatFunc inv_d = RatFunc(ThetaPoly(Fe::one()), di);
        for (size_t j = 0; j < prev.size(); ++j) acc[j] += prev[j] * inv_d;
      }
      g.assign(acc.size() + 1, RatFunc());
      for (size_t j = 0; j < acc.size(); ++j) g[j + 1] = acc[j];
    }
    c.goss.emplace(m, std::move(g));
  }
  return c.goss.at(n);
}

SeriesK eval_poly(const std::vector<RatFunc>& P, const SeriesK& x) {
  // Horner; x has positive valuation in every use, so truncation is stable.
  SeriesK r = SeriesK::zero(x.N());
  for (int j = static_cast<int>(P.size()) - 1; j >= 0; --j) {
    r = r * x;
    if (!P[j].is_zero()) r += SeriesK(P[j]);
  }
  return r.truncate(x.N());
}

SeriesK to_K(const SeriesA& s) {
  return s.map([](const ThetaPoly& a) { return RatFunc(a); });
}

SeriesA to_A(const SeriesK& s, const char* what) {
  return s.map([what](const RatFunc& a) {
    if (!a.is_poly())
      throw std::domain_error(std::string(what) + ": non-integral coefficient " + a.to_string());
    return a.num();
  });
}

} // namespace dlab
