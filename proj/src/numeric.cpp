#include "dlab/numeric.hpp"

#include "dlab/carlitz.hpp"

#include <algorithm>
#include <map>

namespace dlab {

namespace {

long qpow(int k) {
  long r = 1;
  for (int i = 0; i < k; ++i) r *= field().q();
  return r;
}

constexpr int kMaxTerms = 48;

} // namespace

InfLaurent carlitz_d_num(int i) { return InfLaurent::from_A(carlitz_d(i)); }

InfLaurent pi_tilde() {
  static thread_local std::map<std::pair<std::uint64_t, long>, InfLaurent> cache;
  const int q = field().q();
  const long W = working_precision();
  auto key = std::make_pair(field().generation(), W);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  // theta^{1-q^i} = (-1)^{q^i-1} x^{(q-1)(q^i-1)}; product needed below W + q.
  const long target = W + q;
  InfLaurent prod(Fe::one());
  for (int i = 1;; ++i) {
    const long e = (q - 1) * (qpow(i) - 1);
    if (e >= target) break;
    Fe sign = ((qpow(i) - 1) % 2 == 1) ? -Fe::one() : Fe::one();
    prod *= InfLaurent(Fe::one()) - InfLaurent::monomial(sign, e);
  }
  prod = prod.truncate(target);
  InfLaurent pt = -(InfLaurent::monomial(Fe::one(), -q) * prod.inv());
  cache.emplace(key, pt);
  return pt;
}

InfLaurent carlitz_exp(const InfLaurent& w) {
  const int q = field().q();
  const long W = working_precision();
  if (w.is_zero()) return InfLaurent::zero_to(std::min(W, w.prec()));
  const long vw = w.val();
  InfLaurent sum = InfLaurent::zero_to(W);
  for (int i = 0; i < kMaxTerms; ++i) {
    const long qi = qpow(i);
    InfLaurent wi = w.frob(i);
    InfLaurent term = wi * carlitz_d_num(i).inv_to(W - qi * vw);
    sum += term;
    const long tv = term.is_zero() ? term.prec() : term.val();
    if (tv >= W && vw + i * (q - 1) + q > 0) return sum.truncate(W);
  }
  throw PrecisionError("carlitz_exp: series did not reach the precision horizon");
}

InfLaurent u_of(const InfLaurent& z) {
  InfLaurent e = carlitz_exp(pi_tilde() * z);
  if (e.is_zero()) throw PrecisionError("u undefined (z in pi~A after scaling)");
  return e.inv();
}

std::vector<InfLaurent> sample_points() {
  const InfLaurent th = InfLaurent::theta();
  const InfLaurent zeta(Fe::fq2_generator());
  return {zeta * th, zeta * th * th, zeta * th + InfLaurent::from_K(RatFunc(ThetaPoly(Fe::one()), ThetaPoly::theta()))};
}

std::vector<std::string> sample_point_names() {
  return {"zeta*theta", "zeta*theta^2", "zeta*theta+1/theta"};
}

std::vector<InfLaurent> sample_t0() {
  const InfLaurent inv_th = InfLaurent::from_K(RatFunc(ThetaPoly(Fe::one()), ThetaPoly::theta()));
  const InfLaurent zeta(Fe::fq2_generator());
  return {InfLaurent(), inv_th, InfLaurent(Fe::one()) + zeta * inv_th};
}

std::vector<std::string> sample_t0_names() { return {"0", "1/theta", "1+zeta/theta"}; }

PointForms point_forms(const InfLaurent& z) {
  const int q = field().q();
  // [2] sum G(u_a) and the u_a themselves cost digits; values are small
  // like powers of u, so work at a raised absolute precision.
  const long vu = std::max(0L, u_of(z).val());
  PrecisionScope scope(working_precision() + q * q * (q - 1) + (q + 1) * vu + 8);
  const long W = working_precision();
  PointForms P;
  P.z = z;
  P.u = u_of(z);
  const InfLaurent& u = P.u;

  const auto& G = goss_poly(q * q - 1);
  std::vector<InfLaurent> Gc(G.size());
  for (size_t j = 0; j < G.size(); ++j)
    if (!G[j].is_zero()) Gc[j] = InfLaurent::from_K(G[j]);

  InfLaurent S1 = InfLaurent::zero_to(W), SG = InfLaurent::zero_to(W),
             Sh = InfLaurent::zero_to(W), SE = InfLaurent::zero_to(W);
  long prev_min = -(1L << 40);
  for (int d = 0;; ++d) {
    if (d > 12) throw PrecisionError("point_forms: monic sum did not converge");
    const long qd = qpow(d);
    // u^{q^d - q^i} for i = 0..d
    std::vector<InfLaurent> upow(d + 1);
    for (int i = 0; i <= d; ++i) upow[i] = u.pow(qd - qpow(i));
    const InfLaurent uqd = u.frob(d);
    long dmin = 1L << 40;
    for (const auto& a : monics(d)) {
      SkewPoly phi = carlitz_coeffs(a);
      InfLaurent f;
      for (int i = 0; i <= d; ++i) f += InfLaurent::from_A(phi[i]) * upow[i];
      InfLaurent ua = uqd * f.inv();
      ua = ua.truncate(std::max(W, ua.val() + W));
      InfLaurent ua_pow = ua.pow(q - 1);
      S1 += ua_pow;
      InfLaurent g_at;
      for (int j = static_cast<int>(Gc.size()) - 1; j >= 0; --j) {
        g_at = g_at * ua;
        if (!Gc[j].is_zero()) g_at += Gc[j];
      }
      SG += g_at;
      Sh += InfLaurent::from_A(a.frob()) * ua;
      SE += InfLaurent::from_A(a) * ua;
      const long contrib = ua.val() - static_cast<long>(q) * d * (q - 1);
      dmin = std::min(dmin, ua.is_zero() ? ua.prec() : contrib);
    }
    P.max_degree = d;
    if (d >= 1 && dmin >= W && dmin > prev_min) break;
    prev_min = dmin;
  }
  const InfLaurent one(Fe::one());
  const InfLaurent b1 = InfLaurent::from_A(bracket(1)), b2 = InfLaurent::from_A(bracket(2));
  P.g = (one - b1 * S1).truncate(W);
  const InfLaurent n1 = P.g.pow(q + 1) - one;
  const long n1v = n1.is_zero() ? 0 : n1.val();
  P.delta = (n1 * b1.inv_to(W - n1v + 2 * q * q) - b2 * SG).truncate(W);
  P.h = (-Sh).truncate(W);
  P.E = SE.truncate(W);
  const InfLaurent pt = pi_tilde();
  P.gt = pt.pow(q - 1) * P.g;
  P.dt = pt.pow(q * q - 1) * P.delta;

  // alpha_0 = 1, alpha_i = (g~ alpha_{i-1}^q + Delta~ alpha_{i-2}^{q^2}) / [i]
  P.alpha.push_back(one);
  const InfLaurent big = (z.val() < 0) ? z : one; // larger of |z|, |1|
  int settled = 0;
  for (int i = 1; i < kMaxTerms && settled < 2; ++i) {
    InfLaurent num = P.gt * P.alpha[i - 1].frob(1);
    if (i >= 2) num += P.dt * P.alpha[i - 2].frob(2);
    const InfLaurent bi = InfLaurent::from_A(bracket(i));
    const long need = W + qpow(i) * std::max(0L, -big.val()) - (num.is_zero() ? 0 : num.val());
    InfLaurent ai = num * bi.inv_to(need);
    P.alpha.push_back(ai);
    // Term size of the pole form for omega = big.
    InfLaurent term = ai * big.frob(i);
    long tv = term.is_zero() ? term.prec() : term.val();
    tv += (q - 1) * qpow(i);
    if (tv >= W) ++settled;
    else settled = 0;
  }
  return P;
}

InfLaurent agf_pole(const std::vector<InfLaurent>& alpha, const InfLaurent& omega,
                    const InfLaurent& t0, int k) {
  const long W = working_precision();
  const InfLaurent th = InfLaurent::theta();
  InfLaurent sum = InfLaurent::zero_to(W);
  int settled = 0;
  for (size_t i = 0; i < alpha.size(); ++i) {
    InfLaurent beta = (alpha[i] * omega.frob(static_cast<int>(i))).frob(k);
    InfLaurent den = th.frob(static_cast<int>(i) + k) - t0;
    long need = W - (beta.is_zero() ? 0 : beta.val());
    InfLaurent term = beta * den.inv_to(need);
    sum += term;
    long tv = term.is_zero() ? term.prec() : term.val();
    if (tv >= W) {
      if (++settled >= 2) return sum.truncate(W);
    } else {
      settled = 0;
    }
  }
  throw PrecisionError("agf_pole: exponential coefficients exhausted before convergence");
}

InfLaurent s1_eval(const PointForms& P, const InfLaurent& t0, int k) {
  return agf_pole(P.alpha, P.z, t0, k);
}

InfLaurent s2_eval(const PointForms& P, const InfLaurent& t0, int k) {
  return agf_pole(P.alpha, InfLaurent(Fe::one()), t0, k);
}

std::vector<InfLaurent> carlitz_alpha() {
  const int q = field().q();
  const long W = working_precision();
  std::vector<InfLaurent> a;
  // Pole-form terms have x-valuation q^i((q-1)i - 1); 1/d_i must stay
  // accurate after multiplication by pi~^{q^i} (valuation -q^{i+1}).
  for (int i = 0; i < kMaxTerms; ++i) {
    const long qi = qpow(i);
    a.push_back(carlitz_d_num(i).inv_to(W + q * qi + 8));
    if (i >= 3 && (qi / q) * ((q - 1) * (i - 1) - 1) >= 2 * W + 8) break;
  }
  return a;
}

InfLaurent sC_eval(const InfLaurent& t0, int k) {
  return agf_pole(carlitz_alpha(), pi_tilde(), t0, k);
}

InfLaurent sC_product(const InfLaurent& t0) {
  const long W = working_precision();
  const int q = field().q();
  const InfLaurent one(Fe::one());
  InfLaurent prod(Fe::one());
  for (int i = 0; i < kMaxTerms; ++i) {
    InfLaurent r = t0 * InfLaurent::theta().frob(i).inv();
    if (r.is_zero()) break;
    if (i > 0 && r.val() >= W + q + 2) break;
    prod *= one - r;
  }
  // Keep relative precision: the product may be small near t0 = theta.
  const long v = prod.val();
  return (InfLaurent::y() * prod.truncate(v + W + q + 2).inv()).truncate(W);
}

InfLaurent agf_series(const std::vector<InfLaurent>& alpha, const InfLaurent& omega,
                      const InfLaurent& t0) {
  const long W = working_precision();
  InfLaurent sum = InfLaurent::zero_to(W);
  const InfLaurent inv_th = InfLaurent::theta().inv();
  InfLaurent w = omega * inv_th; // omega / theta^{n+1}
  InfLaurent tp(Fe::one());
  int settled = 0;
  for (int n = 0; n < 4 * W + 64; ++n) {
    // e_Lambda(w) = sum_i alpha_i w^{q^i}
    InfLaurent e = InfLaurent::zero_to(W + 1);
    for (size_t i = 0; i < alpha.size(); ++i) {
      InfLaurent term = alpha[i] * w.frob(static_cast<int>(i));
      e += term;
      if (!term.is_zero() && term.val() >= W + 1 && i > 0) break;
    }
    InfLaurent add = e * tp;
    sum += add;
    long tv = add.is_zero() ? add.prec() : add.val();
    if (tv >= W) {
      if (++settled >= 3) return sum.truncate(W);
    } else {
      settled = 0;
    }
    w = w * inv_th;
    tp = tp * t0;
  }
  throw PrecisionError("agf_series: no convergence");
}

InfLaurent lattice_sum_eisenstein(const InfLaurent& z, int n, int B) {
  const long W = working_precision();
  InfLaurent sum = InfLaurent::zero_to(W);
  std::vector<ThetaPoly> polys{ThetaPoly()};
  for (int d = 0; d <= B; ++d)
    for (const auto& m : monics(d))
      for (Fe c : fq_elements())
        if (!c.is_zero()) polys.push_back(m * c);
  for (const auto& a : polys) {
    InfLaurent az = InfLaurent::from_A(a) * z;
    for (const auto& b : polys) {
      if (a.is_zero() && b.is_zero()) continue;
      InfLaurent w = az + InfLaurent::from_A(b);
      sum += w.inv_to(W + 64).pow(n);
    }
  }
  return sum.truncate(W);
}

namespace {
template <class C, class F>
InfLaurent horner_u(const Series<C>& s, const InfLaurent& u, F coeff_at) {
  InfLaurent r;
  for (long n = s.end() - 1; n >= s.n0(); --n) {
    r *= u;
    const C& c = s.coeff(n);
    if (!c.is_zero()) r += coeff_at(c);
  }
  if (s.n0() > 0) r *= u.pow(s.n0());
  // Missing terms start at u^N.
  if (s.exact()) return r;
  return r.truncate(std::min(r.prec(), u.val() * s.N()));
}
} // namespace

InfLaurent eval_u_series(const SeriesA& s, const InfLaurent& u) {
  return horner_u(s, u, [](const ThetaPoly& c) { return InfLaurent::from_A(c); });
}

InfLaurent eval_u_series(const SeriesTA& s, const InfLaurent& t0, const InfLaurent& u) {
  return horner_u(s, u, [&](const TA& c) {
    InfLaurent r;
    for (int j = c.deg(); j >= 0; --j) r = r * t0 + InfLaurent::from_A(c.coeff(j));
    return r;
  });
}

Fe GammaMat::det() const {
  ThetaPoly D = a * d - b * c;
  if (D.deg() != 0) throw std::domain_error("matrix not in GL2(A)");
  return D.lead();
}

GammaMat GammaMat::operator*(const GammaMat& o) const {
  return GammaMat{a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d,
                  name + "*" + o.name};
}

std::vector<GammaMat> sample_gammas() {
  const ThetaPoly one(Fe::one()), zero, th = ThetaPoly::theta();
  const ThetaPoly c(Fe::fq_generator());
  return {GammaMat{one, one, zero, one, "[[1,1],[0,1]]"},
          GammaMat{one, th, zero, one, "[[1,theta],[0,1]]"},
          GammaMat{zero, -one, one, zero, "[[0,-1],[1,0]]"},
          GammaMat{th, one, one, zero, "[[theta,1],[1,0]]"},
          GammaMat{c, zero, zero, one, "[[c,0],[0,1]]"}};
}

InfLaurent act(const GammaMat& g, const InfLaurent& z) {
  InfLaurent num = InfLaurent::from_A(g.a) * z + InfLaurent::from_A(g.b);
  InfLaurent den = InfLaurent::from_A(g.c) * z + InfLaurent::from_A(g.d);
  return num / den;
}

InfLaurent bar_eval(const ThetaPoly& a, const InfLaurent& t0) {
  InfLaurent r;
  for (int j = a.deg(); j >= 0; --j) r = r * t0 + InfLaurent(a.coeff(j));
  return r;
}

} // namespace dlab
