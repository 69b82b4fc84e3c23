#include "dlab/generators.hpp"

#include "dlab/carlitz.hpp"
#include "dlab/deformations.hpp"

#include <stdexcept>

namespace dlab {

namespace {

long qpow(int k) {
  long r = 1;
  for (int i = 0; i < k; ++i) r *= field().q();
  return r;
}

// Monic a with q^{deg a} * minval < N, i.e. u_a^minval reaches below N.
std::vector<ThetaPoly> monics_below(long N, long minval) {
  std::vector<ThetaPoly> out;
  for (int d = 0; qpow(d) * minval < N; ++d)
    for (auto& a : monics(d)) out.push_back(a);
  return out;
}

} // namespace

SeriesA build_g(long N) {
  const int q = field().q();
  SeriesA sum = SeriesA::zero(N);
  for (const auto& a : monics_below(N, q - 1)) sum += u_a_series(a, N).pow(q - 1);
  SeriesA one(ThetaPoly(Fe::one()));
  return (one - sum.scale(bracket(1))).truncate(N).set_grade(Grade{q - 1, 0, 0, 0});
}

SeriesA build_delta(long N) {
  const int q = field().q();
  const auto& G = goss_poly(q * q - 1);
  // Clear denominators of G: Dc * G has coefficients in A.
  ThetaPoly Dc(Fe::one());
  for (const auto& c : G)
    if (!c.is_zero()) Dc = Dc.exact_div(ThetaPoly::gcd(Dc, c.den())) * c.den();
  std::vector<ThetaPoly> cg(G.size());
  for (size_t j = 0; j < G.size(); ++j)
    if (!G[j].is_zero()) cg[j] = (G[j] * RatFunc(Dc)).as_poly();

  SeriesA S = SeriesA::zero(N);
  for (const auto& a : monics_below(N, 1)) {
    SeriesA ua = u_a_series(a, N);
    SeriesA r = SeriesA::zero(N);
    for (int j = static_cast<int>(cg.size()) - 1; j >= 0; --j) {
      r = r * ua;
      if (!cg[j].is_zero()) r += SeriesA(cg[j]);
    }
    S += r.truncate(N);
  }
  SeriesA g = build_g(N);
  SeriesA one(ThetaPoly(Fe::one()));
  const ThetaPoly b1 = bracket(1), b2 = bracket(2);
  SeriesA scaled = (g.pow(q + 1) - one).scale(Dc) - S.scale(b1 * b2);
  const ThetaPoly den = b1 * Dc;
  SeriesA delta = scaled.map([&](const ThetaPoly& x) {
    ThetaPoly qq, rr;
    ThetaPoly::divmod(x, den, qq, rr);
    if (!rr.is_zero()) throw std::logic_error("build_delta: non-integral coefficient");
    return qq;
  });
  if (!delta.coeff(0).is_zero()) throw std::logic_error("build_delta: nonzero constant term");
  if (delta.valuation() != q - 1 || delta.lead() != ThetaPoly(-Fe::one()))
    throw std::logic_error("build_delta: leading term is not -u^{q-1}");
  return delta.set_grade(Grade{q * q - 1, 0, 0, 0});
}

SeriesA h_lattice_formula(long N) {
  SeriesA s = SeriesA::zero(N);
  for (const auto& a : monics_below(N, 1)) s += u_a_series(a, N).scale(a.frob());
  return -s;
}

SeriesA e_lattice_formula(long N) {
  SeriesA s = SeriesA::zero(N);
  for (const auto& a : monics_below(N, 1)) s += u_a_series(a, N).scale(a);
  return s;
}

SeriesTA g_star(int k, const SeriesA& g, const SeriesA& delta) {
  if (k < -1) throw std::invalid_argument("g_star: k >= -1");
  const long N = std::min(g.N(), delta.N());
  SeriesTA prev2 = SeriesTA::zero(N);            // g*_{-1}
  SeriesTA prev1(TA(ThetaPoly(Fe::one())));      // g*_0
  if (k == -1) return prev2;
  if (k == 0) return prev1;
  const SeriesTA gt = lift_t(g), dt = lift_t(delta);
  for (int j = 1; j <= k; ++j) {
    SeriesTA cur = gt.twist(j - 1) * prev1;
    if (j >= 2) cur += dt.twist(j - 2).scale(t_minus_theta_qk(j - 1)) * prev2;
    prev2 = std::move(prev1);
    prev1 = std::move(cur);
  }
  return prev1;
}

long generator_margin(long N) {
  const long q = field().q();
  return N + 2 * q * q;
}

GeneratorSet build_generators(long N) { return build_deformations(N).gen; }

} // namespace dlab
