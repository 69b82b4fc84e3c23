#include "dlab/deformations.hpp"

#include "dlab/carlitz.hpp"

#include <stdexcept>

namespace dlab {

SeriesA at_t_theta(const SeriesTA& s) {
  return s.map([](const TA& x) { return dlab::at_t_theta(x); });
}

SeriesTA bootstrap_h(const SeriesA& g, const SeriesA& delta, long N) {
  const long q = field().q();
  const long q2 = q * q;
  // A1 = -g/Delta (valuation -(q-1)), A2 = (t - theta^q)/Delta^q (valuation -q(q-1)).
  const SeriesA A1 = -(g * delta.inv());
  const SeriesA A2base = delta.twist(1).inv();
  const TA tq = t_minus_theta_qk(1);
  if (A1.N() <= N - q || A2base.N() <= N - q2)
    throw PrecisionError("bootstrap_h: generators too short", generator_margin(N));

  std::vector<TA> b(N);       // b[n] for n < N
  std::vector<TA> b1(N), b2(N); // first and second twists of b[n]
  if (N > 1) {
    b[1] = TA(ThetaPoly(-Fe::one()));
    b1[1] = b[1];
    b2[1] = b[1];
  }
  for (long n = 2; n < N; ++n) {
    TA s;
    for (long m = 1; q * m <= n + q - 1; ++m) {
      if (b1[m].is_zero()) continue;
      const ThetaPoly* a = A1.coeff_ptr(n - q * m);
      if (a && !a->is_zero()) s += b1[m].scale(*a);
    }
    TA s2;
    for (long m = 1; q2 * m <= n + q2 - q; ++m) {
      if (b2[m].is_zero()) continue;
      const ThetaPoly* a = A2base.coeff_ptr(n - q2 * m);
      if (a && !a->is_zero()) s2 += b2[m].scale(*a);
    }
    s += s2 * tq;
    if (!s.is_zero() && (n - 1) % (q - 1) != 0)
      throw std::logic_error("bootstrap_h: coefficient outside u-support 1 mod (q-1) at n=" +
                             std::to_string(n));
    b[n] = s;
    b1[n] = s.frob(1);
    b2[n] = b1[n].frob(1);
  }
  SeriesTA hb(0, std::move(b), N);
  hb.set_grade(Grade{static_cast<int>(q), 1, 1, 0});
  return hb;
}

SeriesTA build_e(const SeriesTA& hb, const SeriesA& delta, long N) {
  SeriesTA e = hb.twist(1) * lift_t(delta.inv());
  if (e.N() < N) throw PrecisionError("build_e: inputs too short", N);
  e = e.truncate(N);
  e.set_grade(Grade{1, 1, 1, 0});
  return e;
}

SeriesTA build_h_i(int i, const SeriesTA& hb, const SeriesA& h) {
  const int q = field().q();
  if (i < 0 || i > q) throw std::invalid_argument("build_h_i: 0 <= i <= q");
  SeriesTA r = hb.pow(i) * lift_t(h).pow(1 - i);
  r.set_grade(Grade{q + 1 - i, i, 1, 0});
  return r;
}

DeformedSet build_deformations(long N) {
  const int q = field().q();
  DeformedSet d;
  d.N = N;
  const long M = generator_margin(N);
  GeneratorSet& G = d.gen;
  G.N = N;
  SeriesA g = build_g(M);
  SeriesA delta = build_delta(M);
  SeriesA h = root_qm1(-delta, -Fe::one());
  d.hb = bootstrap_h(g, delta, N);
  d.eb = build_e(d.hb, delta, N);
  G.g = g.truncate(N);
  G.delta = delta.truncate(N);
  G.h = h.truncate(N).set_grade(Grade{q + 1, 0, 1, 0});
  G.E = at_t_theta(d.eb).set_grade(Grade{2, 0, 1, 1});
  return d;
}

} // namespace dlab

namespace dlab {

namespace {

bool all_in_A(const SeriesA& s) {
  for (const auto& c : s.raw())
    if (!c.in_A()) return false;
  return true;
}

bool all_in_A(const SeriesTA& s) {
  for (const auto& c : s.raw())
    for (const auto& x : c.coeffs())
      if (!x.in_A()) return false;
  return true;
}

IdentityCheck bool_check(const std::string& name, bool ok, long N, const std::string& why = "") {
  IdentityCheck c;
  c.name = name;
  c.pass = ok;
  c.checked_below = N;
  if (!ok) c.detail = why;
  return c;
}

} // namespace

std::vector<IdentityCheck> generator_battery(const DeformedSet& d) {
  const int q = field().q();
  const auto& G = d.gen;
  const long N = G.N;
  const ThetaPoly one(Fe::one());
  std::vector<IdentityCheck> out;

  out.push_back(residual_check("delta_plus_h_pow", G.delta + G.h.pow(q - 1)));

  bool g_ok = G.g.support_congruent(0, q - 1) && all_in_A(G.g) && G.g.coeff(0) == one &&
              G.g.coeff(q - 1) == -bracket(1);
  out.push_back(bool_check("g_shape", g_ok, N, "g is not 1 - [1]u^{q-1} + ... in A[[u^{q-1}]]"));

  bool h_ok = G.h.support_congruent(1, q - 1) && all_in_A(G.h) && G.h.valuation() == 1 &&
              G.h.coeff(1) == -one;
  for (int n = 2; n < q; ++n) h_ok = h_ok && G.h.coeff(n).is_zero();
  out.push_back(bool_check("h_shape", h_ok, N, "h is not -u + O(u^q) in uA[[u^{q-1}]]"));

  bool e_ok = G.E.support_congruent(1, q - 1) && all_in_A(G.E) && G.E.valuation() == 1 &&
              G.E.coeff(1) == one;
  for (int n = 2; n < q; ++n) e_ok = e_ok && G.E.coeff(n).is_zero();
  out.push_back(bool_check("E_shape", e_ok, N, "E is not u + O(u^q) in uA[[u^{q-1}]]"));

  SeriesA gs2 = at_t_theta(g_star(2, G.g, G.delta));
  out.push_back(residual_check("gstar2_at_theta",
                               gs2 - (G.g.pow(q + 1) - G.delta.scale(bracket(1)))));
  out.push_back(residual_check("gstar1_is_g", at_t_theta(g_star(1, G.g, G.delta)) - G.g));

  out.push_back(residual_check("hb_at_theta_is_h", at_t_theta(d.hb) - G.h));
  // Literature sum formulas: independent of the deformation route.
  out.push_back(residual_check("h_vs_sum_formula", G.h - h_lattice_formula(N)));
  out.push_back(residual_check("E_vs_sum_formula", G.E - e_lattice_formula(N)));
  return out;
}

std::vector<IdentityCheck> deformation_battery(const DeformedSet& d) {
  const int q = field().q();
  const auto& G = d.gen;
  const long N = d.N;
  std::vector<IdentityCheck> out;
  const SeriesTA g = lift_t(G.g), delta = lift_t(G.delta), h = lift_t(G.h);
  const SeriesTA& hb = d.hb;
  const SeriesTA& eb = d.eb;

  out.push_back(residual_check("hb_at_theta_is_h", at_t_theta(hb) - G.h));
  out.push_back(residual_check("eb_at_theta_is_E", at_t_theta(eb) - G.E));
  out.push_back(residual_check("E_vs_sum_formula", at_t_theta(eb) - e_lattice_formula(N)));

  bool hb_ok = all_in_A(hb) && hb.support_congruent(1, q - 1) && hb.valuation() == 1 &&
               hb.coeff(1) == TA(ThetaPoly(-Fe::one()));
  out.push_back(bool_check("hb_integral_support", hb_ok, N));
  bool eb_ok = all_in_A(eb) && eb.support_congruent(1, q - 1) && eb.valuation() == 1 &&
               eb.coeff(1) == TA(ThetaPoly(Fe::one()));
  out.push_back(bool_check("eb_integral_support", eb_ok, N));

  // (t - theta^q) h^(2) = Delta^{q-1} (g h^(1) + Delta h)
  out.push_back(residual_check(
      "hb_tau_equation",
      hb.twist(2).scale(t_minus_theta_qk(1)) - delta.pow(q - 1) * (g * hb.twist(1) + delta * hb)));
  // (t - theta^{q^2}) e^(2) = g^q e^(1) + Delta e
  out.push_back(residual_check("eb_tau_equation", eb.twist(2).scale(t_minus_theta_qk(2)) -
                                                      (g.twist(1) * eb.twist(1) + delta * eb)));
  // lambda identity: (t - theta^q) e^(1) = h + g e
  out.push_back(
      residual_check("lambda_identity", eb.twist(1).scale(t_minus_theta_qk(1)) - (hb + g * eb)));
  // e^q = -h_q^(1)
  SeriesTA hq = build_h_i(q, hb, G.h);
  out.push_back(residual_check("e_pow_q_root_identity", eb.pow(q) + hq.twist(1)));
  out.push_back(residual_check("h_q_times_h_pow", hq * h.pow(q - 1) - hb.pow(q)));
  out.push_back(residual_check("twist_closure_h", hb.twist(1) - delta * eb));
  for (int i = 0; i <= q; ++i) {
    SeriesTA hi = build_h_i(i, hb, G.h);
    bool ok = hi.valuation() == 1 && hi.support_congruent(1, q - 1) && all_in_A(hi);
    out.push_back(bool_check("h_" + std::to_string(i) + "_shape", ok, hi.N()));
    out.push_back(residual_check("h_" + std::to_string(i) + "_at_theta", at_t_theta(hi) - G.h));
  }
  return out;
}

} // namespace dlab
