#pragma once

// t-deformations h-bold, e-bold and the h_i family over F_q[t, theta].

#include "dlab/generators.hpp"
#include "dlab/series_ops.hpp"

namespace dlab {

/// Solves h = -(g/Delta) h^(1) + ((t - theta^q)/Delta^q) h^(2) with
/// h = -u + ..., valid below N. g and Delta must be valid below
/// generator_margin(N).
SeriesTA bootstrap_h(const SeriesA& g, const SeriesA& delta, long N);

/// e = h^(1) / Delta, truncated to N.
SeriesTA build_e(const SeriesTA& hb, const SeriesA& delta, long N);

/// h_i = h^i h^{1-i} for 0 <= i <= q, tagged (q+1-i, i, 1, 0).
SeriesTA build_h_i(int i, const SeriesTA& hb, const SeriesA& h);

/// Specialization t = theta of every coefficient.
SeriesA at_t_theta(const SeriesTA& s);

inline SeriesTA lift_t(const SeriesA& s) { return embed_series<TA>(s); }

struct DeformedSet {
  long N = 0;
  GeneratorSet gen;
  SeriesTA hb, eb;
};

/// Builds generators and deformations, all valid below N.
DeformedSet build_deformations(long N);

/// Named identity residual; passes iff the residual is zero to its truncation.
struct IdentityCheck {
  std::string name;
  bool pass = false;
  long checked_below = 0; ///< truncation at which the residual vanished
  std::string detail;
};

/// Runs every exact identity on a generator/deformation set.
std::vector<IdentityCheck> generator_battery(const DeformedSet& d);
std::vector<IdentityCheck> deformation_battery(const DeformedSet& d);

template <class C> IdentityCheck residual_check(const std::string& name, const Series<C>& r) {
  IdentityCheck c;
  c.name = name;
  c.checked_below = r.N();
  long v = r.valuation();
  c.pass = v >= r.N();
  if (!c.pass) c.detail = "first nonzero residual at u^" + std::to_string(v);
  return c;
}

} // namespace dlab
