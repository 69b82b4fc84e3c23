#pragma once

// Exact u-expansions of g, Delta, h, E and the Eisenstein family.

#include "dlab/series.hpp"

#include <string>
#include <vector>

namespace dlab {

/// g = 1 - [1] sum_{a monic} u_a^{q-1}, valid below N.
SeriesA build_g(long N);
/// Delta = ([1]^{-1})(g^{q+1} - 1) - [2] sum_{a monic} G_{q^2-1}(u_a).
/// Asserts a zero constant term, leading coefficient -1 and integrality.
SeriesA build_delta(long N);
/// h = -sum_{a monic} a^q u_a (literature formula, cross-check only).
SeriesA h_lattice_formula(long N);
/// E = sum_{a monic} a u_a (literature formula, cross-check only).
SeriesA e_lattice_formula(long N);

/// g*_k over F_q[t, theta] from g and Delta (t-free inputs).
SeriesTA g_star(int k, const SeriesA& g, const SeriesA& delta);

struct GeneratorSet {
  long N = 0;
  SeriesA g, delta, h, E;
  /// Names of the identities verified while building.
  std::vector<std::string> verified;
};

/// Builds g, Delta, h and E (E through the deformation e), each valid below N.
GeneratorSet build_generators(long N);

/// Truncation the deformation solver needs from g and Delta to reach N.
long generator_margin(long N);

} // namespace dlab
