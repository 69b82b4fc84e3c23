#pragma once

// Carlitz-module combinatorics over A = F_q[theta].

#include "dlab/series.hpp"

#include <vector>

namespace dlab {

/// [i] = theta^{q^i} - theta.
ThetaPoly bracket(int i);
/// d_0 = 1, d_i = [i] d_{i-1}^q.
ThetaPoly carlitz_d(int i);

/// Skew polynomial in tau with coefficients in A, low degree first.
using SkewPoly = std::vector<ThetaPoly>;

/// Coefficients <a>_0, ..., <a>_{deg a} of Phi_C(a).
SkewPoly carlitz_coeffs(const ThetaPoly& a);
/// Composition x o y with tau c = c^q tau.
SkewPoly skew_compose(const SkewPoly& x, const SkewPoly& y);

/// All monic polynomials of degree d, in lexicographic order of their
/// F_q-codes (lower coefficients vary fastest from the constant term).
std::vector<ThetaPoly> monics(int d);
/// Largest d with q^d < N (monic a of larger degree do not reach u^N).
int max_monic_degree(long N);

/// u_a = u(az) as a series in u with coefficients in A, valid below N.
SeriesA u_a_series(const ThetaPoly& a, long N);

/// Goss polynomial G_n for the lattice pi~ A; coefficient of X^j at j.
const std::vector<RatFunc>& goss_poly(int n);

/// Evaluates a polynomial in X (coefficients in K) at a series.
SeriesK eval_poly(const std::vector<RatFunc>& P, const SeriesK& x);

/// Series over A viewed over K.
SeriesK to_K(const SeriesA& s);
/// Series over K brought back to A; throws if a coefficient is not integral.
SeriesA to_A(const SeriesK& s, const char* what);

} // namespace dlab
