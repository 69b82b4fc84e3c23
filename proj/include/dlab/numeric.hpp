#pragma once

// Point evaluation over the numeric model of C: the Carlitz period and
// exponential, the parameter u, the forms g, Delta, h, E through lattice
// sums, and Anderson generating functions.
//
// All routines work at the thread's working_precision() (absolute
// x-exponent) and return values carrying their own certified bound.

#include "dlab/inf_laurent.hpp"

#include <vector>

namespace dlab {

/// pi~ = -y^q / prod_{i>=1} (1 - theta^{1-q^i}).
InfLaurent pi_tilde();
/// d_i as a numeric value (exact).
InfLaurent carlitz_d_num(int i);
/// e_C(w) = sum_i w^{q^i}/d_i.
InfLaurent carlitz_exp(const InfLaurent& w);
/// u(z) = 1/e_C(pi~ z); throws PrecisionError when e_C(pi~ z) is zero to precision.
InfLaurent u_of(const InfLaurent& z);

/// Versioned sample sets.
std::vector<InfLaurent> sample_points();      // zeta*theta, zeta*theta^2, zeta*theta + 1/theta
std::vector<InfLaurent> sample_t0();          // 0, 1/theta, 1 + zeta/theta
std::vector<std::string> sample_point_names();
std::vector<std::string> sample_t0_names();

/// Values at z of the generators computed through sums over monic a of
/// u(az) = u^{q^d}/f_a(u), plus the rank-two exponential coefficients.
struct PointForms {
  InfLaurent z, u;
  InfLaurent g, delta, h, E;
  InfLaurent gt, dt; ///< g~ = pi~^{q-1} g, Delta~ = pi~^{q^2-1} Delta
  std::vector<InfLaurent> alpha;
  int max_degree = 0; ///< largest deg a used in the sums
};

PointForms point_forms(const InfLaurent& z);

/// Anderson generating function sum_i (alpha_i w^{q^i})^{q^k}/(theta^{q^{i+k}} - t0).
InfLaurent agf_pole(const std::vector<InfLaurent>& alpha, const InfLaurent& omega,
                    const InfLaurent& t0, int k);

/// s_1(z, t0)^{(k)} and s_2(z, t0)^{(k)} via the pole form.
InfLaurent s1_eval(const PointForms& P, const InfLaurent& t0, int k = 0);
InfLaurent s2_eval(const PointForms& P, const InfLaurent& t0, int k = 0);
/// s_C(t0)^{(k)} via the partial-fraction form.
InfLaurent sC_eval(const InfLaurent& t0, int k = 0);
/// s_C(t0) via the product form y / prod_{i>=0}(1 - t0/theta^{q^i}).
InfLaurent sC_product(const InfLaurent& t0);
/// Anderson series form sum_n e_Lambda(omega/theta^{n+1}) t0^n for a lattice
/// given by its exponential coefficients.
InfLaurent agf_series(const std::vector<InfLaurent>& alpha, const InfLaurent& omega,
                      const InfLaurent& t0);
/// Exponential coefficients alpha_i(pi~ A) = 1/d_i.
std::vector<InfLaurent> carlitz_alpha();
/// sum' (a z + b)^{-n} over deg a, deg b <= B (brute force).
InfLaurent lattice_sum_eisenstein(const InfLaurent& z, int n, int B);

/// A u-expansion evaluated at a numeric u (truncation error below
/// val(u) * s.N() is not visible in the result).
InfLaurent eval_u_series(const SeriesA& s, const InfLaurent& u);
/// Same for coefficients in A[t], substituting t = t0.
InfLaurent eval_u_series(const SeriesTA& s, const InfLaurent& t0, const InfLaurent& u);

/// 2x2 matrix over A with unit determinant.
struct GammaMat {
  ThetaPoly a, b, c, d;
  std::string name;
  Fe det() const;
  GammaMat operator*(const GammaMat& o) const;
};
std::vector<GammaMat> sample_gammas();
InfLaurent act(const GammaMat& g, const InfLaurent& z);
/// a(t0): substitute t = t0 in the polynomial a(t).
InfLaurent bar_eval(const ThetaPoly& a, const InfLaurent& t0);

} // namespace dlab
