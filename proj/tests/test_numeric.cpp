#include "doctest.h"

#include "dlab/carlitz.hpp"
#include "dlab/deformations.hpp"
#include "dlab/numeric.hpp"

using namespace dlab;

namespace {

// Relative agreement: val(a - b) - val(b).
long rel(const InfLaurent& a, const InfLaurent& b) {
  InfLaurent r = a - b;
  long v = r.is_zero() ? r.prec() : r.val();
  return v - (b.is_zero() ? 0 : b.val());
}

constexpr long kW = 60;
constexpr long kSlack = 12;

} // namespace

TEST_CASE("Carlitz period and exponential") {
  for (int q : {2, 3, 4, 5}) {
    ScopedField f(q);
    PrecisionScope ps(kW);
    const InfLaurent pt = pi_tilde();
    CHECK(pt.val() == -q);
    CHECK(carlitz_exp(pt).is_zero());
    // e_C(a w) = phi_a(e_C(w)) for a = theta and a = theta^2 + 1
    const InfLaurent w = pt * InfLaurent(Fe::fq2_generator()) * InfLaurent::x();
    const InfLaurent ew = carlitz_exp(w);
    for (ThetaPoly a : {ThetaPoly::theta(), ThetaPoly::theta().pow(2) + ThetaPoly(Fe::one())}) {
      SkewPoly phi = carlitz_coeffs(a);
      InfLaurent rhs;
      for (size_t i = 0; i < phi.size(); ++i)
        rhs += InfLaurent::from_A(phi[i]) * ew.frob(static_cast<int>(i));
      CHECK(rel(carlitz_exp(InfLaurent::from_A(a) * w), rhs) >= kW - kSlack);
    }
  }
}

TEST_CASE("s_C: partial fractions, product, series, Frobenius equation, residue") {
  for (int q : {2, 3, 4}) {
    ScopedField f(q);
    PrecisionScope ps(kW);
    for (const auto& t0 : sample_t0()) {
      const InfLaurent a = sC_eval(t0);
      CHECK(rel(sC_product(t0), a) >= kW - kSlack);
      CHECK(rel(agf_series(carlitz_alpha(), pi_tilde(), t0), a) >= kW - kSlack);
      CHECK(rel(sC_eval(t0, 1), (t0 - InfLaurent::theta()) * a) >= kW - kSlack);
    }
    // (t - theta) s_C -> -pi~ as t -> theta; the error is of the size of t - theta.
    const long e = kW / 2;
    const InfLaurent t = InfLaurent::theta() + InfLaurent::monomial(Fe::one(), e);
    const InfLaurent res = (t - InfLaurent::theta()) * sC_product(t);
    CHECK(rel(res, -pi_tilde()) >= e - q * q);
  }
}

TEST_CASE("lattice route against u-expansions and lattice sums") {
  for (int q : {2, 3, 4}) {
    ScopedField f(q);
    PrecisionScope ps(kW);
    DeformedSet d = build_deformations(40);
    for (const auto& z : sample_points()) {
      PointForms P = point_forms(z);
      const InfLaurent& u = P.u;
      CHECK(rel(u_of(z + InfLaurent(Fe::one())), u) >= kW - kSlack);
      CHECK(rel(eval_u_series(d.gen.g, u), P.g) >= kW - kSlack);
      CHECK(rel(eval_u_series(d.gen.delta, u), P.delta) >= kW - kSlack);
      CHECK(rel(eval_u_series(d.gen.h, u), P.h) >= kW - kSlack);
      CHECK(rel(eval_u_series(d.gen.E, u), P.E) >= kW - kSlack);
      CHECK(rel(-P.h.pow(q - 1), P.delta) >= kW - kSlack);
      // g~ = [1] sum' (az + b)^{1-q}
      const int B = q == 2 ? 5 : 3;
      CHECK(rel(InfLaurent::from_A(bracket(1)) * lattice_sum_eisenstein(z, q - 1, B), P.gt) >=
            kW - kSlack);
      for (const auto& t0 : sample_t0()) {
        CHECK(rel(agf_series(P.alpha, InfLaurent(Fe::one()), t0), s2_eval(P, t0)) >= kW - kSlack);
        CHECK(rel(agf_series(P.alpha, z, t0), s1_eval(P, t0)) >= kW - kSlack);
      }
    }
  }
}

TEST_CASE("action of sample matrices") {
  ScopedField f(3);
  PrecisionScope ps(kW);
  const InfLaurent z = sample_points()[0];
  for (const auto& g : sample_gammas()) {
    CHECK_NOTHROW(g.det());
    for (const auto& h : sample_gammas()) {
      GammaMat gh = g * h;
      CHECK(rel(act(gh, z), act(g, act(h, z))) >= kW - kSlack);
    }
  }
}
