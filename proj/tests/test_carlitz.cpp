#include "doctest.h"

#include "dlab/carlitz.hpp"

#include <random>
#include <set>

using namespace dlab;

namespace {

ThetaPoly random_poly(std::mt19937& rng, int deg) {
  const auto els = fq_elements();
  std::vector<Fe> c(deg + 1);
  for (auto& x : c) x = els[rng() % els.size()];
  return ThetaPoly(c);
}

SkewPoly skew_add(SkewPoly a, const SkewPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (size_t i = 0; i < b.size(); ++i) a[i] = a[i] + b[i];
  while (!a.empty() && a.back().is_zero()) a.pop_back();
  return a;
}

SkewPoly trim(SkewPoly a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
  return a;
}

} // namespace

TEST_CASE("brackets and d_i from their definitions") {
  for (int q : {2, 3, 4, 5, 9}) {
    ScopedField f(q);
    const ThetaPoly th = ThetaPoly::theta();
    CHECK(bracket(1) == th.pow(q) - th);
    CHECK(bracket(2) == th.pow(q * q) - th);
    CHECK(carlitz_d(0) == ThetaPoly(Fe::one()));
    CHECK(carlitz_d(1) == bracket(1));
    CHECK(carlitz_d(2) == bracket(2) * bracket(1).pow(q));
    // deg d_i = i q^i
    CHECK(carlitz_d(3).deg() == 3 * q * q * q);
  }
}

TEST_CASE("Carlitz module is a ring homomorphism") {
  std::mt19937 rng(7);
  for (int q : {2, 3, 4, 5}) {
    ScopedField f(q);
    const ThetaPoly th = ThetaPoly::theta();
    const SkewPoly phi_t = carlitz_coeffs(th);
    REQUIRE(phi_t.size() == 2);
    CHECK(phi_t[0] == th);
    CHECK(phi_t[1] == ThetaPoly(Fe::one()));
    for (int rep = 0; rep < 6; ++rep) {
      ThetaPoly a = random_poly(rng, 1 + rep % 3), b = random_poly(rng, 2);
      SkewPoly pa = carlitz_coeffs(a), pb = carlitz_coeffs(b);
      CHECK(trim(carlitz_coeffs(a * b)) == trim(skew_compose(pa, pb)));
      CHECK(trim(carlitz_coeffs(a + b)) == skew_add(pa, pb));
      if (!a.is_zero()) {
        CHECK(pa[0] == a);
        CHECK(trim(pa).size() == static_cast<size_t>(a.deg() + 1));
        CHECK(trim(pa).back() == ThetaPoly(a.lead()));
      }
    }
  }
}

TEST_CASE("monic enumeration") {
  for (int q : {2, 3, 4}) {
    ScopedField f(q);
    for (int d = 0; d <= 3; ++d) {
      auto m = monics(d);
      long expect = 1;
      for (int i = 0; i < d; ++i) expect *= q;
      CHECK(static_cast<long>(m.size()) == expect);
      for (const auto& a : m) {
        CHECK(a.deg() == d);
        CHECK(a.lead() == Fe::one());
      }
      std::set<ThetaPoly> uniq(m.begin(), m.end());
      CHECK(uniq.size() == m.size());
    }
  }
}

TEST_CASE("Goss polynomials") {
  for (int q : {2, 3, 4, 5}) {
    ScopedField f(q);
    // G_n = X^n for n <= q
    for (int n = 1; n <= q; ++n) {
      const auto& G = goss_poly(n);
      for (int j = 0; j < static_cast<int>(G.size()); ++j)
        CHECK(G[j] == (j == n ? RatFunc(ThetaPoly(Fe::one())) : RatFunc()));
    }
    // G_{pn} = G_n^p
    const int p = field().p();
    for (int n = 1; n * p <= q * q + 1; ++n) {
      const auto& G = goss_poly(n);
      const auto& Gp = goss_poly(n * p);
      std::vector<RatFunc> pw(G.size() * p);
      for (size_t j = 0; j < G.size(); ++j) pw[j * p] = G[j].frob(0).pow(p);
      for (size_t j = 0; j < std::max(pw.size(), Gp.size()); ++j) {
        RatFunc a = j < pw.size() ? pw[j] : RatFunc();
        RatFunc b = j < Gp.size() ? Gp[j] : RatFunc();
        CHECK(a == b);
      }
    }
  }
}

TEST_CASE("u_a for a = theta starts with u^q") {
  for (int q : {2, 3, 5}) {
    ScopedField f(q);
    SeriesA ua = u_a_series(ThetaPoly::theta(), 8 * q);
    CHECK(ua.valuation() == q);
    CHECK(ua.lead() == ThetaPoly(Fe::one()));
    // u_c = c^{-1} u for constants
    SeriesA u1 = u_a_series(ThetaPoly(Fe::one()), 20);
    CHECK(agree(u1, SeriesA::u()));
  }
}
