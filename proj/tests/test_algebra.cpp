#include <doctest.h>

#include "dlab/series.hpp"

#include <random>

using namespace dlab;

namespace {

ThetaPoly random_poly(std::mt19937& rng, int maxdeg) {
  std::uniform_int_distribution<int> d(0, maxdeg), c(0, field().q() - 1);
  std::vector<int> codes(d(rng) + 1);
  for (int& x : codes) x = c(rng);
  return ThetaPoly::from_codes(codes);
}

} // namespace

TEST_CASE("ThetaPoly ring and Euclid") {
  for (int q : {2, 3, 4, 5}) {
    ScopedField sf(q);
    std::mt19937 rng(7 * q);
    for (int it = 0; it < 50; ++it) {
      ThetaPoly a = random_poly(rng, 8), b = random_poly(rng, 6), c = random_poly(rng, 5);
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero() && !b.is_zero()) CHECK((a * b).deg() == a.deg() + b.deg());
      if (!b.is_zero()) {
        ThetaPoly qq, r;
        ThetaPoly::divmod(a, b, qq, r);
        CHECK(qq * b + r == a);
        CHECK(r.deg() < b.deg());
        CHECK((a * b).exact_div(b) == a);
      }
      CHECK((a + b).frob() == a.frob() + b.frob());
      CHECK(a.frob() == a.pow(q));
      CHECK((a * b).frob(2) == a.frob(2) * b.frob(2));
      ThetaPoly g = ThetaPoly::gcd(a * c, b * c);
      if (!c.is_zero()) CHECK(c.monic().divides(g));
    }
    ThetaPoly t = ThetaPoly::theta();
    CHECK(t.frob(1) - t == t.pow(q) - t);
  }
}

TEST_CASE("RatFunc canonical form") {
  ScopedField sf(3);
  ThetaPoly t = ThetaPoly::theta();
  RatFunc a(t * t - ThetaPoly(Fe::one()), (t - ThetaPoly(Fe::one())) * ThetaPoly(Fe::from_int(2)));
  CHECK(a.den().is_one());
  CHECK(a.num() == (t + ThetaPoly(Fe::one())) * ThetaPoly(Fe::from_int(2)));
  RatFunc b = RatFunc(ThetaPoly(Fe::one())) / RatFunc(t);
  CHECK((b + b) * RatFunc(t) == RatFunc::from_int(2));
  CHECK(b.inv() == RatFunc(t));
  CHECK((a / b) * b == a);
  CHECK(b.frob() == b.pow(3));
  CHECK(RatFunc(t * t, t).is_poly());
}

TEST_CASE("series arithmetic") {
  ScopedField sf(3);
  SeriesA u = SeriesA::u();
  SeriesA one(ThetaPoly(Fe::one()));
  CHECK(agree((one + u) * (one - u), one - u * u));
  SeriesA uinv = u.inv();
  CHECK(uinv.n0() == -1);
  CHECK((uinv * u).valuation() == 0);
  CHECK(((uinv * u) - one).is_zero());

  // 1/(1 + theta u^2) to order 10
  ThetaPoly th = ThetaPoly::theta();
  SeriesA f = (one + u.pow(2).scale(th)).truncate(10);
  SeriesA g = f.inv();
  CHECK(g.N() == 10);
  CHECK(g.coeff(2) == -th);
  CHECK(g.coeff(4) == th * th);
  CHECK(g.coeff(3).is_zero());
  CHECK(((f * g) - one).is_zero());

  // truncation rule for products
  SeriesA a = (u + u.pow(2)).truncate(8);
  SeriesA b = (u.pow(3)).truncate(9);
  CHECK((a * b).N() == std::min(8 + 3, 9 + 1));

  // twist
  SeriesA h = (u.scale(th) + u.pow(2)).truncate(5);
  SeriesA ht = h.twist(1);
  CHECK(ht.N() == 15);
  CHECK(ht.coeff(3) == th.frob());
  CHECK(ht.coeff(6) == ThetaPoly(Fe::one()));
  CHECK(agree(h.twist(2), ht.twist(1)));
  CHECK(agree(h.twist(1), h.pow(3)));
  SeriesA k = (one - u.scale(th * th)).truncate(6);
  CHECK(agree((h * k).twist(1), h.twist(1) * k.twist(1)));
}

TEST_CASE("series twist with t coefficients") {
  ScopedField sf(2);
  TA t = TA::t();
  TA th(ThetaPoly::theta());
  SeriesTA x = SeriesTA::monomial(t * th, 1).truncate(4);
  SeriesTA y = x.twist(1);
  CHECK(y.coeff(2) == t * TA(ThetaPoly::theta().frob()));
  CHECK(y.N() == 8);
}
