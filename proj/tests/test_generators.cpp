#include "doctest.h"

#include "dlab/deformations.hpp"

using namespace dlab;

TEST_CASE("generator and deformation batteries") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    ScopedField f(q);
    const long N = q <= 3 ? 64 : 40;
    DeformedSet d = build_deformations(N);
    for (const auto& c : generator_battery(d)) {
      INFO("q=" << q << " " << c.name << " " << c.detail);
      CHECK(c.pass);
      CHECK(c.checked_below >= N);
    }
    for (const auto& c : deformation_battery(d)) {
      INFO("q=" << q << " " << c.name << " " << c.detail);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("leading terms and weight tags") {
  for (int q : {2, 3, 4}) {
    ScopedField f(q);
    DeformedSet d = build_deformations(32);
    const ThetaPoly one(Fe::one());
    CHECK(d.gen.g.coeff(0) == one);
    CHECK(d.gen.delta.valuation() == q - 1);
    CHECK(d.gen.delta.lead() == -one);
    CHECK(d.gen.h.valuation() == 1);
    CHECK(d.gen.h.lead() == -one);
    CHECK(d.gen.E.valuation() == 1);
    CHECK(d.gen.E.lead() == one);
    REQUIRE(d.hb.grade());
    CHECK(*d.hb.grade() == Grade{q, 1, 1, 0});
    REQUIRE(d.eb.grade());
    CHECK(*d.eb.grade() == Grade{1, 1, 1, 0});
    for (int i = 0; i <= q; ++i) {
      SeriesTA hi = build_h_i(i, d.hb, d.gen.h);
      REQUIRE(hi.grade());
      CHECK(*hi.grade() == Grade{q + 1 - i, i, 1, 0});
    }
  }
}
