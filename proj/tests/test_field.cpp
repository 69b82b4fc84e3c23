#include <doctest.h>

#include "dlab/field.hpp"

#include <random>

using namespace dlab;

TEST_CASE("working field axioms") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
    ScopedField sf(q);
    const auto& f = field();
    CHECK(f.q() == q);
    CHECK(f.k() % 2 == 0);
    std::mt19937 rng(q);
    std::uniform_int_distribution<std::uint32_t> pick(0, f.size() - 1);
    for (int it = 0; it < 200; ++it) {
      Fe a = Fe::from_poly_code(pick(rng)), b = Fe::from_poly_code(pick(rng)),
         c = Fe::from_poly_code(pick(rng));
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == Fe::zero());
      CHECK((a + b).frob() == a.frob() + b.frob());
      if (!a.is_zero()) CHECK(a * a.inv() == Fe::one());
    }
    // p * 1 = 0
    Fe s;
    for (int i = 0; i < f.p(); ++i) s += Fe::one();
    CHECK(s.is_zero());
    CHECK(Fe::generator().frob(f.k()) == Fe::generator());
    CHECK(Fe::generator().frob(1) != Fe::generator());
  }
}

TEST_CASE("subfields and codes") {
  for (int q : {2, 3, 4, 8, 9, 16}) {
    ScopedField sf(q);
    const auto& els = fq_elements();
    REQUIRE(els.size() == static_cast<size_t>(q));
    for (int c = 0; c < q; ++c) {
      CHECK(els[c].in_fq());
      CHECK(els[c].to_code() == c);
      CHECK(els[c].frob() == els[c]);
    }
    Fe z = Fe::fq2_generator();
    CHECK(!z.in_fq());
    CHECK(z.frob(2) == z);
    CHECK(Fe::from_int(-1) == -Fe::one());
  }
}
