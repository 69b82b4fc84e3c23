#include "doctest.h"

#include "dlab/formlit.hpp"
#include "dlab/modcheck.hpp"

using namespace dlab;

namespace {

GammaMat mat(ThetaPoly a, ThetaPoly b, ThetaPoly c, ThetaPoly d, const char* name) {
  return GammaMat{std::move(a), std::move(b), std::move(c), std::move(d), name};
}

} // namespace

TEST_CASE("harness subset") {
  for (int q : {2, 3}) {
    ScopedField fld(q);
    const ThetaPoly one(Fe::one()), zero;
    const GammaMat I = mat(one, zero, zero, one, "I");
    const GammaMat T = mat(one, one, zero, one, "T");
    const auto zs = sample_points();
    const auto ts = sample_t0();
    const auto gs = sample_gammas();
    HarnessOptions opt;
    opt.P = 30;

    CheckResult c = check_identity(Identity::COCYCLE, I, I, zs[0], "z0", ts[1], "t1", opt);
    CHECK(c.status == CheckStatus::Pass);
    CHECK(c.residual_exact_zero);
    CheckResult s = check_identity(Identity::S2MOD, T, I, zs[0], "z0", ts[1], "t1", opt);
    CHECK(s.status == CheckStatus::Pass);
    for (Identity id : all_identities()) {
      CheckResult r = check_identity(id, gs[1], gs[2], zs[0], "z0", ts[1], "t1", opt);
      INFO("q=" << q << " " << r.identity << " " << r.gamma << " " << r.reason);
      CHECK(r.status == CheckStatus::Pass);
      if (!r.residual_exact_zero) CHECK(r.residual_exponent <= -opt.P / 2.0);
    }
  }
}

TEST_CASE("auxiliary checks at theta") {
  ScopedField fld(2);
  HarnessOptions opt;
  opt.P = 30;
  for (const CheckResult& r : run_auxiliary_checks(opt)) {
    INFO(r.identity << " " << r.gamma << " " << r.z << " " << r.reason);
    CHECK(r.status == CheckStatus::Pass);
  }
}

TEST_CASE("identity names") {
  for (Identity id : all_identities()) CHECK(identity_from_name(identity_name(id)) == id);
  CHECK_THROWS_AS(identity_from_name("NOPE"), std::invalid_argument);
}

TEST_CASE("nonvanishing search") {
  ScopedField fld(2);
  PrecisionScope scope(40);
  const GammaMat g = nonvanishing_search(sample_points()[0], sample_t0()[1]);
  CHECK_FALSE(g.c.is_zero()); // c-bar(t0) nonzero cases come first
}

TEST_CASE("depth decomposition") {
  for (int q : {2, 3}) {
    ScopedField fld(q);
    Expander ex(24);
    DepthDecomposition a = decompose_depth(parse_form("E*eb"), ex);
    REQUIRE(a.parts.size() == 1);
    CHECK(a.parts[0].i == 1);
    CHECK(a.parts[0].j == 1);
    CHECK(a.parts[0].f == parse_form("1"));
    CHECK(a.grades_ok);
    DepthDecomposition b = decompose_depth(parse_form("eb"), ex);
    REQUIRE(b.parts.size() == 1);
    CHECK(b.parts[0].grade == Grade{0, 0, 0, 0});
    CHECK(b.grades_ok);
    DepthDecomposition c = decompose_depth(parse_form("E^2*hb + E*eb*h"), ex);
    CHECK(c.parts.size() == 2);
    CHECK(c.grades_ok);
    CHECK(c.reassembly_ok);
    CHECK(c.N == 24);
    CHECK_THROWS_AS(decompose_depth(parse_form("E + g"), ex), std::domain_error);
  }
}
