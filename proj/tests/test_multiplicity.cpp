#include "doctest.h"

#include "dlab/deformations.hpp"
#include "dlab/formlit.hpp"
#include "dlab/multiplicity.hpp"

using namespace dlab;

namespace {

FormPoly res(const char* f, const char* g) { return resultant_E(parse_form(f), parse_form(g)).to_form(); }

} // namespace

TEST_CASE("resultants in E") {
  ScopedField fld(3);
  // 2x2 Sylvester: ad - bc.
  CHECK(res("h*E + g^3", "g*E + c*h") == parse_form("c*h^2 - g^4"));
  CHECK(res("E", "h") == parse_form("h"));
  CHECK(res("E^2 + theta*g^2", "h^2") == parse_form("h^4"));
  GHForm z = resultant_E(parse_form("E^2 + theta*g^2"), parse_form("E^2 + theta*g^2"));
  CHECK(z.is_zero());
  CHECK(resultant_E(parse_form("(E*g + h)*(E^2 + g^2)"), parse_form("(E*g+h)*h")).is_zero());
  CHECK_THROWS_AS(resultant_E(FormPoly(), parse_form("E")), std::domain_error);
}

TEST_CASE("resultant against the linear-case formula") {
  ScopedField fld(2);

  // Linear second argument: (-1)^n sum a_i (-d)^i c^(n-i).
  const FormPoly f = parse_form("E^3 + theta*g^2*E^2 + (theta+1)*h*E*g + c*g^3*h + g^6");
  const FormPoly cc = parse_form("g^2"), dd = parse_form("theta*h*g");
  FormPoly lin = cc * FormPoly::gen(kE) + dd;
  FormPoly oracle;
  for (int i = 0; i <= 3; ++i) {
    FormPoly ai;
    for (const auto& [e, c] : f.terms())
      if (e[kE] == i) {
        Exps e2 = e;
        e2[kE] = 0;
        ai.add_term(e2, c);
      }
    oracle = oracle + ai * (-dd).pow(i) * cc.pow(3 - i);
  }
  oracle = -oracle;
  GHForm r = resultant_E(f, lin);
  CHECK(r.to_form() == oracle);
  CHECK(r.to_form().is_homogeneous());
  CHECK(r.to_form().weight() == r.weight);
}

TEST_CASE("bound evaluation") {
  BoundReport b = bound_eval(2, 3, 1);
  CHECK(b.thm_factor == 1512 * 2);
  CHECK(b.thm_bound_low == 3024);
  CHECK(b.thm_bound_high == 3024);
  CHECK(b.conj_bound == 2);
  CHECK(b.thm_text == "3024");
  BoundReport e = bound_eval(2, 5, 4);
  CHECK(e.log_floor == 0);
  CHECK(e.thm_bound_low == 1512 * 4);
  BoundReport x = bound_eval(3, 14, 2);
  CHECK(x.log_floor == 2);
  CHECK_FALSE(x.log_exact);
  CHECK(x.thm_bound_low == 252 * 3 * 8 * 24 * 2);
  CHECK(x.thm_bound_high == 252 * 3 * 8 * 24 * 3);
  CHECK(log_floor_q(81, 3) == std::pair<long, bool>{4, true});
  CHECK(log_floor_q(80, 3) == std::pair<long, bool>{3, false});
  CHECK_THROWS_AS(bound_eval(2, 3, 3), std::domain_error);
}

TEST_CASE("certificate k") {
  CHECK(certificate_k(36, 2) == 4);
  CHECK(certificate_k(72, 2) == 5);
  CHECK(certificate_k(1, 2) == 0);
  CHECK(certificate_k(8, 2) == 4); // 2^16 > 512 > 2^8
}

TEST_CASE("certificate for E at q = 2") {
  ScopedField fld(2);
  Expander ex(16);
  CertificateReport R = certify(parse_form("E"), CertifyOptions{}, ex);
  CHECK(R.mu == 36);
  CHECK(R.k == 4);
  CHECK(R.lemma_hypotheses_met);
  CHECK(R.aux.n0 <= 36);
  CHECK(R.branch == "resultant");
  CHECK(R.measured_nu_f == 1);
  CHECK(R.measured_nu_f <= R.certified_bound);
  CHECK(R.nu_rho <= R.rho_bound);
  CHECK(R.nu_rho_expansion_ok);
  CHECK(R.consistent);
}

TEST_CASE("certificate option checks") {
  ScopedField fld(2);
  Expander ex(16);
  CertifyOptions o;
  o.mu_override = 6;
  CHECK_THROWS_AS(certify(parse_form("E"), o, ex), std::runtime_error);
  CHECK_THROWS_AS(certify(parse_form("g*h"), CertifyOptions{}, ex), std::domain_error);
  CHECK_THROWS_AS(certify(parse_form("eb"), CertifyOptions{}, ex), std::domain_error);
}

TEST_CASE("twisted auxiliary form matches the series twist") {
  for (int q : {2, 3}) {
    ScopedField fld(q);
    Expander ex(16);
    CertifyOptions o;
    o.mu_override = q == 2 ? 6 : 7;
    o.unsafe_small_mu = true;
    o.exact_fk = true;
    const char* form = q == 2 ? "E^2 + E*g^2 + g*h" : "E^2*g + E*h";
    CertificateReport R = certify(parse_form(form), o, ex);
    INFO("q=" << q);
    CHECK_FALSE(R.lemma_hypotheses_met);
    CHECK(R.consistent);
    long qk = 1;
    for (int i = 0; i < R.k; ++i) qk *= q;
    const long N = qk * R.aux.n0 + 4;

    FormPoly fk = R.fk_e1.to_form() * FormPoly::gen(kE) + R.fk_e0.to_form();
    CHECK(fk.is_homogeneous());
    CHECK(fk.weight() == R.w_fk);
    Expander big(N);
    ThetaPoly Lf;
    SeriesA lhs = at_t_theta(big.expand(fk, &Lf));
    ThetaPoly La;
    SeriesTA aux = big.expand(R.aux.form, &La);
    SeriesA rhs = at_t_theta(aux.twist(R.k)).truncate(N);
    CHECK(lhs.valuation() == qk * R.aux.n0);
    CHECK((lhs.scale(La.frob(R.k)) - rhs.scale(Lf)).truncate(N).is_zero());
  }
}

TEST_CASE("small mu can leave the resultant branch inconclusive") {
  ScopedField fld(3);
  Expander ex(16);
  CertifyOptions o;
  o.mu_override = 5;
  o.unsafe_small_mu = true;
  CertificateReport R = certify(parse_form("E^2 + theta*g^2"), o, ex);
  CHECK(R.branch == "inconclusive");
  CHECK(R.nu_rho >= R.nu_fk_lower);
  CHECK_FALSE(R.consistent);
}
