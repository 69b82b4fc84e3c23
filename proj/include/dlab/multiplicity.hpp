#pragma once

// Resultants in E, the multiplicity certificate, the conjecture scan and
// the bound evaluators.
//
// Homogeneous elements of K[g, h] are stored dehomogenized (g = 1) as
// polynomials in h together with their weight: the coefficient of h^c
// belongs to g^{(w - (q+1)c)/(q-1)} h^c. Distinct powers of h have
// distinct vanishing orders, so nu_infty is the lowest h-degree.

#include "dlab/spaces.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dlab {

using HPoly = TPoly<RatFunc>; ///< polynomial in h over K

struct GHForm {
  long weight = 0;
  int type = 0;
  HPoly p;
  /// Known modulo h^trunc; kExact when exact.
  long trunc = kExact;
  bool is_zero() const { return p.is_zero(); }
  /// Lowest h-degree; nullopt if zero to truncation.
  std::optional<long> nu() const;
  FormPoly to_form() const;
};

/// Splits a homogeneous QmPoly by powers of E: coefficient a is the
/// dehomogenized E^a-part, of weight w - 2a.
std::vector<GHForm> e_coefficients(const FormPoly& f);

/// Sylvester resultant in E of two homogeneous QmPolys, optionally modulo
/// h^trunc. A constant second argument c gives c^{deg f}.
GHForm resultant_E(const FormPoly& f, const FormPoly& g, long trunc = kExact);
/// Same on E-coefficient lists (index = power of E).
GHForm resultant_E(const std::vector<GHForm>& f, const std::vector<GHForm>& g, long trunc = kExact);

struct BoundReport {
  int q = 0;
  long w = 0, l = 0;
  long conj_bound = 0;   ///< l(w-l)
  long thm_factor = 0;   ///< 252 q (q^2-1) l (w-l)
  long log_floor = 0;    ///< floor(log_q(w-l)), exact
  bool log_exact = true; ///< w-l is a power of q (or <= q)
  long thm_bound_low = 0;  ///< thm_factor * max{1, floor(log_q(w-l))}
  long thm_bound_high = 0; ///< thm_factor * max{1, ceil(log_q(w-l))}
  long earlier_factor = 0; ///< c(q) l^2 w, the older shape, times max{1, log_q w}
  long earlier_log_floor = 0;
  std::string thm_text;  ///< exact expression
};
BoundReport bound_eval(int q, long w, long l);

/// floor(log_q x) for x >= 1 and whether x is an exact power of q.
std::pair<long, bool> log_floor_q(long x, int q);

struct ScanRow {
  int q = 0;
  long w = 0, m = 0, l = 0;
  long dim = 0;
  long max_nu = 0;
  long N = 0;
  BoundReport bounds;
  bool exceeds_conjecture = false; ///< max_nu > l(w-l); a finding, not a failure
  bool within_theorem = true;      ///< max_nu <= thm_bound_low (hard)
};

/// Rows for w <= W_max, every type, 1 <= l <= min(l_max, w/2), with a
/// nonzero space, in (w, m, l) order. N0 is the starting truncation.
std::vector<ScanRow> conjecture_scan(long W_max, long l_max, long N0, Expander& ex);
std::string scan_csv(const std::vector<ScanRow>& rows);

struct CertifyOptions {
  long mu_override = 0;       ///< 0: use 12(q^2-1)(w-l)
  bool unsafe_small_mu = false; ///< allow mu - nu < 6(q^2-1)
  int dt_budget = 2;
  long aux_N = 0;             ///< 0: default search truncation
  bool exact_fk = false;      ///< build f_k without h-truncation
};

struct CertificateReport {
  int q = 0;
  std::string form;
  long w = 0, l = 0, m = 0;
  long mu = 0, mu_default = 0, nu = 1;
  int k = 0;
  bool mu_overridden = false;
  bool lemma_hypotheses_met = true;
  AuxiliaryResult aux;
  long aux_type = 0;
  long nu_fk_lower = 0;            ///< q^k n0
  bool fk_lead_nonvanishing = false; ///< then nu(f_k) = q^k n0 exactly
  long w_fk = 0;
  /// f_k = fk_e1 E + fk_e0, known modulo h^{fk_e0.trunc}.
  GHForm fk_e1, fk_e0;
  long w_rho = 0;
  bool rho_zero = false;
  long nu_rho = -1;
  bool nu_rho_expansion_ok = false;
  long rho_bound = 0; ///< floor(w(rho)/(q+1))
  std::string branch; ///< "resultant", "divisibility" or "inconclusive"
  long certified_bound = -1;
  long measured_nu_f = -1;
  bool measured_within_bound = false;
  bool consistent = false;
  std::vector<std::string> chain;
  BoundReport bounds;
};

/// The certificate pipeline for a homogeneous QmPoly of depth >= 1.
CertificateReport certify(const FormPoly& f, const CertifyOptions& opt, Expander& ex);

/// Smallest k with q^{q^k} > mu^3 (equivalently q^k > 3 log_q mu).
int certificate_k(long mu, int q);

} // namespace dlab
