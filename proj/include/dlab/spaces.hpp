#pragma once

// Graded spaces spanned by monomials in the generators, their dimensions,
// and searches for forms of large vanishing order.

#include "dlab/qmpoly.hpp"

#include <vector>

namespace dlab {

struct SpaceBasis {
  long dim = 0;
  std::vector<Exps> basis;
};

/// M_{w,m}: g^b h^c with (q-1)b + (q+1)c = w and c = m mod (q-1).
SpaceBasis dim_M(long w, long m);
/// The +-1 dimension sandwich w/(q^2-1) - 1 <= dim <= w/(q^2-1) + 1 only
/// makes sense when M_{w,m} can be nonzero, i.e. w = 2m mod (q-1).
bool dim_sandwich_applies(long w, long m);
bool dim_sandwich_holds(long w, long dim);

/// Quasi-modular forms of depth <= l: E^a phi with a <= l and
/// phi in M_{w-2a, m-a}.
SpaceBasis dim_Mtilde(long w, long m, int l);

struct RankMdag {
  /// Sum over 0 <= s <= floor((mu-nu)/(q-1)) of dim M_{mu-nu-s(q-1), m-nu}.
  long V = 0;
  /// Monomials phi h-bold^s e-bold^(nu-s), 0 <= s <= nu.
  SpaceBasis basis;
  bool bound_applies = false; ///< mu - nu >= 6(q^2-1) and mu + nu = 2m mod (q-1)
  bool bound_holds = true;    ///< two-sided bound on V when it applies
};
RankMdag rank_Mdag(long mu, long nu, long m);

struct ExtremalResult {
  long dim = 0;
  long N = 0;
  long max_nu = 0;
  std::vector<long> spectrum; ///< every attainable vanishing order, ascending
  FormPoly witness;           ///< attains max_nu; leading coefficient normalized
};

/// Largest vanishing order in the span of t-free monomials. Throws
/// PrecisionError when the expansions are dependent below N.
ExtremalResult extremal_form(const std::vector<Exps>& basis, Expander& ex, long N);
/// Same, raising N until the expansions are independent (up to max_N).
ExtremalResult extremal_form_auto(const std::vector<Exps>& basis, Expander& ex, long N,
                                  long max_N = 1024);

struct AuxiliaryResult {
  FormPoly form;
  long n0 = 0;
  long unknowns = 0;
  long N = 0;
  int dt_budget = 0;
  int deg_t_lead = 0;  ///< deg_t of the u^{n0} coefficient
  int deg_t_coeff = 0; ///< largest deg_t among the combination coefficients
  long V = 0, U = 0;   ///< U = floor(V/2)
  long upper = 0;      ///< floor(mu nu / (q-1))
  bool meets_U = false;
  bool within_upper = false;
  bool within_mu_nu = false; ///< n0 <= mu nu (hard)
};

/// Kernel-style search over K: every t^e (e <= dt_budget) times every basis
/// monomial of M-dagger is an unknown; returns the combination with the
/// largest u-valuation.
AuxiliaryResult auxiliary_form(long mu, long nu, long m, int dt_budget, Expander& ex, long N = 0);

/// ceil(mu nu / (q-1)) + dim + 5.
long default_search_N(long mu, long nu, long dim);

} // namespace dlab
