#include "dlab/spaces.hpp"

#include "dlab/echelon.hpp"

#include <stdexcept>

namespace dlab {

SpaceBasis dim_M(long w, long m) {
  const int q = field().q();
  SpaceBasis r;
  if (w < 0) return r;
  for (long c = 0; (q + 1) * c <= w; ++c) {
    const long rest = w - (q + 1) * c;
    if (rest % (q - 1) != 0) continue;
    if (reduce_type(c) != reduce_type(m)) continue;
    Exps e{};
    e[kG] = static_cast<int>(rest / (q - 1));
    e[kH] = static_cast<int>(c);
    r.basis.push_back(e);
  }
  r.dim = static_cast<long>(r.basis.size());
  return r;
}

bool dim_sandwich_applies(long w, long m) { return w >= 0 && reduce_type(w - 2 * m) == 0; }

bool dim_sandwich_holds(long w, long dim) {
  const int q = field().q();
  const long Q = static_cast<long>(q) * q - 1;
  return w - Q <= dim * Q && dim * Q <= w + Q;
}

SpaceBasis dim_Mtilde(long w, long m, int l) {
  SpaceBasis r;
  for (int a = 0; a <= l && 2 * a <= w; ++a) {
    SpaceBasis b = dim_M(w - 2 * a, m - a);
    for (Exps e : b.basis) {
      e[kE] = a;
      r.basis.push_back(e);
    }
  }
  r.dim = static_cast<long>(r.basis.size());
  return r;
}

RankMdag rank_Mdag(long mu, long nu, long m) {
  const int q = field().q();
  RankMdag r;
  if (nu < 0) throw std::invalid_argument("rank_Mdag: nu < 0");
  if (mu >= nu) {
    const long smax = (mu - nu) / (q - 1);
    for (long s = 0; s <= smax; ++s) r.V += dim_M(mu - nu - s * (q - 1), m - nu).dim;
  }
  for (long s = 0; s <= nu; ++s) {
    SpaceBasis b = dim_M(mu - nu - s * (q - 1), m - nu);
    for (Exps e : b.basis) {
      e[kHb] = static_cast<int>(s);
      e[kEb] = static_cast<int>(nu - s);
      r.basis.basis.push_back(e);
    }
  }
  r.basis.dim = static_cast<long>(r.basis.basis.size());
  const long Q = static_cast<long>(q) * q - 1;
  const long d = mu - nu;
  r.bound_applies = d >= 6 * Q && reduce_type(mu + nu - 2 * m) == 0;
  if (r.bound_applies) {
    const long den = Q * (q - 1);
    r.bound_holds = 3 * den * r.V >= d * d && den * r.V <= 3 * d * d;
  }
  return r;
}

long default_search_N(long mu, long nu, long dim) {
  const int q = field().q();
  return (mu * nu + q - 2) / (q - 1) + dim + 5;
}

ExtremalResult extremal_form(const std::vector<Exps>& basis, Expander& ex, long N) {
  ExtremalResult r;
  r.dim = static_cast<long>(basis.size());
  r.N = N;
  if (basis.empty()) throw std::domain_error("extremal_form: zero space");
  ex.ensure(N);
  std::vector<RowA> rows;
  for (const Exps& e : basis) {
    SeriesA s = ex.monomial_A(e);
    RowA row(N);
    for (long n = 0; n < N; ++n) row[n] = s.coeff(n);
    rows.push_back(std::move(row));
  }
  Echelon E = echelonize(rows);
  if (!E.dependent.empty())
    throw PrecisionError("extremal_form: expansions dependent below N = " + std::to_string(N), 2 * N);
  for (const auto& [col, row] : E.pivots) r.spectrum.push_back(col);
  const auto& [top, row] = *E.pivots.rbegin();
  r.max_nu = top;
  // Make the u^{max_nu} coefficient monic in theta.
  const Fe scale = row.entries[top].lead().inv();
  for (size_t i = 0; i < basis.size(); ++i)
    if (!row.combination[i].is_zero())
      r.witness.add_term(basis[i], TK(RatFunc(row.combination[i] * scale)));
  return r;
}

ExtremalResult extremal_form_auto(const std::vector<Exps>& basis, Expander& ex, long N, long max_N) {
  for (;;) {
    try {
      return extremal_form(basis, ex, N);
    } catch (const PrecisionError&) {
      if (N >= max_N) throw;
      N = std::min(max_N, 2 * N);
    }
  }
}

AuxiliaryResult auxiliary_form(long mu, long nu, long m, int dt_budget, Expander& ex, long N) {
  const int q = field().q();
  RankMdag rk = rank_Mdag(mu, nu, m);
  const auto& basis = rk.basis.basis;
  if (basis.empty()) throw std::domain_error("auxiliary_form: M-dagger space is zero");
  AuxiliaryResult r;
  r.dt_budget = dt_budget;
  r.V = rk.V;
  r.U = rk.V / 2;
  r.upper = mu * nu / (q - 1);
  if (N <= 0) N = default_search_N(mu, nu, rk.basis.dim);
  // For nu != 0 a nonzero element vanishes to order at most mu nu.
  const long cap = nu > 0 ? std::max(N, mu * nu + 1) : 4 * N;

  for (;;) {
    ex.ensure(N);
    std::vector<SeriesTA> exp;
    int dmax = 0;
    for (const Exps& e : basis) {
      exp.push_back(ex.monomial_TA(e));
      for (long n = 0; n < N; ++n) dmax = std::max(dmax, exp.back().coeff(n).deg());
    }
    const long width = dmax + dt_budget + 1;
    std::vector<RowA> rows;
    for (size_t i = 0; i < basis.size(); ++i)
      for (int e = 0; e <= dt_budget; ++e) {
        RowA row(N * width);
        for (long n = 0; n < N; ++n) {
          const TA c = exp[i].coeff(n);
          for (int j = 0; j <= c.deg(); ++j) row[n * width + j + e] = c.coeff(j);
        }
        rows.push_back(std::move(row));
      }
    r.unknowns = static_cast<long>(rows.size());
    Echelon E = echelonize(rows);
    if (!E.dependent.empty()) {
      if (N >= cap)
        throw std::runtime_error("auxiliary_form: combination vanishing beyond mu*nu; expansions inconsistent");
      N = std::min(cap, 2 * N);
      continue;
    }
    r.N = N;
    const auto& [top, row] = *E.pivots.rbegin();
    r.n0 = top / width;
    // Normalize: lowest t-coefficient of the u^{n0} coefficient monic in theta.
    int lowest = -1;
    r.deg_t_lead = 0;
    for (long j = 0; j < width; ++j) {
      const ThetaPoly& x = row.entries[r.n0 * width + j];
      if (x.is_zero()) continue;
      if (lowest < 0) lowest = static_cast<int>(j);
      r.deg_t_lead = static_cast<int>(j);
    }
    const Fe scale = row.entries[r.n0 * width + lowest].lead().inv();
    r.deg_t_coeff = 0;
    for (size_t i = 0; i < basis.size(); ++i) {
      std::vector<RatFunc> tc(dt_budget + 1);
      for (int e = 0; e <= dt_budget; ++e)
        tc[e] = RatFunc(row.combination[i * (dt_budget + 1) + e] * scale);
      TK c(tc);
      if (c.is_zero()) continue;
      r.deg_t_coeff = std::max(r.deg_t_coeff, c.deg());
      r.form.add_term(basis[i], c);
    }
    r.meets_U = r.n0 >= r.U;
    r.within_upper = r.n0 <= r.upper;
    r.within_mu_nu = nu == 0 || r.n0 <= mu * nu;
    return r;
  }
}

} // namespace dlab
