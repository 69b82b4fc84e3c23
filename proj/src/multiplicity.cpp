#include "dlab/multiplicity.hpp"

#include "dlab/formlit.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dlab {

namespace {

using HT = TPoly<TK>; // polynomial in h over K[t]

template <class C> TPoly<C> trunc(const TPoly<C>& p, long M) {
  if (M >= kExact || p.deg() < M) return p;
  std::vector<C> v(p.coeffs().begin(), p.coeffs().begin() + M);
  return TPoly<C>(std::move(v));
}

template <class C> TPoly<C> mul(const TPoly<C>& a, const TPoly<C>& b, long M) {
  if (a.is_zero() || b.is_zero()) return TPoly<C>();
  if (M >= kExact) return a * b;
  const long n = std::min<long>(M, a.deg() + b.deg() + 1);
  std::vector<C> r(n);
  for (int i = 0; i <= a.deg() && i < n; ++i) {
    const C& x = a.coeff_ref(i);
    if (x.is_zero()) continue;
    for (int j = 0; j <= b.deg() && i + j < n; ++j) {
      const C& y = b.coeff_ref(j);
      if (!y.is_zero()) r[i + j] += x * y;
    }
  }
  return TPoly<C>(std::move(r));
}

// Twist of a polynomial in h: h^c -> h^{qc}, coefficients Frobenius-twisted.
template <class C> TPoly<C> twist_h(const TPoly<C>& p, long M) {
  const int q = field().q();
  if (p.is_zero()) return p;
  const long top = static_cast<long>(p.deg()) * q;
  const long n = std::min(M, top + 1);
  std::vector<C> r(n);
  for (int c = 0; c <= p.deg(); ++c) {
    const long e = static_cast<long>(c) * q;
    if (e >= n) break;
    if (!p.coeff_ref(c).is_zero()) r[e] = p.coeff_ref(c).frob(1);
  }
  return TPoly<C>(std::move(r));
}

HPoly shift_h(const HPoly& p, long M) {
  if (p.is_zero()) return p;
  std::vector<RatFunc> v(p.deg() + 2);
  for (int i = 0; i <= p.deg(); ++i) v[i + 1] = p.coeff_ref(i);
  return trunc(HPoly(std::move(v)), M);
}

HPoly at_theta(const HT& p) {
  const RatFunc th = RatFunc::theta();
  return p.map([&](const TK& c) { return c.eval(th); });
}

std::string fraction(long a, long b) {
  if (b == 0) return "inf";
  long g = std::gcd(a, b);
  a /= g;
  b /= g;
  return b == 1 ? std::to_string(a) : std::to_string(a) + "/" + std::to_string(b);
}

} // namespace

std::optional<long> GHForm::nu() const {
  for (int c = 0; c <= p.deg(); ++c)
    if (!p.coeff_ref(c).is_zero()) return c;
  return std::nullopt;
}

FormPoly GHForm::to_form() const {
  const int q = field().q();
  FormPoly f;
  for (int c = 0; c <= p.deg(); ++c) {
    if (p.coeff_ref(c).is_zero()) continue;
    const long rest = weight - static_cast<long>(q + 1) * c;
    if (rest < 0 || rest % (q - 1) != 0) throw std::logic_error("GHForm: inconsistent weight");
    Exps e{};
    e[kG] = static_cast<int>(rest / (q - 1));
    e[kH] = c;
    f.add_term(e, TK(p.coeff_ref(c)));
  }
  return f;
}

std::vector<GHForm> e_coefficients(const FormPoly& f) {
  if (f.is_zero()) throw std::domain_error("zero form");
  if (!f.is_qm()) throw std::domain_error("expected a polynomial in E, g, h over K");
  const Grade g = f.grade();
  const int n = f.degree_in(kE);
  std::vector<GHForm> out(n + 1);
  std::vector<std::vector<RatFunc>> co(n + 1);
  for (int a = 0; a <= n; ++a) {
    out[a].weight = g.mu - 2 * a;
    out[a].type = reduce_type(g.m - a);
  }
  for (const auto& [e, c] : f.terms()) {
    auto& v = co[e[kE]];
    if (static_cast<int>(v.size()) <= e[kH]) v.resize(e[kH] + 1);
    v[e[kH]] += c.constant();
  }
  for (int a = 0; a <= n; ++a) out[a].p = HPoly(co[a]);
  return out;
}

GHForm resultant_E(const std::vector<GHForm>& f, const std::vector<GHForm>& g, long trunc_at) {
  auto degree = [](const std::vector<GHForm>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
      if (!v[i].is_zero()) return i;
    return -1;
  };
  const int n = degree(f), m = degree(g);
  if (n < 0 || m < 0) throw std::domain_error("resultant_E: zero input");
  const long wf = f[n].weight + 2L * n, wg = g[m].weight + 2L * m;
  const int tf = f[n].type + n, tg = g[m].type + m;
  GHForm r;
  r.weight = wf * m + wg * n - 2L * n * m;
  r.type = reduce_type(static_cast<long>(tf) * m + static_cast<long>(tg) * n - static_cast<long>(n) * m);
  r.trunc = trunc_at;
  const int S = n + m;
  if (S == 0) {
    r.p = HPoly(RatFunc(Fe::one()));
    return r;
  }
  // Sylvester rows: m shifted copies of f, n shifted copies of g, powers descending.
  auto entry = [&](int i, int j) -> const HPoly* {
    if (i < m) {
      int d = j - i;
      return (d >= 0 && d <= n) ? &f[n - d].p : nullptr;
    }
    int ii = i - m, d = j - ii;
    return (d >= 0 && d <= m) ? &g[m - d].p : nullptr;
  };
  // Determinant by expansion along rows, memoized over used-column masks.
  std::vector<HPoly> dp(1u << S);
  std::vector<char> seen(1u << S, 0);
  dp[0] = HPoly(RatFunc(Fe::one()));
  seen[0] = 1;
  for (unsigned mask = 0; mask < (1u << S); ++mask) {
    if (!seen[mask] || dp[mask].is_zero()) continue;
    const int row = __builtin_popcount(mask);
    if (row == S) continue;
    for (int j = 0; j < S; ++j) {
      if (mask & (1u << j)) continue;
      const HPoly* e = entry(row, j);
      if (!e || e->is_zero()) continue;
      const int above = __builtin_popcount(mask >> (j + 1));
      HPoly term = mul(dp[mask], *e, trunc_at);
      if (above % 2) term = -term;
      const unsigned nm = mask | (1u << j);
      dp[nm] = seen[nm] ? dp[nm] + term : term;
      seen[nm] = 1;
    }
  }
  r.p = trunc(dp[(1u << S) - 1], trunc_at);
  return r;
}

GHForm resultant_E(const FormPoly& f, const FormPoly& g, long trunc_at) {
  return resultant_E(e_coefficients(f), e_coefficients(g), trunc_at);
}

std::pair<long, bool> log_floor_q(long x, int q) {
  if (x < 1) throw std::domain_error("log of a non-positive integer");
  long k = 0;
  long p = 1;
  while (p <= x / q) {
    p *= q;
    ++k;
  }
  return {k, p == x};
}

BoundReport bound_eval(int q, long w, long l) {
  if (l < 1 || w <= l) throw std::domain_error("bound_eval needs l >= 1 and w > l");
  BoundReport b;
  b.q = q;
  b.w = w;
  b.l = l;
  const long c = 252L * q * (static_cast<long>(q) * q - 1);
  b.conj_bound = l * (w - l);
  b.thm_factor = c * l * (w - l);
  auto [lf, exact] = log_floor_q(w - l, q);
  b.log_floor = lf;
  b.log_exact = exact || w - l <= q;
  b.thm_bound_low = b.thm_factor * std::max(1L, lf);
  b.thm_bound_high = b.thm_factor * std::max(1L, exact ? lf : lf + 1);
  if (w - l <= q) b.thm_bound_high = b.thm_factor;
  b.earlier_factor = c * l * l * w;
  b.earlier_log_floor = log_floor_q(w, q).first;
  if (b.log_exact)
    b.thm_text = std::to_string(b.thm_bound_low);
  else
    b.thm_text = std::to_string(b.thm_factor) + "*log_" + std::to_string(q) + "(" + std::to_string(w - l) + ")";
  return b;
}

std::vector<ScanRow> conjecture_scan(long W_max, long l_max, long N0, Expander& ex) {
  const int q = field().q();
  std::vector<ScanRow> rows;
  const int types = std::max(1, q - 1);
  for (long w = 1; w <= W_max; ++w)
    for (int m = 0; m < types; ++m)
      for (long l = 1; l <= std::min(l_max, w / 2); ++l) {
        SpaceBasis B = dim_Mtilde(w, m, static_cast<int>(l));
        if (B.dim == 0) continue;
        ScanRow r;
        r.q = q;
        r.w = w;
        r.m = m;
        r.l = l;
        r.dim = B.dim;
        ExtremalResult ext = extremal_form_auto(B.basis, ex, std::max(N0, B.dim + 5));
        r.max_nu = ext.max_nu;
        r.N = ext.N;
        r.bounds = bound_eval(q, w, l);
        r.exceeds_conjecture = r.max_nu > r.bounds.conj_bound;
        r.within_theorem = r.max_nu <= r.bounds.thm_bound_low;
        rows.push_back(r);
      }
  return rows;
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
  std::ostringstream os;
  os << "q,w,m,l,dim,max_nu,conj_bound,thm_bound,ratio\n";
  for (const auto& r : rows)
    os << r.q << "," << r.w << "," << r.m << "," << r.l << "," << r.dim << "," << r.max_nu << ","
       << r.bounds.conj_bound << "," << r.bounds.thm_bound_low << ","
       << fraction(r.max_nu, r.bounds.conj_bound) << "\n";
  return os.str();
}

int certificate_k(long mu, int q) {
  if (mu < 1) throw std::domain_error("mu must be positive");
  const __int128 target = static_cast<__int128>(mu) * mu * mu;
  for (int k = 0;; ++k) {
    long e = 1;
    for (int i = 0; i < k; ++i) e *= q;
    __int128 p = 1;
    bool over = false;
    for (long i = 0; i < e; ++i) {
      p *= q;
      if (p > target) {
        over = true;
        break;
      }
    }
    if (over) return k;
  }
}

CertificateReport certify(const FormPoly& f, const CertifyOptions& opt, Expander& ex) {
  const int q = field().q();
  if (f.is_zero()) throw std::domain_error("certify: zero form");
  if (!f.is_qm()) throw std::domain_error("certify: expected a polynomial in E, g, h over K");
  CertificateReport R;
  R.q = q;
  R.form = print_form(f);
  const Grade G = f.grade();
  R.w = G.mu;
  R.l = G.l;
  R.m = G.m;
  if (R.l < 1) throw std::domain_error("certify: depth must be at least 1");
  R.mu_default = 12L * (q * q - 1) * (R.w - R.l);
  R.mu = opt.mu_override > 0 ? opt.mu_override : R.mu_default;
  R.mu_overridden = opt.mu_override > 0;
  R.nu = 1;
  R.lemma_hypotheses_met = R.mu - R.nu >= 6L * (q * q - 1);
  if (!R.lemma_hypotheses_met && !opt.unsafe_small_mu)
    throw std::runtime_error("certify: mu - nu < 6(q^2-1); pass --unsafe-small-mu to run anyway");
  R.k = certificate_k(R.mu, q);
  long qk = 1;
  for (int i = 0; i < R.k; ++i) qk *= q;
  std::ostringstream line;
  R.chain.push_back("mu = " + std::to_string(R.mu) + (R.mu_overridden ? " (override; 12(q^2-1)(w-l) = " + std::to_string(R.mu_default) + ")" : " = 12(q^2-1)(w-l)") + ", nu = 1");
  R.chain.push_back("k = " + std::to_string(R.k) + ": smallest k with q^(q^k) > mu^3");

  // Auxiliary form, trying the form's type first.
  const int types = std::max(1, q - 1);
  bool found = false;
  for (int dm = 0; dm < types && !found; ++dm) {
    const long mt = reduce_type(R.m + dm);
    if (rank_Mdag(R.mu, R.nu, mt).basis.dim == 0) continue;
    R.aux = auxiliary_form(R.mu, R.nu, mt, opt.dt_budget, ex, opt.aux_N);
    R.aux_type = mt;
    found = true;
  }
  if (!found) throw std::runtime_error("certify: M-dagger space empty at mu = " + std::to_string(R.mu) +
                             " (mu - 1 must be reachable as a weight, e.g. mu odd when q is odd); choose another --mu-override");
  const long n0 = R.aux.n0;
  R.nu_fk_lower = qk * n0;
  R.chain.push_back("auxiliary form: nu_inf = n0 = " + std::to_string(n0) + " <= mu*nu = " + std::to_string(R.mu * R.nu) +
                    " (target U = " + std::to_string(R.aux.U) + ")");

  // Leading coefficient of f_k = twist^k(aux) at t = theta.
  {
    ThetaPoly L;
    SeriesTA s = ex.expand(R.aux.form, &L);
    const TA c = s.coeff(n0);
    ThetaPoly v;
    for (int j = 0; j <= c.deg(); ++j) v = v + c.coeff(j).frob(R.k) * ThetaPoly::theta().pow(j);
    R.fk_lead_nonvanishing = !v.is_zero();
  }
  R.chain.push_back("nu_inf(f_k) " + std::string(R.fk_lead_nonvanishing ? "= " : ">= ") + "q^k n0 = " +
                    std::to_string(R.nu_fk_lower));

  // aux = a eb + b hb with a, b in K[t][h] (g = 1).
  HT a, b;
  {
    std::vector<TK> av, bv;
    for (const auto& [e, c] : R.aux.form.terms()) {
      auto& v = e[kEb] ? av : bv;
      if (static_cast<int>(v.size()) <= e[kH]) v.resize(e[kH] + 1);
      v[e[kH]] += c;
    }
    a = HT(av);
    b = HT(bv);
  }
  R.w_fk = qk * R.mu + R.nu;
  const std::vector<GHForm> fc = e_coefficients(f);
  const long w_rho_expected = R.w * 1 + R.w_fk * R.l - 2 * R.l;
  const long exact_from = w_rho_expected / (q + 1) + 1;
  const TK tq = TK::t() - TK(RatFunc(ThetaPoly::theta().frob(1)));

  for (long M = 8;; M *= 2) {
    const long Mx = (opt.exact_fk || M >= exact_from) ? kExact : M;
    // e-bold^(j) = (X_j e-bold + Y_j h-bold) / D_j
    HT X(TK(Fe::one())), Y, Xp, Yp;
    TK D(Fe::one()), Dp;
    const HT hq1 = HT::monomial(TK(-RatFunc(Fe::one())), q - 1); // Delta = -h^{q-1}
    for (int j = 0; j < R.k; ++j) {
      Xp = X;
      Yp = Y;
      Dp = D;
      HT X1 = twist_h(X, Mx), Y1 = twist_h(Y, Mx);
      X = trunc(X1 + mul(mul(HT(tq), hq1, Mx), Y1, Mx), Mx);
      Y = X1;
      D = D.frob(1) * tq;
    }
    HT ak = a, bk = b;
    for (int j = 0; j < R.k; ++j) {
      ak = twist_h(ak, Mx);
      bk = twist_h(bk, Mx);
    }
    HPoly alpha, beta;
    const RatFunc th = RatFunc::theta();
    if (R.k == 0) {
      alpha = at_theta(a);
      beta = shift_h(at_theta(b), Mx);
    } else {
      // h-bold^(k) = Delta^(k-1) e-bold^(k-1), Delta^(k-1) = -h^{(q-1)q^{k-1}}
      const HT dk = trunc(HT::monomial(TK(-RatFunc(Fe::one())), static_cast<int>((q - 1) * (qk / q))), Mx);
      const RatFunc Dk = D.eval(th).inv(), Dkm = Dp.eval(th).inv();
      const HT bd = mul(bk, dk, Mx);
      alpha = at_theta(mul(ak, X, Mx)).scale(Dk) + at_theta(mul(bd, Xp, Mx)).scale(Dkm);
      beta = shift_h(at_theta(mul(ak, Y, Mx)).scale(Dk) + at_theta(mul(bd, Yp, Mx)).scale(Dkm), Mx);
    }
    alpha = trunc(alpha, Mx);
    std::vector<GHForm> gk(2);
    gk[0].weight = R.w_fk;
    gk[0].type = static_cast<int>(R.aux_type);
    gk[0].p = beta;
    gk[1].weight = R.w_fk - 2;
    gk[1].type = reduce_type(R.aux_type - 1);
    gk[1].p = alpha;
    if (gk[0].is_zero() && gk[1].is_zero()) {
      if (Mx == kExact) throw std::logic_error("certify: f_k vanishes identically");
      continue;
    }
    R.fk_e0 = gk[0];
    R.fk_e1 = gk[1];
    R.fk_e0.trunc = R.fk_e1.trunc = Mx;
    GHForm rho = resultant_E(fc, gk, Mx);
    R.w_rho = rho.weight;
    auto nr = rho.nu();
    if (nr) {
      R.nu_rho = *nr;
      R.rho_zero = false;
      // Confirm by expansion: only terms below h^{nu+1} matter.
      Expander small(R.nu_rho + 2);
      GHForm low = rho;
      low.p = trunc(rho.p, R.nu_rho + 1);
      FormPoly rf = low.to_form();
      SeriesTA s = small.expand(rf);
      R.nu_rho_expansion_ok = !s.is_zero() && s.valuation() == R.nu_rho;
      break;
    }
    if (Mx == kExact) {
      R.rho_zero = true;
      break;
    }
  }
  R.rho_bound = R.w_rho / (q + 1);
  R.chain.push_back("rho = res_E(f, f_k): weight " + std::to_string(R.w_rho) +
                    (R.rho_zero ? ", rho = 0" : ", nu_inf(rho) = " + std::to_string(R.nu_rho) +
                                                    " <= floor(w(rho)/(q+1)) = " + std::to_string(R.rho_bound)));

  if (!R.rho_zero) {
    if (R.nu_fk_lower > R.nu_rho) {
      R.branch = "resultant";
      R.certified_bound = R.rho_bound;
      R.chain.push_back("nu_inf(f_k) >= " + std::to_string(R.nu_fk_lower) + " > nu_inf(rho), so nu_inf(f) <= nu_inf(rho) <= " +
                        std::to_string(R.rho_bound));
    } else {
      R.branch = "inconclusive";
      R.chain.push_back("nu_inf(f_k) lower bound does not exceed nu_inf(rho); no conclusion");
    }
  } else if (R.fk_lead_nonvanishing) {
    R.branch = "divisibility";
    R.certified_bound = R.nu_fk_lower;
    R.chain.push_back("rho = 0: if f divides f_k then nu_inf(f) <= nu_inf(f_k) = " + std::to_string(R.nu_fk_lower) +
                      " (f is used as given, without reduction to irreducible factors)");
  } else {
    throw std::logic_error("certify: rho = 0 but nu_inf(f_k) is not pinned down; internal inconsistency");
  }

  R.measured_nu_f = nu_infty(f, ex);
  R.measured_within_bound = R.certified_bound >= 0 && R.measured_nu_f <= R.certified_bound;
  R.chain.push_back("measured nu_inf(f) = " + std::to_string(R.measured_nu_f));
  R.bounds = bound_eval(q, R.w, R.l);

  R.consistent = R.branch != "inconclusive" && R.measured_within_bound && R.aux.within_mu_nu;
  if (!R.rho_zero)
    R.consistent = R.consistent && R.nu_rho <= R.rho_bound && R.nu_rho_expansion_ok &&
                   R.nu_rho >= std::min(R.measured_nu_f, R.nu_fk_lower);
  return R;
}

} // namespace dlab
