#pragma once

// Higher-level series routines: (q-1)-th roots and coefficient-ring
// embeddings.

#include "dlab/series.hpp"

namespace dlab {

/// The unique r with r^{q-1} = f and r = leading*u*(1 + O(u)).
template <class C> Series<C> root_qm1(const Series<C>& f, Fe leading) {
  const int q = field().q();
  const long v = f.valuation();
  if (v != q - 1 || f.exact())
    throw std::domain_error("not a (q-1)-th power shape: valuation " + std::to_string(v));
  const C lead_pow = C(leading.pow(q - 1));
  if (!(f.lead() - lead_pow).is_zero())
    throw std::domain_error("not a (q-1)-th power shape: leading coefficient");
  // G = f / (leading^{q-1} u^{q-1}) = 1 + O(u), known below L.
  const long L = f.N() - (q - 1);
  const C scale = C(leading.pow(q - 1).inv());
  std::vector<C> G(L);
  for (long n = 0; n < L; ++n) G[n] = f.coeff(n + q - 1) * scale;

  // P[k][n] = coefficient n of R^k, k = 1..q-1.
  const int K = q - 1;
  std::vector<std::vector<C>> P(K + 1, std::vector<C>(L));
  for (int k = 1; k <= K; ++k) P[k][0] = C(Fe::one());
  const C inv_qm1 = C(Fe::from_int(q - 1).inv());
  for (long n = 1; n < L; ++n) {
    // With r_n = 0: P[1][n] = 0, P[k][n] = P[k-1][n] + sum_{i<n} P[k-1][i] r_{n-i}.
    for (int k = 2; k <= K; ++k) {
      C s = P[k - 1][n];
      for (long i = 0; i < n; ++i) {
        const C& a = P[k - 1][i];
        const C& b = P[1][n - i];
        if (!a.is_zero() && !b.is_zero()) s += a * b;
      }
      P[k][n] = s;
    }
    C rn = (G[n] - (K == 1 ? C() : P[K][n])) * inv_qm1;
    if (K == 1) rn = G[n];
    P[1][n] = rn;
    for (int k = 2; k <= K; ++k) P[k][n] += rn * C(Fe::from_int(k));
  }
  std::vector<C> r(L);
  const C lc = C(leading);
  for (long n = 0; n < L; ++n) r[n] = P[1][n] * lc;
  return Series<C>(1, std::move(r), L + 1);
}

template <class D, class C> Series<D> embed_series(const Series<C>& s) {
  return s.map([](const C& x) { return D(x); });
}

} // namespace dlab
