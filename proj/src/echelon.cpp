#include "dlab/echelon.hpp"

namespace dlab {

namespace {

long leading(const RowA& r) {
  for (size_t j = 0; j < r.size(); ++j)
    if (!r[j].is_zero()) return static_cast<long>(j);
  return -1;
}

// Divides entries and combination by their common content.
void remove_content(EchelonRow& row) {
  ThetaPoly g;
  auto fold = [&](const RowA& v) {
    for (const auto& x : v) {
      if (x.is_zero()) continue;
      g = g.is_zero() ? x.monic() : ThetaPoly::gcd(g, x);
      if (g.deg() == 0) return false;
    }
    return true;
  };
  if (!fold(row.entries) || !fold(row.combination) || g.is_zero() || g.deg() == 0) return;
  for (auto& x : row.entries)
    if (!x.is_zero()) x = x.exact_div(g);
  for (auto& x : row.combination)
    if (!x.is_zero()) x = x.exact_div(g);
}

// r <- a*r - b*p
void combine(RowA& r, const RowA& p, const ThetaPoly& a, const ThetaPoly& b) {
  for (size_t j = 0; j < r.size(); ++j) {
    ThetaPoly x = r[j].is_zero() ? ThetaPoly() : a * r[j];
    if (!p[j].is_zero()) x = x - b * p[j];
    r[j] = std::move(x);
  }
}

} // namespace

Echelon echelonize(const std::vector<RowA>& rows, bool track) {
  Echelon E;
  const size_t n = rows.size();
  for (size_t i = 0; i < n; ++i) {
    EchelonRow row;
    row.entries = rows[i];
    if (track) {
      row.combination.assign(n, ThetaPoly());
      row.combination[i] = ThetaPoly(Fe::one());
    }
    for (;;) {
      const long j = leading(row.entries);
      if (j < 0) {
        E.dependent.push_back(i);
        break;
      }
      auto it = E.pivots.find(j);
      if (it == E.pivots.end()) {
        remove_content(row);
        E.pivots.emplace(j, std::move(row));
        break;
      }
      const EchelonRow& p = it->second;
      const ThetaPoly g = ThetaPoly::gcd(p.entries[j], row.entries[j]);
      const ThetaPoly a = p.entries[j].exact_div(g), b = row.entries[j].exact_div(g);
      combine(row.entries, p.entries, a, b);
      if (track) combine(row.combination, p.combination, a, b);
      remove_content(row);
    }
  }
  return E;
}

} // namespace dlab
