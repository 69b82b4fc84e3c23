#include "dlab/qmpoly.hpp"

#include <stdexcept>

namespace dlab {

Grade gen_grade(int gen) {
  const int q = field().q();
  switch (gen) {
  case kE: return Grade{2, 0, 1, 1};
  case kG: return Grade{q - 1, 0, 0, 0};
  case kH: return Grade{q + 1, 0, 1, 0};
  case kHb: return Grade{q, 1, 1, 0};
  case kEb: return Grade{1, 1, 1, 0};
  }
  throw std::invalid_argument("unknown generator");
}

Grade exps_grade(const Exps& e) {
  Grade r{0, 0, 0, 0};
  for (int i = 0; i < kNumGens; ++i) {
    Grade g = gen_grade(i);
    r.mu += e[i] * g.mu;
    r.nu += e[i] * g.nu;
    r.m += e[i] * g.m;
    r.l += e[i] * g.l;
  }
  return r;
}

int reduce_type(long m) {
  const int q = field().q();
  if (q == 2) return 0;
  long r = m % (q - 1);
  return static_cast<int>(r < 0 ? r + q - 1 : r);
}

std::string gen_name(int gen) {
  static const char* names[] = {"E", "g", "h", "hb", "eb"};
  return names[gen];
}

FormPoly FormPoly::constant(const TK& c) { return monomial(Exps{}, c); }

FormPoly FormPoly::monomial(const Exps& e, const TK& c) {
  FormPoly r;
  r.add_term(e, c);
  return r;
}

void FormPoly::add_term(const Exps& e, const TK& c) {
  if (c.is_zero()) return;
  for (int x : e)
    if (x < 0) throw std::invalid_argument("negative exponent");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

FormPoly FormPoly::operator-() const {
  FormPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

FormPoly operator+(const FormPoly& a, const FormPoly& b) {
  FormPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

FormPoly operator*(const FormPoly& a, const FormPoly& b) {
  FormPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exps e;
      for (int i = 0; i < kNumGens; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

FormPoly FormPoly::scale(const TK& c) const {
  FormPoly r;
  for (const auto& [e, x] : terms_) r.add_term(e, x * c);
  return r;
}

FormPoly FormPoly::pow(int n) const {
  FormPoly r = constant(TK(Fe::one()));
  for (int i = 0; i < n; ++i) r = r * *this;
  return r;
}

bool FormPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const Grade g0 = exps_grade(terms_.begin()->first);
  for (const auto& [e, c] : terms_) {
    Grade g = exps_grade(e);
    if (g.mu != g0.mu || g.nu != g0.nu || reduce_type(g.m) != reduce_type(g0.m)) return false;
  }
  return true;
}

Grade FormPoly::grade() const {
  if (terms_.empty()) throw std::domain_error("grade of the zero form");
  if (!is_homogeneous()) throw std::domain_error("form is not homogeneous");
  Grade g = exps_grade(terms_.begin()->first);
  g.m = reduce_type(g.m);
  g.l = degree_in(kE);
  return g;
}

int FormPoly::degree_in(int gen) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[gen]);
  return d;
}

bool FormPoly::t_free() const {
  for (const auto& [e, c] : terms_)
    if (!c.is_const()) return false;
  return true;
}

bool FormPoly::is_qm() const {
  if (!t_free()) return false;
  for (const auto& [e, c] : terms_)
    if (e[kHb] || e[kEb]) return false;
  return true;
}

ThetaPoly FormPoly::common_denominator() const {
  ThetaPoly L(Fe::one());
  for (const auto& [e, c] : terms_)
    for (const RatFunc& r : c.coeffs()) {
      const ThetaPoly& d = r.den();
      if (d.is_one()) continue;
      L = (L * d).exact_div(ThetaPoly::gcd(L, d));
    }
  return L.monic();
}

Expander::Expander(long N) : N_(N), d_(std::make_unique<DeformedSet>(build_deformations(N))) {}

void Expander::ensure(long N) {
  if (N <= N_) return;
  N_ = N;
  d_ = std::make_unique<DeformedSet>(build_deformations(N));
  powA_.clear();
  powTA_.clear();
}

const SeriesA& Expander::power_A(int gen, int n) {
  auto key = std::make_pair(gen, n);
  auto it = powA_.find(key);
  if (it != powA_.end()) return it->second;
  SeriesA r;
  if (n == 0) {
    r = SeriesA(ThetaPoly(Fe::one()));
  } else {
    const SeriesA* base = nullptr;
    switch (gen) {
    case kE: base = &d_->gen.E; break;
    case kG: base = &d_->gen.g; break;
    case kH: base = &d_->gen.h; break;
    default: throw std::invalid_argument("monomial_A: t-dependent generator");
    }
    r = (power_A(gen, n - 1) * *base).truncate(N_);
  }
  return powA_.emplace(key, std::move(r)).first->second;
}

const SeriesTA& Expander::power_TA(int gen, int n) {
  auto key = std::make_pair(gen, n);
  auto it = powTA_.find(key);
  if (it != powTA_.end()) return it->second;
  SeriesTA r;
  if (n == 0) {
    r = SeriesTA(TA(Fe::one()));
  } else {
    const SeriesTA& base = gen == kHb ? d_->hb : d_->eb;
    r = (power_TA(gen, n - 1) * base).truncate(N_);
  }
  return powTA_.emplace(key, std::move(r)).first->second;
}

SeriesA Expander::monomial_A(const Exps& e) {
  if (e[kHb] || e[kEb]) throw std::invalid_argument("monomial_A: t-dependent generator");
  SeriesA r = power_A(kE, e[kE]);
  if (e[kG]) r = (r * power_A(kG, e[kG])).truncate(N_);
  if (e[kH]) r = (r * power_A(kH, e[kH])).truncate(N_);
  return r.truncate(N_);
}

SeriesTA Expander::monomial_TA(const Exps& e) {
  Exps tfree = e;
  tfree[kHb] = tfree[kEb] = 0;
  SeriesTA r = lift_t(monomial_A(tfree));
  if (e[kHb]) r = (r * power_TA(kHb, e[kHb])).truncate(N_);
  if (e[kEb]) r = (r * power_TA(kEb, e[kEb])).truncate(N_);
  return r.truncate(N_);
}

SeriesTA Expander::expand(const FormPoly& f, ThetaPoly* denominator) {
  const ThetaPoly L = f.common_denominator();
  if (denominator) *denominator = L;
  SeriesTA sum = SeriesTA::zero(N_);
  for (const auto& [e, c] : f.terms()) {
    TA ca = c.map([&](const RatFunc& r) { return (r * RatFunc(L)).as_poly(); });
    sum += monomial_TA(e).scale(ca);
  }
  return sum.truncate(N_);
}

long nu_infty(const FormPoly& f, Expander& ex, long max_N) {
  if (f.is_zero()) throw std::domain_error("nu_infty of the zero form");
  for (;;) {
    SeriesTA s = ex.expand(f);
    if (!s.is_zero()) return s.valuation();
    if (ex.N() >= max_N)
      throw PrecisionError("zero to precision N = " + std::to_string(ex.N()), 2 * ex.N());
    ex.ensure(std::min(max_N, 2 * ex.N()));
  }
}

} // namespace dlab
