#pragma once

// Polynomials in the generators E, g, h, h-bold, e-bold with coefficients
// in K[t], their grading and their u-expansions.
//
// A QmPoly in the narrow sense (a polynomial in E, g, h over K) is a
// FormPoly whose exponents of h-bold and e-bold vanish and whose
// coefficients are t-free; see FormPoly::is_qm().

#include "dlab/deformations.hpp"
#include "dlab/ratfunc.hpp"

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>

namespace dlab {

enum Gen : int { kE = 0, kG = 1, kH = 2, kHb = 3, kEb = 4 };
constexpr int kNumGens = 5;
using Exps = std::array<int, kNumGens>;

/// (mu, nu, m, l) tag of one generator for the current field.
Grade gen_grade(int gen);
/// Tag of E^a g^b h^c hb^s eb^r: additive in the exponents.
Grade exps_grade(const Exps& e);
/// Type reduced to {0, ..., q-2} (always 0 when q = 2).
int reduce_type(long m);
std::string gen_name(int gen);

class FormPoly {
public:
  FormPoly() = default;
  static FormPoly constant(const TK& c);
  static FormPoly monomial(const Exps& e, const TK& c = TK(Fe::one()));
  static FormPoly gen(int g) {
    Exps e{};
    e[g] = 1;
    return monomial(e);
  }

  const std::map<Exps, TK>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Exps& e, const TK& c);

  FormPoly operator-() const;
  friend FormPoly operator+(const FormPoly& a, const FormPoly& b);
  friend FormPoly operator-(const FormPoly& a, const FormPoly& b) { return a + (-b); }
  friend FormPoly operator*(const FormPoly& a, const FormPoly& b);
  friend bool operator==(const FormPoly& a, const FormPoly& b) { return a.terms_ == b.terms_; }
  FormPoly scale(const TK& c) const;
  FormPoly pow(int n) const;

  /// True when mu, nu and the reduced type agree across all terms.
  bool is_homogeneous() const;
  /// (mu, nu, m, l) with l the largest E-exponent; throws on zero or
  /// non-homogeneous input.
  Grade grade() const;
  int degree_in(int gen) const;
  bool t_free() const;
  /// Only E, g, h with t-free coefficients.
  bool is_qm() const;
  /// Classical weight after t = theta: mu + nu.
  long weight() const {
    Grade g = grade();
    return g.mu + g.nu;
  }

  /// Least common multiple of all coefficient denominators (monic).
  ThetaPoly common_denominator() const;

private:
  std::map<Exps, TK> terms_;
};

/// u-expansions of generator monomials at a truncation that grows on demand.
class Expander {
public:
  explicit Expander(long N);
  long N() const { return N_; }
  /// Rebuilds the generators if N exceeds the current truncation.
  void ensure(long N);
  const DeformedSet& deformed() const { return *d_; }

  /// t-free monomial E^a g^b h^c over A.
  SeriesA monomial_A(const Exps& e);
  SeriesTA monomial_TA(const Exps& e);
  /// Expansion of L*f with L = f.common_denominator(), valid below N().
  SeriesTA expand(const FormPoly& f, ThetaPoly* denominator = nullptr);

private:
  const SeriesA& power_A(int gen, int n);
  const SeriesTA& power_TA(int gen, int n);
  long N_;
  std::unique_ptr<DeformedSet> d_;
  std::map<std::pair<int, int>, SeriesA> powA_;
  std::map<std::pair<int, int>, SeriesTA> powTA_;
};

/// Vanishing order at infinity; throws PrecisionError ("zero to precision N")
/// when the expansion vanishes below the truncation.
template <class C> long nu_infty(const Series<C>& s) {
  if (s.is_zero()) throw PrecisionError("zero to precision N = " + std::to_string(s.N()), s.N() * 2);
  return s.valuation();
}
/// Expands with the given expander, doubling its truncation up to max_N.
long nu_infty(const FormPoly& f, Expander& ex, long max_N = 512);

} // namespace dlab
