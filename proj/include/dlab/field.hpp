#pragma once

// Finite field arithmetic for the whole library.
//
// One global "working field" F_{q^k} is configured per run. It contains the
// constant field F_q (q = p^e <= 16), the residue extension F_{q^2} used by
// the ∞-adic numerics, and a generator alpha that is used as a specialization
// point theta -> alpha for fast exact-modulo-a-prime expansions.
//
// Elements are stored as discrete logarithms with respect to a fixed
// primitive element; addition goes through a Zech logarithm table.

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

namespace dlab {

class FieldContext {
public:
  static constexpr std::uint16_t kZero = 0xFFFF;

  FieldContext(int p, int e);

  int p() const { return p_; }
  int e() const { return e_; }
  int q() const { return q_; }
  /// Degree of the working field over F_q.
  int k() const { return k_; }
  /// Size of the working field.
  int size() const { return size_; }
  /// Order of the multiplicative group, size() - 1.
  int order() const { return order_; }
  /// Bumped on every configure(); caches key on it.
  std::uint64_t generation() const { return generation_; }

  // Tables, indexed by discrete log.
  const std::vector<std::uint16_t>& zech() const { return zech_; }
  const std::vector<std::uint32_t>& exp_table() const { return exp_; }
  const std::vector<std::uint16_t>& log_table() const { return log_; }
  /// Coefficients (low to high) of the primitive modulus over F_p.
  const std::vector<int>& modulus() const { return modulus_; }

  std::uint16_t neg_one_log() const { return neg_one_log_; }

private:
  friend void configure_field(int q);
  int p_, e_, q_, k_, size_, order_;
  std::uint64_t generation_ = 0;
  std::vector<int> modulus_;
  std::vector<std::uint32_t> exp_;  // log -> polynomial-basis integer
  std::vector<std::uint16_t> log_;  // polynomial-basis integer -> log
  std::vector<std::uint16_t> zech_; // log(1 + g^i)
  std::uint16_t neg_one_log_ = 0;
};

namespace detail {
extern const FieldContext* g_field;
}

/// Selects q for all subsequent arithmetic. Throws for q not a prime power
/// or q > 16.
void configure_field(int q);
const FieldContext& field();

/// RAII helper that configures a field and restores the previous q.
class ScopedField {
public:
  explicit ScopedField(int q);
  ~ScopedField();
  ScopedField(const ScopedField&) = delete;
  ScopedField& operator=(const ScopedField&) = delete;

private:
  int previous_q_;
};

/// Element of the working field F_{q^k}.
class Fe {
public:
  constexpr Fe() = default;

  static Fe zero() { return Fe(); }
  static Fe one() { return from_log(0); }
  static Fe from_log(std::uint32_t l) {
    Fe r;
    r.v_ = static_cast<std::uint16_t>(l % detail::g_field->order());
    return r;
  }
  /// Image of an integer in the prime subfield.
  static Fe from_int(long n);
  /// Element from its polynomial-basis integer encoding.
  static Fe from_poly_code(std::uint32_t code);
  /// Primitive element of F_{q^k}; also the specialization point alpha.
  static Fe generator() { return from_log(1); }
  /// Canonical generator of F_q^*.
  static Fe fq_generator();
  /// Canonical generator of F_{q^2}^*; lies outside F_q.
  static Fe fq2_generator();
  /// Element of F_q from its code (see to_code()).
  static Fe from_code(int code);

  bool is_zero() const { return v_ == FieldContext::kZero; }
  bool is_one() const { return v_ == 0; }
  std::uint16_t raw_log() const { return v_; }
  std::uint32_t poly_code() const;

  /// True when x^q = x.
  bool in_fq() const;
  /// Code of an F_q element: for prime q the residue 0..p-1, otherwise 0 for
  /// zero and 1 + j for c^j with c = fq_generator().
  int to_code() const;

  Fe frob(int k = 1) const;
  Fe pow(long n) const;
  Fe inv() const;

  friend Fe operator*(Fe a, Fe b) {
    if (a.is_zero() || b.is_zero()) return Fe();
    std::uint32_t s = std::uint32_t(a.v_) + b.v_;
    const std::uint32_t m = detail::g_field->order();
    if (s >= m) s -= m;
    Fe r;
    r.v_ = static_cast<std::uint16_t>(s);
    return r;
  }
  friend Fe operator+(Fe a, Fe b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const FieldContext& f = *detail::g_field;
    std::int32_t d = std::int32_t(b.v_) - a.v_;
    if (d < 0) d += f.order();
    std::uint16_t z = f.zech()[d];
    if (z == FieldContext::kZero) return Fe();
    std::uint32_t s = std::uint32_t(a.v_) + z;
    if (s >= std::uint32_t(f.order())) s -= f.order();
    Fe r;
    r.v_ = static_cast<std::uint16_t>(s);
    return r;
  }
  Fe operator-() const {
    if (is_zero()) return *this;
    const FieldContext& f = *detail::g_field;
    std::uint32_t s = std::uint32_t(v_) + f.neg_one_log();
    if (s >= std::uint32_t(f.order())) s -= f.order();
    Fe r;
    r.v_ = static_cast<std::uint16_t>(s);
    return r;
  }
  friend Fe operator-(Fe a, Fe b) { return a + (-b); }
  friend Fe operator/(Fe a, Fe b) { return a * b.inv(); }
  Fe& operator+=(Fe b) { return *this = *this + b; }
  Fe& operator-=(Fe b) { return *this = *this - b; }
  Fe& operator*=(Fe b) { return *this = *this * b; }
  friend bool operator==(Fe a, Fe b) { return a.v_ == b.v_; }
  friend bool operator!=(Fe a, Fe b) { return a.v_ != b.v_; }
  /// Arbitrary but fixed total order (by polynomial code).
  friend bool operator<(Fe a, Fe b) { return a.poly_code() < b.poly_code(); }

  std::string to_string() const;

private:
  std::uint16_t v_ = FieldContext::kZero;
};

std::ostream& operator<<(std::ostream& os, Fe x);

/// All elements of F_q in code order 0, 1, ..., q-1.
const std::vector<Fe>& fq_elements();

} // namespace dlab
