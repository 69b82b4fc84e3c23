#include "dlab/field.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace dlab {

namespace detail {
const FieldContext* g_field = nullptr;
}

namespace {

// Degree of the working field over F_q, chosen so that q^k <= 65536 and k is
// even (so F_{q^2} sits inside).
int working_degree(int q) {
  switch (q) {
  case 2: return 16;
  case 3: return 10;
  case 4: return 8;
  case 5: return 6;
  default: return 4;
  }
}

bool prime_power(int q, int& p, int& e) {
  if (q < 2) return false;
  for (p = 2; p <= q; ++p) {
    if (q % p == 0) break;
  }
  e = 0;
  int r = q;
  while (r % p == 0) {
    r /= p;
    ++e;
  }
  return r == 1;
}

std::map<int, std::unique_ptr<FieldContext>>& registry() {
  static std::map<int, std::unique_ptr<FieldContext>> r;
  return r;
}

std::uint64_t g_generation = 0;

} // namespace

FieldContext::FieldContext(int p, int e) : p_(p), e_(e) {
  q_ = 1;
  for (int i = 0; i < e; ++i) q_ *= p;
  k_ = working_degree(q_);
  const int n = e * k_;
  size_ = 1;
  for (int i = 0; i < n; ++i) size_ *= p;
  order_ = size_ - 1;

  // Digits of a polynomial-basis integer, base p, low degree first.
  std::vector<int> pw(n + 1, 1);
  for (int i = 1; i <= n; ++i) pw[i] = pw[i - 1] * p;

  // Search monic f = x^n + (lower) with x primitive modulo f.
  exp_.assign(order_, 0);
  log_.assign(size_, kZero);
  std::vector<int> digits(n);
  for (int lower = 1; lower < size_; ++lower) {
    if (lower % p == 0) continue; // constant term must be nonzero
    for (int i = 0, c = lower; i < n; ++i, c /= p) digits[i] = c % p;
    std::uint32_t cur = 1;
    std::fill(log_.begin(), log_.end(), kZero);
    bool ok = true;
    for (int l = 0; l < order_; ++l) {
      if (log_[cur] != kZero) {
        ok = false;
        break;
      }
      log_[cur] = static_cast<std::uint16_t>(l);
      exp_[l] = cur;
      // cur *= x modulo f
      int top = static_cast<int>(cur / pw[n - 1]);
      std::uint32_t shifted = (cur % pw[n - 1]) * p;
      if (top != 0) {
        std::uint32_t next = 0;
        for (int i = 0; i < n; ++i) {
          int d = static_cast<int>((shifted / pw[i]) % p);
          d = (d - top * digits[i]) % p;
          if (d < 0) d += p;
          next += d * pw[i];
        }
        shifted = next;
      }
      cur = shifted;
    }
    if (ok && cur == 1) {
      modulus_.assign(digits.begin(), digits.end());
      modulus_.push_back(1);
      break;
    }
  }
  if (modulus_.empty()) throw std::logic_error("no primitive polynomial found");

  // Zech table: zech[i] = log(1 + g^i).
  zech_.assign(order_, kZero);
  for (int i = 0; i < order_; ++i) {
    std::uint32_t a = exp_[i];
    // add 1 to the constant digit
    std::uint32_t c0 = a % p;
    std::uint32_t sum = a - c0 + (c0 + 1) % p;
    zech_[i] = sum == 0 ? kZero : log_[sum];
  }
  neg_one_log_ = p == 2 ? 0 : static_cast<std::uint16_t>(order_ / 2);
}

void configure_field(int q) {
  int p = 0, e = 0;
  if (q > 16 || !prime_power(q, p, e))
    throw std::invalid_argument("q must be a prime power <= 16, got " + std::to_string(q));
  auto& reg = registry();
  auto it = reg.find(q);
  if (it == reg.end()) it = reg.emplace(q, std::make_unique<FieldContext>(p, e)).first;
  if (detail::g_field != it->second.get()) {
    it->second->generation_ = ++g_generation;
    detail::g_field = it->second.get();
  }
}

const FieldContext& field() {
  if (!detail::g_field) throw std::logic_error("field not configured");
  return *detail::g_field;
}

ScopedField::ScopedField(int q) : previous_q_(detail::g_field ? detail::g_field->q() : 0) {
  configure_field(q);
}

ScopedField::~ScopedField() {
  if (previous_q_ != 0) configure_field(previous_q_);
}

Fe Fe::from_int(long n) {
  const int p = field().p();
  long r = n % p;
  if (r < 0) r += p;
  return from_poly_code(static_cast<std::uint32_t>(r));
}

Fe Fe::from_poly_code(std::uint32_t code) {
  const auto& f = field();
  if (code >= static_cast<std::uint32_t>(f.size())) throw std::out_of_range("field code");
  Fe r;
  r.v_ = f.log_table()[code];
  return r;
}

std::uint32_t Fe::poly_code() const {
  if (is_zero()) return 0;
  return field().exp_table()[v_];
}

Fe Fe::fq_generator() {
  const auto& f = field();
  return from_log(static_cast<std::uint32_t>(f.order() / (f.q() - 1)));
}

Fe Fe::fq2_generator() {
  const auto& f = field();
  return from_log(static_cast<std::uint32_t>(f.order() / (f.q() * f.q() - 1)));
}

bool Fe::in_fq() const {
  if (is_zero()) return true;
  const auto& f = field();
  return v_ % (f.order() / (f.q() - 1)) == 0;
}

int Fe::to_code() const {
  if (!in_fq()) throw std::domain_error("element not in F_q");
  const auto& f = field();
  if (is_zero()) return 0;
  if (f.e() == 1) return static_cast<int>(poly_code());
  return 1 + v_ / (f.order() / (f.q() - 1));
}

Fe Fe::from_code(int code) {
  const auto& f = field();
  if (code < 0 || code >= f.q()) throw std::out_of_range("F_q code out of range");
  if (code == 0) return Fe();
  if (f.e() == 1) return from_poly_code(static_cast<std::uint32_t>(code));
  return fq_generator().pow(code - 1);
}

Fe Fe::frob(int k) const {
  if (is_zero()) return *this;
  const auto& f = field();
  std::uint64_t l = v_;
  for (int i = 0; i < k; ++i) l = (l * f.q()) % f.order();
  return from_log(static_cast<std::uint32_t>(l));
}

Fe Fe::pow(long n) const {
  if (is_zero()) {
    if (n == 0) return one();
    if (n < 0) throw std::domain_error("zero to negative power");
    return *this;
  }
  const long m = field().order();
  long r = (static_cast<long>(v_) * (n % m)) % m;
  if (r < 0) r += m;
  return from_log(static_cast<std::uint32_t>(r));
}

Fe Fe::inv() const {
  if (is_zero()) throw std::domain_error("division by zero in finite field");
  const int m = field().order();
  return from_log(static_cast<std::uint32_t>((m - v_) % m));
}

std::string Fe::to_string() const {
  if (in_fq()) {
    const auto& f = field();
    if (f.e() == 1) return std::to_string(to_code());
    if (is_zero()) return "0";
    if (is_one()) return "1";
    int j = to_code() - 1;
    return j == 1 ? "c" : "c^" + std::to_string(j);
  }
  std::ostringstream os;
  os << "a^" << v_;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, Fe x) { return os << x.to_string(); }

const std::vector<Fe>& fq_elements() {
  static std::vector<Fe> cache;
  static std::uint64_t gen = 0;
  if (gen != field().generation() || cache.empty()) {
    cache.clear();
    for (int c = 0; c < field().q(); ++c) cache.push_back(Fe::from_code(c));
    gen = field().generation();
  }
  return cache;
}

} // namespace dlab
