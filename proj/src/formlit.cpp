#include "dlab/formlit.hpp"

#include <cctype>
#include <sstream>

namespace dlab {

namespace {

class Parser {
public:
  explicit Parser(const std::string& s) : s_(s) {}

  FormPoly run() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("empty form", pos_);
    FormPoly f = form();
    skip();
    if (pos_ < s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return f;
  }

private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  FormPoly form() {
    FormPoly f;
    bool neg = eat('-');
    FormPoly t = term();
    f = neg ? -t : t;
    for (;;) {
      if (eat('+')) f = f + term();
      else if (eat('-')) f = f - term();
      else return f;
    }
  }

  FormPoly term() {
    FormPoly f = factor();
    for (;;) {
      if (eat('*')) {
        f = f * factor();
      } else {
        skip();
        const size_t at = pos_;
        if (!eat('/')) return f;
        FormPoly d = factor();
        f = f.scale(TK(invert_scalar(d, at)));
      }
    }
  }

  RatFunc invert_scalar(const FormPoly& d, size_t at) {
    if (d.is_zero()) throw ParseError("division by zero", at);
    if (d.terms().size() != 1 || d.terms().begin()->first != Exps{} ||
        !d.terms().begin()->second.is_const())
      throw ParseError("divisor must be an element of K", at);
    return d.terms().begin()->second.constant().inv();
  }

  FormPoly factor() {
    FormPoly a = atom();
    if (eat('^')) {
      skip();
      const size_t at = pos_;
      long n = uint_literal();
      if (n > 100000) throw ParseError("exponent too large", at);
      a = a.pow(static_cast<int>(n));
    }
    return a;
  }

  long uint_literal() {
    skip();
    const size_t start = pos_;
    long n = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      n = n * 10 + (s_[pos_] - '0');
      if (n > 1000000000L) throw ParseError("integer too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected integer", start);
    return n;
  }

  FormPoly atom() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    const size_t at = pos_;
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      FormPoly f = form();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const long n = uint_literal();
      return FormPoly::constant(TK(Fe::from_int(n % field().p())));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t e = pos_;
      while (e < s_.size() && std::isalpha(static_cast<unsigned char>(s_[e]))) ++e;
      const std::string w = s_.substr(pos_, e - pos_);
      pos_ = e;
      if (w == "E") return FormPoly::gen(kE);
      if (w == "g") return FormPoly::gen(kG);
      if (w == "h") return FormPoly::gen(kH);
      if (w == "hb") return FormPoly::gen(kHb);
      if (w == "eb") return FormPoly::gen(kEb);
      if (w == "t") return FormPoly::constant(TK::t());
      if (w == "theta") return FormPoly::constant(TK(RatFunc::theta()));
      if (w == "c") return FormPoly::constant(TK(Fe::fq_generator()));
      throw ParseError("unknown symbol '" + w + "'", at);
    }
    throw ParseError(std::string("unexpected '") + c + "'", at);
  }

  const std::string& s_;
  size_t pos_ = 0;
};

std::string monomial_text(const Exps& e) {
  std::string s;
  for (int g = 0; g < kNumGens; ++g) {
    if (!e[g]) continue;
    if (!s.empty()) s += "*";
    s += gen_name(g);
    if (e[g] > 1) s += "^" + std::to_string(e[g]);
  }
  return s;
}

std::string coeff_text(const TK& c) {
  // Each t-coefficient is a K element printed as (num)/(den).
  std::string s;
  for (int i = c.deg(); i >= 0; --i) {
    const RatFunc& r = c.coeff_ref(i);
    if (r.is_zero()) continue;
    if (!s.empty()) s += " + ";
    std::string k = "(" + r.num().to_string() + ")";
    if (!r.den().is_one()) k += "/(" + r.den().to_string() + ")";
    s += k;
    if (i >= 1) s += "*t";
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s;
}

} // namespace

FormPoly parse_form(const std::string& text) { return Parser(text).run(); }

std::string print_form(const FormPoly& f) {
  if (f.is_zero()) return "0";
  std::string s;
  // Highest exponents first, so the leading E-power term opens the text.
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    if (!s.empty()) s += " + ";
    const std::string m = monomial_text(e);
    const bool one = c.is_const() && c.constant().is_one();
    if (m.empty()) {
      s += "(" + coeff_text(c) + ")";
    } else if (one) {
      s += m;
    } else {
      s += "(" + coeff_text(c) + ")*" + m;
    }
  }
  return s;
}

} // namespace dlab
