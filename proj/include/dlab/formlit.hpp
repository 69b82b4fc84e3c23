#pragma once

// Text form of FormPoly.
//
//   form    = [ "-" ] term { ( "+" | "-" ) term } ;
//   term    = factor { ( "*" | "/" ) factor } ;
//   factor  = atom [ "^" uint ] ;
//   atom    = "E" | "g" | "h" | "hb" | "eb" | "t" | "theta" | "c" | uint
//           | "(" form ")" ;
//
// "c" is the fixed generator of F_q^*, integers are read modulo p, and a
// divisor must be a nonzero element of K. Whitespace is ignored.

#include "dlab/qmpoly.hpp"

#include <stdexcept>
#include <string>

namespace dlab {

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  size_t position() const { return pos_; }

private:
  size_t pos_;
};

FormPoly parse_form(const std::string& text);
/// Canonical text; parse_form(print_form(f)) == f.
std::string print_form(const FormPoly& f);

} // namespace dlab
