#include "doctest.h"

#include "dlab/formlit.hpp"

using namespace dlab;

TEST_CASE("form literals round trip") {
  for (int q : {2, 3, 4, 9}) {
    ScopedField f(q);
    for (const char* s : {"E", "g^2*h + E*g", "(theta^2+1)/(theta+c)*E^2*g - t*eb + hb*h", "theta*t^3*eb^2 - 1",
                          "(E + g)^3", "2*E - c^2*h/(theta)", "0*E + g"}) {
      INFO("q=" << q << " " << s);
      FormPoly a = parse_form(s);
      CHECK(parse_form(print_form(a)) == a);
    }
    CHECK(parse_form("E*E") == parse_form("E^2"));
    CHECK(parse_form("  g -g ").is_zero());
    CHECK(print_form(FormPoly()) == "0");
  }
}

TEST_CASE("form literal arithmetic") {
  ScopedField f(3);
  CHECK(parse_form("3*E").is_zero());
  CHECK(parse_form("4") == parse_form("1"));
  CHECK(parse_form("(E+g)^2") == parse_form("E^2 + 2*E*g + g^2"));
  CHECK(parse_form("E/theta*theta") == parse_form("E"));
  CHECK(parse_form("-E") == parse_form("2*E"));
}

TEST_CASE("form literal errors") {
  ScopedField f(2);
  auto pos = [](const char* s) -> long {
    try {
      parse_form(s);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(pos("") == 0);
  CHECK(pos("E +") == 3);
  CHECK(pos("E + x") == 4);
  CHECK(pos("E / g") == 2);
  CHECK(pos("E / 0") == 2);
  CHECK(pos("(E + g") == 6);
  CHECK(pos("E^") == 2);
  CHECK(pos("E )") == 2);
  CHECK(pos("E $ g") == 2);
}
