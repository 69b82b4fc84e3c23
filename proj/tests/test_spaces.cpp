#include "doctest.h"

#include "dlab/echelon.hpp"
#include "dlab/formlit.hpp"
#include "dlab/spaces.hpp"

using namespace dlab;

namespace {

// Independent count of g^b h^c of weight w and type m.
long count_M(int q, long w, long m) {
  long n = 0;
  for (long b = 0; (q - 1) * b <= w; ++b)
    for (long c = 0; (q - 1) * b + (q + 1) * c <= w; ++c)
      if ((q - 1) * b + (q + 1) * c == w && (q == 2 || ((c - m) % (q - 1) + (q - 1)) % (q - 1) == 0)) ++n;
  return n;
}

} // namespace

TEST_CASE("dim M by enumeration") {
  {
    ScopedField f(3);
    SpaceBasis b = dim_M(4, 1);
    REQUIRE(b.dim == 1);
    Exps h{};
    h[kH] = 1;
    CHECK(b.basis[0] == h);
    CHECK(dim_M(0, 0).dim == 1);
    CHECK(dim_M(0, 0).basis[0] == Exps{});
  }
  {
    ScopedField f(2);
    for (long w = 0; w <= 12; ++w) CHECK(dim_M(w, 0).dim == w / 3 + 1);
  }
  for (int q : {3, 4, 5}) {
    ScopedField f(q);
    for (long w = 0; w <= 40; ++w)
      for (long m = 0; m < q - 1; ++m) {
        const long d = dim_M(w, m).dim;
        CHECK(d == count_M(q, w, m));
        if (dim_sandwich_applies(w, m)) CHECK(dim_sandwich_holds(w, d));
      }
  }
}

TEST_CASE("dim M-tilde is the sum over E powers") {
  for (int q : {2, 3}) {
    ScopedField f(q);
    for (long w = 0; w <= 20; ++w)
      for (int l = 0; l <= 3; ++l)
        for (long m = 0; m < std::max(1, q - 1); ++m) {
          long s = 0;
          for (int a = 0; a <= l && 2 * a <= w; ++a) s += count_M(q, w - 2 * a, m - a);
          CHECK(dim_Mtilde(w, m, l).dim == s);
        }
  }
}

TEST_CASE("rank of M-dagger") {
  ScopedField f(2);
  RankMdag r = rank_Mdag(20, 1, 1);
  long v = 0;
  for (long s = 0; s <= 19; ++s) v += count_M(2, 19 - s, 0);
  CHECK(v == 77);
  CHECK(r.V == 77);
  CHECK(r.bound_applies);
  CHECK(r.bound_holds);
  // Monomials with at most nu copies of the deformations.
  CHECK(r.basis.dim == count_M(2, 19, 0) + count_M(2, 18, 0));
  for (long w : {0L, 3L, 7L, 12L}) CHECK(rank_Mdag(w, 0, 0).basis.dim == dim_M(w, 0).dim);
  CHECK(rank_Mdag(2, 5, 0).V == 0);
  CHECK(rank_Mdag(2, 5, 0).basis.dim == 0);
}

TEST_CASE("vanishing orders") {
  for (int q : {2, 3, 4}) {
    ScopedField f(q);
    Expander ex(16);
    CHECK(nu_infty(parse_form("h"), ex) == 1);
    CHECK(nu_infty(parse_form("g"), ex) == 0);
    CHECK(nu_infty(parse_form("E"), ex) == 1);
    CHECK(nu_infty(parse_form("h").pow(q - 1), ex) == q - 1);
    CHECK_THROWS_AS(nu_infty(parse_form("g - g"), ex), std::domain_error);
  }
}

TEST_CASE("extremal forms") {
  ScopedField f(2);
  Expander ex(16);
  ExtremalResult e = extremal_form_auto(dim_Mtilde(2, 0, 1).basis, ex, 8);
  CHECK(e.max_nu == 1);
  CHECK(e.witness == parse_form("E"));
  ExtremalResult e4 = extremal_form_auto(dim_Mtilde(4, 0, 1).basis, ex, 8);
  CHECK(e4.max_nu <= 3);
  CHECK(e4.max_nu == 2); // regression value
  CHECK(e4.spectrum == std::vector<long>{0, 1, 2});
  CHECK(nu_infty(e4.witness, ex) == e4.max_nu);
  // Dimension one: the single basis element.
  ExtremalResult e1 = extremal_form_auto(dim_M(6, 0).basis, ex, 8);
  CHECK(e1.dim == 3);
  for (long w : {3L, 4L, 5L}) {
    auto b = dim_M(w, 0).basis;
    if (b.size() != 1) continue;
    CHECK(extremal_form_auto(b, ex, 8).max_nu == nu_infty(FormPoly::monomial(b[0]), ex));
  }
  // Order independence of the spectrum.
  auto basis = dim_Mtilde(10, 0, 2).basis;
  auto s1 = extremal_form_auto(basis, ex, 16).spectrum;
  std::reverse(basis.begin(), basis.end());
  CHECK(extremal_form_auto(basis, ex, 16).spectrum == s1);
}

TEST_CASE("auxiliary forms") {
  ScopedField f(2);
  Expander ex(16);
  AuxiliaryResult a1 = auxiliary_form(1, 1, 0, 2, ex);
  CHECK(a1.n0 == 1); // span of e-bold
  AuxiliaryResult a = auxiliary_form(20, 1, 1, 2, ex);
  CHECK(a.V == 77);
  CHECK(a.U == 38);
  CHECK(a.within_mu_nu);
  CHECK(a.n0 <= 20);
  CHECK(a.n0 == 17); // regression value; the target U is not reached
  ThetaPoly L;
  SeriesTA s = ex.expand(a.form, &L);
  CHECK(s.valuation() == a.n0);
  CHECK_THROWS_AS(auxiliary_form(0, 1, 0, 2, ex), std::domain_error);
}

TEST_CASE("echelon") {
  ScopedField f(3);
  const ThetaPoly th = ThetaPoly::theta(), one(Fe::one());
  std::vector<RowA> rows = {{one, th, ThetaPoly()}, {th, th * th, ThetaPoly()}, {ThetaPoly(), one, th}};
  Echelon E = echelonize(rows);
  CHECK(E.rank() == 2);
  CHECK(E.dependent.size() == 1);
}
