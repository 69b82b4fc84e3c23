// dlab: command-line front end for the Drinfeld modular forms library.

#include "dlab/formlit.hpp"
#include "dlab/report.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

using namespace dlab;

namespace {

struct Common {
  int q = 2;
  std::string format = "csv";
  std::string out;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--q", c.q, "field size q = p^e <= 16")->check(CLI::Range(2, 16));
  sub->add_option("--format", c.format, "csv or structured")->check(CLI::IsMember({"csv", "structured"}));
  sub->add_option("--out", c.out, "output file (default stdout)");
}

int emit(const Report& r, const Common& c) {
  const std::string text = c.format == "csv" ? to_csv(r) : to_structured(r);
  if (c.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(c.out, std::ios::binary);
    if (!f) {
      std::cerr << "dlab: cannot write " << c.out << "\n";
      return 2;
    }
    f << text;
  }
  for (const auto& name : r.failures) std::cerr << "FAILED: " << name << "\n";
  return r.ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with Drinfeld modular forms"};
  app.require_subcommand(1);
  Common c;
  long N = 40, wmax = 20, lmax = 3, P = 40, w = 0, m = 0, mu = -1, nu = 1;
  int l = 0, Dt = 2;
  std::vector<std::string> ids;
  std::string form;
  CertifyOptions copt;

  auto* expand = app.add_subcommand("expand", "u-expansions of g, Delta, h, E, hb, eb");
  add_common(expand, c);
  expand->add_option("--N", N, "truncation")->check(CLI::PositiveNumber);

  auto* battery = app.add_subcommand("battery", "exact identity battery for generators and deformations");
  add_common(battery, c);
  battery->add_option("--N", N, "truncation")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "numeric functional-equation grid");
  add_common(verify, c);
  verify->add_option("--precision", P, "target precision P")->check(CLI::PositiveNumber);
  verify->add_option("--identity", ids, "restrict to these identities");

  auto* scan = app.add_subcommand("scan", "extremal vanishing orders against l(w-l)");
  add_common(scan, c);
  scan->add_option("--wmax", wmax, "largest weight")->check(CLI::PositiveNumber);
  scan->add_option("--lmax", lmax, "largest depth")->check(CLI::PositiveNumber);
  scan->add_option("--N", N, "starting truncation")->check(CLI::PositiveNumber);

  auto* cert = app.add_subcommand("certify", "multiplicity certificate for a form in E, g, h");
  add_common(cert, c);
  cert->add_option("form", form, "form literal, e.g. \"E^2 + E*g^2 + g*h\"")->required();
  cert->add_option("--mu-override", copt.mu_override, "use this mu instead of 12(q^2-1)(w-l)")
      ->check(CLI::PositiveNumber);
  cert->add_flag("--unsafe-small-mu", copt.unsafe_small_mu, "allow mu - 1 < 6(q^2-1)");
  cert->add_option("--Dt", Dt, "t-degree budget of the auxiliary search")->check(CLI::NonNegativeNumber);

  auto* spaces = app.add_subcommand("spaces", "dimensions and bases");
  add_common(spaces, c);
  spaces->add_option("--w", w, "weight")->required();
  spaces->add_option("--m", m, "type");
  spaces->add_option("--l", l, "depth bound for the quasi-modular space");
  spaces->add_option("--mu", mu, "also report M-dagger at weights (mu, nu)");
  spaces->add_option("--nu", nu, "second weight for M-dagger");

  CLI11_PARSE(app, argc, argv);

  try {
    configure_field(c.q);
    if (*expand) return emit(report_expand(N), c);
    if (*battery) return emit(report_battery(N), c);
    if (*verify) {
      std::vector<Identity> sel;
      for (const auto& s : ids) sel.push_back(identity_from_name(s));
      HarnessOptions opt;
      opt.P = P;
      return emit(report_verify(opt, sel.empty() ? all_identities() : sel), c);
    }
    if (*scan) return emit(report_scan(wmax, lmax, N), c);
    if (*cert) {
      copt.dt_budget = Dt;
      return emit(report_certify(form, copt), c);
    }
    if (*spaces) return emit(report_spaces(w, m, l, mu, nu), c);
  } catch (const ParseError& e) {
    std::cerr << "dlab: parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "dlab: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
