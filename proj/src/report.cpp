#include "dlab/report.hpp"

#include "dlab/formlit.hpp"

#include <cstdio>
#include <sstream>

namespace dlab {

using nlohmann::ordered_json;

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char c : s) {
    if (c == '"') r += '"';
    r += c;
  }
  return r + "\"";
}

std::string fmt_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

Report base(const std::string& cmd) {
  Report r;
  r.command = cmd;
  const auto& f = field();
  r.config["q"] = f.q();
  r.config["p"] = f.p();
  r.config["e"] = f.e();
  return r;
}

std::string monomial(const Exps& e) { return print_form(FormPoly::monomial(e)); }

ordered_json basis_json(const std::vector<Exps>& b) {
  ordered_json a = ordered_json::array();
  for (const Exps& e : b) a.push_back(monomial(e));
  return a;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

template <class C> void add_series(Report& r, const std::string& name, const Series<C>& s, long N) {
  for (long n = 0; n < N; ++n) {
    const C c = s.coeff(n);
    if (!c.is_zero()) r.rows.push_back({name, std::to_string(n), c.to_string()});
  }
}

} // namespace

std::string to_csv(const Report& r) {
  std::ostringstream os;
  for (size_t i = 0; i < r.columns.size(); ++i) os << (i ? "," : "") << csv_field(r.columns[i]);
  os << "\n";
  for (const auto& row : r.rows) {
    for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
    os << "\n";
  }
  return os.str();
}

std::string to_structured(const Report& r) {
  ordered_json j;
  j["format"] = kReportFormat;
  j["command"] = r.command;
  j["config"] = r.config;
  j["ok"] = r.ok;
  j["failures"] = r.failures;
  j["columns"] = r.columns;
  ordered_json rows = ordered_json::array();
  for (const auto& row : r.rows) {
    ordered_json o = ordered_json::object();
    for (size_t i = 0; i < row.size() && i < r.columns.size(); ++i) o[r.columns[i]] = row[i];
    rows.push_back(std::move(o));
  }
  j["rows"] = std::move(rows);
  for (const auto& [k, v] : r.extra.items()) j[k] = v;
  return j.dump(2) + "\n";
}

Report report_expand(long N) {
  Report r = base("expand");
  r.config["N"] = N;
  r.columns = {"series", "n", "coefficient"};
  DeformedSet d = build_deformations(N);
  add_series(r, "g", d.gen.g, N);
  add_series(r, "Delta", d.gen.delta, N);
  add_series(r, "h", d.gen.h, N);
  add_series(r, "E", d.gen.E, N);
  add_series(r, "hb", d.hb, N);
  add_series(r, "eb", d.eb, N);
  return r;
}

Report report_battery(long N) {
  Report r = base("battery");
  r.config["N"] = N;
  r.columns = {"check", "pass", "checked_below", "detail"};
  DeformedSet d = build_deformations(N);
  auto add = [&](const std::vector<IdentityCheck>& cs) {
    for (const auto& c : cs) {
      r.rows.push_back({c.name, bool_text(c.pass), std::to_string(c.checked_below), c.detail});
      if (!c.pass || c.checked_below < N) {
        r.ok = false;
        r.failures.push_back(c.name);
      }
    }
  };
  add(generator_battery(d));
  add(deformation_battery(d));
  return r;
}

Report report_verify(const HarnessOptions& opt, const std::vector<Identity>& ids) {
  Report r = base("verify");
  r.config["precision"] = opt.P;
  r.config["max_attempts"] = opt.max_attempts;
  ordered_json names = ordered_json::array();
  for (Identity id : ids) names.push_back(identity_name(id));
  r.config["identities"] = names;
  r.columns = {"identity", "gamma", "z", "t0", "status", "residual_exponent", "exact_zero", "working_precision", "attempts", "reason"};
  std::vector<CheckResult> all = run_grid(opt, ids);
  if (ids.size() == all_identities().size()) {
    auto aux = run_auxiliary_checks(opt);
    all.insert(all.end(), aux.begin(), aux.end());
  }
  for (const auto& c : all) {
    r.rows.push_back({c.identity, c.gamma, c.z, c.t0, status_name(c.status), c.residual_exact_zero ? std::string("-inf") : fmt_double(c.residual_exponent),
                      bool_text(c.residual_exact_zero), std::to_string(c.working_precision), std::to_string(c.attempts),
                      c.reason});
    if (c.status != CheckStatus::Pass) {
      r.ok = false;
      r.failures.push_back(c.identity + " " + c.gamma + " " + c.z + " " + c.t0);
    }
  }
  return r;
}

Report report_scan(long wmax, long lmax, long N) {
  Report r = base("scan");
  r.config["wmax"] = wmax;
  r.config["lmax"] = lmax;
  r.config["N"] = N;
  r.columns = {"q", "w", "m", "l", "dim", "max_nu", "conj_bound", "thm_bound", "ratio"};
  Expander ex(N);
  auto rows = conjecture_scan(wmax, lmax, N, ex);
  std::istringstream csv(scan_csv(rows));
  std::string line;
  std::getline(csv, line);
  ordered_json findings = ordered_json::array();
  for (const auto& row : rows) {
    std::getline(csv, line);
    std::vector<std::string> cells;
    std::stringstream ls(line);
    for (std::string c; std::getline(ls, c, ',');) cells.push_back(c);
    r.rows.push_back(cells);
    if (row.exceeds_conjecture)
      findings.push_back({{"w", row.w}, {"m", row.m}, {"l", row.l}, {"max_nu", row.max_nu}, {"conj_bound", row.bounds.conj_bound}});
    if (!row.within_theorem) {
      r.ok = false;
      r.failures.push_back("theorem bound w=" + std::to_string(row.w) + " m=" + std::to_string(row.m) + " l=" + std::to_string(row.l));
    }
  }
  r.extra["conjecture_exceeded"] = findings;
  return r;
}

ordered_json to_json(const BoundReport& b) {
  return ordered_json{{"q", b.q},
                      {"w", b.w},
                      {"l", b.l},
                      {"conj_bound", b.conj_bound},
                      {"thm_factor", b.thm_factor},
                      {"log_floor", b.log_floor},
                      {"log_exact", b.log_exact},
                      {"thm_bound_low", b.thm_bound_low},
                      {"thm_bound_high", b.thm_bound_high},
                      {"thm_text", b.thm_text},
                      {"earlier_factor", b.earlier_factor},
                      {"earlier_log_floor", b.earlier_log_floor}};
}

ordered_json to_json(const CertificateReport& c) {
  ordered_json aux{{"form", print_form(c.aux.form)},
                   {"type", c.aux_type},
                   {"n0", c.aux.n0},
                   {"unknowns", c.aux.unknowns},
                   {"N", c.aux.N},
                   {"dt_budget", c.aux.dt_budget},
                   {"deg_t_lead", c.aux.deg_t_lead},
                   {"deg_t_coeff", c.aux.deg_t_coeff},
                   {"V", c.aux.V},
                   {"U", c.aux.U},
                   {"upper", c.aux.upper},
                   {"meets_U", c.aux.meets_U},
                   {"within_upper", c.aux.within_upper},
                   {"within_mu_nu", c.aux.within_mu_nu}};
  return ordered_json{{"form", c.form},
                      {"w", c.w},
                      {"l", c.l},
                      {"m", c.m},
                      {"mu", c.mu},
                      {"mu_default", c.mu_default},
                      {"mu_overridden", c.mu_overridden},
                      {"nu", c.nu},
                      {"k", c.k},
                      {"lemma_hypotheses_met", c.lemma_hypotheses_met},
                      {"auxiliary", aux},
                      {"nu_fk_lower", c.nu_fk_lower},
                      {"fk_lead_nonvanishing", c.fk_lead_nonvanishing},
                      {"w_fk", c.w_fk},
                      {"w_rho", c.w_rho},
                      {"rho_zero", c.rho_zero},
                      {"nu_rho", c.nu_rho},
                      {"nu_rho_expansion_ok", c.nu_rho_expansion_ok},
                      {"rho_bound", c.rho_bound},
                      {"branch", c.branch},
                      {"certified_bound", c.certified_bound},
                      {"measured_nu_f", c.measured_nu_f},
                      {"measured_within_bound", c.measured_within_bound},
                      {"consistent", c.consistent},
                      {"chain", c.chain},
                      {"bounds", to_json(c.bounds)}};
}

Report report_certify(const std::string& form, const CertifyOptions& opt) {
  Report r = base("certify");
  r.config["form"] = form;
  r.config["mu_override"] = opt.mu_override;
  r.config["unsafe_small_mu"] = opt.unsafe_small_mu;
  r.config["Dt"] = opt.dt_budget;
  r.columns = {"key", "value"};
  Expander ex(16);
  CertificateReport c = certify(parse_form(form), opt, ex);
  const ordered_json j = to_json(c);
  for (const auto& [k, v] : j.items()) {
    if (k == "chain" || k == "auxiliary" || k == "bounds") continue;
    r.rows.push_back({k, v.is_string() ? v.get<std::string>() : v.dump()});
  }
  r.rows.push_back({"auxiliary_n0", std::to_string(c.aux.n0)});
  for (size_t i = 0; i < c.chain.size(); ++i) r.rows.push_back({"chain_" + std::to_string(i), c.chain[i]});
  r.extra["certificate"] = j;
  if (!c.consistent) {
    r.ok = false;
    r.failures.push_back("certificate chain (branch " + c.branch + ")");
  }
  return r;
}

Report report_spaces(long w, long m, int l, long mu, long nu) {
  Report r = base("spaces");
  r.config["w"] = w;
  r.config["m"] = m;
  r.config["l"] = l;
  r.columns = {"space", "dim", "basis"};
  auto join = [](const std::vector<Exps>& b) {
    std::string s;
    for (const Exps& e : b) s += (s.empty() ? "" : "; ") + monomial(e);
    return s;
  };
  SpaceBasis M = dim_M(w, m);
  r.rows.push_back({"M", std::to_string(M.dim), join(M.basis)});
  SpaceBasis Mt = dim_Mtilde(w, m, l);
  r.rows.push_back({"Mtilde", std::to_string(Mt.dim), join(Mt.basis)});
  ordered_json ex{{"M", basis_json(M.basis)}, {"Mtilde", basis_json(Mt.basis)}};
  if (dim_sandwich_applies(w, m)) {
    const bool h = dim_sandwich_holds(w, M.dim);
    ex["sandwich_holds"] = h;
    if (!h) {
      r.ok = false;
      r.failures.push_back("dimension sandwich");
    }
  }
  if (mu >= 0) {
    r.config["mu"] = mu;
    r.config["nu"] = nu;
    RankMdag R = rank_Mdag(mu, nu, m);
    r.rows.push_back({"Mdagger", std::to_string(R.basis.dim), join(R.basis.basis)});
    r.rows.push_back({"V", std::to_string(R.V), ""});
    ex["V"] = R.V;
    ex["Mdagger"] = basis_json(R.basis.basis);
    ex["V_bound_applies"] = R.bound_applies;
    if (R.bound_applies) {
      ex["V_bound_holds"] = R.bound_holds;
      if (!R.bound_holds) {
        r.ok = false;
        r.failures.push_back("rank bound on V");
      }
    }
  }
  r.extra["spaces"] = ex;
  return r;
}

} // namespace dlab
