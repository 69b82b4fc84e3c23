#include "dlab/modcheck.hpp"

#include "dlab/carlitz.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace dlab {

namespace {

const std::vector<std::pair<Identity, std::string>>& identity_table() {
  static const std::vector<std::pair<Identity, std::string>> t = {
      {Identity::VECTORIAL, "VECTORIAL"}, {Identity::COCYCLE, "COCYCLE"},
      {Identity::S2MOD, "S2MOD"},         {Identity::TWISTS2, "TWISTS2"},
      {Identity::JMOD, "JMOD"},           {Identity::DETPSI, "DETPSI"},
      {Identity::DET_THETA, "DET_THETA"}, {Identity::ETRANS, "ETRANS"},
      {Identity::HMOD, "HMOD"},           {Identity::EMOD, "EMOD"},
      {Identity::HI_MOD, "HI_MOD"},       {Identity::LTRANS, "LTRANS"}};
  return t;
}

using Pair = std::pair<InfLaurent, InfLaurent>;
using Body = std::function<std::vector<Pair>(PointCache&)>;

InfLaurent A_(const ThetaPoly& a) { return InfLaurent::from_A(a); }

long start_precision(long P) {
  const int q = field().q();
  return (q - 1) * P + 2 * q * q + 8;
}

// Evaluates the pairs at increasing precision until the verdict is
// certain. A nonzero residual is certified, so it fails at once.
CheckResult run_attempts(CheckResult r, const Body& body, const HarnessOptions& opt) {
  const int q = field().q();
  const double need = -opt.P / 2.0;
  long W = start_precision(opt.P);
  for (int a = 0; a < opt.max_attempts; ++a, W *= 2) {
    r.attempts = a + 1;
    r.working_precision = W;
    PrecisionScope scope(W);
    PointCache cache;
    try {
      std::vector<Pair> pairs = body(cache);
      double worst = -1e300;
      bool worst_zero = true;
      bool underflow = false;
      for (const auto& [lhs, rhs] : pairs) {
        if (lhs.is_zero() && rhs.is_zero()) {
          // An exactly zero side (c = 0) leaves only an absolute test.
          if (!lhs.exact() && !rhs.exact()) {
            underflow = true;
            break;
          }
          const double e = -static_cast<double>(std::min(lhs.prec(), rhs.prec())) / (q - 1);
          if (e > worst) {
            worst = e;
            worst_zero = true;
          }
          continue;
        }
        const long scale = std::min(lhs.is_zero() ? lhs.prec() : lhs.val(),
                                    rhs.is_zero() ? rhs.prec() : rhs.val());
        const InfLaurent d = lhs - rhs;
        const long v = d.is_zero() ? d.prec() : d.val();
        const double e = -static_cast<double>(v - scale) / (q - 1);
        if (e > worst) {
          worst = e;
          worst_zero = d.is_zero();
        }
      }
      if (underflow) {
        r.reason = "both sides zero to precision";
        continue;
      }
      r.residual_exponent = worst;
      r.residual_exact_zero = worst_zero;
      if (worst <= need) {
        r.status = CheckStatus::Pass;
        r.reason.clear();
        return r;
      }
      if (!worst_zero) {
        r.status = CheckStatus::Fail;
        r.reason = "nonzero residual above threshold";
        return r;
      }
      r.reason = "precision exhausted before threshold";
    } catch (const PrecisionError& e) {
      r.reason = std::string("evaluation failed: ") + e.what();
    }
  }
  r.status = CheckStatus::Skipped;
  return r;
}

std::string point_key(const std::string& g, const std::string& z) { return g + "|" + z; }

InfLaurent bar(const ThetaPoly& a, const InfLaurent& t0) { return bar_eval(a, t0); }

// Unit element of F_q^* as a numeric value.
InfLaurent det_num(const GammaMat& g) { return InfLaurent(g.det()); }

} // namespace

const std::vector<Identity>& all_identities() {
  static const std::vector<Identity> v = [] {
    std::vector<Identity> r;
    for (const auto& e : identity_table()) r.push_back(e.first);
    return r;
  }();
  return v;
}

std::string identity_name(Identity id) {
  for (const auto& e : identity_table())
    if (e.first == id) return e.second;
  return "?";
}

Identity identity_from_name(const std::string& name) {
  for (const auto& e : identity_table())
    if (e.second == name) return e.first;
  throw std::invalid_argument("unknown identity '" + name + "'");
}

std::string status_name(CheckStatus s) {
  switch (s) {
  case CheckStatus::Pass: return "pass";
  case CheckStatus::Fail: return "FAIL";
  case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

const PointForms& PointCache::at(const std::string& key, const InfLaurent& z) {
  auto it = cache_.find(key);
  if (it != cache_.end()) return *it->second;
  auto p = std::make_unique<PointForms>(point_forms(z));
  return *cache_.emplace(key, std::move(p)).first->second;
}

InfLaurent J_factor(const GammaMat& g, const InfLaurent& z) { return A_(g.c) * z + A_(g.d); }

InfLaurent L_factor(const GammaMat& g, const InfLaurent& z) {
  return A_(g.c) * J_factor(g, z).inv();
}

InfLaurent Jbold_factor(const GammaMat& g, const PointForms& P, const InfLaurent& t0, int k) {
  return bar(g.c, t0) * s1_eval(P, t0, k) / s2_eval(P, t0, k) + bar(g.d, t0);
}

InfLaurent Lbold_factor(const GammaMat& g, const PointForms& P, const InfLaurent& t0) {
  const InfLaurent cb = bar(g.c, t0);
  if (cb.is_zero() && cb.exact()) return InfLaurent();
  return cb / ((InfLaurent::theta() - t0) * (cb * s1_eval(P, t0) + bar(g.d, t0) * s2_eval(P, t0)));
}

InfLaurent hbold_at(const PointForms& P, const InfLaurent& t0) {
  return pi_tilde() * P.h * s2_eval(P, t0) / sC_eval(t0);
}

InfLaurent ebold_at(const PointForms& P, const InfLaurent& t0) {
  const int q = field().q();
  const InfLaurent h1 = pi_tilde().pow(q) * P.h.pow(q) * s2_eval(P, t0, 1) /
                        ((t0 - InfLaurent::theta()) * sC_eval(t0));
  return h1 / P.delta;
}

InfLaurent h_i_at(int i, const PointForms& P, const InfLaurent& t0) {
  const InfLaurent hb = hbold_at(P, t0);
  InfLaurent r = hb.pow(i);
  if (i == 0) return P.h;
  if (i == 1) return r;
  return r * P.h.pow(i - 1).inv();
}

CheckResult check_identity(Identity id, const GammaMat& gamma, const GammaMat& delta,
                           const InfLaurent& z, const std::string& z_name,
                           const InfLaurent& t0, const std::string& t0_name,
                           const HarnessOptions& opt) {
  const int q = field().q();
  CheckResult r;
  r.identity = identity_name(id);
  r.gamma = gamma.name;
  r.z = z_name;
  r.t0 = t0_name;
  if (id == Identity::COCYCLE || id == Identity::LTRANS) r.gamma += " ; " + delta.name;
  if (id == Identity::DET_THETA) r.t0 = "theta";

  const InfLaurent th = InfLaurent::theta();
  Body body;
  switch (id) {
  case Identity::VECTORIAL:
    body = [&](PointCache& C) {
      const PointForms& P = C.at(point_key("", z_name), z);
      const PointForms& G = C.at(point_key(gamma.name, z_name), act(gamma, z));
      const InfLaurent Ji = J_factor(gamma, z).inv();
      const InfLaurent s1 = s1_eval(P, t0), s2 = s2_eval(P, t0);
      return std::vector<Pair>{
          {s1_eval(G, t0), Ji * (bar(gamma.a, t0) * s1 + bar(gamma.b, t0) * s2)},
          {s2_eval(G, t0), Ji * (bar(gamma.c, t0) * s1 + bar(gamma.d, t0) * s2)}};
    };
    break;
  case Identity::COCYCLE:
    body = [&](PointCache& C) {
      const GammaMat gd = gamma * delta;
      const InfLaurent dz = act(delta, z);
      const PointForms& P = C.at(point_key("", z_name), z);
      const PointForms& D = C.at(point_key(delta.name, z_name), dz);
      return std::vector<Pair>{
          {Jbold_factor(gd, P, t0), Jbold_factor(gamma, D, t0) * Jbold_factor(delta, P, t0)}};
    };
    break;
  case Identity::S2MOD:
    body = [&](PointCache& C) {
      const PointForms& P = C.at(point_key("", z_name), z);
      const PointForms& G = C.at(point_key(gamma.name, z_name), act(gamma, z));
      return std::vector<Pair>{
          {s2_eval(G, t0), J_factor(gamma, z).inv() * Jbold_factor(gamma, P, t0) * s2_eval(P, t0)}};
    };
    break;
  case Identity::TWISTS2:
    body = [&](PointCache& C) {
      const PointForms& P = C.at(point_key("", z_name), z);
      const PointForms& G = C.at(point_key(gamma.name, z_name), act(gamma, z));
      const InfLaurent J = J_factor(gamma, z), Jb = Jbold_factor(gamma, P, t0);
      const InfLaurent Lb = Lbold_factor(gamma, P, t0), sC = sC_eval(t0), pt = pi_tilde();
      std::vector<Pair> out;
      long qk = 1;
      for (int k = 1; k <= 2; ++k) {
        qk *= q;
        // g*_0 = 1, g*_1 = g
        const InfLaurent gs = (k == 1) ? InfLaurent(Fe::one()) : P.g;
        const InfLaurent hpow = P.h.pow(qk / q);
        const InfLaurent corr = (t0 - th) * gs * sC / (pt.pow(qk + 1) * hpow) * Lb;
        out.push_back({s2_eval(G, t0, k), J.pow(qk).inv() * Jb * (s2_eval(P, t0, k) + corr)});
      }
      return out;
    };
    break;
  case Identity::JMOD:
    body = [&](PointCache& C) {
      const PointForms& P = C.at(point_key("", z_name), z);
      const InfLaurent Jb = Jbold_factor(gamma, P, t0), Lb = Lbold_factor(gamma, P, t0);
      const InfLaurent corr = (t0 - th) * sC_eval(t0) /
                              (pi_tilde().pow(q + 1) * P.h * s2_eval(P, t0, 1)) * Lb;
      return std::vector<Pair>{{Jbold_factor(gamma, P, t0, 1), Jb * (InfLaurent(Fe::one()) + corr)}};
    };
    break;
  case Identity::DETPSI:
    // Evaluated at gamma(z) so every matrix contributes a distinct point.
    body = [&](PointCache& C) {
      const PointForms& G = C.at(point_key(gamma.name, z_name), act(gamma, z));
      const InfLaurent lhs = s1_eval(G, t0) * s2_eval(G, t0, 1) - s2_eval(G, t0) * s1_eval(G, t0, 1);
      return std::vector<Pair>{{lhs, sC_eval(t0) / (pi_tilde().pow(q + 1) * G.h)}};
    };
    break;
  case Identity::DET_THETA:
    body = [&](PointCache& C) {
      const InfLaurent gz = act(gamma, z);
      const PointForms& G = C.at(point_key(gamma.name, z_name), gz);
      const InfLaurent eta1 = s1_eval(G, th, 1), eta2 = s2_eval(G, th, 1);
      return std::vector<Pair>{{-gz * eta2 + eta1, -(pi_tilde().pow(q) * G.h).inv()}};
    };
    break;
  case Identity::ETRANS:
    body = [&](PointCache& C) {
      const PointForms& P = C.at(point_key("", z_name), z);
      const PointForms& G = C.at(point_key(gamma.name, z_name), act(gamma, z));
      const InfLaurent J = J_factor(gamma, z);
      const InfLaurent rhs =
          J * J * det_num(gamma).inv() * (P.E - L_factor(gamma, z) / pi_tilde());
      return std::vector<Pair>{{G.E, rhs}};
    };
    break;
  case Identity::HMOD:
    body = [&](PointCache& C) {
      const PointForms& P = C.at(point_key("", z_name), z);
      const PointForms& G = C.at(point_key(gamma.name, z_name), act(gamma, z));
      const InfLaurent f = J_factor(gamma, z).pow(q) * Jbold_factor(gamma, P, t0) * det_num(gamma).inv();
      return std::vector<Pair>{{hbold_at(G, t0), f * hbold_at(P, t0)}};
    };
    break;
  case Identity::EMOD:
    body = [&](PointCache& C) {
      const PointForms& P = C.at(point_key("", z_name), z);
      const PointForms& G = C.at(point_key(gamma.name, z_name), act(gamma, z));
      const InfLaurent f = J_factor(gamma, z) * Jbold_factor(gamma, P, t0) * det_num(gamma).inv();
      const InfLaurent rhs = f * (ebold_at(P, t0) - Lbold_factor(gamma, P, t0) / pi_tilde());
      return std::vector<Pair>{{ebold_at(G, t0), rhs}};
    };
    break;
  case Identity::HI_MOD:
    body = [&](PointCache& C) {
      const PointForms& P = C.at(point_key("", z_name), z);
      const PointForms& G = C.at(point_key(gamma.name, z_name), act(gamma, z));
      const InfLaurent J = J_factor(gamma, z), Jb = Jbold_factor(gamma, P, t0);
      const InfLaurent di = det_num(gamma).inv();
      std::vector<Pair> out;
      for (int i = 0; i <= q; ++i)
        out.push_back({h_i_at(i, G, t0), di * J.pow(q + 1 - i) * Jb.pow(i) * h_i_at(i, P, t0)});
      return out;
    };
    break;
  case Identity::LTRANS:
    // A = gamma, B = delta, C = AB.
    body = [&](PointCache& C) {
      const GammaMat ab = gamma * delta;
      const InfLaurent bz = act(delta, z);
      const PointForms& P = C.at(point_key("", z_name), z);
      const PointForms& B = C.at(point_key(delta.name, z_name), bz);
      const InfLaurent dinv = det_num(delta).inv();
      const InfLaurent JB = J_factor(delta, z), JbB = Jbold_factor(delta, P, t0);
      return std::vector<Pair>{
          {L_factor(gamma, bz), dinv * JB * JB * (L_factor(ab, z) - L_factor(delta, z))},
          {Lbold_factor(gamma, B, t0),
           dinv * JB * JbB * (Lbold_factor(ab, P, t0) - Lbold_factor(delta, P, t0))}};
    };
    break;
  }
  return run_attempts(r, body, opt);
}

std::vector<CheckResult> run_grid(const HarnessOptions& opt, const std::vector<Identity>& ids) {
  const auto gammas = sample_gammas();
  const auto zs = sample_points();
  const auto zn = sample_point_names();
  const auto ts = sample_t0();
  const auto tn = sample_t0_names();
  std::vector<CheckResult> out;
  for (Identity id : ids)
    for (size_t gi = 0; gi < gammas.size(); ++gi) {
      const GammaMat& delta = gammas[(gi + 1) % gammas.size()];
      for (size_t zi = 0; zi < zs.size(); ++zi) {
        if (id == Identity::DET_THETA) {
          out.push_back(check_identity(id, gammas[gi], delta, zs[zi], zn[zi], ts[0], "theta", opt));
          continue;
        }
        for (size_t ti = 0; ti < ts.size(); ++ti)
          out.push_back(check_identity(id, gammas[gi], delta, zs[zi], zn[zi], ts[ti], tn[ti], opt));
      }
    }
  return out;
}

std::vector<CheckResult> run_auxiliary_checks(const HarnessOptions& opt, const DeformedSet* deformed) {
  const int q = field().q();
  const auto zs = sample_points();
  const auto zn = sample_point_names();
  const auto ts = sample_t0();
  const auto tn = sample_t0_names();
  const auto gammas = sample_gammas();
  const InfLaurent th = InfLaurent::theta();
  std::vector<CheckResult> out;

  auto row = [](std::string id, std::string g, std::string z, std::string t) {
    CheckResult r;
    r.identity = std::move(id);
    r.gamma = std::move(g);
    r.z = std::move(z);
    r.t0 = std::move(t);
    return r;
  };
  // Offset from a pole: far enough below the pass threshold.
  auto eps = [&] { return InfLaurent::monomial(Fe::one(), (q - 1) * opt.P + 8); };

  for (size_t zi = 0; zi < zs.size(); ++zi) {
    const InfLaurent& z = zs[zi];
    out.push_back(run_attempts(row("S1_RESIDUE", "", zn[zi], "theta"), [&](PointCache& C) {
      const PointForms& P = C.at("z", z);
      const InfLaurent e = eps();
      return std::vector<Pair>{{e * s1_eval(P, th + e), -z}};
    }, opt));
    out.push_back(run_attempts(row("S2_RESIDUE", "", zn[zi], "theta"), [&](PointCache& C) {
      const PointForms& P = C.at("z", z);
      const InfLaurent e = eps();
      return std::vector<Pair>{{e * s2_eval(P, th + e), -InfLaurent(Fe::one())}};
    }, opt));
    for (const auto& g : gammas) {
      out.push_back(run_attempts(row("JBOLD_AT_THETA", g.name, zn[zi], "theta"), [&](PointCache& C) {
        const PointForms& P = C.at("z", z);
        return std::vector<Pair>{{Jbold_factor(g, P, th + eps()), J_factor(g, z)}};
      }, opt));
      if (g.c.is_zero()) continue;
      out.push_back(run_attempts(row("LBOLD_AT_THETA", g.name, zn[zi], "theta"), [&](PointCache& C) {
        const PointForms& P = C.at("z", z);
        return std::vector<Pair>{{Lbold_factor(g, P, th + eps()), L_factor(g, z)}};
      }, opt));
    }
  }
  out.push_back(run_attempts(row("SC_RESIDUE_0", "", "", "theta"), [&](PointCache&) {
    const InfLaurent e = eps();
    return std::vector<Pair>{{e * sC_product(th + e), -pi_tilde()}};
  }, opt));
  out.push_back(run_attempts(row("SC_RESIDUE_1", "", "", "theta^q"), [&](PointCache&) {
    const InfLaurent e = eps();
    return std::vector<Pair>{
        {e * sC_product(th.frob(1) + e), -pi_tilde().pow(q) / carlitz_d_num(1)}};
  }, opt));

  // Symbolic s_2 = h-bold s_C / (pi~ h) from the u-expansion of h-bold.
  DeformedSet local;
  if (!deformed) {
    local = build_deformations(64);
    deformed = &local;
  }
  HarnessOptions o30 = opt;
  o30.P = 30;
  for (size_t i = 0; i < zs.size(); ++i) {
    const InfLaurent& z = zs[i];
    const InfLaurent& t0 = ts[i % ts.size()];
    out.push_back(run_attempts(row("S2_SYMBOLIC", "", zn[i], tn[i % ts.size()]), [&](PointCache& C) {
      const PointForms& P = C.at("z", z);
      const InfLaurent hb = eval_u_series(deformed->hb, t0, P.u);
      return std::vector<Pair>{{hb * sC_eval(t0) / (pi_tilde() * P.h), s2_eval(P, t0)}};
    }, o30));
  }
  {
    // u^0 coefficient of h-bold / h is 1, so that of s_2 is s_C / pi~.
    CheckResult r = row("S2_U0_COEFF", "", "", "");
    const SeriesA& h = deformed->gen.h;
    SeriesTA ratio = deformed->hb * lift_t(h.inv());
    const bool ok = ratio.valuation() == 0 && ratio.coeff(0) == TA(Fe::one());
    r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    r.residual_exact_zero = ok;
    r.residual_exponent = ok ? -1e9 : 0;
    r.attempts = 1;
    if (!ok) r.reason = "u^0 coefficient differs from 1";
    out.push_back(r);
  }
  return out;
}

GammaMat nonvanishing_search(const InfLaurent& z0, const InfLaurent& t0) {
  std::vector<GammaMat> cand;
  const ThetaPoly one(Fe::one());
  std::vector<ThetaPoly> bs{ThetaPoly()};
  for (int d = 0; d <= 2; ++d)
    for (const auto& m : monics(d))
      for (Fe c : fq_elements())
        if (!c.is_zero()) bs.push_back(m * c);
  std::sort(bs.begin(), bs.end());
  for (const auto& b : bs) cand.push_back(GammaMat{b, -one, one, ThetaPoly(), "[[" + b.to_string() + ",-1],[1,0]]"});
  for (const auto& b : bs) cand.push_back(GammaMat{one, b, ThetaPoly(), one, "[[1," + b.to_string() + "],[0,1]]"});
  for (const auto& g : cand) {
    try {
      PointForms P = point_forms(act(g, z0));
      if (!s2_eval(P, t0).is_zero()) return g;
    } catch (const PrecisionError&) {
    }
  }
  throw std::runtime_error("nonvanishing_search: enumeration exhausted without a nonzero s_2");
}

DepthDecomposition decompose_depth(const FormPoly& f, Expander& ex) {
  DepthDecomposition d;
  d.grade = f.grade();
  std::map<std::pair<int, int>, FormPoly> parts;
  for (const auto& [e, c] : f.terms()) {
    Exps r = e;
    r[kE] = r[kEb] = 0;
    parts[{e[kE], e[kEb]}].add_term(r, c);
  }
  d.grades_ok = true;
  FormPoly sum;
  for (auto& [ij, p] : parts) {
    DepthComponent c;
    c.i = ij.first;
    c.j = ij.second;
    c.f = p;
    c.grade = p.grade();
    c.expected = Grade{d.grade.mu - 2 * c.i - c.j, d.grade.nu - c.j, reduce_type(d.grade.m - c.i - c.j), 0};
    d.grades_ok = d.grades_ok && c.grade == c.expected;
    Exps e{};
    e[kE] = c.i;
    e[kEb] = c.j;
    sum = sum + FormPoly::monomial(e) * p;
    d.parts.push_back(std::move(c));
  }
  d.N = ex.N();
  ThetaPoly L1, L2;
  SeriesTA a = ex.expand(f, &L1), b = ex.expand(sum, &L2);
  d.reassembly_ok = (a.scale(TA(L2)) - b.scale(TA(L1))).is_zero();
  return d;
}

} // namespace dlab
