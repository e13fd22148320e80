#include <CLI11.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "qm/asymptotics.hpp"
#include "qm/domain.hpp"
#include "qm/eichler.hpp"
#include "qm/fixtures.hpp"
#include "qm/indefinite.hpp"
#include "qm/quantum_set.hpp"
#include "qm/verify.hpp"
#include "spec_io.hpp"

using namespace qm;
using io::json;

namespace {

struct RunConfig {
  std::string spec_path;
  std::string subcommand;
  std::vector<std::string> points;
  std::vector<std::string> taus;
  std::vector<std::string> shift_z;
  int order = 3;
  std::string precision = "extended";
  std::string out;
  std::string csv;
  unsigned seed = 0;
};

class Report {
 public:
  Report(const RunConfig& cfg, const std::string& spec_label, const FamilySpec& spec) {
    doc_["tool"] = "qmcli";
    doc_["version"] = "0.1.0";
    doc_["subcommand"] = cfg.subcommand;
    doc_["timestamp"] = io::utc_timestamp();
    doc_["precision"] = cfg.precision;
    doc_["seed"] = cfg.seed;
    doc_["spec_source"] = spec_label;
    doc_["spec"] = io::spec_to_json(spec);
    doc_["checks"] = json::array();
  }

  void check(const std::string& name, bool pass, json detail = json::object()) {
    json c;
    c["name"] = name;
    c["status"] = pass ? "pass" : "fail";
    for (auto& [k, v] : detail.items()) c[k] = v;
    doc_["checks"].push_back(std::move(c));
    ok_ = ok_ && pass;
  }
  json& data() { return doc_; }
  void summary(const std::string& line) { lines_.push_back(line); }
  bool ok() const { return ok_; }

  int emit(const RunConfig& cfg) {
    doc_["summary"] = lines_;
    doc_["status"] = ok_ ? "pass" : "fail";
    const std::string text = doc_.dump(2) + "\n";
    if (cfg.out.empty() || cfg.out == "-") {
      std::cout << text;
    } else {
      std::ofstream f(cfg.out);
      if (!f) {
        std::cerr << "cannot write " << cfg.out << "\n";
        return 2;
      }
      f << text;
      for (const auto& l : lines_) std::cout << l << "\n";
      std::cout << "status: " << (ok_ ? "pass" : "fail") << "\n";
    }
    return ok_ ? 0 : 1;
  }

 private:
  json doc_;
  std::vector<std::string> lines_;
  bool ok_ = true;
};

Precision precision_of(const RunConfig& cfg) {
  return cfg.precision == "standard" ? Precision::standard : Precision::extended;
}

std::vector<QPoint> points_or(const RunConfig& cfg, std::vector<QPoint> fallback) {
  if (cfg.points.empty()) return fallback;
  std::vector<QPoint> out;
  for (const auto& p : cfg.points) out.push_back(parse_point(p));
  return out;
}

// "p,q" pairs choosing (a1, a2) = A0^-1 z / s
std::vector<std::array<i64, 2>> shift_z_or_default(const RunConfig& cfg) {
  if (cfg.shift_z.empty()) return {{1, 0}, {0, 1}, {2, -3}};
  std::vector<std::array<i64, 2>> out;
  for (const auto& text : cfg.shift_z) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("shift z needs the form p,q: " + text);
    out.push_back({std::stoll(text.substr(0, comma)), std::stoll(text.substr(comma + 1))});
  }
  return out;
}

std::vector<cplx<double>> taus_or(const RunConfig& cfg, std::vector<cplx<double>> fallback) {
  if (cfg.taus.empty()) return fallback;
  std::vector<cplx<double>> out;
  for (const auto& t : cfg.taus) out.push_back(io::parse_tau(t));
  return out;
}

std::vector<QPoint> default_points() {
  return {QPoint::make(0, 1), QPoint::make(1, 2), QPoint::make(1, 3), QPoint::make(2, 5)};
}
std::vector<cplx<double>> default_taus() { return {{0, 1}, {0, 2}, {1.0 / 3, 0.5}}; }

std::string set_string(const std::set<i64>& g) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (i64 x : g) {
    os << (first ? "" : ", ") << x;
    first = false;
  }
  os << "}";
  return os.str();
}

json series_json(const AsymptoticSeries& s) {
  json j;
  j["point"] = s.point.str();
  j["side"] = s.side == Side::F ? "F" : "E";
  j["order"] = s.order;
  j["growing_term"] = io::cjson(s.growing_term);
  j["coeffs"] = json::array();
  for (const auto& c : s.coeffs) j["coeffs"].push_back(io::cjson(c));
  return j;
}

// ---- subcommands ----

void run_validate(const FamilySpec& spec, Report& rep) {
  const auto bad = validate_family(spec);
  json v = json::array();
  for (const auto& b : bad) v.push_back({{"condition", b.condition}, {"detail", b.detail}});
  rep.data()["violations"] = v;
  rep.check("family valid", bad.empty(), {{"violations", bad.size()}});
  if (bad.empty()) {
    const auto d = derived_sets(spec);
    rep.data()["derived"] = {{"J", d.J.size()}, {"J1", d.J1.size()}, {"J2", d.J2.size()}};
    rep.summary("valid family, |J| = " + std::to_string(d.J.size()));
  } else {
    for (const auto& b : bad) rep.summary("violation: " + b.condition + " (" + b.detail + ")");
  }
}

void run_quantum_set(const RunConfig& cfg, const FamilySpec& spec, Report& rep) {
  const auto g = g_set(spec);
  const bool cond = congruence_condition(spec);
  const auto ex = determine_exponent(spec);
  json e;
  e["n"] = ex.n ? json(*ex.n) : json(nullptr);
  e["floor"] = ex.floor;
  e["higher_power_failure"] = ex.higher_power_failure;
  e["points_tested"] = ex.points_tested;
  e["note"] = ex.note;
  rep.data()["D"] = spec.form.D();
  rep.data()["G"] = std::vector<i64>(g.begin(), g.end());
  rep.data()["congruence_condition"] = cond;
  rep.data()["exponent"] = e;
  const bool all = ex.n && quantum_set_is_all(spec, ex);
  rep.data()["all_of_Q"] = all;
  rep.summary("G = " + set_string(g));
  rep.summary(all ? "quantum set: all of Q" : "quantum set: Q1 u Q2 u Q3 (proper subset of Q)");
  rep.check("exponent determined", ex.n.has_value(), {{"n", e["n"]}});
  if (!cfg.points.empty()) {
    json pts = json::array();
    for (const auto& p : points_or(cfg, {})) {
      const auto m = membership(spec, p, ex);
      pts.push_back({{"point", p.str()},
                     {"in_Q1", m.in_q1},
                     {"in_Q2", m.in_q2},
                     {"in_Q3", m.in_q3},
                     {"member", m.member()},
                     {"main_term", io::cjson(m.main_term)}});
    }
    rep.data()["membership"] = pts;
  }
}

void run_expand(const RunConfig& cfg, const FamilySpec& spec, Report& rep) {
  json rows = json::array();
  std::ostringstream csv;
  csv << "point,side,m,re,im\n";
  json out = json::array();
  char buf[160];
  for (const auto& p : points_or(cfg, default_points())) {
    try {
      const auto f = expand_F(spec, p, cfg.order);
      const auto e = expand_E(spec, p, cfg.order);
      for (const auto* s : {&f, &e}) {
        out.push_back(series_json(*s));
        for (int m = 0; m <= s->order; ++m) {
          std::snprintf(buf, sizeof buf, "%s,%s,%d,%.17g,%.17g\n", p.str().c_str(), s->side == Side::F ? "F" : "E", m,
                        s->coeffs[m].real(), s->coeffs[m].imag());
          csv << buf;
        }
      }
      rep.check("expansion at " + p.str(), true);
    } catch (const NonMemberError& err) {
      rep.check("expansion at " + p.str(), false,
                {{"error", err.what()}, {"growing_term", io::cjson(err.growing_term())}});
    }
  }
  rep.data()["series"] = out;
  if (!cfg.csv.empty()) {
    std::ofstream f(cfg.csv);
    f << csv.str();
    rep.data()["csv"] = cfg.csv;
  } else {
    rep.data()["csv_rows"] = csv.str();
  }
}

json agreement_json(const AgreementReport& ar) {
  json s = json::array();
  for (const auto& x : ar.series)
    s.push_back({{"point", x.point.str()},
                 {"side", x.side == Side::F ? "F" : "E"},
                 {"t", x.t},
                 {"residual", x.residual},
                 {"slope", x.fit.slope},
                 {"local_slopes", x.local},
                 {"pass", x.pass}});
  return s;
}

void run_verify(const RunConfig& cfg, const FamilySpec& spec, Report& rep) {
  const auto ar = verify_agreement(spec, points_or(cfg, default_points()), cfg.order, precision_of(cfg));
  rep.data()["agreement"] = agreement_json(ar);
  rep.data()["min_slope"] = ar.min_slope;
  for (const auto& x : ar.series) {
    rep.check(std::string(x.side == Side::F ? "F" : "E") + " slope at " + x.point.str(), x.pass,
              {{"slope", x.fit.slope}});
    char buf[128];
    std::snprintf(buf, sizeof buf, "%s %s slope %.3f", x.point.str().c_str(), x.side == Side::F ? "F" : "E",
                  x.fit.slope);
    rep.summary(buf);
  }
}

void run_eichler(const RunConfig& cfg, const FamilySpec& spec, Report& rep) {
  const auto cs = theta_char_sets(spec);
  auto cj = [](const std::vector<CharEntry>& v) {
    json a = json::array();
    for (const auto& e : v) a.push_back({{"residue", e.residue}, {"weight", to_string(e.weight)}, {"source", e.source}});
    return a;
  };
  rep.data()["char_sets"] = {{"modA", cs.modA}, {"modB", cs.modB}, {"A", cj(cs.A)}, {"B", cj(cs.B)},
                             {"constant_A", cs.constant_A}, {"constant_B", cs.constant_B}};
  json rows = json::array();
  for (const auto& tau : taus_or(cfg, default_taus())) {
    const auto series = E_m2_series(spec, tau);
    const auto quad = quadrature_E(spec, tau);
    const auto dec = E_star_decomposition(spec, tau);
    const auto shim = shimura_form_E(spec, tau);
    const auto scaled = E_m2_series(spec, tau * double(spec.s));
    const double rq = std::abs(series - quad), rd = std::abs(dec.total() - series), rs = std::abs(shim - scaled);
    rows.push_back({{"tau", io::tau_string(tau)},
                    {"series", io::cjson(series)},
                    {"quadrature", io::cjson(quad)},
                    {"E_star", io::cjson(dec.E_star)},
                    {"H1", io::cjson(dec.H1)},
                    {"H2", io::cjson(dec.H2)},
                    {"shimura_form", io::cjson(shim)},
                    {"residual_quadrature", rq},
                    {"residual_decomposition", rd},
                    {"residual_shimura", rs}});
    rep.check("series vs quadrature at " + io::tau_string(tau), rq < 1e-6, {{"residual", rq}});
    rep.check("E* + H1 + H2 at " + io::tau_string(tau), rd < 1e-9, {{"residual", rd}});
    rep.check("residue-set form at " + io::tau_string(tau), rs < 1e-6, {{"residual", rs}});
  }
  rep.data()["representations"] = rows;
  json d2 = json::array();
  std::set<std::array<i64, 2>> seen;
  for (const auto& e : cs.A) {
    if (!seen.insert(e.residue).second) continue;
    const auto r = depth_two_transform_residual(spec, {0, 1}, e.residue);
    d2.push_back({{"component", e.residue}, {"residual", r.residual}, {"residual_plus_sign", r.residual_plus_sign}});
    rep.check("depth-two law for (" + std::to_string(e.residue[0]) + "," + std::to_string(e.residue[1]) + ")",
              r.residual < 1e-5, {{"residual", r.residual}, {"residual_plus_sign", r.residual_plus_sign}});
  }
  rep.data()["depth_two"] = d2;
}

void run_indefinite(const RunConfig& cfg, const FamilySpec& spec, Report& rep) {
  derived_sets(spec);
  json all = json::array();
  const auto taus = taus_or(cfg, {{0, 1}, {0, 2}});
  for (const auto& w : spec.jstar) {
    const auto is = make_indefinite_spec(spec.form, spec.s, w.alpha);
    const auto cone = verify_cone_conditions(is);
    const std::string tag = "(" + to_string(w.alpha.alpha1()) + "," + to_string(w.alpha.alpha2()) + ")";
    json conds = json::array();
    for (const auto& c : cone.conditions)
      conds.push_back({{"index", c.index}, {"condition", c.name}, {"pass", c.pass}, {"values", c.detail}});
    json entry;
    entry["alpha"] = {to_string(w.alpha.alpha1()), to_string(w.alpha.alpha2())};
    entry["shift"] = {to_string(is.a[0]), to_string(is.a[1]), to_string(is.a[2]), to_string(is.a[3])};
    entry["signature"] = cone.signature;
    entry["cone_conditions"] = conds;
    rep.check("cone conditions " + tag, cone.all_pass() && shift_admissible(is));
    json fac = json::array();
    for (const auto& z : shift_z_or_default(cfg)) {
      const auto zs = make_indefinite_spec(spec.form, spec.s, w.alpha, z);
      const std::string ztag = "z=(" + std::to_string(z[0]) + "," + std::to_string(z[1]) + ")";
      for (const auto& tau : taus) {
        const auto fc = factorization_check(zs, tau);
        fac.push_back({{"z", z},
                       {"shift", {to_string(zs.a[0]), to_string(zs.a[1])}},
                       {"tau", io::tau_string(tau)},
                       {"theta_minus", io::cjson(fc.lhs)},
                       {"E_alpha", io::cjson(fc.E_alpha)},
                       {"theta_A0", io::cjson(fc.theta0)},
                       {"residual", fc.residual},
                       {"P0_residual", fc.p0_residual}});
        rep.check("factorization " + tag + " " + ztag + " at " + io::tau_string(tau),
                  shift_admissible(zs) && fc.residual < 1e-6 && fc.p0_residual < 1e-6, {{"residual", fc.residual}});
      }
    }
    entry["factorization"] = fac;
    const auto cc = completion_identity_check(is, 100, cfg.seed);
    entry["completion"] = {{"points", cc.points}, {"max_residual", cc.max_residual},
                           {"max_scale_residual", cc.max_scale_residual}};
    rep.check("completion identity " + tag, cc.max_residual < 1e-12 && cc.max_scale_residual < 1e-12,
              {{"max_residual", cc.max_residual}});
    try {
      const auto th = theta_completed(is, {0, 1}, 1e-10);
      entry["theta_completed_i"] = {{"value", io::cjson(th.value)}, {"radius", th.radius}, {"terms", th.terms}};
    } catch (const std::exception& err) {
      entry["theta_completed_i"] = {{"error", err.what()}};
    }
    all.push_back(entry);
  }
  rep.data()["indefinite"] = all;
}

void run_example(const RunConfig& cfg, const FamilySpec& spec, Report& rep) {
  run_validate(spec, rep);
  if (!rep.ok()) return;
  run_quantum_set(cfg, spec, rep);
  const auto cs = theta_char_sets(spec);
  rep.check("residue sets constant", cs.constant_A && cs.constant_B);
  RunConfig sub = cfg;
  sub.points.clear();
  run_expand(sub, spec, rep);
  run_verify(sub, spec, rep);
  const auto tau = cplx<double>(0, 1);
  const auto series = E_m2_series(spec, tau);
  const auto quad = quadrature_E(spec, tau);
  const auto dec = E_star_decomposition(spec, tau);
  rep.data()["representation_at_i"] = {{"series", io::cjson(series)},
                                       {"quadrature", io::cjson(quad)},
                                       {"decomposition", io::cjson(dec.total())}};
  rep.check("representations agree at i", std::abs(series - quad) < 1e-6 && std::abs(dec.total() - series) < 1e-9,
            {{"residual_quadrature", std::abs(series - quad)}, {"residual_decomposition", std::abs(dec.total() - series)}});
  run_indefinite(sub, spec, rep);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"partial theta, Eichler integral and indefinite theta toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--spec", cfg.spec_path, "family spec JSON (default: the built-in running example)")
      ->check(CLI::ExistingFile);
  app.add_option("--point", cfg.points, "rational point h/k (repeatable)");
  app.add_option("--order", cfg.order, "expansion order M")->check(CLI::Range(0, 24));
  app.add_option("--tau", cfg.taus, "upper half plane point x+yi (repeatable)");
  app.add_option("--precision", cfg.precision, "standard or extended")
      ->check(CLI::IsMember({"standard", "extended"}));
  app.add_option("--shift-z", cfg.shift_z, "integer pair p,q picking the free shift (a1,a2) = A0^-1 (p,q) / s (repeatable)");
  app.add_option("--out", cfg.out, "report path (default stdout)");
  app.add_option("--csv", cfg.csv, "coefficient table path for expand");
  app.add_option("--seed", cfg.seed, "seed for sampled points");
  app.fallthrough();

  const std::vector<std::pair<std::string, std::string>> subs = {
      {"validate", "check family constraints"},
      {"quantum-set", "G, the exponent n and quantum set membership"},
      {"expand", "asymptotic coefficients of F and E at rational points"},
      {"verify-theorem", "log-log slope test of the agreement of F and E"},
      {"eichler", "three representations of E and the depth-two law"},
      {"indefinite", "cone conditions, factorization and completion"},
      {"example", "full pipeline on one spec"}};
  for (const auto& [name, help] : subs) app.add_subcommand(name, help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();

  try {
    FamilySpec spec = cfg.spec_path.empty() ? running_example() : io::load_spec(cfg.spec_path);
    Report rep(cfg, cfg.spec_path.empty() ? "builtin:running" : cfg.spec_path, spec);
    const auto& s = cfg.subcommand;
    if (s == "validate") {
      run_validate(spec, rep);
    } else {
      if (s != "example") {
        const auto bad = validate_family(spec);
        if (!bad.empty()) {
          run_validate(spec, rep);
          return rep.emit(cfg);
        }
      }
      if (s == "quantum-set") run_quantum_set(cfg, spec, rep);
      if (s == "expand") run_expand(cfg, spec, rep);
      if (s == "verify-theorem") run_verify(cfg, spec, rep);
      if (s == "eichler") run_eichler(cfg, spec, rep);
      if (s == "indefinite") run_indefinite(cfg, spec, rep);
      if (s == "example") run_example(cfg, spec, rep);
    }
    return rep.emit(cfg);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
}
