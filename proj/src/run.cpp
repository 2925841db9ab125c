/*
   Copyright 2026 The dalg Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "dalg/run.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "dalg/darboux.hpp"
#include "dalg/image_solver.hpp"
#include "dalg/isotropy.hpp"

namespace dalg {

using nlohmann::json;

namespace {

constexpr const char* kBoundedEvidence = "bounded evidence, not proof";

struct CommandName {
  Command command;
  const char* name;
};

constexpr CommandName kCommands[] = {
    {Command::Apply, "apply"},         {Command::Image, "image"},       {Command::ScanUnits, "scan-units"},
    {Command::LemmaCert, "lemma-cert"}, {Command::Darboux, "darboux"}, {Command::Isotropy, "isotropy"},
};

json rational_json(const Rational& q) { return to_string(q); }

bool is_family(const RunConfig& c) { return !c.control.has_value(); }

int effective_box(const RunConfig& c) {
  if (c.box) return *c.box;
  return (c.command == Command::Isotropy && c.full_affine) ? 1 : 2;
}

// a * x_var + b with constant a, b.
bool is_affine_in(const Polynomial& t, std::size_t var) {
  for (const auto& [m, c] : t.terms()) {
    if (m.is_one()) continue;
    if (m.degree() != 1 || m[var] != 1) return false;
  }
  return true;
}

json membership_json(const MembershipReport& r) {
  json j{{"degree_bound", r.degree_bound}, {"rows", r.rows}, {"cols", r.cols}, {"rank", r.rank}};
  if (r.witness) {
    j["witness"] = {{"r", to_string(r.witness->r())}, {"target", to_string(r.witness->target())}};
    if (r.witness->r().arity() == 2)
      j["witness"]["r_xy"] = to_string(permute_variables(r.witness->r(), kXYToFamily), xy_names());
  } else
    j["witness"] = nullptr;
  return j;
}

json affine_map_json(const AffineMap& map) {
  json linear = json::array();
  for (std::size_t i = 0; i < map.linear.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < map.linear.cols(); ++k) row.push_back(rational_json(map.linear(i, k)));
    linear.push_back(row);
  }
  json offset = json::array();
  for (const auto& v : map.offset) offset.push_back(rational_json(v));
  json images = json::array();
  const Endomorphism rho = map.to_endomorphism();
  for (const auto& g : rho.images()) images.push_back(to_string(g));
  return {{"linear", linear}, {"offset", offset}, {"images", images},
          {"translation_in_last_variable", map.is_translation_in_last()}};
}

void set_verdict(json& report, const std::string& verdict, const std::string& expectation, bool met) {
  report["verdict"] = verdict;
  report["expectation"] = expectation;
  report["expectation_met"] = met;
}

void run_apply(const RunConfig& c, const Derivation& d, json& report) {
  Polynomial p = parse_polynomial(c.poly, d.arity());
  report["result"] = {{"input", to_string(p)}, {"output", to_string(d.apply(p))}};
  set_verdict(report, "computed", "none", true);
}

void run_image(const RunConfig& c, const Derivation& d, json& report) {
  const std::size_t n = d.arity();
  if (c.target) {
    Polynomial t = parse_polynomial(*c.target, n);
    MembershipReport r = image_membership(d, t, c.degree);
    report["result"] = membership_json(r);
    report["evidence"] = kBoundedEvidence;
    const bool claim = is_affine_in(t, n - 1) && !t.is_zero();
    const std::string verdict = r.witness ? "preimage found up to degree " + std::to_string(c.degree)
                                          : "no preimage up to degree " + std::to_string(c.degree);
    if (claim)
      set_verdict(report, verdict, "nonzero a*x_n + b is not in the image", !r.witness.has_value());
    else
      set_verdict(report, verdict, "none (target is not of the form a*x_n + b)", true);
    return;
  }
  const std::size_t var = static_cast<std::size_t>(c.variable.value_or(c.n) - 1);
  AffineScanReport r = affine_target_scan(d, var, c.degree);
  json basis = json::array();
  for (const auto& s : r.basis)
    basis.push_back({{"r", to_string(s.r)}, {"a", rational_json(s.a)}, {"b", rational_json(s.b)}});
  report["result"] = {{"variable", var + 1},       {"degree_bound", r.degree_bound},
                      {"rows", r.rows},            {"cols", r.cols},
                      {"rank", r.rank},            {"kernel_dimension", r.basis.size()},
                      {"basis", basis},            {"trivial_only", r.trivial_only}};
  report["evidence"] = kBoundedEvidence;
  const std::string verdict = r.trivial_only ? "trivial-only up to degree " + std::to_string(c.degree)
                                             : "nontrivial solution up to degree " + std::to_string(c.degree);
  if (var + 1 == n)
    set_verdict(report, verdict, "d(r) = a*x_n + b forces r constant and a = b = 0", r.trivial_only);
  else
    set_verdict(report, verdict, "none (target variable is not x_n)", true);
}

void run_scan_units(const RunConfig& c, const Derivation& d, json& report) {
  MembershipReport r = unit_in_image(d, c.degree);
  report["result"] = membership_json(r);
  report["evidence"] = kBoundedEvidence;
  set_verdict(report,
              r.witness ? "unit in image: d(r) = 1 at degree <= " + std::to_string(c.degree)
                        : "no unit in image up to degree " + std::to_string(c.degree),
              "the image contains no unit", !r.witness.has_value());
}

void run_lemma_cert(const RunConfig& c, json& report) {
  Certificate cert = contradiction_certificate(c.m, c.alpha);
  json result{{"certificate", to_json(cert)}};
  bool met = cert.complete();
  if (c.j0) {
    LemmaConfig cfg{c.m, c.alpha, *c.j0};
    CoefficientSequence seq = reconstruct_sequence(cfg);
    ScheduleReport schedule = check_degree_schedule(seq, cfg);
    json violations = json::array();
    for (const auto& v : schedule.violations) {
      std::ostringstream actual;
      actual << v.actual;
      violations.push_back({{"index", v.expected.index}, {"j", v.expected.j}, {"s", v.expected.s},
                            {"expected", v.expected.degree}, {"exact", v.expected.exact},
                            {"actual", actual.str()}, {"reason", v.reason}});
    }
    LeadingData ledger = leading_ledger(cfg);
    json A = json::object(), B = json::object(), companion = json::object();
    bool signs = true;
    const auto names = seq.ring.names();
    for (const auto& [j, v] : ledger.A) {
      A[std::to_string(j)] = rational_json(v);
      signs = signs && v > 0;
    }
    for (const auto& [j, v] : ledger.B) {
      B[std::to_string(j)] = rational_json(v);
      signs = signs && v < 0;
    }
    for (const auto& [j, v] : ledger.A_companion) companion[std::to_string(j)] = to_string(v, names);
    json entries = json::array();
    for (int i = cfg.l(); i >= 0; --i) entries.push_back(to_string(seq.f(i), names));
    result["j0"] = *c.j0;
    result["l"] = cfg.l();
    result["sequence"] = entries;  // f_l first
    result["schedule"] = {{"checked", schedule.checked}, {"violations", violations}};
    result["ledger"] = {{"A", A}, {"B", B}, {"A_companion", companion}, {"signs_ok", signs}};
    met = met && schedule.ok() && signs;
  }
  report["result"] = result;
  set_verdict(report, cert.complete() ? "certificate complete" : "certificate incomplete",
              "every case of the contradiction is resolved", met);
}

void run_darboux(const RunConfig& c, const Derivation& d, json& report) {
  ScanConfig sc;
  sc.degree_p = c.degree_p;
  sc.cofactor_degree = c.cofactor_degree;
  sc.box_lo = -effective_box(c);
  sc.box_hi = effective_box(c);
  sc.top_degree_filter = c.top_degree_filter;
  StableIdealReport r = stable_ideal_scan(d, sc);
  json witnesses = json::array();
  for (const auto& w : r.witnesses) witnesses.push_back({{"p", to_string(w.p())}, {"q", to_string(w.q())}});
  report["result"] = {{"degree_p", r.degree_p},
                      {"cofactor_degree", r.cofactor_degree},
                      {"cofactor_bound", r.cofactor_bound},
                      {"box", {r.box_lo, r.box_hi}},
                      {"top_degree_filter", r.top_degree_filter},
                      {"cofactors_enumerated", r.cofactors_enumerated},
                      {"cofactors_pruned", r.cofactors_pruned},
                      {"cofactors_solved", r.cofactors_solved},
                      {"witnesses", witnesses},
                      {"notes", r.notes},
                      {"disclaimer", StableIdealReport::kDisclaimer}};
  report["evidence"] = kBoundedEvidence;
  const bool found = !r.witnesses.empty();
  const std::string verdict = found ? std::to_string(r.witnesses.size()) + " Darboux witness(es) found"
                                    : "no Darboux polynomial found within bounds";
  if (is_family(c))
    set_verdict(report, verdict, "no d-stable principal ideal", !found);
  else
    set_verdict(report, verdict, "control is not simple: a witness exists", found);
}

void run_isotropy(const RunConfig& c, const Derivation& d, json& report) {
  const int b = effective_box(c);
  std::vector<AffineMap> maps = c.full_affine ? triangular_affine_scan(d, -b, b) : diagonal_affine_scan(d, -b, b);
  json found = json::array();
  std::size_t non_translations = 0;
  for (const auto& map : maps) {
    found.push_back(affine_map_json(map));
    if (!map.is_translation_in_last()) ++non_translations;
  }
  report["result"] = {{"mode", c.full_affine ? "lower-triangular affine" : "diagonal affine"},
                      {"box", {-b, b}},
                      {"commuting_maps", found},
                      {"count", maps.size()},
                      {"non_translations", non_translations}};
  report["evidence"] = kBoundedEvidence;
  const std::string verdict = non_translations == 0 ? "only translations in the last variable commute"
                                                    : std::to_string(non_translations) +
                                                          " commuting map(s) beyond translations";
  if (is_family(c))
    set_verdict(report, verdict, "isotropy consists of translations x_n -> x_n + c", non_translations == 0);
  else
    set_verdict(report, verdict, "control has isotropy beyond translations", non_translations > 0);
}

}  // namespace

std::string to_string(Command c) {
  for (const auto& entry : kCommands)
    if (entry.command == c) return entry.name;
  return "unknown";
}

Command command_from_string(const std::string& name) {
  for (const auto& entry : kCommands)
    if (name == entry.name) return entry.command;
  throw std::invalid_argument("unknown command '" + name + "'");
}

void RunConfig::validate() const {
  auto fail = [](const std::string& msg) { throw std::invalid_argument(msg); };
  if (n < 2) fail("--n must be at least 2");
  if (m < 1) fail("--m must be at least 1");
  if (alpha < 1) fail("--alpha must be at least 1");
  if (command == Command::LemmaCert) {
    if (m < 2) fail("lemma-cert needs --m >= 2 (m = 1 has the explicit preimage x^{alpha+1}/(alpha+1) + y)");
    if (j0 && *j0 < 1) fail("--j0 must be at least 1");
  }
  if (variable && (*variable < 1 || *variable > n)) fail("--var must lie in 1..n");
  if (box && *box < 0) fail("--box must be non-negative");
  if (command == Command::Apply && poly.empty()) fail("apply needs --poly");
  if (control) {
    if (*control != "ddx" && *control != "euler") fail("unknown control '" + *control + "' (use ddx or euler)");
    if (command != Command::Darboux && command != Command::Isotropy && command != Command::Apply)
      fail("--control is only meaningful for apply, darboux and isotropy");
  }
  if (command == Command::Darboux && box && *box == 0 && cofactor_degree && *cofactor_degree > 0)
    fail("--box 0 only admits the zero cofactor; lower --cofactor-deg or widen the box");
}

Derivation derivation_for(const RunConfig& c) {
  if (c.control) {
    const auto n = static_cast<std::size_t>(c.n);
    return *c.control == "ddx" ? partial_derivation(n, 0) : euler_derivation(n);
  }
  return jordan_derivation({c.n, c.m, c.alpha});
}

RunOutcome run(const RunConfig& config) {
  RunOutcome out;
  json& report = out.report;
  report["schema"] = kSchemaVersion;
  report["tool"] = "dalg";
  report["version"] = kToolVersion;
  report["command"] = to_string(config.command);
  report["config"] = to_json(config);
  report["warnings"] = json::array();
  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    report["error"] = e.what();
    out.exit_code = 2;
    return out;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    if (config.command == Command::LemmaCert) {
      run_lemma_cert(config, report);
    } else {
      if (is_family(config) && config.m == 1) {
        report["warnings"].push_back("m=1 outside theorem hypothesis");
      }
      if (config.command == Command::Isotropy && is_family(config) && config.n == 2)
        report["warnings"].push_back("n=2: the translation description is stated for n >= 3");
      Derivation d = derivation_for(config);
      report["derivation"] = to_json(d);
      switch (config.command) {
        case Command::Apply: run_apply(config, d, report); break;
        case Command::Image: run_image(config, d, report); break;
        case Command::ScanUnits: run_scan_units(config, d, report); break;
        case Command::Darboux: run_darboux(config, d, report); break;
        case Command::Isotropy: run_isotropy(config, d, report); break;
        case Command::LemmaCert: break;
      }
    }
  } catch (const std::invalid_argument& e) {
    report["error"] = e.what();
    out.exit_code = 2;
    return out;
  }
  const auto stop = std::chrono::steady_clock::now();
  report["timing_ms"] = std::chrono::duration<double, std::milli>(stop - start).count();
  out.exit_code = report.at("expectation_met").get<bool>() ? 0 : 1;
  return out;
}

RunOutcome grid(const std::vector<RunConfig>& points) {
  RunOutcome out;
  json& report = out.report;
  report["schema"] = kSchemaVersion;
  report["tool"] = "dalg";
  report["version"] = kToolVersion;
  report["command"] = "grid";
  json subs = json::array();
  bool all_met = true;
  int worst = 0;
  double total_ms = 0;
  for (const auto& p : points) {
    RunOutcome sub = run(p);
    worst = std::max(worst, sub.exit_code);
    all_met = all_met && sub.exit_code == 0;
    if (sub.report.contains("timing_ms")) total_ms += sub.report["timing_ms"].get<double>();
    subs.push_back(std::move(sub.report));
  }
  report["points"] = subs;
  report["expectation_met"] = all_met;
  report["verdict"] = all_met ? "all points match expectation" : "expectation violated at some point";
  report["timing_ms"] = total_ms;
  out.exit_code = worst;
  return out;
}

json to_json(const RunConfig& c) {
  json j{{"command", to_string(c.command)},
         {"n", c.n},
         {"m", c.m},
         {"alpha", c.alpha},
         {"degree", c.degree},
         {"degree_p", c.degree_p},
         {"top_degree_filter", c.top_degree_filter},
         {"full_affine", c.full_affine},
         {"seed", c.seed},
         {"output", c.output == OutputFormat::Json ? "json" : "text"}};
  j["j0"] = c.j0 ? json(*c.j0) : json(nullptr);
  j["target"] = c.target ? json(*c.target) : json(nullptr);
  j["variable"] = c.variable ? json(*c.variable) : json(nullptr);
  j["poly"] = c.poly;
  j["cofactor_degree"] = c.cofactor_degree ? json(*c.cofactor_degree) : json(nullptr);
  j["box"] = c.box ? json(*c.box) : json(nullptr);
  j["control"] = c.control ? json(*c.control) : json(nullptr);
  return j;
}

RunConfig config_from_json(const json& j) {
  RunConfig c;
  c.command = command_from_string(j.at("command").get<std::string>());
  c.n = j.at("n").get<int>();
  c.m = j.at("m").get<int>();
  c.alpha = j.at("alpha").get<int>();
  c.degree = j.value("degree", 8U);
  c.degree_p = j.value("degree_p", 6U);
  c.top_degree_filter = j.value("top_degree_filter", true);
  c.full_affine = j.value("full_affine", false);
  c.seed = j.value("seed", std::uint64_t{0});
  c.output = j.value("output", std::string("text")) == "json" ? OutputFormat::Json : OutputFormat::Text;
  c.poly = j.value("poly", std::string());
  auto opt_int = [&](const char* key) -> std::optional<int> {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<int>();
  };
  auto opt_str = [&](const char* key) -> std::optional<std::string> {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<std::string>();
  };
  c.j0 = opt_int("j0");
  c.variable = opt_int("variable");
  c.cofactor_degree = opt_int("cofactor_degree");
  c.box = opt_int("box");
  c.target = opt_str("target");
  c.control = opt_str("control");
  return c;
}

json to_json(const Derivation& d) {
  json coeffs = json::array();
  for (const auto& c : d.coefficients()) coeffs.push_back(to_string(c));
  return {{"arity", d.arity()}, {"coefficients", coeffs}};
}

Derivation derivation_from_json(const json& j) {
  const auto arity = j.at("arity").get<std::size_t>();
  std::vector<Polynomial> c;
  for (const auto& s : j.at("coefficients")) c.push_back(parse_polynomial(s.get<std::string>(), arity));
  if (c.size() != arity) throw std::invalid_argument("derivation JSON: coefficient count differs from arity");
  return Derivation(std::move(c));
}

json to_json(const Certificate& cert) {
  json cases = json::array();
  for (const auto& c : cert.cases) {
    json e{{"case", c.case_number},
           {"hypothesis", c.hypothesis},
           {"degree_equation", c.degree_equation},
           {"resolution", to_string(c.resolution)},
           {"description", c.description}};
    e["j0"] = c.j0 ? json(*c.j0) : json(nullptr);
    if (c.A) e["A"] = rational_json(*c.A);
    if (c.B) e["B"] = rational_json(*c.B);
    if (c.forced_by_A) e["forced_by_A"] = rational_json(*c.forced_by_A);
    if (c.forced_by_B) e["forced_by_B"] = rational_json(*c.forced_by_B);
    if (c.symbolic_crosscheck) e["symbolic_crosscheck"] = *c.symbolic_crosscheck;
    if (!c.companion_exclusion.empty()) e["companion_exclusion"] = c.companion_exclusion;
    cases.push_back(std::move(e));
  }
  return {{"m", cert.m},
          {"alpha", cert.alpha},
          {"j0_candidates", {1, cert.j0_max}},
          {"j0_one_exclusion", cert.j0_one_exclusion},
          {"cases", cases},
          {"complete", cert.complete()}};
}

std::string render_text(const json& report) {
  std::ostringstream os;
  if (report.value("command", "") == "grid") {
    std::size_t k = 0;
    for (const auto& p : report.at("points")) os << "[" << k++ << "] " << render_text(p);
    os << "aggregate: " << report.value("verdict", "") << "\n";
    return os.str();
  }
  const json& cfg = report.at("config");
  os << report.value("command", "") << " n=" << cfg.value("n", 0) << " m=" << cfg.value("m", 0)
     << " alpha=" << cfg.value("alpha", 0);
  if (!cfg.at("control").is_null()) os << " control=" << cfg.at("control").get<std::string>();
  os << "\n";
  if (report.contains("error")) {
    os << "  error: " << report.at("error").get<std::string>() << "\n";
    return os.str();
  }
  for (const auto& w : report.at("warnings")) os << "  warning: " << w.get<std::string>() << "\n";
  os << "  verdict: " << report.value("verdict", "") << "\n";
  os << "  expectation: " << report.value("expectation", "")
     << (report.value("expectation_met", false) ? " [met]" : " [VIOLATED]") << "\n";
  if (report.contains("evidence")) os << "  (" << report.at("evidence").get<std::string>() << ")\n";
  const json& r = report.at("result");
  if (r.contains("witness") && !r.at("witness").is_null())
  {
    const json& w = r.at("witness");
    os << "  witness: r = " << w.at("r").get<std::string>();
    if (w.contains("r_xy")) os << "  (in x, y: " << w.at("r_xy").get<std::string>() << ")";
    os << "\n";
  }
  if (r.contains("output")) os << "  d(p) = " << r.at("output").get<std::string>() << "\n";
  if (r.contains("witnesses"))
    for (const auto& w : r.at("witnesses"))
      os << "  witness: p = " << w.at("p").get<std::string>() << ", q = " << w.at("q").get<std::string>() << "\n";
  if (r.contains("commuting_maps"))
    for (const auto& map : r.at("commuting_maps")) {
      os << "  map:";
      for (const auto& g : map.at("images")) os << " " << g.get<std::string>() << ";";
      os << "\n";
    }
  if (r.contains("certificate"))
    for (const auto& c : r.at("certificate").at("cases"))
      os << "  case " << c.at("case").get<int>() << " (" << c.at("hypothesis").get<std::string>()
         << "): " << c.at("resolution").get<std::string>() << " - " << c.at("description").get<std::string>()
         << "\n";
  return os.str();
}

}  // namespace dalg
