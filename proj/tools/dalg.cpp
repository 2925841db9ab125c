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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dalg/run.hpp"

namespace {

using dalg::Command;
using dalg::RunConfig;

constexpr int kUsageError = 2;

// "2,3,4" or "2..4" or a mix.
std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      if (auto dots = item.find(".."); dots != std::string::npos) {
        int lo = std::stoi(item.substr(0, dots));
        int hi = std::stoi(item.substr(dots + 2));
        if (hi < lo) throw CLI::ValidationError(flag, "empty range '" + item + "'");
        for (int v = lo; v <= hi; ++v) out.push_back(v);
      } else {
        std::size_t used = 0;
        out.push_back(std::stoi(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      }
    } catch (const std::logic_error&) {
      throw CLI::ValidationError(flag, "expected an integer list like 2,3 or 2..4, got '" + text + "'");
    }
  }
  if (out.empty()) throw CLI::ValidationError(flag, "empty list");
  return out;
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

struct Options {
  std::string m = "2", alpha = "1", n = "2", j0, control;
  unsigned degree = 8, degree_p = 6;
  std::string target, poly, out;
  int var = 0, cofactor_degree = -1, box = -1;
  bool full_affine = false, no_filter = false, json = false;
  std::uint64_t seed = 0;
  std::string report;
};

void add_family(CLI::App* sub, Options& o, bool with_n = true) {
  sub->add_option("--m", o.m, "exponent m (list or range allowed: 2,3 or 2..4)")->capture_default_str();
  sub->add_option("--alpha", o.alpha, "exponent alpha (list or range allowed)")->capture_default_str();
  if (with_n) sub->add_option("--n", o.n, "number of variables (list or range allowed)")->capture_default_str();
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_flag("--json", o.json, "print the JSON report instead of text");
  sub->add_option("--out", o.out, "write the JSON report to this file (default dir: $DALG_REPORT_DIR)");
  sub->add_option("--seed", o.seed, "seed recorded in the report")->capture_default_str();
}

std::vector<RunConfig> expand(Command command, const Options& o) {
  RunConfig base;
  base.command = command;
  base.degree = o.degree;
  base.degree_p = o.degree_p;
  base.full_affine = o.full_affine;
  base.top_degree_filter = !o.no_filter;
  base.seed = o.seed;
  base.output = o.json ? dalg::OutputFormat::Json : dalg::OutputFormat::Text;
  base.poly = o.poly;
  if (!o.target.empty()) base.target = o.target;
  if (o.var != 0) base.variable = o.var;
  if (o.cofactor_degree >= 0) base.cofactor_degree = o.cofactor_degree;
  if (o.box >= 0) base.box = o.box;

  const auto ms = parse_int_list(o.m, "--m");
  const auto alphas = parse_int_list(o.alpha, "--alpha");
  const auto ns = parse_int_list(o.n, "--n");
  const auto j0s = o.j0.empty() ? std::vector<int>{0} : parse_int_list(o.j0, "--j0");
  std::vector<std::string> controls = o.control.empty() ? std::vector<std::string>{""} : split(o.control);

  std::vector<RunConfig> points;
  for (const auto& control : controls)
    for (int n : ns)
      for (int m : ms)
        for (int alpha : alphas)
          for (int j0 : j0s) {
            RunConfig c = base;
            c.n = n;
            c.m = m;
            c.alpha = alpha;
            if (j0 != 0) c.j0 = j0;
            if (!control.empty()) c.control = control;
            points.push_back(c);
          }
  return points;
}

std::string default_report_name(const nlohmann::json& report) {
  std::string name = "dalg-" + report.value("command", std::string("report"));
  if (report.contains("config")) {
    const auto& c = report["config"];
    name += "-n" + std::to_string(c.value("n", 0)) + "-m" + std::to_string(c.value("m", 0)) + "-a" +
            std::to_string(c.value("alpha", 0));
  }
  return name + ".json";
}

int emit(const dalg::RunOutcome& outcome, const Options& o) {
  const auto& report = outcome.report;
  if (o.json)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << dalg::render_text(report);

  std::filesystem::path path;
  if (!o.out.empty()) {
    path = o.out;
  } else if (const char* dir = std::getenv("DALG_REPORT_DIR"); dir && *dir) {
    path = std::filesystem::path(dir) / default_report_name(report);
  }
  if (!path.empty()) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream file(path);
    if (!file) {
      std::cerr << "error: cannot write report to " << path << "\n";
      return kUsageError;
    }
    file << report.dump(2) << "\n";
  }
  if (outcome.exit_code == kUsageError && report.contains("error"))
    std::cerr << "error: " << report["error"].get<std::string>() << "\n";
  return outcome.exit_code;
}

int rerun(const Options& o) {
  std::ifstream in(o.report);
  if (!in) {
    std::cerr << "error: cannot open report " << o.report << "\n";
    return kUsageError;
  }
  nlohmann::json report;
  try {
    report = nlohmann::json::parse(in);
    if (report.value("command", std::string()) == "grid") {
      std::vector<RunConfig> points;
      for (const auto& p : report.at("points")) points.push_back(dalg::config_from_json(p.at("config")));
      return emit(dalg::grid(points), o);
    }
    return emit(dalg::run(dalg::config_from_json(report.at("config"))), o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << o.report << " is not a dalg report: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dalg: exact checks for a family of derivations of polynomial rings"};
  app.set_version_flag("--version", std::string(dalg::kToolVersion));
  app.require_subcommand(1);
  Options o;

  auto* apply = app.add_subcommand("apply", "apply d_n to a polynomial");
  add_family(apply, o);
  apply->add_option("--poly", o.poly, "polynomial in x1..xn, e.g. 'x1^2*x3 - 3/2'")->required();
  apply->add_option("--control", o.control, "use a control derivation instead: ddx or euler");
  add_common(apply, o);

  auto* image = app.add_subcommand("image", "bounded search for r with d(r) = target");
  add_family(image, o);
  image->add_option("--degree", o.degree, "degree bound for r")->capture_default_str();
  image->add_option("--target", o.target, "target polynomial; omit to scan d(r) = a*x_var + b");
  image->add_option("--var", o.var, "1-based variable of the affine scan (default n)");
  add_common(image, o);

  auto* units = app.add_subcommand("scan-units", "bounded search for r with d(r) = 1");
  add_family(units, o);
  units->add_option("--degree", o.degree, "degree bound for r")->capture_default_str();
  add_common(units, o);

  auto* lemma = app.add_subcommand("lemma-cert", "contradiction certificate for the two-variable lemma");
  add_family(lemma, o, false);
  lemma->add_option("--j0", o.j0, "also check the degree schedule and leading ledger at this j0 (list allowed)");
  add_common(lemma, o);

  auto* darboux = app.add_subcommand("darboux", "bounded search for Darboux polynomials d(p) = q*p");
  add_family(darboux, o);
  darboux->add_option("--deg-p", o.degree_p, "degree bound for p")->capture_default_str();
  darboux->add_option("--cofactor-deg", o.cofactor_degree, "degree of cofactors to enumerate (default max deg - 1)");
  darboux->add_option("--box", o.box, "cofactor coefficients range over -B..B (default 2)");
  darboux->add_option("--control", o.control, "control derivations: ddx, euler or ddx,euler");
  darboux->add_flag("--no-filter", o.no_filter, "disable the top-degree pruning");
  add_common(darboux, o);

  auto* isotropy = app.add_subcommand("isotropy", "affine automorphisms commuting with d");
  add_family(isotropy, o);
  isotropy->add_option("--box", o.box, "integer entries range over -B..B (default 2, or 1 with --full-affine)");
  isotropy->add_flag("--full-affine", o.full_affine, "scan lower-triangular affine maps instead of diagonal ones");
  isotropy->add_option("--control", o.control, "control derivations: ddx, euler or ddx,euler");
  add_common(isotropy, o);

  auto* again = app.add_subcommand("rerun", "re-run from the config echo of a saved JSON report");
  again->add_option("report", o.report, "report file")->required()->check(CLI::ExistingFile);
  again->add_flag("--json", o.json, "print the JSON report instead of text");
  again->add_option("--out", o.out, "write the JSON report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsageError;
  }

  if (again->parsed()) return rerun(o);

  Command command{};
  try {
    command = dalg::command_from_string(app.get_subcommands().front()->get_name());
    auto points = expand(command, o);
    if (points.size() == 1) return emit(dalg::run(points.front()), o);
    return emit(dalg::grid(points), o);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
}
