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

#ifndef DALG_RUN_HPP
#define DALG_RUN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dalg/derivation.hpp"
#include "dalg/lemma_engine.hpp"

namespace dalg {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";

enum class Command { Apply, Image, ScanUnits, LemmaCert, Darboux, Isotropy };
enum class OutputFormat { Text, Json };

std::string to_string(Command c);
/// Throws std::invalid_argument for unknown names.
Command command_from_string(const std::string& name);

struct RunConfig {
  Command command = Command::ScanUnits;
  int n = 2;
  int m = 2;
  int alpha = 1;
  std::optional<int> j0;                // lemma-cert
  unsigned degree = 8;                  // image, scan-units
  std::optional<std::string> target;    // image: polynomial text; absent = affine scan
  std::optional<int> variable;          // image: 1-based variable of the affine target (default n)
  std::string poly;                     // apply
  unsigned degree_p = 6;                // darboux
  std::optional<int> cofactor_degree;   // darboux
  std::optional<int> box;               // darboux (default 2), isotropy (2, or 1 with full_affine)
  bool top_degree_filter = true;        // darboux
  bool full_affine = false;             // isotropy
  std::optional<std::string> control;   // darboux, isotropy: "ddx" or "euler"
  std::uint64_t seed = 0;
  OutputFormat output = OutputFormat::Text;

  /// Throws std::invalid_argument with an actionable message.
  void validate() const;
};

/// Exit codes: 0 = expectation holds, 1 = counterexample, 2 = usage error.
struct RunOutcome {
  nlohmann::json report;
  int exit_code = 0;
};

RunOutcome run(const RunConfig& config);

/// One sub-report per point in order; the aggregate verdict is the conjunction.
RunOutcome grid(const std::vector<RunConfig>& points);

/// The derivation a config operates on (family member or named control).
Derivation derivation_for(const RunConfig& config);

nlohmann::json to_json(const RunConfig& config);
RunConfig config_from_json(const nlohmann::json& j);

/// {"arity": n, "coefficients": [canonical polynomial strings]}.
nlohmann::json to_json(const Derivation& d);
Derivation derivation_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Certificate& cert);

/// Human-readable rendering of a report.
std::string render_text(const nlohmann::json& report);

}  // namespace dalg

#endif  // DALG_RUN_HPP
