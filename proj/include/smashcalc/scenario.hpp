#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "smashcalc/errors.hpp"
#include "smashcalc/frt.hpp"
#include "smashcalc/hopf.hpp"
#include "smashcalc/report.hpp"

namespace smashcalc {

inline constexpr const char* kScenarioSchema = "smashcalc.scenario/1";
inline constexpr const char* kFixtureSchema = "smashcalc.fixture/1";
inline constexpr const char* kReportSchema = "smashcalc.report/1";

enum ExitCode { kExitPass = 0, kExitFail = 1, kExitUsage = 2, kExitTheorem = 3 };
// Errors raised while loading a scenario are usage errors unless they come from a gate.
int exit_code_for(ErrorKind kind, bool while_loading);

// Reads a JSON file; SchemaError when missing or malformed.
json load_json_file(const std::string& path);

// {"generators": [{"name", "form_degree"}], "rules": [{"lhs", "rhs"}]}. Rule sides are expressions in the
// free algebra on the generators; lhs must be a single word.
std::shared_ptr<Presentation> presentation_from_json(const json& j, int degree_cap = 6);
json presentation_to_json(const Presentation& p);
// Presentation plus "comult": {gen: [[left, right], ...]}, "counit": {gen: scalar}, optional "antipode": {gen: expr}.
std::shared_ptr<PresentedBialgebra> presented_bialgebra_from_json(const std::string& name, const json& j);
// Structure-constant tables as written by FdHopf::to_json.
FdHopf fd_hopf_from_json(const json& j);
// {"r": {"n", "entries"}, "gamma", "plane", "x", "calculus": {..., "d": {gen: expr}}, "fx", "fdx"}.
FrtInput frt_input_from_json(const json& j);

// Fixture files carry hand-written defining data and a "derived" section computed from it:
// fd_hopf fixtures get the structure tables of the presented Hopf algebra, frt fixtures the row-reduced
// relations of A(R). regenerate_fixture recomputes that section.
json regenerate_fixture(const json& fixture);

struct RunOptions {
    std::optional<int> degree;
    std::optional<Scalar> gamma;
    std::optional<bool> enable_right;
    std::optional<std::vector<std::string>> suites;
};

struct ScenarioResult {
    std::string name;
    Report report;
    int exit_code = kExitPass;
    std::string error;

    json to_json(bool with_timing = true) const;
    std::string text() const;
    // FNV-1a of the timing-free JSON document.
    std::uint64_t hash() const;
};

// Gates first (verify_fd_hopf, YBE, local confluence), then the requested suites in dependency order.
// Exit codes: 0 pass, 1 verification or gate failure, 2 schema or usage error, 3 TheoremViolation.
ScenarioResult run_scenario(const std::string& path, const RunOptions& opts = {});
ScenarioResult run_scenario(const json& doc, const std::string& base_dir, const RunOptions& opts = {});
std::vector<std::string> scenario_suites(const json& doc);

// Named algebras of a scenario for the normal-form evaluator; the first entry is the default.
std::vector<std::pair<std::string, std::shared_ptr<const Algebra>>> scenario_contexts(const std::string& path);
std::vector<std::pair<std::string, std::shared_ptr<const Algebra>>> frt_contexts(const FrtSetup& s);

}  // namespace smashcalc
