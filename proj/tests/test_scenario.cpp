#include "doctest.h"
#include "hopf_support.hpp"

#include "smashcalc/parallel.hpp"
#include "smashcalc/parse.hpp"
#include "smashcalc/scenario.hpp"

using namespace smashcalc;

namespace {

const std::string kRoot = SMASHCALC_SOURCE_DIR;

std::string scenario(const std::string& name) { return kRoot + "/scenarios/" + name + ".json"; }
std::string fixture(const std::string& name) { return kRoot + "/fixtures/" + name + ".json"; }

ScenarioResult run_doc(json doc) { return run_scenario(doc, kRoot + "/scenarios"); }

}  // namespace

TEST_CASE("shipped scenarios")
{
    for (const char* name : {"kc2_universal", "kc2_trivial", "h4_universal", "h4_trivial", "frt_sl2"}) {
        ScenarioResult r = run_scenario(scenario(name));
        CHECK_MESSAGE(r.exit_code == kExitPass, name);
        CHECK(r.error.empty());
        if (r.exit_code != kExitPass)
            MESSAGE(r.text());
    }
    ScenarioResult kc2 = run_scenario(scenario("kc2_universal"));
    for (const char* suite : {"hopf", "calculus", "action", "smash", "standard_calculus", "smash_calculus", "exactness",
                              "connections", "gates"}) {
        bool found = false;
        for (const auto& c : kc2.report.checks())
            found = found || c.suite == suite;
        CHECK_MESSAGE(found, suite);
    }
}

TEST_CASE("mutated antipode fails the Hopf gate")
{
    ScenarioResult r = run_scenario(scenario("h4_mutated_antipode"));
    CHECK(r.exit_code == kExitFail);
    CHECK(r.error.find("GateFailure") != std::string::npos);
    CHECK(r.error.find("verify_fd_hopf") != std::string::npos);
    const Check* g = r.report.find("gate.verify_fd_hopf");
    REQUIRE(g);
    CHECK(!g->passed);
    // The witness quotes both sides as replayable expressions.
    auto h = std::make_shared<FdHopf>(fd_hopf_from_json(load_json_file(fixture("h4"))["derived"]["table"]));
    const std::string& w = g->witnesses.front();
    auto lhs = w.find("lhs = "), rhs = w.find(", rhs = ");
    REQUIRE(lhs != std::string::npos);
    REQUIRE(rhs != std::string::npos);
    Element l = parse_expression(w.substr(lhs + 6, rhs - lhs - 6), h->algebra());
    CHECK(l == parse_expression("2*gx", h->algebra()));
    CHECK(parse_expression(w.substr(rhs + 8), h->algebra()).is_zero());
}

TEST_CASE("schema errors exit with 2")
{
    json good = load_json_file(scenario("kc2_universal"));
    auto with = [&](auto edit) {
        json d = good;
        edit(d);
        return run_doc(d);
    };
    CHECK(with([](json& d) { d["schema"] = "smashcalc.scenario/0"; }).exit_code == kExitUsage);
    CHECK(with([](json& d) { d["suites"] = {"hopf", "frt"}; }).exit_code == kExitUsage);
    CHECK(with([](json& d) { d["degree"] = 9; }).exit_code == kExitUsage);
    CHECK(with([](json& d) { d.erase("algebra"); }).exit_code == kExitUsage);
    CHECK(with([](json& d) { d["action"]["table"]["g"]["t"] = "-z"; }).exit_code == kExitUsage);
    CHECK(with([](json& d) { d["action"]["table"]["g"]["t"] = "-t +"; }).exit_code == kExitUsage);
    CHECK(with([](json& d) { d["action"]["table"]["h"] = {{"t", "t"}}; }).exit_code == kExitUsage);
    CHECK(with([](json& d) { d["algebra"]["rules"][0]["lhs"] = "2*t*t"; }).exit_code == kExitUsage);
    CHECK(with([](json& d) { d["hopf"]["fixture"] = "missing.json"; }).exit_code == kExitUsage);
    CHECK(with([](json& d) { d["frt"] = json::object(); }).exit_code == kExitUsage);
    ScenarioResult missing = run_scenario(scenario("does_not_exist"));
    CHECK(missing.exit_code == kExitUsage);
    CHECK(with([](json& d) { d["degree"] = 1; }).exit_code == kExitPass);
}

TEST_CASE("FRT gates")
{
    json good = load_json_file(scenario("frt_sl2"));
    json d = good;
    json fx = load_json_file(fixture("frt_sl2"));
    fx["r"]["entries"][9] = "q";
    d["frt"] = fx;
    ScenarioResult r = run_doc(d);
    CHECK(r.exit_code == kExitFail);
    CHECK(r.error.find("check_ybe") != std::string::npos);

    fx = load_json_file(fixture("frt_sl2"));
    fx["plane"]["rules"][0]["rhs"] = "q^2*y*x";
    d["frt"] = fx;
    r = run_doc(d);
    CHECK(r.exit_code == kExitFail);
    CHECK(r.error.find("RelationIncompatible") != std::string::npos);

    fx = load_json_file(fixture("frt_sl2"));
    fx["calculus"]["rules"][7]["rhs"] = "-1/q*dx*dy";
    d["frt"] = fx;
    r = run_doc(d);
    CHECK(r.exit_code == kExitFail);
}

TEST_CASE("exit code mapping")
{
    CHECK(exit_code_for(ErrorKind::TheoremViolation, false) == kExitTheorem);
    CHECK(exit_code_for(ErrorKind::TheoremViolation, true) == kExitTheorem);
    CHECK(exit_code_for(ErrorKind::GateFailure, true) == kExitFail);
    CHECK(exit_code_for(ErrorKind::SchemaError, true) == kExitUsage);
    CHECK(exit_code_for(ErrorKind::NotInImage, false) == kExitFail);
}

TEST_CASE("reports are deterministic")
{
    for (const char* name : {"kc2_universal", "h4_universal", "frt_sl2", "h4_mutated_antipode"}) {
        ScenarioResult a = run_scenario(scenario(name));
        ScenarioResult b = run_scenario(scenario(name));
        CHECK_MESSAGE(a.hash() == b.hash(), name);
        CHECK(a.to_json(false).dump() == b.to_json(false).dump());
    }
    set_default_exec(Exec::Serial);
    ScenarioResult serial = run_scenario(scenario("h4_universal"));
    set_default_exec(Exec::Parallel);
    ScenarioResult parallel = run_scenario(scenario("h4_universal"));
    CHECK(serial.hash() == parallel.hash());
    json j = parallel.to_json(true);
    CHECK(j["schema"] == kReportSchema);
    CHECK(j["hash"].get<std::string>().size() == 16);
}

TEST_CASE("fixtures are regenerated from their presentations")
{
    for (const char* name : {"kc2", "h4", "frt_sl2"}) {
        json f = load_json_file(fixture(name));
        CHECK_MESSAGE(regenerate_fixture(f) == f, name);
    }
    // Independent route: tables from the presentations written in C++.
    FdHopf h4 = fd_hopf_from_json(load_json_file(fixture("h4"))["derived"]["table"]);
    FdHopf h4_oracle = fd_from_presented(*testsupport::h4_presented());
    CHECK(h4.to_json() == h4_oracle.to_json());
    FdHopf kc2 = fd_hopf_from_json(load_json_file(fixture("kc2"))["derived"]["table"]);
    CHECK(kc2.to_json() == fd_from_presented(*testsupport::kc2_presented()).to_json());
    CHECK(verify_fd_hopf(h4).passed());

    FrtInput in = frt_input_from_json(load_json_file(fixture("frt_sl2")));
    FrtInput standard = standard_frt_input();
    CHECK(in.r.entries == standard.r.entries);
    CHECK(presentation_to_json(*in.plane) == presentation_to_json(*standard.plane));
    CHECK(presentation_to_json(in.forms->presentation()) == presentation_to_json(standard.forms->presentation()));
    CHECK(in.forms->d_on_generators() == standard.forms->d_on_generators());
    CHECK(in.x == standard.x);
    CHECK(in.fx == standard.fx);
    CHECK(in.fdx == standard.fdx);

    json stale = load_json_file(fixture("h4"));
    stale["derived"]["table"]["antipode"][3][2] = "1";
    CHECK(regenerate_fixture(stale) != stale);
}

TEST_CASE("presentations round-trip through JSON")
{
    auto in = standard_frt_input();
    json j = presentation_to_json(in.forms->presentation());
    auto back = presentation_from_json(j);
    CHECK(presentation_to_json(*back) == j);
    for (const auto& rule : in.forms->presentation().rules())
        CHECK(back->normal_form(rule.lhs) == rule.rhs);
}

TEST_CASE("scenario contexts for the evaluator")
{
    auto ctx = scenario_contexts(scenario("frt_sl2"));
    REQUIRE(ctx.size() == 5);
    CHECK(ctx[0].first == "plane");
    const Algebra& plane = *ctx[0].second;
    CHECK(plane.str(parse_expression("q*x*y - y*x", plane)) == "(q^2-1)*y*x");
    auto smash = scenario_contexts(scenario("kc2_universal"));
    CHECK(smash[0].first == "smash");
    CHECK(smash[0].second->str(parse_expression("g*t", *smash[0].second)) == "-t#g");
}
