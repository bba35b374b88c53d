#include <fstream>
#include <iostream>
#include <set>

#include "CLI11.hpp"
#include "smashcalc/errors.hpp"
#include "smashcalc/parallel.hpp"
#include "smashcalc/parse.hpp"
#include "smashcalc/scenario.hpp"

using namespace smashcalc;

namespace {

struct Common {
    std::string scenario;
    int degree = 0;
    std::string gamma;
    std::string out;
    std::string format = "text";
    bool enable_right = false;
};

void add_common(CLI::App* sub, Common& c, bool need_scenario = true)
{
    auto* s = sub->add_option("--scenario", c.scenario, "scenario file")->check(CLI::ExistingFile);
    if (need_scenario)
        s->required();
    sub->add_option("--degree", c.degree, "working degree (overrides the scenario)")->check(CLI::Range(1, 6));
    sub->add_option("--gamma", c.gamma, "scalar γ for the FRT pairing, e.g. q^-1");
    sub->add_option("--out", c.out, "write the report here instead of stdout");
    sub->add_option("--format", c.format, "report format")->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("--enable-right-bijection", c.enable_right, "also build and verify right connections");
}

int emit(const Common& c, const std::string& body, const std::string& summary)
{
    if (c.out.empty()) {
        std::cout << body;
        return 0;
    }
    std::ofstream f(c.out);
    if (!f) {
        std::cerr << "cannot write " << c.out << "\n";
        return kExitUsage;
    }
    f << body;
    std::cout << summary << "\n";
    return 0;
}

int run(const Common& c, std::optional<std::vector<std::string>> suites)
{
    RunOptions opts;
    opts.suites = std::move(suites);
    if (c.degree > 0)
        opts.degree = c.degree;
    if (c.enable_right)
        opts.enable_right = true;
    if (!c.gamma.empty()) {
        try {
            opts.gamma = parse_scalar(c.gamma);
        } catch (const Error& e) {
            std::cerr << "--gamma: " << e.what() << "\n";
            return kExitUsage;
        }
    }
    ScenarioResult r = run_scenario(c.scenario, opts);
    std::string body = c.format == "json" ? r.to_json(true).dump(2) + "\n" : r.text();
    std::string summary = r.name + ": " + (r.exit_code == kExitPass ? "PASS" : "FAIL") + " (exit " +
                          std::to_string(r.exit_code) + ")" + (r.error.empty() ? "" : " " + r.error);
    if (int e = emit(c, body, summary))
        return e;
    if (!r.error.empty() && c.out.empty() && c.format == "json")
        std::cerr << r.error << "\n";
    return r.exit_code;
}

int frt_demo(const Common& c, const std::string& r_name)
{
    FrtInput in;
    try {
        Scalar gamma = c.gamma.empty() ? Scalar(1) : parse_scalar(c.gamma);
        if (r_name == "standard-sl2") {
            in = standard_frt_input(gamma);
        } else {
            json f = load_json_file(r_name);
            f["gamma"] = gamma.str();
            in = frt_input_from_json(f);
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    ScenarioResult res;
    res.name = "frt-demo " + r_name;
    json relations = json::array();
    try {
        res.report.merge(check_ybe(in.r, "frt"));
        FrtSetup s = build_frt(in);
        int degree = c.degree > 0 ? c.degree : 2;
        res.report.merge(check_frt_algebra(s, degree, "frt"));
        res.report.merge(check_r_form(*s.rf, degree, "frt"));
        const Presentation& p = s.ar->presentation();
        for (const auto& rule : p.rules())
            relations.push_back(p.word_str(rule.lhs) + " = " + p.str(rule.rhs));
        res.exit_code = res.report.passed() ? kExitPass : kExitFail;
    } catch (const Error& e) {
        res.error = e.what();
        res.exit_code = e.kind() == ErrorKind::TheoremViolation ? kExitTheorem : kExitFail;
    }
    std::string body;
    if (c.format == "json") {
        json j = res.to_json(true);
        j["relations"] = relations;
        body = j.dump(2) + "\n";
    } else {
        body = res.text() + "relations of A(R):\n";
        for (const auto& r : relations)
            body += "  " + r.get<std::string>() + "\n";
    }
    if (int e = emit(c, body, res.name + ": exit " + std::to_string(res.exit_code)))
        return e;
    return res.exit_code;
}

std::string degrees(const Algebra& a, const Element& e)
{
    std::set<int> weights, forms;
    for (const auto& [w, c] : e) {
        weights.insert(a.weight(w));
        forms.insert(a.form_degree(w));
    }
    auto range = [](const std::set<int>& s) {
        if (s.empty())
            return std::string("-");
        if (s.size() == 1)
            return std::to_string(*s.begin());
        return std::to_string(*s.begin()) + ".." + std::to_string(*s.rbegin());
    };
    return "weight " + range(weights) + ", form degree " + range(forms);
}

int nf(const Common& c, const std::string& context, const std::vector<std::string>& exprs)
{
    std::vector<std::pair<std::string, std::shared_ptr<const Algebra>>> ctx;
    try {
        ctx = c.scenario.empty() ? frt_contexts(build_frt(standard_frt_input())) : scenario_contexts(c.scenario);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    std::shared_ptr<const Algebra> a = ctx.front().second;
    if (!context.empty()) {
        a = nullptr;
        for (const auto& [name, alg] : ctx)
            if (name == context)
                a = alg;
        if (!a) {
            std::cerr << "unknown context " << context << "; available:";
            for (const auto& [name, alg] : ctx)
                std::cerr << " " << name;
            std::cerr << "\n";
            return kExitUsage;
        }
    }
    int status = 0;
    auto eval = [&](const std::string& line) {
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            return;
        try {
            Element e = parse_expression(line, *a);
            std::cout << a->str(e) << "    [" << degrees(*a, e) << "]\n";
        } catch (const Error& e) {
            std::cout << "error: " << e.what() << "\n";
            status = kExitUsage;
        }
    };
    if (!exprs.empty()) {
        for (const auto& x : exprs)
            eval(x);
    } else {
        std::string line;
        while (std::getline(std::cin, line))
            eval(line);
    }
    return status;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact verification of smash products, their calculi, connections and the FRT example"};
    app.require_subcommand(1);
    bool serial = false;
    app.add_flag("--serial", serial, "run every kernel on the serial reference path");

    Common c;
    std::string r_name = "standard-sl2", context;
    std::vector<std::string> exprs;
    struct Sub {
        const char* name;
        const char* help;
        std::optional<std::vector<std::string>> suites;
    };
    std::vector<Sub> subs{
        {"run", "run every suite requested by a scenario", std::nullopt},
        {"check-hopf", "Hopf axioms of the scenario's table", std::vector<std::string>{"hopf"}},
        {"check-calculus", "universal, standard and higher smash calculi",
         std::vector<std::string>{"calculus", "standard_calculus", "smash_calculus"}},
        {"build-smash", "action and smash product laws", std::vector<std::string>{"action", "smash"}},
        {"check-exactness", "short exact sequences of the smash calculus", std::vector<std::string>{"exactness"}},
        {"connections", "connections and connection 1-forms", std::vector<std::string>{"connections"}},
    };
    std::vector<CLI::App*> handles;
    for (const auto& s : subs) {
        auto* sub = app.add_subcommand(s.name, s.help);
        add_common(sub, c);
        handles.push_back(sub);
    }
    auto* demo = app.add_subcommand("frt-demo", "YBE, A(R) relations and the r-form for an R-matrix");
    add_common(demo, c, false);
    demo->add_option("--r", r_name, "standard-sl2 or an frt fixture file");
    auto* nfc = app.add_subcommand("nf", "print normal forms and degrees of expressions (stdin, one per line)");
    nfc->add_option("--scenario", c.scenario, "scenario file (default: the standard quantum plane)")->check(CLI::ExistingFile);
    nfc->add_option("--context", context, "algebra to evaluate in");
    nfc->add_option("--expr", exprs, "expression instead of stdin");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }
    if (serial)
        set_default_exec(Exec::Serial);
    for (std::size_t i = 0; i < subs.size(); ++i)
        if (handles[i]->parsed())
            return run(c, subs[i].suites);
    if (demo->parsed())
        return frt_demo(c, r_name);
    return nf(c, context, exprs);
}
