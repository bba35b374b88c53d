#include "smashcalc/scenario.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "smashcalc/calculus.hpp"
#include "smashcalc/connections.hpp"
#include "smashcalc/errors.hpp"
#include "smashcalc/exactness.hpp"
#include "smashcalc/parse.hpp"
#include "smashcalc/smash.hpp"
#include "smashcalc/standard.hpp"

namespace smashcalc {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorKind::SchemaError, what); }

const json& field(const json& j, const std::string& key, const std::string& where)
{
    if (!j.is_object() || !j.contains(key))
        schema(where + ": missing \"" + key + "\"");
    return j.at(key);
}

std::string str_field(const json& j, const std::string& key, const std::string& where)
{
    const json& v = field(j, key, where);
    if (!v.is_string())
        schema(where + ": \"" + key + "\" must be a string");
    return v.get<std::string>();
}

std::string as_text(const json& v, const std::string& where)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_number_integer())
        return std::to_string(v.get<long>());
    schema(where + ": expected an expression string");
}

Element expr(const json& v, const Algebra& a, const std::string& where)
{
    std::string text = as_text(v, where);
    try {
        return parse_expression(text, a);
    } catch (const Error& e) {
        schema(where + ": \"" + text + "\": " + e.what());
    }
}

Scalar scalar(const json& v, const std::string& where)
{
    std::string text = as_text(v, where);
    try {
        return parse_scalar(text);
    } catch (const Error& e) {
        schema(where + ": \"" + text + "\": " + e.what());
    }
}

Letter letter_of(const Presentation& p, const json& v, const std::string& where)
{
    std::string name = as_text(v, where);
    auto l = p.find_letter(name);
    if (!l)
        schema(where + ": unknown generator \"" + name + "\"");
    return *l;
}

std::size_t basis_index(const FdHopf& h, const std::string& name, const std::string& where)
{
    const auto& b = h.space().basis;
    auto it = std::find(b.begin(), b.end(), name);
    if (it == b.end())
        schema(where + ": \"" + name + "\" is not a basis element of " + h.name());
    return static_cast<std::size_t>(it - b.begin());
}

Tensor2 tensor_terms(const json& terms, const Algebra& a, const std::string& where)
{
    if (!terms.is_array())
        schema(where + ": expected a list of [left, right] pairs");
    Tensor2 t;
    for (const auto& p : terms) {
        if (!p.is_array() || p.size() != 2)
            schema(where + ": expected a [left, right] pair");
        t += tensor(expr(p[0], a, where), expr(p[1], a, where));
    }
    return t;
}

Matrix matrix_from_json(const json& rows, const std::string& where)
{
    if (!rows.is_array() || rows.empty() || !rows[0].is_array())
        schema(where + ": expected a matrix");
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].is_array() || rows[i].size() != m.cols())
            schema(where + ": ragged matrix");
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(i, j) = scalar(rows[i][j], where);
    }
    return m;
}

std::string resolve(const std::string& base_dir, const std::string& path)
{
    fs::path p(path);
    return p.is_absolute() ? path : (fs::path(base_dir) / p).lexically_normal().string();
}

json load_fixture(const std::string& base_dir, const std::string& path, const std::string& kind)
{
    json f = load_json_file(resolve(base_dir, path));
    if (f.value("schema", "") != kFixtureSchema)
        schema(path + ": schema must be " + std::string(kFixtureSchema));
    if (f.value("kind", "") != kind)
        schema(path + ": expected a " + kind + " fixture");
    return f;
}

std::shared_ptr<const Algebra> algebra_of(const std::shared_ptr<const Bialgebra>& h)
{
    return std::shared_ptr<const Algebra>(h, &h->algebra());
}

// ---------------------------------------------------------------- loaded scenario

struct SmashData {
    std::shared_ptr<const FdHopf> h;
    std::shared_ptr<const Presentation> a;
    std::shared_ptr<const UniversalDga> forms_a;
    std::shared_ptr<const HAction> plain;
    std::shared_ptr<const HAction> diag;
    std::shared_ptr<const HopfForms> hf;
    std::shared_ptr<const SmashProduct> s;
    bool trivial = false;
};

struct Loaded {
    std::string name;
    int degree = 2;
    int smash_degree = 3;
    int cap = 6;
    bool enable_right = false;
    std::vector<std::string> suites;
    std::optional<SmashData> smash;
    std::optional<FrtInput> frt;
};

const std::vector<std::string> kSmashSuites{"hopf",           "calculus", "action", "smash", "standard_calculus",
                                            "smash_calculus", "exactness", "connections"};
const std::vector<std::string> kFrtSuites{"frt", "frt_classical"};

std::shared_ptr<const FdHopf> load_hopf(const json& j, const std::string& base_dir)
{
    std::shared_ptr<FdHopf> h;
    if (j.contains("fixture")) {
        json f = load_fixture(base_dir, str_field(j, "fixture", "hopf"), "fd_hopf");
        h = std::make_shared<FdHopf>(fd_hopf_from_json(field(field(f, "derived", "fixture"), "table", "fixture.derived")));
    } else if (j.contains("table")) {
        h = std::make_shared<FdHopf>(fd_hopf_from_json(j.at("table")));
    } else if (j.contains("presentation")) {
        auto pb = presented_bialgebra_from_json(j.value("name", "H"), j.at("presentation"));
        h = std::make_shared<FdHopf>(fd_from_presented(*pb));
    } else {
        schema("hopf: expected \"fixture\", \"table\" or \"presentation\"");
    }
    if (j.contains("override")) {
        const json& o = j.at("override");
        const json antipode = o.value("antipode", json::object());
        const json counit = o.value("counit", json::object());
        const json comult = o.value("comult", json::object());
        for (const auto& [b, v] : antipode.items())
            h = std::make_shared<FdHopf>(h->with_antipode(basis_index(*h, b, "override.antipode"),
                                                          expr(v, h->algebra(), "override.antipode." + b)));
        for (const auto& [b, v] : counit.items())
            h = std::make_shared<FdHopf>(h->with_counit(basis_index(*h, b, "override.counit"), scalar(v, "override.counit")));
        for (const auto& [b, v] : comult.items())
            h = std::make_shared<FdHopf>(
                h->with_comult(basis_index(*h, b, "override.comult"), tensor_terms(v, h->algebra(), "override.comult." + b)));
    }
    return h;
}

SmashData load_smash(const json& doc, const std::string& base_dir, int cap)
{
    SmashData d;
    d.h = load_hopf(field(doc, "hopf", "scenario"), base_dir);
    d.a = presentation_from_json(field(doc, "algebra", "scenario"), cap);
    const json& calc = doc.value("calculus", json{{"kind", "universal"}, {"max_degree", 2}});
    if (calc.value("kind", "universal") != "universal")
        schema("calculus: only \"universal\" calculi are supported with a Hopf table");
    int max_degree = calc.value("max_degree", 2);
    if (max_degree < 1 || max_degree > cap)
        schema("calculus.max_degree out of range");
    d.forms_a = std::make_shared<UniversalDga>(d.a, max_degree);
    const json& act = field(doc, "action", "scenario");
    std::string kind = act.value("kind", "table");
    if (kind == "trivial") {
        d.trivial = true;
        d.plain = std::make_shared<TrivialAction>(d.h, d.a);
        d.diag = std::make_shared<TrivialAction>(d.h, d.forms_a);
    } else if (kind == "table") {
        GeneratorAction::Table table;
        for (const auto& [hname, row] : field(act, "table", "action").items()) {
            Word hw{static_cast<Letter>(basis_index(*d.h, hname, "action.table"))};
            for (const auto& [gname, v] : row.items())
                table[{hw, letter_of(*d.a, gname, "action.table." + hname)}] =
                    expr(v, *d.a, "action.table." + hname + "." + gname);
        }
        auto plain = std::make_shared<GeneratorAction>(act.value("name", "table"), d.h, d.a, table);
        d.plain = plain;
        d.diag = diagonal_action(plain, d.forms_a);
    } else {
        schema("action.kind must be \"table\" or \"trivial\"");
    }
    d.hf = std::make_shared<HopfForms>(d.h, std::make_shared<UniversalDga>(algebra_of(d.h), max_degree));
    d.s = std::make_shared<SmashProduct>(d.diag, d.hf, max_degree);
    return d;
}

Loaded load(const json& doc, const std::string& base_dir, const RunOptions& opts)
{
    if (!doc.is_object())
        schema("scenario must be a JSON object");
    if (doc.value("schema", "") != kScenarioSchema)
        schema("scenario schema must be " + std::string(kScenarioSchema));
    Loaded l;
    l.name = str_field(doc, "name", "scenario");
    try {
        l.cap = doc.value("degree_cap", 6);
        l.degree = opts.degree.value_or(doc.value("degree", 2));
        l.smash_degree = doc.value("smash_degree", 3);
        l.enable_right = opts.enable_right.value_or(doc.value("enable_right_bijection", false));
    } catch (const json::exception& e) {
        schema(std::string("scenario: ") + e.what());
    }
    if (l.degree < 1 || l.degree > l.cap || l.smash_degree < 1 || l.smash_degree > l.cap)
        schema("degrees must lie in [1, degree_cap]");
    bool is_frt = doc.contains("frt");
    if (is_frt == doc.contains("hopf"))
        schema("scenario needs exactly one of \"hopf\" or \"frt\"");
    const auto& known = is_frt ? kFrtSuites : kSmashSuites;
    if (opts.suites)
        l.suites = *opts.suites;
    else if (doc.contains("suites"))
        l.suites = doc.at("suites").get<std::vector<std::string>>();
    else
        l.suites = known;
    for (const auto& s : l.suites)
        if (std::find(known.begin(), known.end(), s) == known.end())
            schema("unknown suite \"" + s + "\" for this scenario");
    if (is_frt) {
        json f = doc.at("frt");
        if (f.contains("fixture")) {
            json fx = load_fixture(base_dir, str_field(f, "fixture", "frt"), "frt");
            for (const auto& [k, v] : f.items())
                if (k != "fixture")
                    fx[k] = v;
            f = fx;
        }
        if (opts.gamma)
            f["gamma"] = opts.gamma->str();
        l.frt = frt_input_from_json(f);
    } else {
        l.smash = load_smash(doc, base_dir, l.cap);
    }
    return l;
}

// ---------------------------------------------------------------- gates and suites

Check gate(const std::string& name, const std::string& anchor, const Report& r)
{
    CheckBuilder b("gates", "gate." + name, anchor);
    for (const auto& c : r.checks())
        b.expect(c.passed, c.name + (c.witnesses.empty() ? "" : ": " + c.witnesses.front()));
    return b.done();
}

Check confluence_gate(const std::string& name, const Presentation& p)
{
    CheckBuilder b("gates", "gate.confluence." + name, "every overlap of rule left-hand sides resolves at degree 3");
    auto pairs = p.check_local_confluence(3);
    b.cases(std::max<std::size_t>(1, p.rules().size()));
    for (const auto& cp : pairs)
        b.fail(p.word_str(cp.overlap) + ": " + p.str(cp.via_first) + " vs " + p.str(cp.via_second));
    b.dim("critical_pairs_failing", pairs.size());
    return b.done();
}

void require_gate(Report& rep, const Check& c, const std::string& gate_name)
{
    rep.add(c);
    if (!c.passed)
        throw Error(ErrorKind::GateFailure,
                    gate_name + " failed" + (c.witnesses.empty() ? "" : ": " + c.witnesses.front()));
}

bool wants(const Loaded& l, const std::string& s) { return std::find(l.suites.begin(), l.suites.end(), s) != l.suites.end(); }

void run_smash(const Loaded& l, Report& rep)
{
    const SmashData& d = *l.smash;
    Report hopf = verify_fd_hopf(*d.h);
    require_gate(rep, gate("verify_fd_hopf", "Hopf axioms of the table as exact matrix identities", hopf), "verify_fd_hopf");
    require_gate(rep, confluence_gate("algebra", *d.a), "check_local_confluence(algebra)");
    int w = l.degree;
    if (wants(l, "hopf"))
        rep.merge(hopf);
    if (wants(l, "calculus")) {
        rep.merge(check_universal_dga(*d.forms_a, w, "calculus"));
        rep.merge(check_dga(*d.forms_a, w, d.forms_a->max_form_degree(), "calculus", "forms_a"));
        rep.merge(check_bicovariant(*d.hf, 0, "calculus"));
    }
    if (wants(l, "action")) {
        rep.merge(check_module_algebra(*d.plain, w, 1, "action"));
        rep.merge(check_action_on_calculus(*d.diag, *d.forms_a, w, 1, "action"));
    }
    if (wants(l, "smash")) {
        rep.merge(check_smash(*d.s, l.smash_degree, "smash"));
        if (d.trivial)
            rep.merge(check_trivial_smash_is_tensor(*d.s, l.smash_degree, "smash"));
    }
    if (wants(l, "standard_calculus")) {
        StandardFodc f(d.s);
        rep.merge(check_standard_fodc(f, w, "standard_calculus"));
        if (d.trivial) {
            auto t = std::make_shared<TensorProductDga>(d.forms_a, std::make_shared<UniversalDga>(algebra_of(d.h), 2));
            rep.merge(check_trivial_smash_calculus(*d.s, *t, w, "standard_calculus"));
        }
    }
    if (wants(l, "smash_calculus"))
        rep.merge(check_smash_dga(*d.s, w, "smash_calculus"));
    if (wants(l, "exactness") || wants(l, "connections")) {
        auto e = std::make_shared<ExactSequences>(d.s);
        if (wants(l, "exactness"))
            for (int k = 1; k <= w; ++k)
                rep.merge(check_short_exact(*e, k, "exactness"));
        if (wants(l, "connections")) {
            Connections c(e);
            rep.merge(check_connection_theory(c, w, l.enable_right, "connections"));
        }
    }
}

void run_frt(const Loaded& l, Report& rep)
{
    const FrtInput& in = *l.frt;
    require_gate(rep, gate("ybe", "R₁₂R₁₃R₂₃ = R₂₃R₁₃R₁₂ and R invertible", check_ybe(in.r, "gates")), "check_ybe");
    require_gate(rep, confluence_gate("plane", *in.plane), "check_local_confluence(plane)");
    require_gate(rep, confluence_gate("plane_calculus", in.forms->presentation()), "check_local_confluence(plane_calculus)");
    FrtSetup s = build_frt(in);
    require_gate(rep, confluence_gate("frt_algebra", s.ar->presentation()), "check_local_confluence(frt_algebra)");
    if (wants(l, "frt"))
        rep.merge(check_frt(s, l.degree, l.smash_degree, "frt"));
    if (wants(l, "frt_classical")) {
        FrtSetup c = build_frt(specialize(in, 1, Scalar(1)));
        rep.merge(check_classical_limit(c, l.degree, "frt_classical"));
    }
}

}  // namespace

int exit_code_for(ErrorKind k, bool loading)
{
    switch (k) {
    case ErrorKind::TheoremViolation:
        return kExitTheorem;
    case ErrorKind::GateFailure:
    case ErrorKind::InconsistentDifferential:
    case ErrorKind::RelationIncompatible:
        return kExitFail;
    default:
        return loading ? kExitUsage : kExitFail;
    }
}

namespace {

std::string hex(std::uint64_t h)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace

// ---------------------------------------------------------------- JSON readers

json load_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        schema("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        schema(path + ": " + e.what());
    }
}

std::shared_ptr<Presentation> presentation_from_json(const json& j, int degree_cap)
{
    std::vector<Generator> gens;
    for (const auto& g : field(j, "generators", "presentation")) {
        if (g.is_string())
            gens.push_back({g.get<std::string>(), 0});
        else
            gens.push_back({str_field(g, "name", "generator"), g.value("form_degree", 0)});
    }
    if (gens.empty())
        schema("presentation: no generators");
    Presentation free(gens, {}, degree_cap);
    std::vector<Rule> rules;
    for (const auto& r : j.value("rules", json::array())) {
        std::string where = "rule " + as_text(field(r, "lhs", "rule"), "rule");
        Element lhs = expr(r.at("lhs"), free, where);
        if (lhs.size() != 1 || !lhs.begin()->second.is_one() || lhs.begin()->first.empty())
            schema(where + ": left-hand side must be a single word");
        rules.push_back({lhs.begin()->first, expr(field(r, "rhs", where), free, where)});
    }
    try {
        return std::make_shared<Presentation>(gens, rules, degree_cap);
    } catch (const Error& e) {
        schema(std::string("presentation: ") + e.what());
    }
}

json presentation_to_json(const Presentation& p)
{
    json gens = json::array(), rules = json::array();
    for (const auto& g : p.generators())
        gens.push_back({{"name", g.name}, {"form_degree", g.form_degree}});
    for (const auto& r : p.rules())
        rules.push_back({{"lhs", p.word_str(r.lhs)}, {"rhs", p.str(r.rhs)}});
    return {{"generators", gens}, {"rules", rules}};
}

std::shared_ptr<PresentedBialgebra> presented_bialgebra_from_json(const std::string& name, const json& j)
{
    auto p = presentation_from_json(j, j.value("degree_cap", 6));
    std::size_t n = p->generators().size();
    std::vector<Tensor2> comult(n);
    std::vector<Scalar> counit(n);
    std::optional<std::vector<Element>> antipode;
    const json& cm = field(j, "comult", "bialgebra");
    const json& cu = field(j, "counit", "bialgebra");
    for (std::size_t i = 0; i < n; ++i) {
        const std::string& g = p->generators()[i].name;
        comult[i] = tensor_terms(field(cm, g, "comult"), *p, "comult." + g);
        counit[i] = scalar(field(cu, g, "counit"), "counit." + g);
    }
    if (j.contains("antipode")) {
        antipode.emplace(n);
        for (std::size_t i = 0; i < n; ++i) {
            const std::string& g = p->generators()[i].name;
            (*antipode)[i] = expr(field(j.at("antipode"), g, "antipode"), *p, "antipode." + g);
        }
    }
    return std::make_shared<PresentedBialgebra>(name, p, comult, counit, antipode);
}

FdHopf fd_hopf_from_json(const json& j)
{
    BasedSpace space{str_field(j, "name", "table"), {}};
    for (const auto& b : field(j, "basis", "table"))
        space.basis.push_back(b.get<std::string>());
    std::size_t n = space.dim();
    Matrix mult = matrix_from_json(field(j, "mult", "table"), "table.mult");
    Matrix comult = matrix_from_json(field(j, "comult", "table"), "table.comult");
    Matrix counit = matrix_from_json(field(j, "counit", "table"), "table.counit");
    std::optional<Matrix> antipode;
    if (j.contains("antipode"))
        antipode = matrix_from_json(j.at("antipode"), "table.antipode");
    std::size_t unit = field(j, "unit", "table").get<std::size_t>();
    if (mult.rows() != n || mult.cols() != n * n || comult.rows() != n * n || comult.cols() != n || counit.rows() != 1 ||
        counit.cols() != n || (antipode && (antipode->rows() != n || antipode->cols() != n)) || unit >= n)
        schema("table: shapes do not match the basis");
    try {
        return FdHopf(space.label, space, mult, unit, comult, counit, antipode);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::SingularAntipode)
            throw;
        schema(std::string("table: ") + e.what());
    }
}

FrtInput frt_input_from_json(const json& j)
{
    FrtInput in;
    const json& r = field(j, "r", "frt");
    in.r.n = field(r, "n", "frt.r").get<int>();
    const json& entries = field(r, "entries", "frt.r");
    std::size_t n4 = static_cast<std::size_t>(in.r.n) * in.r.n * in.r.n * in.r.n;
    if (in.r.n < 1 || !entries.is_array() || entries.size() != n4)
        schema("frt.r: expected n^4 entries");
    for (const auto& e : entries)
        in.r.entries.push_back(scalar(e, "frt.r.entries"));
    in.r.gamma = scalar(j.value("gamma", json("1")), "frt.gamma");
    int cap = j.value("degree_cap", 6);
    in.plane = presentation_from_json(field(j, "plane", "frt"), cap);
    for (const auto& x : field(j, "x", "frt"))
        in.x.push_back(letter_of(*in.plane, x, "frt.x"));
    const json& calc = field(j, "calculus", "frt");
    auto p = presentation_from_json(calc, cap);
    std::vector<Element> d(p->generators().size());
    for (const auto& [g, v] : field(calc, "d", "frt.calculus").items())
        d[letter_of(*p, g, "frt.calculus.d")] = expr(v, *p, "frt.calculus.d." + g);
    in.forms = presented_fodc(p, d);
    for (const auto& x : field(j, "fx", "frt"))
        in.fx.push_back(letter_of(*p, x, "frt.fx"));
    for (const auto& x : field(j, "fdx", "frt"))
        in.fdx.push_back(letter_of(*p, x, "frt.fdx"));
    if (in.x.size() != static_cast<std::size_t>(in.r.n) || in.fx.size() != in.x.size() || in.fdx.size() != in.x.size())
        schema("frt: x, fx and fdx must list n generators each");
    return in;
}

json regenerate_fixture(const json& fixture)
{
    if (fixture.value("schema", "") != kFixtureSchema)
        schema("fixture schema must be " + std::string(kFixtureSchema));
    json out = fixture;
    std::string kind = str_field(fixture, "kind", "fixture");
    if (kind == "fd_hopf") {
        auto pb = presented_bialgebra_from_json(str_field(fixture, "name", "fixture"), field(fixture, "presentation", "fixture"));
        FdHopf h = fd_from_presented(*pb);
        require_fd_hopf(h);
        out["derived"] = {{"table", h.to_json()}};
    } else if (kind == "frt") {
        FrtInput in = frt_input_from_json(fixture);
        auto ar = frt_bialgebra(in.r);
        json p = presentation_to_json(ar->presentation());
        json gens = json::array();
        for (const auto& g : ar->presentation().generators())
            gens.push_back(g.name);
        out["derived"] = {{"frt_generators", gens}, {"frt_relations", p["rules"]}};
    } else {
        schema("unknown fixture kind \"" + kind + "\"");
    }
    return out;
}

// ---------------------------------------------------------------- runner

json ScenarioResult::to_json(bool with_timing) const
{
    json j{{"schema", kReportSchema},
           {"scenario", name},
           {"status", exit_code == kExitPass ? "pass" : "fail"},
           {"exit_code", exit_code},
           {"checks", report.checks().size()},
           {"failed", report.failed_count()},
           {"suites", report.to_json(with_timing)}};
    if (!error.empty())
        j["error"] = error;
    if (with_timing)
        j["hash"] = hex(hash());
    return j;
}

std::string ScenarioResult::text() const
{
    std::ostringstream os;
    os << "scenario " << name << ": " << (exit_code == kExitPass ? "PASS" : "FAIL") << " (exit " << exit_code << ", "
       << report.checks().size() << " checks, " << report.failed_count() << " failed)\n";
    if (!error.empty())
        os << "error: " << error << "\n";
    os << report.text();
    os << "hash " << hex(hash()) << "\n";
    return os.str();
}

std::uint64_t ScenarioResult::hash() const { return fnv1a(to_json(false).dump()); }

std::vector<std::string> scenario_suites(const json& doc)
{
    if (doc.contains("suites"))
        return doc.at("suites").get<std::vector<std::string>>();
    return doc.contains("frt") ? kFrtSuites : kSmashSuites;
}

ScenarioResult run_scenario(const json& doc, const std::string& base_dir, const RunOptions& opts)
{
    ScenarioResult res;
    res.name = doc.is_object() ? doc.value("name", "") : "";
    Loaded l;
    try {
        l = load(doc, base_dir, opts);
    } catch (const Error& e) {
        res.exit_code = exit_code_for(e.kind(), true);
        res.error = e.what();
        return res;
    } catch (const json::exception& e) {
        res.exit_code = kExitUsage;
        res.error = std::string("SchemaError: ") + e.what();
        return res;
    }
    try {
        if (l.smash)
            run_smash(l, res.report);
        else
            run_frt(l, res.report);
        res.exit_code = res.report.passed() ? kExitPass : kExitFail;
    } catch (const Error& e) {
        res.exit_code = exit_code_for(e.kind(), false);
        res.error = e.what();
    }
    return res;
}

ScenarioResult run_scenario(const std::string& path, const RunOptions& opts)
{
    json doc;
    try {
        doc = load_json_file(path);
    } catch (const Error& e) {
        ScenarioResult r;
        r.exit_code = kExitUsage;
        r.error = e.what();
        return r;
    }
    return run_scenario(doc, fs::path(path).parent_path().string(), opts);
}

std::vector<std::pair<std::string, std::shared_ptr<const Algebra>>> frt_contexts(const FrtSetup& s)
{
    return {{"plane", s.input.plane},
            {"plane_calculus", s.input.forms},
            {"frt", algebra_of(s.ar)},
            {"smash", s.smash},
            {"calculus_smash", s.calculus}};
}

std::vector<std::pair<std::string, std::shared_ptr<const Algebra>>> scenario_contexts(const std::string& path)
{
    json doc = load_json_file(path);
    Loaded l = load(doc, fs::path(path).parent_path().string(), {});
    if (l.frt)
        return frt_contexts(build_frt(*l.frt));
    const SmashData& d = *l.smash;
    return {{"smash", d.s}, {"algebra", d.a}, {"forms", d.forms_a}, {"hopf", algebra_of(d.h)},
            {"hopf_forms", std::shared_ptr<const Algebra>(d.hf, &d.hf->forms())}};
}

}  // namespace smashcalc
