#include "doctest.h"
#include "hopf_support.hpp"

#include "smashcalc/calculus.hpp"

using namespace smashcalc;
using testsupport::w;

namespace {

std::shared_ptr<UniversalDga> universal_on(const std::shared_ptr<const FdHopf>& h)
{
    return std::make_shared<UniversalDga>(testsupport::algebra_of(h), 2);
}

}  // namespace

TEST_CASE("universal calculus dimensions")
{
    auto kc2 = testsupport::kc2_table();
    auto h4 = testsupport::h4_table();
    auto uk = universal_on(kc2);
    auto uh = universal_on(h4);
    CHECK(uk->forms(0, 1).size() == 2);
    CHECK(uk->forms(0, 2).size() == 2);
    CHECK(uh->forms(0, 1).size() == 12);
    CHECK(uh->forms(0, 2).size() == 36);
    CHECK(uk->d(uk->unit()).is_zero());
    CHECK(check_universal_dga(*uk, 0).passed());
    Report r = check_universal_dga(*uh, 0);
    CHECK(r.passed());
    CHECK(r.find("universal.kernel_model_degree_1")->dims["kernel"] == 12);
    CHECK(check_dga(*uk, 0, 2, "calculus", "universal").passed());
    CHECK(check_dga(*uh, 0, 2, "calculus", "universal").passed());
}

TEST_CASE("universal calculus product rules")
{
    auto uk = universal_on(testsupport::kc2_table());
    Word one{0}, g{1};
    Word dg = join_tensor({one, g});
    // dg·g = d(g·g) - g·dg = -g·dg
    CHECK(uk->mul(dg, g) == Element::single(join_tensor({g, g}), -1));
    CHECK(uk->word_str(join_tensor({g, g, g})) == "g*d(g)*d(g)");
    // d(g·dg) = dg·dg
    CHECK(uk->d(join_tensor({g, g})) == Element::single(join_tensor({one, g, g})));
    CHECK(uk->embed(dg) == Element::single(join_tensor({one, g})) - Element::single(join_tensor({g, one})));
}

TEST_CASE("universal calculi on k[C2] and H4 are bicovariant")
{
    for (auto h : {testsupport::kc2_table(), testsupport::h4_table()}) {
        HopfForms f(h, universal_on(h));
        Report r = check_bicovariant(f);
        CHECK(r.passed());
        CHECK(r.checks().size() >= 10);
    }
}

TEST_CASE("grouplike coproduct on k[C2] forms")
{
    auto h = testsupport::kc2_table();
    auto u = universal_on(h);
    HopfForms f(h, u);
    Word one{0}, g{1};
    Word dg = join_tensor({one, g});
    CHECK(f.left_coact(dg) == Tensor2::single({g, dg}));
    CHECK(f.right_coact(dg) == Tensor2::single({dg, g}));
    // Left coinvariant 1-forms: g·dg is the only one up to scale.
    FunctionCoaction lam("λ", *h, *u, Side::Left, [&](const Word& v) { return f.left_coact(v); });
    CHECK(coinvariants(lam, u->forms(0, 1)).space.dim() == 1);
}

TEST_CASE("quotient by a non-coinvariant sub-bimodule is not bicovariant")
{
    auto h = testsupport::kc2_table();
    auto u = universal_on(h);
    HopfForms f(h, u);
    Word one{0}, g{1};
    Element n = Element::single(join_tensor({one, g})) + Element::single(join_tensor({g, g}));
    Report r = check_quotient_bicovariant(f, {n});
    CHECK(!r.passed());
    CHECK(r.find("quotient.left_subcomodule")->dims["N"] == 1);
    CHECK_THROWS_WITH_AS(require_quotient_bicovariant(f, {n}), doctest::Contains("NotBicovariant"), Error);
    // N = 0 and N = Ω¹ are both bicovariant.
    CHECK_NOTHROW(require_quotient_bicovariant(f, {}));
    CHECK_NOTHROW(require_quotient_bicovariant(f, {Element::single(join_tensor({one, g}))}));
}

TEST_CASE("Wess-Zumino calculus on the quantum plane")
{
    auto p = testsupport::wz_plane();
    CHECK(p->check_local_confluence(3).empty());
    auto c = presented_fodc(p, testsupport::wz_d());
    Report r = check_presented_dga(*c, 3);
    CHECK(r.passed());
    CHECK(check_dga(*c, 3, 3, "calculus", "wz").passed());
    // d(x*y) = dx*y + x*dy, in normal form q*dy*x + q^2*dx*y
    Scalar q = Scalar::q();
    CHECK(c->d(Word{3, 2}) == w({1, 3}, q) + w({0, 2}, q * q));
}

TEST_CASE("inconsistent differential is rejected")
{
    Scalar q = Scalar::q();
    auto p = testsupport::wz_plane();
    auto rules = p->rules();
    rules[2].rhs = w({1, 3}, q);  // x*dy -> q*dy*x
    auto bad = std::make_shared<Presentation>(p->generators(), rules);
    CHECK_THROWS_WITH_AS(presented_fodc(bad, testsupport::wz_d()), doctest::Contains("InconsistentDifferential"), Error);
}

TEST_CASE("diagonal action on universal forms")
{
    auto kc2 = testsupport::kc2_table();
    auto h4 = testsupport::h4_table();
    auto D = testsupport::dual_numbers();
    auto uD = std::make_shared<UniversalDga>(D, 2);
    Word t{0};
    GeneratorAction::Table tk{{{Word{1}, 0}, w({0}, -1)}};
    auto ak = std::make_shared<GeneratorAction>("kC2 on D", kc2, D, tk);
    CHECK(check_module_algebra(*ak, 2, 0).passed());
    auto dk = diagonal_action(ak, uD);
    CHECK(check_action_on_calculus(*dk, *uD, 2, 0).passed());
    // H4: g·t = -t, x·t = 1, gx·t = 1
    GeneratorAction::Table th{{{Word{1}, 0}, w({0}, -1)}, {{Word{2}, 0}, Element::single(Word{})}, {{Word{3}, 0}, Element::single(Word{})}};
    auto ah = std::make_shared<GeneratorAction>("H4 on D", h4, D, th);
    CHECK(check_module_algebra(*ah, 2, 0).passed());
    auto dh = diagonal_action(ah, uD);
    CHECK(check_action_on_calculus(*dh, *uD, 2, 0).passed());
    // x·dt = d(x·t) = 0 and x·(t dt) = (x·t)(dt) + (g·t)d(x·t) = dt
    Word dt = join_tensor({Word{}, t});
    CHECK(dh->act(Word{2}, dt).is_zero());
    CHECK(dh->act(Word{2}, join_tensor({t, t})) == Element::single(dt));
}

TEST_CASE("broken action fails the expected axiom")
{
    auto h4 = testsupport::h4_table();
    auto D = testsupport::dual_numbers();
    GeneratorAction::Table th{{{Word{1}, 0}, w({0}, -1)}, {{Word{2}, 0}, Element::single(Word{})}, {{Word{3}, 0}, Element::single(Word{})}};
    GeneratorAction good("H4 on D", h4, D, th);
    // gx·t = -1 breaks g·(x·t) = (gx)·t only.
    GeneratorAction bad = good.with_entry(Word{3}, 0, Element::single(Word{}, -1));
    Report r = check_module_algebra(bad, 2, 0);
    CHECK(!r.find("module_algebra.composition")->passed);
    CHECK(r.find("module_algebra.unit_acts_trivially")->passed);

    // Presented calculus on D with g·dt = dt violates d-linearity.
    auto kc2 = testsupport::kc2_table();
    auto P = std::make_shared<Presentation>(std::vector<Generator>{{"dt", 1}, {"t", 0}},
                                            std::vector<Rule>{{Word{1, 1}, Element()}, {Word{1, 0}, w({0, 1}, -1)}});
    auto c = presented_fodc(P, {Element(), w({0})});
    GeneratorAction::Table tg{{{Word{1}, 1}, w({1}, -1)}, {{Word{1}, 0}, w({0})}};
    GeneratorAction m("kC2 on ΩD", kc2, c, tg);
    Report rc = check_action_on_calculus(m, *c, 2, 0);
    CHECK(!rc.find("action_on_calculus.d_commutes")->passed);
    GeneratorAction ok = m.with_entry(Word{1}, 0, w({0}, -1));
    CHECK(check_action_on_calculus(ok, *c, 2, 0).passed());
}
