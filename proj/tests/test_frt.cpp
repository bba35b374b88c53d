#include "doctest.h"
#include "hopf_support.hpp"

#include "smashcalc/frt.hpp"

using namespace smashcalc;
using testsupport::w;

namespace {

// Brute-force R₁₂R₁₃R₂₃ − R₂₃R₁₃R₁₂ entries.
bool ybe_oracle(const RMatrix& r)
{
    int n = r.n;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d)
                    for (int e = 0; e < n; ++e)
                        for (int f = 0; f < n; ++f) {
                            Scalar lhs, rhs;
                            for (int x = 0; x < n; ++x)
                                for (int y = 0; y < n; ++y)
                                    for (int z = 0; z < n; ++z) {
                                        lhs += r(a, b, x, y) * r(x, c, d, z) * r(y, z, e, f);
                                        rhs += r(b, c, y, z) * r(a, z, x, f) * r(x, y, d, e);
                                    }
                            if (lhs != rhs)
                                return false;
                        }
    return true;
}

const Scalar q = Scalar::q();

FrtSetup& standard_setup()
{
    static FrtSetup s = build_frt(standard_frt_input());
    return s;
}

}  // namespace

TEST_CASE("Yang-Baxter gate")
{
    RMatrix r = RMatrix::standard();
    CHECK(ybe_oracle(r));
    CHECK(check_ybe(r).passed());
    CHECK(check_ybe(RMatrix::identity(2)).passed());
    CHECK(check_ybe(RMatrix::identity(3)).passed());
    CHECK(check_ybe(r.specialize(2)).passed());
    // One-entry mutations.
    std::vector<RMatrix> bad{r.with_entry(1, 0, 0, 1, q), r.with_entry(0, 0, 0, 0, q + 1), r.with_entry(0, 1, 1, 0, Scalar(1)),
                             r.with_entry(0, 1, 0, 1, Scalar(2)), r.with_entry(1, 1, 0, 0, q)};
    for (const auto& m : bad) {
        bool oracle = ybe_oracle(m);
        Report rep = check_ybe(m);
        CHECK(rep.find("frt.ybe")->passed == oracle);
        CHECK(!rep.passed());
    }
    Report rep = check_ybe(bad[0]);
    CHECK(rep.find("frt.ybe")->witnesses.front().find("(i,j,k)") != std::string::npos);
    CHECK_THROWS_AS(frt_bialgebra(bad[0]), Error);
    try {
        frt_bialgebra(bad[0]);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::GateFailure);
    }
}

TEST_CASE("FRT bialgebra of the standard R-matrix")
{
    auto ar = frt_bialgebra(RMatrix::standard());
    const Presentation& P = ar->presentation();
    CHECK(P.rules().size() == 6);
    CHECK(P.basis_up_to(2).size() - P.basis_up_to(1).size() == 10);
    CHECK(P.basis_up_to(3).size() - P.basis_up_to(2).size() == 20);
    // a = T11, b = T12, c = T21, d = T22: ab = qba, ac = qca, bd = qdb, cd = qdc, bc = cb, ad − da = (q − q⁻¹)bc.
    Letter a = 0, b = 1, c = 2, d = 3;
    CHECK(P.normal_form(w({a, b}) - w({b, a}, q)).is_zero());
    CHECK(P.normal_form(w({a, c}) - w({c, a}, q)).is_zero());
    CHECK(P.normal_form(w({b, d}) - w({d, b}, q)).is_zero());
    CHECK(P.normal_form(w({c, d}) - w({d, c}, q)).is_zero());
    CHECK(P.normal_form(w({b, c}) - w({c, b})).is_zero());
    CHECK(P.normal_form(w({a, d}) - w({d, a}) - w({b, c}, q - q.inv())).is_zero());
    CHECK(check_presented_bialgebra(*ar, 2).passed());
    CHECK(P.check_local_confluence(3).empty());
    CHECK(ar->counit(Word{a}) == Scalar(1));
    CHECK(ar->counit(Word{b}).is_zero());

    auto id = frt_bialgebra(RMatrix::identity(2));
    for (const auto& rule : id->presentation().rules())
        CHECK(rule.rhs == Element::single(Word{rule.lhs[1], rule.lhs[0]}));
}

TEST_CASE("coquasitriangular form")
{
    for (const Scalar& gamma : {Scalar(1), Scalar(2), q}) {
        RMatrix R = RMatrix::standard(gamma);
        auto ar = frt_bialgebra(R);
        RForm rf(R, ar);
        Report rep = check_r_form(rf, 2);
        CHECK(rep.passed());
        if (!rep.passed())
            MESSAGE(rep.text());
        CHECK(rep.find("frt.first_axiom_is_frt")->dims["relation_rank"] == 6);
        // r(Tⁱⱼ⊗Tᵏℓ) = γR^{ik}_{jℓ}; R⁻¹ for the standard R has q⁻¹ on the diagonal entries and −(q − q⁻¹) at ²¹₁₂.
        CHECK(rf.r(Word{0}, Word{0}) == gamma * q);
        CHECK(rf.r(Word{2}, Word{1}) == gamma * (q - q.inv()));
        CHECK(rf.rbar(Word{0}, Word{0}) == gamma.inv() * q.inv());
        CHECK(rf.rbar(Word{2}, Word{1}) == -gamma.inv() * (q - q.inv()));
        CHECK(rf.r(Word{}, Word{3}) == Scalar(1));
        CHECK(rf.r(Word{}, Word{1}).is_zero());
    }
}

TEST_CASE("induced action on the quantum plane and its calculus")
{
    FrtSetup& s = standard_setup();
    Report rep = check_induced_action(s, 2);
    CHECK(rep.passed());
    if (!rep.passed())
        MESSAGE(rep.text());
    // T¹₁·x = γq·x, T¹₂·y = (q − q⁻¹)x, T¹₂·x = 0.
    Letter x = 1, y = 0;
    CHECK(s.plane_action->act(Word{0}, Word{x}) == w({x}, q));
    CHECK(s.plane_action->act(Word{1}, Word{y}) == w({x}, q - q.inv()));
    CHECK(s.plane_action->act(Word{1}, Word{x}).is_zero());
    CHECK(s.plane_action->act(Word{}, Word{x, y}) == w({y, x}, q));

    FrtSetup s2 = build_frt(standard_frt_input(Scalar(3)));
    CHECK(s2.plane_action->act(Word{0}, Word{x}) == w({x}, 3 * q));
    CHECK(check_induced_action(s2, 2).passed());
}

TEST_CASE("relations incompatible with the coaction are rejected")
{
    FrtInput in = standard_frt_input();
    Letter y = 0, x = 1;
    in.plane = std::make_shared<Presentation>(std::vector<Generator>{{"y", 0}, {"x", 0}},
                                              std::vector<Rule>{{Word{x, y}, w({y, x}, q * q)}});
    try {
        build_frt(in);
        FAIL("expected RelationIncompatible");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::RelationIncompatible);
    }
}

TEST_CASE("smash product of the plane with A(R)")
{
    FrtSetup& s = standard_setup();
    Report rep = check_smash(*s.smash, 3);
    CHECK(rep.passed());
    if (!rep.passed())
        MESSAGE(rep.text());
    CHECK(check_frt_algebra(s).passed());
}

TEST_CASE("differential commutation relations")
{
    FrtSetup& s = standard_setup();
    Report rep = wz_smash_relations(s, 2);
    CHECK(rep.passed());
    if (!rep.passed())
        MESSAGE(rep.text());
    CHECK(rep.find("frt.dT_commutation")->details["undifferentiated_right_side_holds"] == false);
    // (dT¹₁)x = q·x dT¹₁ at γ = 1.
    const SmashProduct& C = *s.calculus;
    const Algebra& F = *s.input.forms;
    Element dT = C.d(C.pair(F.one(), Element::single(Word{0})));
    Element x = C.pair(Element::single(Word{3}), F.one());
    CHECK(C.mul(dT, x) == q * C.mul(x, dT));
}

TEST_CASE("classical limit")
{
    FrtSetup s = build_frt(specialize(standard_frt_input(Scalar(5)), 1, Scalar(1)));
    Report rep = check_classical_limit(s, 2);
    CHECK(rep.passed());
    if (!rep.passed())
        MESSAGE(rep.text());
    CHECK(check_frt(s, 2, 2).passed());
    CHECK(!check_classical_limit(standard_setup(), 1).passed());
}
