#include "doctest.h"
#include "smash_fixtures.hpp"

#include "smashcalc/connections.hpp"

using namespace smashcalc;
using namespace testsupport::smash_fixtures;

namespace {

std::shared_ptr<Connections> connections_of(const Fixture& fx)
{
    return std::make_shared<Connections>(std::make_shared<ExactSequences>(fx.s));
}

HForm add(const HForm& a, const HForm& b)
{
    HForm out = a;
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] += b[i];
    return out;
}

bool is_form(const Connections& c, const HForm& phi, const std::string& name)
{
    Report r = is_connection_one_form(c, phi, name);
    return r.passed();
}

}  // namespace

TEST_CASE("Lie algebra of the Hopf calculus")
{
    auto kc2 = connections_of(kc2_fixture());
    auto h4 = connections_of(h4_fixture());
    CHECK(kc2->dim() == 1);
    CHECK(h4->dim() == 3);
    // x^1 = S(g)dg = g·dg for kC2
    const Algebra& F = kc2->smash().fiber_forms();
    Element gdg = F.mul(Word{1}, join_tensor({Word{0}, Word{1}}));
    Element x = kc2->coinvariant_basis()[0];
    CHECK((x == gdg || x == Scalar(-1) * gdg));
    for (auto c : {kc2, h4}) {
        Report r = check_lie_algebra(*c);
        CHECK(r.passed());
        if (!r.passed())
            MESSAGE(r.text());
    }
    CHECK_THROWS_AS(kc2->coinvariant_coords(Element::single(join_tensor({Word{0}, Word{1}}))), Error);
}

TEST_CASE("fundamental vector fields")
{
    for (auto fx : {kc2_fixture(), h4_fixture(), kc2_fixture(true)})
        for (int w : {1, 2}) {
            Report r = check_fundamental_fields(*connections_of(fx), w);
            CHECK(r.passed());
            if (!r.passed())
                MESSAGE(r.text());
        }
}

TEST_CASE("canonical connection and its 1-form")
{
    for (auto fx : {kc2_fixture(), h4_fixture()}) {
        auto c = connections_of(fx);
        HForm phi = c->canonical_form();
        CHECK(is_form(*c, phi, "canonical"));
        Connection can = c->canonical();
        Report r = check_connection(*c, can, 2, "canonical");
        CHECK(r.passed());
        if (!r.passed())
            MESSAGE(r.text());
        CHECK(c->form_of(can) == phi);
        CHECK(same_connection(*c, c->from_form(phi), can, 2, "canonical").passed);
    }
}

TEST_CASE("valid and invalid connection 1-forms")
{
    for (auto fx : {kc2_fixture(), h4_fixture()}) {
        auto c = connections_of(fx);
        HForm phi = c->canonical_form();
        HForm t1 = c->j(c->sample_translation(1, 2));
        HForm t2 = c->j(c->sample_translation(2, 2));
        CHECK(is_form(*c, add(phi, t1), "translate1"));
        CHECK(is_form(*c, add(phi, t2), "translate2"));
        CHECK(!is_form(*c, HForm(c->dim()), "zero"));
        HForm twice = phi;
        for (auto& p : twice)
            p = Scalar(2) * p;
        CHECK(!is_form(*c, twice, "twice"));
        HForm bent = phi;
        bent[0] += c->smash().pair(Element::single(Word{0}), Element::single(join_tensor({Word{0}, Word{1}})));
        CHECK(!c->invariant_codiagonal(bent));
        CHECK(!is_form(*c, bent, "perturbed"));
    }
}

TEST_CASE("connections and 1-forms correspond")
{
    for (auto fx : {kc2_fixture(), h4_fixture()}) {
        auto c = connections_of(fx);
        HForm phi = c->canonical_form();
        for (std::uint64_t seed : {3, 4, 5}) {
            Translation t = c->sample_translation(seed, 2);
            HForm psi = add(phi, c->j(t));
            Connection cp = c->from_form(psi);
            Report r = check_connection(*c, cp, 2, "translate");
            CHECK(r.passed());
            if (!r.passed())
                MESSAGE(r.text());
            CHECK(c->form_of(cp) == psi);
            CHECK(same_connection(*c, c->from_form(c->form_of(cp)), cp, 2, "roundtrip").passed);
            CHECK(c->decompose_difference(psi, phi, 2) == t);
        }
    }
}

TEST_CASE("translations")
{
    for (auto fx : {kc2_fixture(), h4_fixture()}) {
        auto c = connections_of(fx);
        Report r = check_translations(*c, 2);
        CHECK(r.passed());
        if (!r.passed())
            MESSAGE(r.text());
        HForm bent(c->dim());
        bent[0] = c->smash().pair(Element::single(Word{0}), Element::single(join_tensor({Word{0}, Word{1}})));
        CHECK_THROWS_AS(c->decompose_difference(bent, HForm(c->dim()), 2), Error);
    }
}

TEST_CASE("right connections from 1-forms are gated")
{
    auto c = connections_of(h4_fixture());
    HForm phi = c->canonical_form();
    try {
        c->right_from_form(phi, 2, false);
        FAIL("expected FeatureDisabled");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::FeatureDisabled);
    }
    Connection r = c->right_from_form(phi, 2, true);
    CHECK(same_connection(*c, r, c->canonical(), 2, "right").passed);
}

TEST_CASE("right connection formula on translated forms")
{
    auto c = connections_of(h4_fixture());
    HForm psi = add(c->canonical_form(), c->j(c->sample_translation(7, 2)));
    Connection r = c->right_from_form(psi, 2, true);
    CHECK(check_connection(*c, r, 2, "right_translate").passed());
    CHECK(c->form_of(r) == psi);
}

TEST_CASE("combined connection suite")
{
    for (auto fx : {kc2_fixture(), h4_fixture()}) {
        auto c = connections_of(fx);
        Report r = check_connection_theory(*c, 2, true);
        CHECK(r.passed());
        if (!r.passed())
            MESSAGE(r.text());
        const Check* inv = r.find("connection_form.invalid_rejected");
        REQUIRE(inv);
        CHECK(inv->cases == 3);
        CHECK(r.find("bijection.roundtrips")->cases == 6);
        CHECK(r.find("connection.translate2_right.right_linear"));
    }
}
