#include "doctest.h"
#include "hopf_support.hpp"

#include "smashcalc/smash.hpp"

using namespace smashcalc;
using testsupport::w;

namespace {

const Word kOne{};
const Word kT{0};

std::shared_ptr<const HAction> kc2_on_dual(const std::shared_ptr<const FdHopf>& h, const std::shared_ptr<const Algebra>& a)
{
    GeneratorAction::Table t{{{Word{1}, 0}, w({0}, -1)}};
    return std::make_shared<GeneratorAction>("kC2 on D", h, a, t);
}

GeneratorAction::Table h4_on_dual_table()
{
    return {{{Word{1}, 0}, w({0}, -1)}, {{Word{2}, 0}, Element::single(Word{})}, {{Word{3}, 0}, Element::single(Word{})}};
}

std::shared_ptr<const HopfForms> degree0(const std::shared_ptr<const FdHopf>& h)
{
    return std::make_shared<HopfForms>(h, nullptr);
}

std::shared_ptr<const HopfForms> universal_forms(const std::shared_ptr<const FdHopf>& h)
{
    return std::make_shared<HopfForms>(h, std::make_shared<UniversalDga>(testsupport::algebra_of(h), 2));
}

Element sk(const Word& a, std::size_t h, const Scalar& c = Scalar(1))
{
    return Element::single(smash_key(a, FdAlgebra::key(h)), c);
}

}  // namespace

TEST_CASE("smash keys round trip")
{
    Word a{0, 0}, h{3};
    auto [x, y] = smash_split(smash_key(a, h));
    CHECK(x == a);
    CHECK(y == h);
    auto [e, f] = smash_split(smash_key(Word{}, Word{}));
    CHECK(e.empty());
    CHECK(f.empty());
    CHECK_THROWS(smash_split(Word{1, 2}));
}

TEST_CASE("k[C2] acting on dual numbers")
{
    auto kc2 = testsupport::kc2_table();
    auto D = testsupport::dual_numbers();
    SmashProduct s(kc2_on_dual(kc2, D), degree0(kc2), 0);
    CHECK(s.forms(1, 0).size() == 4);
    Report r = check_smash(s, 2);
    CHECK(r.passed());
    CHECK(r.find("smash.coinvariants")->dims["coinvariants"] == 2);
    // (1#g)(t#1) = g·t # g = -t#g
    CHECK(s.mul(smash_key(kOne, Word{1}), smash_key(kT, Word{0})) == sk(kT, 1, -1));
    CHECK(s.word_str(smash_key(kT, Word{1})) == "t#g");
}

TEST_CASE("H4 acting on dual numbers")
{
    auto h4 = testsupport::h4_table();
    auto D = testsupport::dual_numbers();
    auto act = std::make_shared<GeneratorAction>("H4 on D", h4, D, h4_on_dual_table());
    SmashProduct s(act, degree0(h4), 0);
    Report r = check_smash(s, 2);
    CHECK(r.passed());
    CHECK(r.find("smash.coinvariants")->dims["coinvariants"] == 2);
    // (1#x)(t#1) = (x·t)#1 + (g·t)#x = 1#1 - t#x
    CHECK(s.mul(smash_key(kOne, Word{2}), smash_key(kT, Word{0})) == sk(kOne, 0) - sk(kT, 2));
    // ρ(t#x) = t#x⊗1 + t#g⊗x
    Tensor2 rho = s.coaction(smash_key(kT, Word{2}));
    Tensor2 expect = Tensor2::single({smash_key(kT, Word{2}), Word{0}}) + Tensor2::single({smash_key(kT, Word{1}), Word{2}});
    CHECK(rho == expect);
}

TEST_CASE("trivial action gives the tensor product algebra")
{
    for (auto h : {testsupport::kc2_table(), testsupport::h4_table()}) {
        auto D = testsupport::dual_numbers();
        auto triv = std::make_shared<TrivialAction>(h, D);
        SmashProduct s(triv, degree0(h), 0);
        CHECK(check_trivial_smash_is_tensor(s, 2).passed());
        CHECK(check_smash(s, 2).passed());
    }
    auto kc2 = testsupport::kc2_table();
    auto D = testsupport::dual_numbers();
    SmashProduct s(kc2_on_dual(kc2, D), degree0(kc2), 0);
    CHECK(!check_trivial_smash_is_tensor(s, 2).passed());
}

TEST_CASE("broken action breaks associativity of the smash product")
{
    auto h4 = testsupport::h4_table();
    auto D = testsupport::dual_numbers();
    auto table = h4_on_dual_table();
    table[{Word{3}, 0}] = Element::single(Word{}, -1);
    auto bad = std::make_shared<GeneratorAction>("H4 on D (gx·t = -1)", h4, D, table);
    SmashProduct s(bad, degree0(h4), 0);
    Report r = check_smash(s, 2);
    CHECK(!r.find("smash.associativity")->passed);
    CHECK(r.find("smash.unit")->passed);
}

TEST_CASE("graded smash product of universal calculi")
{
    auto D = testsupport::dual_numbers();
    auto uD = std::make_shared<UniversalDga>(D, 2);
    Word dt = join_tensor({Word{}, kT});
    {
        auto kc2 = testsupport::kc2_table();
        auto act = diagonal_action(kc2_on_dual(kc2, D), uD);
        SmashProduct s(act, universal_forms(kc2), 2);
        Report r = check_smash_dga(s, 2);
        CHECK(r.passed());
        // (1#dg)(t#1) = (-1)^{1·0} (g·t)#dg = -t#dg
        Word dg = join_tensor({Word{0}, Word{1}});
        CHECK(s.mul(smash_key(kOne, dg), smash_key(kT, Word{0})) == Element::single(smash_key(kT, dg), -1));
        // (1#g)(dt#1) = g·dt # g = -dt#g
        CHECK(s.mul(smash_key(kOne, Word{1}), smash_key(dt, Word{0})) == Element::single(smash_key(dt, Word{1}), -1));
        // d(t#g) = dt#g + t#dg
        CHECK(s.d(smash_key(kT, Word{1})) == Element::single(smash_key(dt, Word{1})) + Element::single(smash_key(kT, dg)));
    }
    {
        auto h4 = testsupport::h4_table();
        auto base = std::make_shared<GeneratorAction>("H4 on D", h4, D, h4_on_dual_table());
        auto act = diagonal_action(base, uD);
        SmashProduct s(act, universal_forms(h4), 2);
        CHECK(check_smash_dga(s, 1).passed());
    }
}

TEST_CASE("functoriality in the module algebra")
{
    auto kc2 = testsupport::kc2_table();
    auto D = testsupport::dual_numbers();
    SmashProduct s(kc2_on_dual(kc2, D), degree0(kc2), 0);
    AlgebraMap two(D, D, {w({0}, 2)});
    AlgebraMap three(D, D, {w({0}, 3)});
    auto f = smash_morphism(two, s, s, 2);
    auto g = smash_morphism(three, s, s, 2);
    CHECK(check_smash_morphism(f, s, s, 2).passed());
    AlgebraMap six = two.then(three);
    CHECK(six(kT) == w({0}, 6));
    auto h = smash_morphism(six, s, s, 2);
    for (const auto& u : s.forms(2, 0)) {
        Element gf;
        for (const auto& [k, c] : f(u))
            gf.add(g(k), c);
        CHECK(h(u) == gf);
    }
    // t ↦ 1 does not respect t·t = 0.
    AlgebraMap unit(D, D, {Element::single(Word{})});
    CHECK_THROWS_AS(smash_morphism(unit, s, s, 2), Error);
    try {
        smash_morphism(unit, s, s, 2);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PreconditionFailed);
    }

    // Scaling is not H4-equivariant because x·t = 1.
    auto h4 = testsupport::h4_table();
    SmashProduct s4(std::make_shared<GeneratorAction>("H4 on D", h4, D, h4_on_dual_table()), degree0(h4), 0);
    try {
        smash_morphism(two, s4, s4, 2);
        FAIL("expected NotEquivariant");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotEquivariant);
    }
}
