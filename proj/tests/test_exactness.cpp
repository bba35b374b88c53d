#include "doctest.h"
#include "hopf_support.hpp"
#include "smash_fixtures.hpp"

#include "smashcalc/exactness.hpp"
#include "smashcalc/standard.hpp"

using namespace smashcalc;
using testsupport::w;

using namespace testsupport::smash_fixtures;

TEST_CASE("standard first order calculus on A#H")
{
    for (auto fx : {kc2_fixture(), h4_fixture(), kc2_fixture(true)}) {
        StandardFodc f(fx.s);
        Report r = check_standard_fodc(f, 2);
        CHECK(r.passed());
        if (!r.passed())
            MESSAGE(r.text());
    }
    auto fx = kc2_fixture();
    StandardFodc f(fx.s);
    const SmashProduct& s = *fx.s;
    Word one{}, t{0}, dt = join_tensor({Word{}, t});
    Word e{0}, g{1}, dg = join_tensor({e, g});
    // (t#1)D(t#1)(1#g) = t·dt # g
    Element x = f.right(f.left(smash_key(t, e), smash_key(dt, e)), Element::single(smash_key(one, g)));
    CHECK(x == Element::single(smash_key(join_tensor({t, t}), g)));
    // (t#g)D(1#g) = t#g·dg
    CHECK(f.left(smash_key(t, g), smash_key(one, dg)) == s.pair(Element::single(t), s.fiber_forms().mul(g, dg)));
    CHECK(f.D(smash_key(one, e)).is_zero());
    CHECK(f.D(smash_key(t, e)) == Element::single(smash_key(dt, e)));
}

TEST_CASE("trivial action smash calculus equals the tensor product calculus")
{
    for (auto fx : {kc2_fixture(true), h4_fixture(true)}) {
        auto t = std::make_shared<TensorProductDga>(fx.forms_a, std::make_shared<UniversalDga>(testsupport::algebra_of(fx.h), 2));
        Report r = check_trivial_smash_calculus(*fx.s, *t, 2);
        CHECK(r.passed());
        CHECK(check_dga(*t, 2, 2, "tensor", "tensor").passed());
    }
    auto fx = kc2_fixture(false);
    auto t = std::make_shared<TensorProductDga>(fx.forms_a, std::make_shared<UniversalDga>(testsupport::algebra_of(fx.h), 2));
    CHECK(!check_trivial_smash_calculus(*fx.s, *t, 2).find("tensor_calculus.product_table")->passed);
}

TEST_CASE("tensor product keys")
{
    Word k = TensorProductDga::key(Word{}, Word{0xFFFF, 2});
    auto [a, b] = TensorProductDga::split(k);
    CHECK(a.empty());
    CHECK(b == Word{0xFFFF, 2});
    CHECK_THROWS(TensorProductDga::split(Word{5, 1}));
}

TEST_CASE("graded smash calculus on the fixtures")
{
    CHECK(check_smash_dga(*kc2_fixture().s, 2).passed());
    CHECK(check_smash_dga(*h4_fixture().s, 1).passed());
}

TEST_CASE("cotensor products")
{
    auto h = testsupport::h4_table();
    const Algebra& H = h->algebra();
    auto basis = H.basis_up_to(0);
    CoactFn delta = [&](const Word& x) { return h->comult(x); };
    // V = H with trivial right coaction: V□H = V⊗(left coinvariants of H) = V⊗k1.
    CoactFn trivial_right = [&](const Word& v) { return Tensor2::single({v, H.unit()}); };
    std::vector<WordPair> amb;
    for (const auto& a : basis)
        for (const auto& b : basis)
            amb.emplace_back(a, b);
    CHECK(cotensor(amb, trivial_right, delta).dim() == 4);
    // W = H with λ = Δ and V = H with ρ = Δ: V□H ≅ V via v ↦ v₁⊗v₂, inverse id⊗ε.
    Cotensor c = cotensor(amb, delta, delta);
    CHECK(c.dim() == 4);
    for (const auto& v : basis) {
        Tensor2 t = h->comult(v);
        CHECK(satisfies_cotensor(t, delta, delta));
        Element back;
        for (const auto& [k, x] : t)
            back.add(k.first, x * h->counit(k.second));
        CHECK(back == Element::single(v));
    }
    CHECK(!satisfies_cotensor(Tensor2::single({Word{2}, Word{0}}), delta, delta));
    CHECK(cotensor({}, delta, delta).dim() == 0);
}

TEST_CASE("short exact sequences")
{
    for (auto fx : {kc2_fixture(), h4_fixture(), kc2_fixture(true)})
        for (int deg : {1, 2}) {
            ExactSequences e(fx.s);
            Report r = check_short_exact(e, deg);
            CHECK(r.passed());
            if (!r.passed())
                MESSAGE(r.text());
            std::string tag = "_w" + std::to_string(deg);
            CHECK(r.find("exactness.kernel_equals_image_left" + tag)->dims["kernel"] == e.horizontal(deg).size());
        }
    auto fx = kc2_fixture();
    ExactSequences e(fx.s);
    // π¹(ω#h) = 0, π¹(t#dg) = t#g⊗dg
    Word t{0}, dt = join_tensor({Word{}, t}), g{1}, dg = join_tensor({Word{0}, g});
    CHECK(e.pi1(Element::single(smash_key(dt, g))).is_zero());
    CHECK(e.pi1(Element::single(smash_key(t, dg))) == Tensor2::single({smash_key(t, g), dg}));
    CHECK(check_short_exact(e, 2).find("exactness.pi1_surjective_w2")->dims["cotensor"] == 4);
}

TEST_CASE("mutated inverse antipode breaks the left triangle inverse")
{
    auto fx = h4_fixture();
    auto bad_h = std::make_shared<FdHopf>(fx.h->with_antipode(2, Element::single(Word{3})));
    auto gx = make(bad_h,
                   {{{Word{1}, 0}, w({0}, -1)}, {{Word{2}, 0}, Element::single(Word{})}, {{Word{3}, 0}, Element::single(Word{})}});
    ExactSequences e(gx.s);
    Report r = check_short_exact(e, 2);
    CHECK(!r.find("exactness.alpha_left_inverse_w2")->passed);
}
