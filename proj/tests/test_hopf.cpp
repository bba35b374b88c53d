#include "doctest.h"
#include "hopf_support.hpp"

#include <set>

using namespace smashcalc;
using testsupport::w;

namespace {

std::set<std::string> failed_axioms(const Report& r)
{
    std::set<std::string> out;
    for (const auto& c : r.checks())
        if (!c.passed)
            out.insert(c.name.substr(c.name.find('.') + 1));
    return out;
}

// Closed forms for H4 on the basis g^a x^b, index 2b + a: 1, g, x, gx.
std::size_t h4_index(int a, int b) { return static_cast<std::size_t>(2 * b + a); }

}  // namespace

TEST_CASE("k[C2] and H4 tables pass every axiom")
{
    for (auto b : {testsupport::kc2_presented(), testsupport::h4_presented()}) {
        Report pr = check_presented_bialgebra(*b, 3);
        CHECK(pr.passed());
        FdHopf h = fd_from_presented(*b);
        Report r = verify_fd_hopf(h);
        CHECK(r.passed());
        CHECK(r.checks().size() == 7);
        CHECK_NOTHROW(require_fd_hopf(h));
    }
}

TEST_CASE("H4 table matches the closed-form oracle")
{
    FdHopf h = fd_from_presented(*testsupport::h4_presented());
    REQUIRE(h.dim() == 4);
    CHECK(h.space().basis == std::vector<std::string>{"1", "g", "x", "gx"});
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d) {
                    Element expect;
                    if (b + d < 2)
                        expect = Element::single(FdAlgebra::key(h4_index((a + c) % 2, b + d)), (b * c) % 2 ? -1 : 1);
                    CHECK(h.fd().mul(FdAlgebra::key(h4_index(a, b)), FdAlgebra::key(h4_index(c, d))) == expect);
                }
    for (int a = 0; a < 2; ++a) {
        auto ga = FdAlgebra::key(h4_index(a, 0));
        auto gax = FdAlgebra::key(h4_index(a, 1));
        auto ga1 = FdAlgebra::key(h4_index((a + 1) % 2, 0));
        CHECK(h.comult(ga) == Tensor2::single({ga, ga}));
        CHECK(h.comult(gax) == Tensor2::single({gax, ga}) + Tensor2::single({ga1, gax}));
        CHECK(h.counit(ga) == Scalar(1));
        CHECK(h.counit(gax) == Scalar(0));
    }
    // S(g) = g, S(x) = -gx, S(gx) = x; S^-1(x) = -xg = gx.
    CHECK(h.antipode(FdAlgebra::key(1)) == Element::single(FdAlgebra::key(1)));
    CHECK(h.antipode(FdAlgebra::key(2)) == Element::single(FdAlgebra::key(3), -1));
    CHECK(h.antipode(FdAlgebra::key(3)) == Element::single(FdAlgebra::key(2)));
    REQUIRE(h.has_antipode_inverse());
    CHECK(h.antipode_inverse(FdAlgebra::key(2)) == Element::single(FdAlgebra::key(3)));
    CHECK(h.antipode(h.antipode_inverse(FdAlgebra::key(3))) == Element::single(FdAlgebra::key(3)));
}

TEST_CASE("presented H4 coproduct and Sweedler expansion")
{
    auto b = testsupport::h4_presented();
    CHECK(b->str2(b->comult(Word{1})) == "g⊗x + x⊗1");
    // Δ(gx) = gx⊗g + 1⊗gx
    CHECK(b->comult(Word{0, 1}) == Tensor2::single({Word{0, 1}, Word{0}}) + Tensor2::single({Word{}, Word{0, 1}}));
    CHECK(b->sweedler_expand(w({0}), 2) == Element::single(join_tensor({Word{0}, Word{0}, Word{0}})));
    CHECK(b->sweedler_expand(w({1}), 1) == Element::single(join_tensor({Word{1}, Word{}})) +
                                                Element::single(join_tensor({Word{0}, Word{1}})));
    CHECK(b->antipode(w({0, 1})) == w({1}));
    CHECK(b->counit(w({0, 1}) + w({0}, 3)) == Scalar(3));
}

TEST_CASE("mutated tables fail the corrupted axiom")
{
    FdHopf kc2 = fd_from_presented(*testsupport::kc2_presented());
    FdHopf h4 = fd_from_presented(*testsupport::h4_presented());

    SUBCASE("antipode S(x) = x")
    {
        FdHopf m = h4.with_antipode(2, Element::single(FdAlgebra::key(2)));
        CHECK(failed_axioms(verify_fd_hopf(m)) == std::set<std::string>{"antipode"});
        CHECK_THROWS_WITH_AS(require_fd_hopf(m), doctest::Contains("verify_fd_hopf.antipode"), Error);
    }
    SUBCASE("coproduct g -> g⊗1 breaks the counit law")
    {
        FdHopf m = kc2.with_comult(1, Tensor2::single({FdAlgebra::key(1), FdAlgebra::key(0)}));
        auto failed = failed_axioms(verify_fd_hopf(m));
        CHECK(failed.count("counit"));
        CHECK(!failed.count("coassociativity"));
        CHECK(!failed.count("associativity"));
    }
    SUBCASE("commuting x and g breaks associativity")
    {
        FdHopf m = h4.with_product(2, 1, Element::single(FdAlgebra::key(3)));
        auto failed = failed_axioms(verify_fd_hopf(m));
        CHECK(failed.count("associativity"));
        CHECK(!failed.count("coassociativity"));
    }
    SUBCASE("counit g -> 0")
    {
        FdHopf m = kc2.with_counit(1, Scalar(0));
        CHECK(failed_axioms(verify_fd_hopf(m)) == std::set<std::string>{"counit", "counit_algebra_map", "antipode"});
    }
    SUBCASE("coproduct x -> x⊗1 + x⊗g breaks coassociativity")
    {
        FdHopf m = h4.with_comult(2, Tensor2::single({FdAlgebra::key(2), FdAlgebra::key(0)}) +
                                         Tensor2::single({FdAlgebra::key(2), FdAlgebra::key(1)}));
        CHECK(failed_axioms(verify_fd_hopf(m)).count("coassociativity"));
    }
}

TEST_CASE("singular antipode is reported")
{
    FdHopf h4 = fd_from_presented(*testsupport::h4_presented());
    FdHopf m = h4.with_antipode(2, Element());
    CHECK(!m.has_antipode_inverse());
    CHECK_THROWS_AS(m.antipode_inverse_map(), Error);
}

TEST_CASE("failure witnesses name the basis input")
{
    FdHopf h4 = fd_from_presented(*testsupport::h4_presented());
    Report r = verify_fd_hopf(h4.with_antipode(2, Element::single(FdAlgebra::key(2))));
    const Check* c = r.find("verify_fd_hopf.antipode");
    REQUIRE(c);
    REQUIRE(!c->witnesses.empty());
    CHECK(c->witnesses.front().find("input x") == 0);
}
