#include "doctest.h"
#include "support.hpp"

#include <algorithm>
#include <set>

#include "smashcalc/ncalg.hpp"

using namespace smashcalc;

namespace {

// Quantum plane: precedence y < x, rule x*y -> q*y*x.
std::shared_ptr<Presentation> plane()
{
    std::vector<Generator> gens{{"y", 0}, {"x", 0}};
    Element rhs = Scalar::q() * Element::single(Word{0, 1});
    return std::make_shared<Presentation>(gens, std::vector<Rule>{{Word{1, 0}, rhs}});
}

}  // namespace

TEST_CASE("quantum plane normal forms")
{
    auto p = plane();
    Word x{1}, y{0};
    Scalar q = Scalar::q();
    CHECK(p->mul(x, y) == q * Element::single(Word{0, 1}));
    CHECK(p->normal_form(Word{0, 1}) == Element::single(Word{0, 1}));
    CHECK(p->normal_form(Word{1, 1, 0}) == (q * q) * Element::single(Word{0, 1, 1}));
    CHECK(p->mul(p->one(), Element::single(y)) == Element::single(y));
    CHECK(p->mul(x, x) == Element::single(Word{1, 1}));
    CHECK(p->str(p->normal_form(Word{1, 0})) == "q*y*x");
}

TEST_CASE("basis enumeration")
{
    auto p = plane();
    auto b = p->basis_up_to(2);
    std::set<std::string> names;
    for (const auto& w : b)
        names.insert(p->word_str(w));
    CHECK(names == std::set<std::string>{"1", "x", "y", "x*x", "y*x", "y*y"});
    CHECK(p->basis_up_to(0).size() == 1);
    for (int n = 0; n <= 5; ++n) {
        auto bn = p->basis_up_to(n);
        auto count = std::count_if(bn.begin(), bn.end(), [n](const Word& w) { return static_cast<int>(w.size()) == n; });
        CHECK(count == n + 1);
    }
    Presentation free({{"a", 0}, {"b", 0}}, {});
    CHECK(free.basis_up_to(2).size() == 7);
}

TEST_CASE("orientation and caps")
{
    std::vector<Generator> gens{{"y", 0}, {"x", 0}};
    // x*y -> y*x is decreasing, y*x -> x*y is not
    std::vector<Rule> rules{{Word{1, 0}, Element::single(Word{0, 1})}, {Word{0, 1}, Element::single(Word{1, 0})}};
    try {
        Presentation bad(gens, rules);
        FAIL("expected rejection");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonOrientable);
    }
    auto p = plane();
    CHECK_THROWS_AS(p->normal_form(Word(7, 0)), Error);
    CHECK_THROWS_AS(p->basis_up_to(7), Error);
}

TEST_CASE("confluence audit")
{
    auto p = plane();
    CHECK(p->check_local_confluence(3).empty());
    // x*y -> y, y*y -> x: the overlap x*y*y resolves to y*y -> x vs x*x
    std::vector<Generator> gens{{"y", 0}, {"x", 0}};
    Presentation bad(gens, {{Word{1, 0}, Element::single(Word{0})}, {Word{0, 0}, Element::single(Word{1})}});
    CHECK(!bad.check_local_confluence(3).empty());
}

TEST_CASE("normal form is idempotent and linear on random input")
{
    auto p = plane();
    std::mt19937 rng(3);
    for (int t = 0; t < 100; ++t) {
        Element e, f;
        for (int k = 0; k < 4; ++k) {
            Word w(rng() % 5);
            for (auto& l : w)
                l = static_cast<Letter>(rng() % 2);
            e.add(w, testsupport::random_scalar(rng));
            Word v(rng() % 5);
            for (auto& l : v)
                l = static_cast<Letter>(rng() % 2);
            f.add(v, testsupport::random_scalar(rng));
        }
        Element n = p->normal_form(e);
        CHECK(p->normal_form(n) == n);
        CHECK(p->normal_form(e + f) == n + p->normal_form(f));
        for (const auto& [w, c] : n)
            CHECK(p->is_normal(w));
    }
}
