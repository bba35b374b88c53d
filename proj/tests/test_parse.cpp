#include "doctest.h"
#include "smash_fixtures.hpp"
#include "support.hpp"

#include <random>

#include "smashcalc/errors.hpp"
#include "smashcalc/frt.hpp"
#include "smashcalc/parse.hpp"

using namespace smashcalc;
using testsupport::w;

namespace {

std::shared_ptr<Presentation> plane()
{
    return std::make_shared<Presentation>(std::vector<Generator>{{"y", 0}, {"x", 0}},
                                          std::vector<Rule>{{Word{1, 0}, w({0, 1}, Scalar::q())}});
}

ErrorKind kind_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InvalidArgument;
}

Element random_normal(const Algebra& a, int weight, std::mt19937& rng)
{
    auto basis = a.basis_up_to(weight);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<int> terms(0, 4);
    Element e;
    for (int k = terms(rng); k > 0; --k)
        e.add(basis[pick(rng)], testsupport::random_scalar(rng));
    return e;
}

}  // namespace

TEST_CASE("quantum plane expressions")
{
    auto p = plane();
    Scalar q = Scalar::q();
    CHECK(parse_expression("x*y", *p) == w({0, 1}, q));
    Element e = parse_expression("q*x*y - y*x", *p);
    CHECK(e == w({0, 1}, q * q - 1));
    CHECK(p->str(e) == "(q^2-1)*y*x");
    CHECK(parse_expression("x^2*y", *p) == w({0, 1, 1}, q * q));
    CHECK(parse_expression("(x + y)*(x - y)", *p) == w({1, 1}) - w({0, 0}) + w({0, 1}, 1 - q));
    CHECK(parse_expression("0", *p).is_zero());
    CHECK(parse_expression("x/q", *p) == w({1}, Scalar::q_pow(-1)));
    CHECK(parse_expression("  - 2 * y ", *p) == w({0}, -2));
}

TEST_CASE("scalar literals")
{
    Scalar q = Scalar::q();
    CHECK(parse_scalar("q^-1") == q.inv());
    CHECK(parse_scalar("(q^2-1)/(q+1)") == q - 1);
    CHECK(parse_scalar("-3/6") == Scalar(mpq_class(-1, 2)));
    CHECK(parse_scalar("q^0") == Scalar(1));
    std::mt19937 rng(11);
    for (int i = 0; i < 200; ++i) {
        Scalar s = testsupport::random_scalar(rng);
        CHECK(parse_scalar(s.str()) == s);
        CHECK(parse_scalar(s.factor_str()) == s);
    }
    CHECK(kind_of([] { parse_scalar("1/(q-q)"); }) == ErrorKind::DivisionByZero);
    CHECK(kind_of([] { parse_scalar("x"); }) == ErrorKind::UnknownGenerator);
}

TEST_CASE("errors carry the offset")
{
    auto p = plane();
    CHECK(kind_of([&] { parse_expression("x*z", *p); }) == ErrorKind::UnknownGenerator);
    try {
        parse_expression("x*(y + ", *p);
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SyntaxError);
        CHECK(std::string(e.what()).find("offset 7") != std::string::npos);
    }
    try {
        parse_expression("x y", *p);
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("offset 2") != std::string::npos);
    }
    CHECK(kind_of([&] { parse_expression("x/y", *p); }) == ErrorKind::SyntaxError);
    CHECK(kind_of([&] { parse_expression("x^-1", *p); }) == ErrorKind::SyntaxError);
    CHECK(kind_of([&] { parse_expression("d(x)", *p); }) == ErrorKind::SyntaxError);
    CHECK(kind_of([&] { parse_expression("x#y", *p); }) == ErrorKind::SyntaxError);
    CHECK(kind_of([&] { parse_expression("", *p); }) == ErrorKind::SyntaxError);
    CHECK(kind_of([&] { parse_expression("x)", *p); }) == ErrorKind::SyntaxError);
}

TEST_CASE("differentials expand by the Leibniz rule")
{
    auto in = standard_frt_input();
    const PresentedDga& c = *in.forms;
    Element x = c.presentation().gen("x"), y = c.presentation().gen("y");
    Element expect = c.mul(c.d(x), y) + c.mul(x, c.d(y));
    CHECK(parse_expression("d(x*y)", c) == expect);
    CHECK(parse_expression("d(x)*y + x*d(y)", c) == expect);
    CHECK(parse_expression("d(d(x))", c).is_zero());
    CHECK(parse_expression("d(x*y - q*y*x)", c).is_zero());
}

TEST_CASE("smash pairs")
{
    auto fx = testsupport::smash_fixtures::kc2_fixture();
    const SmashProduct& s = *fx.s;
    Word t{0}, dt = join_tensor({Word{}, t}), e{0}, g{1}, dg = join_tensor({e, g});
    CHECK(parse_expression("t#g", s) == Element::single(smash_key(t, g)));
    CHECK(parse_expression("t", s) == Element::single(smash_key(t, e)));
    CHECK(parse_expression("g*t", s) == Element::single(smash_key(t, g), Scalar(-1)));
    CHECK(parse_expression("d(t)#g*d(g)", s) == s.pair(Element::single(dt), s.fiber_forms().mul(g, dg)));
    CHECK(parse_expression("d(t#g)", s) == s.d(smash_key(t, g)));
    CHECK(kind_of([&] { parse_expression("t#g#g", s); }) == ErrorKind::SyntaxError);
}

TEST_CASE("print then parse is the identity on normal forms")
{
    auto frt = build_frt(standard_frt_input());
    auto fx = testsupport::smash_fixtures::h4_fixture();
    auto p = plane();
    std::vector<std::pair<const Algebra*, int>> cases{
        {p.get(), 4},         {frt.input.forms.get(), 3}, {&frt.ar->algebra(), 3}, {&fx.h->algebra(), 0},
        {fx.s.get(), 2},      {fx.forms_a.get(), 2},      {frt.smash.get(), 2},    {frt.calculus.get(), 2},
    };
    std::mt19937 rng(5);
    for (const auto& [a, weight] : cases)
        for (int i = 0; i < 40; ++i) {
            Element e = random_normal(*a, weight, rng);
            std::string s = a->str(e);
            Element back = parse_expression(s, *a);
            CHECK_MESSAGE(back == e, s);
        }
}

TEST_CASE("normal form is idempotent on random elements")
{
    auto frt = build_frt(standard_frt_input());
    std::vector<const Presentation*> ps{frt.input.plane.get(), &frt.input.forms->presentation(),
                                        &frt.ar->presentation()};
    std::mt19937 rng(17);
    std::size_t checked = 0;
    for (int i = 0; i < 1000; ++i) {
        const Presentation& p = *ps[static_cast<std::size_t>(i) % ps.size()];
        std::uniform_int_distribution<Letter> letter(0, static_cast<Letter>(p.generators().size() - 1));
        std::uniform_int_distribution<int> len(0, 4), terms(1, 3);
        Element e;
        for (int k = terms(rng); k > 0; --k) {
            Word word(static_cast<std::size_t>(len(rng)));
            for (auto& l : word)
                l = letter(rng);
            e.add(word, testsupport::random_scalar(rng));
        }
        Element n = p.normal_form(e);
        CHECK(p.normal_form(n) == n);
        for (const auto& [word, c] : n)
            CHECK(p.is_normal(word));
        ++checked;
    }
    CHECK(checked == 1000);
}
