#include "doctest.h"
#include "support.hpp"

using namespace smashcalc;
using testsupport::poly;

TEST_CASE("scalar arithmetic cancels to canonical form")
{
    Scalar q = Scalar::q();
    CHECK(q + (Scalar(1) - q) == Scalar(1));
    CHECK(q * q.inv() == Scalar(1));
    CHECK(Scalar::q_pow(-1) == q.inv());
    CHECK((q - q).num().is_zero());
    CHECK((q - q).den() == poly({1}));
}

TEST_CASE("inverse of (q^2-1)/(q-1) reduces to 1/(q+1)")
{
    Scalar a(poly({-1, 0, 1}), poly({-1, 1}));
    // the constructor already cancels the common factor q-1
    CHECK(a.num() == poly({1, 1}));
    CHECK(a.den() == poly({1}));
    Scalar b = a.inv();
    CHECK(b.num() == poly({1}));
    CHECK(b.den() == poly({1, 1}));
}

TEST_CASE("canonical sign and content")
{
    Scalar a(poly({2, 4}), poly({-6}));
    CHECK(a.num() == poly({-1, -2}));
    CHECK(a.den() == poly({3}));
    Scalar b(poly({0, 3}), poly({0, 0, -6}));
    CHECK(b.num() == poly({-1}));
    CHECK(b.den() == poly({0, 2}));
}

TEST_CASE("evaluation and poles")
{
    Scalar q = Scalar::q();
    CHECK((q * q).eval(1) == 1);
    Scalar a(poly({-1, 0, 1}), poly({-1, 1}));
    CHECK(a.eval(2) == 3);
    Scalar pole(poly({1}), poly({-1, 1}));
    CHECK_THROWS_AS(pole.eval(1), Error);
    try {
        pole.eval(1);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PoleAtPoint);
    }
    CHECK_THROWS_AS(Scalar(0).inv(), Error);
}

TEST_CASE("field laws on random triples, and substitution commutes")
{
    std::mt19937 rng(7);
    for (int t = 0; t < 200; ++t) {
        Scalar a = testsupport::random_scalar(rng);
        Scalar b = testsupport::random_scalar(rng);
        Scalar c = testsupport::random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (!a.is_zero())
            CHECK(a * a.inv() == Scalar(1));
        // substituting a rational value commutes with the operations whenever no pole is hit
        for (long pt : {2L, 5L, -3L}) {
            try {
                mpq_class va = a.eval(pt), vb = b.eval(pt);
                CHECK((a * b).eval(pt) == va * vb);
                CHECK((a - b).eval(pt) == va - vb);
            } catch (const Error&) {
            }
        }
    }
}

TEST_CASE("textual form")
{
    Scalar q = Scalar::q();
    CHECK((q * q - Scalar(1)).str() == "q^2-1");
    CHECK(q.inv().str() == "1/q");
    CHECK((Scalar(1) / (Scalar(2) * q)).str() == "1/(2*q)");
    CHECK((q - q.inv()).str() == "(q^2-1)/q");
    CHECK(Scalar(-3).factor_str() == "-3");
    CHECK((q + Scalar(1)).factor_str() == "(q+1)");
}

TEST_CASE("unreduced input is cancelled; cross-multiplication oracle")
{
    Poly n = poly({-1, 1});
    Poly d = poly({-1, 0, 1});
    Scalar s(n, d);
    CHECK(s.num() == poly({1}));
    CHECK(s.den() == poly({1, 1}));
    CHECK(s.num() * d == s.den() * n);
}
