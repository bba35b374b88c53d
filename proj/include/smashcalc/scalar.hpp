#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "smashcalc/errors.hpp"

namespace smashcalc {

// Integer polynomial in q, dense, no trailing zero coefficients. Zero is empty.
class Poly {
public:
    Poly() = default;
    explicit Poly(const mpz_class& c);
    explicit Poly(std::vector<mpz_class> coeffs);
    static Poly monomial(const mpz_class& c, int exponent);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    int order() const;  // lowest exponent with nonzero coefficient
    const mpz_class& lc() const { return c_.back(); }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    std::size_t term_count() const;
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monomial() const;
    mpz_class content() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(const mpz_class& s) const;
    Poly divexact(const mpz_class& s) const;
    Poly divexact(const Poly& b) const;  // b must divide exactly in Z[q]
    Poly primitive() const;
    mpq_class eval(const mpq_class& x) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator<(const Poly& a, const Poly& b);

    std::string str() const;

private:
    void trim();
    std::vector<mpz_class> c_;
};

Poly poly_gcd(const Poly& a, const Poly& b);

// Element of Q(q) in canonical form: gcd(num, den) = 1 in Z[q], lc(den) > 0, zero is 0/1.
class Scalar {
public:
    Scalar();
    Scalar(long n);  // NOLINT(implicit)
    explicit Scalar(const mpz_class& n);
    explicit Scalar(const mpq_class& r);
    Scalar(Poly num, Poly den);

    static Scalar q();
    static Scalar q_pow(int e);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_integer() const { return den_.is_constant() && num_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar inv() const;
    Scalar pow(int e) const;

    // Exact value at q = point. Throws PoleAtPoint.
    mpq_class eval(const mpq_class& point) const;
    // Constant Scalar obtained by substituting q = point.
    Scalar specialize(const mpq_class& point) const { return Scalar(eval(point)); }

    // Size used for pivot selection: smaller is cheaper.
    std::size_t complexity() const;

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend bool operator<(const Scalar& a, const Scalar& b);

    // Textual form p(q)/r(q) accepted by the expression parser.
    std::string str() const;
    // Same but wrapped in parentheses whenever it is not a single signed atom.
    std::string factor_str() const;

private:
    struct Canonical {};
    Scalar(Poly num, Poly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
    void canonicalize();

    Poly num_;
    Poly den_;
};

}  // namespace smashcalc
