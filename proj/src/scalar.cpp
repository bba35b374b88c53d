#include "smashcalc/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace smashcalc {

const char* error_kind_name(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::PoleAtPoint: return "PoleAtPoint";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorKind::NonOrientable: return "NonOrientable";
    case ErrorKind::SingularAntipode: return "SingularAntipode";
    case ErrorKind::NotEquivariant: return "NotEquivariant";
    case ErrorKind::NotBicovariant: return "NotBicovariant";
    case ErrorKind::InconsistentDifferential: return "InconsistentDifferential";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::UnverifiedFormula: return "UnverifiedFormula";
    case ErrorKind::FeatureDisabled: return "FeatureDisabled";
    case ErrorKind::NotInImage: return "NotInImage";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::RelationIncompatible: return "RelationIncompatible";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::GateFailure: return "GateFailure";
    case ErrorKind::TheoremViolation: return "TheoremViolation";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Error";
}

// ---------------------------------------------------------------- Poly

Poly::Poly(const mpz_class& c)
{
    if (c != 0)
        c_.push_back(c);
}

Poly::Poly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const mpz_class& c, int exponent)
{
    Poly p;
    if (c == 0)
        return p;
    p.c_.assign(static_cast<std::size_t>(exponent) + 1, mpz_class(0));
    p.c_.back() = c;
    return p;
}

void Poly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

int Poly::order() const
{
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0)
            return static_cast<int>(i);
    return -1;
}

std::size_t Poly::term_count() const
{
    return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](const mpz_class& x) { return x != 0; }));
}

bool Poly::is_monomial() const { return term_count() == 1; }

mpz_class Poly::content() const
{
    mpz_class g = 0;
    for (const auto& x : c_) {
        if (x == 0)
            continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

Poly Poly::operator-() const
{
    Poly r = *this;
    for (auto& x : r.c_)
        x = -x;
    return r;
}

Poly operator+(const Poly& a, const Poly& b)
{
    const Poly& big = a.c_.size() >= b.c_.size() ? a : b;
    const Poly& small = a.c_.size() >= b.c_.size() ? b : a;
    Poly r = big;
    for (std::size_t i = 0; i < small.c_.size(); ++i)
        r.c_[i] += small.c_[i];
    r.trim();
    return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b)
{
    Poly r;
    if (a.is_zero() || b.is_zero())
        return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (b.c_[j] != 0)
                r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

Poly Poly::scaled(const mpz_class& s) const
{
    if (s == 0)
        return Poly();
    Poly r = *this;
    for (auto& x : r.c_)
        x *= s;
    return r;
}

Poly Poly::divexact(const mpz_class& s) const
{
    Poly r = *this;
    for (auto& x : r.c_)
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), s.get_mpz_t());
    return r;
}

Poly Poly::divexact(const Poly& b) const
{
    if (b.is_zero())
        throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    if (b.is_constant())
        return divexact(b.c_[0]);
    Poly rem = *this;
    if (rem.is_zero())
        return rem;
    std::vector<mpz_class> quot(static_cast<std::size_t>(std::max(0, rem.degree() - b.degree() + 1)), mpz_class(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        mpz_class t;
        if (!mpz_divisible_p(rem.lc().get_mpz_t(), b.lc().get_mpz_t()))
            throw Error(ErrorKind::InvalidArgument, "inexact polynomial division");
        mpz_divexact(t.get_mpz_t(), rem.lc().get_mpz_t(), b.lc().get_mpz_t());
        quot[static_cast<std::size_t>(shift)] = t;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            rem.c_[j + static_cast<std::size_t>(shift)] -= t * b.c_[j];
        rem.trim();
    }
    if (!rem.is_zero())
        throw Error(ErrorKind::InvalidArgument, "inexact polynomial division");
    return Poly(std::move(quot));
}

Poly Poly::primitive() const
{
    if (is_zero())
        return *this;
    mpz_class g = content();
    if (lc() < 0)
        g = -g;
    return g == 1 ? *this : divexact(g);
}

mpq_class Poly::eval(const mpq_class& x) const
{
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + mpq_class(*it);
    return acc;
}

bool operator<(const Poly& a, const Poly& b)
{
    if (a.c_.size() != b.c_.size())
        return a.c_.size() < b.c_.size();
    for (std::size_t i = a.c_.size(); i-- > 0;)
        if (a.c_[i] != b.c_[i])
            return a.c_[i] < b.c_[i];
    return false;
}

std::string Poly::str() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const mpz_class& c = c_[i];
        if (c == 0)
            continue;
        mpz_class a = abs(c);
        if (c < 0)
            os << '-';
        else if (!first)
            os << '+';
        first = false;
        if (i == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1)
            os << a.get_str() << '*';
        os << 'q';
        if (i > 1)
            os << '^' << i;
    }
    return os.str();
}

namespace {

Poly pseudo_rem(Poly a, const Poly& b)
{
    while (!a.is_zero() && a.degree() >= b.degree()) {
        int shift = a.degree() - b.degree();
        mpz_class la = a.lc();
        a = a.scaled(b.lc()) - Poly::monomial(la, shift) * b;
    }
    return a;
}

Poly with_positive_lc(const Poly& p) { return (!p.is_zero() && p.lc() < 0) ? -p : p; }

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b)
{
    if (a.is_zero())
        return with_positive_lc(b);
    if (b.is_zero())
        return with_positive_lc(a);
    mpz_class ca = a.content();
    mpz_class cb = b.content();
    mpz_class c;
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    if (a.is_constant() || b.is_constant())
        return Poly(c);
    if (a.is_monomial() || b.is_monomial())
        return Poly::monomial(c, std::min(a.order(), b.order()));
    Poly p = a.primitive();
    Poly r = b.primitive();
    if (p.degree() < r.degree())
        std::swap(p, r);
    while (true) {
        Poly rem = pseudo_rem(p, r);
        if (rem.is_zero())
            break;
        if (rem.is_constant()) {
            r = Poly(mpz_class(1));
            break;
        }
        p = std::move(r);
        r = rem.primitive();
    }
    return with_positive_lc(r.primitive().scaled(c));
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar() : den_(mpz_class(1)) {}

Scalar::Scalar(long n) : num_(mpz_class(n)), den_(mpz_class(1)) {}

Scalar::Scalar(const mpz_class& n) : num_(n), den_(mpz_class(1)) {}

Scalar::Scalar(const mpq_class& r) : num_(r.get_num()), den_(r.get_den()) {}

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }

Scalar Scalar::q() { return Scalar(Poly::monomial(1, 1), Poly(mpz_class(1)), Canonical{}); }

Scalar Scalar::q_pow(int e)
{
    if (e >= 0)
        return Scalar(Poly::monomial(1, e), Poly(mpz_class(1)), Canonical{});
    return Scalar(Poly(mpz_class(1)), Poly::monomial(1, -e), Canonical{});
}

void Scalar::canonicalize()
{
    if (den_.is_zero())
        throw Error(ErrorKind::DivisionByZero, "zero denominator");
    if (num_.is_zero()) {
        den_ = Poly(mpz_class(1));
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (!(g.is_constant() && g.coeffs()[0] == 1)) {
        num_ = num_.divexact(g);
        den_ = den_.divexact(g);
    }
    if (den_.lc() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

bool Scalar::is_one() const
{
    return num_.is_constant() && !num_.is_zero() && num_.coeffs()[0] == 1 && den_.is_constant() &&
           den_.coeffs()[0] == 1;
}

Scalar Scalar::operator-() const { return Scalar(-num_, den_, Canonical{}); }

Scalar operator+(const Scalar& a, const Scalar& b)
{
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    if (a.den_ == b.den_) {
        if (a.den_.is_constant() && a.den_.coeffs()[0] == 1)
            return Scalar(a.num_ + b.num_, a.den_, Scalar::Canonical{});
        return Scalar(a.num_ + b.num_, a.den_);
    }
    return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b)
{
    if (a.is_zero() || b.is_zero())
        return Scalar();
    bool a_poly = a.den_.is_constant() && a.den_.coeffs()[0] == 1;
    bool b_poly = b.den_.is_constant() && b.den_.coeffs()[0] == 1;
    if (a_poly && b_poly)
        return Scalar(a.num_ * b.num_, a.den_, Scalar::Canonical{});
    Poly g1 = poly_gcd(a.num_, b.den_);
    Poly g2 = poly_gcd(b.num_, a.den_);
    Poly n = a.num_.divexact(g1) * b.num_.divexact(g2);
    Poly d = a.den_.divexact(g2) * b.den_.divexact(g1);
    if (d.lc() < 0) {
        n = -n;
        d = -d;
    }
    return Scalar(std::move(n), std::move(d), Scalar::Canonical{});
}

Scalar Scalar::inv() const
{
    if (is_zero())
        throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    if (num_.lc() < 0)
        return Scalar(-den_, -num_, Canonical{});
    return Scalar(den_, num_, Canonical{});
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }

Scalar Scalar::pow(int e) const
{
    Scalar base = e >= 0 ? *this : inv();
    Scalar acc(1);
    for (int i = 0; i < std::abs(e); ++i)
        acc *= base;
    return acc;
}

mpq_class Scalar::eval(const mpq_class& point) const
{
    mpq_class d = den_.eval(point);
    if (d == 0)
        throw Error(ErrorKind::PoleAtPoint, str() + " at q=" + point.get_str());
    mpq_class r = num_.eval(point) / d;
    r.canonicalize();
    return r;
}

std::size_t Scalar::complexity() const
{
    std::size_t size = 0;
    for (const auto& c : num_.coeffs())
        size += mpz_size(c.get_mpz_t());
    for (const auto& c : den_.coeffs())
        size += mpz_size(c.get_mpz_t());
    return static_cast<std::size_t>(num_.degree() + 1 + den_.degree()) * 64 + size;
}

bool operator<(const Scalar& a, const Scalar& b)
{
    if (!(a.num_ == b.num_))
        return a.num_ < b.num_;
    return a.den_ < b.den_;
}

std::string Scalar::str() const
{
    std::string n = num_.str();
    if (den_.is_constant() && den_.coeffs()[0] == 1)
        return n;
    if (num_.term_count() > 1)
        n = "(" + n + ")";
    std::string d = den_.str();
    if (den_.term_count() > 1 || d.find('*') != std::string::npos)
        d = "(" + d + ")";
    return n + "/" + d;
}

std::string Scalar::factor_str() const
{
    bool atom = den_.is_constant() && den_.coeffs()[0] == 1 && num_.term_count() <= 1;
    return atom ? str() : "(" + str() + ")";
}

}  // namespace smashcalc
