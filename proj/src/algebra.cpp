#include "smashcalc/algebra.hpp"

namespace smashcalc {

Element Algebra::mul(const Element& a, const Element& b) const
{
    Element out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b)
            out.add(mul(wa, wb), ca * cb);
    return out;
}

std::string format_terms(const std::vector<std::pair<std::string, Scalar>>& terms)
{
    if (terms.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [word, c] : terms) {
        std::string t;
        if (word.empty() || word == "1")
            t = c.factor_str();
        else if (c.is_one())
            t = word;
        else if ((-c).is_one())
            t = "-" + word;
        else
            t = c.factor_str() + "*" + word;
        if (first)
            out = t;
        else if (t[0] == '-')
            out += " - " + t.substr(1);
        else
            out += " + " + t;
        first = false;
    }
    return out;
}

std::string Algebra::str(const Element& e) const
{
    std::vector<std::pair<std::string, Scalar>> terms;
    for (const auto& [w, c] : e)
        terms.emplace_back(word_str(w), c);
    return format_terms(terms);
}

FdAlgebra::FdAlgebra(BasedSpace space, Matrix mult, std::size_t unit_index)
    : space_(std::move(space)), mult_(std::move(mult)), unit_(unit_index)
{
    std::size_t n = space_.dim();
    if (mult_.rows() != n || mult_.cols() != n * n)
        throw Error(ErrorKind::DimensionMismatch, "multiplication table shape");
    if (unit_ >= n)
        throw Error(ErrorKind::InvalidArgument, "unit index out of range");
}

Element FdAlgebra::mul(const Word& a, const Word& b) const
{
    std::size_t n = dim();
    std::size_t col = a.at(0) * n + b.at(0);
    Element out;
    for (std::size_t i = 0; i < n; ++i)
        out.add(key(i), mult_(i, col));
    return out;
}

std::vector<Word> FdAlgebra::basis_up_to(int) const
{
    std::vector<Word> out;
    for (std::size_t i = 0; i < dim(); ++i)
        out.push_back(key(i));
    return out;
}

std::string FdAlgebra::word_str(const Word& w) const { return space_.basis.at(w.at(0)); }

std::optional<Element> FdAlgebra::lookup(const std::string& name) const
{
    for (std::size_t i = 0; i < dim(); ++i)
        if (space_.basis[i] == name)
            return Element::single(key(i));
    return std::nullopt;
}

Vector FdAlgebra::to_vector(const Element& e) const
{
    Vector v(dim());
    for (const auto& [w, c] : e)
        v.at(w.at(0)) = c;
    return v;
}

Element FdAlgebra::from_vector(const Vector& v) const
{
    Element e;
    for (std::size_t i = 0; i < v.size(); ++i)
        e.add(key(i), v[i]);
    return e;
}

}  // namespace smashcalc
