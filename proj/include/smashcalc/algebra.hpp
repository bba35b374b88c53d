#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smashcalc/lincomb.hpp"
#include "smashcalc/linear.hpp"

namespace smashcalc {

// An associative algebra with a distinguished basis of words.
// Graded algebras (Presentation, differential graded algebras) report form degrees;
// plain algebras are concentrated in form degree 0.
class Algebra {
public:
    virtual ~Algebra() = default;

    virtual Element mul(const Word& a, const Word& b) const = 0;
    virtual Word unit() const = 0;
    // Basis words of weight <= w (weight = word length for presentations, 0 for tables).
    virtual std::vector<Word> basis_up_to(int w) const = 0;
    virtual int weight(const Word& w) const = 0;
    virtual std::string word_str(const Word& w) const = 0;
    virtual int form_degree(const Word&) const { return 0; }
    // Resolves an identifier used by the expression parser.
    virtual std::optional<Element> lookup(const std::string& name) const = 0;

    Element mul(const Element& a, const Element& b) const;
    Element one() const { return Element::single(unit()); }
    bool is_unit(const Word& w) const { return w == unit(); }
    std::string str(const Element& e) const;
};

// Pretty-printer shared by all key types: terms joined with +/-, coefficients in parser syntax.
std::string format_terms(const std::vector<std::pair<std::string, Scalar>>& terms);

// Finite-dimensional algebra given by structure constants. Keys are one-letter words {i}.
class FdAlgebra : public Algebra {
public:
    FdAlgebra(BasedSpace space, Matrix mult, std::size_t unit_index);

    const BasedSpace& space() const { return space_; }
    const Matrix& mult_matrix() const { return mult_; }  // dim x dim^2, column a*dim+b holds a*b
    std::size_t dim() const { return space_.dim(); }
    std::size_t unit_index() const { return unit_; }

    Element mul(const Word& a, const Word& b) const override;
    using Algebra::mul;
    Word unit() const override { return Word{static_cast<Letter>(unit_)}; }
    std::vector<Word> basis_up_to(int) const override;
    int weight(const Word&) const override { return 0; }
    std::string word_str(const Word& w) const override;
    std::optional<Element> lookup(const std::string& name) const override;

    Vector to_vector(const Element& e) const;
    Element from_vector(const Vector& v) const;
    static Word key(std::size_t i) { return Word{static_cast<Letter>(i)}; }

private:
    BasedSpace space_;
    Matrix mult_;
    std::size_t unit_;
};

}  // namespace smashcalc
