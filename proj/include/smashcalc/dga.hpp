#pragma once

#include <string>
#include <vector>

#include "smashcalc/algebra.hpp"
#include "smashcalc/report.hpp"

namespace smashcalc {

// Differential graded algebra; form degree comes from Algebra::form_degree.
class Dga : public Algebra {
public:
    virtual Element d(const Word& w) const = 0;
    Element d(const Element& e) const;

    // Basis words of the given form degree and weight <= w.
    std::vector<Word> forms(int w, int form_degree) const;
};

// d² = 0 on basis words of weight <= w, and d(uv) = du·v + (-1)^{|u|} u·dv on basis pairs with
// total weight <= w and total form degree <= max_degree.
Report check_dga(const Dga& a, int w, int max_degree, const std::string& suite, const std::string& prefix);

// Basis words of form degree 0 (the algebra a DGA is built over).
std::vector<Word> degree0_basis(const Algebra& a, int w);

}  // namespace smashcalc
