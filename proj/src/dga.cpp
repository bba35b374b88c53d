#include "smashcalc/dga.hpp"

namespace smashcalc {

Element Dga::d(const Element& e) const
{
    Element out;
    for (const auto& [w, c] : e)
        out.add(d(w), c);
    return out;
}

std::vector<Word> Dga::forms(int w, int form_degree) const
{
    std::vector<Word> out;
    for (auto& x : basis_up_to(w))
        if (this->form_degree(x) == form_degree)
            out.push_back(std::move(x));
    return out;
}

std::vector<Word> degree0_basis(const Algebra& a, int w)
{
    std::vector<Word> out;
    for (auto& x : a.basis_up_to(w))
        if (a.form_degree(x) == 0)
            out.push_back(std::move(x));
    return out;
}

}  // namespace smashcalc

namespace smashcalc {

Report check_dga(const Dga& a, int w, int max_degree, const std::string& suite, const std::string& prefix)
{
    auto words = a.basis_up_to(w);
    Report r;
    r.add(run_cases(suite, prefix + ".d_squared_zero", "d∘d = 0", words.size(), [&](std::size_t k) -> std::optional<std::string> {
        Element dd = a.d(a.d(words[k]));
        if (dd.is_zero())
            return std::nullopt;
        return "u = " + a.word_str(words[k]) + ": d(d(u)) = " + a.str(dd);
    }));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = 0; j < words.size(); ++j)
            if (a.weight(words[i]) + a.weight(words[j]) <= w &&
                a.form_degree(words[i]) + a.form_degree(words[j]) <= max_degree)
                pairs.emplace_back(i, j);
    r.add(run_cases(suite, prefix + ".graded_leibniz", "d(uv) = du·v + (-1)^|u| u·dv", pairs.size(),
                    [&](std::size_t k) -> std::optional<std::string> {
                        const Word& u = words[pairs[k].first];
                        const Word& v = words[pairs[k].second];
                        Element lhs = a.d(a.mul(u, v));
                        Element rhs = a.mul(a.d(u), Element::single(v));
                        rhs.add(a.mul(Element::single(u), a.d(v)), a.form_degree(u) % 2 ? -1 : 1);
                        if (lhs == rhs)
                            return std::nullopt;
                        return "u = " + a.word_str(u) + ", v = " + a.word_str(v) + ": d(uv) = " + a.str(lhs) +
                               ", du·v ± u·dv = " + a.str(rhs);
                    }));
    return r;
}

}  // namespace smashcalc
