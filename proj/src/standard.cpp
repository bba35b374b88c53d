#include "smashcalc/standard.hpp"

#include <set>

namespace smashcalc {

namespace {

using Witness = std::optional<std::string>;

Element smash_of(const Element& a, const Element& h)
{
    Element out;
    for (const auto& [x, c] : a)
        for (const auto& [y, e] : h)
            out.add(smash_key(x, y), c * e);
    return out;
}

}  // namespace

StandardFodc::StandardFodc(std::shared_ptr<const SmashProduct> s) : s_(std::move(s))
{
    base_dga();
    fiber_dga();
}

const Dga& StandardFodc::base_dga() const
{
    auto* d = dynamic_cast<const Dga*>(&s_->base());
    if (!d)
        throw Error(ErrorKind::PreconditionFailed, "the module algebra carries no calculus");
    return *d;
}

const Dga& StandardFodc::fiber_dga() const
{
    const UniversalDga* d = s_->fiber().dga();
    if (!d)
        throw Error(ErrorKind::PreconditionFailed, "the Hopf algebra carries no calculus");
    return *d;
}

Element StandardFodc::mul0(const Word& u, const Word& v) const
{
    const Algebra& A = s_->base();
    const Bialgebra& H = s_->fiber().hopf();
    auto [a, h] = smash_split(u);
    auto [b, g] = smash_split(v);
    Element out;
    for (const auto& [hh, c] : H.comult(h))
        out.add(smash_of(A.mul(Element::single(a), s_->action().act(hh.first, b)), H.algebra().mul(hh.second, g)), c);
    return out;
}

Element StandardFodc::D(const Word& u) const
{
    auto [a, h] = smash_split(u);
    return smash_of(base_dga().d(a), Element::single(h)) + smash_of(Element::single(a), fiber_dga().d(h));
}

Element StandardFodc::D(const Element& u) const
{
    Element out;
    for (const auto& [k, c] : u)
        out.add(D(k), c);
    return out;
}

Element StandardFodc::left(const Word& u, const Word& form) const
{
    const Algebra& A = s_->base();
    const Algebra& F = s_->fiber_forms();
    const Bialgebra& H = s_->fiber().hopf();
    auto [a, h] = smash_split(u);
    auto [x, y] = smash_split(form);
    Element out;
    for (const auto& [hh, c] : H.comult(h))
        out.add(smash_of(A.mul(Element::single(a), s_->action().act(hh.first, x)), F.mul(hh.second, y)), c);
    return out;
}

Element StandardFodc::right(const Word& form, const Word& u) const
{
    const Algebra& A = s_->base();
    const Algebra& F = s_->fiber_forms();
    const Bialgebra& H = s_->fiber().hopf();
    auto [x, y] = smash_split(form);
    auto [a, h] = smash_split(u);
    Element out;
    if (A.form_degree(x) == 1) {
        for (const auto& [gg, c] : H.comult(y))
            out.add(smash_of(A.mul(Element::single(x), s_->action().act(gg.first, a)), F.mul(gg.second, h)), c);
        return out;
    }
    for (const auto& [xi, c] : s_->fiber().left_coact(y))
        out.add(smash_of(A.mul(Element::single(x), s_->action().act(xi.first, a)), F.mul(xi.second, h)), c);
    return out;
}

Element StandardFodc::left(const Element& u, const Element& form) const
{
    Element out;
    for (const auto& [k, c] : u)
        for (const auto& [f, e] : form)
            out.add(left(k, f), c * e);
    return out;
}

Element StandardFodc::right(const Element& form, const Element& u) const
{
    Element out;
    for (const auto& [f, e] : form)
        for (const auto& [k, c] : u)
            out.add(right(f, k), c * e);
    return out;
}

Report check_standard_fodc(const StandardFodc& f, int w, const std::string& suite)
{
    const SmashProduct& s = f.smash();
    auto b0 = s.forms(w, 0);
    auto b1 = s.forms(w, 1);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < b0.size(); ++i)
        for (std::size_t j = 0; j < b0.size(); ++j)
            if (s.weight(b0[i]) + s.weight(b0[j]) <= w)
                pairs.emplace_back(i, j);
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> triples;
    for (std::size_t i = 0; i < b0.size(); ++i)
        for (std::size_t j = 0; j < b0.size(); ++j)
            for (std::size_t k = 0; k < b1.size(); ++k)
                if (s.weight(b0[i]) + s.weight(b0[j]) + s.weight(b1[k]) <= w)
                    triples.emplace_back(i, j, k);

    Report r;
    r.add(run_cases(suite, "standard_fodc.leibniz", "D(uv) = D(u)v + uD(v)", pairs.size(), [&](std::size_t n) -> Witness {
        const Word& u = b0[pairs[n].first];
        const Word& v = b0[pairs[n].second];
        Element lhs = f.D(f.mul0(u, v));
        Element rhs = f.right(f.D(u), Element::single(v)) + f.left(Element::single(u), f.D(v));
        if (lhs == rhs)
            return std::nullopt;
        return "u = " + s.word_str(u) + ", v = " + s.word_str(v) + ": D(uv) = " + s.str(lhs) + ", D(u)v + uD(v) = " + s.str(rhs);
    }));
    auto tri = [&](const std::string& name, const std::string& anchor, auto&& eq) {
        r.add(run_cases(suite, name, anchor, triples.size(), [&](std::size_t n) -> Witness {
            auto [i, j, k] = triples[n];
            auto [lhs, rhs] = eq(b0[i], b0[j], b1[k]);
            if (lhs == rhs)
                return std::nullopt;
            return "u = " + s.word_str(b0[i]) + ", v = " + s.word_str(b0[j]) + ", θ = " + s.word_str(b1[k]) + ": " +
                   s.str(lhs) + " vs " + s.str(rhs);
        }));
    };
    tri("standard_fodc.left_module", "u(vθ) = (uv)θ", [&](const Word& u, const Word& v, const Word& t) {
        return std::make_pair(f.left(Element::single(u), f.left(v, t)), f.left(f.mul0(u, v), Element::single(t)));
    });
    tri("standard_fodc.right_module", "(θu)v = θ(uv)", [&](const Word& u, const Word& v, const Word& t) {
        return std::make_pair(f.right(f.right(t, u), Element::single(v)), f.right(Element::single(t), f.mul0(u, v)));
    });
    tri("standard_fodc.bimodule", "(uθ)v = u(θv)", [&](const Word& u, const Word& v, const Word& t) {
        return std::make_pair(f.right(f.left(u, t), Element::single(v)), f.left(Element::single(u), f.right(t, v)));
    });
    {
        CheckBuilder cb(suite, "standard_fodc.spanning", "Ω¹(A#H) = (A#H)·D(A#H)");
        SpanBasis<Word> span;
        for (const auto& [i, j] : pairs)
            span.insert(f.left(Element::single(b0[i]), f.D(b0[j])));
        cb.cases(pairs.size());
        cb.expect(span.rank() == b1.size(), "span of u·D(v) has rank " + std::to_string(span.rank()) + " in dimension " +
                                                 std::to_string(b1.size()));
        cb.dim("omega1", b1.size()).dim("span", span.rank());
        r.add(cb.done());
    }
    r.add(run_cases(suite, "standard_fodc.matches_graded_product", "degree ≤ 1 tables agree with the graded smash product",
                    pairs.size() + b0.size() * b1.size() * 2 + b0.size(), [&](std::size_t n) -> Witness {
                        Element lhs, rhs;
                        std::string what;
                        if (n < pairs.size()) {
                            const Word& u = b0[pairs[n].first];
                            const Word& v = b0[pairs[n].second];
                            lhs = f.mul0(u, v);
                            rhs = s.mul(u, v);
                            what = s.word_str(u) + " * " + s.word_str(v);
                        } else if ((n -= pairs.size()) < b0.size() * b1.size()) {
                            const Word& u = b0[n / b1.size()];
                            const Word& t = b1[n % b1.size()];
                            lhs = f.left(u, t);
                            rhs = s.mul(u, t);
                            what = s.word_str(u) + " * " + s.word_str(t);
                        } else if ((n -= b0.size() * b1.size()) < b0.size() * b1.size()) {
                            const Word& u = b0[n / b1.size()];
                            const Word& t = b1[n % b1.size()];
                            lhs = f.right(t, u);
                            rhs = s.mul(t, u);
                            what = s.word_str(t) + " * " + s.word_str(u);
                        } else {
                            n -= b0.size() * b1.size();
                            lhs = f.D(b0[n]);
                            rhs = s.d(b0[n]);
                            what = "d(" + s.word_str(b0[n]) + ")";
                        }
                        if (lhs == rhs)
                            return std::nullopt;
                        return what + ": " + s.str(lhs) + " vs " + s.str(rhs);
                    }));
    return r;
}

// ---------------------------------------------------------------- tensor product calculus

TensorProductDga::TensorProductDga(std::shared_ptr<const Dga> a, std::shared_ptr<const Dga> b, int max_form_degree)
    : a_(std::move(a)), b_(std::move(b)), max_degree_(max_form_degree)
{
}

Word TensorProductDga::key(const Word& a, const Word& b)
{
    Word k{static_cast<Letter>(a.size())};
    k.insert(k.end(), a.begin(), a.end());
    k.insert(k.end(), b.begin(), b.end());
    return k;
}

WordPair TensorProductDga::split(const Word& k)
{
    if (k.empty() || k[0] + 1u > k.size())
        throw Error(ErrorKind::InvalidArgument, "not a tensor key");
    auto mid = k.begin() + 1 + k[0];
    return {Word(k.begin() + 1, mid), Word(mid, k.end())};
}

Element TensorProductDga::mul(const Word& u, const Word& v) const
{
    auto [a, b] = split(u);
    auto [c, e] = split(v);
    Element x = a_->mul(a, c);
    if (x.is_zero())
        return {};
    Element y = b_->mul(b, e);
    Scalar s = (b_->form_degree(b) * a_->form_degree(c)) % 2 ? Scalar(-1) : Scalar(1);
    Element out;
    for (const auto& [p, cp] : x)
        for (const auto& [q, cq] : y)
            out.add(key(p, q), s * cp * cq);
    return out;
}

std::vector<Word> TensorProductDga::basis_up_to(int w) const
{
    auto bb = b_->basis_up_to(w);
    std::vector<Word> out;
    for (const auto& a : a_->basis_up_to(w))
        for (const auto& b : bb)
            if (a_->weight(a) + b_->weight(b) <= w && a_->form_degree(a) + b_->form_degree(b) <= max_degree_)
                out.push_back(key(a, b));
    return out;
}

int TensorProductDga::weight(const Word& k) const
{
    auto [a, b] = split(k);
    return a_->weight(a) + b_->weight(b);
}

int TensorProductDga::form_degree(const Word& k) const
{
    auto [a, b] = split(k);
    return a_->form_degree(a) + b_->form_degree(b);
}

std::string TensorProductDga::word_str(const Word& k) const
{
    auto [a, b] = split(k);
    return "(" + a_->word_str(a) + ")⊗(" + b_->word_str(b) + ")";
}

std::optional<Element> TensorProductDga::lookup(const std::string& name) const
{
    auto lift = [](const Element& x, const Word& other, bool left) {
        Element out;
        for (const auto& [k, c] : x)
            out.add(left ? key(k, other) : key(other, k), c);
        return out;
    };
    if (auto x = a_->lookup(name))
        return lift(*x, b_->unit(), true);
    if (auto y = b_->lookup(name))
        return lift(*y, a_->unit(), false);
    return std::nullopt;
}

Element TensorProductDga::d(const Word& k) const
{
    auto [a, b] = split(k);
    Element out;
    for (const auto& [x, c] : a_->d(a))
        out.add(key(x, b), c);
    Scalar s = a_->form_degree(a) % 2 ? Scalar(-1) : Scalar(1);
    for (const auto& [y, c] : b_->d(b))
        out.add(key(a, y), s * c);
    return out;
}

Report check_trivial_smash_calculus(const SmashProduct& s, const TensorProductDga& t, int w, const std::string& suite)
{
    auto to_tensor = [](const Element& e) {
        Element out;
        for (const auto& [k, c] : e) {
            auto [a, h] = smash_split(k);
            out.add(TensorProductDga::key(a, h), c);
        }
        return out;
    };
    auto b = s.basis_up_to(w);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (s.weight(b[i]) + s.weight(b[j]) <= w && s.form_degree(b[i]) + s.form_degree(b[j]) <= s.max_form_degree())
                pairs.emplace_back(i, j);
    Report r;
    {
        CheckBuilder cb(suite, "tensor_calculus.same_basis", "Ω(A)#Ω(H) and Ω(A)⊗Ω(H) have the same basis");
        auto tb = t.basis_up_to(w);
        std::set<Word> mapped;
        for (const auto& k : b)
            mapped.insert(to_tensor(Element::single(k)).begin()->first);
        cb.expect(mapped == std::set<Word>(tb.begin(), tb.end()), "bases differ");
        cb.dim("smash", b.size()).dim("tensor", tb.size());
        r.add(cb.done());
    }
    r.add(run_cases(suite, "tensor_calculus.product_table", "(ω#γ)(ν#γ′) = (ω⊗γ)(ν⊗γ′)", pairs.size(),
                    [&](std::size_t n) -> Witness {
                        const Word& u = b[pairs[n].first];
                        const Word& v = b[pairs[n].second];
                        Element lhs = to_tensor(s.mul(u, v));
                        Element rhs = t.mul(to_tensor(Element::single(u)), to_tensor(Element::single(v)));
                        if (lhs == rhs)
                            return std::nullopt;
                        return "u = " + s.word_str(u) + ", v = " + s.word_str(v) + ": " + t.str(lhs) + " vs " + t.str(rhs);
                    }));
    r.add(run_cases(suite, "tensor_calculus.differential_table", "d(ω#γ) = D(ω⊗γ)", b.size(), [&](std::size_t n) -> Witness {
        Element lhs = to_tensor(s.d(b[n]));
        Element rhs = t.d(to_tensor(Element::single(b[n])));
        if (lhs == rhs)
            return std::nullopt;
        return "u = " + s.word_str(b[n]) + ": " + t.str(lhs) + " vs " + t.str(rhs);
    }));
    return r;
}

}  // namespace smashcalc
