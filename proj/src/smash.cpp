#include "smashcalc/smash.hpp"

#include <algorithm>

namespace smashcalc {

namespace {

using Witness = std::optional<std::string>;
using Triple = std::tuple<Word, Word, Word>;

Scalar sign(int e) { return e % 2 ? Scalar(-1) : Scalar(1); }

}  // namespace

Word smash_key(const Word& a, const Word& h)
{
    Word k = a;
    k.push_back(kSmashSep);
    k.insert(k.end(), h.begin(), h.end());
    return k;
}

WordPair smash_split(const Word& key)
{
    auto it = std::find(key.begin(), key.end(), kSmashSep);
    if (it == key.end())
        throw Error(ErrorKind::InvalidArgument, "not a smash key");
    return {Word(key.begin(), it), Word(it + 1, key.end())};
}

SmashProduct::SmashProduct(std::shared_ptr<const HAction> action, std::shared_ptr<const HopfForms> h, int max_form_degree)
    : action_(std::move(action)), h_(std::move(h)), max_degree_(max_form_degree)
{
    if (&action_->hopf() != &h_->hopf())
        throw Error(ErrorKind::InvalidArgument, "action and fiber use different Hopf algebras");
}

Word SmashProduct::unit() const { return smash_key(base().unit(), fiber_forms().unit()); }

Element SmashProduct::pair(const Element& a, const Element& h) const
{
    Element out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wh, ch] : h)
            out.add(smash_key(wa, wh), ca * ch);
    return out;
}

Element SmashProduct::mul(const Word& u, const Word& v) const
{
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find({u, v});
        if (it != cache_.end())
            return it->second;
    }
    Element out = mul_uncached(u, v);
    std::lock_guard<std::mutex> lock(mutex_);
    cache_.emplace(std::make_pair(u, v), out);
    return out;
}

Element SmashProduct::mul_uncached(const Word& u, const Word& v) const
{
    const Algebra& A = base();
    const Algebra& F = fiber_forms();
    auto [w, g] = smash_split(u);
    auto [n, g2] = smash_split(v);
    Scalar s = sign(F.form_degree(g) * A.form_degree(n));
    Element out;
    for (const auto& [hk, c] : h_->left_coact(g)) {
        Element acted = action_->act(hk.first, n);
        if (acted.is_zero())
            continue;
        Element left = A.mul(Element::single(w), acted);
        if (left.is_zero())
            continue;
        Element right = F.mul(hk.second, g2);
        for (const auto& [a, ca] : left)
            for (const auto& [b, cb] : right)
                out.add(smash_key(a, b), s * c * ca * cb);
    }
    return out;
}

std::vector<Word> SmashProduct::basis_up_to(int w) const
{
    const Algebra& A = base();
    const Algebra& F = fiber_forms();
    auto hw = F.basis_up_to(w);
    std::vector<Word> out;
    for (const auto& a : A.basis_up_to(w))
        for (const auto& h : hw)
            if (A.weight(a) + F.weight(h) <= w && A.form_degree(a) + F.form_degree(h) <= max_degree_)
                out.push_back(smash_key(a, h));
    return out;
}

int SmashProduct::weight(const Word& key) const
{
    auto [a, h] = smash_split(key);
    return base().weight(a) + fiber_forms().weight(h);
}

int SmashProduct::form_degree(const Word& key) const
{
    auto [a, h] = smash_split(key);
    return base().form_degree(a) + fiber_forms().form_degree(h);
}

std::string SmashProduct::word_str(const Word& key) const
{
    auto [a, h] = smash_split(key);
    return base().word_str(a) + "#" + fiber_forms().word_str(h);
}

std::optional<Element> SmashProduct::lookup(const std::string& name) const
{
    if (auto a = base().lookup(name))
        return pair(*a, fiber_forms().one());
    if (auto h = fiber_forms().lookup(name))
        return pair(base().one(), *h);
    return std::nullopt;
}

const Dga& SmashProduct::base_dga() const
{
    auto* d = dynamic_cast<const Dga*>(&base());
    if (!d)
        throw Error(ErrorKind::PreconditionFailed, "the base algebra carries no differential");
    return *d;
}

Element SmashProduct::d(const Word& key) const
{
    const UniversalDga* hd = h_->dga();
    if (!hd)
        throw Error(ErrorKind::PreconditionFailed, "the Hopf algebra carries no differential");
    const Dga& ad = base_dga();
    auto [a, h] = smash_split(key);
    Element out;
    for (const auto& [x, c] : ad.d(a))
        out.add(smash_key(x, h), c);
    Scalar s = sign(ad.form_degree(a));
    for (const auto& [y, c] : hd->d(h))
        out.add(smash_key(a, y), s * c);
    return out;
}

Tensor2 SmashProduct::coaction(const Word& key) const
{
    auto [a, h] = smash_split(key);
    Tensor2 out;
    for (const auto& [k, c] : h_->coproduct(h))
        out.add({smash_key(a, k.first), k.second}, c);
    return out;
}

Tensor2 SmashProduct::coaction(const Element& u) const
{
    Tensor2 out;
    for (const auto& [k, c] : u)
        out.add(coaction(k), c);
    return out;
}

Tensor2 SmashProduct::mul_tensor(const Tensor2& x, const Tensor2& y) const
{
    const Algebra& F = fiber_forms();
    Tensor2 out;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) {
            Element l = mul(a.first, b.first);
            if (l.is_zero())
                continue;
            Element r = F.mul(a.second, b.second);
            Scalar s = sign(F.form_degree(a.second) * form_degree(b.first));
            for (const auto& [wl, cl] : l)
                for (const auto& [wr, cr] : r)
                    out.add({wl, wr}, s * ca * cb * cl * cr);
        }
    return out;
}

Tensor2 SmashProduct::d_tensor(const Tensor2& x) const
{
    const UniversalDga* hd = h_->dga();
    if (!hd)
        throw Error(ErrorKind::PreconditionFailed, "the Hopf algebra carries no differential");
    Tensor2 out;
    for (const auto& [k, c] : x) {
        for (const auto& [w, e] : d(k.first))
            out.add({w, k.second}, c * e);
        Scalar s = sign(form_degree(k.first));
        for (const auto& [w, e] : hd->d(k.second))
            out.add({k.first, w}, s * c * e);
    }
    return out;
}

std::string SmashProduct::str2(const Tensor2& t) const
{
    std::vector<std::pair<std::string, Scalar>> terms;
    for (const auto& [k, c] : t)
        terms.emplace_back("(" + word_str(k.first) + ")⊗" + fiber_forms().word_str(k.second), c);
    return format_terms(terms);
}

namespace {

std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> triples_up_to(const SmashProduct& s,
                                                                             const std::vector<Word>& b, int w, int deg)
{
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            int wij = s.weight(b[i]) + s.weight(b[j]);
            int dij = s.form_degree(b[i]) + s.form_degree(b[j]);
            if (wij > w || dij > deg)
                continue;
            for (std::size_t k = 0; k < b.size(); ++k)
                if (wij + s.weight(b[k]) <= w && dij + s.form_degree(b[k]) <= deg)
                    out.emplace_back(i, j, k);
        }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> pairs_up_to(const SmashProduct& s, const std::vector<Word>& b, int w, int deg)
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (s.weight(b[i]) + s.weight(b[j]) <= w && s.form_degree(b[i]) + s.form_degree(b[j]) <= deg)
                out.emplace_back(i, j);
    return out;
}

Check associativity(const SmashProduct& s, const std::vector<Word>& b, int w, int deg, const std::string& suite,
                    const std::string& name)
{
    auto triples = triples_up_to(s, b, w, deg);
    return run_cases(suite, name, "(uv)w = u(vw)", triples.size(), [&](std::size_t k) -> Witness {
        auto [i, j, l] = triples[k];
        Element lhs = s.mul(s.mul(b[i], b[j]), Element::single(b[l]));
        Element rhs = s.mul(Element::single(b[i]), s.mul(b[j], b[l]));
        if (lhs == rhs)
            return std::nullopt;
        return "u = " + s.word_str(b[i]) + ", v = " + s.word_str(b[j]) + ", w = " + s.word_str(b[l]) +
               ": (uv)w = " + s.str(lhs) + ", u(vw) = " + s.str(rhs);
    });
}

}  // namespace

Report check_smash(const SmashProduct& s, int w, const std::string& suite)
{
    auto b = s.forms(w, 0);
    const Bialgebra& H = s.fiber().hopf();
    Report r;
    r.add(associativity(s, b, w, 0, suite, "smash.associativity"));
    r.add(run_cases(suite, "smash.unit", "(1#1)u = u = u(1#1)", b.size(), [&](std::size_t k) -> Witness {
        Element u = Element::single(b[k]);
        Element l = s.mul(s.unit(), b[k]);
        Element rr = s.mul(b[k], s.unit());
        if (l == u && rr == u)
            return std::nullopt;
        return "u = " + s.word_str(b[k]) + ": (1#1)u = " + s.str(l) + ", u(1#1) = " + s.str(rr);
    }));
    auto pairs = pairs_up_to(s, b, w, 0);
    r.add(run_cases(suite, "smash.coaction_multiplicative", "ρ(uv) = ρ(u)ρ(v)", pairs.size(), [&](std::size_t k) -> Witness {
        const Word& u = b[pairs[k].first];
        const Word& v = b[pairs[k].second];
        Tensor2 lhs = s.coaction(s.mul(u, v));
        Tensor2 rhs = s.mul_tensor(s.coaction(u), s.coaction(v));
        if (lhs == rhs)
            return std::nullopt;
        return "u = " + s.word_str(u) + ", v = " + s.word_str(v) + ": ρ(uv) = " + s.str2(lhs) + ", ρ(u)ρ(v) = " + s.str2(rhs);
    }));
    r.add(run_cases(suite, "smash.coaction_coassociative", "(ρ⊗1)ρ = (1⊗Δ)ρ", b.size(), [&](std::size_t k) -> Witness {
        LinComb<Triple> lhs, rhs;
        for (const auto& [uh, c] : s.coaction(b[k])) {
            for (const auto& [vh, e] : s.coaction(uh.first))
                lhs.add({vh.first, vh.second, uh.second}, c * e);
            for (const auto& [hh, e] : H.comult(uh.second))
                rhs.add({uh.first, hh.first, hh.second}, c * e);
        }
        if (lhs == rhs)
            return std::nullopt;
        return "u = " + s.word_str(b[k]);
    }));
    r.add(run_cases(suite, "smash.coaction_counit", "(1⊗ε)ρ = id", b.size(), [&](std::size_t k) -> Witness {
        Element v;
        for (const auto& [uh, c] : s.coaction(b[k]))
            v.add(uh.first, c * H.counit(uh.second));
        if (v == Element::single(b[k]))
            return std::nullopt;
        return "u = " + s.word_str(b[k]) + ": (1⊗ε)ρ(u) = " + s.str(v);
    }));
    {
        CheckBuilder cb(suite, "smash.coinvariants", "(A#H)^{coH} = A#1");
        FunctionCoaction rho("ρ", H, s, Side::Right, [&s](const Word& v) { return s.coaction(v); });
        Subspace co = coinvariants(rho, b);
        std::size_t expected = 0;
        const Word hunit = s.fiber_forms().unit();
        for (const auto& u : b)
            if (smash_split(u).second == hunit) {
                ++expected;
                Tensor2 t = s.coaction(u) - Tensor2::single({u, hunit});
                cb.expect(t.is_zero(), s.word_str(u) + " is not coinvariant");
            }
        cb.expect(co.space.dim() == expected,
                  "coinvariants have dimension " + std::to_string(co.space.dim()) + ", A#1 has " + std::to_string(expected));
        cb.dim("coinvariants", co.space.dim()).dim("A#1", expected).dim("A#H", b.size());
        r.add(cb.done());
    }
    return r;
}

Report check_trivial_smash_is_tensor(const SmashProduct& s, int w, const std::string& suite)
{
    auto b = s.forms(w, 0);
    auto pairs = pairs_up_to(s, b, w, 0);
    const Algebra& A = s.base();
    const Algebra& F = s.fiber_forms();
    Report r;
    r.add(run_cases(suite, "smash.trivial_action_tensor_product", "(a#g)(b#h) = ab#gh", pairs.size(), [&](std::size_t k) -> Witness {
        auto [a, g] = smash_split(b[pairs[k].first]);
        auto [c, h] = smash_split(b[pairs[k].second]);
        Element lhs = s.mul(b[pairs[k].first], b[pairs[k].second]);
        Element rhs = s.pair(A.mul(a, c), F.mul(g, h));
        if (lhs == rhs)
            return std::nullopt;
        return "u = " + s.word_str(b[pairs[k].first]) + ", v = " + s.word_str(b[pairs[k].second]) + ": " + s.str(lhs) +
               " vs " + s.str(rhs);
    }));
    return r;
}

Report check_smash_dga(const SmashProduct& s, int w, const std::string& suite)
{
    int deg = s.max_form_degree();
    auto b = s.basis_up_to(w);
    Report r;
    r.add(associativity(s, b, w, deg, suite, "smash_calculus.associativity"));
    r.merge(check_dga(s, w, deg, suite, "smash_calculus"));
    auto pairs = pairs_up_to(s, b, w, deg);
    r.add(run_cases(suite, "smash_calculus.omega_rho_algebra_map", "Ω(ρ)(uv) = Ω(ρ)(u)Ω(ρ)(v)", pairs.size(),
                    [&](std::size_t k) -> Witness {
                        const Word& u = b[pairs[k].first];
                        const Word& v = b[pairs[k].second];
                        Tensor2 lhs = s.coaction(s.mul(u, v));
                        Tensor2 rhs = s.mul_tensor(s.coaction(u), s.coaction(v));
                        if (lhs == rhs)
                            return std::nullopt;
                        return "u = " + s.word_str(u) + ", v = " + s.word_str(v) + ": " + s.str2(lhs) + " vs " + s.str2(rhs);
                    }));
    std::vector<Word> low;
    for (const auto& u : b)
        if (s.form_degree(u) < deg)
            low.push_back(u);
    r.add(run_cases(suite, "smash_calculus.omega_rho_chain_map", "Ω(ρ)∘d = D∘Ω(ρ)", low.size(), [&](std::size_t k) -> Witness {
        Tensor2 lhs = s.coaction(s.d(low[k]));
        Tensor2 rhs = s.d_tensor(s.coaction(low[k]));
        if (lhs == rhs)
            return std::nullopt;
        return "u = " + s.word_str(low[k]) + ": " + s.str2(lhs) + " vs " + s.str2(rhs);
    }));
    const Bialgebra& H = s.fiber().hopf();
    auto zero = s.forms(w, 0);
    r.add(run_cases(suite, "smash_calculus.omega_rho_degree0", "Ω⁰(ρ)(a#h) = a#h₁⊗h₂", zero.size(), [&](std::size_t k) -> Witness {
        auto [a, h] = smash_split(zero[k]);
        Tensor2 expect;
        for (const auto& [hh, c] : H.comult(h))
            expect.add({smash_key(a, hh.first), hh.second}, c);
        if (s.coaction(zero[k]) == expect)
            return std::nullopt;
        return "u = " + s.word_str(zero[k]);
    }));
    return r;
}

// ---------------------------------------------------------------- morphisms

AlgebraMap::AlgebraMap(std::shared_ptr<const Presentation> source, std::shared_ptr<const Algebra> target,
                       std::vector<Element> on_gens)
    : src_(std::move(source)), dst_(std::move(target)), on_gens_(std::move(on_gens))
{
    if (on_gens_.size() != src_->generators().size())
        throw Error(ErrorKind::DimensionMismatch, "algebra map must be given on every generator");
}

Element AlgebraMap::operator()(const Word& w) const
{
    Element out = dst_->one();
    for (Letter l : w)
        out = dst_->mul(out, on_gens_.at(l));
    return out;
}

Element AlgebraMap::operator()(const Element& e) const
{
    Element out;
    for (const auto& [w, c] : e)
        out.add((*this)(w), c);
    return out;
}

AlgebraMap AlgebraMap::then(const AlgebraMap& g) const
{
    if (&g.source() != dst_.get())
        throw Error(ErrorKind::DimensionMismatch, "maps are not composable");
    std::vector<Element> gens;
    for (const auto& x : on_gens_)
        gens.push_back(g(x));
    return AlgebraMap(src_, g.dst_, gens);
}

std::function<Element(const Word&)> smash_morphism(const AlgebraMap& f, const SmashProduct& from, const SmashProduct& to,
                                                   int w, int hdegree)
{
    const Presentation& A = f.source();
    const Algebra& B = f.target();
    if (&from.base() != &A || &to.base() != &B)
        throw Error(ErrorKind::InvalidArgument, "smash products do not match the map");
    for (const auto& rule : A.rules()) {
        Element diff = f(rule.lhs) - f(rule.rhs);
        if (!diff.is_zero())
            throw Error(ErrorKind::PreconditionFailed,
                        "not an algebra map: f(" + A.word_str(rule.lhs) + ") - f(" + A.str(rule.rhs) + ") = " + B.str(diff));
    }
    const Bialgebra& H = from.fiber().hopf();
    for (const auto& h : hopf_basis(H, hdegree))
        for (const auto& a : A.basis_up_to(w)) {
            Element lhs = f(from.action().act(h, a));
            Element rhs = to.action().act(h, f(a));
            if (lhs != rhs)
                throw Error(ErrorKind::NotEquivariant, "h = " + H.algebra().word_str(h) + ", a = " + A.word_str(a) +
                                                           ": f(h·a) = " + B.str(lhs) + ", h·f(a) = " + B.str(rhs));
        }
    return [f, &to](const Word& key) {
        auto [a, h] = smash_split(key);
        return to.pair(f(a), Element::single(h));
    };
}

Report check_smash_morphism(const std::function<Element(const Word&)>& f1, const SmashProduct& from,
                            const SmashProduct& to, int w, const std::string& suite)
{
    auto b = from.forms(w, 0);
    auto pairs = pairs_up_to(from, b, w, 0);
    auto apply = [&](const Element& e) {
        Element out;
        for (const auto& [k, c] : e)
            out.add(f1(k), c);
        return out;
    };
    Report r;
    r.add(run_cases(suite, "smash_morphism.multiplicative", "(f#1)(uv) = (f#1)(u)(f#1)(v)", pairs.size(),
                    [&](std::size_t k) -> Witness {
                        const Word& u = b[pairs[k].first];
                        const Word& v = b[pairs[k].second];
                        Element lhs = apply(from.mul(u, v));
                        Element rhs = to.mul(f1(u), f1(v));
                        if (lhs == rhs)
                            return std::nullopt;
                        return "u = " + from.word_str(u) + ", v = " + from.word_str(v) + ": " + to.str(lhs) + " vs " + to.str(rhs);
                    }));
    CheckBuilder cb(suite, "smash_morphism.unit", "(f#1)(1#1) = 1#1");
    cb.expect(f1(from.unit()) == to.one(), "image of the unit is " + to.str(f1(from.unit())));
    r.add(cb.done());
    return r;
}

}  // namespace smashcalc
