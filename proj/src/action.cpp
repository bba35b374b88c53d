#include "smashcalc/action.hpp"

namespace smashcalc {

Element HAction::act(const Element& h, const Element& a) const
{
    Element out;
    for (const auto& [hw, hc] : h)
        for (const auto& [aw, ac] : a)
            out.add(act(hw, aw), hc * ac);
    return out;
}

Element HAction::act(const Word& h, const Element& a) const
{
    Element out;
    for (const auto& [aw, ac] : a)
        out.add(act(h, aw), ac);
    return out;
}

GeneratorAction::GeneratorAction(std::string name, std::shared_ptr<const Bialgebra> h, std::shared_ptr<const Algebra> a,
                                 Table table)
    : name_(std::move(name)), h_(std::move(h)), a_(std::move(a)), table_(std::move(table))
{
}

Element GeneratorAction::act(const Word& h, const Word& a) const
{
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find({h, a});
        if (it != cache_.end())
            return it->second;
    }
    Element out = compute(h, a);
    std::lock_guard<std::mutex> lock(mutex_);
    cache_.emplace(std::make_pair(h, a), out);
    return out;
}

Element GeneratorAction::compute(const Word& h, const Word& a) const
{
    const Algebra& H = h_->algebra();
    if (a_->is_unit(a))
        return h_->counit(h) * a_->one();
    if (H.is_unit(h))
        return Element::single(a);
    if (a.size() == 1) {
        auto it = table_.find({h, a[0]});
        if (it != table_.end())
            return it->second;
        if (h.size() > 1) {
            Word rest(h.begin() + 1, h.end());
            return act(Word{h[0]}, act(rest, a));
        }
        throw Error(ErrorKind::PreconditionFailed,
                    name_ + ": action of " + H.word_str(h) + " on " + a_->word_str(a) + " is not specified");
    }
    if (h.size() > 1) {
        Word rest(h.begin() + 1, h.end());
        return act(Word{h[0]}, act(rest, a));
    }
    Word head(a.begin(), a.end() - 1);
    Word last{a.back()};
    Element out;
    for (const auto& [hh, c] : h_->comult(h)) {
        Element x = act(hh.first, head);
        if (x.is_zero())
            continue;
        out.add(a_->mul(x, act(hh.second, last)), c);
    }
    return out;
}

GeneratorAction GeneratorAction::with_entry(const Word& h, Letter a, const Element& value) const
{
    Table t = table_;
    t[{h, a}] = value;
    return GeneratorAction(name_ + "*", h_, a_, t);
}

std::vector<Word> hopf_basis(const Bialgebra& h, int hdegree) { return h.algebra().basis_up_to(hdegree); }

namespace {

struct Pair {
    std::size_t i, j;
};

std::vector<Pair> pairs_up_to(const Algebra& a, const std::vector<Word>& words, int degree)
{
    std::vector<Pair> out;
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = 0; j < words.size(); ++j)
            if (a.weight(words[i]) + a.weight(words[j]) <= degree)
                out.push_back({i, j});
    return out;
}

using Witness = std::optional<std::string>;

}  // namespace

Report check_module_algebra(const HAction& m, int degree, int hdegree, const std::string& suite)
{
    const Algebra& A = m.target();
    const Bialgebra& H = m.hopf();
    const Algebra& HA = H.algebra();
    auto words = A.basis_up_to(degree);
    auto hw = hopf_basis(H, hdegree);
    auto pairs = pairs_up_to(A, words, degree);
    const std::string p = "module_algebra.";
    Report r;
    r.add(run_cases(suite, p + "product", "h·(ab) = Σ (h₁·a)(h₂·b)", hw.size() * pairs.size(), [&](std::size_t k) -> Witness {
        const Word& h = hw[k / pairs.size()];
        const Pair& pr = pairs[k % pairs.size()];
        const Word& a = words[pr.i];
        const Word& b = words[pr.j];
        Element lhs = m.act(h, A.mul(a, b));
        Element rhs;
        for (const auto& [hh, c] : H.comult(h))
            rhs.add(A.mul(m.act(hh.first, a), m.act(hh.second, b)), c);
        if (lhs == rhs)
            return std::nullopt;
        return "h = " + HA.word_str(h) + ", a = " + A.word_str(a) + ", b = " + A.word_str(b) + ": h·(ab) = " + A.str(lhs) +
               ", Σ(h₁·a)(h₂·b) = " + A.str(rhs);
    }));
    r.add(run_cases(suite, p + "unit_acts_trivially", "1·a = a", words.size(), [&](std::size_t k) -> Witness {
        Element v = m.act(HA.unit(), words[k]);
        if (v == Element::single(words[k]))
            return std::nullopt;
        return "a = " + A.word_str(words[k]) + ": 1·a = " + A.str(v);
    }));
    r.add(run_cases(suite, p + "acts_on_unit_by_counit", "h·1 = ε(h)1", hw.size(), [&](std::size_t k) -> Witness {
        Element v = m.act(hw[k], A.unit());
        Element e = H.counit(hw[k]) * A.one();
        if (v == e)
            return std::nullopt;
        return "h = " + HA.word_str(hw[k]) + ": h·1 = " + A.str(v) + ", ε(h)1 = " + A.str(e);
    }));
    std::size_t n = hw.size() * hw.size() * words.size();
    r.add(run_cases(suite, p + "composition", "g·(h·a) = (gh)·a", n, [&](std::size_t k) -> Witness {
        const Word& g = hw[k / (hw.size() * words.size())];
        const Word& h = hw[(k / words.size()) % hw.size()];
        const Word& a = words[k % words.size()];
        Element lhs = m.act(g, m.act(h, a));
        Element rhs = m.act(HA.mul(Element::single(g), Element::single(h)), Element::single(a));
        if (lhs == rhs)
            return std::nullopt;
        return "g = " + HA.word_str(g) + ", h = " + HA.word_str(h) + ", a = " + A.word_str(a) + ": g·(h·a) = " + A.str(lhs) +
               ", (gh)·a = " + A.str(rhs);
    }));
    return r;
}

Report check_action_on_calculus(const HAction& m, const Dga& forms, int degree, int hdegree, const std::string& suite)
{
    Report r = check_module_algebra(m, degree, hdegree, suite);
    const Algebra& HA = m.hopf().algebra();
    auto words = forms.basis_up_to(degree);
    auto hw = hopf_basis(m.hopf(), hdegree);
    r.add(run_cases(suite, "action_on_calculus.d_commutes", "d(h·a) = h·d(a)", hw.size() * words.size(),
                    [&](std::size_t k) -> Witness {
                        const Word& h = hw[k / words.size()];
                        const Word& a = words[k % words.size()];
                        Element lhs = forms.d(m.act(h, a));
                        Element rhs = m.act(h, forms.d(a));
                        if (lhs == rhs)
                            return std::nullopt;
                        return "h = " + HA.word_str(h) + ", a = " + forms.word_str(a) + ": d(h·a) = " + forms.str(lhs) +
                               ", h·d(a) = " + forms.str(rhs);
                    }));
    return r;
}

// ---------------------------------------------------------------- coactions

Tensor2 Coaction::coact(const Element& v) const
{
    Tensor2 out;
    for (const auto& [w, c] : v)
        out.add(coact(w), c);
    return out;
}

Tensor2 coaction_product(const Coaction& c, const Tensor2& x, const Tensor2& y)
{
    const Algebra& A = c.carrier();
    const Algebra& H = c.hopf().algebra();
    bool right = c.side() == Side::Right;
    Tensor2 out;
    for (const auto& [kx, cx] : x)
        for (const auto& [ky, cy] : y) {
            Element a = right ? A.mul(kx.first, ky.first) : A.mul(kx.second, ky.second);
            if (a.is_zero())
                continue;
            Element h = right ? H.mul(kx.second, ky.second) : H.mul(kx.first, ky.first);
            for (const auto& [wa, ca] : a)
                for (const auto& [wh, ch] : h)
                    out.add(right ? WordPair{wa, wh} : WordPair{wh, wa}, cx * cy * ca * ch);
        }
    return out;
}

std::string coaction_str(const Coaction& c, const Tensor2& t)
{
    const Algebra& A = c.carrier();
    const Algebra& H = c.hopf().algebra();
    std::vector<std::pair<std::string, Scalar>> terms;
    for (const auto& [k, v] : t)
        terms.emplace_back(c.side() == Side::Right ? A.word_str(k.first) + "⊗" + H.word_str(k.second)
                                                   : H.word_str(k.first) + "⊗" + A.word_str(k.second),
                           v);
    return format_terms(terms);
}

GeneratorCoaction::GeneratorCoaction(std::string name, std::shared_ptr<const Bialgebra> h, std::shared_ptr<const Algebra> a,
                                     Side side, std::map<Letter, Tensor2> on_letters)
    : name_(std::move(name)), h_(std::move(h)), a_(std::move(a)), side_(side), on_letters_(std::move(on_letters))
{
}

Tensor2 GeneratorCoaction::coact(const Word& v) const
{
    Word hu = h_->algebra().unit();
    if (a_->is_unit(v))
        return Tensor2::single(side_ == Side::Right ? WordPair{v, hu} : WordPair{hu, v});
    if (v.size() == 1) {
        auto it = on_letters_.find(v[0]);
        if (it == on_letters_.end())
            throw Error(ErrorKind::PreconditionFailed, name_ + ": coaction on " + a_->word_str(v) + " is not specified");
        return it->second;
    }
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(v);
        if (it != cache_.end())
            return it->second;
    }
    Word head(v.begin(), v.end() - 1);
    Tensor2 out = coaction_product(*this, coact(head), coact(Word{v.back()}));
    std::lock_guard<std::mutex> lock(mutex_);
    cache_.emplace(v, out);
    return out;
}

Report check_comodule_algebra(const Coaction& c, int degree, const std::string& suite)
{
    const Algebra& A = c.carrier();
    const Bialgebra& H = c.hopf();
    bool right = c.side() == Side::Right;
    auto words = A.basis_up_to(degree);
    auto pairs = pairs_up_to(A, words, degree);
    const std::string p = "comodule_algebra.";
    Report r;
    r.add(run_cases(suite, p + "multiplicative", "ρ(ab) = ρ(a)ρ(b)", pairs.size(), [&](std::size_t k) -> Witness {
        const Word& a = words[pairs[k].i];
        const Word& b = words[pairs[k].j];
        Tensor2 lhs = c.coact(A.mul(a, b));
        Tensor2 rhs = coaction_product(c, c.coact(a), c.coact(b));
        if (lhs == rhs)
            return std::nullopt;
        return "a = " + A.word_str(a) + ", b = " + A.word_str(b) + ": ρ(ab) = " + coaction_str(c, lhs) +
               ", ρ(a)ρ(b) = " + coaction_str(c, rhs);
    }));
    {
        CheckBuilder b(suite, p + "unit", "ρ(1) = 1⊗1");
        Word hu = H.algebra().unit();
        Tensor2 expect = Tensor2::single(right ? WordPair{A.unit(), hu} : WordPair{hu, A.unit()});
        Tensor2 got = c.coact(A.unit());
        b.expect(got == expect, "ρ(1) = " + coaction_str(c, got));
        r.add(b.done());
    }
    r.add(run_cases(suite, p + "coassociativity", right ? "(ρ⊗1)ρ = (1⊗Δ)ρ" : "(1⊗λ)λ = (Δ⊗1)λ", words.size(),
                    [&](std::size_t k) -> Witness {
                        TensorN lhs, rhs;
                        for (const auto& [vh, x] : c.coact(words[k])) {
                            if (right) {
                                for (const auto& [v2, y] : c.coact(vh.first))
                                    lhs.add(join_tensor({v2.first, v2.second, vh.second}), x * y);
                                for (const auto& [hh, y] : H.comult(vh.second))
                                    rhs.add(join_tensor({vh.first, hh.first, hh.second}), x * y);
                            } else {
                                for (const auto& [v2, y] : c.coact(vh.second))
                                    lhs.add(join_tensor({vh.first, v2.first, v2.second}), x * y);
                                for (const auto& [hh, y] : H.comult(vh.first))
                                    rhs.add(join_tensor({hh.first, hh.second, vh.second}), x * y);
                            }
                        }
                        if (lhs == rhs)
                            return std::nullopt;
                        return "v = " + A.word_str(words[k]) + ": coassociativity differs by " +
                               std::to_string((lhs - rhs).size()) + " terms";
                    }));
    r.add(run_cases(suite, p + "counit", right ? "(1⊗ε)ρ = id" : "(ε⊗1)λ = id", words.size(), [&](std::size_t k) -> Witness {
        Element v;
        for (const auto& [vh, x] : c.coact(words[k]))
            v.add(right ? vh.first : vh.second, x * H.counit(right ? vh.second : vh.first));
        if (v == Element::single(words[k]))
            return std::nullopt;
        return "v = " + A.word_str(words[k]) + ": counit gives " + A.str(v);
    }));
    return r;
}

Subspace coinvariants(const Coaction& c, const std::vector<Word>& words, Exec exec)
{
    bool right = c.side() == Side::Right;
    Word hu = c.hopf().algebra().unit();
    std::vector<Tensor2> images;
    KeyIndex<WordPair> index;
    for (const auto& v : words) {
        Tensor2 t = c.coact(v) - Tensor2::single(right ? WordPair{v, hu} : WordPair{hu, v});
        for (const auto& [k, x] : t)
            index.push(k);
        images.push_back(std::move(t));
    }
    Matrix m(index.size(), words.size());
    for (std::size_t j = 0; j < words.size(); ++j)
        m.set_column(j, index.coords(images[j]));
    BasedSpace dom{"V", {}};
    for (const auto& v : words)
        dom.basis.push_back(c.carrier().word_str(v));
    BasedSpace cod = BasedSpace::numbered("V⊗H", index.size());
    return kernel(LinMap(dom, cod, m), exec);
}

// ---------------------------------------------------------------- Hopf modules

Report check_hopf_module(const HopfModuleData& v, const std::string& suite)
{
    const Algebra& B = *v.b;
    const Algebra& H = v.h->algebra();
    auto vs = [&](const Element& e) {
        std::vector<std::pair<std::string, Scalar>> terms;
        for (const auto& [k, c] : e)
            terms.emplace_back(v.v_str(k), c);
        return format_terms(terms);
    };
    auto act_l = [&](const Word& b, const Element& x) {
        Element out;
        for (const auto& [k, c] : x)
            out.add(v.left_act(b, k), c);
        return out;
    };
    auto act_r = [&](const Element& x, const Word& b) {
        Element out;
        for (const auto& [k, c] : x)
            out.add(v.right_act(b, k), c);
        return out;
    };
    auto coact = [](const HopfModuleData::Coact& f, const Element& x) {
        Tensor2 out;
        for (const auto& [k, c] : x)
            out.add(f(k), c);
        return out;
    };
    std::size_t nb = v.b_words.size(), nv = v.v_words.size();
    const std::string p = v.name + ".";
    Report r;
    auto pair_case = [&](const std::string& name, const std::string& anchor, auto&& fn) {
        r.add(run_cases(suite, p + name, anchor, nb * nv, [&](std::size_t k) -> Witness {
            const Word& b = v.b_words[k / nv];
            const Word& x = v.v_words[k % nv];
            if (fn(b, x))
                return std::nullopt;
            return "b = " + B.word_str(b) + ", v = " + v.v_str(x);
        }));
    };
    if (v.left_act) {
        r.add(run_cases(suite, p + "left_module", "(bb')·v = b·(b'·v)", nb * nb * nv, [&](std::size_t k) -> Witness {
            const Word& b1 = v.b_words[k / (nb * nv)];
            const Word& b2 = v.b_words[(k / nv) % nb];
            const Word& x = v.v_words[k % nv];
            Element lhs;
            for (const auto& [w, c] : B.mul(b1, b2))
                lhs.add(v.left_act(w, x), c);
            Element rhs = act_l(b1, v.left_act(b2, x));
            if (lhs == rhs)
                return std::nullopt;
            return "b = " + B.word_str(b1) + ", b' = " + B.word_str(b2) + ", v = " + v.v_str(x) + ": " + vs(lhs) + " vs " +
                   vs(rhs);
        }));
    }
    if (v.right_act) {
        r.add(run_cases(suite, p + "right_module", "v·(bb') = (v·b)·b'", nb * nb * nv, [&](std::size_t k) -> Witness {
            const Word& b1 = v.b_words[k / (nb * nv)];
            const Word& b2 = v.b_words[(k / nv) % nb];
            const Word& x = v.v_words[k % nv];
            Element lhs;
            for (const auto& [w, c] : B.mul(b1, b2))
                lhs.add(v.right_act(w, x), c);
            Element rhs = act_r(v.right_act(b1, x), b2);
            if (lhs == rhs)
                return std::nullopt;
            return "b = " + B.word_str(b1) + ", b' = " + B.word_str(b2) + ", v = " + v.v_str(x) + ": " + vs(lhs) + " vs " +
                   vs(rhs);
        }));
    }
    if (v.left_act && v.right_act) {
        r.add(run_cases(suite, p + "bimodule", "(b·v)·b' = b·(v·b')", nb * nb * nv, [&](std::size_t k) -> Witness {
            const Word& b1 = v.b_words[k / (nb * nv)];
            const Word& b2 = v.b_words[(k / nv) % nb];
            const Word& x = v.v_words[k % nv];
            Element lhs = act_r(v.left_act(b1, x), b2);
            Element rhs = act_l(b1, v.right_act(b2, x));
            if (lhs == rhs)
                return std::nullopt;
            return "b = " + B.word_str(b1) + ", b' = " + B.word_str(b2) + ", v = " + v.v_str(x) + ": " + vs(lhs) + " vs " +
                   vs(rhs);
        }));
    }
    // Comodule laws.
    auto comodule_laws = [&](const HopfModuleData::Coact& f, bool right, const std::string& name) {
        r.add(run_cases(suite, p + name, right ? "(ρ⊗1)ρ = (1⊗Δ)ρ, (1⊗ε)ρ = id" : "(1⊗λ)λ = (Δ⊗1)λ, (ε⊗1)λ = id", nv,
                        [&](std::size_t k) -> Witness {
                            const Word& x = v.v_words[k];
                            TensorN lhs, rhs;
                            Element counit;
                            for (const auto& [vh, c] : f(x)) {
                                const Word& vv = right ? vh.first : vh.second;
                                const Word& hh = right ? vh.second : vh.first;
                                counit.add(vv, c * v.h->counit(hh));
                                for (const auto& [p2, d] : f(vv))
                                    lhs.add(right ? join_tensor({p2.first, p2.second, hh}) : join_tensor({hh, p2.first, p2.second}),
                                            c * d);
                                for (const auto& [h2, d] : v.h->comult(hh))
                                    rhs.add(right ? join_tensor({vv, h2.first, h2.second}) : join_tensor({h2.first, h2.second, vv}),
                                            c * d);
                            }
                            if (lhs == rhs && counit == Element::single(x))
                                return std::nullopt;
                            return "v = " + v.v_str(x) + (lhs == rhs ? ": counit law gives " + vs(counit) : ": not coassociative");
                        }));
    };
    if (v.left_coact)
        comodule_laws(v.left_coact, false, "left_comodule");
    if (v.right_coact)
        comodule_laws(v.right_coact, true, "right_comodule");
    if (v.left_coact && v.right_coact) {
        r.add(run_cases(suite, p + "bicomodule", "(1⊗ρ)λ = (λ⊗1)ρ", nv, [&](std::size_t k) -> Witness {
            const Word& x = v.v_words[k];
            TensorN lhs, rhs;
            for (const auto& [hv, c] : v.left_coact(x))
                for (const auto& [vh, d] : v.right_coact(hv.second))
                    lhs.add(join_tensor({hv.first, vh.first, vh.second}), c * d);
            for (const auto& [vh, c] : v.right_coact(x))
                for (const auto& [hv, d] : v.left_coact(vh.first))
                    rhs.add(join_tensor({hv.first, hv.second, vh.second}), c * d);
            if (lhs == rhs)
                return std::nullopt;
            return "v = " + v.v_str(x);
        }));
    }
    // Module/comodule compatibilities. Left coaction keys (h, v); right coaction keys (v, h).
    auto hmul = [&](const Word& a, const Word& b) { return H.mul(a, b); };
    if (v.left_act && v.left_coact && v.b_left_coact)
        pair_case("left_module_left_comodule", "λ(b·v) = Σ b₋₁v₋₁ ⊗ b₀·v₀", [&](const Word& b, const Word& x) {
            Tensor2 lhs = coact(v.left_coact, v.left_act(b, x)), rhs;
            for (const auto& [hb, c] : v.b_left_coact(b))
                for (const auto& [hv, d] : v.left_coact(x))
                    for (const auto& [h, e] : hmul(hb.first, hv.first))
                        for (const auto& [w, f] : v.left_act(hb.second, hv.second))
                            rhs.add({h, w}, c * d * e * f);
            return lhs == rhs;
        });
    if (v.left_act && v.right_coact && v.b_right_coact)
        pair_case("left_module_right_comodule", "ρ(b·v) = Σ b₀·v₀ ⊗ b₁v₁", [&](const Word& b, const Word& x) {
            Tensor2 lhs = coact(v.right_coact, v.left_act(b, x)), rhs;
            for (const auto& [bh, c] : v.b_right_coact(b))
                for (const auto& [vh, d] : v.right_coact(x))
                    for (const auto& [h, e] : hmul(bh.second, vh.second))
                        for (const auto& [w, f] : v.left_act(bh.first, vh.first))
                            rhs.add({w, h}, c * d * e * f);
            return lhs == rhs;
        });
    if (v.right_act && v.left_coact && v.b_left_coact)
        pair_case("right_module_left_comodule", "λ(v·b) = Σ v₋₁b₋₁ ⊗ v₀·b₀", [&](const Word& b, const Word& x) {
            Tensor2 lhs = coact(v.left_coact, v.right_act(b, x)), rhs;
            for (const auto& [hb, c] : v.b_left_coact(b))
                for (const auto& [hv, d] : v.left_coact(x))
                    for (const auto& [h, e] : hmul(hv.first, hb.first))
                        for (const auto& [w, f] : v.right_act(hb.second, hv.second))
                            rhs.add({h, w}, c * d * e * f);
            return lhs == rhs;
        });
    if (v.right_act && v.right_coact && v.b_right_coact)
        pair_case("right_module_right_comodule", "ρ(v·b) = Σ v₀·b₀ ⊗ v₁b₁", [&](const Word& b, const Word& x) {
            Tensor2 lhs = coact(v.right_coact, v.right_act(b, x)), rhs;
            for (const auto& [bh, c] : v.b_right_coact(b))
                for (const auto& [vh, d] : v.right_coact(x))
                    for (const auto& [h, e] : hmul(vh.second, bh.second))
                        for (const auto& [w, f] : v.right_act(bh.first, vh.first))
                            rhs.add({w, h}, c * d * e * f);
            return lhs == rhs;
        });
    return r;
}

}  // namespace smashcalc
