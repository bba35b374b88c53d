#include "smashcalc/exactness.hpp"

namespace smashcalc {

namespace {

using Witness = std::optional<std::string>;
using Triple = std::tuple<Word, Word, Word>;

LinComb<Triple> matching_defect(const Tensor2& t, const CoactFn& right_v, const CoactFn& left_w)
{
    LinComb<Triple> out;
    for (const auto& [k, c] : t) {
        for (const auto& [vh, e] : right_v(k.first))
            out.add({vh.first, vh.second, k.second}, c * e);
        for (const auto& [hw, e] : left_w(k.second))
            out.add({k.first, hw.first, hw.second}, -c * e);
    }
    return out;
}

template <class Key>
std::vector<LinComb<Key>> nullspace_of(const std::vector<Key>& domain, const std::vector<LinComb<WordPair>>& images,
                                       Exec exec)
{
    KeyIndex<WordPair> rows;
    for (const auto& img : images)
        for (const auto& [k, c] : img)
            rows.push(k);
    Matrix m(rows.size(), domain.size());
    for (std::size_t j = 0; j < images.size(); ++j)
        for (const auto& [k, c] : images[j])
            m(*rows.find(k), j) = c;
    Matrix ns = nullspace(m, exec);
    std::vector<LinComb<Key>> out;
    for (std::size_t j = 0; j < ns.cols(); ++j) {
        LinComb<Key> v;
        for (std::size_t i = 0; i < domain.size(); ++i)
            v.add(domain[i], ns(i, j));
        out.push_back(v);
    }
    return out;
}

template <class Key>
SpanBasis<Key> span_of(const std::vector<LinComb<Key>>& vs)
{
    SpanBasis<Key> s;
    for (const auto& v : vs)
        s.insert(v);
    return s;
}

}  // namespace

Cotensor cotensor(const std::vector<WordPair>& ambient, const CoactFn& right_v, const CoactFn& left_w, Exec exec)
{
    std::vector<LinComb<Triple>> defects;
    KeyIndex<Triple> rows;
    for (const auto& p : ambient) {
        defects.push_back(matching_defect(Tensor2::single(p), right_v, left_w));
        for (const auto& [k, c] : defects.back())
            rows.push(k);
    }
    Matrix m(rows.size(), ambient.size());
    for (std::size_t j = 0; j < defects.size(); ++j)
        for (const auto& [k, c] : defects[j])
            m(*rows.find(k), j) = c;
    Matrix ns = nullspace(m, exec);
    Cotensor out{ambient, {}};
    for (std::size_t j = 0; j < ns.cols(); ++j) {
        Tensor2 t;
        for (std::size_t i = 0; i < ambient.size(); ++i)
            t.add(ambient[i], ns(i, j));
        out.basis.push_back(t);
    }
    return out;
}

bool satisfies_cotensor(const Tensor2& t, const CoactFn& right_v, const CoactFn& left_w)
{
    return matching_defect(t, right_v, left_w).is_zero();
}

// ---------------------------------------------------------------- maps

ExactSequences::ExactSequences(std::shared_ptr<const SmashProduct> s) : s_(std::move(s))
{
    if (!dynamic_cast<const Dga*>(&s_->base()))
        throw Error(ErrorKind::PreconditionFailed, "the module algebra carries no calculus");
    if (!s_->fiber().dga())
        throw Error(ErrorKind::PreconditionFailed, "the Hopf algebra carries no calculus");
    if (s_->max_form_degree() < 1)
        throw Error(ErrorKind::PreconditionFailed, "smash calculus truncated below degree 1");
}

std::vector<WordPair> ExactSequences::left_carrier(int w) const
{
    const auto& A = dynamic_cast<const Dga&>(s_->base());
    std::vector<WordPair> out;
    for (const auto& h : s_->fiber().hopf().algebra().basis_up_to(w))
        for (const auto& om : A.forms(w, 1))
            if (A.weight(om) + s_->fiber().hopf().algebra().weight(h) <= w)
                out.emplace_back(h, om);
    return out;
}

std::vector<WordPair> ExactSequences::right_carrier(int w) const
{
    std::vector<WordPair> out;
    for (const auto& [h, om] : left_carrier(w))
        out.emplace_back(om, h);
    return out;
}

std::vector<Word> ExactSequences::omega1(int w) const { return s_->forms(w, 1); }

std::vector<Word> ExactSequences::horizontal(int w) const
{
    std::vector<Word> out;
    for (const auto& u : omega1(w))
        if (s_->base().form_degree(smash_split(u).first) == 1)
            out.push_back(u);
    return out;
}

std::vector<Word> ExactSequences::vertical(int w) const
{
    std::vector<Word> out;
    for (const auto& u : omega1(w))
        if (s_->base().form_degree(smash_split(u).first) == 0)
            out.push_back(u);
    return out;
}

std::vector<WordPair> ExactSequences::cotensor_ambient(int w) const
{
    const UniversalDga& F = *s_->fiber().dga();
    auto gammas = F.forms(w, 1);
    std::vector<WordPair> out;
    for (const auto& u : s_->forms(w, 0))
        for (const auto& g : gammas)
            if (s_->weight(u) + F.weight(g) <= w)
                out.emplace_back(u, g);
    return out;
}

CoactFn ExactSequences::right_coaction() const
{
    auto s = s_;
    return [s](const Word& u) { return s->coaction(u); };
}

CoactFn ExactSequences::left_coaction() const
{
    auto s = s_;
    return [s](const Word& g) { return s->fiber().left_coact(g); };
}

Cotensor ExactSequences::cotensor_space(int w) const
{
    return cotensor(cotensor_ambient(w), right_coaction(), left_coaction());
}

Element ExactSequences::m_left(const Tensor2& x) const
{
    Element out;
    for (const auto& [k, c] : x)
        out.add(s_->mul(smash_key(s_->base().unit(), k.first), smash_key(k.second, s_->fiber_forms().unit())), c);
    return out;
}

Element ExactSequences::m_right(const Tensor2& x) const
{
    Element out;
    for (const auto& [k, c] : x)
        out.add(s_->mul(smash_key(k.first, s_->fiber_forms().unit()), smash_key(s_->base().unit(), k.second)), c);
    return out;
}

Element ExactSequences::alpha_left(const Tensor2& x) const
{
    const Bialgebra& H = s_->fiber().hopf();
    Element out;
    for (const auto& [k, c] : x)
        for (const auto& [hh, e] : H.comult(k.first))
            out.add(s_->pair(s_->action().act(hh.first, k.second), Element::single(hh.second)), c * e);
    return out;
}

Tensor2 ExactSequences::alpha_left_inv(const Element& u) const
{
    const Bialgebra& H = s_->fiber().hopf();
    if (!H.has_antipode_inverse())
        throw Error(ErrorKind::PreconditionFailed, "α_ℓ⁻¹ needs the inverse antipode");
    Tensor2 out;
    for (const auto& [k, c] : u) {
        auto [om, h] = smash_split(k);
        for (const auto& [hh, e] : H.comult(h))
            for (const auto& [sh, f] : H.antipode_inverse(hh.first))
                for (const auto& [v, g] : s_->action().act(sh, om))
                    out.add({hh.second, v}, c * e * f * g);
    }
    return out;
}

Element ExactSequences::alpha_right(const Tensor2& x) const
{
    Element out;
    for (const auto& [k, c] : x)
        out.add(smash_key(k.first, k.second), c);
    return out;
}

Tensor2 ExactSequences::alpha_right_inv(const Element& u) const
{
    Tensor2 out;
    for (const auto& [k, c] : u) {
        auto [om, h] = smash_split(k);
        out.add({om, h}, c);
    }
    return out;
}

Tensor2 ExactSequences::normalize_left(const Word& ah, const Word& form) const
{
    const Bialgebra& H = s_->fiber().hopf();
    const Algebra& A = s_->base();
    auto [a, h] = smash_split(ah);
    Tensor2 out;
    for (const auto& [hh, e] : H.comult(h))
        for (const auto& [sh, f] : H.antipode_inverse(hh.first))
            for (const auto& [v, g] : A.mul(s_->action().act(sh, a), Element::single(form)))
                out.add({hh.second, v}, e * f * g);
    return out;
}

Tensor2 ExactSequences::normalize_right(const Word& form, const Word& ah) const
{
    auto [a, h] = smash_split(ah);
    Tensor2 out;
    for (const auto& [v, c] : s_->base().mul(form, a))
        out.add({v, h}, c);
    return out;
}

Tensor2 ExactSequences::pi1(const Element& u) const
{
    Tensor2 out;
    for (const auto& [k, c] : s_->coaction(u))
        if (s_->form_degree(k.first) == 0)
            out.add(k, c);
    return out;
}

Tensor2 ExactSequences::beta(const Element& u) const
{
    const Bialgebra& H = s_->fiber().hopf();
    const Algebra& HA = H.algebra();
    const UniversalDga& F = *s_->fiber().dga();
    Tensor2 out;
    for (const auto& [k, c] : u) {
        auto [a, g] = smash_split(k);
        if (F.form_degree(g) != 1 || s_->base().form_degree(a) != 0)
            throw Error(ErrorKind::InvalidArgument, "β is defined on A#Ω¹(H)");
        // λ(x⊗y) = x₁y₁⊗(x₂⊗y₂); x₂⊗y₂ read back as x₂·dy₂ (terms with y₂ = 1 cancel in the kernel).
        for (const auto& [xy, e] : F.embed(g)) {
            auto parts = split_tensor(xy);
            for (const auto& [xx, f1] : H.comult(parts[0]))
                for (const auto& [yy, f2] : H.comult(parts[1])) {
                    if (HA.is_unit(yy.second))
                        continue;
                    for (const auto& [z, f3] : HA.mul(xx.first, yy.first))
                        out.add({smash_key(a, z), join_tensor({xx.second, yy.second})}, c * e * f1 * f2 * f3);
                }
        }
    }
    return out;
}

Element ExactSequences::beta_inv(const Tensor2& t) const
{
    const Bialgebra& H = s_->fiber().hopf();
    Element out;
    for (const auto& [k, c] : t) {
        auto [a, h] = smash_split(k.first);
        Scalar e = H.counit(h);
        if (!e.is_zero())
            out.add(smash_key(a, k.second), c * e);
    }
    return out;
}

Element ExactSequences::pr2(const Element& u) const
{
    Element out;
    for (const auto& [k, c] : u)
        if (s_->base().form_degree(smash_split(k).first) == 0)
            out.add(k, c);
    return out;
}

// ---------------------------------------------------------------- verification

Report check_short_exact(const ExactSequences& e, int w, const std::string& suite)
{
    const SmashProduct& s = e.smash();
    const std::string tag = "_w" + std::to_string(w);
    auto lc = e.left_carrier(w);
    auto rc = e.right_carrier(w);
    auto om = e.omega1(w);
    auto hor = e.horizontal(w);
    auto ver = e.vertical(w);
    Cotensor ct = e.cotensor_space(w);
    CoactFn rv = e.right_coaction();
    CoactFn lw = e.left_coaction();

    std::vector<Element> ml, mr;
    for (const auto& p : lc)
        ml.push_back(e.m_left(Tensor2::single(p)));
    for (const auto& p : rc)
        mr.push_back(e.m_right(Tensor2::single(p)));
    std::vector<Tensor2> pis;
    for (const auto& u : om)
        pis.push_back(e.pi1(Element::single(u)));
    auto kerp = nullspace_of(om, pis, default_exec());
    auto span_l = span_of(ml);
    auto span_r = span_of(mr);
    auto span_pi = span_of(pis);

    Report r;
    auto injective = [&](const std::string& side, const std::vector<Element>& imgs, const SpanBasis<Word>& sp) {
        CheckBuilder cb(suite, "exactness.m_" + side + "_injective" + tag, "m_" + side + " is injective");
        cb.cases(imgs.size());
        cb.expect(sp.rank() == imgs.size(), "rank " + std::to_string(sp.rank()) + " < " + std::to_string(imgs.size()));
        cb.dim("carrier", imgs.size()).dim("rank", sp.rank());
        r.add(cb.done());
    };
    injective("left", ml, span_l);
    injective("right", mr, span_r);
    {
        CheckBuilder cb(suite, "exactness.pi1_surjective" + tag, "π¹ maps Ω¹(A#H) onto (A#H)□Ω¹(H)");
        cb.cases(pis.size() + ct.dim());
        for (std::size_t i = 0; i < pis.size(); ++i)
            if (!satisfies_cotensor(pis[i], rv, lw))
                cb.fail("π¹(" + s.word_str(om[i]) + ") is outside the cotensor product");
        for (const auto& t : ct.basis)
            if (!span_pi.contains(t))
                cb.fail("cotensor element " + s.str2(t) + " is not in the image of π¹");
        cb.expect(span_pi.rank() == ct.dim(),
                  "rank π¹ = " + std::to_string(span_pi.rank()) + ", cotensor dimension " + std::to_string(ct.dim()));
        cb.dim("omega1", om.size()).dim("cotensor", ct.dim()).dim("cotensor_ambient", ct.ambient.size());
        cb.dim("rank_pi1", span_pi.rank());
        r.add(cb.done());
    }
    auto kernel_image = [&](const std::string& side, const std::vector<WordPair>& carrier, const std::vector<Element>& imgs,
                            const SpanBasis<Word>& sp) {
        CheckBuilder cb(suite, "exactness.kernel_equals_image_" + side + tag, "ker π¹ = im m_" + side);
        cb.cases(imgs.size() + kerp.size());
        for (std::size_t i = 0; i < imgs.size(); ++i)
            if (!e.pi1(imgs[i]).is_zero())
                cb.fail("π¹ m_" + side + "(" + s.fiber().hopf().algebra().word_str(carrier[i].first) + ", " +
                        s.base().word_str(carrier[i].second) + ") ≠ 0");
        for (const auto& k : kerp)
            if (!sp.contains(k))
                cb.fail("kernel element " + s.str(k) + " is not in im m_" + side);
        cb.expect(kerp.size() == sp.rank(),
                  "dim ker π¹ = " + std::to_string(kerp.size()) + ", rank m_" + side + " = " + std::to_string(sp.rank()));
        cb.dim("kernel", kerp.size()).dim("image", sp.rank());
        r.add(cb.done());
    };
    kernel_image("left", lc, ml, span_l);
    kernel_image("right", rc, mr, span_r);
    {
        CheckBuilder cb(suite, "exactness.images_agree" + tag, "im m_ℓ = im m_r = Ω¹(A)#H");
        cb.cases(mr.size() + hor.size());
        for (const auto& x : mr)
            if (!span_l.contains(x))
                cb.fail(s.str(x) + " is in im m_r but not in im m_ℓ");
        for (const auto& u : hor)
            if (!span_l.contains(Element::single(u)))
                cb.fail(s.word_str(u) + " is not in im m_ℓ");
        cb.expect(span_l.rank() == span_r.rank() && span_l.rank() == hor.size(), "ranks differ");
        cb.dim("horizontal", hor.size()).dim("vertical", ver.size()).dim("kernel", kerp.size());
        r.add(cb.done());
    }
    auto pair_str = [&](const WordPair& p, bool h_first) {
        const Algebra& H = s.fiber().hopf().algebra();
        return h_first ? "(1#" + H.word_str(p.first) + ")⊗" + s.base().word_str(p.second)
                       : s.base().word_str(p.first) + "⊗(1#" + H.word_str(p.second) + ")";
    };
    r.add(run_cases(suite, "exactness.triangle_left" + tag, "m_ℓ = ι∘α_ℓ", lc.size(), [&](std::size_t i) -> Witness {
        Element a = e.alpha_left(Tensor2::single(lc[i]));
        if (ml[i] == a)
            return std::nullopt;
        return pair_str(lc[i], true) + ": m_ℓ = " + s.str(ml[i]) + ", α_ℓ = " + s.str(a);
    }));
    r.add(run_cases(suite, "exactness.triangle_right" + tag, "m_r = ι∘α_r", rc.size(), [&](std::size_t i) -> Witness {
        Element a = e.alpha_right(Tensor2::single(rc[i]));
        if (mr[i] == a)
            return std::nullopt;
        return pair_str(rc[i], false) + ": m_r = " + s.str(mr[i]) + ", α_r = " + s.str(a);
    }));
    r.add(run_cases(suite, "exactness.triangle_beta" + tag, "π¹ = β∘pr₂", om.size(), [&](std::size_t i) -> Witness {
        Element v = e.pr2(Element::single(om[i]));
        Tensor2 b = e.beta(v);
        if (pis[i] == b)
            return std::nullopt;
        return "u = " + s.word_str(om[i]) + ": π¹ = " + s.str2(pis[i]) + ", βpr₂ = " + s.str2(b);
    }));
    r.add(run_cases(suite, "exactness.alpha_left_inverse" + tag, "α_ℓ⁻¹α_ℓ = id, α_ℓα_ℓ⁻¹ = id", lc.size() + hor.size(),
                    [&](std::size_t i) -> Witness {
                        if (i < lc.size()) {
                            Tensor2 back = e.alpha_left_inv(e.alpha_left(Tensor2::single(lc[i])));
                            if (back == Tensor2::single(lc[i]))
                                return std::nullopt;
                            return pair_str(lc[i], true) + ": α_ℓ⁻¹α_ℓ gives a different element";
                        }
                        const Word& u = hor[i - lc.size()];
                        Element back = e.alpha_left(e.alpha_left_inv(Element::single(u)));
                        if (back == Element::single(u))
                            return std::nullopt;
                        return "u = " + s.word_str(u) + ": α_ℓα_ℓ⁻¹(u) = " + s.str(back);
                    }));
    r.add(run_cases(suite, "exactness.alpha_right_inverse" + tag, "α_r⁻¹α_r = id, α_rα_r⁻¹ = id", rc.size() + hor.size(),
                    [&](std::size_t i) -> Witness {
                        if (i < rc.size()) {
                            Tensor2 back = e.alpha_right_inv(e.alpha_right(Tensor2::single(rc[i])));
                            if (back == Tensor2::single(rc[i]))
                                return std::nullopt;
                            return pair_str(rc[i], false) + ": α_r⁻¹α_r gives a different element";
                        }
                        const Word& u = hor[i - rc.size()];
                        Element back = e.alpha_right(e.alpha_right_inv(Element::single(u)));
                        if (back == Element::single(u))
                            return std::nullopt;
                        return "u = " + s.word_str(u) + ": α_rα_r⁻¹(u) = " + s.str(back);
                    }));
    r.add(run_cases(suite, "exactness.beta_inverse" + tag, "β⁻¹β = id on A#Ω¹(H), ββ⁻¹ = id on (A#H)□Ω¹(H)",
                    ver.size() + ct.dim(), [&](std::size_t i) -> Witness {
                        if (i < ver.size()) {
                            Element back = e.beta_inv(e.beta(Element::single(ver[i])));
                            if (back == Element::single(ver[i]))
                                return std::nullopt;
                            return "u = " + s.word_str(ver[i]) + ": β⁻¹β(u) = " + s.str(back);
                        }
                        const Tensor2& t = ct.basis[i - ver.size()];
                        Tensor2 back = e.beta(e.beta_inv(t));
                        if (back == t)
                            return std::nullopt;
                        return "t = " + s.str2(t) + ": ββ⁻¹(t) = " + s.str2(back);
                    }));

    const auto& A = dynamic_cast<const Dga&>(s.base());
    auto a0 = A.forms(w, 0);
    auto forms1 = A.forms(w, 1);
    auto hb = s.fiber().hopf().algebra().basis_up_to(w);
    std::vector<std::tuple<Word, Word, Word, Word>> quads;  // a, h, b, ω
    for (const auto& a : a0)
        for (const auto& h : hb)
            for (const auto& b : a0)
                for (const auto& f : forms1)
                    if (A.weight(a) + A.weight(b) + A.weight(f) <= w)
                        quads.emplace_back(a, h, b, f);
    r.add(run_cases(suite, "exactness.balanced_left" + tag,
                    "(a#h)·ω = m_ℓ N((a#h)⊗ω) and N((a#h)b⊗ω) = N((a#h)⊗bω)", quads.size(), [&](std::size_t i) -> Witness {
                        const auto& [a, h, b, f] = quads[i];
                        Word ah = smash_key(a, h);
                        Element direct = s.mul(ah, smash_key(f, s.fiber_forms().unit()));
                        Element via = e.m_left(e.normalize_left(ah, f));
                        Tensor2 n1;
                        for (const auto& [k, c] : s.mul(ah, smash_key(b, s.fiber_forms().unit())))
                            n1.add(e.normalize_left(k, f), c);
                        Tensor2 n2;
                        for (const auto& [v, c] : A.mul(b, f))
                            n2.add(e.normalize_left(ah, v), c);
                        if (direct == via && n1 == n2)
                            return std::nullopt;
                        return "a = " + A.word_str(a) + ", h = " + s.fiber().hopf().algebra().word_str(h) + ", b = " +
                               A.word_str(b) + ", ω = " + A.word_str(f);
                    }));
    r.add(run_cases(suite, "exactness.balanced_right" + tag,
                    "ω·(a#h) = m_r N(ω⊗(a#h)) and N(ωb⊗(a#h)) = N(ω⊗(b#1)(a#h))", quads.size(),
                    [&](std::size_t i) -> Witness {
                        const auto& [a, h, b, f] = quads[i];
                        Word ah = smash_key(a, h);
                        Element direct = s.mul(smash_key(f, s.fiber_forms().unit()), ah);
                        Element via = e.m_right(e.normalize_right(f, ah));
                        Tensor2 n1;
                        for (const auto& [v, c] : A.mul(f, b))
                            n1.add(e.normalize_right(v, ah), c);
                        Tensor2 n2;
                        for (const auto& [k, c] : s.mul(smash_key(b, s.fiber_forms().unit()), ah))
                            n2.add(e.normalize_right(f, k), c);
                        if (direct == via && n1 == n2)
                            return std::nullopt;
                        return "a = " + A.word_str(a) + ", h = " + s.fiber().hopf().algebra().word_str(h) + ", b = " +
                               A.word_str(b) + ", ω = " + A.word_str(f);
                    }));
    auto zero = s.forms(w, 0);
    const UniversalDga& F = *s.fiber().dga();
    r.add(run_cases(suite, "exactness.pi1_d_square" + tag, "π¹(dx) = x₀⊗dx₁", zero.size(), [&](std::size_t i) -> Witness {
        Tensor2 lhs = e.pi1(s.d(zero[i]));
        Tensor2 rhs;
        for (const auto& [k, c] : s.coaction(zero[i]))
            for (const auto& [g, f] : F.d(k.second))
                rhs.add({k.first, g}, c * f);
        if (lhs == rhs)
            return std::nullopt;
        return "x = " + s.word_str(zero[i]) + ": π¹(dx) = " + s.str2(lhs) + ", x₀⊗dx₁ = " + s.str2(rhs);
    }));
    return r;
}

}  // namespace smashcalc
