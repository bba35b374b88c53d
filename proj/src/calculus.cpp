#include "smashcalc/calculus.hpp"

#include <deque>
#include <tuple>

namespace smashcalc {

namespace {

using Witness = std::optional<std::string>;

std::vector<Word> tail(const std::vector<Word>& parts, std::size_t from)
{
    return std::vector<Word>(parts.begin() + static_cast<long>(from), parts.end());
}

std::vector<Word> prepend(Word head, std::vector<Word> rest)
{
    rest.insert(rest.begin(), std::move(head));
    return rest;
}

}  // namespace

// ---------------------------------------------------------------- UniversalDga

UniversalDga::UniversalDga(std::shared_ptr<const Algebra> base, int max_form_degree)
    : base_(std::move(base)), max_degree_(max_form_degree)
{
    if (max_degree_ < 0)
        throw Error(ErrorKind::InvalidArgument, "negative form degree cap");
}

Element UniversalDga::mul(const Word& a, const Word& b) const
{
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find({a, b});
        if (it != cache_.end())
            return it->second;
    }
    Element out = mul_uncached(a, b);
    std::lock_guard<std::mutex> lock(mutex_);
    cache_.emplace(std::make_pair(a, b), out);
    return out;
}

Element UniversalDga::mul_uncached(const Word& x, const Word& y) const
{
    auto px = split_tensor(x);
    auto py = split_tensor(y);
    const Word one = base_->unit();
    Element out;
    if (px.size() == 1) {
        for (const auto& [w, c] : base_->mul(px[0], py[0])) {
            auto parts = py;
            parts[0] = w;
            out.add(join_tensor(parts), c);
        }
        return out;
    }
    // x = x'·da with da·(b0 db1···) = d(a b0) db1··· - a db0 db1···
    const Word a = px.back();
    px.pop_back();
    Word xprime = join_tensor(px);
    auto rest = tail(py, 1);
    Element z;
    for (const auto& [w, c] : base_->mul(a, py[0]))
        if (w != one)
            z.add(join_tensor(prepend(one, prepend(w, rest))), c);
    if (py[0] != one)
        z.add(join_tensor(prepend(a, py)), Scalar(-1));
    for (const auto& [k, c] : z)
        out.add(mul(xprime, k), c);
    return out;
}

Element UniversalDga::d(const Word& key) const
{
    auto parts = split_tensor(key);
    if (parts[0] == base_->unit())
        return {};
    return Element::single(join_tensor(prepend(base_->unit(), parts)));
}

std::vector<Word> UniversalDga::basis_up_to(int w) const
{
    auto base_words = base_->basis_up_to(w);
    std::vector<Word> nonunit;
    for (const auto& b : base_words)
        if (!base_->is_unit(b))
            nonunit.push_back(b);
    std::vector<Word> out;
    std::vector<std::pair<std::vector<Word>, int>> level;
    for (const auto& b : base_words) {
        level.push_back({{b}, base_->weight(b)});
        out.push_back(b);
    }
    for (int n = 1; n <= max_degree_; ++n) {
        std::vector<std::pair<std::vector<Word>, int>> next;
        for (const auto& [parts, wt] : level)
            for (const auto& b : nonunit) {
                int nw = wt + base_->weight(b);
                if (nw > w)
                    continue;
                auto p = parts;
                p.push_back(b);
                out.push_back(join_tensor(p));
                next.push_back({std::move(p), nw});
            }
        level = std::move(next);
    }
    return out;
}

int UniversalDga::weight(const Word& key) const
{
    int w = 0;
    for (const auto& p : split_tensor(key))
        w += base_->weight(p);
    return w;
}

std::string UniversalDga::word_str(const Word& key) const
{
    auto parts = split_tensor(key);
    if (parts.size() == 1)
        return base_->word_str(parts[0]);
    std::string out = base_->is_unit(parts[0]) ? "" : base_->word_str(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i)
        out += (out.empty() ? "" : "*") + std::string("d(") + base_->word_str(parts[i]) + ")";
    return out;
}

TensorN UniversalDga::embed(const Word& key) const
{
    auto parts = split_tensor(key);
    TensorN t = TensorN::single(join_tensor({parts[0]}));
    for (std::size_t i = 1; i < parts.size(); ++i) {
        const Word& a = parts[i];
        TensorN next;
        for (const auto& [k, c] : t) {
            auto p = split_tensor(k);
            auto appended = p;
            appended.push_back(a);
            next.add(join_tensor(appended), c);
            Word last = p.back();
            p.pop_back();
            for (const auto& [w, e] : base_->mul(last, a)) {
                auto q = p;
                q.push_back(w);
                q.push_back(base_->unit());
                next.add(join_tensor(q), -(c * e));
            }
        }
        t = std::move(next);
    }
    return t;
}

Report check_universal_dga(const UniversalDga& u, int w, const std::string& suite)
{
    const Algebra& B = u.base();
    auto base_words = B.basis_up_to(w);
    Report r;
    for (int n = 1; n <= u.max_form_degree(); ++n) {
        CheckBuilder b(suite, "universal.kernel_model_degree_" + std::to_string(n),
                       "Ωⁿ_u = ∩ ker(m_i) inside B^{⊗(n+1)}");
        // Ambient tuples of total weight <= w.
        std::vector<std::pair<std::vector<Word>, int>> tuples{{{}, 0}};
        for (int k = 0; k <= n; ++k) {
            std::vector<std::pair<std::vector<Word>, int>> next;
            for (const auto& [parts, wt] : tuples)
                for (const auto& x : base_words) {
                    int nw = wt + B.weight(x);
                    if (nw > w)
                        continue;
                    auto p = parts;
                    p.push_back(x);
                    next.push_back({std::move(p), nw});
                }
            tuples = std::move(next);
        }
        std::vector<Word> ambient;
        for (const auto& [parts, wt] : tuples)
            ambient.push_back(join_tensor(parts));
        KeyIndex<Word> amb(ambient);
        // Stacked adjacent multiplications; codomain keys are tagged by the position i.
        KeyIndex<std::pair<int, Word>> rows;
        std::vector<LinComb<std::pair<int, Word>>> cols;
        auto multiply_adjacent = [&](const TensorN& v) {
            LinComb<std::pair<int, Word>> out;
            for (const auto& [key, c] : v) {
                auto parts = split_tensor(key);
                for (int i = 0; i < n; ++i)
                    for (const auto& [m, e] : B.mul(parts[i], parts[i + 1])) {
                        auto q = parts;
                        q[i] = m;
                        q.erase(q.begin() + i + 1);
                        out.add({i, join_tensor(q)}, c * e);
                    }
            }
            return out;
        };
        for (const auto& a : ambient) {
            cols.push_back(multiply_adjacent(TensorN::single(a)));
            for (const auto& [k, c] : cols.back())
                rows.push(k);
        }
        Matrix m(rows.size(), ambient.size());
        for (std::size_t j = 0; j < ambient.size(); ++j)
            m.set_column(j, rows.coords(cols[j]));
        std::size_t kernel_dim = ambient.size() - rank(m);
        auto forms = u.forms(w, n);
        Matrix emb(ambient.size(), forms.size());
        for (std::size_t j = 0; j < forms.size(); ++j) {
            TensorN e = u.embed(forms[j]);
            b.expect(multiply_adjacent(e).is_zero(), "form " + u.word_str(forms[j]) + " does not embed into the kernel");
            emb.set_column(j, amb.coords(e));
        }
        std::size_t emb_rank = rank(emb);
        b.expect(emb_rank == forms.size(), "embedding is not injective: rank " + std::to_string(emb_rank));
        b.expect(emb_rank == kernel_dim, "kernel dimension " + std::to_string(kernel_dim) + " vs basis " +
                                             std::to_string(forms.size()));
        b.dim("ambient", ambient.size()).dim("kernel", kernel_dim).dim("basis", forms.size());
        r.add(b.done());
    }
    return r;
}

// ---------------------------------------------------------------- PresentedDga

PresentedDga::PresentedDga(std::shared_ptr<const Presentation> p, std::vector<Element> d_on_gens)
    : p_(std::move(p)), d_on_gens_(std::move(d_on_gens))
{
    if (d_on_gens_.size() != p_->generators().size())
        throw Error(ErrorKind::DimensionMismatch, "d must be given on every generator");
    for (std::size_t i = 0; i < d_on_gens_.size(); ++i)
        for (const auto& [w, c] : d_on_gens_[i])
            if (p_->form_degree(w) != p_->generators()[i].form_degree + 1)
                throw Error(ErrorKind::InvalidArgument, "d(" + p_->generators()[i].name + ") must raise the form degree by one");
}

Element PresentedDga::d(const Word& w) const
{
    if (w.empty())
        return {};
    if (w.size() == 1)
        return p_->normal_form(d_on_gens_.at(w[0]));
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(w);
        if (it != cache_.end())
            return it->second;
    }
    Word head(w.begin(), w.end() - 1);
    Element last = Element::single(Word{w.back()});
    Element out = p_->mul(d(head), last);
    out.add(p_->mul(Element::single(head), d_on_gens_.at(w.back())), p_->form_degree(head) % 2 ? -1 : 1);
    std::lock_guard<std::mutex> lock(mutex_);
    cache_.emplace(w, out);
    return out;
}

Report check_presented_dga(const PresentedDga& c, int w, const std::string& suite)
{
    const Presentation& P = c.presentation();
    Report r;
    {
        CheckBuilder b(suite, "presented_dga.d_respects_relations", "d(lhs) = d(rhs) for every rule");
        for (const auto& rule : P.rules()) {
            Element diff = c.d(rule.lhs) - c.d(rule.rhs);
            b.expect(diff.is_zero(), "rule " + P.word_str(rule.lhs) + " -> " + P.str(rule.rhs) + ": d(lhs) - d(rhs) = " + P.str(diff));
        }
        r.add(b.done());
    }
    {
        CheckBuilder b(suite, "presented_dga.d_squared_zero_on_generators", "d(d(x)) = 0");
        for (std::size_t i = 0; i < P.generators().size(); ++i) {
            Element dd = c.d(c.d(Word{static_cast<Letter>(i)}));
            b.expect(dd.is_zero(), P.generators()[i].name + ": d(d) = " + P.str(dd));
        }
        r.add(b.done());
    }
    {
        CheckBuilder b(suite, "presented_dga.spanning", "Ω¹ = span{a·db}");
        auto zero = c.forms(w, 0);
        SpanBasis<Word> span;
        for (const auto& a : zero)
            for (const auto& x : zero)
                if (P.weight(a) + P.weight(x) <= w)
                    span.insert(P.mul(Element::single(a), c.d(x)));
        auto one = c.forms(w, 1);
        for (const auto& f : one)
            b.expect(span.contains(Element::single(f)), "1-form " + P.word_str(f) + " is not in A·dA");
        b.dim("omega1", one.size()).dim("span", span.rank());
        r.add(b.done());
    }
    return r;
}

std::shared_ptr<PresentedDga> presented_fodc(std::shared_ptr<const Presentation> p, std::vector<Element> d_on_gens)
{
    auto c = std::make_shared<PresentedDga>(std::move(p), std::move(d_on_gens));
    const Presentation& P = c->presentation();
    for (const auto& rule : P.rules()) {
        Element diff = c->d(rule.lhs) - c->d(rule.rhs);
        if (!diff.is_zero())
            throw Error(ErrorKind::InconsistentDifferential,
                        "d(" + P.word_str(rule.lhs) + " - (" + P.str(rule.rhs) + ")) = " + P.str(diff));
    }
    return c;
}

std::shared_ptr<HAction> diagonal_action(std::shared_ptr<const HAction> base, std::shared_ptr<const UniversalDga> forms)
{
    const Bialgebra& H = base->hopf();
    auto fn = [base, forms, &H](const Word& h, const Word& key) {
        auto parts = split_tensor(key);
        if (parts.size() == 1)
            return base->act(h, parts[0]);
        Element out;
        for (const auto& [hk, c] : H.sweedler_expand(Element::single(h), static_cast<int>(parts.size()) - 1)) {
            auto hp = split_tensor(hk);
            Element acc = base->act(hp[0], parts[0]);
            for (std::size_t i = 1; i < parts.size() && !acc.is_zero(); ++i)
                acc = forms->mul(acc, forms->d(base->act(hp[i], parts[i])));
            out.add(acc, c);
        }
        return out;
    };
    auto keep = std::make_shared<std::pair<std::shared_ptr<const HAction>, std::shared_ptr<const UniversalDga>>>(base, forms);
    return std::make_shared<FunctionAction>("diagonal " + base->name(), H, *forms, fn, keep);
}

// ---------------------------------------------------------------- HopfForms

HopfForms::HopfForms(std::shared_ptr<const Bialgebra> h, std::shared_ptr<const UniversalDga> forms)
    : h_(std::move(h)), forms_(std::move(forms))
{
    if (forms_ && &forms_->base() != &h_->algebra())
        throw Error(ErrorKind::InvalidArgument, "forms must be built over the Hopf algebra itself");
}

const Algebra& HopfForms::forms() const
{
    if (forms_)
        return *forms_;
    return h_->algebra();
}

Tensor2 HopfForms::coproduct(const Word& gamma) const
{
    if (!forms_)
        return h_->comult(gamma);
    auto parts = split_tensor(gamma);
    if (parts.size() == 1)
        return h_->comult(gamma);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(gamma);
        if (it != cache_.end())
            return it->second;
    }
    Tensor2 out = h_->comult(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i)
        out = mul_tensor(out, d_tensor(h_->comult(parts[i])));
    std::lock_guard<std::mutex> lock(mutex_);
    cache_.emplace(gamma, out);
    return out;
}

Tensor2 HopfForms::left_coact(const Word& gamma) const
{
    Tensor2 out;
    for (const auto& [k, c] : coproduct(gamma))
        if (forms().form_degree(k.first) == 0)
            out.add(k, c);
    return out;
}

Tensor2 HopfForms::right_coact(const Word& gamma) const
{
    Tensor2 out;
    for (const auto& [k, c] : coproduct(gamma))
        if (forms().form_degree(k.second) == 0)
            out.add(k, c);
    return out;
}

Tensor2 HopfForms::left_coact(const Element& gamma) const
{
    Tensor2 out;
    for (const auto& [w, c] : gamma)
        out.add(left_coact(w), c);
    return out;
}

Tensor2 HopfForms::right_coact(const Element& gamma) const
{
    Tensor2 out;
    for (const auto& [w, c] : gamma)
        out.add(right_coact(w), c);
    return out;
}

Tensor2 HopfForms::mul_tensor(const Tensor2& a, const Tensor2& b) const
{
    const Algebra& F = forms();
    Tensor2 out;
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b) {
            Element l = F.mul(x.first, y.first);
            if (l.is_zero())
                continue;
            Element r = F.mul(x.second, y.second);
            Scalar sign = (F.form_degree(x.second) * F.form_degree(y.first)) % 2 ? Scalar(-1) : Scalar(1);
            for (const auto& [wl, cl] : l)
                for (const auto& [wr, cr] : r)
                    out.add({wl, wr}, sign * cx * cy * cl * cr);
        }
    return out;
}

Tensor2 HopfForms::d_tensor(const Tensor2& a) const
{
    if (!forms_)
        throw Error(ErrorKind::PreconditionFailed, "no differential on degree-0 forms");
    Tensor2 out;
    for (const auto& [k, c] : a) {
        for (const auto& [w, e] : forms_->d(k.first))
            out.add({w, k.second}, c * e);
        Scalar sign = forms_->form_degree(k.first) % 2 ? Scalar(-1) : Scalar(1);
        for (const auto& [w, e] : forms_->d(k.second))
            out.add({k.first, w}, sign * c * e);
    }
    return out;
}

std::string HopfForms::str2(const Tensor2& t) const
{
    std::vector<std::pair<std::string, Scalar>> terms;
    for (const auto& [k, c] : t)
        terms.emplace_back(forms().word_str(k.first) + "⊗" + forms().word_str(k.second), c);
    return format_terms(terms);
}

Report check_bicovariant(const HopfForms& f, int w, const std::string& suite)
{
    const UniversalDga* dga = f.dga();
    if (!dga)
        throw Error(ErrorKind::PreconditionFailed, "bicovariance needs a calculus on the Hopf algebra");
    const Bialgebra& H = f.hopf();
    const Algebra& HA = H.algebra();
    auto hwords = HA.basis_up_to(w);
    HopfModuleData data;
    data.name = "bicovariant";
    data.b = dga;
    data.h = &H;
    data.b_words = hwords;
    data.v_words = dga->forms(w, 1);
    data.v_str = [dga](const Word& k) { return dga->word_str(k); };
    data.left_act = [dga](const Word& b, const Word& v) { return dga->mul(b, v); };
    data.right_act = [dga](const Word& b, const Word& v) { return dga->mul(v, b); };
    data.left_coact = [&f](const Word& v) { return f.left_coact(v); };
    data.right_coact = [&f](const Word& v) { return f.right_coact(v); };
    data.b_left_coact = [&H](const Word& b) { return H.comult(b); };
    data.b_right_coact = data.b_left_coact;
    Report r = check_hopf_module(data, suite);

    r.add(run_cases(suite, "bicovariant.d_bicolinear", "λ(dh) = (1⊗d)Δh, ρ(dh) = (d⊗1)Δh", hwords.size(),
                    [&](std::size_t k) -> Witness {
                        const Word& h = hwords[k];
                        Tensor2 ll, rr;
                        for (const auto& [ab, c] : H.comult(h)) {
                            for (const auto& [x, e] : dga->d(ab.second))
                                ll.add({ab.first, x}, c * e);
                            for (const auto& [x, e] : dga->d(ab.first))
                                rr.add({x, ab.second}, c * e);
                        }
                        Element dh = dga->d(h);
                        if (f.left_coact(dh) == ll && f.right_coact(dh) == rr)
                            return std::nullopt;
                        return "h = " + HA.word_str(h) + ": λ(dh) = " + f.str2(f.left_coact(dh)) + ", ρ(dh) = " +
                               f.str2(f.right_coact(dh));
                    }));
    auto all = dga->basis_up_to(w);
    using Triple = std::tuple<Word, Word, Word>;
    r.add(run_cases(suite, "bicovariant.graded_coproduct_coassociative", "(Ω(Δ)⊗1)Ω(Δ) = (1⊗Ω(Δ))Ω(Δ)", all.size(),
                    [&](std::size_t k) -> Witness {
                        LinComb<Triple> lhs, rhs;
                        for (const auto& [xy, c] : f.coproduct(all[k])) {
                            for (const auto& [uv, e] : f.coproduct(xy.first))
                                lhs.add({uv.first, uv.second, xy.second}, c * e);
                            for (const auto& [uv, e] : f.coproduct(xy.second))
                                rhs.add({xy.first, uv.first, uv.second}, c * e);
                        }
                        if (lhs == rhs)
                            return std::nullopt;
                        return "γ = " + dga->word_str(all[k]);
                    }));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j)
            if (dga->form_degree(all[i]) + dga->form_degree(all[j]) <= dga->max_form_degree())
                pairs.emplace_back(i, j);
    r.add(run_cases(suite, "bicovariant.graded_coproduct_multiplicative", "Ω(Δ)(uv) = Ω(Δ)(u)Ω(Δ)(v)", pairs.size(),
                    [&](std::size_t k) -> Witness {
                        const Word& u = all[pairs[k].first];
                        const Word& v = all[pairs[k].second];
                        Tensor2 lhs;
                        for (const auto& [x, c] : dga->mul(u, v))
                            lhs.add(f.coproduct(x), c);
                        Tensor2 rhs = f.mul_tensor(f.coproduct(u), f.coproduct(v));
                        if (lhs == rhs)
                            return std::nullopt;
                        return "u = " + dga->word_str(u) + ", v = " + dga->word_str(v) + ": " + f.str2(lhs) + " vs " +
                               f.str2(rhs);
                    }));
    std::vector<Word> low;
    for (const auto& x : all)
        if (dga->form_degree(x) < dga->max_form_degree())
            low.push_back(x);
    r.add(run_cases(suite, "bicovariant.graded_coproduct_chain_map", "Ω(Δ)∘d = D∘Ω(Δ)", low.size(),
                    [&](std::size_t k) -> Witness {
                        Tensor2 lhs;
                        for (const auto& [x, c] : dga->d(low[k]))
                            lhs.add(f.coproduct(x), c);
                        Tensor2 rhs = f.d_tensor(f.coproduct(low[k]));
                        if (lhs == rhs)
                            return std::nullopt;
                        return "γ = " + dga->word_str(low[k]) + ": " + f.str2(lhs) + " vs " + f.str2(rhs);
                    }));
    return r;
}

Report check_quotient_bicovariant(const HopfForms& f, const std::vector<Element>& generators, const std::string& suite)
{
    const UniversalDga* dga = f.dga();
    if (!dga)
        throw Error(ErrorKind::PreconditionFailed, "quotient calculus needs a calculus on the Hopf algebra");
    auto hwords = f.hopf().algebra().basis_up_to(0);
    SpanBasis<Word> n;
    std::deque<Element> todo(generators.begin(), generators.end());
    while (!todo.empty()) {
        Element v = todo.front();
        todo.pop_front();
        if (!n.insert(v))
            continue;
        for (const auto& b : hwords) {
            todo.push_back(dga->mul(Element::single(b), v));
            todo.push_back(dga->mul(v, Element::single(b)));
        }
    }
    auto nb = n.basis();
    SpanBasis<WordPair> left, right;
    for (const auto& h : hwords)
        for (const auto& v : nb) {
            Tensor2 l, r;
            for (const auto& [k, c] : v) {
                l.add({h, k}, c);
                r.add({k, h}, c);
            }
            left.insert(l);
            right.insert(r);
        }
    Report rep;
    CheckBuilder lb(suite, "quotient.left_subcomodule", "λ(N) ⊆ H⊗N");
    CheckBuilder rb(suite, "quotient.right_subcomodule", "ρ(N) ⊆ N⊗H");
    for (const auto& v : nb) {
        lb.expect(left.contains(f.left_coact(v)), "n = " + dga->str(v) + ": λ(n) = " + f.str2(f.left_coact(v)));
        rb.expect(right.contains(f.right_coact(v)), "n = " + dga->str(v) + ": ρ(n) = " + f.str2(f.right_coact(v)));
    }
    lb.dim("N", nb.size());
    rep.add(lb.done());
    rep.add(rb.done());
    return rep;
}

void require_quotient_bicovariant(const HopfForms& f, const std::vector<Element>& generators)
{
    Report r = check_quotient_bicovariant(f, generators);
    for (const auto& c : r.checks())
        if (!c.passed)
            throw Error(ErrorKind::NotBicovariant, c.name + ": " + (c.witnesses.empty() ? "" : c.witnesses.front()));
}

}  // namespace smashcalc
