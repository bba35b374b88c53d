#include "smashcalc/connections.hpp"

#include <random>

namespace smashcalc {

namespace {

using Witness = std::optional<std::string>;
using Triple = std::tuple<Word, Word, Word>;

Word idx(std::size_t i) { return Word{static_cast<Letter>(i)}; }

Scalar dot(const Vector& a, const Vector& b)
{
    Scalar s;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

}  // namespace

Element Connection::operator()(const Element& v) const
{
    Element out;
    for (const auto& [k, c] : v)
        out.add(on_vertical(k), c);
    return out;
}

Connections::Connections(std::shared_ptr<const ExactSequences> e) : e_(std::move(e))
{
    const SmashProduct& s = e_->smash();
    const HopfForms& hf = s.fiber();
    const Bialgebra& H = hf.hopf();
    const UniversalDga& F = *hf.dga();
    if (!H.has_antipode_inverse())
        throw Error(ErrorKind::SingularAntipode, "the Lie algebra needs a bijective antipode");
    words1_ = F.forms(0, 1);
    FunctionCoaction lam("λ", H, F, Side::Left, [&hf](const Word& g) { return hf.left_coact(g); });
    Subspace co = coinvariants(lam, words1_);
    coinv_matrix_ = co.inclusion.matrix;
    KeyIndex<Word> index(words1_);
    for (std::size_t j = 0; j < coinv_matrix_.cols(); ++j)
        coinv_.push_back(index.combination(coinv_matrix_.column(j)));

    // ρ(x^l) = Σ_k x^k ⊗ c_kl, then ρ(x_j) = Σ_k x_k ⊗ S⁻¹(c_jk).
    std::size_t n = coinv_.size();
    std::vector<std::vector<Element>> c(n, std::vector<Element>(n));
    for (std::size_t l = 0; l < n; ++l) {
        std::map<Word, Element> by_h;
        for (const auto& [k, x] : hf.right_coact(coinv_[l]))
            by_h[k.second].add(k.first, x);
        for (const auto& [h, part] : by_h) {
            Vector v = coinvariant_coords(part);
            for (std::size_t k = 0; k < n; ++k)
                if (!v[k].is_zero())
                    c[k][l].add(h, v[k]);
        }
    }
    coact_.assign(n, std::vector<Element>(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            coact_[j][k] = H.antipode_inverse(c[j][k]);
}

Vector Connections::coinvariant_coords(const Element& gamma) const
{
    KeyIndex<Word> index(words1_);
    auto v = solve(coinv_matrix_, index.coords(gamma));
    if (!v)
        throw Error(ErrorKind::NotInImage, "form is not left coinvariant: " + smash().fiber_forms().str(gamma));
    return *v;
}

Vector Connections::basis_vector(std::size_t i) const
{
    Vector v(dim());
    v.at(i) = Scalar(1);
    return v;
}

std::map<Word, Vector> Connections::vertical_expand(const Word& gamma) const
{
    const HopfForms& hf = smash().fiber();
    const Bialgebra& H = hf.hopf();
    const Algebra& F = smash().fiber_forms();
    std::map<Word, Element> inner;
    for (const auto& [a, c1] : hf.left_coact(gamma))
        for (const auto& [b, c2] : hf.left_coact(a.second))
            inner[a.first].add(F.mul(H.antipode(Element::single(b.first)), Element::single(b.second)), c1 * c2);
    std::map<Word, Vector> out;
    for (const auto& [h, x] : inner)
        if (!x.is_zero())
            out.emplace(h, coinvariant_coords(x));
    return out;
}

std::map<Word, Vector> Connections::vertical_expand_right(const Word& gamma) const
{
    const HopfForms& hf = smash().fiber();
    const Bialgebra& H = hf.hopf();
    const Algebra& F = smash().fiber_forms();
    std::map<Word, Element> inner;
    for (const auto& [a, c1] : hf.left_coact(gamma))
        for (const auto& [b, c2] : hf.left_coact(a.second))
            inner[a.first].add(F.mul(Element::single(b.second), H.antipode_inverse(Element::single(b.first))), c1 * c2);
    std::map<Word, Vector> out;
    for (const auto& [h, x] : inner)
        if (!x.is_zero())
            out.emplace(h, coinvariant_coords(x));
    return out;
}

Element Connections::field(const Vector& x, const Element& u) const
{
    const SmashProduct& s = smash();
    Element out;
    for (const auto& [k, c] : u) {
        auto [a, g] = smash_split(k);
        if (s.base().form_degree(a) != 0 || s.fiber_forms().form_degree(g) != 1)
            continue;
        for (const auto& [h, v] : vertical_expand(g)) {
            Scalar p = dot(v, x);
            if (!p.is_zero())
                out.add(smash_key(a, h), c * p);
        }
    }
    return out;
}

HForm Connections::pair_field(const HForm& phi, const Vector& x) const
{
    HForm out;
    for (const auto& p : phi)
        out.push_back(field(x, p));
    return out;
}

HForm Connections::const_v(const Vector& v) const
{
    HForm out;
    for (const auto& c : v)
        out.push_back(c * smash().one());
    return out;
}

Element Connections::pair_dual(const Vector& functional, const HForm& phi) const
{
    Element out;
    for (std::size_t i = 0; i < phi.size(); ++i)
        out.add(phi[i], functional.at(i));
    return out;
}

HForm Connections::push(const std::function<Element(const Element&)>& f, const HForm& phi) const
{
    HForm out;
    for (const auto& p : phi)
        out.push_back(f(p));
    return out;
}

Tensor2 Connections::rho1(const Element& u) const
{
    Tensor2 out;
    for (const auto& [k, c] : smash().coaction(u))
        if (smash().form_degree(k.first) == 1)
            out.add(k, c);
    return out;
}

bool Connections::invariant_codiagonal(const HForm& phi) const
{
    const Algebra& H = smash().fiber().hopf().algebra();
    if (phi.size() != dim())
        throw Error(ErrorKind::ShapeMismatch, "𝔥-valued form has the wrong number of components");
    LinComb<Triple> lhs, rhs;
    for (std::size_t i = 0; i < phi.size(); ++i) {
        for (const auto& [uh, c] : rho1(phi[i]))
            for (std::size_t k = 0; k < dim(); ++k)
                for (const auto& [h, e] : H.mul(coact_[i][k], Element::single(uh.second)))
                    lhs.add({idx(k), uh.first, h}, c * e);
        for (const auto& [u, c] : phi[i])
            rhs.add({idx(i), u, H.unit()}, c);
    }
    return lhs == rhs;
}

bool Connections::invariant_twisted(const HForm& phi) const
{
    const Bialgebra& H = smash().fiber().hopf();
    if (phi.size() != dim())
        throw Error(ErrorKind::ShapeMismatch, "𝔥-valued form has the wrong number of components");
    LinComb<Triple> lhs, rhs;
    for (std::size_t i = 0; i < phi.size(); ++i) {
        for (const auto& [uh, c] : rho1(phi[i]))
            lhs.add({idx(i), uh.first, uh.second}, c);
        for (std::size_t k = 0; k < dim(); ++k)
            for (const auto& [h, e] : H.antipode(coact_[i][k]))
                for (const auto& [u, c] : phi[i])
                    rhs.add({idx(k), u, h}, c * e);
    }
    return lhs == rhs;
}

HForm Connections::canonical_form() const
{
    HForm out;
    for (const auto& x : coinv_)
        out.push_back(smash().pair(smash().base().one(), x));
    return out;
}

Connection Connections::canonical() const
{
    return {"two-sided", [](const Word& k) { return Element::single(k); }};
}

Connection Connections::from_form(const HForm& phi) const
{
    if (phi.size() != dim())
        throw Error(ErrorKind::ShapeMismatch, "𝔥-valued form has the wrong number of components");
    return {"left", [this, phi](const Word& k) {
                const SmashProduct& s = smash();
                auto [a, g] = smash_split(k);
                Element out;
                for (const auto& [h, v] : vertical_expand(g))
                    for (std::size_t i = 0; i < v.size(); ++i)
                        if (!v[i].is_zero())
                            out.add(s.mul(Element::single(smash_key(a, h)), phi[i]), v[i]);
                return out;
            }};
}

Connection Connections::right_from_form(const HForm& phi, int w, bool enabled) const
{
    if (!enabled)
        throw Error(ErrorKind::FeatureDisabled, "right connections from 1-forms need --enable-right-bijection");
    if (phi.size() != dim())
        throw Error(ErrorKind::ShapeMismatch, "𝔥-valued form has the wrong number of components");
    Connection c{"right", [this, phi](const Word& k) {
                     const SmashProduct& s = smash();
                     auto [a, g] = smash_split(k);
                     Element out;
                     for (const auto& [h, v] : vertical_expand_right(g))
                         for (std::size_t i = 0; i < v.size(); ++i)
                             if (!v[i].is_zero())
                                 out.add(s.mul(phi[i], Element::single(smash_key(a, h))), v[i]);
                     return out;
                 }};
    Report r = check_connection(*this, c, w, "right_candidate");
    if (!r.passed()) {
        std::string failed;
        for (const auto& ch : r.checks())
            if (!ch.passed)
                failed += (failed.empty() ? "" : ", ") + ch.name;
        throw Error(ErrorKind::UnverifiedFormula, "mirror right-connection formula fails: " + failed);
    }
    return c;
}

HForm Connections::form_of(const Connection& c) const
{
    HForm out;
    for (const auto& x : coinv_)
        out.push_back(c(smash().pair(smash().base().one(), x)));
    return out;
}

HForm Connections::j(const Translation& t) const
{
    const Bialgebra& H = smash().fiber().hopf();
    if (t.size() != dim())
        throw Error(ErrorKind::ShapeMismatch, "translation has the wrong number of components");
    HForm out(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t k = 0; k < dim(); ++k)
            out[k] += smash().pair(t[i], H.antipode(coact_[i][k]));
    return out;
}

Translation Connections::decompose_difference(const HForm& a, const HForm& b, int w) const
{
    const auto& A = dynamic_cast<const Dga&>(smash().base());
    auto forms = A.forms(w, 1);
    std::vector<std::pair<std::size_t, Word>> unknowns;
    for (std::size_t i = 0; i < dim(); ++i)
        for (const auto& f : forms)
            unknowns.emplace_back(i, f);
    KeyIndex<WordPair> rows;
    std::vector<Tensor2> cols;
    for (const auto& [i, f] : unknowns) {
        Translation t(dim());
        t[i] = Element::single(f);
        HForm img = j(t);
        Tensor2 col;
        for (std::size_t k = 0; k < dim(); ++k)
            for (const auto& [u, c] : img[k])
                col.add({idx(k), u}, c);
        for (const auto& [key, c] : col)
            rows.push(key);
        cols.push_back(col);
    }
    Tensor2 target;
    for (std::size_t k = 0; k < dim(); ++k)
        for (const auto& [u, c] : a.at(k) - b.at(k))
            target.add({idx(k), u}, c);
    for (const auto& [key, c] : target)
        if (!rows.find(key))
            throw Error(ErrorKind::TheoremViolation,
                        "difference of connection forms is not in the image of j: " + smash().word_str(key.second));
    Matrix m(rows.size(), unknowns.size());
    for (std::size_t jx = 0; jx < cols.size(); ++jx)
        m.set_column(jx, rows.coords(cols[jx]));
    auto sol = solve(m, rows.coords(target));
    if (!sol)
        throw Error(ErrorKind::TheoremViolation, "difference of connection forms is not in the image of j");
    Translation t(dim());
    for (std::size_t u = 0; u < unknowns.size(); ++u)
        t[unknowns[u].first].add(unknowns[u].second, (*sol)[u]);
    return t;
}

Translation Connections::sample_translation(std::uint64_t seed, int w) const
{
    const auto& A = dynamic_cast<const Dga&>(smash().base());
    auto forms = A.forms(w, 1);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-3, 3);
    Translation t(dim());
    for (auto& ti : t)
        for (const auto& f : forms)
            ti.add(f, Scalar(coef(rng)));
    return t;
}

// ---------------------------------------------------------------- verification

Report check_lie_algebra(const Connections& c, const std::string& suite)
{
    const SmashProduct& s = c.smash();
    const HopfForms& hf = s.fiber();
    const Bialgebra& H = hf.hopf();
    const Algebra& F = s.fiber_forms();
    std::size_t n = c.dim();
    Report r;
    {
        CheckBuilder cb(suite, "lie_algebra.coinvariants", "x^i are left coinvariant and dual to x_i");
        cb.cases(n);
        for (std::size_t i = 0; i < n; ++i) {
            const Element& x = c.coinvariant_basis()[i];
            Tensor2 expect;
            for (const auto& [k, e] : x)
                expect.add({H.algebra().unit(), k}, e);
            if (hf.left_coact(x) != expect)
                cb.fail("λ(" + F.str(x) + ") = " + hf.str2(hf.left_coact(x)));
            if (c.coinvariant_coords(x) != c.basis_vector(i))
                cb.fail("⟨x^" + std::to_string(i) + ", x_j⟩ is not δ");
        }
        cb.dim("h", n);
        r.add(cb.done());
    }
    {
        CheckBuilder cb(suite, "lie_algebra.comodule_relation", "⟨γ, X₀⟩X₁ = ⟨γ₀, X⟩S⁻¹(γ₁)");
        cb.cases(n * n);
        for (std::size_t k = 0; k < n; ++k) {
            // ρ(x^k) grouped by the H factor, read against x_j.
            std::map<Word, Element> by_h;
            for (const auto& [p, e] : hf.right_coact(c.coinvariant_basis()[k]))
                by_h[p.second].add(p.first, e);
            for (std::size_t jx = 0; jx < n; ++jx) {
                Element rhs;
                for (const auto& [h, part] : by_h) {
                    Scalar pr = c.coinvariant_coords(part)[jx];
                    if (!pr.is_zero())
                        rhs.add(H.antipode_inverse(h), pr);
                }
                if (c.coaction()[jx][k] != rhs)
                    cb.fail("γ = x^" + std::to_string(k) + ", X = x_" + std::to_string(jx) + ": " +
                            H.algebra().str(c.coaction()[jx][k]) + " vs " + H.algebra().str(rhs));
            }
        }
        r.add(cb.done());
    }
    {
        CheckBuilder cb(suite, "lie_algebra.comodule_axioms", "(ρ⊗1)ρ = (1⊗Δ)ρ and (1⊗ε)ρ = id on 𝔥");
        cb.cases(n);
        for (std::size_t jx = 0; jx < n; ++jx) {
            LinComb<std::tuple<Word, Word, Word>> lhs, rhs;
            for (std::size_t k = 0; k < n; ++k) {
                for (const auto& [hh, e] : H.comult(c.coaction()[jx][k]))
                    rhs.add({Word{static_cast<Letter>(k)}, hh.first, hh.second}, e);
                for (std::size_t m = 0; m < n; ++m)
                    for (const auto& [a, e1] : c.coaction()[k][m])
                        for (const auto& [b, e2] : c.coaction()[jx][k])
                            lhs.add({Word{static_cast<Letter>(m)}, a, b}, e1 * e2);
                Scalar eps = H.counit(c.coaction()[jx][k]);
                if (eps != Scalar(k == jx ? 1 : 0))
                    cb.fail("ε of the coaction of x_" + std::to_string(jx) + " is not δ");
            }
            if (lhs != rhs)
                cb.fail("coaction of x_" + std::to_string(jx) + " is not coassociative");
        }
        r.add(cb.done());
    }
    {
        CheckBuilder cb(suite, "lie_algebra.evaluation_colinear", "⟨γ₀, X₀⟩γ₁X₁ = ⟨γ, X⟩1");
        cb.cases(n * n);
        for (std::size_t i = 0; i < n; ++i) {
            std::map<Word, Element> by_h;
            for (const auto& [p, e] : hf.right_coact(c.coinvariant_basis()[i]))
                by_h[p.second].add(p.first, e);
            for (std::size_t jx = 0; jx < n; ++jx) {
                Element total;
                for (const auto& [h, part] : by_h) {
                    Vector v = c.coinvariant_coords(part);
                    for (std::size_t k = 0; k < n; ++k)
                        if (!v[k].is_zero())
                            total.add(H.algebra().mul(Element::single(h), c.coaction()[jx][k]), v[k]);
                }
                Element expect = i == jx ? H.algebra().one() : Element();
                if (total != expect)
                    cb.fail("γ = x^" + std::to_string(i) + ", X = x_" + std::to_string(jx) + ": " + H.algebra().str(total));
            }
        }
        r.add(cb.done());
    }
    return r;
}

Report check_fundamental_fields(const Connections& c, int w, const std::string& suite)
{
    const SmashProduct& s = c.smash();
    const ExactSequences& e = c.sequences();
    std::size_t n = c.dim();
    auto zero = s.forms(w, 0);
    auto om = e.omega1(w);
    auto hor = e.horizontal(w);
    Report r;
    r.add(run_cases(suite, "fields.vertical", "⟨ω#h, X̄⟩ = 0", hor.size() * n, [&](std::size_t k) -> Witness {
        Element v = c.field(c.basis_vector(k % n), Element::single(hor[k / n]));
        if (v.is_zero())
            return std::nullopt;
        return "u = " + s.word_str(hor[k / n]) + ", X = x_" + std::to_string(k % n) + ": " + s.str(v);
    }));
    r.add(run_cases(suite, "fields.dual_basis", "⟨1#x^i, X̄_j⟩ = δ_ij 1", n * n, [&](std::size_t k) -> Witness {
        std::size_t i = k / n, jx = k % n;
        Element v = c.field(c.basis_vector(jx), s.pair(s.base().one(), c.coinvariant_basis()[i]));
        Element expect = i == jx ? s.one() : Element();
        if (v == expect)
            return std::nullopt;
        return "i = " + std::to_string(i) + ", j = " + std::to_string(jx) + ": " + s.str(v);
    }));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < zero.size(); ++i)
        for (std::size_t jx = 0; jx < om.size(); ++jx)
            if (s.weight(zero[i]) + s.weight(om[jx]) <= w)
                pairs.emplace_back(i, jx);
    r.add(run_cases(suite, "fields.left_linear", "⟨uθ, X̄⟩ = u⟨θ, X̄⟩", pairs.size() * n, [&](std::size_t k) -> Witness {
        const auto& [i, jx] = pairs[k / n];
        Vector x = c.basis_vector(k % n);
        Element lhs = c.field(x, s.mul(zero[i], om[jx]));
        Element rhs = s.mul(Element::single(zero[i]), c.field(x, Element::single(om[jx])));
        if (lhs == rhs)
            return std::nullopt;
        return "u = " + s.word_str(zero[i]) + ", θ = " + s.word_str(om[jx]) + ": " + s.str(lhs) + " vs " + s.str(rhs);
    }));
    return r;
}

Report check_invariant(const Connections& c, const HForm& phi, const std::string& name, const std::string& suite)
{
    bool a = c.invariant_codiagonal(phi);
    bool b = c.invariant_twisted(phi);
    if (a != b)
        throw Error(ErrorKind::TheoremViolation, name + ": invariance criteria disagree (codiagonal " +
                                                     (a ? "holds" : "fails") + ", twisted " + (b ? "holds" : "fails") + ")");
    CheckBuilder cb(suite, "invariant." + name, "φ ∈ (V⊗Ω¹(A#H))^coH, checked codiagonally and S-twisted");
    cb.cases(2).expect(a, name + " is not invariant").detail("criteria_agree", true);
    Report r;
    r.add(cb.done());
    return r;
}

Report is_connection_one_form(const Connections& c, const HForm& phi, const std::string& name, const std::string& suite)
{
    const SmashProduct& s = c.smash();
    const ExactSequences& e = c.sequences();
    std::size_t n = c.dim();
    Report inv = check_invariant(c, phi, name, suite);
    bool invariant = inv.passed();
    std::vector<std::string> field_fail, pi_fail;
    for (std::size_t jx = 0; jx < n; ++jx) {
        HForm v = c.pair_field(phi, c.basis_vector(jx));
        for (std::size_t i = 0; i < n; ++i) {
            Element expect = i == jx ? s.one() : Element();
            if (v[i] != expect)
                field_fail.push_back("⟨φ_" + std::to_string(i) + ", X̄_" + std::to_string(jx) + "⟩ = " + s.str(v[i]));
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        Tensor2 expect;
        for (const auto& [k, x] : c.coinvariant_basis()[i])
            expect.add({s.unit(), k}, x);
        Tensor2 got = e.pi1(phi[i]);
        if (got != expect)
            pi_fail.push_back("π¹(φ_" + std::to_string(i) + ") = " + s.str2(got));
    }
    bool crit_a = invariant && field_fail.empty();
    bool crit_b = invariant && pi_fail.empty();
    if (crit_a != crit_b)
        throw Error(ErrorKind::TheoremViolation, name + ": connection 1-form criteria disagree (field criterion " +
                                                     (crit_a ? "holds" : "fails") + ", projection criterion " +
                                                     (crit_b ? "holds" : "fails") + ")");
    Report r = inv;
    CheckBuilder ca(suite, "connection_form." + name + ".field_criterion", "invariant and ⟨φ, X̄⟩ = const_X");
    if (!invariant)
        field_fail.insert(field_fail.begin(), "not invariant");
    ca.cases(n * n).failures(field_fail.size(), field_fail);
    r.add(ca.done());
    CheckBuilder cb(suite, "connection_form." + name + ".projection_criterion", "invariant and π¹(φ) = Σ x_i⊗1⊗x^i");
    if (!invariant)
        pi_fail.insert(pi_fail.begin(), "not invariant");
    cb.cases(n).failures(pi_fail.size(), pi_fail);
    cb.detail("criteria_agree", true);
    r.add(cb.done());
    return r;
}

Report check_connection(const Connections& c, const Connection& conn, int w, const std::string& name, const std::string& suite)
{
    const SmashProduct& s = c.smash();
    const ExactSequences& e = c.sequences();
    Cotensor ct = e.cotensor_space(w);
    auto ver = e.vertical(w);
    auto zero = s.forms(w, 0);
    bool left = conn.kind != "right";
    bool right = conn.kind != "left";
    Report r;
    r.add(run_cases(suite, "connection." + name + ".splitting", "π¹∘c = id on (A#H)□Ω¹(H)", ct.dim(),
                    [&](std::size_t k) -> Witness {
                        const Tensor2& t = ct.basis[k];
                        Tensor2 back = e.pi1(conn(e.beta_inv(t)));
                        if (back == t)
                            return std::nullopt;
                        return "t = " + s.str2(t) + ": π¹c(t) = " + s.str2(back);
                    }));
    r.add(run_cases(suite, "connection." + name + ".colinear", "ρ¹(c(v)) = c(v₀)⊗v₁", ver.size(), [&](std::size_t k) -> Witness {
        Element v = Element::single(ver[k]);
        Tensor2 lhs = c.rho1(conn(v));
        Tensor2 rhs;
        for (const auto& [p, x] : c.rho1(v))
            for (const auto& [u, y] : conn(Element::single(p.first)))
                rhs.add({u, p.second}, x * y);
        if (lhs == rhs)
            return std::nullopt;
        return "v = " + s.word_str(ver[k]) + ": " + s.str2(lhs) + " vs " + s.str2(rhs);
    }));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < zero.size(); ++i)
        for (std::size_t jx = 0; jx < ver.size(); ++jx)
            if (s.weight(zero[i]) + s.weight(ver[jx]) <= w)
                pairs.emplace_back(i, jx);
    if (left)
        r.add(run_cases(suite, "connection." + name + ".left_linear", "c(uv) = u·c(v)", pairs.size(), [&](std::size_t k) -> Witness {
            const Word& u = zero[pairs[k].first];
            const Word& v = ver[pairs[k].second];
            Element lhs = conn(s.mul(u, v));
            Element rhs = s.mul(Element::single(u), conn(Element::single(v)));
            if (lhs == rhs)
                return std::nullopt;
            return "u = " + s.word_str(u) + ", v = " + s.word_str(v) + ": " + s.str(lhs) + " vs " + s.str(rhs);
        }));
    if (right)
        r.add(run_cases(suite, "connection." + name + ".right_linear", "c(vu) = c(v)·u", pairs.size(), [&](std::size_t k) -> Witness {
            const Word& u = zero[pairs[k].first];
            const Word& v = ver[pairs[k].second];
            Element lhs = conn(s.mul(v, u));
            Element rhs = s.mul(conn(Element::single(v)), Element::single(u));
            if (lhs == rhs)
                return std::nullopt;
            return "v = " + s.word_str(v) + ", u = " + s.word_str(u) + ": " + s.str(lhs) + " vs " + s.str(rhs);
        }));
    return r;
}

Check same_connection(const Connections& c, const Connection& a, const Connection& b, int w, const std::string& name,
                      const std::string& suite)
{
    const SmashProduct& s = c.smash();
    auto ver = c.sequences().vertical(w);
    return run_cases(suite, "bijection." + name, "equal matrices on A#Ω¹(H)", ver.size(), [&](std::size_t k) -> Witness {
        Element x = a.on_vertical(ver[k]);
        Element y = b.on_vertical(ver[k]);
        if (x == y)
            return std::nullopt;
        return "v = " + s.word_str(ver[k]) + ": " + s.str(x) + " vs " + s.str(y);
    });
}

Report check_translations(const Connections& c, int w, const std::string& suite)
{
    const SmashProduct& s = c.smash();
    const auto& A = dynamic_cast<const Dga&>(s.base());
    auto forms = A.forms(w, 1);
    std::size_t n = c.dim();
    std::vector<Translation> units;
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& f : forms) {
            Translation t(n);
            t[i] = Element::single(f);
            units.push_back(t);
        }
    Report r;
    {
        CheckBuilder cb(suite, "translations.j_injective", "j: 𝔥⊗Ω¹(A) → 𝔥⊗Ω¹(A#H) is injective");
        SpanBasis<WordPair> span;
        for (const auto& t : units) {
            HForm img = c.j(t);
            Tensor2 flat;
            for (std::size_t k = 0; k < n; ++k)
                for (const auto& [u, x] : img[k])
                    flat.add({Word{static_cast<Letter>(k)}, u}, x);
            span.insert(flat);
        }
        cb.cases(units.size());
        cb.expect(span.rank() == units.size(), "rank " + std::to_string(span.rank()) + " < " + std::to_string(units.size()));
        cb.dim("domain", units.size()).dim("rank", span.rank());
        r.add(cb.done());
    }
    r.add(run_cases(suite, "translations.invariant_and_horizontal", "j(t) is invariant and π¹j(t) = 0", units.size(),
                    [&](std::size_t k) -> Witness {
                        HForm img = c.j(units[k]);
                        bool a = c.invariant_codiagonal(img);
                        bool b = c.invariant_twisted(img);
                        bool horizontal = true;
                        for (const auto& p : img)
                            horizontal = horizontal && c.sequences().pi1(p).is_zero();
                        if (a && b && horizontal)
                            return std::nullopt;
                        return "t = x_" + std::to_string(k / forms.size()) + "⊗" +
                               A.word_str(forms[k % forms.size()]) + (a && b ? "" : " not invariant") +
                               (horizontal ? "" : " not horizontal");
                    }));
    return r;
}

namespace {

HForm add_forms(const HForm& a, const HForm& b)
{
    HForm out = a;
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] += b[i];
    return out;
}

std::string form_str(const Connections& c, const HForm& phi)
{
    std::string out;
    for (std::size_t i = 0; i < phi.size(); ++i)
        out += (i ? ", " : "") + c.smash().str(phi[i]);
    return "(" + out + ")";
}

// a#γ with γ a 1-form on H such that the perturbed canonical form is not invariant.
std::optional<Element> breaking_term(const Connections& c)
{
    const SmashProduct& s = c.smash();
    const auto* hf = dynamic_cast<const Dga*>(&s.fiber_forms());
    if (!hf)
        return std::nullopt;
    HForm phi = c.canonical_form();
    for (const auto& a : degree0_basis(s.base(), 1))
        for (const auto& g : hf->forms(0, 1)) {
            HForm bent = phi;
            bent[0] += s.pair(Element::single(a), Element::single(g));
            if (!c.invariant_codiagonal(bent))
                return bent[0] - phi[0];
        }
    return std::nullopt;
}

}  // namespace

Report check_connection_theory(const Connections& c, int w, bool enable_right, const std::string& suite)
{
    Report r = check_lie_algebra(c, suite);
    r.merge(check_fundamental_fields(c, w, suite));
    HForm phi = c.canonical_form();
    Connection can = c.canonical();
    r.merge(is_connection_one_form(c, phi, "canonical", suite));
    r.merge(check_connection(c, can, w, "canonical", suite));
    {
        CheckBuilder cb(suite, "bijection.canonical_form", "φ_{c} = Σ x_i⊗(1#x^i) for the canonical connection");
        cb.expect(c.form_of(can) == phi, "φ_c = " + form_str(c, c.form_of(can)));
        r.add(cb.done());
    }
    r.add(same_connection(c, c.from_form(phi), can, w, "canonical", suite));

    CheckBuilder rt(suite, "bijection.roundtrips", "φ_{c_φ} = φ and c_{φ_c} = c on translates");
    CheckBuilder dd(suite, "translations.decompose_difference", "decompose_difference(φ + j(t), φ) = t");
    for (std::uint64_t seed : {1, 2, 3}) {
        std::string name = "translate" + std::to_string(seed);
        Translation t = c.sample_translation(seed, w);
        HForm psi = add_forms(phi, c.j(t));
        r.merge(is_connection_one_form(c, psi, name, suite));
        Connection cp = c.from_form(psi);
        r.merge(check_connection(c, cp, w, name, suite));
        rt.expect(c.form_of(cp) == psi, name + ": φ_{c_φ} = " + form_str(c, c.form_of(cp)));
        Check back = same_connection(c, c.from_form(c.form_of(cp)), cp, w, name, suite);
        rt.expect(back.passed, name + ": c_{φ_c} differs" + (back.witnesses.empty() ? "" : ": " + back.witnesses.front()));
        dd.expect(c.decompose_difference(psi, phi, w) == t, name);
        if (enable_right) {
            Connection right = c.right_from_form(psi, w, true);
            r.merge(check_connection(c, right, w, name + "_right", suite));
        }
    }
    r.add(rt.done());
    r.add(dd.done());

    CheckBuilder inv(suite, "connection_form.invalid_rejected", "non-connection forms fail both criteria");
    std::vector<std::pair<std::string, HForm>> bad{{"zero", HForm(c.dim())}, {"twice", phi}};
    for (auto& p : bad[1].second)
        p = Scalar(2) * p;
    if (auto term = breaking_term(c)) {
        HForm bent = phi;
        bent[0] += *term;
        bad.emplace_back("perturbed", bent);
    }
    for (const auto& [name, form] : bad) {
        Report one = is_connection_one_form(c, form, name, suite);
        inv.expect(!one.passed(), name + " = " + form_str(c, form) + " accepted");
    }
    inv.dim("valid", 4).dim("invalid", bad.size());
    r.add(inv.done());
    if (enable_right)
        r.add(same_connection(c, c.right_from_form(phi, w, true), can, w, "canonical_right", suite));
    r.merge(check_translations(c, w, suite));
    return r;
}

}  // namespace smashcalc
