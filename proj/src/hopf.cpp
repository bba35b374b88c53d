#include "smashcalc/hopf.hpp"

namespace smashcalc {

// ---------------------------------------------------------------- Bialgebra helpers

Element Bialgebra::antipode(const Word&) const
{
    throw Error(ErrorKind::PreconditionFailed, name() + " has no antipode");
}

Element Bialgebra::antipode_inverse(const Word&) const
{
    throw Error(ErrorKind::PreconditionFailed, name() + " has no inverse antipode");
}

Tensor2 Bialgebra::comult(const Element& h) const
{
    Tensor2 out;
    for (const auto& [w, c] : h)
        out.add(comult(w), c);
    return out;
}

Scalar Bialgebra::counit(const Element& h) const
{
    Scalar s;
    for (const auto& [w, c] : h)
        s += c * counit(w);
    return s;
}

Element Bialgebra::antipode(const Element& h) const
{
    Element out;
    for (const auto& [w, c] : h)
        out.add(antipode(w), c);
    return out;
}

Element Bialgebra::antipode_inverse(const Element& h) const
{
    Element out;
    for (const auto& [w, c] : h)
        out.add(antipode_inverse(w), c);
    return out;
}

TensorN Bialgebra::sweedler_expand(const Element& h, int n) const
{
    TensorN cur = h;
    for (int k = 0; k < n; ++k) {
        TensorN next;
        for (const auto& [key, c] : cur) {
            auto parts = split_tensor(key);
            Word last = parts.back();
            parts.pop_back();
            for (const auto& [ab, d] : comult(last)) {
                auto p = parts;
                p.push_back(ab.first);
                p.push_back(ab.second);
                next.add(join_tensor(p), c * d);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

Tensor2 Bialgebra::mul2(const Tensor2& a, const Tensor2& b) const
{
    const Algebra& A = algebra();
    Tensor2 out;
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b) {
            Element l = A.mul(x.first, y.first);
            if (l.is_zero())
                continue;
            Element r = A.mul(x.second, y.second);
            for (const auto& [wl, cl] : l)
                for (const auto& [wr, cr] : r)
                    out.add({wl, wr}, cx * cy * cl * cr);
        }
    return out;
}

std::string Bialgebra::str2(const Tensor2& t) const
{
    std::vector<std::pair<std::string, Scalar>> terms;
    for (const auto& [k, c] : t)
        terms.emplace_back(algebra().word_str(k.first) + "⊗" + algebra().word_str(k.second), c);
    return format_terms(terms);
}

std::string Bialgebra::strn(const TensorN& t) const
{
    std::vector<std::pair<std::string, Scalar>> terms;
    for (const auto& [k, c] : t) {
        std::string s;
        auto parts = split_tensor(k);
        for (std::size_t i = 0; i < parts.size(); ++i)
            s += (i ? "⊗" : "") + algebra().word_str(parts[i]);
        terms.emplace_back(s, c);
    }
    return format_terms(terms);
}

// ---------------------------------------------------------------- FdHopf

FdHopf::FdHopf(std::string name, BasedSpace space, Matrix mult, std::size_t unit_index, Matrix comult, Matrix counit,
               std::optional<Matrix> antipode)
    : name_(std::move(name)),
      alg_(std::move(space), std::move(mult), unit_index),
      comult_(std::move(comult)),
      counit_(std::move(counit)),
      antipode_(std::move(antipode))
{
    std::size_t n = alg_.dim();
    if (comult_.rows() != n * n || comult_.cols() != n || counit_.rows() != 1 || counit_.cols() != n)
        throw Error(ErrorKind::DimensionMismatch, "coalgebra table shape");
    if (antipode_) {
        if (antipode_->rows() != n || antipode_->cols() != n)
            throw Error(ErrorKind::DimensionMismatch, "antipode table shape");
        antipode_inverse_ = inverse(*antipode_, Exec::Serial);
    }
}

Tensor2 FdHopf::comult(const Word& h) const
{
    std::size_t n = dim();
    Tensor2 out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.add({FdAlgebra::key(i), FdAlgebra::key(j)}, comult_(i * n + j, h.at(0)));
    return out;
}

Scalar FdHopf::counit(const Word& h) const { return counit_(0, h.at(0)); }

Element FdHopf::antipode(const Word& h) const
{
    if (!antipode_)
        return Bialgebra::antipode(h);
    return alg_.from_vector(antipode_->column(h.at(0)));
}

Element FdHopf::antipode_inverse(const Word& h) const
{
    if (!antipode_inverse_)
        throw Error(ErrorKind::SingularAntipode, name_ + ": antipode is not invertible");
    return alg_.from_vector(antipode_inverse_->column(h.at(0)));
}

LinMap FdHopf::mult_map() const { return LinMap(tensor_space(space(), space()), space(), alg_.mult_matrix()); }

LinMap FdHopf::unit_map() const
{
    Matrix u(dim(), 1);
    u(alg_.unit_index(), 0) = Scalar(1);
    return LinMap(BasedSpace{"k", {"1"}}, space(), u);
}

LinMap FdHopf::comult_map() const { return LinMap(space(), tensor_space(space(), space()), comult_); }

LinMap FdHopf::counit_map() const { return LinMap(space(), BasedSpace{"k", {"1"}}, counit_); }

std::optional<LinMap> FdHopf::antipode_map() const
{
    if (!antipode_)
        return std::nullopt;
    return LinMap(space(), space(), *antipode_);
}

LinMap FdHopf::antipode_inverse_map() const
{
    if (!antipode_)
        throw Error(ErrorKind::PreconditionFailed, name_ + " has no antipode");
    if (!antipode_inverse_)
        throw Error(ErrorKind::SingularAntipode, name_ + ": antipode matrix is singular");
    return LinMap(space(), space(), *antipode_inverse_);
}

FdHopf FdHopf::with_comult(std::size_t basis, const Tensor2& value) const
{
    Matrix c = comult_;
    std::size_t n = dim();
    for (std::size_t r = 0; r < n * n; ++r)
        c(r, basis) = Scalar();
    for (const auto& [k, v] : value)
        c(k.first.at(0) * n + k.second.at(0), basis) = v;
    return FdHopf(name_ + "*", space(), alg_.mult_matrix(), alg_.unit_index(), c, counit_, antipode_);
}

FdHopf FdHopf::with_counit(std::size_t basis, const Scalar& value) const
{
    Matrix e = counit_;
    e(0, basis) = value;
    return FdHopf(name_ + "*", space(), alg_.mult_matrix(), alg_.unit_index(), comult_, e, antipode_);
}

FdHopf FdHopf::with_antipode(std::size_t basis, const Element& value) const
{
    Matrix s = antipode_ ? *antipode_ : Matrix(dim(), dim());
    s.set_column(basis, alg_.to_vector(value));
    return FdHopf(name_ + "*", space(), alg_.mult_matrix(), alg_.unit_index(), comult_, counit_, s);
}

FdHopf FdHopf::with_product(std::size_t a, std::size_t b, const Element& value) const
{
    Matrix m = alg_.mult_matrix();
    m.set_column(a * dim() + b, alg_.to_vector(value));
    return FdHopf(name_ + "*", space(), m, alg_.unit_index(), comult_, counit_, antipode_);
}

json FdHopf::to_json() const
{
    auto mat = [](const Matrix& m) {
        json rows = json::array();
        for (std::size_t i = 0; i < m.rows(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < m.cols(); ++j)
                row.push_back(m(i, j).str());
            rows.push_back(row);
        }
        return rows;
    };
    json j{{"name", name_},
           {"basis", space().basis},
           {"unit", alg_.unit_index()},
           {"mult", mat(alg_.mult_matrix())},
           {"comult", mat(comult_)},
           {"counit", mat(counit_)}};
    if (antipode_)
        j["antipode"] = mat(*antipode_);
    return j;
}

namespace {

std::string vector_str(const BasedSpace& s, const Vector& v)
{
    std::vector<std::pair<std::string, Scalar>> terms;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero())
            terms.emplace_back(s.basis[i], v[i]);
    return format_terms(terms);
}

using Sides = std::vector<std::pair<LinMap, LinMap>>;

// Column-by-column comparison of pairs of maps with equal shapes; one case per (pair, input basis vector).
Check matrix_identities(const std::string& name, const std::string& anchor, const Sides& sides)
{
    CheckBuilder b("hopf", name, anchor);
    for (const auto& [lhs, rhs] : sides) {
        if (lhs.matrix.rows() != rhs.matrix.rows() || lhs.matrix.cols() != rhs.matrix.cols())
            throw Error(ErrorKind::DimensionMismatch, name + ": sides have different shapes");
        for (std::size_t j = 0; j < lhs.matrix.cols(); ++j) {
            Vector l = lhs.matrix.column(j);
            Vector r = rhs.matrix.column(j);
            b.expect(l == r, "input " + lhs.domain.basis[j] + ": lhs = " + vector_str(lhs.codomain, l) +
                                 ", rhs = " + vector_str(rhs.codomain, r));
        }
    }
    return b.done();
}

LinMap flip(const BasedSpace& s)
{
    std::size_t n = s.dim();
    BasedSpace t = tensor_space(s, s);
    Matrix m(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(j * n + i, i * n + j) = Scalar(1);
    return LinMap(t, t, m);
}

// Relabels the domain so matrices with equal shapes but different space names can be compared.
LinMap relabel(const LinMap& f, const BasedSpace& dom, const BasedSpace& cod) { return LinMap(dom, cod, f.matrix); }

}  // namespace

Report verify_fd_hopf(const FdHopf& h)
{
    const std::string p = "verify_fd_hopf.";
    Report r;
    const BasedSpace& H = h.space();
    BasedSpace k{"k", {"1"}};
    LinMap id = LinMap::identity(H);
    LinMap m = h.mult_map();
    LinMap u = h.unit_map();
    LinMap d = h.comult_map();
    LinMap e = h.counit_map();

    BasedSpace HH = tensor_space(H, H);
    r.add(matrix_identities(p + "associativity", "m(m⊗1) = m(1⊗m)",
                            {{compose(m, tensor(m, id)), compose(m, tensor(id, m))}}));
    r.add(matrix_identities(p + "unit", "m(u⊗1) = id = m(1⊗u)",
                            {{relabel(compose(m, tensor(u, id)), H, H), id},
                             {relabel(compose(m, tensor(id, u)), H, H), id}}));
    r.add(matrix_identities(p + "coassociativity", "(Δ⊗1)Δ = (1⊗Δ)Δ",
                            {{compose(tensor(d, id), d), compose(tensor(id, d), d)}}));
    r.add(matrix_identities(p + "counit", "(ε⊗1)Δ = id = (1⊗ε)Δ",
                            {{relabel(compose(tensor(e, id), d), H, H), id},
                             {relabel(compose(tensor(id, e), d), H, H), id}}));
    LinMap dd = tensor(d, d);
    LinMap middle = tensor(tensor(id, flip(H)), id);
    LinMap prod2 = compose(tensor(m, m), compose(relabel(middle, dd.codomain, dd.codomain), dd));
    r.add(matrix_identities(p + "comult_algebra_map", "Δ(ab) = Δ(a)Δ(b), Δ(1) = 1⊗1",
                            {{compose(d, m), prod2}, {compose(d, u), relabel(tensor(u, u), k, HH)}}));
    r.add(matrix_identities(p + "counit_algebra_map", "ε(ab) = ε(a)ε(b), ε(1) = 1",
                            {{compose(e, m), relabel(tensor(e, e), HH, k)}, {compose(e, u), LinMap::identity(k)}}));
    if (auto s = h.antipode_map()) {
        LinMap ue = compose(u, e);
        r.add(matrix_identities(p + "antipode", "m(S⊗1)Δ = uε = m(1⊗S)Δ",
                                {{compose(m, compose(tensor(*s, id), d)), ue},
                                 {compose(m, compose(tensor(id, *s), d)), ue}}));
    }
    return r;
}

void require_fd_hopf(const FdHopf& h)
{
    Report r = verify_fd_hopf(h);
    if (r.passed())
        return;
    std::string failed;
    for (const auto& c : r.checks())
        if (!c.passed)
            failed += (failed.empty() ? "" : ", ") + c.name;
    throw Error(ErrorKind::GateFailure, "verify_fd_hopf(" + h.name() + ") failed: " + failed);
}

// ---------------------------------------------------------------- PresentedBialgebra

PresentedBialgebra::PresentedBialgebra(std::string name, std::shared_ptr<const Presentation> algebra,
                                       std::vector<Tensor2> comult_on_gens, std::vector<Scalar> counit_on_gens,
                                       std::optional<std::vector<Element>> antipode_on_gens)
    : name_(std::move(name)),
      alg_(std::move(algebra)),
      comult_(std::move(comult_on_gens)),
      counit_(std::move(counit_on_gens)),
      antipode_(std::move(antipode_on_gens))
{
    std::size_t n = alg_->generators().size();
    if (comult_.size() != n || counit_.size() != n || (antipode_ && antipode_->size() != n))
        throw Error(ErrorKind::DimensionMismatch, name_ + ": structure data must cover every generator");
}

Tensor2 PresentedBialgebra::comult(const Word& h) const
{
    if (h.empty())
        return Tensor2::single({Word{}, Word{}});
    if (h.size() == 1)
        return comult_.at(h[0]);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = comult_cache_.find(h);
        if (it != comult_cache_.end())
            return it->second;
    }
    Word head(h.begin(), h.end() - 1);
    Tensor2 out = mul2(comult(head), comult_.at(h.back()));
    std::lock_guard<std::mutex> lock(mutex_);
    comult_cache_.emplace(h, out);
    return out;
}

Scalar PresentedBialgebra::counit(const Word& h) const
{
    Scalar s(1);
    for (Letter l : h)
        s *= counit_.at(l);
    return s;
}

Element PresentedBialgebra::antipode(const Word& h) const
{
    if (!antipode_)
        return Bialgebra::antipode(h);
    Element out = alg_->one();
    for (auto it = h.rbegin(); it != h.rend(); ++it)
        out = alg_->mul(out, (*antipode_)[*it]);
    return out;
}

Report check_presented_bialgebra(const PresentedBialgebra& b, int degree)
{
    const std::string p = "check_presented_bialgebra.";
    const Presentation& A = b.presentation();
    Report r;
    {
        CheckBuilder c("hopf", p + "comult_respects_relations", "Δ(lhs) = Δ(rhs) for every rule");
        for (const auto& rule : A.rules()) {
            Tensor2 diff = b.comult(rule.lhs) - b.comult(rule.rhs);
            c.expect(diff.is_zero(), "rule " + A.word_str(rule.lhs) + " -> " + A.str(rule.rhs) +
                                         ": Δ(lhs) - Δ(rhs) = " + b.str2(diff));
        }
        r.add(c.done());
    }
    {
        CheckBuilder c("hopf", p + "counit_respects_relations", "ε(lhs) = ε(rhs) for every rule");
        for (const auto& rule : A.rules()) {
            Scalar diff = b.counit(rule.lhs) - b.counit(rule.rhs);
            c.expect(diff.is_zero(), "rule " + A.word_str(rule.lhs) + ": ε difference " + diff.str());
        }
        r.add(c.done());
    }
    auto words = A.basis_up_to(degree);
    r.add(run_cases("hopf", p + "coassociativity", "(Δ⊗1)Δ = (1⊗Δ)Δ on basis words", words.size(), [&](std::size_t i) {
        Element w = Element::single(words[i]);
        TensorN three = b.sweedler_expand(w, 2);
        // second bracketing: apply Δ to the first leg
        TensorN other;
        for (const auto& [ab, c] : b.comult(words[i]))
            for (const auto& [xy, d] : b.comult(ab.first))
                other.add(join_tensor({xy.first, xy.second, ab.second}), c * d);
        if (three == other)
            return std::optional<std::string>();
        return std::optional<std::string>(A.word_str(words[i]) + ": " + b.strn(three) + " vs " + b.strn(other));
    }));
    r.add(run_cases("hopf", p + "counit", "(ε⊗1)Δ = id = (1⊗ε)Δ on basis words", words.size(), [&](std::size_t i) {
        Element left, right;
        for (const auto& [ab, c] : b.comult(words[i])) {
            left.add(ab.second, c * b.counit(ab.first));
            right.add(ab.first, c * b.counit(ab.second));
        }
        Element w = Element::single(words[i]);
        if (left == w && right == w)
            return std::optional<std::string>();
        return std::optional<std::string>(A.word_str(words[i]) + ": (ε⊗1)Δ = " + A.str(left) + ", (1⊗ε)Δ = " + A.str(right));
    }));
    if (b.has_antipode()) {
        r.add(run_cases("hopf", p + "antipode", "m(S⊗1)Δ = uε = m(1⊗S)Δ on basis words", words.size(), [&](std::size_t i) {
            Element left, right;
            for (const auto& [ab, c] : b.comult(words[i])) {
                left.add(A.mul(b.antipode(ab.first), Element::single(ab.second)), c);
                right.add(A.mul(Element::single(ab.first), b.antipode(ab.second)), c);
            }
            Element expect = b.counit(words[i]) * A.one();
            if (left == expect && right == expect)
                return std::optional<std::string>();
            return std::optional<std::string>(A.word_str(words[i]) + ": m(S⊗1)Δ = " + A.str(left) +
                                              ", m(1⊗S)Δ = " + A.str(right));
        }));
    }
    return r;
}

FdHopf fd_from_presented(const PresentedBialgebra& b)
{
    const Presentation& A = b.presentation();
    int cap = A.degree_cap();
    auto words = A.basis_up_to(cap);
    for (const auto& w : words)
        if (static_cast<int>(w.size()) == cap)
            throw Error(ErrorKind::InvalidArgument, b.name() + " is not finite below the degree cap");
    KeyIndex<Word> index(words);
    std::size_t n = words.size();
    BasedSpace space{b.name(), {}};
    for (const auto& w : words) {
        std::string label;
        for (Letter l : w)
            label += A.generators()[l].name;
        space.basis.push_back(w.empty() ? "1" : label);
    }
    Matrix mult(n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            mult.set_column(i * n + j, index.coords(A.mul(words[i], words[j])));
    Matrix comult(n * n, n);
    Matrix counit(1, n);
    std::optional<Matrix> antipode;
    if (b.has_antipode())
        antipode = Matrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (const auto& [ab, c] : b.comult(words[j]))
            comult(*index.find(ab.first) * n + *index.find(ab.second), j) = c;
        counit(0, j) = b.counit(words[j]);
        if (antipode)
            antipode->set_column(j, index.coords(b.antipode(words[j])));
    }
    return FdHopf(b.name(), space, mult, 0, comult, counit, antipode);
}

}  // namespace smashcalc
