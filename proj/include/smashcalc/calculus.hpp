#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "smashcalc/action.hpp"
#include "smashcalc/dga.hpp"
#include "smashcalc/hopf.hpp"

namespace smashcalc {

// Universal differential calculus Ω_u(B). The key (a0, a1, ..., an), packed with join_tensor, stands for
// a0·da1···dan with a1..an non-unit basis words of B; degree-0 keys are the words of B themselves.
class UniversalDga : public Dga {
public:
    explicit UniversalDga(std::shared_ptr<const Algebra> base, int max_form_degree = 2);

    const Algebra& base() const { return *base_; }
    int max_form_degree() const { return max_degree_; }

    Element mul(const Word& a, const Word& b) const override;
    using Algebra::mul;
    Word unit() const override { return base_->unit(); }
    // Keys of form degree <= max_form_degree with total base weight <= w.
    std::vector<Word> basis_up_to(int w) const override;
    int weight(const Word& key) const override;
    std::string word_str(const Word& key) const override;
    int form_degree(const Word& key) const override { return static_cast<int>(tensor_arity(key)) - 1; }
    std::optional<Element> lookup(const std::string& name) const override { return base_->lookup(name); }
    Element d(const Word& key) const override;
    using Dga::d;

    // Image in B^{⊗(n+1)} with d(b) = 1⊗b - b⊗1 and (x⊗y)(z⊗w) = x⊗yz⊗w.
    TensorN embed(const Word& key) const;

private:
    Element mul_uncached(const Word& a, const Word& b) const;

    std::shared_ptr<const Algebra> base_;
    int max_degree_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<Word, Word>, Element> cache_;
};

// Kernel-intersection model: the embedded basis of Ωⁿ_u lies in ∩ ker(m_i) and spans it (rank equality).
Report check_universal_dga(const UniversalDga& u, int w, const std::string& suite = "calculus");

// Calculus presented by generators (degree-0 letters and their differentials) with d given on generators.
class PresentedDga : public Dga {
public:
    PresentedDga(std::shared_ptr<const Presentation> p, std::vector<Element> d_on_gens);

    const Presentation& presentation() const { return *p_; }
    std::shared_ptr<const Presentation> presentation_ptr() const { return p_; }
    const std::vector<Element>& d_on_generators() const { return d_on_gens_; }
    Element mul(const Word& a, const Word& b) const override { return p_->mul(a, b); }
    using Algebra::mul;
    Word unit() const override { return {}; }
    std::vector<Word> basis_up_to(int w) const override { return p_->basis_up_to(w); }
    int weight(const Word& w) const override { return p_->weight(w); }
    std::string word_str(const Word& w) const override { return p_->word_str(w); }
    int form_degree(const Word& w) const override { return p_->form_degree(w); }
    std::optional<Element> lookup(const std::string& name) const override { return p_->lookup(name); }
    // Graded Leibniz over the letters of w (w need not be normal), then normal form.
    Element d(const Word& w) const override;
    using Dga::d;

private:
    std::shared_ptr<const Presentation> p_;
    std::vector<Element> d_on_gens_;
    mutable std::mutex mutex_;
    mutable std::map<Word, Element> cache_;
};

// d(lhs) = d(rhs) for every rule, d² = 0 on generators, and Ω¹ spanned by A·dA up to weight w.
Report check_presented_dga(const PresentedDga& c, int w, const std::string& suite = "calculus");
// Builds the calculus and throws InconsistentDifferential when d does not respect the relations.
std::shared_ptr<PresentedDga> presented_fodc(std::shared_ptr<const Presentation> p, std::vector<Element> d_on_gens);

// h·(a0 da1···dan) = Σ (h₁·a0) d(h₂·a1)···d(h_{n+1}·an): the action a module algebra induces on its universal calculus.
std::shared_ptr<HAction> diagonal_action(std::shared_ptr<const HAction> base, std::shared_ptr<const UniversalDga> forms);

// Universal forms over a Hopf algebra with the graded coproduct Ω(Δ) and its side components.
class HopfForms {
public:
    // forms == nullptr means degree 0 only (the Hopf algebra itself).
    HopfForms(std::shared_ptr<const Bialgebra> h, std::shared_ptr<const UniversalDga> forms);

    const Bialgebra& hopf() const { return *h_; }
    const Algebra& forms() const;
    const UniversalDga* dga() const { return forms_.get(); }
    std::shared_ptr<const Bialgebra> hopf_ptr() const { return h_; }

    // Ω(Δ)(γ) in Ω(H)⊗Ω(H); keys are pairs of form keys.
    Tensor2 coproduct(const Word& gamma) const;
    // γ₋₁⊗γ₀ (H⊗Ωⁿ) and γ₀⊗γ₁ (Ωⁿ⊗H).
    Tensor2 left_coact(const Word& gamma) const;
    Tensor2 right_coact(const Word& gamma) const;
    Tensor2 left_coact(const Element& gamma) const;
    Tensor2 right_coact(const Element& gamma) const;

    // Graded tensor product algebra: (x⊗y)(x'⊗y') = (-1)^{|y||x'|} xx'⊗yy'.
    Tensor2 mul_tensor(const Tensor2& a, const Tensor2& b) const;
    // D = d⊗1 + (-1)^{|x|} 1⊗d.
    Tensor2 d_tensor(const Tensor2& a) const;
    std::string str2(const Tensor2& t) const;

private:
    std::shared_ptr<const Bialgebra> h_;
    std::shared_ptr<const UniversalDga> forms_;
    mutable std::mutex mutex_;
    mutable std::map<Word, Tensor2> cache_;
};

// Bicovariance of Ω¹(H): comodule laws, bicomodule coherence, the four Hopf-module conditions,
// bicolinearity of d, and coassociativity of Ω(Δ) on forms up to degree 2.
Report check_bicovariant(const HopfForms& f, int w = 0, const std::string& suite = "calculus");

// Quotient Ω¹_u(H)/N for the sub-bimodule N generated by the given 1-forms: bicovariant iff
// λ(N) ⊆ H⊗N and ρ(N) ⊆ N⊗H.
Report check_quotient_bicovariant(const HopfForms& f, const std::vector<Element>& generators,
                                  const std::string& suite = "calculus");
void require_quotient_bicovariant(const HopfForms& f, const std::vector<Element>& generators);

}  // namespace smashcalc
