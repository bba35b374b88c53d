#pragma once

#include <memory>
#include <mutex>
#include <map>

#include "smashcalc/smash.hpp"

namespace smashcalc {

// First order calculus on A#H written out componentwise on Ω¹(A)⊗H ⊕ A⊗Ω¹(H):
//   D(a⊗h) = δa⊗h + a⊗dh
//   (a⊗h)(α⊗g + b⊗ξ) = a(h₁·α)⊗h₂g + a(h₁·b)⊗h₂ξ
//   (α⊗g + b⊗ξ)(a⊗h) = α(g₁·a)⊗g₂h + b(ξ₋₁·a)⊗ξ₀h
// Keys are smash keys of the given smash product; its own product is only used for comparison.
class StandardFodc {
public:
    explicit StandardFodc(std::shared_ptr<const SmashProduct> s);

    const SmashProduct& smash() const { return *s_; }
    Element mul0(const Word& u, const Word& v) const;
    Element D(const Word& u) const;
    Element D(const Element& u) const;
    Element left(const Word& u, const Word& form) const;
    Element right(const Word& form, const Word& u) const;
    Element left(const Element& u, const Element& form) const;
    Element right(const Element& form, const Element& u) const;

private:
    const Dga& base_dga() const;
    const Dga& fiber_dga() const;

    std::shared_ptr<const SmashProduct> s_;
};

// Leibniz rule, bimodule laws, Ω¹ = (A#H)·D(A#H), and agreement with the graded smash product in degree ≤ 1.
Report check_standard_fodc(const StandardFodc& f, int w, const std::string& suite = "standard_calculus");

// Graded tensor product of two DGAs: (a⊗b)(a'⊗b') = (-1)^{|b||a'|} aa'⊗bb', D = d⊗1 + (-1)^{|a|} 1⊗d.
// Keys are length-prefixed pairs: {|a|} a b.
class TensorProductDga : public Dga {
public:
    TensorProductDga(std::shared_ptr<const Dga> a, std::shared_ptr<const Dga> b, int max_form_degree = 2);

    static Word key(const Word& a, const Word& b);
    static WordPair split(const Word& key);

    Element mul(const Word& u, const Word& v) const override;
    using Algebra::mul;
    Word unit() const override { return key(a_->unit(), b_->unit()); }
    std::vector<Word> basis_up_to(int w) const override;
    int weight(const Word& k) const override;
    std::string word_str(const Word& k) const override;
    int form_degree(const Word& k) const override;
    std::optional<Element> lookup(const std::string& name) const override;
    Element d(const Word& k) const override;
    using Dga::d;

private:
    std::shared_ptr<const Dga> a_;
    std::shared_ptr<const Dga> b_;
    int max_degree_;
};

// Under the trivial action the smash calculus and the tensor-product calculus have identical
// product and differential tables (basis pairs of weight <= w, all form degrees up to the cap).
Report check_trivial_smash_calculus(const SmashProduct& s, const TensorProductDga& t, int w,
                                    const std::string& suite = "standard_calculus");

}  // namespace smashcalc
