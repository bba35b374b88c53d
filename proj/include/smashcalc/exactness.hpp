#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "smashcalc/smash.hpp"

namespace smashcalc {

using CoactFn = std::function<Tensor2(const Word&)>;

// V□_H W inside V⊗W: the kernel of (ρ_V⊗id) - (id⊗λ_W) restricted to the span of the given pairs.
struct Cotensor {
    std::vector<WordPair> ambient;
    std::vector<Tensor2> basis;
    std::size_t dim() const { return basis.size(); }
};
Cotensor cotensor(const std::vector<WordPair>& ambient, const CoactFn& right_v, const CoactFn& left_w,
                  Exec exec = default_exec());
bool satisfies_cotensor(const Tensor2& t, const CoactFn& right_v, const CoactFn& left_w);

// The maps of the two short exact sequences
//   0 → (A#H)⊗_A Ω¹(A) → Ω¹(A#H) → (A#H)□Ω¹(H) → 0   (m_ℓ)
//   0 → Ω¹(A)⊗_A (A#H) → Ω¹(A#H) → (A#H)□Ω¹(H) → 0   (m_r)
// The balanced tensor products are carried by H⊗Ω¹(A) (keys (h, ω) for (1#h)⊗ω) and Ω¹(A)⊗H
// (keys (ω, h) for ω⊗(1#h)); normalize_left/right bring a general element to that form.
class ExactSequences {
public:
    explicit ExactSequences(std::shared_ptr<const SmashProduct> s);

    const SmashProduct& smash() const { return *s_; }

    std::vector<WordPair> left_carrier(int w) const;
    std::vector<WordPair> right_carrier(int w) const;
    std::vector<Word> omega1(int w) const;
    std::vector<Word> horizontal(int w) const;  // Ω¹(A)#H
    std::vector<Word> vertical(int w) const;    // A#Ω¹(H)
    // (A#H)⊗Ω¹(H) pairs of weight <= w, ambient space of the cotensor product.
    std::vector<WordPair> cotensor_ambient(int w) const;
    Cotensor cotensor_space(int w) const;

    // Multiplication in Ω(A#H).
    Element m_left(const Tensor2& x) const;
    Element m_right(const Tensor2& x) const;
    // α_ℓ((1#h)⊗ω) = (h₁·ω)#h₂, α_ℓ⁻¹(ω#h) = (1#h₂)⊗S⁻¹(h₁)·ω.
    Element alpha_left(const Tensor2& x) const;
    Tensor2 alpha_left_inv(const Element& u) const;
    // α_r(ω⊗(1#h)) = ω#h.
    Element alpha_right(const Tensor2& x) const;
    Tensor2 alpha_right_inv(const Element& u) const;
    // (a#h)⊗ω ↦ (1#h₂)⊗(S⁻¹(h₁)·a)ω and ω⊗(a#h) ↦ ωa⊗(1#h).
    Tensor2 normalize_left(const Word& ah, const Word& form) const;
    Tensor2 normalize_right(const Word& form, const Word& ah) const;

    // π¹: the (A#H)⊗Ω¹(H) component of Ω(ρ).
    Tensor2 pi1(const Element& u) const;
    // β(a#γ) = a#γ₋₁⊗γ₀, computed through the embedding Ω¹_u(H) ⊂ H⊗H.
    Tensor2 beta(const Element& u) const;
    Element beta_inv(const Tensor2& t) const;
    // Projection onto A#Ω¹(H).
    Element pr2(const Element& u) const;

    CoactFn right_coaction() const;
    CoactFn left_coaction() const;

private:
    std::shared_ptr<const SmashProduct> s_;
};

// Injectivity of m_ℓ and m_r, surjectivity of π¹ onto the cotensor product, ker π¹ = im m_ℓ = im m_r
// (dimension and containment), the triangles m_ℓ = ια_ℓ, m_r = ια_r, π¹ = βpr₂, two-sided inverses
// of α_ℓ, α_r, β, compatibility with the balanced relations, and π¹D(x) = x₀⊗dx₁; all at weight <= w.
Report check_short_exact(const ExactSequences& e, int w, const std::string& suite = "exactness");

}  // namespace smashcalc
