#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "smashcalc/exactness.hpp"

namespace smashcalc {

// 𝔥-valued forms φ = Σ x_i ⊗ φ_i are stored as the component list (φ_i); 𝔥 elements as coordinate vectors.
using HForm = std::vector<Element>;
// t = Σ x_i ⊗ t_i in 𝔥⊗Ω¹(A).
using Translation = std::vector<Element>;

struct Connection {
    std::string kind;  // "left", "right" or "two-sided"
    // Map on A#Ω¹(H); (A#H)□Ω¹(H) enters through β⁻¹.
    std::function<Element(const Word&)> on_vertical;
    Element operator()(const Element& v) const;
};

// Lie algebra 𝔥 of Ω¹(H), fundamental vector fields, connection 1-forms and connections on A#H.
class Connections {
public:
    explicit Connections(std::shared_ptr<const ExactSequences> e);

    const ExactSequences& sequences() const { return *e_; }
    const SmashProduct& smash() const { return e_->smash(); }

    // {x^i}: basis of the left coinvariants of Ω¹(H); {x_i} ⊂ 𝔥 is the dual basis.
    std::size_t dim() const { return coinv_.size(); }
    const std::vector<Element>& coinvariant_basis() const { return coinv_; }
    // Coordinates ⟨γ, x_i⟩ of a left coinvariant γ; throws NotInImage otherwise.
    Vector coinvariant_coords(const Element& gamma) const;
    // ρ(x_j) = Σ_k x_k ⊗ coaction()[j][k], from ⟨γ, X₀⟩X₁ = ⟨γ₀, X⟩S⁻¹(γ₁).
    const std::vector<std::vector<Element>>& coaction() const { return coact_; }
    Vector basis_vector(std::size_t i) const;

    // γ ↦ Σ γ₋₂ ⊗ S(γ₋₁)γ₀ with the coinvariant factor in coordinates (iterated λ).
    std::map<Word, Vector> vertical_expand(const Word& gamma) const;
    // γ ↦ Σ γ₀S⁻¹(γ₋₁) ⊗ γ₋₂ (mirror decomposition used for right connections).
    std::map<Word, Vector> vertical_expand_right(const Word& gamma) const;

    // ⟨u, X̄⟩ = (a#γ₋₂)⟨S(γ₋₁)γ₀, X⟩ for u = ω#h + a#γ.
    Element field(const Vector& x, const Element& u) const;
    // 𝔥-valued function ⟨φ, X̄⟩ = Σ x_i ⊗ ⟨φ_i, X̄⟩.
    HForm pair_field(const HForm& phi, const Vector& x) const;
    HForm const_v(const Vector& v) const;
    Element pair_dual(const Vector& functional, const HForm& phi) const;
    HForm push(const std::function<Element(const Element&)>& f, const HForm& phi) const;

    // Ω¹(A#H) → Ω¹(A#H)⊗H component of Ω(ρ).
    Tensor2 rho1(const Element& u) const;
    bool invariant_codiagonal(const HForm& phi) const;
    bool invariant_twisted(const HForm& phi) const;

    HForm canonical_form() const;  // Σ x_i⊗(1#x^i)
    Connection canonical() const;  // c(Σ a#h⊗γ) = Σ aε(h)#γ
    Connection from_form(const HForm& phi) const;  // c_φ(a#γ) = (a#γ₋₂)⟨S(γ₋₁)γ₀, φ⟩
    // c(a#γ) = ⟨γ₀S⁻¹(γ₋₁), φ⟩(a#γ₋₂); returned only after right linearity, colinearity and π¹c = id
    // have been verified at weight <= w. Throws FeatureDisabled or UnverifiedFormula.
    Connection right_from_form(const HForm& phi, int w, bool enabled) const;
    HForm form_of(const Connection& c) const;  // φ_c = Σ x_i⊗c(1#x^i)

    // j(X⊗ω) = X₀⊗ω#S(X₁).
    HForm j(const Translation& t) const;
    // t with j(t) = a - b, solved at weight <= w; throws TheoremViolation when no solution exists.
    Translation decompose_difference(const HForm& a, const HForm& b, int w) const;
    Translation sample_translation(std::uint64_t seed, int w) const;

private:
    std::shared_ptr<const ExactSequences> e_;
    std::vector<Element> coinv_;
    std::vector<Word> words1_;
    Matrix coinv_matrix_;
    std::vector<std::vector<Element>> coact_;
};

Report check_lie_algebra(const Connections& c, const std::string& suite = "connections");
// ⟨·, X̄⟩ vanishes on Ω¹(A)#H, is left A#H-linear, and ⟨1#x^i, X̄_j⟩ = δ_ij.
Report check_fundamental_fields(const Connections& c, int w, const std::string& suite = "connections");
// Both invariance criteria; throws TheoremViolation if they disagree.
Report check_invariant(const Connections& c, const HForm& phi, const std::string& name,
                       const std::string& suite = "connections");
// (a) invariance and ⟨φ, X̄⟩ = const_X; (b) invariance and π¹(φ) = Σ x_i⊗1⊗x^i.
// Throws TheoremViolation if the two criteria disagree.
Report is_connection_one_form(const Connections& c, const HForm& phi, const std::string& name,
                              const std::string& suite = "connections");
// π¹c = id on the cotensor product, colinearity, and left and/or right A#H-linearity at weight <= w.
Report check_connection(const Connections& c, const Connection& conn, int w, const std::string& name,
                        const std::string& suite = "connections");
// Two connections agree on the A#Ω¹(H) basis of weight <= w.
Check same_connection(const Connections& c, const Connection& a, const Connection& b, int w, const std::string& name,
                      const std::string& suite = "connections");
// j is injective, lands in invariant forms and π¹j = 0, at weight <= w.
Report check_translations(const Connections& c, int w, const std::string& suite = "connections");
// Everything above for the canonical connection, three j-translates and three invalid forms, plus the
// bijection roundtrips and decompose_difference. Right connections only when enabled.
Report check_connection_theory(const Connections& c, int w, bool enable_right, const std::string& suite = "connections");

}  // namespace smashcalc
