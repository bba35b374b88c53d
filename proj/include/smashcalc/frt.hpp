#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "smashcalc/hopf.hpp"
#include "smashcalc/smash.hpp"

namespace smashcalc {

// R^{ij}_{kℓ} is the matrix of e_k⊗e_ℓ ↦ Σ R^{ij}_{kℓ} e_i⊗e_j. Indices start at 0.
struct RMatrix {
    int n = 0;
    std::vector<Scalar> entries;  // R^{ij}_{kℓ} at ((i·n + j)·n + k)·n + ℓ
    Scalar gamma = Scalar(1);

    const Scalar& operator()(int i, int j, int k, int l) const { return entries.at(index(i, j, k, l)); }
    Scalar& at(int i, int j, int k, int l) { return entries.at(index(i, j, k, l)); }
    std::size_t index(int i, int j, int k, int l) const { return ((static_cast<std::size_t>(i) * n + j) * n + k) * n + l; }
    // n²×n² matrix, row ij, column kℓ.
    Matrix matrix() const;
    RMatrix specialize(const mpq_class& q) const;
    RMatrix with_entry(int i, int j, int k, int l, const Scalar& v) const;

    // q on R^{ii}_{ii}, 1 on R^{ij}_{ij} (i≠j), q−q⁻¹ on R^{21}_{12}.
    static RMatrix standard(const Scalar& gamma = Scalar(1));
    static RMatrix identity(int n, const Scalar& gamma = Scalar(1));
};

// R₁₂R₁₃R₂₃ = R₂₃R₁₃R₁₂ on V^{⊗3} and invertibility of R.
Report check_ybe(const RMatrix& r, const std::string& suite = "frt");
void require_ybe(const RMatrix& r);  // GateFailure

// Letter of Tⁱⱼ in A(R).
inline Letter t_letter(int n, int i, int j) { return static_cast<Letter>(i * n + j); }

// R̂^{ij}_{kℓ}TᵏₘTℓₙ − TⁱₖTʲₗR̂^{kℓ}_{mn} with R̂^{ij}_{kℓ} = R^{ji}_{kℓ}, as free words, one per (i,j,m,n).
std::vector<Element> frt_relations(const RMatrix& r);
// A(R) with relations row-reduced and oriented in deglex order, Δ(Tⁱⱼ) = Σ Tⁱₖ⊗Tᵏⱼ, ε(Tⁱⱼ) = δⁱⱼ.
// Runs the YBE gate first.
std::shared_ptr<PresentedBialgebra> frt_bialgebra(const RMatrix& r);

// r(Tⁱⱼ⊗Tᵏℓ) = γR^{ik}_{jℓ}, r̄(Tⁱⱼ⊗Tᵏℓ) = γ⁻¹(R⁻¹)^{ik}_{jℓ}, extended to words by
// r(f⊗gh) = r(f₁⊗h)r(f₂⊗g), r(fg⊗h) = r(f⊗h₁)r(g⊗h₂) and r̄(f⊗gh) = r̄(f₁⊗g)r̄(f₂⊗h), r̄(fg⊗h) = r̄(g⊗h₁)r̄(f⊗h₂).
class RForm {
public:
    RForm(RMatrix r, std::shared_ptr<const PresentedBialgebra> ar);

    const RMatrix& rmatrix() const { return r_; }
    const Matrix& r_inverse() const { return inv_; }
    const PresentedBialgebra& bialgebra() const { return *ar_; }
    std::shared_ptr<const PresentedBialgebra> bialgebra_ptr() const { return ar_; }

    // Free words in the T letters.
    Scalar r(const Word& f, const Word& h) const;
    Scalar rbar(const Word& f, const Word& h) const;
    Scalar r(const Element& f, const Element& h) const;
    Scalar rbar(const Element& f, const Element& h) const;

private:
    Scalar eps(const Word& w) const;
    Scalar on_generator(const std::vector<Matrix>& m, const Word& f, Letter h, bool reversed) const;
    // Δ of a free word, without normalization.
    std::vector<std::pair<Word, Word>> free_coproduct(const Word& f) const;

    RMatrix r_;
    Matrix inv_;
    std::shared_ptr<const PresentedBialgebra> ar_;
    std::vector<Matrix> m_;     // m_[g](k, ℓ) = r(g⊗Tᵏℓ)
    std::vector<Matrix> mbar_;  // mbar_[g](k, ℓ) = r̄(g⊗Tᵏℓ)
    mutable std::mutex mutex_;
    mutable std::map<std::pair<Word, Word>, Scalar> r_cache_, rbar_cache_;
};

// Well-definedness on the relations, the first axiom on generator 4-tuples (normalized both sides,
// and spanning exactly the FRT relations), the first axiom and multiplicativity on words, r(1⊗h) = ε(h),
// and the convolution inverse identities on generator pairs and on words up to degree.
Report check_r_form(const RForm& rf, int degree, const std::string& suite = "frt");

// ρ(vⁱ) = Tⁱⱼ⊗vʲ on each family of n letters, extended as an algebra map.
std::shared_ptr<GeneratorCoaction> vector_coaction(std::shared_ptr<const PresentedBialgebra> ar,
                                                   std::shared_ptr<const Algebra> a, int n,
                                                   const std::vector<std::vector<Letter>>& families);
// h·v = v₀ r(v₋₁⊗h).
std::shared_ptr<HAction> induced_action(std::shared_ptr<const Coaction> c, std::shared_ptr<const RForm> rf);

// Quantum plane data: generators xⁱ of a presented algebra and a calculus with letters xⁱ, dxⁱ.
struct FrtInput {
    RMatrix r;
    std::shared_ptr<const Presentation> plane;
    std::vector<Letter> x;
    std::shared_ptr<const PresentedDga> forms;
    std::vector<Letter> fx;
    std::vector<Letter> fdx;
};

// Standard R, plane x·y → q·y·x and its Wess–Zumino calculus.
FrtInput standard_frt_input(const Scalar& gamma = Scalar(1));
// q ↦ point in every coefficient, γ replaced.
FrtInput specialize(const FrtInput& in, const mpq_class& q, const Scalar& gamma);
std::shared_ptr<Presentation> specialize(const Presentation& p, const mpq_class& q);

struct FrtSetup {
    FrtInput input;
    std::shared_ptr<const PresentedBialgebra> ar;
    std::shared_ptr<const RForm> rf;
    std::shared_ptr<const GeneratorCoaction> plane_coaction;
    std::shared_ptr<const GeneratorCoaction> forms_coaction;
    std::shared_ptr<const HAction> plane_action;
    std::shared_ptr<const HAction> forms_action;
    std::shared_ptr<const SmashProduct> smash;     // plane # A(R)
    std::shared_ptr<const SmashProduct> calculus;  // Ω(plane) # Ω_u(A(R)), forms of degree <= 1
};

// Gates: YBE (GateFailure), then the coactions must respect the relations at degree 2 (RelationIncompatible).
FrtSetup build_frt(FrtInput in);

// Bialgebra axioms of A(R) at degree 2, relation rank and degree-2 dimension, local confluence at
// degree 3 for A(R), the plane and its calculus.
Report check_frt_algebra(const FrtSetup& s, int degree = 2, const std::string& suite = "frt");
// Comodule-algebra laws, module-algebra laws of the induced actions, d(h·ω) = h·dω,
// and Tⁱⱼ·xᵏ = γR^{ki}_{ℓj}xℓ, Tⁱⱼ·dxᵏ = γR^{ki}_{ℓj}dxℓ on all index tuples.
Report check_induced_action(const FrtSetup& s, int degree = 2, const std::string& suite = "frt");
// Tⁱⱼxᵏ = γR^{ki}_{mℓ}xᵐTℓⱼ, (dTⁱⱼ)xᵏ = γR^{ki}_{mℓ}xᵐdTℓⱼ, (dxʳ)Tˢⱼ = γ⁻¹(R⁻¹)^{rs}_{ki}Tⁱⱼdxᵏ
// on generators; (dh)a, h(da) and (da)h on words up to degree; the product formula of the smash.
Report wz_smash_relations(const FrtSetup& s, int degree = 2, const std::string& suite = "frt");
// For a setup specialized at q = 1, γ = 1: every relation is a graded commutator, r = ε⊗ε,
// the action is trivial and all commutation relations are commutativity.
Report check_classical_limit(const FrtSetup& s, int degree = 2, const std::string& suite = "frt_classical");
// Everything above plus smash associativity up to total degree smash_degree.
Report check_frt(const FrtSetup& s, int degree = 2, int smash_degree = 3, const std::string& suite = "frt");

}  // namespace smashcalc
