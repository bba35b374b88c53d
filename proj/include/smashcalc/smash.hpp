#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "smashcalc/action.hpp"
#include "smashcalc/calculus.hpp"

namespace smashcalc {

// Smash keys pack (ω, γ) as ω, kSmashSep, γ. Neither side uses this letter.
inline constexpr Letter kSmashSep = 0xFFFE;
Word smash_key(const Word& a, const Word& h);
WordPair smash_split(const Word& key);

// Ω(A)#Ω(H) with (ω#γ)(ν#γ′) = (-1)^{|γ||ν|} ω(γ₋₁·ν) # γ₀γ′ and d(ω#γ) = dω#γ + (-1)^{|ω|} ω#dγ.
// With a plain algebra A and degree-0 forms on H this is the smash product A#H.
class SmashProduct : public Dga {
public:
    SmashProduct(std::shared_ptr<const HAction> action, std::shared_ptr<const HopfForms> h, int max_form_degree = 2);

    const Algebra& base() const { return action_->target(); }
    const HAction& action() const { return *action_; }
    const HopfForms& fiber() const { return *h_; }
    const Algebra& fiber_forms() const { return h_->forms(); }
    int max_form_degree() const { return max_degree_; }

    Element mul(const Word& u, const Word& v) const override;
    using Algebra::mul;
    Word unit() const override;
    // Pairs of total weight <= w and total form degree <= max_form_degree.
    std::vector<Word> basis_up_to(int w) const override;
    int weight(const Word& key) const override;
    std::string word_str(const Word& key) const override;
    int form_degree(const Word& key) const override;
    std::optional<Element> lookup(const std::string& name) const override;
    Element d(const Word& key) const override;
    using Dga::d;

    Element pair(const Element& a, const Element& h) const;
    // Ω(ρ)(ω#γ) = ω#γ[1] ⊗ γ[2]; keys (smash key, H-form key). In degree 0 this is ρ(a#h) = a#h₁⊗h₂.
    Tensor2 coaction(const Word& key) const;
    Tensor2 coaction(const Element& u) const;
    // Graded tensor product (Ω(A#H)⊗Ω(H)) structure used to test Ω(ρ).
    Tensor2 mul_tensor(const Tensor2& x, const Tensor2& y) const;
    Tensor2 d_tensor(const Tensor2& x) const;
    std::string str2(const Tensor2& t) const;

private:
    Element mul_uncached(const Word& u, const Word& v) const;
    const Dga& base_dga() const;

    std::shared_ptr<const HAction> action_;
    std::shared_ptr<const HopfForms> h_;
    int max_degree_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<Word, Word>, Element> cache_;
};

// Associativity on basis triples, unit laws, and ρ an algebra map, coassociative and counital,
// all on degree-0 elements of weight <= w; coinvariants of ρ equal A#1.
Report check_smash(const SmashProduct& s, int w, const std::string& suite = "smash");

// Under the trivial action the product is (a#g)(b#h) = ab#gh.
Report check_trivial_smash_is_tensor(const SmashProduct& s, int w, const std::string& suite = "smash");

// Graded version: associativity on triples of total form degree <= max, d² = 0, graded Leibniz,
// and Ω(ρ) an algebra map and a chain map.
Report check_smash_dga(const SmashProduct& s, int w, const std::string& suite = "smash_calculus");

// Algebra map between presented algebras given on generators.
class AlgebraMap {
public:
    AlgebraMap(std::shared_ptr<const Presentation> source, std::shared_ptr<const Algebra> target, std::vector<Element> on_gens);
    const Presentation& source() const { return *src_; }
    const Algebra& target() const { return *dst_; }
    Element operator()(const Word& w) const;
    Element operator()(const Element& e) const;
    AlgebraMap then(const AlgebraMap& g) const;  // g∘f

private:
    std::shared_ptr<const Presentation> src_;
    std::shared_ptr<const Algebra> dst_;
    std::vector<Element> on_gens_;
};

// f#1 : A#H → B#H. Throws PreconditionFailed if f does not respect the relations of A and
// NotEquivariant if f(h·a) ≠ h·f(a) for some checked pair (H words up to hdegree, A words up to w).
std::function<Element(const Word&)> smash_morphism(const AlgebraMap& f, const SmashProduct& from, const SmashProduct& to,
                                                   int w, int hdegree = 1);

// (f#1) is an algebra map on basis pairs of weight <= w.
Report check_smash_morphism(const std::function<Element(const Word&)>& f1, const SmashProduct& from,
                            const SmashProduct& to, int w, const std::string& suite = "smash");

}  // namespace smashcalc
