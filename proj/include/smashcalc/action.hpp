#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "smashcalc/dga.hpp"
#include "smashcalc/hopf.hpp"

namespace smashcalc {

// Left H-action on an algebra (or on the forms of a DGA).
class HAction {
public:
    virtual ~HAction() = default;
    virtual const Bialgebra& hopf() const = 0;
    virtual const Algebra& target() const = 0;
    virtual Element act(const Word& h, const Word& a) const = 0;
    virtual std::string name() const = 0;

    Element act(const Element& h, const Element& a) const;
    Element act(const Word& h, const Element& a) const;
};

// h·a = ε(h) a.
class TrivialAction : public HAction {
public:
    TrivialAction(std::shared_ptr<const Bialgebra> h, std::shared_ptr<const Algebra> a) : h_(std::move(h)), a_(std::move(a)) {}
    const Bialgebra& hopf() const override { return *h_; }
    const Algebra& target() const override { return *a_; }
    Element act(const Word& h, const Word& a) const override { return h_->counit(h) * Element::single(a); }
    using HAction::act;
    std::string name() const override { return "trivial"; }

private:
    std::shared_ptr<const Bialgebra> h_;
    std::shared_ptr<const Algebra> a_;
};

// Action given on (H word, algebra letter) pairs. Missing H words of length > 1 act letter by letter
// (g·(h·a) = (gh)·a); algebra words act through h·(ab) = Σ (h₁·a)(h₂·b). Memoized.
class GeneratorAction : public HAction {
public:
    using Table = std::map<std::pair<Word, Letter>, Element>;
    GeneratorAction(std::string name, std::shared_ptr<const Bialgebra> h, std::shared_ptr<const Algebra> a, Table table);

    const Bialgebra& hopf() const override { return *h_; }
    const Algebra& target() const override { return *a_; }
    Element act(const Word& h, const Word& a) const override;
    using HAction::act;
    std::string name() const override { return name_; }
    const Table& table() const { return table_; }
    GeneratorAction with_entry(const Word& h, Letter a, const Element& value) const;

private:
    Element compute(const Word& h, const Word& a) const;

    std::string name_;
    std::shared_ptr<const Bialgebra> h_;
    std::shared_ptr<const Algebra> a_;
    Table table_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<Word, Word>, Element> cache_;
};

// Action defined by a callback (induced actions). `keep` holds whatever the callback refers to.
class FunctionAction : public HAction {
public:
    using Fn = std::function<Element(const Word&, const Word&)>;
    FunctionAction(std::string name, const Bialgebra& h, const Algebra& a, Fn fn, std::shared_ptr<const void> keep = {})
        : name_(std::move(name)), h_(h), a_(a), fn_(std::move(fn)), keep_(std::move(keep))
    {
    }
    const Bialgebra& hopf() const override { return h_; }
    const Algebra& target() const override { return a_; }
    Element act(const Word& h, const Word& a) const override { return fn_(h, a); }
    using HAction::act;
    std::string name() const override { return name_; }

private:
    std::string name_;
    const Bialgebra& h_;
    const Algebra& a_;
    Fn fn_;
    std::shared_ptr<const void> keep_;
};

// H basis words used when enumerating checks: all of H for tables, words up to hdegree otherwise.
std::vector<Word> hopf_basis(const Bialgebra& h, int hdegree);

// Module-algebra axioms: h·(ab) = Σ(h₁·a)(h₂·b), 1·a = a, h·1 = ε(h)1, g·(h·a) = (gh)·a.
Report check_module_algebra(const HAction& m, int degree, int hdegree = 1, const std::string& suite = "action");

// Module-algebra axioms on a DGA plus d(h·a) = h·d(a).
Report check_action_on_calculus(const HAction& m, const Dga& forms, int degree, int hdegree = 1,
                                const std::string& suite = "action");

enum class Side { Left, Right };

// Coaction of a bialgebra on an algebra. Right coactions have keys (v, h), left coactions (h, v).
class Coaction {
public:
    virtual ~Coaction() = default;
    virtual const Bialgebra& hopf() const = 0;
    virtual const Algebra& carrier() const = 0;
    virtual Side side() const = 0;
    virtual Tensor2 coact(const Word& v) const = 0;
    virtual std::string name() const = 0;
    Tensor2 coact(const Element& v) const;
};

// Coaction given on generators and extended as an algebra map (carrier must be a Presentation
// or have every basis word listed).
class GeneratorCoaction : public Coaction {
public:
    GeneratorCoaction(std::string name, std::shared_ptr<const Bialgebra> h, std::shared_ptr<const Algebra> a, Side side,
                      std::map<Letter, Tensor2> on_letters);
    const Bialgebra& hopf() const override { return *h_; }
    const Algebra& carrier() const override { return *a_; }
    Side side() const override { return side_; }
    Tensor2 coact(const Word& v) const override;
    using Coaction::coact;
    std::string name() const override { return name_; }

private:
    std::string name_;
    std::shared_ptr<const Bialgebra> h_;
    std::shared_ptr<const Algebra> a_;
    Side side_;
    std::map<Letter, Tensor2> on_letters_;
    mutable std::mutex mutex_;
    mutable std::map<Word, Tensor2> cache_;
};

class FunctionCoaction : public Coaction {
public:
    using Fn = std::function<Tensor2(const Word&)>;
    FunctionCoaction(std::string name, const Bialgebra& h, const Algebra& a, Side side, Fn fn)
        : name_(std::move(name)), h_(h), a_(a), side_(side), fn_(std::move(fn))
    {
    }
    const Bialgebra& hopf() const override { return h_; }
    const Algebra& carrier() const override { return a_; }
    Side side() const override { return side_; }
    Tensor2 coact(const Word& v) const override { return fn_(v); }
    using Coaction::coact;
    std::string name() const override { return name_; }

private:
    std::string name_;
    const Bialgebra& h_;
    const Algebra& a_;
    Side side_;
    Fn fn_;
};

// Product in A⊗H (right) or H⊗A (left), factors multiplied componentwise.
Tensor2 coaction_product(const Coaction& c, const Tensor2& x, const Tensor2& y);
std::string coaction_str(const Coaction& c, const Tensor2& t);

// Algebra-map property on basis pairs, coassociativity and counit law on basis words up to degree.
Report check_comodule_algebra(const Coaction& c, int degree, const std::string& suite = "action");

// Coinvariants among the span of the given carrier words: kernel of ρ(v) - v⊗1 (or λ(v) - 1⊗v).
Subspace coinvariants(const Coaction& c, const std::vector<Word>& words, Exec exec = default_exec());

// Carrier V with module structures over an algebra B and comodule structures over H, where B itself
// carries the matching coactions (for B = H these are Δ). Unset callbacks skip the matching checks.
struct HopfModuleData {
    using Act = std::function<Element(const Word& b, const Word& v)>;
    using Coact = std::function<Tensor2(const Word& v)>;
    std::string name;
    const Algebra* b = nullptr;
    const Bialgebra* h = nullptr;
    std::vector<Word> b_words;
    std::vector<Word> v_words;
    std::function<std::string(const Word&)> v_str;
    Act left_act;   // b·v
    Act right_act;  // v·b, called as right_act(b, v)
    Coact left_coact;   // keys (h, v)
    Coact right_coact;  // keys (v, h)
    Coact b_left_coact;
    Coact b_right_coact;
};

// The four module/comodule compatibilities, bimodule and bicomodule coherence, and the comodule laws.
Report check_hopf_module(const HopfModuleData& v, const std::string& suite = "action");

}  // namespace smashcalc
