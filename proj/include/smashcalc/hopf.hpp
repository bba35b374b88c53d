#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "smashcalc/algebra.hpp"
#include "smashcalc/ncalg.hpp"
#include "smashcalc/report.hpp"

namespace smashcalc {

// Keys of H^{⊗n} are packed words (join_tensor of basis words).
using TensorN = LinComb<Word>;

// Bialgebra interface shared by the table backend and the presented backend.
class Bialgebra {
public:
    virtual ~Bialgebra() = default;
    virtual const Algebra& algebra() const = 0;
    virtual Tensor2 comult(const Word& h) const = 0;
    virtual Scalar counit(const Word& h) const = 0;
    virtual bool has_antipode() const { return false; }
    virtual Element antipode(const Word& h) const;
    virtual bool has_antipode_inverse() const { return false; }
    virtual Element antipode_inverse(const Word& h) const;
    virtual std::string name() const = 0;

    Tensor2 comult(const Element& h) const;
    Scalar counit(const Element& h) const;
    Element antipode(const Element& h) const;
    Element antipode_inverse(const Element& h) const;

    // Iterated coproduct into H^{⊗(n+1)}.
    TensorN sweedler_expand(const Element& h, int n) const;
    // Product in H ⊗ H.
    Tensor2 mul2(const Tensor2& a, const Tensor2& b) const;
    std::string str2(const Tensor2& t) const;
    std::string strn(const TensorN& t) const;
};

// Finite-dimensional Hopf algebra given by structure constants.
class FdHopf : public Bialgebra {
public:
    FdHopf(std::string name, BasedSpace space, Matrix mult, std::size_t unit_index, Matrix comult, Matrix counit,
           std::optional<Matrix> antipode);

    const FdAlgebra& fd() const { return alg_; }
    const Algebra& algebra() const override { return alg_; }
    Tensor2 comult(const Word& h) const override;
    using Bialgebra::comult;
    Scalar counit(const Word& h) const override;
    using Bialgebra::counit;
    bool has_antipode() const override { return antipode_.has_value(); }
    Element antipode(const Word& h) const override;
    using Bialgebra::antipode;
    bool has_antipode_inverse() const override { return antipode_inverse_.has_value(); }
    Element antipode_inverse(const Word& h) const override;
    using Bialgebra::antipode_inverse;
    std::string name() const override { return name_; }

    std::size_t dim() const { return alg_.dim(); }
    const BasedSpace& space() const { return alg_.space(); }
    LinMap mult_map() const;
    LinMap unit_map() const;
    LinMap comult_map() const;
    LinMap counit_map() const;
    std::optional<LinMap> antipode_map() const;
    // Inverse of the antipode matrix; throws SingularAntipode.
    LinMap antipode_inverse_map() const;

    // Copy with some table entries replaced (used for mutation tests and scenario overrides).
    FdHopf with_comult(std::size_t basis, const Tensor2& value) const;
    FdHopf with_counit(std::size_t basis, const Scalar& value) const;
    FdHopf with_antipode(std::size_t basis, const Element& value) const;
    FdHopf with_product(std::size_t a, std::size_t b, const Element& value) const;

    json to_json() const;

private:
    std::string name_;
    FdAlgebra alg_;
    Matrix comult_;
    Matrix counit_;
    std::optional<Matrix> antipode_;
    std::optional<Matrix> antipode_inverse_;
};

// Axioms of a Hopf algebra checked as exact matrix identities; one check per axiom.
Report verify_fd_hopf(const FdHopf& h);
// Throws GateFailure naming verify_fd_hopf unless every axiom holds.
void require_fd_hopf(const FdHopf& h);

// Bialgebra presented by generators; Δ, ε (and optionally S) given on generators.
class PresentedBialgebra : public Bialgebra {
public:
    PresentedBialgebra(std::string name, std::shared_ptr<const Presentation> algebra, std::vector<Tensor2> comult_on_gens,
                       std::vector<Scalar> counit_on_gens, std::optional<std::vector<Element>> antipode_on_gens = {});

    const Presentation& presentation() const { return *alg_; }
    std::shared_ptr<const Presentation> presentation_ptr() const { return alg_; }
    const Algebra& algebra() const override { return *alg_; }
    // Multiplicative extension over the letters of h (h need not be normal).
    Tensor2 comult(const Word& h) const override;
    using Bialgebra::comult;
    Scalar counit(const Word& h) const override;
    using Bialgebra::counit;
    bool has_antipode() const override { return antipode_.has_value(); }
    Element antipode(const Word& h) const override;
    using Bialgebra::antipode;
    std::string name() const override { return name_; }

    const std::vector<Tensor2>& comult_on_gens() const { return comult_; }
    const std::vector<Scalar>& counit_on_gens() const { return counit_; }

private:
    std::string name_;
    std::shared_ptr<const Presentation> alg_;
    std::vector<Tensor2> comult_;
    std::vector<Scalar> counit_;
    std::optional<std::vector<Element>> antipode_;
    mutable std::mutex mutex_;
    mutable std::map<Word, Tensor2> comult_cache_;
};

// Relations killed by Δ and ε, coassociativity, counit (and antipode when present) on basis words up to degree.
Report check_presented_bialgebra(const PresentedBialgebra& b, int degree);

// Table form of a finite presented Hopf algebra: basis = all normal words (must be finite below the cap).
FdHopf fd_from_presented(const PresentedBialgebra& b);

}  // namespace smashcalc
