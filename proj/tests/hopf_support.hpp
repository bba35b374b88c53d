#pragma once

#include <memory>

#include "smashcalc/hopf.hpp"

namespace testsupport {

using namespace smashcalc;

inline Element w(std::initializer_list<Letter> letters, const Scalar& c = Scalar(1))
{
    return Element::single(Word(letters), c);
}

// k[C2] = <g | g*g = 1>, g grouplike.
inline std::shared_ptr<PresentedBialgebra> kc2_presented()
{
    auto a = std::make_shared<Presentation>(std::vector<Generator>{{"g", 0}},
                                            std::vector<Rule>{{Word{0, 0}, Element::single(Word{})}});
    return std::make_shared<PresentedBialgebra>("kC2", a, std::vector<Tensor2>{Tensor2::single({Word{0}, Word{0}})},
                                                std::vector<Scalar>{Scalar(1)}, std::vector<Element>{w({0})});
}

// Sweedler's H4 = <g, x | g*g = 1, x*x = 0, x*g = -g*x>, precedence g < x.
inline std::shared_ptr<PresentedBialgebra> h4_presented()
{
    std::vector<Rule> rules{{Word{0, 0}, Element::single(Word{})}, {Word{1, 1}, Element()}, {Word{1, 0}, w({0, 1}, -1)}};
    auto a = std::make_shared<Presentation>(std::vector<Generator>{{"g", 0}, {"x", 0}}, rules);
    Tensor2 dg = Tensor2::single({Word{0}, Word{0}});
    Tensor2 dx = Tensor2::single({Word{1}, Word{}}) + Tensor2::single({Word{0}, Word{1}});
    return std::make_shared<PresentedBialgebra>("H4", a, std::vector<Tensor2>{dg, dx},
                                                std::vector<Scalar>{Scalar(1), Scalar(0)},
                                                std::vector<Element>{w({0}), w({0, 1}, -1)});
}

}  // namespace testsupport

namespace testsupport {

inline std::shared_ptr<const Algebra> algebra_of(const std::shared_ptr<const Bialgebra>& h)
{
    return std::shared_ptr<const Algebra>(h, &h->algebra());
}

inline std::shared_ptr<const FdHopf> kc2_table() { return std::make_shared<FdHopf>(fd_from_presented(*kc2_presented())); }
inline std::shared_ptr<const FdHopf> h4_table() { return std::make_shared<FdHopf>(fd_from_presented(*h4_presented())); }

// Dual numbers k[t]/(t*t).
inline std::shared_ptr<Presentation> dual_numbers()
{
    return std::make_shared<Presentation>(std::vector<Generator>{{"t", 0}}, std::vector<Rule>{{Word{0, 0}, Element()}});
}

// Quantum plane with the Wess-Zumino type calculus: precedence dx < dy < y < x.
inline std::shared_ptr<Presentation> wz_plane()
{
    Scalar q = Scalar::q();
    Letter dx = 0, dy = 1, y = 2, x = 3;
    std::vector<Generator> gens{{"dx", 1}, {"dy", 1}, {"y", 0}, {"x", 0}};
    std::vector<Rule> rules{
        {Word{x, y}, w({y, x}, q)},
        {Word{x, dx}, w({dx, x}, q * q)},
        {Word{x, dy}, w({dy, x}, q) + w({dx, y}, q * q - 1)},
        {Word{y, dx}, w({dx, y}, q)},
        {Word{y, dy}, w({dy, y}, q * q)},
        {Word{dx, dx}, Element()},
        {Word{dy, dy}, Element()},
        {Word{dy, dx}, w({dx, dy}, -q)},
    };
    return std::make_shared<Presentation>(gens, rules);
}

inline std::vector<Element> wz_d() { return {Element(), Element(), w({1}), w({0})}; }

}  // namespace testsupport
