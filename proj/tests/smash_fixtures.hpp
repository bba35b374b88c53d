#pragma once

#include "hopf_support.hpp"

#include "smashcalc/smash.hpp"

namespace testsupport::smash_fixtures {

using namespace smashcalc;

struct Fixture {
    std::shared_ptr<const FdHopf> h;
    std::shared_ptr<const UniversalDga> forms_a;
    std::shared_ptr<const SmashProduct> s;
};

inline Fixture make(std::shared_ptr<const FdHopf> h, const GeneratorAction::Table& table, bool trivial = false)
{
    auto D = testsupport::dual_numbers();
    auto uD = std::make_shared<UniversalDga>(D, 2);
    std::shared_ptr<const HAction> base;
    if (trivial)
        base = std::make_shared<TrivialAction>(h, uD);
    else
        base = diagonal_action(std::make_shared<GeneratorAction>("on D", h, D, table), uD);
    auto hf = std::make_shared<HopfForms>(h, std::make_shared<UniversalDga>(testsupport::algebra_of(h), 2));
    return {h, uD, std::make_shared<SmashProduct>(base, hf, 2)};
}

inline Fixture kc2_fixture(bool trivial = false)
{
    return make(testsupport::kc2_table(), {{{Word{1}, 0}, w({0}, -1)}}, trivial);
}

inline Fixture h4_fixture(bool trivial = false)
{
    return make(testsupport::h4_table(),
                {{{Word{1}, 0}, w({0}, -1)}, {{Word{2}, 0}, Element::single(Word{})}, {{Word{3}, 0}, Element::single(Word{})}},
                trivial);
}

}  // namespace testsupport::smash_fixtures
