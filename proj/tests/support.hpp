#pragma once

#include <random>

#include "smashcalc/scalar.hpp"

namespace testsupport {

inline smashcalc::Poly poly(std::initializer_list<long> coeffs)
{
    std::vector<mpz_class> c;
    for (long x : coeffs)
        c.emplace_back(x);
    return smashcalc::Poly(c);
}

inline smashcalc::Scalar random_scalar(std::mt19937& rng, bool allow_zero = true)
{
    std::uniform_int_distribution<int> deg(0, 2);
    std::uniform_int_distribution<long> coef(-3, 3);
    while (true) {
        std::vector<mpz_class> n, d;
        for (int i = 0, k = deg(rng); i <= k; ++i)
            n.emplace_back(coef(rng));
        for (int i = 0, k = deg(rng); i <= k; ++i)
            d.emplace_back(coef(rng));
        smashcalc::Poly dp(d);
        if (dp.is_zero())
            continue;
        smashcalc::Scalar s(smashcalc::Poly(n), dp);
        if (!allow_zero && s.is_zero())
            continue;
        return s;
    }
}

}  // namespace testsupport
