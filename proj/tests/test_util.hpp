#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "augvar/laurent.hpp"
#include "augvar/polytope.hpp"

namespace augvar::testing {

inline LaurentPoly poly(std::vector<std::string> vars, const std::vector<std::pair<Exponent, Rational>>& terms)
{
    LaurentPoly f(std::move(vars));
    for (const auto& [e, c] : terms)
        f.add_term(e, Scalar(c));
    return f;
}

inline Rational q(long p, long d = 1)
{
    return make_rational(p, d);
}

/// Random Laurent polynomial with small integer coefficients and exponents in [lo, hi].
inline LaurentPoly random_poly(std::mt19937_64& rng, std::size_t nvars, int terms, long lo, long hi)
{
    std::vector<std::string> vars;
    for (std::size_t i = 1; i <= nvars; ++i)
        vars.push_back("y" + std::to_string(i));
    std::uniform_int_distribution<long> ex(lo, hi), co(-3, 3);
    LaurentPoly f(vars);
    while (f.is_zero()) {
        for (int t = 0; t < terms; ++t) {
            Exponent e(nvars);
            for (auto& x : e)
                x = ex(rng);
            long c = co(rng);
            if (c == 0)
                c = 1;
            f.add_term(e, Scalar(q(c)));
        }
    }
    return f;
}

inline std::vector<IntVector> random_points(std::mt19937_64& rng, std::size_t n, int count, long lo, long hi)
{
    std::uniform_int_distribution<long> ex(lo, hi);
    std::vector<IntVector> pts(static_cast<std::size_t>(count), IntVector(n));
    for (auto& p : pts)
        for (auto& x : p)
            x = ex(rng);
    return pts;
}

}  // namespace augvar::testing
