#pragma once

#include "helpers.hpp"
#include "torfol/toric.hpp"

namespace torfol::testutil {

inline Polynomial random_homogeneous(Rng& rng, const GradingData& g, const DegreeVector& deg) {
    Polynomial p(g.ring);
    for (const auto& mono : monomials_of_degree(g, deg)) p.add_term(mono, random_rational(rng));
    return p;
}

/// Random homogeneous vector field of the given (free-part) degree.
inline VectorField random_field(Rng& rng, const GradingData& g, const DegreeVector& deg) {
    std::vector<Polynomial> coeffs;
    for (std::size_t i = 0; i < g.m; ++i)
        coeffs.push_back(random_homogeneous(rng, g, g.add(deg, g.degrees[i])));
    return VectorField(g.ring, std::move(coeffs));
}

} // namespace torfol::testutil
