#pragma once

#include <random>
#include <vector>

#include "torfol/poly.hpp"

namespace torfol::testutil {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, long num_bound = 5, long den_bound = 3) {
    std::uniform_int_distribution<long> num(-num_bound, num_bound);
    std::uniform_int_distribution<long> den(1, den_bound);
    return rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(Rng& rng, long num_bound = 5, long den_bound = 3) {
    for (;;) {
        Rational r = random_rational(rng, num_bound, den_bound);
        if (!is_zero(r)) return r;
    }
}

inline Monomial random_monomial(Rng& rng, std::size_t nvars, unsigned max_exp = 3) {
    std::uniform_int_distribution<unsigned> e(0, max_exp);
    std::vector<unsigned> exps(nvars);
    for (auto& x : exps) x = e(rng);
    return Monomial(std::move(exps));
}

inline Polynomial random_poly(Rng& rng, const RingPtr& ring, std::size_t max_terms = 4,
                              unsigned max_exp = 3) {
    std::uniform_int_distribution<std::size_t> nt(0, max_terms);
    Polynomial p(ring);
    std::size_t k = nt(rng);
    for (std::size_t i = 0; i < k; ++i)
        p.add_term(random_monomial(rng, ring->nvars(), max_exp), random_rational(rng));
    return p;
}

inline Polynomial random_nonzero_poly(Rng& rng, const RingPtr& ring, std::size_t max_terms = 4,
                                      unsigned max_exp = 3) {
    for (;;) {
        Polynomial p = random_poly(rng, ring, max_terms, max_exp);
        if (!p.is_zero()) return p;
    }
}

} // namespace torfol::testutil
