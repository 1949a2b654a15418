#pragma once

#include "torfol/fixtures.hpp"
#include "torfol/ratmap.hpp"

namespace torfol::fixtures {

/// Identity lifting P^2 --> P^2 (coordinates, degrees (1,1,1)).
inline RationalMapLifting identity_p2() {
    Fan p2 = projective_plane();
    RingPtr src = Ring::make({"z1", "z2", "z3"});
    std::vector<Polynomial> comps = {Polynomial::variable(src, 0), Polynomial::variable(src, 1),
                                     Polynomial::variable(src, 2)};
    return RationalMapLifting::make(std::move(comps), {1, 1, 1}, std::move(p2), true, true);
}

/// Pinned quadratic lifting P^3 --> P^2 used by the pullback-ideal checks.
inline RationalMapLifting quadratic_p3_to_p2() {
    Fan p2 = projective_plane();
    RingPtr src = Ring::make(4, "x", 0);
    auto x = [&](int i) { return Polynomial::variable(src, i); };
    std::vector<Polynomial> comps = {
        x(0) * x(0) + x(1) * x(2) - x(3) * x(3),
        x(1) * x(1) + x(0) * x(3) + Rational(2) * x(2) * x(2),
        x(2) * x(2) + x(0) * x(1) + Rational(3) * x(3) * x(3) + x(1) * x(3),
    };
    return RationalMapLifting::make(std::move(comps), {2, 2, 2}, std::move(p2), true, true);
}

/// Pinned lifting P^3 --> H_2 of degree (1,1,1,3).
inline RationalMapLifting cubic_p3_to_h2() {
    Fan h2 = hirzebruch2();
    RingPtr src = Ring::make(4, "x", 0);
    auto x = [&](int i) { return Polynomial::variable(src, i); };
    std::vector<Polynomial> comps = {
        x(0) + x(2),
        x(1) - x(3),
        x(2) + Rational(2) * x(3),
        x(0) * x(1) * x(2) + x(3).pow(3) + x(1).pow(3) - x(0) * x(2) * x(3) +
            Rational(2) * x(2).pow(3),
    };
    return RationalMapLifting::make(std::move(comps), {1, 1, 1, 3}, std::move(h2), true, true);
}

} // namespace torfol::fixtures
