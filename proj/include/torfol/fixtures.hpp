#pragma once

#include "torfol/io.hpp"
#include "torfol/toric.hpp"

namespace torfol::fixtures {

inline Fan projective_plane() {
    Fan f;
    f.rays = {{1, 0}, {0, 1}, {-1, -1}};
    f.names = {"z1", "z2", "z3"};
    return normalize_fan(std::move(f));
}

inline Fan projective_line() {
    Fan f;
    f.rays = {{1}, {-1}};
    f.names = {"z1", "z2"};
    return normalize_fan(std::move(f));
}

/// P^2(1, a1, a2) with a1, a2 coprime; variables z0, z1, z2.
inline Fan weighted_plane(long a1, long a2) {
    Fan f;
    f.rays = {{-a1, -a2}, {1, 0}, {0, 1}};
    f.names = {"z0", "z1", "z2"};
    return normalize_fan(std::move(f));
}

inline Fan weighted_135() { return weighted_plane(3, 5); }
inline Fan weighted_112() { return weighted_plane(1, 2); }

/// Hirzebruch surface H_2; variables x1..x4, rays counter-clockwise.
inline Fan hirzebruch2() {
    Fan f;
    f.rays = {{1, 0}, {0, 1}, {-1, 2}, {0, -1}};
    f.names = {"x1", "x2", "x3", "x4"};
    return normalize_fan(std::move(f));
}

/// Smooth complete surface with five rays (P^2 blown up in two points).
inline Fan pentagon_surface() {
    Fan f;
    f.rays = {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {0, -1}};
    f.names = {"z1", "z2", "z3", "z4", "z5"};
    return normalize_fan(std::move(f));
}

/// Stacky presentation of the fake weighted projective plane
/// P^2(1,3,5)/(S_2 x S_3): non-primitive rays, class group Z x Z_2 x Z_3.
inline Fan fake_weighted_135() {
    Fan f;
    f.rays = {{14, 10}, {-3, 0}, {-1, -2}};
    f.names = {"z0", "z1", "z2"};
    return normalize_fan(std::move(f));
}

/// Projective n-space as a fan; variables x0..xn.
inline Fan projective_space(std::size_t n) {
    Fan f;
    for (std::size_t i = 0; i < n; ++i) {
        IVec ray(n, Integer(0));
        ray[i] = 1;
        f.rays.push_back(std::move(ray));
    }
    f.rays.push_back(IVec(n, Integer(-1)));
    for (std::size_t i = 0; i <= n; ++i) f.names.push_back("x" + std::to_string(i));
    if (n > 2 || n == 1) {
        // maximal cones: all n-subsets of the n+1 rays
        std::vector<int> idx;
        std::function<void(int)> rec = [&](int start) {
            if (idx.size() == n) {
                f.max_cones.push_back(idx);
                return;
            }
            for (int v = start; v <= static_cast<int>(n); ++v) {
                idx.push_back(v);
                rec(v + 1);
                idx.pop_back();
            }
        };
        rec(0);
    }
    return normalize_fan(std::move(f));
}

/// alpha = z1 dz2 - z2 dz1, the linear logarithmic foliation on the plane.
inline KForm linear_log_form(const RingPtr& ring) {
    KForm a(ring, 1);
    a.add_term({1}, Polynomial::variable(ring, 0));
    a.add_term({0}, -Polynomial::variable(ring, 1));
    return a;
}

/// Bundled example 1-form of bidegree (1,0) on the Hirzebruch surface.
inline KForm alpha_10(const RingPtr& ring) {
    KForm f(ring, 1);
    f.add_term({0}, parse_polynomial("-(1/2)x1^3 x2^2 x3 - (3/2)x1^2 x2^2 x3^2 "
                                     "- (1/6)x1 x2^2 x3^3 - x2^2 x3^4 + x1^2 x2 x4 "
                                     "+ (5/3)x1 x2 x3 x4 - (19/10)x2 x3^2 x4",
                                     ring));
    f.add_term({1}, parse_polynomial("(1/2)x1^3 x4 - (1/2)x1^2 x3 x4 - (7/30)x1 x3^2 x4 "
                                     "- (7/4)x3^3 x4",
                                     ring));
    f.add_term({2}, parse_polynomial("(1/2)x1^4 x2^2 + (3/2)x1^3 x2^2 x3 + (1/6)x1^2 x2^2 x3^2 "
                                     "+ x1 x2^2 x3^3 + -(8/3)x1^2 x2 x4 + (43/30)x1 x2 x3 x4 "
                                     "- (7/2)x2 x3^2 x4",
                                     ring));
    f.add_term({3}, parse_polynomial("-(1/2)x1^3 x2 + (1/2)x1^2 x2 x3 + (7/30)x1 x2 x3^2 "
                                     "+ (7/4)x2 x3^3",
                                     ring));
    return f;
}

/// Bundled example 1-form of bidegree (2,1) on the Hirzebruch surface.
inline KForm alpha_21(const RingPtr& ring) {
    KForm f(ring, 1);
    f.add_term({0}, parse_polynomial("-(2/5)x1^4 x2^3 x3 - (4/5)x1^3 x2^3 x3^2 "
                                     "- (1/2)x1^2 x2^3 x3^3 - (1/4)x1 x2^3 x3^4 - (5/7)x2^3 x3^5 "
                                     "+ (8/3)x1^3 x2^2 x4 + (86/45)x1^2 x2^2 x3 x4 "
                                     "+ (5/4)x1 x2^2 x3^2 x4 + (15/14)x2^2 x3^3 x4 "
                                     "+ (2/3)x1 x2 x4^2 + (25/6)x2 x3 x4^2",
                                     ring));
    f.add_term({1}, parse_polynomial("(4/3)x1^4 x2 x4 - (9/10)x1^3 x2 x3 x4 "
                                     "- (71/8)x1^2 x2 x3^2 x4 - (35/4)x1 x2 x3^3 x4 "
                                     "- (1/7)x2 x3^4 x4 + (1/3)x1^2 x4^2 + (13/10)x1 x3 x4^2 "
                                     "- (7/6)x3^2 x4^2",
                                     ring));
    f.add_term({2}, parse_polynomial("(2/5)x1^5 x2^3 + (4/5)x1^4 x2^3 x3 + (1/2)x1^3 x2^3 x3^2 "
                                     "+ (1/4)x1^2 x2^3 x3^3 + (5/7)x1 x2^3 x3^4 "
                                     "- (167/45)x1^3 x2^2 x4 - 19 x1^2 x2^2 x3 x4 "
                                     "+ -(130/7)x1 x2^2 x3^2 x4 - (2/7)x2^2 x3^3 x4 "
                                     "- (47/30)x1 x2 x4^2 - (7/3)x2 x3 x4^2",
                                     ring));
    f.add_term({3}, parse_polynomial("-(4/3)x1^4 x2^2 + (9/10)x1^3 x2^2 x3 "
                                     "+ (71/8)x1^2 x2^2 x3^2 + (35/4)x1 x2^2 x3^3 + (1/7)x2^2 x3^4 "
                                     "- (1/3)x1^2 x2 x4 - (13/10)x1 x2 x3 x4 + (7/6)x2 x3^2 x4",
                                     ring));
    return f;
}

} // namespace torfol::fixtures
