#pragma once

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "torfol/fixture_maps.hpp"
#include "torfol/fixtures.hpp"
#include "torfol/foliation.hpp"
#include "torfol/ratmap.hpp"

namespace torfol::verify {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    double seconds = 0.0;
    double budget_seconds = 0.0;
    std::string detail;
};

namespace detail {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, long num_bound = 5, long den_bound = 3) {
    std::uniform_int_distribution<long> num(-num_bound, num_bound);
    std::uniform_int_distribution<long> den(1, den_bound);
    return rational(num(rng), den(rng));
}

inline Polynomial random_homogeneous(Rng& rng, const GradingData& g, const DegreeVector& deg) {
    Polynomial p(g.ring);
    for (const auto& mono : monomials_of_degree(g, deg)) p.add_term(mono, random_rational(rng));
    return p;
}

inline VectorField random_field(Rng& rng, const GradingData& g, const DegreeVector& deg) {
    std::vector<Polynomial> coeffs;
    for (std::size_t i = 0; i < g.m; ++i)
        coeffs.push_back(random_homogeneous(rng, g, g.add(deg, g.degrees[i])));
    return VectorField(g.ring, std::move(coeffs));
}

inline std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned bound) {
    std::vector<Monomial> out;
    std::vector<unsigned> current(nvars, 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t var, unsigned used) {
        if (var == nvars) {
            out.emplace_back(current);
            return;
        }
        for (unsigned e = 0; e + used <= bound; ++e) {
            current[var] = e;
            rec(var + 1, used + e);
        }
        current[var] = 0;
    };
    rec(0, 0);
    return out;
}

/// Exhaustive cofactor search: is f = sum c_i g_i with deg(c_i) <= bound?
inline bool member_oracle(const Polynomial& f, const std::vector<Polynomial>& gens,
                          unsigned bound) {
    if (f.is_zero()) return true;
    if (gens.empty()) return false;
    RingPtr ring = f.ring();
    std::vector<Monomial> cof = monomials_up_to(ring->nvars(), bound);
    std::map<Monomial, std::size_t, GrevlexLess> rows;
    std::vector<Polynomial> columns;
    for (const auto& g : gens)
        for (const auto& m : cof) {
            Polynomial prod = g * Polynomial::term(ring, m, Rational(1));
            for (const auto& [mm, c] : prod.terms()) rows.try_emplace(mm, rows.size());
            columns.push_back(std::move(prod));
        }
    for (const auto& [mm, c] : f.terms()) rows.try_emplace(mm, rows.size());
    QMat a = qmat(rows.size(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (const auto& [mm, c] : columns[j].terms()) a[rows.at(mm)][j] = c;
    QVec b(rows.size(), Rational(0));
    for (const auto& [mm, c] : f.terms()) b[rows.at(mm)] = c;
    return solve(std::move(a), std::move(b)).has_value();
}

/// One-elimination saturation, the independent route against the
/// iterated-quotient implementation.
inline Ideal saturation_oracle(const Ideal& ideal, const Ideal& j) {
    Ideal acc;
    bool first = true;
    for (const auto& f : j.generators()) {
        RingPtr ring = ideal.ring();
        RingPtr big = torfol::detail::extended_ring(ring, "@s");
        std::size_t tvar = big->nvars() - 1;
        std::vector<Polynomial> gens;
        for (const auto& g : ideal.generators()) gens.push_back(torfol::detail::lift_to(g, big));
        gens.push_back(Polynomial::constant(big, Rational(1)) -
                       Polynomial::variable(big, tvar) * torfol::detail::lift_to(f, big));
        Ideal extended(big, std::move(gens));
        std::vector<std::size_t> keep;
        for (std::size_t v = 0; v < ring->nvars(); ++v) keep.push_back(v);
        Ideal satf = eliminate(extended, keep);
        std::vector<Polynomial> restricted;
        for (const auto& g : satf.generators())
            restricted.push_back(torfol::detail::restrict_to(g, ring));
        Ideal satr(ring, std::move(restricted));
        if (first) {
            acc = satr;
            first = false;
        } else {
            acc = intersect(acc, satr);
        }
    }
    return acc;
}

struct Check {
    bool ok = true;
    std::string detail;
    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

inline std::vector<std::size_t> prime_vars(std::pair<int, int> p) {
    return {static_cast<std::size_t>(p.first - 1), static_cast<std::size_t>(p.second - 1)};
}

} // namespace detail

inline CriterionResult criterion_1() {
    detail::Check c;
    Fan h2 = fixtures::hirzebruch2();
    GradingData g = class_group(h2);
    KForm a = fixtures::alpha_10(g.ring);
    GammaSets gs = gamma_sets(a, h2);
    c.expect(gs.gamma == std::vector<std::pair<int, int>>{{1, 3}, {2, 4}},
             "Gamma_alpha != {(1,3),(2,4)}");
    Ideal j = singular_ideal(a);
    c.expect(contained_in_monomial_prime(j, detail::prime_vars({1, 3})), "J not in I13");
    c.expect(contained_in_monomial_prime(j, detail::prime_vars({2, 4})), "J not in I24");
    Ideal sat = kupka_set_presentation(a);
    c.expect(contained_in_monomial_prime(sat, detail::prime_vars({2, 4})),
             "saturation not contained in I24");
    c.expect(!contained_in_monomial_prime(sat, detail::prime_vars({1, 3})),
             "saturation unexpectedly contained in I13");
    return {1, "Hirzebruch alpha(1,0): Gamma sets and Kupka-set containments", c.ok, 0, 60,
            c.detail};
}

inline CriterionResult criterion_2() {
    detail::Check c;
    Fan h2 = fixtures::hirzebruch2();
    GradingData g = class_group(h2);
    KForm a = fixtures::alpha_21(g.ring);
    GammaSets gs = gamma_sets(a, h2);
    c.expect(gs.gamma == std::vector<std::pair<int, int>>{{1, 3}, {2, 4}},
             "Gamma_alpha != {(1,3),(2,4)}");
    Ideal sat = kupka_set_presentation(a);
    c.expect(contained_in_monomial_prime(sat, detail::prime_vars({1, 3})),
             "saturation not contained in I13");
    c.expect(!contained_in_monomial_prime(sat, detail::prime_vars({2, 4})),
             "saturation unexpectedly contained in I24");
    return {2, "Hirzebruch alpha(2,1): Gamma sets and Kupka-set containments", c.ok, 0, 120,
            c.detail};
}

inline CriterionResult criterion_3() {
    detail::Check c;
    GradingData g = class_group(fixtures::fake_weighted_135());
    c.expect(g.torsion_orders == std::vector<long>{2, 3}, "class group is not Z x Z2 x Z3");
    auto deg_is = [&](std::size_t i, long f, long t0, long t1) {
        return g.degrees[i].free[0] == f && g.degrees[i].torsion == std::vector<long>{t0, t1};
    };
    c.expect(deg_is(0, 1, 1, 0), "phi(D0) != (1,1,0)");
    c.expect(deg_is(1, 3, 0, 1), "phi(D1) != (3,0,1)");
    c.expect(deg_is(2, 5, 0, 0), "phi(D2) != (5,0,0)");
    DegreeVector mk = g.anticanonical();
    c.expect(mk == DegreeVector{{Integer(9)}, {1, 1}}, "-K != (9,1,1)");
    DegreeVector field = g.sub(DegreeVector{{Integer(16)}, {0, 0}}, mk);
    c.expect(field == DegreeVector{{Integer(7)}, {1, 2}}, "field degree != (7,1,2)");
    // the bundled degree table lists deg(B_i) as field degree minus deg(z_i)
    c.expect(g.sub(field, g.degrees[0]) == DegreeVector{{Integer(6)}, {0, 2}},
             "deg B0 != (6,0,2)");
    c.expect(g.sub(field, g.degrees[1]) == DegreeVector{{Integer(4)}, {1, 1}},
             "deg B1 != (4,1,1)");
    c.expect(g.sub(field, g.degrees[2]) == DegreeVector{{Integer(2)}, {1, 2}},
             "deg B2 != (2,1,2)");
    return {3, "fake weighted plane: class group, degree map and degree table", c.ok, 0, 0,
            c.detail};
}

inline CriterionResult criterion_4() {
    detail::Check c;
    detail::Rng rng(1040);
    GradingData g = class_group(fixtures::weighted_135());
    VectorField radial = radial_fields(g)[0];
    KForm omega = volume_form(g);
    std::array<long, 3> weights{1, 3, 5};
    int forms_checked = 0;
    for (int it = 0; forms_checked < 50 && it < 200; ++it) {
        VectorField y = detail::random_field(rng, g, DegreeVector{{Integer(it % 3)}, {}});
        KForm alpha = contract(omega, y);
        if (alpha.is_zero()) continue;
        ++forms_checked;
        Integer dtot = form_degree(alpha, g).free[0];
        // Cartan: i_R d alpha + d i_R alpha = deg(alpha) alpha
        KForm cartan = contract(d(alpha), radial) + d(contract(alpha, radial));
        c.expect(cartan == alpha * Rational(dtot), "Cartan identity failed");
        // Euler relation on every coefficient
        for (unsigned jv = 0; jv < 3; ++jv) {
            Polynomial aj = alpha.coefficient({jv});
            Polynomial lhs(g.ring);
            for (std::size_t i = 0; i < 3; ++i)
                lhs += Rational(weights[i]) * Polynomial::variable(g.ring, i) * aj.partial(i);
            c.expect(lhs == aj * Rational(dtot - weights[jv]), "Euler relation failed");
        }
        if (!c.ok) break;
    }
    c.expect(forms_checked == 50, "did not generate 50 descent forms");
    // divergence identity, sign-corrected constant -(ell + a0 + a1 + a2)
    int fields_checked = 0;
    for (int it = 0; fields_checked < 50 && it < 200; ++it) {
        VectorField y = detail::random_field(rng, g, DegreeVector{{Integer(it % 4)}, {}});
        if (y.is_zero()) continue;
        ++fields_checked;
        c.expect(dform_divergence_identity(y, g).holds, "divergence identity failed");
        if (!c.ok) break;
    }
    c.expect(fields_checked == 50, "did not generate 50 fields");
    return {4, "Cartan/Euler suite and divergence identity on P2(1,3,5)", c.ok, 0, 30, c.detail};
}

inline CriterionResult criterion_5() {
    detail::Check c;
    for (const Fan& fan : {fixtures::projective_plane(), fixtures::weighted_135(),
                           fixtures::hirzebruch2(), fixtures::pentagon_surface()}) {
        GradingData g = class_group(fan);
        KForm omega = volume_form(g);
        c.expect(!omega.is_zero(), "volume form vanished");
        for (const auto& r : radial_fields(g))
            c.expect(contract(omega, r).is_zero(), "radial contraction nonzero");
        c.expect(pluecker_relations_hold(volume_coefficients(omega, g), g.m, g.q),
                 "Pluecker relations failed");
    }
    return {5, "volume-form suite on the bundled fans", c.ok, 0, 0, c.detail};
}

inline CriterionResult criterion_6() {
    detail::Check c;
    RationalMapLifting f = fixtures::quadratic_p3_to_p2();
    c.expect(validate(f).ok(), "lifting failed validation");
    KForm a = fixtures::linear_log_form(f.grading.ring);
    PullbackIdeals pb = pullback_ideals(f, a);
    c.expect(pb.k_equals_jtilde, "K(omega) != <A_i(F)>");
    c.expect(pb.chain_ok, "J(omega) not contained in K(omega) via J-tilde");
    c.expect(contained_in(pb.j_omega, pb.k_omega), "J(omega) not contained in K(omega)");
    for (std::size_t k = 0; k < pb.unfolding_members.size(); ++k)
        c.expect(pb.unfolding_members[k],
                 "witness rejected for A_" + std::to_string(k + 1) + "(F)");
    // the linear membership solver must accept each A_k(F) on its own
    for (const auto& gen : pb.j_tilde.generators()) {
        auto mem = unfoldings_ideal_membership(gen, pb.omega, f.source_grading);
        c.expect(mem.member, "membership solver rejected an A_k(F)");
        if (mem.member)
            c.expect(check_unfolding_witness(gen, pb.omega, *mem.witness),
                     "solver witness fails the equation");
    }
    return {6, "pullback ideal identities for the pinned quadratic map", c.ok, 0, 120, c.detail};
}

inline CriterionResult criterion_7() {
    detail::Check c;
    detail::Rng rng(1070);
    int done = 0;
    for (int it = 0; done < 25 && it < 200; ++it) {
        bool use_h2 = it % 2 == 1;
        RationalMapLifting f =
            use_h2 ? fixtures::cubic_p3_to_h2() : fixtures::quadratic_p3_to_p2();
        GradingData g = f.grading;
        DegreeVector ell =
            use_h2 ? DegreeVector{{Integer(0), Integer(1)}, {}} : DegreeVector{{Integer(0)}, {}};
        VectorField y = detail::random_field(rng, g, ell);
        KForm alpha = contract(volume_form(g), y);
        if (alpha.is_zero()) continue;
        VectorField yp = detail::random_field(rng, g, ell);
        KForm eta = contract(volume_form(g), yp);
        std::vector<Polynomial> gpert;
        for (std::size_t i = 0; i < f.components.size(); ++i)
            gpert.push_back(detail::random_homogeneous(
                rng, f.source_grading, DegreeVector{{Integer(f.degrees[i])}, {}}));
        DeformationSplit s = deformation_split(f, gpert, alpha, eta);
        c.expect(s.split_ok, "tau != tau1 + tau2");
        c.expect(s.fiber_condition, "F*(Omega) ^ tau1 != 0");
        ++done;
        if (!c.ok) break;
    }
    c.expect(done == 25, "did not generate 25 instances");
    return {7, "deformation split on P2 and Hirzebruch targets", c.ok, 0, 0, c.detail};
}

inline CriterionResult criterion_8() {
    detail::Check c;
    detail::Rng rng(1080);
    GradingData g = class_group(fixtures::projective_space(2));
    VectorField y = detail::random_field(rng, g, DegreeVector{{Integer(1)}, {}});
    KForm omega = contract(volume_form(g), y);
    long ell = static_cast<long>(form_degree(omega, g).free[0].get_si());
    UnfoldingSpace u = unfoldings_space(omega, ell, g);
    c.expect(!u.basis.empty(), "empty unfolding space");
    for (const auto& pair : u.basis) {
        c.expect(graded_unfolding_equation(omega, ell, pair), "basis pair fails the equation");
        c.expect(is_deformation(omega, pair.eta), "pi_2 of a basis pair is not a deformation");
    }
    int done = 0;
    for (int it = 0; done < 100 && it < 400 && c.ok; ++it) {
        const UnfoldingPair& base = u.basis[it % u.basis.size()];
        Polynomial f =
            detail::random_homogeneous(rng, g, DegreeVector{{Integer(1 + it % 2)}, {}});
        Polynomial f2 = detail::random_homogeneous(rng, g, DegreeVector{{Integer(1)}, {}});
        if (f.is_zero() || f2.is_zero()) continue;
        UnfoldingPair acted = module_action(f, base);
        c.expect(graded_unfolding_equation(omega, ell, acted), "closure failed");
        UnfoldingPair lhs = module_action(f * f2, base);
        UnfoldingPair rhs = module_action(f, module_action(f2, base));
        c.expect(lhs.h == rhs.h && lhs.eta == rhs.eta, "associativity failed");
        ++done;
    }
    c.expect(done == 100, "did not run 100 pairs");
    return {8, "graded unfolding module: closure, associativity, deformations", c.ok, 0, 0,
            c.detail};
}

inline CriterionResult criterion_9() {
    detail::Check c;
    c.expect(admissible(0, {1, 3, 5}), "ell = 0 should be admissible for (1,3,5)");
    c.expect(!admissible(1, {1, 3, 5}), "ell = 1 should be rejected for (1,3,5)");
    c.expect(log_component_dimension(3, {1, 1, 1, 1}) == 14, "dimension formula != 14");
    return {9, "admissibility and the logarithmic dimension formula", c.ok, 0, 0, c.detail};
}

inline CriterionResult criterion_10() {
    detail::Check c;
    detail::Rng rng(1100);
    RingPtr r = Ring::make(3, "z", 1);
    // random polynomials of bounded total degree (instances use <= 3
    // variables and degree <= 4 as stated)
    auto random_poly = [&](std::size_t max_terms, unsigned total_deg) {
        std::vector<Monomial> pool = detail::monomials_up_to(3, total_deg);
        std::uniform_int_distribution<std::size_t> nt(0, max_terms);
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        Polynomial p(r);
        std::size_t k = nt(rng);
        for (std::size_t i = 0; i < k; ++i)
            p.add_term(pool[pick(rng)], detail::random_rational(rng));
        return p;
    };
    int done = 0;
    while (done < 200 && c.ok) {
        std::vector<Polynomial> gens;
        std::uniform_int_distribution<int> ngen(1, 2);
        int k = ngen(rng);
        for (int t = 0; t < k; ++t) {
            Polynomial p = random_poly(2, 3);
            if (!p.is_zero()) gens.push_back(p);
        }
        if (gens.empty()) continue;
        Ideal ideal(r, gens);
        // constructed positive with cofactors within the bound
        Polynomial pos(r);
        for (const auto& gg : gens) pos += random_poly(2, 2) * gg;
        c.expect(member(pos, ideal) && detail::member_oracle(pos, gens, 2),
                 "constructed member disagreement");
        ++done;
        if (done >= 200) break;
        // random probe of degree <= 4
        Polynomial probe = random_poly(3, 4);
        bool m = member(probe, ideal);
        bool o = detail::member_oracle(probe, gens, 6);
        c.expect(m == o, "probe disagreement between member and oracle");
        ++done;
    }
    c.expect(done >= 200, "did not run 200 instances");
    // saturation agrees with the one-elimination oracle on small instances
    for (int it = 0; it < 6 && c.ok; ++it) {
        Polynomial a = random_poly(2, 3), b = random_poly(2, 2);
        if (a.is_zero() || b.is_zero()) continue;
        Ideal ideal(r, {a});
        Ideal j(r, {b});
        c.expect(ideal_equal(saturate(ideal, j), detail::saturation_oracle(ideal, j)),
                 "saturation oracle disagreement");
    }
    return {10, "Groebner membership vs cofactor oracle; saturation fixed point", c.ok, 0, 0,
            c.detail};
}

inline CriterionResult criterion_11() {
    detail::Check c;
    Fan p2 = fixtures::projective_plane();
    RingPtr src = Ring::make({"z0", "z1", "z2"});
    auto z = [&](int i) { return Polynomial::variable(src, i); };
    std::vector<Polynomial> f = {z(0) * z(0), z(0) * z(1), z(0) * z(2)};
    auto resolved = completeness_step(f, z(0), p2);
    c.expect(resolved == std::vector<Polynomial>{z(0), z(1), z(2)},
             "quadric lifting did not resolve to the identity");
    Fan p112 = fixtures::weighted_112();
    std::vector<Polynomial> bad = {z(0) * z(0), z(0) * z(1), z(0) * z(2).pow(3)};
    bool obstructed = false;
    try {
        completeness_step(bad, z(0), p112);
    } catch (const ObstructionError&) {
        obstructed = true;
    }
    c.expect(obstructed, "P(1,1,2) counterexample did not obstruct");
    return {11, "polynomial-lifting completion and its obstruction", c.ok, 0, 0, c.detail};
}

inline std::vector<CriterionResult> run_all(
    const std::function<void(const CriterionResult&)>& on_done = {}) {
    std::vector<std::function<CriterionResult()>> criteria = {
        criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
        criterion_7, criterion_8, criterion_9, criterion_10, criterion_11};
    std::vector<CriterionResult> results;
    for (auto& run : criteria) {
        auto start = std::chrono::steady_clock::now();
        CriterionResult res;
        try {
            res = run();
        } catch (const std::exception& e) {
            res.passed = false;
            res.detail = std::string("exception: ") + e.what();
        }
        res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (res.budget_seconds > 0 && res.seconds > res.budget_seconds) {
            res.passed = false;
            res.detail += (res.detail.empty() ? "" : "; ") + std::string("over time budget");
        }
        if (on_done) on_done(res);
        results.push_back(std::move(res));
    }
    return results;
}

inline std::string format_line(const CriterionResult& r) {
    std::ostringstream os;
    os << "criterion " << r.id << ": " << (r.passed ? "PASS" : "FAIL") << "  [" << std::fixed;
    os.precision(2);
    os << r.seconds << "s]  " << r.name;
    if (!r.detail.empty()) os << "  (" << r.detail << ")";
    return os.str();
}

} // namespace torfol::verify
