#pragma once

#include <vector>

#include "torfol/groebner.hpp"
#include "torfol/linalg.hpp"
#include "torfol/poly.hpp"

namespace torfol::testutil {

inline void collect_monomials_up_to(std::size_t nvars, unsigned bound,
                                    std::vector<unsigned>& current, std::size_t var,
                                    unsigned used, std::vector<Monomial>& out) {
    if (var == nvars) {
        out.emplace_back(current);
        return;
    }
    for (unsigned e = 0; e + used <= bound; ++e) {
        current[var] = e;
        collect_monomials_up_to(nvars, bound, current, var + 1, used + e, out);
    }
    current[var] = 0;
}

inline std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned bound) {
    std::vector<Monomial> out;
    std::vector<unsigned> current(nvars, 0);
    collect_monomials_up_to(nvars, bound, current, 0, 0, out);
    return out;
}

/// Brute-force membership: exhaustive linear-algebra search for cofactors
/// c_i with deg(c_i) <= bound and f = sum c_i g_i.
inline bool member_oracle(const Polynomial& f, const std::vector<Polynomial>& gens,
                          unsigned bound) {
    if (f.is_zero()) return true;
    if (gens.empty()) return false;
    RingPtr ring = f.ring();
    std::vector<Monomial> cof = monomials_up_to(ring->nvars(), bound);
    // Columns: (generator, cofactor monomial). Rows: monomials of the products.
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

/// Saturation via a single Rabinowitsch-style elimination per generator,
/// an independent route from the iterated-quotient implementation.
inline Ideal saturation_oracle(const Ideal& ideal, const Ideal& j) {
    Ideal acc;
    bool first = true;
    for (const auto& f : j.generators()) {
        RingPtr ring = ideal.ring();
        RingPtr big = detail::extended_ring(ring, "@s");
        std::size_t tvar = big->nvars() - 1;
        std::vector<Polynomial> gens;
        for (const auto& g : ideal.generators()) gens.push_back(detail::lift_to(g, big));
        gens.push_back(Polynomial::constant(big, Rational(1)) -
                       Polynomial::variable(big, tvar) * detail::lift_to(f, big));
        Ideal extended(big, std::move(gens));
        std::vector<std::size_t> keep;
        for (std::size_t v = 0; v < ring->nvars(); ++v) keep.push_back(v);
        Ideal satf = eliminate(extended, keep);
        std::vector<Polynomial> restricted;
        for (const auto& g : satf.generators()) restricted.push_back(detail::restrict_to(g, ring));
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

} // namespace torfol::testutil
