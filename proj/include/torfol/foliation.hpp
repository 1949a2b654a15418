#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "torfol/forms.hpp"
#include "torfol/groebner.hpp"
#include "torfol/linalg.hpp"
#include "torfol/toric.hpp"

namespace torfol {

namespace detail {

/// Flattens forms into exact coordinate vectors over a shared row index.
class FormVectorizer {
public:
    void note(const KForm& f) {
        for (const auto& [idx, c] : f.coefficients())
            for (const auto& [m, v] : c.terms())
                rows_.try_emplace(std::make_pair(idx, m.exponents()), rows_.size());
    }
    // at least one row, so zero maps still present every column
    std::size_t size() const { return std::max<std::size_t>(rows_.size(), 1); }
    QVec vec(const KForm& f) const {
        QVec v(size(), Rational(0));
        for (const auto& [idx, c] : f.coefficients())
            for (const auto& [m, coeff] : c.terms())
                v[rows_.at(std::make_pair(idx, m.exponents()))] = coeff;
        return v;
    }
    /// Rows x columns matrix whose columns are the given forms.
    QMat matrix(const std::vector<KForm>& columns) const {
        QMat a = qmat(size(), columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j) {
            QVec col = vec(columns[j]);
            for (std::size_t i = 0; i < col.size(); ++i) a[i][j] = col[i];
        }
        return a;
    }

private:
    std::map<std::pair<IndexSet, std::vector<unsigned>>, std::size_t> rows_;
};

} // namespace detail

struct FoliationChecks {
    bool homogeneous = false;
    bool descent = false;
    bool locally_decomposable = false;
    bool integrable = false;
    int singular_codim = 0;
    bool codim_ok = false;
    bool all_passed() const {
        return homogeneous && descent && locally_decomposable && integrable && codim_ok;
    }
};

struct FoliationForm {
    KForm form;
    DegreeVector degree;
    FoliationChecks checks;
};

/// Validates the foliation conditions: homogeneity (throws when violated),
/// descent against every radial field, local decomposability and
/// integrability over all coordinate frames, and codim(Sing) >= 2.
inline FoliationForm check_foliation(const KForm& a, const GradingData& g) {
    if (a.is_zero()) throw ArgumentError("check_foliation: zero form");
    FoliationForm out;
    out.form = a;
    out.degree = form_degree(a, g); // throws HomogeneityError when violated
    out.checks.homogeneous = true;

    out.checks.descent = true;
    for (const auto& r : radial_fields(g))
        if (!contract(a, r).is_zero()) out.checks.descent = false;

    unsigned k = a.k();
    KForm da = d(a);
    if (k == 1) {
        out.checks.locally_decomposable = true;
        out.checks.integrable = wedge(a, da).is_zero();
    } else {
        out.checks.locally_decomposable = true;
        out.checks.integrable = true;
        // all coordinate (k-1)-frames
        std::vector<unsigned> frame;
        std::function<void(unsigned)> rec = [&](unsigned start) {
            if (frame.size() == k - 1) {
                KForm ia = a, ida = da;
                for (auto v : frame) {
                    ia = contract(ia, VectorField::coordinate(g.ring, v));
                    ida = contract(ida, VectorField::coordinate(g.ring, v));
                }
                if (!wedge(ia, a).is_zero()) out.checks.locally_decomposable = false;
                if (!wedge(ia, da).is_zero()) out.checks.integrable = false;
                return;
            }
            for (unsigned v = start; v < g.m; ++v) {
                frame.push_back(v);
                rec(v + 1);
                frame.pop_back();
            }
        };
        rec(0);
    }

    out.checks.singular_codim = codimension(coefficient_ideal(a));
    out.checks.codim_ok = out.checks.singular_codim >= 2;
    return out;
}

inline Ideal singular_ideal(const KForm& a) { return coefficient_ideal(a); }

struct KupkaIdeal {
    Ideal ideal;
    bool closed_form = false; // d(alpha) = 0: quotient by <0> read as <1>
};

/// K(alpha) = (J(alpha) : C(d alpha)).
inline KupkaIdeal kupka_ideal(const KForm& a) {
    Ideal j = singular_ideal(a);
    Ideal cda = coefficient_ideal(d(a));
    if (cda.is_zero_ideal()) {
        KupkaIdeal out{Ideal(a.ring(), {Polynomial::constant(a.ring(), Rational(1))}), true};
        return out;
    }
    return KupkaIdeal{quotient(j, cda), false};
}

/// Saturation presentation (J : C(d alpha)^infinity) of the Kupka set.
inline Ideal kupka_set_presentation(const KForm& a) {
    Ideal j = singular_ideal(a);
    Ideal cda = coefficient_ideal(d(a));
    if (cda.is_zero_ideal())
        return Ideal(a.ring(), {Polynomial::constant(a.ring(), Rational(1))});
    return saturate(j, cda);
}

struct GammaSets {
    std::vector<std::pair<int, int>> gamma;       // J(a) contained in I_ij
    std::vector<std::pair<int, int>> gamma_k;     // and K(a) contained in I_ij
    std::vector<std::pair<int, int>> gamma_k_set; // and (J : C^inf) contained in I_ij
};

/// Containment of J, K and the Kupka-set presentation in the irrelevant
/// primes I_ij over the non-consecutive ray pairs (1-based, empty for m = 3).
inline GammaSets gamma_sets(const KForm& a, const Fan& fan) {
    GammaSets out;
    auto pairs = nonconsecutive_pairs(fan);
    if (pairs.empty()) return out;
    Ideal j = singular_ideal(a);
    Ideal k = kupka_ideal(a).ideal;
    Ideal sat = kupka_set_presentation(a);
    for (auto [i1, j1] : pairs) {
        std::vector<std::size_t> vars = {static_cast<std::size_t>(i1 - 1),
                                         static_cast<std::size_t>(j1 - 1)};
        if (!contained_in_monomial_prime(j, vars)) continue;
        out.gamma.emplace_back(i1, j1);
        if (!contained_in_monomial_prime(k, vars)) continue;
        out.gamma_k.emplace_back(i1, j1);
        if (contained_in_monomial_prime(sat, vars)) out.gamma_k_set.emplace_back(i1, j1);
    }
    return out;
}

/// Basis of the homogeneous Kaehler 1-forms of a given degree.
inline std::vector<KForm> kahler_one_form_basis(const GradingData& g, const DegreeVector& deg) {
    std::vector<KForm> basis;
    for (std::size_t i = 0; i < g.m; ++i) {
        DegreeVector di = g.sub(deg, g.degrees[i]);
        for (const auto& mono : monomials_of_degree(g, di))
            basis.push_back(KForm::monomial_form(
                g.ring, {static_cast<unsigned>(i)}, Polynomial::term(g.ring, mono, Rational(1))));
    }
    return basis;
}

/// Basis of the twisted (descent-satisfying) 1-forms of a given degree,
/// i.e. of H^0(X, Omega-hat^1(D)).
inline std::vector<KForm> twisted_one_form_basis(const GradingData& g, const DegreeVector& deg) {
    std::vector<KForm> ambient = kahler_one_form_basis(g, deg);
    if (ambient.empty()) return {};
    auto radials = radial_fields(g);
    // rows: polynomial coefficients of all radial contractions
    detail::FormVectorizer rows;
    std::vector<std::vector<KForm>> contracted(ambient.size());
    for (std::size_t t = 0; t < ambient.size(); ++t)
        for (const auto& r : radials) {
            contracted[t].push_back(contract(ambient[t], r));
            rows.note(contracted[t].back());
        }
    QMat a = qmat(rows.size() * radials.size(), ambient.size());
    for (std::size_t t = 0; t < ambient.size(); ++t)
        for (std::size_t j = 0; j < radials.size(); ++j) {
            QVec v = rows.vec(contracted[t][j]);
            for (std::size_t i = 0; i < v.size(); ++i) a[j * rows.size() + i][t] = v[i];
        }
    std::vector<KForm> out;
    for (const auto& combo : kernel_basis(std::move(a))) {
        KForm f(g.ring, 1);
        for (std::size_t t = 0; t < ambient.size(); ++t)
            if (!is_zero(combo[t]))
                f = f + ambient[t] * combo[t];
        out.push_back(std::move(f));
    }
    return out;
}

struct UnfoldingMembership {
    bool member = false;
    std::optional<KForm> witness; // eta-tilde with h d(alpha) = alpha ^ eta-tilde
};

/// Exact check of the unfoldings-ideal equation for a given witness.
inline bool check_unfolding_witness(const Polynomial& h, const KForm& a, const KForm& eta_tilde) {
    return (wedge(KForm::from_polynomial(h), d(a)) - wedge(a, eta_tilde)).is_zero();
}

/// Membership h in I(alpha) = {h : h d(alpha) = alpha ^ eta for some Kaehler
/// 1-form eta}; homogeneity pins eta's degree, so this is an exact linear
/// solve in eta's coefficients.
inline UnfoldingMembership unfoldings_ideal_membership(const Polynomial& h, const KForm& a,
                                                       const GradingData& g) {
    if (h.is_zero()) return {true, KForm(g.ring, 1)};
    DegreeVector degh = degree_of(h, g);
    std::vector<KForm> basis = kahler_one_form_basis(g, degh);
    KForm target = wedge(KForm::from_polynomial(h), d(a));
    std::vector<KForm> columns;
    for (const auto& e : basis) columns.push_back(wedge(a, e));
    detail::FormVectorizer rows;
    rows.note(target);
    for (const auto& c : columns) rows.note(c);
    QMat mat = rows.matrix(columns);
    auto sol = solve(std::move(mat), rows.vec(target));
    if (!sol) return {false, std::nullopt};
    KForm eta(g.ring, 1);
    for (std::size_t t = 0; t < basis.size(); ++t)
        if (!is_zero((*sol)[t])) eta = eta + basis[t] * (*sol)[t];
    return {true, eta};
}

/// Graded projective unfolding pair of degree r.
struct UnfoldingPair {
    Polynomial h;
    KForm eta;
    long r = 0;
};

/// r h d(omega) = ell omega ^ (eta - dh), the graded unfolding equation.
inline bool graded_unfolding_equation(const KForm& omega, long ell, const UnfoldingPair& u) {
    KForm lhs = wedge(KForm::from_polynomial(u.h * Rational(u.r)), d(omega));
    KForm rhs = wedge(omega * Rational(ell), u.eta - d(KForm::from_polynomial(u.h)));
    return (lhs - rhs).is_zero();
}

/// Module action f . (h, eta) = (f h, (r+s)/r f eta + 1/r (r h df - s f dh))
/// on graded projective unfoldings, for f homogeneous of degree s.
inline UnfoldingPair module_action(const Polynomial& f, const UnfoldingPair& u) {
    if (u.r == 0) throw DegenerateDegreeError("module action undefined at degree 0");
    if (!is_homogeneous_std(f)) throw ArgumentError("module action needs homogeneous f");
    long s = std::max(f.total_degree(), 0);
    long r = u.r;
    KForm eta = u.eta * (f * rational(r + s, r)) + d(KForm::from_polynomial(f)) * u.h -
                d(KForm::from_polynomial(u.h)) * (f * rational(s, r));
    return UnfoldingPair{f * u.h, std::move(eta), r + s};
}

struct UnfoldingSpace {
    long r = 0;      // degree of the pairs
    long ell = 0;    // degree of omega
    std::vector<UnfoldingPair> basis; // modulo the trivial S.(0, omega)
};

namespace detail {

/// Reduces the kernel vectors modulo a trivial subspace, returning
/// representatives of a basis of the quotient.
inline std::vector<QVec> quotient_basis(const std::vector<QVec>& kernel,
                                        const std::vector<QVec>& trivial) {
    std::vector<QVec> out;
    QMat joined;
    for (const auto& t : trivial) joined.push_back(t);
    std::size_t current = rank(joined);
    for (const auto& k : kernel) {
        joined.push_back(k);
        std::size_t next = rank(joined);
        if (next > current) {
            out.push_back(k);
            current = next;
        } else {
            joined.pop_back();
        }
    }
    return out;
}

} // namespace detail

/// Graded projective unfoldings U(omega)(r) on standard projective space:
/// solves the joint linear system in (h, eta) and returns a basis modulo
/// the trivial solutions (0, g omega).
inline UnfoldingSpace unfoldings_space(const KForm& omega, long r, const GradingData& g) {
    for (const auto& d : g.degrees)
        if (d.free.size() != 1 || d.free[0] != 1 || !d.torsion.empty())
            throw ContextError("graded unfoldings need standard projective grading");
    DegreeVector degw = form_degree(omega, g);
    long ell = static_cast<long>(degw.free[0].get_si());
    UnfoldingSpace out;
    out.r = r;
    out.ell = ell;
    if (r <= 0) return out;

    DegreeVector degr{{Integer(r)}, {}};
    std::vector<Monomial> hmons = monomials_of_degree(g, degr);
    std::vector<KForm> etabasis = kahler_one_form_basis(g, degr);
    std::size_t cols = hmons.size() + etabasis.size();
    if (cols == 0) return out;

    KForm domega = d(omega);
    std::vector<KForm> columns;
    for (const auto& mu : hmons) {
        Polynomial h = Polynomial::term(g.ring, mu, Rational(1));
        columns.push_back(wedge(KForm::from_polynomial(h * Rational(r)), domega) +
                          wedge(omega * Rational(ell), d(KForm::from_polynomial(h))));
    }
    for (const auto& e : etabasis) columns.push_back(-wedge(omega * Rational(ell), e));

    detail::FormVectorizer rows;
    for (const auto& c : columns) rows.note(c);
    std::vector<QVec> kernel = kernel_basis(rows.matrix(columns));

    // trivial subspace: h = 0, eta = q omega for monomials q of degree r - ell
    std::vector<QVec> trivial;
    if (r - ell >= 0) {
        // coordinates of q*omega in the eta basis: the eta basis is the
        // monomial basis (variable, monomial), so read coefficients off.
        std::map<std::pair<unsigned, std::vector<unsigned>>, std::size_t> eta_index;
        for (std::size_t t = 0; t < etabasis.size(); ++t) {
            const auto& [idx, c] = *etabasis[t].coefficients().begin();
            eta_index[{idx[0], c.terms().begin()->first.exponents()}] = hmons.size() + t;
        }
        for (const auto& q : monomials_of_degree(g, DegreeVector{{Integer(r - ell)}, {}})) {
            QVec v(cols, Rational(0));
            Polynomial qp = Polynomial::term(g.ring, q, Rational(1));
            for (const auto& [idx, c] : omega.coefficients()) {
                Polynomial prod = c * qp;
                for (const auto& [mm, cc] : prod.terms())
                    v[eta_index.at({idx[0], mm.exponents()})] += cc;
            }
            trivial.push_back(std::move(v));
        }
    }
    for (const auto& combo : detail::quotient_basis(kernel, trivial)) {
        UnfoldingPair pair;
        pair.r = r;
        pair.h = Polynomial::zero(g.ring);
        pair.eta = KForm(g.ring, 1);
        for (std::size_t t = 0; t < hmons.size(); ++t)
            if (!is_zero(combo[t])) pair.h.add_term(hmons[t], combo[t]);
        for (std::size_t t = 0; t < etabasis.size(); ++t)
            if (!is_zero(combo[hmons.size() + t]))
                pair.eta = pair.eta + etabasis[t] * combo[hmons.size() + t];
        out.basis.push_back(std::move(pair));
    }
    return out;
}

/// Toric-surface unfoldings U(alpha) at alpha's own degree:
/// pairs (h, eta) with h d(alpha) = alpha ^ (eta - dh), eta twisted,
/// modulo the trivial pair (0, alpha).
inline std::vector<UnfoldingPair> unfoldings_space_toric(const KForm& alpha,
                                                         const GradingData& g) {
    DegreeVector dega = form_degree(alpha, g);
    std::vector<Monomial> hmons = monomials_of_degree(g, dega);
    std::vector<KForm> etabasis = twisted_one_form_basis(g, dega);
    std::size_t cols = hmons.size() + etabasis.size();
    if (cols == 0) return {};
    KForm dalpha = d(alpha);
    std::vector<KForm> columns;
    for (const auto& mu : hmons) {
        Polynomial h = Polynomial::term(g.ring, mu, Rational(1));
        columns.push_back(wedge(KForm::from_polynomial(h), dalpha) +
                          wedge(alpha, d(KForm::from_polynomial(h))));
    }
    for (const auto& e : etabasis) columns.push_back(-wedge(alpha, e));
    detail::FormVectorizer rows;
    for (const auto& c : columns) rows.note(c);
    std::vector<QVec> kernel = kernel_basis(rows.matrix(columns));

    // trivial pair (0, alpha) expressed in the eta basis by solving
    detail::FormVectorizer arows;
    arows.note(alpha);
    for (const auto& e : etabasis) arows.note(e);
    auto alpha_coords = solve(arows.matrix(etabasis), arows.vec(alpha));
    std::vector<QVec> trivial;
    if (alpha_coords) {
        QVec v(cols, Rational(0));
        for (std::size_t t = 0; t < etabasis.size(); ++t) v[hmons.size() + t] = (*alpha_coords)[t];
        trivial.push_back(std::move(v));
    }
    std::vector<UnfoldingPair> out;
    for (const auto& combo : detail::quotient_basis(kernel, trivial)) {
        UnfoldingPair pair;
        pair.r = 0;
        pair.h = Polynomial::zero(g.ring);
        pair.eta = KForm(g.ring, 1);
        for (std::size_t t = 0; t < hmons.size(); ++t)
            if (!is_zero(combo[t])) pair.h.add_term(hmons[t], combo[t]);
        for (std::size_t t = 0; t < etabasis.size(); ++t)
            if (!is_zero(combo[hmons.size() + t]))
                pair.eta = pair.eta + etabasis[t] * combo[hmons.size() + t];
        out.push_back(std::move(pair));
    }
    return out;
}

/// alpha ^ d eta + eta ^ d alpha = 0.
inline bool is_deformation(const KForm& alpha, const KForm& eta) {
    return (wedge(alpha, d(eta)) + wedge(eta, d(alpha))).is_zero();
}

/// Basis of D(alpha): twisted 1-forms of alpha's degree solving the
/// deformation equation, modulo the line spanned by alpha.
inline std::vector<KForm> deformation_space(const KForm& alpha, const GradingData& g) {
    DegreeVector dega = form_degree(alpha, g);
    std::vector<KForm> basis = twisted_one_form_basis(g, dega);
    if (basis.empty()) return {};
    KForm dalpha = d(alpha);
    std::vector<KForm> columns;
    for (const auto& e : basis) columns.push_back(wedge(alpha, d(e)) + wedge(e, dalpha));
    detail::FormVectorizer rows;
    for (const auto& c : columns) rows.note(c);
    std::vector<QVec> kernel = kernel_basis(rows.matrix(columns));

    detail::FormVectorizer arows;
    arows.note(alpha);
    for (const auto& e : basis) arows.note(e);
    auto alpha_coords = solve(arows.matrix(basis), arows.vec(alpha));
    std::vector<QVec> trivial;
    if (alpha_coords) trivial.push_back(*alpha_coords);

    std::vector<KForm> out;
    for (const auto& combo : detail::quotient_basis(kernel, trivial)) {
        KForm f(g.ring, 1);
        for (std::size_t t = 0; t < basis.size(); ++t)
            if (!is_zero(combo[t])) f = f + basis[t] * combo[t];
        out.push_back(std::move(f));
    }
    return out;
}

struct GenericityReport {
    int j_codim = 0;
    bool j_codim_ge_2 = false;      // condition II, codimension part
    int c_dalpha_codim = 0;
    bool c_dalpha_codim_ge_3 = false; // condition III
    bool k_equals_j = false;          // equivalent form of condition III
    bool radical_spot_check = false;  // gens of the saturated presentation
                                      // lie in the radical of J
};

/// Audits the decidable parts of the "generic pair" hypotheses for the
/// form alone: codimensions via Groebner dimension and a radical
/// spot-check. Radicality itself is not decided, only spot-checked.
inline GenericityReport genericity_report(const KForm& a) {
    GenericityReport rep;
    Ideal j = singular_ideal(a);
    rep.j_codim = codimension(j);
    rep.j_codim_ge_2 = rep.j_codim >= 2;
    Ideal cda = coefficient_ideal(d(a));
    rep.c_dalpha_codim = cda.is_zero_ideal() ? 0 : codimension(cda);
    rep.c_dalpha_codim_ge_3 = rep.c_dalpha_codim >= 3;
    rep.k_equals_j = ideal_equal(kupka_ideal(a).ideal, j);
    rep.radical_spot_check = true;
    Ideal sat = kupka_set_presentation(a);
    for (const auto& s : sat.generators())
        if (!radical_member(s, j)) rep.radical_spot_check = false;
    return rep;
}

/// Sufficient criterion for 1 belonging to the localization of I(alpha) at
/// a monomial prime: some solver-accepted generator lies outside the prime.
/// (The full localization test is out of scope; callers should treat a
/// negative answer as inconclusive.)
inline bool division_point_sufficient(const std::vector<Polynomial>& unfolding_members,
                                      const std::vector<std::size_t>& prime_vars) {
    for (const auto& h : unfolding_members) {
        if (h.is_zero()) continue;
        bool inside = true;
        for (const auto& [m, c] : h.terms()) {
            bool divisible = false;
            for (auto v : prime_vars)
                if (m[v] > 0) divisible = true;
            if (!divisible) inside = false;
        }
        if (!inside) return true;
    }
    return false;
}

/// Forward direction of the field/form correspondence on surfaces.
inline KForm field_to_form(const VectorField& y, const GradingData& g) {
    if (g.q != 2) throw ContextError("field/form correspondence needs a surface");
    return contract(volume_form(g), y);
}

struct FieldSolve {
    VectorField field;
    std::size_t kernel_dim = 0; // radial combinations sum f_i R_i
};

/// Inverse direction: solves i_Y Omega = alpha for a homogeneous Y,
/// reporting the dimension of the radial kernel.
inline FieldSolve form_to_field(const KForm& alpha, const GradingData& g) {
    if (g.q != 2) throw ContextError("field/form correspondence needs a surface");
    DegreeVector dega = form_degree(alpha, g);
    DegreeVector ell = g.sub(dega, g.anticanonical());
    KForm omega = volume_form(g);
    // unknowns: per-variable monomials of degree ell + deg z_i
    std::vector<std::pair<std::size_t, Monomial>> unknowns;
    for (std::size_t i = 0; i < g.m; ++i)
        for (const auto& mono : monomials_of_degree(g, g.add(ell, g.degrees[i])))
            unknowns.emplace_back(i, mono);
    std::vector<KForm> columns;
    for (const auto& [i, mono] : unknowns) {
        VectorField e = VectorField::zero(g.ring);
        std::vector<Polynomial> coeffs(g.m, Polynomial::zero(g.ring));
        coeffs[i] = Polynomial::term(g.ring, mono, Rational(1));
        columns.push_back(contract(omega, VectorField(g.ring, coeffs)));
    }
    detail::FormVectorizer rows;
    rows.note(alpha);
    for (const auto& c : columns) rows.note(c);
    auto sol = solve(rows.matrix(columns), rows.vec(alpha));
    if (!sol)
        throw RepresentationError(
            "form is not a polynomial-field contraction in this degree (p_D not surjective)");
    std::vector<Polynomial> coeffs(g.m, Polynomial::zero(g.ring));
    for (std::size_t t = 0; t < unknowns.size(); ++t)
        if (!is_zero((*sol)[t])) coeffs[unknowns[t].first].add_term(unknowns[t].second, (*sol)[t]);
    FieldSolve out{VectorField(g.ring, std::move(coeffs)), 0};
    out.kernel_dim = kernel_basis(rows.matrix(columns)).size();
    return out;
}

} // namespace torfol
