#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "torfol/foliation.hpp"
#include "torfol/forms.hpp"
#include "torfol/toric.hpp"

namespace torfol {

/// Polynomial lifting of a rational map P^n --> X: one homogeneous
/// component per target ray, of degree e_i, with sum e_i v_i = 0.
/// Flatness and completeness are user assertions carried into reports.
struct RationalMapLifting {
    RingPtr source;                    // x0..xn with the standard grading
    std::vector<Polynomial> components;
    std::vector<long> degrees;         // e_i
    Fan target;
    GradingData grading;               // class group of the target
    GradingData source_grading;
    bool flat_pullback = false;
    bool complete = false;

    static RationalMapLifting make(std::vector<Polynomial> comps, std::vector<long> degs,
                                   Fan target_fan, bool flat = false, bool complete_flag = false) {
        RationalMapLifting f;
        if (comps.empty()) throw ArgumentError("rational map needs components");
        f.source = comps.front().ring();
        f.components = std::move(comps);
        f.degrees = std::move(degs);
        f.target = std::move(target_fan);
        f.grading = class_group(f.target);
        f.source_grading = standard_projective_grading(f.source);
        f.flat_pullback = flat;
        f.complete = complete_flag;
        return f;
    }
};

struct MapReport {
    bool relation_ok = false;
    std::string relation_violation; // lattice equation text when violated
    bool homogeneous_ok = false;
    int base_locus_codim = 0;
    bool completeness_checked = false;
    bool completeness_ok = false;
    bool flat_asserted = false;
    bool complete_asserted = false;
    bool ok() const {
        return relation_ok && homogeneous_ok && (!completeness_checked || completeness_ok);
    }
};

/// Pullback of the irrelevant ideal: one generator prod_{i not in cone} F_i
/// per maximal cone of the target.
inline Ideal pullback_irrelevant(const RationalMapLifting& f) {
    std::vector<Polynomial> gens;
    for (const auto& cone : f.target.max_cones) {
        std::vector<bool> in(f.target.ray_count(), false);
        for (int i : cone) in[i] = true;
        Polynomial p = Polynomial::constant(f.source, Rational(1));
        for (std::size_t i = 0; i < f.target.ray_count(); ++i)
            if (!in[i]) p = p * f.components[i];
        gens.push_back(std::move(p));
    }
    return Ideal(f.source, std::move(gens));
}

/// Checks the ray relation, homogeneity of the components, and (when
/// completeness is asserted) that the base locus has codimension >= 2.
inline MapReport validate(const RationalMapLifting& f) {
    std::size_t m = f.target.ray_count(), q = f.target.dim();
    if (f.components.size() != m || f.degrees.size() != m)
        throw ContextError("one component and one degree per target ray expected");
    MapReport rep;
    rep.flat_asserted = f.flat_pullback;
    rep.complete_asserted = f.complete;

    rep.relation_ok = true;
    for (std::size_t c = 0; c < q; ++c) {
        Integer acc = 0;
        for (std::size_t i = 0; i < m; ++i) acc += Integer(f.degrees[i]) * f.target.rays[i][c];
        if (acc != 0) {
            rep.relation_ok = false;
            std::string eq;
            for (std::size_t i = 0; i < m; ++i)
                eq += (i ? " + " : "") + std::to_string(f.degrees[i]) + "*(" +
                      f.target.rays[i][c].get_str() + ")";
            rep.relation_violation = "coordinate " + std::to_string(c + 1) + ": " + eq +
                                     " = " + acc.get_str() + " != 0";
            throw DegreeError("degree vector is not a ray relation; " + rep.relation_violation);
        }
    }

    rep.homogeneous_ok = true;
    for (std::size_t i = 0; i < m; ++i) {
        const Polynomial& fi = f.components[i];
        if (fi.is_zero() || !is_homogeneous_std(fi) || fi.total_degree() != f.degrees[i])
            rep.homogeneous_ok = false;
    }

    if (f.complete) {
        rep.completeness_checked = true;
        rep.base_locus_codim = codimension(pullback_irrelevant(f));
        rep.completeness_ok = rep.base_locus_codim >= 2;
    }
    return rep;
}

inline Polynomial pullback_polynomial(const RationalMapLifting& f, const Polynomial& p) {
    return p.substitute(f.components);
}

inline Ideal pullback_ideal(const RationalMapLifting& f, const Ideal& ideal) {
    std::vector<Polynomial> gens;
    for (const auto& g : ideal.generators()) gens.push_back(pullback_polynomial(f, g));
    return Ideal(f.source, std::move(gens));
}

/// d F_i as a 1-form on the source.
inline KForm component_differential(const RationalMapLifting& f, std::size_t i) {
    std::vector<Polynomial> parts;
    for (std::size_t j = 0; j < f.source->nvars(); ++j)
        parts.push_back(f.components[i].partial(j));
    return KForm::one_form(f.source, parts);
}

/// F^*(a) = sum_I A_I(F) dF_{i_1} ^ ... ^ dF_{i_k}.
inline KForm pullback(const RationalMapLifting& f, const KForm& a) {
    if (a.ring()->nvars() != f.target.ray_count())
        throw ContextError("form does not live on the map's target");
    std::vector<KForm> dF;
    for (std::size_t i = 0; i < f.components.size(); ++i)
        dF.push_back(component_differential(f, i));
    KForm out(f.source, a.k());
    for (const auto& [idx, c] : a.coefficients()) {
        KForm term = KForm::from_polynomial(pullback_polynomial(f, c));
        for (auto v : idx) term = wedge(term, dF[v]);
        out = out + term;
    }
    return out;
}

/// Degree the pullback of a 1-form should have: sum d_i e_i for any
/// expression of the form's degree as an effective divisor sum d_i D_i.
inline std::optional<long> expected_pullback_degree(const RationalMapLifting& f, const KForm& a) {
    DegreeVector deg = form_degree(a, f.grading);
    auto reps = monomials_of_degree(f.grading, deg);
    if (reps.empty()) return std::nullopt;
    long acc = 0;
    for (std::size_t i = 0; i < f.components.size(); ++i)
        acc += static_cast<long>(reps.front()[i]) * f.degrees[i];
    return acc;
}

struct PullbackIdeals {
    KForm omega;
    Ideal j_omega;          // coefficient ideal of omega
    Ideal j_tilde;          // F^*(J(alpha)) = <A_i(F)>
    Ideal k_omega;          // (J(omega) : C(d omega))
    Ideal residual;         // (J(omega) : J-tilde), supported on C(F, alpha)
    Ideal k_alpha_pulled;   // F^*(K(alpha))
    bool k_equals_pullback = false; // K(omega) = F^*(K(alpha))
    bool k_equals_jtilde = false;   // K(omega) = <A_i(F)>
    bool chain_ok = false;          // J(omega) in J-tilde in K(omega)
    std::vector<bool> unfolding_members; // A_i(F) in I(omega), via witnesses
};

/// The Kupka/singular ideal bookkeeping of a pullback foliation; the
/// flat/generic equalities are verified and reported, never assumed.
inline PullbackIdeals pullback_ideals(const RationalMapLifting& f, const KForm& a) {
    if (a.k() != 1) throw ArgumentError("pullback_ideals expects a 1-form");
    PullbackIdeals out;
    out.omega = pullback(f, a);
    out.j_omega = coefficient_ideal(out.omega);

    std::vector<Polynomial> ai;
    for (std::size_t i = 0; i < f.target.ray_count(); ++i)
        ai.push_back(pullback_polynomial(f, a.coefficient({static_cast<unsigned>(i)})));
    out.j_tilde = Ideal(f.source, ai);

    KForm domega = d(out.omega);
    Ideal cd = coefficient_ideal(domega);
    out.k_omega = cd.is_zero_ideal()
                      ? Ideal(f.source, {Polynomial::constant(f.source, Rational(1))})
                      : quotient(out.j_omega, cd);
    out.residual = out.j_tilde.is_zero_ideal()
                       ? Ideal(f.source, {Polynomial::constant(f.source, Rational(1))})
                       : quotient(out.j_omega, out.j_tilde);
    out.k_alpha_pulled = pullback_ideal(f, kupka_ideal(a).ideal);
    out.k_equals_pullback = ideal_equal(out.k_omega, out.k_alpha_pulled);
    out.k_equals_jtilde = ideal_equal(out.k_omega, out.j_tilde);
    out.chain_ok = contained_in(out.j_omega, out.j_tilde) && contained_in(out.j_tilde, out.k_omega);

    // A_k(F) belongs to the unfoldings ideal with the explicit witness
    // eta_k = F^*(i_{d/dz_k} d alpha).
    KForm dalpha = d(a);
    for (std::size_t k = 0; k < f.target.ray_count(); ++k) {
        KForm witness = pullback(f, contract(dalpha, VectorField::coordinate(a.ring(), k)));
        out.unfolding_members.push_back(check_unfolding_witness(ai[k], out.omega, witness));
    }
    return out;
}

struct DeformationSplit {
    KForm tau;   // epsilon part of (F + eps G)^*(alpha + eps eta)
    KForm tau1;  // sum B_i(F) dF_i
    KForm tau2;  // sum dA_i/dz_j(F) G_j dF_i + sum A_i(F) dG_i
    bool split_ok = false;          // tau = tau1 + tau2
    bool fiber_condition = false;   // F^*(Omega_X) ^ tau1 = 0
};

/// First-order split of a deformed pullback, computed along two routes:
/// dual-number substitution for tau and the explicit formulas for tau1 and
/// tau2.
inline DeformationSplit deformation_split(const RationalMapLifting& f,
                                          const std::vector<Polynomial>& g, const KForm& a,
                                          const KForm& eta) {
    std::size_t m = f.target.ray_count();
    if (g.size() != m) throw ContextError("one perturbation per component expected");
    for (std::size_t i = 0; i < m; ++i)
        if (!g[i].is_zero() &&
            (!is_homogeneous_std(g[i]) || g[i].total_degree() != f.degrees[i]))
            throw DegreeError("perturbation degree does not match the lifting degree");
    if (!eta.is_zero() && form_degree(eta, f.grading) != form_degree(a, f.grading))
        throw DegreeError("deformation form degree does not match the foliation degree");

    DeformationSplit out;
    std::vector<FirstOrderPolynomial> feps;
    for (std::size_t i = 0; i < m; ++i) feps.emplace_back(f.components[i], g[i]);

    std::vector<KForm> dF, dG;
    for (std::size_t i = 0; i < m; ++i) {
        dF.push_back(component_differential(f, i));
        std::vector<Polynomial> parts;
        for (std::size_t j = 0; j < f.source->nvars(); ++j) parts.push_back(g[i].partial(j));
        dG.push_back(KForm::one_form(f.source, parts));
    }

    // Route 1: dual numbers. omega_eps = sum c_i d(F_i + eps G_i) with
    // c_i = (A_i + eps B_i)(F + eps G).
    out.tau = KForm(f.source, 1);
    for (std::size_t i = 0; i < m; ++i) {
        FirstOrderPolynomial ci =
            substitute_first_order(a.coefficient({static_cast<unsigned>(i)}), feps);
        Polynomial bi = eta.is_zero() ? Polynomial::zero(a.ring())
                                      : eta.coefficient({static_cast<unsigned>(i)});
        FirstOrderPolynomial full = ci + FirstOrderPolynomial(Polynomial::zero(f.source),
                                                              pullback_polynomial(f, bi));
        out.tau = out.tau + dF[i] * full.epsilon_part() + dG[i] * full.body();
    }

    // Route 2: the explicit tau1 + tau2 formulas.
    out.tau1 = KForm(f.source, 1);
    out.tau2 = KForm(f.source, 1);
    for (std::size_t i = 0; i < m; ++i) {
        Polynomial ai = a.coefficient({static_cast<unsigned>(i)});
        if (!eta.is_zero())
            out.tau1 = out.tau1 +
                       dF[i] * pullback_polynomial(
                                   f, eta.coefficient({static_cast<unsigned>(i)}));
        Polynomial mixed(f.source);
        for (std::size_t j = 0; j < m; ++j)
            mixed += pullback_polynomial(f, ai.partial(j)) * g[j];
        out.tau2 = out.tau2 + dF[i] * mixed + dG[i] * pullback_polynomial(f, ai);
    }

    out.split_ok = (out.tau - (out.tau1 + out.tau2)).is_zero();
    out.fiber_condition = wedge(pullback(f, volume_form(f.grading)), out.tau1).is_zero();
    return out;
}

struct LogarithmicForm {
    KForm form;
    bool integrable_checked = false;
    bool integrable = false;
};

/// Logarithmic form sum_{|I|=q} lambda_I Fhat_I dF_I. The residues must
/// satisfy the descent relation i_e(lambda) = 0; for q = 1 integrability is
/// verified on the result.
inline LogarithmicForm logarithmic_builder(const std::map<IndexSet, Rational>& lambda,
                                           const std::vector<Polynomial>& components,
                                           const std::vector<long>& degrees, unsigned qdeg,
                                           bool check_pluecker = false) {
    std::size_t m = components.size();
    RingPtr source = components.front().ring();
    auto value = [&](IndexSet idx) -> Rational {
        int sign = detail::sort_sign(idx);
        if (sign == 0) return Rational(0);
        auto it = lambda.find(idx);
        if (it == lambda.end()) return Rational(0);
        return sign > 0 ? it->second : -it->second;
    };
    // descent: contraction of lambda against the degree vector vanishes
    std::vector<IndexSet> smaller;
    {
        IndexSet scratch;
        std::function<void(unsigned, unsigned)> rec = [&](unsigned start, unsigned need) {
            if (need == 0) {
                smaller.push_back(scratch);
                return;
            }
            for (unsigned v = start; v + need <= m; ++v) {
                scratch.push_back(v);
                rec(v + 1, need - 1);
                scratch.pop_back();
            }
        };
        rec(0, qdeg - 1);
    }
    for (const auto& rest : smaller) {
        Rational acc(0);
        for (unsigned j = 0; j < m; ++j) {
            IndexSet idx;
            idx.push_back(j);
            idx.insert(idx.end(), rest.begin(), rest.end());
            acc += Rational(degrees[j]) * value(idx);
        }
        if (!is_zero(acc))
            throw ArgumentError("residue coefficients violate the descent relation i_e(lambda)=0");
    }
    if (check_pluecker && qdeg >= 2 && !pluecker_relations_hold(lambda, m, qdeg))
        throw ArgumentError("residue coefficients are not totally decomposable");

    std::vector<KForm> dF;
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<Polynomial> parts;
        for (std::size_t j = 0; j < source->nvars(); ++j) parts.push_back(components[i].partial(j));
        dF.push_back(KForm::one_form(source, parts));
    }
    LogarithmicForm out;
    out.form = KForm(source, qdeg);
    std::vector<IndexSet> subsets;
    {
        IndexSet scratch;
        std::function<void(unsigned, unsigned)> rec = [&](unsigned start, unsigned need) {
            if (need == 0) {
                subsets.push_back(scratch);
                return;
            }
            for (unsigned v = start; v + need <= m; ++v) {
                scratch.push_back(v);
                rec(v + 1, need - 1);
                scratch.pop_back();
            }
        };
        rec(0, qdeg);
    }
    for (const auto& idx : subsets) {
        Rational l = value(idx);
        if (is_zero(l)) continue;
        Polynomial fhat = Polynomial::constant(source, l);
        std::vector<bool> in(m, false);
        for (auto v : idx) in[v] = true;
        for (std::size_t j = 0; j < m; ++j)
            if (!in[j]) fhat = fhat * components[j];
        KForm term = KForm::from_polynomial(fhat);
        for (auto v : idx) term = wedge(term, dF[v]);
        out.form = out.form + term;
    }
    if (qdeg == 1) {
        out.integrable_checked = true;
        out.integrable = wedge(out.form, d(out.form)).is_zero();
    }
    return out;
}

struct FlagResult {
    IMat relation_basis;       // extended basis, first row = e-bar
    std::vector<KForm> eta;    // eta_k on the weighted cover, k = 0..s-1
    std::vector<KForm> omega;  // pullbacks via the logarithmic formula
};

/// Flag of logarithmic subfoliations: eta_k = i_{R_1}...i_{R_{k+1}} dz,
/// omega_k = sum b^k_I Fhat_I dF_I, for a relation basis extended so that
/// R_1 corresponds to e-bar.
inline FlagResult flag_builder(const RationalMapLifting& f, std::vector<long> ebar) {
    std::size_t m = f.target.ray_count(), q = f.target.dim();
    if (ebar.size() != m) throw ContextError("one exponent per ray expected");
    long content = 0;
    for (auto e : ebar) content = std::gcd(content, e);
    if (content == 0) throw LatticeError("zero relation vector");
    for (auto& e : ebar) e /= content;
    // verify it is a relation
    for (std::size_t c = 0; c < q; ++c) {
        Integer acc = 0;
        for (std::size_t i = 0; i < m; ++i) acc += Integer(ebar[i]) * f.target.rays[i][c];
        if (acc != 0) throw LatticeError("vector is not a relation among the rays");
    }
    const GradingData& g = f.grading;
    // coordinates of ebar in the Hermite relation basis
    QMat a = qmat(m, g.s);
    QVec rhs;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < g.s; ++j) a[i][j] = Rational(g.relation_basis[j][i]);
        rhs.push_back(Rational(ebar[i]));
    }
    auto coords = solve(std::move(a), std::move(rhs));
    if (!coords) throw LatticeError("relation does not lie in the relation lattice");
    IVec c(g.s);
    for (std::size_t j = 0; j < g.s; ++j) {
        if ((*coords)[j].get_den() != 1)
            throw LatticeError("relation has fractional coordinates in the lattice basis");
        c[j] = (*coords)[j].get_num();
    }
    IMat u = complete_to_unimodular(c);
    FlagResult out;
    out.relation_basis = matmul(u, g.relation_basis);

    RingPtr zr = g.ring;
    std::vector<VectorField> radials;
    for (std::size_t j = 0; j < g.s; ++j) {
        std::vector<Polynomial> coeffs;
        for (std::size_t i = 0; i < m; ++i)
            coeffs.push_back(Polynomial::variable(zr, i) * Rational(out.relation_basis[j][i]));
        radials.emplace_back(zr, std::move(coeffs));
    }
    KForm current = KForm::top_form(zr);
    for (std::size_t k = 0; k < g.s; ++k) {
        current = contract(current, radials[k]);
        out.eta.push_back(current);
        // read off b^k_I and assemble the logarithmic pullback
        std::map<IndexSet, Rational> b;
        for (const auto& [idx, coeff] : current.coefficients()) {
            Polynomial zhat = Polynomial::constant(zr, Rational(1));
            std::vector<bool> in(m, false);
            for (auto v : idx) in[v] = true;
            for (std::size_t i = 0; i < m; ++i)
                if (!in[i]) zhat = zhat * Polynomial::variable(zr, i);
            auto qv = coeff.divided_by(zhat);
            if (!qv || !qv->is_constant())
                throw Error("internal: flag coefficient not a multiple of zhat_I");
            b[idx] = qv->constant_value();
        }
        out.omega.push_back(
            logarithmic_builder(b, f.components, f.degrees, current.k()).form);
    }
    return out;
}

/// Dimension of the 2-logarithmic component: m - 6 + sum binom(n + e_i, n).
inline Integer log_component_dimension(unsigned n, const std::vector<long>& ebar) {
    Integer acc = static_cast<long>(ebar.size()) - 6;
    for (auto e : ebar) {
        Integer binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n + e),
                     static_cast<unsigned long>(n));
        acc += binom;
    }
    return acc;
}

} // namespace torfol
