#include <catch2/catch_amalgamated.hpp>

#include "torfol/fixture_maps.hpp"
#include "torfol/ratmap.hpp"
#include "toric_helpers.hpp"

using namespace torfol;
using testutil::Rng;

namespace {

/// Random lifting P^3 --> P^2 with linear components.
RationalMapLifting random_linear_map(Rng& rng) {
    RingPtr src = Ring::make(4, "x", 0);
    std::vector<Polynomial> comps;
    for (int i = 0; i < 3; ++i) {
        Polynomial p(src);
        for (int j = 0; j < 4; ++j)
            p += Polynomial::variable(src, j) * testutil::random_rational(rng, 3, 1);
        if (p.is_zero()) p = Polynomial::variable(src, i);
        comps.push_back(p);
    }
    return RationalMapLifting::make(std::move(comps), {1, 1, 1},
                                    fixtures::projective_plane());
}

} // namespace

TEST_CASE("validation of liftings") {
    RationalMapLifting id = fixtures::identity_p2();
    MapReport rep = validate(id);
    REQUIRE(rep.ok());
    REQUIRE(rep.completeness_checked);
    REQUIRE(rep.completeness_ok);

    // z0-multiples: relation holds but completeness fails (codim 1 base locus)
    Fan p2 = fixtures::projective_plane();
    RingPtr src = Ring::make({"z0", "z1", "z2"});
    auto z = [&](int i) { return Polynomial::variable(src, i); };
    RationalMapLifting bad = RationalMapLifting::make({z(0) * z(0), z(0) * z(1), z(0) * z(2)},
                                                      {2, 2, 2}, p2, false, true);
    MapReport rep2 = validate(bad);
    REQUIRE(rep2.relation_ok);
    REQUIRE(rep2.homogeneous_ok);
    REQUIRE(rep2.base_locus_codim == 1);
    REQUIRE_FALSE(rep2.completeness_ok);

    // the H2 relation (1,1,1,3)
    RationalMapLifting h2map = fixtures::cubic_p3_to_h2();
    REQUIRE(validate(h2map).ok());

    // a violated relation names the lattice equation
    RationalMapLifting wrong =
        RationalMapLifting::make({z(0), z(1), z(2)}, {1, 2, 1}, p2);
    REQUIRE_THROWS_AS(validate(wrong), DegreeError);
}

TEST_CASE("pullback along the identity is the identity") {
    RationalMapLifting id = fixtures::identity_p2();
    GradingData g = id.grading;
    Rng rng(404);
    for (int it = 0; it < 5; ++it) {
        VectorField y = testutil::random_field(rng, g, DegreeVector{{Integer(1)}, {}});
        KForm a = contract(volume_form(g), y);
        KForm back = pullback(id, a);
        for (unsigned i = 0; i < 3; ++i)
            REQUIRE(back.coefficient({i}).terms() == a.coefficient({i}).terms());
    }
}

TEST_CASE("pullback commutes with d and wedge") {
    Rng rng(405);
    for (int it = 0; it < 6; ++it) {
        RationalMapLifting f = random_linear_map(rng);
        GradingData g = f.grading;
        VectorField y = testutil::random_field(rng, g, DegreeVector{{Integer(0)}, {}});
        KForm a = contract(volume_form(g), y);
        KForm b(g.ring, 1);
        for (unsigned i = 0; i < 3; ++i)
            b.add_term({i}, testutil::random_homogeneous(rng, g, DegreeVector{{Integer(1)}, {}}));
        REQUIRE(pullback(f, d(a)) == d(pullback(f, a)));
        REQUIRE(pullback(f, wedge(a, b)) == wedge(pullback(f, a), pullback(f, b)));
    }
}

TEST_CASE("pullback degree formula for the linear logarithmic form") {
    RationalMapLifting f = fixtures::quadratic_p3_to_p2();
    KForm a = fixtures::linear_log_form(f.grading.ring);
    KForm omega = pullback(f, a);
    auto expected = expected_pullback_degree(f, a);
    REQUIRE(expected.has_value());
    REQUIRE(*expected == 4);
    REQUIRE(form_degree(omega, f.source_grading).free[0] == 4);
    // omega = -F2 dF1 + F1 dF2 exactly
    KForm want = component_differential(f, 0) * (-f.components[1]) +
                 component_differential(f, 1) * f.components[0];
    REQUIRE(omega == want);
}

TEST_CASE("pullback of the volume form matches the logarithmic expansion") {
    RationalMapLifting f = fixtures::cubic_p3_to_h2();
    GradingData g = f.grading;
    KForm omega_x = volume_form(g);
    KForm lhs = pullback(f, omega_x);
    auto b = volume_coefficients(omega_x, g);
    KForm rhs = logarithmic_builder(b, f.components, f.degrees, 2).form;
    REQUIRE(lhs == rhs);
    // and F^*(Omega) wedges to zero against every pullback 1-form
    Rng rng(406);
    VectorField y = testutil::random_field(rng, g, DegreeVector{{Integer(0), Integer(1)}, {}});
    KForm a = contract(omega_x, y);
    if (!a.is_zero()) REQUIRE(wedge(lhs, pullback(f, a)).is_zero());
}

TEST_CASE("pullback ideals: identity map reproduces J and K") {
    RationalMapLifting id = fixtures::identity_p2();
    KForm a = fixtures::linear_log_form(id.grading.ring);
    PullbackIdeals pb = pullback_ideals(id, a);
    Ideal j_alpha = singular_ideal(a);
    REQUIRE(ideal_equal(pb.j_omega, Ideal(id.source, j_alpha.generators())));
    REQUIRE(pb.k_equals_pullback);
    REQUIRE(pb.chain_ok);
    for (bool member : pb.unfolding_members) REQUIRE(member);
}

TEST_CASE("pullback ideals for the pinned quadratic map") {
    RationalMapLifting f = fixtures::quadratic_p3_to_p2();
    KForm a = fixtures::linear_log_form(f.grading.ring);
    PullbackIdeals pb = pullback_ideals(f, a);
    Ideal f12(f.source, {f.components[0], f.components[1]});
    REQUIRE(ideal_equal(pb.j_tilde, f12));
    REQUIRE(pb.k_equals_jtilde);
    REQUIRE(pb.k_equals_pullback);
    REQUIRE(pb.chain_ok);
    for (bool member : pb.unfolding_members) REQUIRE(member);
    auto mem = unfoldings_ideal_membership(pb.j_tilde.generators()[0], pb.omega,
                                           f.source_grading);
    REQUIRE(mem.member);
}

TEST_CASE("deformation split: special and random cases") {
    Rng rng(407);
    RationalMapLifting f = fixtures::quadratic_p3_to_p2();
    GradingData g = f.grading;
    KForm a = fixtures::linear_log_form(g.ring);
    DegreeVector dega = form_degree(a, g);

    // G = 0: tau = F^*(eta), tau2 = 0. The deformation direction eta is a
    // twisted form on the target, generated by contracting the volume form.
    KForm eta = contract(volume_form(g),
                         testutil::random_field(rng, g, g.sub(g.sub(dega, g.anticanonical()),
                                                              g.zero())));
    REQUIRE(form_degree(eta, g) == dega);
    std::vector<Polynomial> zero_g(3, Polynomial::zero(f.source));
    DeformationSplit s1 = deformation_split(f, zero_g, a, eta);
    REQUIRE(s1.split_ok);
    REQUIRE(s1.tau2.is_zero());
    REQUIRE(s1.tau == pullback(f, eta));
    REQUIRE(s1.fiber_condition);

    // eta = 0: tau = tau2
    std::vector<Polynomial> gpert;
    for (int i = 0; i < 3; ++i)
        gpert.push_back(
            testutil::random_homogeneous(rng, f.source_grading, DegreeVector{{Integer(2)}, {}}));
    DeformationSplit s2 = deformation_split(f, gpert, a, KForm(g.ring, 1));
    REQUIRE(s2.split_ok);
    REQUIRE(s2.tau1.is_zero());
    REQUIRE(s2.tau == s2.tau2);

    // random combined
    DeformationSplit s3 = deformation_split(f, gpert, a, eta);
    REQUIRE(s3.split_ok);
    REQUIRE(s3.fiber_condition);

    // degree mismatch raises
    std::vector<Polynomial> badg(3, Polynomial::variable(f.source, 0));
    REQUIRE_THROWS_AS(deformation_split(f, badg, a, eta), DegreeError);
}

TEST_CASE("logarithmic builder on the weighted plane") {
    RingPtr src = Ring::make(4, "x", 0);
    Rng rng(408);
    GradingData sg = standard_projective_grading(src);
    std::vector<Polynomial> comps = {
        testutil::random_homogeneous(rng, sg, DegreeVector{{Integer(1)}, {}}),
        testutil::random_homogeneous(rng, sg, DegreeVector{{Integer(3)}, {}}),
        testutil::random_homogeneous(rng, sg, DegreeVector{{Integer(5)}, {}})};
    std::map<IndexSet, Rational> lambda = {{{0}, Rational(2)}, {{1}, Rational(1)},
                                           {{2}, Rational(-1)}};
    LogarithmicForm lf = logarithmic_builder(lambda, comps, {1, 3, 5}, 1);
    REQUIRE(lf.integrable_checked);
    REQUIRE(lf.integrable);
    std::map<IndexSet, Rational> bad = {{{0}, Rational(1)}, {{1}, Rational(1)},
                                        {{2}, Rational(1)}};
    REQUIRE_THROWS_AS(logarithmic_builder(bad, comps, {1, 3, 5}, 1), ArgumentError);
}

TEST_CASE("flag of logarithmic subfoliations over the Hirzebruch target") {
    RationalMapLifting f = fixtures::cubic_p3_to_h2();
    FlagResult flag = flag_builder(f, {1, 1, 1, 3});
    REQUIRE(flag.eta.size() == 2);
    REQUIRE(flag.relation_basis[0] == IVec{1, 1, 1, 3});
    GradingData g = f.grading;
    RingPtr zr = g.ring;
    for (std::size_t k = 0; k < flag.eta.size(); ++k) {
        REQUIRE(flag.eta[k].k() == 4 - k - 1);
        for (std::size_t j = 0; j <= k; ++j) {
            std::vector<Polynomial> coeffs;
            for (std::size_t i = 0; i < 4; ++i)
                coeffs.push_back(Polynomial::variable(zr, i) *
                                 Rational(flag.relation_basis[j][i]));
            REQUIRE(contract(flag.eta[k], VectorField(zr, coeffs)).is_zero());
        }
        REQUIRE(flag.omega[k] == pullback(f, flag.eta[k]));
    }
    KForm omega_x = volume_form(g);
    REQUIRE((flag.eta[1] == omega_x || flag.eta[1] == -omega_x));

    // m = q + 1: single-step flag, omega = F^* Omega directly
    RationalMapLifting idp2 = fixtures::identity_p2();
    FlagResult short_flag = flag_builder(idp2, {1, 1, 1});
    REQUIRE(short_flag.eta.size() == 1);
    REQUIRE(short_flag.omega[0] == pullback(idp2, volume_form(idp2.grading)));

    REQUIRE_THROWS_AS(flag_builder(f, {1, 0, 0, 1}), LatticeError);
}

TEST_CASE("logarithmic component dimension formula") {
    REQUIRE(log_component_dimension(3, {1, 1, 1, 1}) == 14);
    REQUIRE(log_component_dimension(3, {2, 1, 1, 1}) == 20);
    std::vector<long> e6(6, 1);
    REQUIRE(log_component_dimension(3, e6) == 24);
}
