#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "torfol/fixtures.hpp"
#include "torfol/io.hpp"

using namespace torfol;
using testutil::Rng;

TEST_CASE("parsing a fraction-coefficient term") {
    auto r = Ring::make(4, "x", 1);
    Polynomial p = parse_polynomial("-(1/2)*x1^3*x2^2*x3", r);
    REQUIRE(p.term_count() == 1);
    Monomial m({3, 2, 1, 0});
    REQUIRE(p.coefficient(m) == Rational(-1, 2));
    // juxtaposition and spaces
    REQUIRE(parse_polynomial("-(1/2) x1^3 x2^2 x3", r) == p);
    REQUIRE(parse_polynomial("- (1/2)x1^3x2^2x3", r) == p);
}

TEST_CASE("parsing zero and constants") {
    auto r = Ring::make(2, "z", 1);
    REQUIRE(parse_polynomial("0", r).is_zero());
    REQUIRE(parse_polynomial("7/14", r) == Polynomial::constant(r, Rational(1, 2)));
    REQUIRE(parse_polynomial("(z1+z2)^2", r) ==
            (Polynomial::variable(r, 0) + Polynomial::variable(r, 1)).pow(2));
    REQUIRE(parse_polynomial("2x1", Ring::make(1, "x", 1)) ==
            Polynomial::constant(Ring::make(1, "x", 1), Rational(2)) *
                Polynomial::variable(Ring::make(1, "x", 1), 0));
}

TEST_CASE("round trip on 500 random polynomials") {
    Rng rng(515151);
    auto r = Ring::make(3, "z", 1);
    for (int it = 0; it < 500; ++it) {
        Polynomial p = testutil::random_poly(rng, r, 5, 4);
        REQUIRE(parse_polynomial(p.str(), r) == p);
    }
}

TEST_CASE("parser errors carry positions") {
    auto r = Ring::make(2, "z", 1);
    try {
        parse_polynomial("z1 + ", r);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        REQUIRE(e.position >= 4);
    }
    REQUIRE_THROWS_AS(parse_polynomial("z1 + w2", r), ParseError);
    REQUIRE_THROWS_AS(parse_polynomial("z1 ) z2", r), ParseError);
    REQUIRE_THROWS_AS(parse_polynomial("1/0", r), ParseError);
}

TEST_CASE("longest variable name wins") {
    auto r = Ring::make({"z", "z1"});
    Polynomial p = parse_polynomial("z1", r);
    REQUIRE(p == Polynomial::variable(r, 1));
    Polynomial q = parse_polynomial("z z1", r);
    REQUIRE(q == Polynomial::variable(r, 0) * Polynomial::variable(r, 1));
}

TEST_CASE("fan json round trip") {
    Fan h2 = fixtures::hirzebruch2();
    Json j = fan_to_json(h2);
    Fan back = fan_from_json(j);
    REQUIRE(back.rays == h2.rays);
    REQUIRE(back.max_cones == h2.max_cones);
    REQUIRE(back.names == h2.names);
    // missing rays is an input error
    REQUIRE_THROWS_AS(fan_from_json(Json::object()), ParseError);
}

TEST_CASE("form json round trip") {
    Fan h2 = fixtures::hirzebruch2();
    RingPtr r = h2.ring();
    KForm a = fixtures::alpha_10(r);
    Json j = form_to_json(a);
    KForm back = form_from_json(j, r);
    REQUIRE(back == a);
    // 2-forms use comma-separated keys
    KForm two(r, 2);
    two.add_term({0, 2}, Polynomial::variable(r, 1));
    Json j2 = form_to_json(two);
    REQUIRE(j2["coeffs"].contains("1,3"));
    REQUIRE(form_from_json(j2, r) == two);
}

TEST_CASE("map json") {
    Json j;
    j["source_vars"] = {"x0", "x1", "x2", "x3"};
    j["components"] = {"x0^2", "x1^2", "x2*x3"};
    j["degrees"] = {2, 2, 2};
    j["flags"] = Json::object({{"flat_pullback", true}, {"complete", false}});
    MapFile mf = map_from_json(j);
    REQUIRE(mf.components.size() == 3);
    REQUIRE(mf.flat_pullback);
    REQUIRE_FALSE(mf.complete);
    REQUIRE(mf.components[2].total_degree() == 2);
}

TEST_CASE("canonical ideal printing") {
    auto r = Ring::make(3, "z", 1);
    auto z = [&](int i) { return Polynomial::variable(r, i); };
    Ideal i(r, {z(1) * Rational(-2) + z(0) * Rational(-4), z(2) * Rational(1, 3)});
    auto strs = ideal_strings(i);
    REQUIRE(strs == std::vector<std::string>{"z3", "2*z1 + z2"});
}
