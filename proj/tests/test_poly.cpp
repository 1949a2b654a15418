#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <map>

#include "helpers.hpp"
#include "torfol/poly.hpp"

using namespace torfol;
using testutil::Rng;

namespace {

RingPtr z3() { return Ring::make(3, "z"); }

Polynomial var(const RingPtr& r, std::size_t i) { return Polynomial::variable(r, i); }

} // namespace

TEST_CASE("difference of squares") {
    auto r = z3();
    Polynomial z1 = var(r, 0), z2 = var(r, 1);
    Polynomial p = (z1 + z2) * (z1 - z2);
    REQUIRE(p == z1 * z1 - z2 * z2);
    REQUIRE(p.term_count() == 2);
}

TEST_CASE("multiplication by zero absorbs") {
    auto r = z3();
    Polynomial p = var(r, 0) + var(r, 1) * var(r, 2);
    REQUIRE((p * Polynomial::zero(r)).is_zero());
}

TEST_CASE("trinomial cube matches brute-force expansion") {
    auto r = z3();
    Polynomial s = var(r, 0) + var(r, 1) + var(r, 2);
    Polynomial cube = s.pow(3);

    // Oracle: distribute (z1+z2+z3)^3 one factor at a time over index triples.
    std::map<std::array<unsigned, 3>, long> expected;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                std::array<unsigned, 3> e{0, 0, 0};
                e[i]++;
                e[j]++;
                e[k]++;
                expected[e]++;
            }
    REQUIRE(expected.size() == 10);
    REQUIRE(cube.term_count() == 10);
    for (const auto& [e, c] : expected) {
        Monomial m(std::vector<unsigned>(e.begin(), e.end()));
        REQUIRE(cube.coefficient(m) == Rational(c));
    }
}

TEST_CASE("ring axioms on random triples") {
    Rng rng(20240811);
    auto r = z3();
    for (int it = 0; it < 60; ++it) {
        Polynomial a = testutil::random_poly(rng, r);
        Polynomial b = testutil::random_poly(rng, r);
        Polynomial c = testutil::random_poly(rng, r);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a + b == b + a);
        REQUIRE(a * b == b * a);
    }
}

TEST_CASE("substitution of monomial images") {
    auto r = z3();
    auto x = Ring::make(2, "x", 0);
    Polynomial p = var(r, 0) * var(r, 1); // z1*z2
    std::vector<Polynomial> images = {var(x, 0) * var(x, 0), var(x, 0) * var(x, 1),
                                      var(x, 1) * var(x, 1)};
    Polynomial q = p.substitute(images);
    Polynomial want = var(x, 0).pow(3) * var(x, 1);
    REQUIRE(q == want);
}

TEST_CASE("substitution along the identity") {
    Rng rng(7);
    auto r = z3();
    std::vector<Polynomial> id = {var(r, 0), var(r, 1), var(r, 2)};
    for (int it = 0; it < 20; ++it) {
        Polynomial p = testutil::random_poly(rng, r);
        REQUIRE(p.substitute(id) == p);
    }
}

TEST_CASE("substitution is a ring homomorphism") {
    Rng rng(12345);
    auto r = z3();
    auto x = Ring::make(2, "x", 0);
    for (int it = 0; it < 100; ++it) {
        Polynomial p = testutil::random_poly(rng, r, 3, 2);
        Polynomial q = testutil::random_poly(rng, r, 3, 2);
        std::vector<Polynomial> images;
        for (int i = 0; i < 3; ++i) images.push_back(testutil::random_poly(rng, x, 2, 2));
        REQUIRE((p * q).substitute(images) == p.substitute(images) * q.substitute(images));
        REQUIRE((p + q).substitute(images) == p.substitute(images) + q.substitute(images));
    }
}

TEST_CASE("substitution is functorial") {
    Rng rng(777);
    auto r = z3();
    auto x = Ring::make(2, "x", 0);
    auto y = Ring::make(2, "y", 0);
    for (int it = 0; it < 25; ++it) {
        Polynomial p = testutil::random_poly(rng, r, 3, 2);
        std::vector<Polynomial> f, g;
        for (int i = 0; i < 3; ++i) f.push_back(testutil::random_poly(rng, x, 2, 2));
        for (int i = 0; i < 2; ++i) g.push_back(testutil::random_poly(rng, y, 2, 2));
        std::vector<Polynomial> composed;
        for (const auto& fi : f) composed.push_back(fi.substitute(g));
        REQUIRE(p.substitute(f).substitute(g) == p.substitute(composed));
    }
}

TEST_CASE("substitution arity errors") {
    auto r = z3();
    Polynomial p = var(r, 0);
    REQUIRE_THROWS_AS(p.substitute({p}), ContextError);
}

TEST_CASE("partial derivatives") {
    auto r = z3();
    Polynomial z1 = var(r, 0), z2 = var(r, 1);
    REQUIRE((z1.pow(3) * z2).partial(0) == Rational(3) * z1.pow(2) * z2);
    REQUIRE(z1.pow(3).partial(1).is_zero());
    // Leibniz rule on random pairs.
    Rng rng(99);
    for (int it = 0; it < 30; ++it) {
        Polynomial f = testutil::random_poly(rng, r);
        Polynomial g = testutil::random_poly(rng, r);
        for (std::size_t i = 0; i < 3; ++i)
            REQUIRE((f * g).partial(i) == f.partial(i) * g + f * g.partial(i));
    }
}

TEST_CASE("weighted Euler identity") {
    // sum_i a_i z_i dA/dz_i = deg_w(A) * A for w-homogeneous A.
    Rng rng(4242);
    auto r = z3();
    std::uniform_int_distribution<unsigned> wdist(1, 4), edist(0, 3);
    for (int it = 0; it < 50; ++it) {
        std::array<unsigned, 3> w{wdist(rng), wdist(rng), wdist(rng)};
        // Build a random w-homogeneous polynomial: sample monomials, keep one weight class.
        std::vector<Monomial> pool;
        for (int t = 0; t < 8; ++t) pool.push_back(testutil::random_monomial(rng, 3));
        unsigned wdeg = 0;
        Polynomial a(r);
        for (const auto& m : pool) {
            unsigned d = m[0] * w[0] + m[1] * w[1] + m[2] * w[2];
            if (a.is_zero()) wdeg = d;
            if (d == wdeg) a.add_term(m, testutil::random_nonzero_rational(rng));
        }
        if (a.is_zero()) continue;
        Polynomial lhs(r);
        for (std::size_t i = 0; i < 3; ++i)
            lhs += Rational(static_cast<long>(w[i])) * var(r, i) * a.partial(i);
        REQUIRE(lhs == Rational(static_cast<long>(wdeg)) * a);
    }
}

TEST_CASE("multiplicity along a divisor") {
    auto r = z3();
    Polynomial z1 = var(r, 0), z2 = var(r, 1);
    REQUIRE(mult_along(z1 * z1 * z2, z1) == 2u);
    REQUIRE(mult_along(z1 + z2, z1) == 0u);
    Polynomial p = (z1 + z2).pow(3) * (z1 - z2);
    REQUIRE(mult_along(p, z1 + z2) == 3u);
    REQUIRE(!mult_along(Polynomial::zero(r), z1).has_value()); // +infinity
    REQUIRE_THROWS_AS(mult_along(z1, Polynomial::constant(r, Rational(2))), ArgumentError);
}

TEST_CASE("first-order arithmetic satisfies eps^2 = 0") {
    Rng rng(31337);
    auto r = z3();
    for (int it = 0; it < 40; ++it) {
        Polynomial a = testutil::random_poly(rng, r, 3, 2);
        Polynomial b = testutil::random_poly(rng, r, 3, 2);
        Polynomial c = testutil::random_poly(rng, r, 3, 2);
        Polynomial d = testutil::random_poly(rng, r, 3, 2);
        FirstOrderPolynomial u(a, b), v(c, d);
        FirstOrderPolynomial sum = u + v;
        REQUIRE(sum.body() == a + c);
        REQUIRE(sum.epsilon_part() == b + d);
        FirstOrderPolynomial prod = u * v;
        REQUIRE(prod.body() == a * c);
        REQUIRE(prod.epsilon_part() == a * d + b * c);
    }
}

TEST_CASE("first-order substitution agrees with expansion") {
    Rng rng(555);
    auto r = z3();
    auto x = Ring::make(2, "x", 0);
    for (int it = 0; it < 20; ++it) {
        Polynomial p = testutil::random_poly(rng, r, 3, 2);
        std::vector<Polynomial> f, g;
        for (int i = 0; i < 3; ++i) {
            f.push_back(testutil::random_poly(rng, x, 2, 2));
            g.push_back(testutil::random_poly(rng, x, 2, 2));
        }
        std::vector<FirstOrderPolynomial> images;
        for (int i = 0; i < 3; ++i) images.emplace_back(f[i], g[i]);
        FirstOrderPolynomial got = substitute_first_order(p, images);
        // Oracle: p(f) and the directional derivative sum_i dp/dz_i(f) * g_i.
        REQUIRE(got.body() == p.substitute(f));
        Polynomial dir(x);
        for (std::size_t i = 0; i < 3; ++i) dir += p.partial(i).substitute(f) * g[i];
        REQUIRE(got.epsilon_part() == dir);
    }
}

TEST_CASE("context mismatch raises") {
    auto r3 = z3();
    auto r2 = Ring::make(2, "x", 0);
    REQUIRE_THROWS_AS(var(r3, 0) + var(r2, 0), ContextError);
}

TEST_CASE("canonical printing is grevlex descending") {
    auto r = z3();
    Polynomial p = var(r, 0) + var(r, 1).pow(2);
    REQUIRE(p.str() == "z2^2 + z1");
    Polynomial q = var(r, 0) * var(r, 1) - Rational(1, 2) * var(r, 2).pow(2);
    REQUIRE(q.str() == "z1*z2 - 1/2*z3^2");
}
