#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "kgeo/completion.hpp"
#include "kgeo/groebner.hpp"

using namespace kgeo;
using namespace kgeo::testutil;

TEST_CASE("completion of the dihedral linear form") {
    auto tf = tower_d4();
    auto G = group_d4(tf);
    auto ring = PolyRing::make({"x1", "x2", "x3"}, tf);
    MultiPoly g = parse_poly(ring, "x1 + a^2*x2 + a*x3");
    PolyCompletion pc = galois_complete_polynomial(g, G);
    auto qring = PolyRing::make({"x1", "x2", "x3"}, TowerField::rationals());
    MultiPoly expected =
        parse_poly(qring, "x1^4 - 4*x1^2*x2^2 + 8*x1*x2*x3^2 + 4*x2^4 - 2*x3^4");
    CHECK(pc.g_bullet == expected);
    CHECK(pc.g_star == expected * expected);
}

TEST_CASE("completion of the real linear form and the product hypersurface") {
    auto tf = tower_d4();
    auto G = group_d4(tf);
    auto ring = PolyRing::make({"x1", "x2", "x3"}, tf);
    auto qring = PolyRing::make({"x1", "x2", "x3"}, TowerField::rationals());
    MultiPoly p = parse_poly(ring, "x1 + a^2*x2 + x3");
    PolyCompletion pp = galois_complete_polynomial(p, G);
    MultiPoly p_expected = parse_poly(qring, "x1^2 + 2*x1*x3 - 2*x2^2 + x3^2");
    CHECK(pp.g_bullet == p_expected);
    CHECK(pp.g_star == p_expected.pow(4));
    MultiPoly g = parse_poly(ring, "x1 + a^2*x2 + a*x3");
    PolyCompletion pg = galois_complete_polynomial(g, G);
    // q = g p: q* = (g•)^2 (p•)^4, q• = g• p•, both by exact division
    PolyCompletion pq = galois_complete_polynomial(g * p, G);
    CHECK(pq.g_star == pg.g_bullet.pow(2) * pp.g_bullet.pow(4));
    CHECK(pq.g_bullet == normalize_q(pg.g_bullet * pp.g_bullet));
    CHECK(zero_ideal_geometric_hypersurface({g, p}, G) ==
          normalize_q(pg.g_bullet * pp.g_bullet));
}

TEST_CASE("completion of x1 - 2^{1/3} over Q(2^{1/3}, omega)") {
    auto tf = tower_cbrt2_omega();
    auto G = group_cbrt2_omega(tf);
    auto ring = PolyRing::make({"x1"}, tf);
    MultiPoly g = parse_poly(ring, "x1 - c");
    PolyCompletion pc = galois_complete_polynomial(g, G);
    auto qring = PolyRing::make({"x1"}, TowerField::rationals());
    MultiPoly m = parse_poly(qring, "x1^3 - 2");
    CHECK(pc.g_bullet == m);
    CHECK(pc.g_star == m * m);
}

TEST_CASE("conjugate systems, cross products and invariant coefficients") {
    auto tf = tower_sqrt2();
    auto G = group_sqrt2(tf);
    auto ring = PolyRing::make({"x", "y"}, tf);
    FieldElement s = tf->generator(0);
    MultiPoly g = MultiPoly::variable(ring, 0) - MultiPoly::variable(ring, 1).scaled(s);
    auto cs = build_conjugate_system({g}, G);
    CHECK(cs.systems.size() == 2);
    auto H = products_H(cs);
    CHECK_FALSE(H.capped);
    REQUIRE(H.polys.size() == 1);  // (x - s y)(x + s y), deduplicated
    auto Ginv = invariant_coefficients_G(cs, H.polys);
    // the invariants generate (x^2 - 2 y^2) up to radical
    auto qring = PolyRing::make({"x", "y"}, TowerField::rationals());
    Ideal T(qring, Ginv);
    CHECK(radical_membership(parse_poly(qring, "x^2 - 2*y^2"), T));
    for (const auto& c : Ginv) CHECK(c.ring()->over_rationals());
}

TEST_CASE("invariance of a symmetric system over the group") {
    auto tf = tower_sqrt2();
    auto G = group_sqrt2(tf);
    auto ring = PolyRing::make({"x", "y"}, tf);
    CHECK(g_invariance_check({parse_poly(ring, "x^2 - 2*y^2")}, G));
    FieldElement s = tf->generator(0);
    MultiPoly g = MultiPoly::variable(ring, 0) - MultiPoly::constant(ring, s);
    CHECK_FALSE(g_invariance_check({g}, G));
}

TEST_CASE("clustering of (t^2-2)^2 - 2 over Q(sqrt 2)") {
    auto E = tower_sqrt2();
    // (t^2-2)^2 - 2 = t^4 - 4 t^2 + 2
    std::vector<Rational> f{Rational(2), Rational(0), Rational(-4), Rational(0),
                            Rational(1)};
    auto cl = clustering_over_intermediate(f, E);
    REQUIRE(cl.has_value());
    CHECK(cl->complete);
    REQUIRE(cl->factors.size() == 2);
    FieldElement s = E->generator(0);
    // factors t^2 - (2 + s) and t^2 - (2 - s), in either order
    FieldElement c0a = -(E->from_rational(Rational(2)) + s);
    FieldElement c0b = -(E->from_rational(Rational(2)) - s);
    std::set<std::string> got, want;
    for (const auto& fac : cl->factors) {
        REQUIRE(fac.size() == 3);
        CHECK(fac[2] == E->one());
        CHECK(fac[1].is_zero());
        got.insert(fac[0].to_string());
    }
    want.insert(c0a.to_string());
    want.insert(c0b.to_string());
    CHECK(got == want);
}

TEST_CASE("clustering falls back to completeness over the rationals") {
    // x^2 - 2 has no rational roots and no rational linear/quadratic split
    // other than itself
    std::vector<Rational> f{Rational(-2), Rational(0), Rational(1)};
    auto cl = clustering_over_intermediate(f, tower_sqrt2());
    REQUIRE(cl.has_value());
    CHECK(cl->complete);
    CHECK(cl->factors.size() == 2);  // splits into linear factors over Q(sqrt2)
}
