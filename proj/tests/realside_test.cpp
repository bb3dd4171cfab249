#include "doctest.h"
#include "helpers.hpp"
#include "kgeo/completion.hpp"
#include "kgeo/groebner.hpp"
#include "kgeo/realside.hpp"

using namespace kgeo;
using namespace kgeo::testutil;

namespace {

// f = x1 + sqrt2 x2 + 2^{1/4} x3 and its three distinct conjugates.
std::vector<MultiPoly> d4_linear_factors(const TowerPtr& tf, const RingPtr& ring) {
    FieldElement a = tf->generator(0), i = tf->generator(1);
    FieldElement s2 = a * a;
    auto X = [&](int k) { return MultiPoly::variable(ring, k); };
    return {X(0) + X(1).scaled(s2) + X(2).scaled(a),
            X(0) + X(1).scaled(s2) - X(2).scaled(a),
            X(0) - X(1).scaled(s2) + X(2).scaled(i * a),
            X(0) - X(1).scaled(s2) - X(2).scaled(i * a)};
}

}  // namespace

TEST_CASE("sturm root counting") {
    // x^2 + 1: none; x^2 - 2: two; x^3 - 2x: three
    CHECK(sturm_real_root_count({Rational(1), Rational(0), Rational(1)}) == 0);
    CHECK(sturm_real_root_count({Rational(-2), Rational(0), Rational(1)}) == 2);
    CHECK(sturm_real_root_count({Rational(0), Rational(-2), Rational(0), Rational(1)}) == 3);
}

TEST_CASE("x1^3 - 2 x2^3 is geometric over Q with the quoted sign witnesses") {
    auto ring = PolyRing::make({"x1", "x2"}, TowerField::rationals());
    MultiPoly f = parse_poly(ring, "x1^3 - 2*x2^3");
    Verdict v = k_geometric_verdict(f);
    CHECK(v.outcome == Verdict::Proven);
    REQUIRE(v.sign_witnesses.size() >= 1);
    // the classical witnesses (1,0) / (-1,0) must actually work
    CHECK(sign_at_point(f, {Rational(1), Rational(0)}) == 1);
    CHECK(sign_at_point(f, {Rational(-1), Rational(0)}) == -1);
    // and the stored pair is an exact certificate
    for (const auto& w : v.sign_witnesses) {
        CHECK(sign_at_point(f, w.pos) == 1);
        CHECK(sign_at_point(f, w.neg) == -1);
    }
}

TEST_CASE("x1^2 + 1 is refuted geometric by Sturm") {
    auto ring = PolyRing::make({"x1"}, TowerField::rationals());
    Verdict v = k_geometric_verdict(parse_poly(ring, "x1^2 + 1"));
    CHECK(v.outcome == Verdict::Refuted);
}

TEST_CASE("squares are refuted geometric") {
    auto ring = PolyRing::make({"x1", "x2"}, TowerField::rationals());
    Verdict v = k_geometric_verdict(parse_poly(ring, "(x1 - x2)^2"));
    CHECK(v.outcome == Verdict::Refuted);
}

TEST_CASE("dihedral completion: geometric over Q but not reliable") {
    auto tf = tower_d4();
    auto ring = PolyRing::make({"x1", "x2", "x3"}, tf);
    auto qring = PolyRing::make({"x1", "x2", "x3"}, TowerField::rationals());
    MultiPoly gb =
        parse_poly(qring, "x1^4 - 4*x1^2*x2^2 + 8*x1*x2*x3^2 + 4*x2^4 - 2*x3^4");
    auto factors = d4_linear_factors(tf, ring);
    Verdict geo = k_geometric_verdict(gb, factors);
    CHECK(geo.outcome == Verdict::Proven);
    Verdict rel = k_reliable_verdict(gb, factors);
    CHECK(rel.outcome == Verdict::Refuted);
}

TEST_CASE("Fermat-type sextic is reliable and defined over Q") {
    auto qring = PolyRing::make({"x1", "x2"}, TowerField::rationals());
    MultiPoly f = parse_poly(qring, "x1^6 + x2^6 - 8");
    Verdict rel = k_reliable_verdict(f, {f});
    CHECK(rel.outcome == Verdict::Proven);
    auto cs = build_conjugate_system({f.to_ring(qring)},
                                     GaloisGroup::trivial(TowerField::rationals()));
    Verdict dq = defined_over_K_verdict(cs);
    CHECK(dq.outcome == Verdict::Proven);
}

TEST_CASE("bad set of the dihedral completion is one real line") {
    auto tf = tower_d4();
    auto ring = PolyRing::make({"x1", "x2", "x3"}, tf);
    auto qring = PolyRing::make({"x1", "x2", "x3"}, TowerField::rationals());
    MultiPoly gb =
        parse_poly(qring, "x1^4 - 4*x1^2*x2^2 + 8*x1*x2*x3^2 + 4*x2^4 - 2*x3^4");
    BadSetResult r = bad_set(gb, d4_linear_factors(tf, ring));
    CHECK(r.verdict.outcome == Verdict::Proven);
    REQUIRE(r.components.size() == 1);
    // the line {x3 = 0, x1 = sqrt2 x2}: check the linear system matches
    REQUIRE(r.components[0].size() == 2);
    int dim = real_dim_linear(r.components[0], 3);
    CHECK(dim == 1);
    // the point (sqrt2, 1, 0) annihilates the system
    FieldElement s2 = tf->generator(0) * tf->generator(0);
    std::vector<FieldElement> pt{s2, tf->one(), tf->zero()};
    for (const auto& l : r.components[0]) CHECK(l.evaluate(pt).is_zero());
}

TEST_CASE("bad set of x1^3 - 2 x2^3 is the origin") {
    auto tf = tower_cbrt2_omega();
    auto ring = PolyRing::make({"x1", "x2"}, tf);
    auto qring = PolyRing::make({"x1", "x2"}, TowerField::rationals());
    MultiPoly f = parse_poly(qring, "x1^3 - 2*x2^3");
    // absolute factors: x1 - c x2, x1 - cw x2, x1 - cw^2 x2
    FieldElement c = tf->generator(0), w = tf->generator(1);
    auto X = [&](int k) { return MultiPoly::variable(ring, k); };
    std::vector<MultiPoly> factors{X(0) - X(1).scaled(c), X(0) - X(1).scaled(c * w),
                                   X(0) - X(1).scaled(c * w * w)};
    BadSetResult r = bad_set(f, factors);
    CHECK(r.verdict.outcome == Verdict::Proven);
    REQUIRE(r.components.size() == 1);
    CHECK(real_dim_linear(r.components[0], 2) == 0);
}

TEST_CASE("underlying real structure of z2^3 - 2 z1^3") {
    auto tf = tower_d4();  // any tower containing i works
    auto ring = PolyRing::make({"z1", "z2"}, tf);
    MultiPoly f = parse_poly(ring, "z2^3 - 2*z1^3");
    auto gens = underlying_real_structure({f});
    REQUIRE(gens.size() == 2);
    auto dr = PolyRing::make({"x1", "x2", "y1", "y2"}, TowerField::rationals());
    MultiPoly a =
        parse_poly(dr, "x2^3 - 3*x2*y2^2 - 2*x1^3 + 6*x1*y1^2");
    MultiPoly b = parse_poly(dr, "3*x2^2*y2 - y2^3 - 6*x1^2*y1 + 2*y1^3");
    auto match = [&](const MultiPoly& g, const MultiPoly& target) {
        MultiPoly gq = g.to_ring(dr);
        return gq == target || gq == -target || -gq == target;
    };
    bool ok = (match(gens[0], a) && match(gens[1], b)) ||
              (match(gens[0], b) && match(gens[1], a));
    CHECK(ok);
}

TEST_CASE("real structure dimension doubles on principal test ideals") {
    auto tf = tower_d4();
    auto ring = PolyRing::make({"z1", "z2"}, tf);
    const char* cases[] = {"z1", "z2^3 - 2*z1^3", "z1^2 - z2", "z1*z2 - 1",
                           "z1^2 + z2^2 - 1"};
    for (auto* s : cases) {
        MultiPoly f = parse_poly(ring, s);
        Ideal I(PolyRing::make({"z1", "z2"}, TowerField::rationals()),
                {f.to_ring(PolyRing::make({"z1", "z2"}, TowerField::rationals()))});
        auto gens = underlying_real_structure({f});
        REQUIRE(!gens.empty());
        Ideal R(gens.front().ring(), gens);
        CHECK(krull_dimension(R) == 2 * krull_dimension(I));
    }
}

TEST_CASE("real galois completion splits conjugate systems") {
    auto tf = tower_d4();
    auto G = group_d4(tf);
    auto ring = PolyRing::make({"x1", "x2", "x3"}, tf);
    MultiPoly g = parse_poly(ring, "x1 + a^2*x2 + a*x3");
    auto cs = build_conjugate_system({g}, G);
    RealSystem rs = real_galois_completion(cs);
    CHECK(rs.systems.size() == 4);  // four distinct conjugates
    for (const auto& sys : rs.systems)
        for (const auto& pr : sys) {
            CHECK(pr.a.is_zero() == false);
            for (const auto& [m, c] : pr.a.terms()) {
                (void)m;
                CHECK(c.is_real());
            }
        }
}

TEST_CASE("rational points of the test systems annihilate all conjugates") {
    // diophantine consistency at height 20 for the headline systems
    auto tf = tower_d4();
    auto G = group_d4(tf);
    auto ring = PolyRing::make({"x1", "x2", "x3"}, tf);
    MultiPoly g = parse_poly(ring, "x1 + a^2*x2 + a*x3");
    MultiPoly p = parse_poly(ring, "x1 + a^2*x2 + x3");
    for (const auto& gen : {g, p}) {
        auto cs = build_conjugate_system({gen}, G);
        Verdict v = rational_points_in_conjugates(cs, 20);
        CHECK(v.outcome == Verdict::Proven);
    }
    auto tf3 = tower_cbrt2_omega();
    auto G3 = group_cbrt2_omega(tf3);
    auto r1 = PolyRing::make({"x1"}, tf3);
    auto cs3 = build_conjugate_system({parse_poly(r1, "x1 - c")}, G3);
    Verdict v3 = rational_points_in_conjugates(cs3, 20);
    CHECK(v3.outcome == Verdict::Proven);
}

TEST_CASE("split of a complex-coefficient polynomial") {
    auto tf = tower_d4();
    auto ring = PolyRing::make({"x", "y"}, tf);
    FieldElement i = tf->generator(1);
    MultiPoly f = MultiPoly::variable(ring, 0) + MultiPoly::variable(ring, 1).scaled(i);
    auto [re, im] = split_real_imag(f);
    CHECK(re == MultiPoly::variable(ring, 0));
    CHECK(im == MultiPoly::variable(ring, 1));
}
