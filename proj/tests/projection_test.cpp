#include "doctest.h"
#include "helpers.hpp"
#include "kgeo/projection.hpp"

using namespace kgeo;
using namespace kgeo::testutil;

namespace {

Ideal rnc_affine(const RingPtr& ring) {
    return Ideal(ring, {parse_poly(ring, "x2 - x1^2"), parse_poly(ring, "x3 - x1^3"),
                        parse_poly(ring, "x4 - x1^4")});
}

Ideal rnc_projective(const RingPtr& rh) {
    std::vector<MultiPoly> hg;
    const char* rel[] = {"x0*x2 - x1^2", "x0*x3 - x1*x2", "x0*x4 - x1*x3",
                         "x1*x3 - x2^2", "x1*x4 - x2*x3", "x2*x4 - x3^2"};
    for (auto* s : rel) hg.push_back(parse_poly(rh, s));
    return Ideal(rh, std::move(hg));
}

}  // namespace

TEST_CASE("pointwise projection") {
    auto Q = TowerField::rationals();
    ProjectionSpec s{2, 1, {{Rational(1)}}};
    std::vector<FieldElement> p{Q->from_rational(Rational(3)),
                                Q->from_rational(Rational(2))};
    auto img = apply_projection(s, p);
    REQUIRE(img.size() == 1);
    CHECK(img[0].rational_value() == Rational(1));
    CHECK_THROWS(apply_projection(ProjectionSpec{2, 2, {}}, p));
}

TEST_CASE("monic projections eliminate the trailing variable") {
    auto Q = TowerField::rationals();
    auto r2 = PolyRing::make({"x1", "x2"}, Q);
    bool monic = false;
    Ideal J = monic_project(
        Ideal(r2, {parse_poly(r2, "x2^2 - x1"), parse_poly(r2, "x2")}), &monic);
    CHECK(monic);
    auto r1 = PolyRing::make({"x1"}, Q);
    CHECK(ideal_equal(J, Ideal(r1, {parse_poly(r1, "x1")})));

    auto r3 = PolyRing::make({"x1", "x2", "x3"}, Q);
    Ideal I(r3, {parse_poly(r3, "x3^2 - x1"), parse_poly(r3, "x3^3 - x2")});
    Ideal K = monic_project(I, &monic);
    CHECK(monic);
    CHECK(ideal_equal(K, Ideal(PolyRing::make({"x1", "x2"}, Q),
                               {parse_poly(PolyRing::make({"x1", "x2"}, Q),
                                           "x1^3 - x2^2")})));
    // no monic witness: projection of the hyperbola x1 x2 = 1 to x1
    Ideal P(r2, {parse_poly(r2, "x1*x2 - 1")});
    Ideal E = monic_project(P, &monic);
    CHECK_FALSE(monic);
    CHECK(E.is_zero_ideal());
}

TEST_CASE("apex avoidance on the rational normal curve and degenerate cases") {
    auto Q = TowerField::rationals();
    auto rh = PolyRing::make({"x0", "x1", "x2", "x3", "x4"}, Q);
    Ideal H = rnc_projective(rh);
    auto spec = find_generic_matrix(H, 4, 3, 7);
    REQUIRE(spec.has_value());
    CHECK(apex_avoidance(H, *spec));
    // five independent random matrices: failures form a proper closed set
    int passes = 0;
    for (unsigned seed = 100; seed < 105; ++seed) {
        auto s2 = find_generic_matrix(H, 4, 3, seed, 1);
        if (s2 && apex_avoidance(H, *s2)) ++passes;
    }
    CHECK(passes >= 4);
    // a closure containing the apex line: never avoided
    auto r3 = PolyRing::make({"x0", "x1", "x2"}, Q);
    ProjectionSpec s21{2, 1, {{Rational(1)}}};
    CHECK_FALSE(apex_avoidance(Ideal(r3, {parse_poly(r3, "x0")}), s21));
    CHECK(apex_avoidance(Ideal(r3, {parse_poly(r3, "1")}), s21));
    CHECK_THROWS(apex_avoidance(Ideal(r3, {parse_poly(r3, "x0 + 1")}), s21));
}

TEST_CASE("generic projection of the rational normal curve") {
    auto Q = TowerField::rationals();
    auto ring = PolyRing::make({"x1", "x2", "x3", "x4"}, Q);
    Ideal I = rnc_affine(ring);
    auto rh = PolyRing::make({"x0", "x1", "x2", "x3", "x4"}, Q);
    auto spec = find_generic_matrix(rnc_projective(rh), 4, 3, 7);
    REQUIRE(spec.has_value());
    Ideal Y = generic_project(I, *spec);
    CHECK(krull_dimension(I) == 1);
    CHECK(krull_dimension(Y) == 1);
    // pullback soundness
    std::vector<MultiPoly> pre;
    for (int i = 0; i < 3; ++i)
        pre.push_back(MultiPoly::variable(ring, i) -
                      MultiPoly::variable(ring, 3).scaled(spec->A[i][0]));
    for (const auto& g : Y.generators())
        CHECK(radical_membership(g.substitute(pre), I));
    // 20 parameter values land on the image
    for (int t = -10; t <= 10; ++t) {
        if (t == 0) continue;
        Rational v(t);
        std::vector<FieldElement> pt;
        for (int k = 1; k <= 4; ++k) {
            Rational p(1);
            for (int e = 0; e < k; ++e) p *= v;
            pt.push_back(Q->from_rational(p));
        }
        auto img = apply_projection(*spec, pt);
        for (const auto& g : Y.generators()) CHECK(g.evaluate(img).is_zero());
    }
}

TEST_CASE("functoriality: generic projection = iterated monic projection") {
    auto Q = TowerField::rationals();
    auto r3 = PolyRing::make({"x1", "x2", "x3"}, Q);
    Ideal C(r3, {parse_poly(r3, "x2 - x1^2"), parse_poly(r3, "x3 - x1^3")});
    ProjectionSpec s{3, 2, {{Rational(1, 2)}, {Rational(1, 3)}}};
    Ideal G = generic_project(C, s);
    Ideal sheared(r3, shear_generators(s, C.generators()));
    Ideal M = monic_project(sheared);
    CHECK(ideal_equal(G, M));
}

TEST_CASE("zero-dimensional ideals stay zero-dimensional") {
    auto Q = TowerField::rationals();
    auto r2 = PolyRing::make({"x1", "x2"}, Q);
    Ideal I(r2, {parse_poly(r2, "x1^2 - 1"), parse_poly(r2, "x2^2 - 4")});
    ProjectionSpec s{2, 1, {{Rational(1, 3)}}};
    Ideal Y = generic_project(I, s);
    CHECK(krull_dimension(I) == 0);
    CHECK(krull_dimension(Y) == 0);
}

TEST_CASE("biregularity verdicts at samples") {
    auto Q = TowerField::rationals();
    auto ring = PolyRing::make({"x1", "x2", "x3", "x4"}, Q);
    Ideal I = rnc_affine(ring);
    auto rh = PolyRing::make({"x0", "x1", "x2", "x3", "x4"}, Q);
    auto spec = find_generic_matrix(rnc_projective(rh), 4, 3, 7);
    REQUIRE(spec.has_value());
    std::vector<AlgebraicPoint> samples;
    for (int t = 1; t <= 10; ++t) {
        std::vector<FieldElement> c;
        for (int k = 1; k <= 4; ++k) {
            Rational p(1);
            for (int e = 0; e < k; ++e) p *= Rational(t);
            c.push_back(Q->from_rational(p));
        }
        samples.push_back({Q, std::move(c)});
    }
    Verdict v = biregular_samples_verdict(I, *spec, samples);
    CHECK(v.outcome == Verdict::Proven);
    // constructed collision
    auto r2 = PolyRing::make({"x1", "x2"}, Q);
    Ideal L(r2, {parse_poly(r2, "x2^2 - x2")});
    ProjectionSpec s0{2, 1, {{Rational(0)}}};
    std::vector<AlgebraicPoint> pts{{Q, {Q->from_rational(Rational(3)), Q->zero()}},
                                    {Q, {Q->from_rational(Rational(3)), Q->one()}}};
    CHECK(biregular_samples_verdict(L, s0, pts).outcome == Verdict::Refuted);
    // single sample, full-rank tangent
    CHECK(biregular_samples_verdict(I, *spec, {samples[0]}).outcome ==
          Verdict::Proven);
}
