#include "doctest.h"
#include "helpers.hpp"
#include "kgeo/numeric.hpp"

using namespace kgeo;
using namespace kgeo::testutil;

TEST_CASE("field axioms on random samples") {
    auto tf = tower_d4();
    std::mt19937 rng(42);
    for (int t = 0; t < 100; ++t) {
        FieldElement x = random_element(tf, rng);
        FieldElement y = random_element(tf, rng);
        FieldElement z = random_element(tf, rng);
        CHECK((x + y) * z == x * z + y * z);
        CHECK(x * y == y * x);
        if (!x.is_zero()) CHECK(x * x.inv() == tf->one());
    }
}

TEST_CASE("generator arithmetic in Q(2^{1/4}, i)") {
    auto tf = tower_d4();
    FieldElement a = tf->generator(0), i = tf->generator(1);
    CHECK(a.pow(4) == tf->from_rational(Rational(2)));
    CHECK(i * i == -tf->one());
    CHECK((a * a).is_real());
    CHECK_FALSE((i * a).is_real());
    CHECK(a.sign() == 1);
    CHECK((a * a - tf->from_rational(Rational(2))).sign() == -1);
}

TEST_CASE("automorphism laws and composition closure") {
    auto tf = tower_d4();
    auto G = group_d4(tf);
    CHECK(G.order() == 8);
    std::mt19937 rng(7);
    for (const auto& sigma : G.elements()) {
        FieldElement x = random_element(tf, rng);
        FieldElement y = random_element(tf, rng);
        CHECK(sigma(x + y) == sigma(x) + sigma(y));
        CHECK(sigma(x * y) == sigma(x) * sigma(y));
    }
    for (const auto& s : G.elements())
        for (const auto& t : G.elements()) {
            Automorphism st = s.compose(t);
            bool found = false;
            for (const auto& u : G.elements())
                if (u.same_map(st)) found = true;
            CHECK(found);
        }
}

TEST_CASE("order-2 group over Q(sqrt 2) closes") {
    auto tf = tower_sqrt2();
    auto G = group_sqrt2(tf);
    CHECK(G.order() == 2);
    FieldElement s = tf->generator(0);
    CHECK(G.elements()[1](s) == -s);
}

TEST_CASE("minimal polynomial annihilates and divides the tower degree") {
    auto tf = tower_d4();
    std::mt19937 rng(3);
    for (int t = 0; t < 25; ++t) {
        FieldElement x = random_element(tf, rng);
        auto m = x.minimal_polynomial();
        CHECK(eval_poly_at(m, x).is_zero());
        long d = static_cast<long>(m.size()) - 1;
        CHECK(tf->dimension() % d == 0);
    }
}

TEST_CASE("exact sign agrees with a 100-digit numeric oracle") {
    auto tf = tower_d4();
    const mpfr_prec_t prec = 350;  // > 100 decimal digits
    auto gens = numeric_generators(tf, prec);
    std::mt19937 rng(11);
    int checked = 0;
    for (int t = 0; t < 1000; ++t) {
        // restrict a random draw to the real monomial basis (i-exponent 0)
        FieldElement full = random_element(tf, rng);
        CoordMap rc;
        for (const auto& [e, q] : full.coords())
            if (e[1] == 0) rc.emplace(e, q);
        FieldElement x(tf, rc);
        if (!x.is_real() || x.is_zero()) continue;
        Cplx v = numeric_value(x, gens, prec);
        double d = v.re.to_double();
        if (d == 0.0) continue;  // numerically ambiguous; sign() is the authority
        CHECK(x.sign() == (d > 0 ? 1 : -1));
        ++checked;
    }
    CHECK(checked > 300);
}

TEST_CASE("tower construction rejects bad presentations") {
    TowerLevel l;
    l.name = "s";
    l.degree = 2;
    l.minpoly = {CoordMap{{Expo{0}, Rational(-2)}}, CoordMap{}};
    l.box = Box{{Rational(5), Rational(6)}, {Rational(0), Rational(0)}};  // no root here
    CHECK_THROWS(TowerField::make({l}));
}
