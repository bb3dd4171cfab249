#pragma once

#include <random>

#include "kgeo/tower.hpp"

namespace kgeo::testutil {

// Q(a, i) with a = 2^{1/4} and i the imaginary unit; Galois over Q with the
// dihedral group of order 8.
inline TowerPtr tower_d4() {
    TowerLevel la;
    la.name = "a";
    la.degree = 4;
    la.minpoly = {CoordMap{{Expo{0, 0}, Rational(-2)}}, CoordMap{}, CoordMap{}, CoordMap{}};
    la.box = Box{{Rational(118, 100), Rational(120, 100)}, {Rational(0), Rational(0)}};
    TowerLevel li;
    li.name = "i";
    li.degree = 2;
    li.minpoly = {CoordMap{{Expo{0, 0}, Rational(1)}}, CoordMap{}};
    li.box = Box{{Rational(0), Rational(0)}, {Rational(1), Rational(1)}};
    li.exact_point = true;
    return TowerField::make({la, li});
}

// The eight automorphisms a -> i^j a, i -> (-1)^k i.
inline GaloisGroup group_d4(const TowerPtr& tf) {
    std::vector<Automorphism> elems;
    FieldElement a = tf->generator(0), i = tf->generator(1);
    std::vector<FieldElement> ipow{tf->one(), i, -tf->one(), -i};
    for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 2; ++k) {
            std::string name = "s" + std::to_string(j) + std::to_string(k);
            elems.emplace_back(name, tf,
                               std::vector<FieldElement>{ipow[j] * a, k ? -i : i});
        }
    return GaloisGroup::verify(tf, std::move(elems), true);
}

// Q(sqrt 2).
inline TowerPtr tower_sqrt2() {
    TowerLevel l;
    l.name = "s";
    l.degree = 2;
    l.minpoly = {CoordMap{{Expo{0}, Rational(-2)}}, CoordMap{}};
    l.box = Box{{Rational(141, 100), Rational(142, 100)}, {Rational(0), Rational(0)}};
    return TowerField::make({l});
}

inline GaloisGroup group_sqrt2(const TowerPtr& tf) {
    std::vector<Automorphism> elems;
    elems.push_back(Automorphism::identity(tf));
    elems.emplace_back("conj", tf, std::vector<FieldElement>{-tf->generator(0)});
    return GaloisGroup::verify(tf, std::move(elems), true);
}

// Q(c, w) with c = 2^{1/3} and w a primitive cube root of unity.
inline TowerPtr tower_cbrt2_omega() {
    TowerLevel lc;
    lc.name = "c";
    lc.degree = 3;
    lc.minpoly = {CoordMap{{Expo{0, 0}, Rational(-2)}}, CoordMap{}, CoordMap{}};
    lc.box = Box{{Rational(125, 100), Rational(127, 100)}, {Rational(0), Rational(0)}};
    TowerLevel lw;
    lw.name = "w";
    lw.degree = 2;
    lw.minpoly = {CoordMap{{Expo{0, 0}, Rational(1)}}, CoordMap{{Expo{0, 0}, Rational(1)}}};
    lw.box = Box{{Rational(-1, 2), Rational(-1, 2)}, {Rational(85, 100), Rational(88, 100)}};
    return TowerField::make({lc, lw});
}

// The order-6 Galois group: c -> w^j c, w -> w or w^2.
inline GaloisGroup group_cbrt2_omega(const TowerPtr& tf) {
    FieldElement c = tf->generator(0), w = tf->generator(1);
    FieldElement w2 = w * w;
    std::vector<FieldElement> wpow{tf->one(), w, w2};
    std::vector<Automorphism> elems;
    for (int j = 0; j < 3; ++j)
        for (int k = 1; k <= 2; ++k)
            elems.emplace_back("t" + std::to_string(j) + std::to_string(k), tf,
                               std::vector<FieldElement>{wpow[j] * c, k == 1 ? w : w2});
    return GaloisGroup::verify(tf, std::move(elems), true);
}

// Q(c) with c = 2^{1/3}, real cube root.
inline TowerPtr tower_cbrt2() {
    TowerLevel l;
    l.name = "c";
    l.degree = 3;
    l.minpoly = {CoordMap{{Expo{0}, Rational(-2)}}, CoordMap{}, CoordMap{}};
    l.box = Box{{Rational(125, 100), Rational(127, 100)}, {Rational(0), Rational(0)}};
    return TowerField::make({l});
}

// Deterministic random tower element with small coordinates.
inline FieldElement random_element(const TowerPtr& tf, std::mt19937& rng, int height = 9) {
    std::uniform_int_distribution<int> num(-height, height);
    std::uniform_int_distribution<int> den(1, 4);
    CoordMap c;
    for (const auto& e : tf->basis()) {
        int n = num(rng);
        if (n != 0) {
            Rational q(n, den(rng));
            q.canonicalize();
            c.emplace(e, q);
        }
    }
    return FieldElement(tf, std::move(c));
}

}  // namespace kgeo::testutil
