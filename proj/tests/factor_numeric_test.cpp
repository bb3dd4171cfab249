#include "doctest.h"
#include "helpers.hpp"
#include "kgeo/factor.hpp"
#include "kgeo/numeric.hpp"

using namespace kgeo;
using namespace kgeo::testutil;

namespace {
// equal up to a nonzero scalar
bool associated(const QPoly& a, const QPoly& b) {
    if (qp_degree(a) != qp_degree(b) || qp_degree(a) < 0) return false;
    const Rational &la = a[qp_degree(a)], &lb = b[qp_degree(b)];
    return qp_eq(qp_scale(a, lb), qp_scale(b, la));
}
}  // namespace

TEST_CASE("dense univariate arithmetic and squarefree parts") {
    QPoly f{Rational(-2), Rational(0), Rational(1)};             // x^2 - 2
    QPoly g{Rational(4), Rational(-4), Rational(0), Rational(1)};  // x^3 - 4x + 4
    auto [q, r] = qp_divmod(qp_mul(f, g), f);
    CHECK(qp_eq(q, g));
    CHECK(r.empty());
    QPoly sq = qp_mul(f, f);
    CHECK(associated(qp_squarefree_part(sq), f));
    CHECK(associated(qp_gcd(sq, qp_derivative(sq)), f));
}

TEST_CASE("rational factorization splits cyclotomic-style products") {
    // x^4 - 1 = (x-1)(x+1)(x^2+1)
    QPoly f{Rational(-1), Rational(0), Rational(0), Rational(0), Rational(1)};
    auto fac = factor_univariate_q(f);
    CHECK(fac.factors.size() == 3);
    QPoly prod{fac.unit};
    for (const auto& [p, m] : fac.factors)
        for (int k = 0; k < m; ++k) prod = qp_mul(prod, p);
    CHECK(qp_eq(prod, f));
}

TEST_CASE("complex roots with exact reconstruction bounds") {
    // x^2 - 2: roots +-sqrt2 to high precision
    std::vector<Rational> f{Rational(-2), Rational(0), Rational(1)};
    auto roots = complex_roots(f, 256);
    REQUIRE(roots.size() == 2);
    for (const auto& r : roots) {
        double re = r.re.to_double();
        CHECK(std::abs(std::abs(re) - 1.4142135623730951) < 1e-12);
        CHECK(std::abs(r.im.to_double()) < 1e-12);
    }
}

TEST_CASE("numeric fit recovers exact tower elements") {
    auto tf = tower_sqrt2();
    auto gens = numeric_generators(tf, 512);
    // fit the numeric value of 3/2 - sqrt2 back into the field
    FieldElement target = tf->from_rational(Rational(3, 2)) - tf->generator(0);
    Cplx v = numeric_value(target, gens, 512);
    auto fit = fit_in_field(v, tf, 512);
    REQUIRE(fit.has_value());
    CHECK(*fit == target);
}

TEST_CASE("roots in field finds the full splitting") {
    auto tf = tower_sqrt2();
    // x^4 - 4x^2 + 2 does not split over Q(sqrt2); x^2 - 2 does
    auto r = roots_in_field({Rational(-2), Rational(0), Rational(1)}, tf);
    REQUIRE(r.has_value());
    CHECK(r->size() == 2);
}
