#pragma once

#include <utility>
#include <vector>

#include "kgeo/rational.hpp"

namespace kgeo {

/// Univariate polynomials over Q as dense coefficient vectors c_0..c_d
/// (trailing zeros trimmed; the zero polynomial is the empty vector).
using QPoly = std::vector<Rational>;

int qp_degree(const QPoly& f);             // -1 for zero
QPoly qp_trim(QPoly f);
QPoly qp_add(const QPoly& a, const QPoly& b);
QPoly qp_sub(const QPoly& a, const QPoly& b);
QPoly qp_mul(const QPoly& a, const QPoly& b);
QPoly qp_scale(const QPoly& a, const Rational& c);
QPoly qp_derivative(const QPoly& f);
/// Quotient and remainder; divisor must be nonzero.
std::pair<QPoly, QPoly> qp_divmod(const QPoly& a, const QPoly& b);
/// Monic gcd.
QPoly qp_gcd(QPoly a, QPoly b);
/// Monic squarefree part f / gcd(f, f').
QPoly qp_squarefree_part(const QPoly& f);
bool qp_eq(const QPoly& a, const QPoly& b);

struct QFactorization {
    Rational unit;
    std::vector<std::pair<QPoly, int>> factors;  // (monic-free irreducible, multiplicity)
};

/// Exact factorization into pairwise non-associated irreducible factors with
/// integer-primitive, positive-leading-coefficient normalization.
/// Squarefree decomposition (Yun), then Zassenhaus per squarefree part:
/// factor mod p, Hensel lift past the Landau-Mignotte bound, recombine.
QFactorization factor_univariate_q(const QPoly& f);

/// Checked degree cap for factor_univariate_q.
inline constexpr int kUnivariateFactorDegreeCap = 64;

/// Integer-primitive content-free form with positive leading coefficient;
/// also returns the removed rational unit.
std::pair<Rational, std::vector<Int>> qp_primitive(const QPoly& f);

}  // namespace kgeo
