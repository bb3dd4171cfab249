#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kgeo/completion.hpp"
#include "kgeo/multipoly.hpp"

namespace kgeo {

/// Three-valued outcome with re-verifiable certificate data. Proven and
/// Refuted always carry enough to recheck; Unknown records the exhausted
/// budget in `note`.
struct Verdict {
    enum Outcome { Proven, Refuted, Unknown };
    Outcome outcome = Unknown;
    std::string note;

    /// Per-factor sign-change witnesses: f(pos) > 0 and f(neg) < 0 exactly.
    struct SignWitness {
        std::vector<Rational> pos, neg;
    };
    std::vector<SignWitness> sign_witnesses;

    /// Rank / dimension evidence (meaning documented per operation).
    std::vector<int> ranks;

    bool proven() const { return outcome == Proven; }
    bool refuted() const { return outcome == Refuted; }
};

/// Number of distinct real roots of a rational polynomial (Sturm).
int sturm_real_root_count(const std::vector<Rational>& f);

/// Coefficientwise split f = a + i*b over a tower whose only complex
/// generator is i (minimal polynomial t^2 + 1, embedded at the point (0,1)).
std::pair<MultiPoly, MultiPoly> split_real_imag(const MultiPoly& f);

/// Substitute z_j = x_j + i*y_j into each generator and split: the real
/// generator system of the underlying real structure, in doubled variables
/// x1..xn, y1..yn. Coefficients stay in the (real part of the) input tower.
std::vector<MultiPoly> underlying_real_structure(const std::vector<MultiPoly>& gens);

struct RealPair {
    MultiPoly a, b;  // g^sigma = a + i*b
};
struct RealSystem {
    std::vector<std::vector<RealPair>> systems;  // one per sigma, duplicates merged
};

RealSystem real_galois_completion(const ConjugateSystem& cs);

/// n - rank of an affine-linear system over a real tower; -1 when
/// inconsistent. Throws on nonlinear input.
int real_dim_linear(const std::vector<MultiPoly>& forms, int n);

/// Sign-change / square-free test for "the zero ideal of Z_R(f) is (f)".
/// The optional factorization (over a real-embedded tower, possibly with i)
/// refines per-factor analysis; it must reproduce f by exact division.
Verdict k_geometric_verdict(const MultiPoly& f,
                            const std::vector<MultiPoly>& factors = {},
                            long sample_budget = 20000, int height = 50);

/// Geometric over every real closed field: every absolutely irreducible
/// factor must itself pass the sign-change / dimension-(n-1) test.
Verdict k_reliable_verdict(const MultiPoly& f, const std::vector<MultiPoly>& factors,
                           long sample_budget = 20000, int height = 50);

struct BadSetResult {
    /// Each entry: a real linear system cutting out one low-dimensional trace.
    std::vector<std::vector<MultiPoly>> components;
    Verdict verdict;
};

/// Factors of f whose real zero set has dimension < n-1, as linear systems.
/// Exact for linear factors, conjugate-pair linear factors, and definite
/// binary quadratics; anything else yields Unknown.
BadSetResult bad_set(const MultiPoly& f, const std::vector<MultiPoly>& factors);

/// Per-sigma comparison of real and complex dimension of the conjugate zero
/// sets; equality for every sigma certifies I_R(X) = I_K(X) R[x].
Verdict defined_over_K_verdict(const ConjugateSystem& cs, long sample_budget = 20000,
                               int height = 50);

/// Property check: every rational zero of the base system up to the height
/// bound annihilates every conjugate system.
Verdict rational_points_in_conjugates(const ConjugateSystem& cs, int height,
                                      long budget = 4000000);

/// Exact sign of f at a rational point (coefficients in a real tower).
int sign_at_point(const MultiPoly& f, const std::vector<Rational>& point);

}  // namespace kgeo
