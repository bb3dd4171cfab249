#pragma once

#include <optional>
#include <vector>

#include "kgeo/groebner.hpp"
#include "kgeo/multipoly.hpp"
#include "kgeo/numeric.hpp"

namespace kgeo {

/// The per-automorphism conjugates of a generator system over a Galois tower.
struct ConjugateSystem {
    TowerPtr extension;
    GaloisGroup group;
    std::vector<MultiPoly> base_generators;
    std::vector<std::vector<MultiPoly>> systems;  // systems[k][i] = g_i^{sigma_k}
};

ConjugateSystem build_conjugate_system(const std::vector<MultiPoly>& gens,
                                       const GaloisGroup& group);

inline constexpr long kProductCap = 4096;

struct ProductSet {
    std::vector<MultiPoly> polys;
    bool capped = false;  // only the diagonal products were emitted
};

/// All cross-conjugate products, one factor per group element, deduplicated.
/// Past the cap, only the diagonal products (a single generator index across
/// all group elements) are produced and `capped` is set.
ProductSet products_H(const ConjugateSystem& cs, long cap = kProductCap);

/// For each h, the nonleading coefficients of prod_tau (t - h^tau): rational
/// polynomials whose radical cuts out the completion. Throws when a
/// coefficient fails to be rational (the group was not Galois over Q).
std::vector<MultiPoly> invariant_coefficients_G(const ConjugateSystem& cs,
                                                const std::vector<MultiPoly>& H);

struct PolyCompletion {
    MultiPoly g_star;    // prod_sigma g^sigma, rational coefficients
    MultiPoly g_bullet;  // squarefree part, canonical normalization
};

PolyCompletion galois_complete_polynomial(const MultiPoly& g, const GaloisGroup& group);

/// Product of the pairwise distinct completions of the given factors: the
/// principal generator of the zero ideal of the union hypersurface.
MultiPoly zero_ideal_geometric_hypersurface(const std::vector<MultiPoly>& factors,
                                            const GaloisGroup& group);

/// true iff each sigma-image system generates the same ideal over the tower.
bool g_invariance_check(const std::vector<MultiPoly>& gens, const GaloisGroup& group);

struct Clustering {
    std::vector<std::vector<FieldElement>> factors;  // monic, coeffs low..high (constant..x^{d-1})
    bool complete = false;                           // every root accounted for
};

/// Group the roots of a rational univariate f into monic E-coefficient factors
/// of degree <= max_block (1 or 2); nullopt when the search is inconclusive.
std::optional<Clustering> clustering_over_intermediate(const std::vector<Rational>& f,
                                                       const TowerPtr& E,
                                                       int max_block = 2,
                                                       mpfr_prec_t prec = 512);

}  // namespace kgeo
