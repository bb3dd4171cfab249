#pragma once

#include <optional>
#include <vector>

#include "kgeo/groebner.hpp"
#include "kgeo/realside.hpp"

namespace kgeo {

struct AlgebraicPoint {
    TowerPtr owner;
    std::vector<FieldElement> coords;
};

/// Generators f_1..f_n of the maximal ideal of the point: f_i in Q[x_1..x_i],
/// monic in x_i, with f_i(a_1,..,a_{i-1}, t) the minimal polynomial of a_i
/// over Q(a_1,..,a_{i-1}).
std::vector<MultiPoly> point_ideal_generators(const AlgebraicPoint& a,
                                              const RingPtr& ring);

/// Rank of the gradient matrix of the generators at the point (which must lie
/// in their common zero set).
int rank_at_point(const std::vector<MultiPoly>& gens, const AlgebraicPoint& a);

/// Kernel basis of the gradient matrix at the point: the Zariski tangent
/// space, as coordinate vectors over the point's tower.
std::vector<std::vector<FieldElement>> tangent_space(const std::vector<MultiPoly>& gens,
                                                     const AlgebraicPoint& a);

/// Max over the sample points of n - rank; with use_generic_rank, n minus the
/// generic Jacobian rank on the zero set (largest minor size escaping the
/// radical).
int embedding_dimension(const std::vector<MultiPoly>& gens,
                        const std::vector<AlgebraicPoint>& samples,
                        bool use_generic_rank = false);

/// Jacobian criterion at a point: candidates from the ideal whose gradients
/// reach rank n-e at the point, together with a localized coincidence
/// certificate g*h in rad((candidates)).
Verdict jacobian_regularity_verdict(const std::vector<MultiPoly>& gens,
                                    const AlgebraicPoint& a, int e,
                                    const std::vector<MultiPoly>& candidates,
                                    const MultiPoly& h);

/// (f, all partial derivatives): cuts out the singular locus of a geometric
/// hypersurface.
Ideal sing_hypersurface(const MultiPoly& f);

/// I + ((n-d) x (n-d) minors of the Jacobian) for an irreducible ideal of
/// dimension d.
Ideal sing_irreducible(const std::vector<MultiPoly>& gens, int d);

struct SingDecomposition {
    std::vector<Ideal> pieces;  // per-component Sing, pairwise intersections, low-dim parts
    Ideal combined;             // intersection of all pieces
};

/// Singular locus of a union from its components: Sing of each top-dimensional
/// component, pairwise intersections of top-dimensional components, and every
/// lower-dimensional component wholesale.
SingDecomposition sing_reducible(const std::vector<std::pair<Ideal, int>>& components);

struct DifferentialResult {
    std::vector<std::vector<FieldElement>> matrix;  // m x n over the tower
    Verdict well_defined;  // coordinates of a lie in Q[f(a)]; tangent mapping checked
};

/// Differential at a of the rational map x -> (p_1/q, .., p_m/q) from Z(X
/// gens) to Z(Y gens).
DifferentialResult differential(const std::vector<MultiPoly>& p, const MultiPoly& q,
                                const std::vector<MultiPoly>& x_gens,
                                const std::vector<MultiPoly>& y_gens,
                                const AlgebraicPoint& a);

}  // namespace kgeo
