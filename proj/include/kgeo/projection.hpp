#pragma once

#include <optional>
#include <vector>

#include "kgeo/localgeom.hpp"

namespace kgeo {

/// Linear projection pi_A(x', x'') = x' - A x'' from n coordinates onto the
/// first r, with A an r x (n-r) rational matrix.
struct ProjectionSpec {
    int n = 0;
    int r = 0;
    std::vector<std::vector<Rational>> A;  // row-major, r rows, n-r columns

    void validate() const;
};

/// Image of a point: x' - A x''.
std::vector<FieldElement> apply_projection(const ProjectionSpec& spec,
                                           const std::vector<FieldElement>& point);

/// Coordinate change x' -> x' + A x'' applied to every generator; after this
/// shear, pi_A becomes the plain projection onto the first r coordinates.
std::vector<MultiPoly> shear_generators(const ProjectionSpec& spec,
                                        const std::vector<MultiPoly>& gens);

/// Eliminate the last variable, returning an ideal in the remaining ones.
/// `had_monic` (when given) reports whether some generator is monic in the
/// last variable, which is the guarantee that the image is closed.
Ideal monic_project(const Ideal& I, bool* had_monic = nullptr);

/// H must be homogeneous in n+1 variables with the homogenizing variable
/// first. True when the projective closure misses the apex set {x0 = 0,
/// x' = A x''}: after substituting, every x'' variable lies in the radical.
bool apex_avoidance(const Ideal& H, const ProjectionSpec& spec);

/// Shear by A, then eliminate the trailing n-r variables; the result lives in
/// a fresh ring on the first r variable names.
Ideal generic_project(const Ideal& I, const ProjectionSpec& spec);

/// Deterministic search for a matrix passing apex_avoidance for the given
/// homogeneous closure: random rational entries of bounded height, seeded.
std::optional<ProjectionSpec> find_generic_matrix(const Ideal& H, int n, int r,
                                                  unsigned seed = 1,
                                                  int max_attempts = 64,
                                                  int height = 10);

/// Proven when pi_A separates every sample pair and the constant differential
/// (I_r | -A) is injective on the tangent space at each sample. The verdict is
/// sample-scoped: it never claims global biregularity.
Verdict biregular_samples_verdict(const Ideal& I, const ProjectionSpec& spec,
                                  const std::vector<AlgebraicPoint>& samples);

}  // namespace kgeo
