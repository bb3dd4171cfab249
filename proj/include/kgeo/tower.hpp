#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kgeo/interval.hpp"
#include "kgeo/rational.hpp"

namespace kgeo {

class TowerField;
using TowerPtr = std::shared_ptr<const TowerField>;

/// Exponent tuple over the tower generators (one entry per level).
using Expo = std::vector<int>;

/// Coordinates of a tower element over the monomial basis.
using CoordMap = std::map<Expo, Rational>;

class FieldElement;

/// One level of a tower presentation: a generator with a monic minimal
/// polynomial whose coefficients live in the sub-tower below it.
struct TowerLevel {
    std::string name;
    int degree = 0;
    /// Coefficients c_0..c_{degree-1} of the minimal polynomial
    /// t^degree + c_{degree-1} t^{degree-1} + ... + c_0, each a coordinate
    /// map supported on levels strictly below this one.
    std::vector<CoordMap> minpoly;
    /// Isolating box selecting one root; absent for unembedded towers.
    std::optional<Box> box;
    /// Exact rational point embedding (e.g. i = 0 + 1*i); implies box.
    bool exact_point = false;
};

class TowerField : public std::enable_shared_from_this<TowerField> {
  public:
    /// The trivial tower: the rationals themselves.
    static TowerPtr rationals();

    /// Builds and validates a tower from its levels. Throws on a non-monic
    /// level, an empty isolating interval, or a real box whose endpoints do
    /// not straddle a sign change of the minimal polynomial.
    static TowerPtr make(std::vector<TowerLevel> levels);

    int num_levels() const { return static_cast<int>(levels_.size()); }
    const TowerLevel& level(int i) const { return levels_.at(i); }
    bool is_rational() const { return levels_.empty(); }

    /// Q-dimension D = prod d_i.
    long dimension() const { return dimension_; }

    /// All monomial-basis exponent tuples in mixed-radix order.
    const std::vector<Expo>& basis() const { return basis_; }
    long basis_index(const Expo& e) const;

    int level_index(const std::string& name) const;  // -1 when absent

    /// True when level i carries a genuinely complex embedding.
    bool level_is_complex(int i) const;

    /// Index of a generator with minimal polynomial t^2 + 1, or -1.
    int imaginary_unit_level() const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_rational(const Rational& r) const;
    FieldElement generator(int i) const;

    /// Reduces a raw coordinate map to canonical form (all exponents below
    /// the level degrees) in place.
    void reduce(CoordMap& coords) const;

    CoordMap mul_raw(const CoordMap& a, const CoordMap& b) const;

  private:
    std::vector<TowerLevel> levels_;
    long dimension_ = 1;
    std::vector<Expo> basis_;

    TowerField() = default;
};

/// An exact element of a tower field, in canonical reduced coordinates.
class FieldElement {
  public:
    FieldElement() = default;
    FieldElement(TowerPtr owner, CoordMap coords);

    const TowerPtr& owner() const { return owner_; }
    const CoordMap& coords() const { return coords_; }

    bool is_zero() const { return coords_.empty(); }
    bool is_rational() const;
    /// The rational value; requires is_rational().
    Rational rational_value() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement scaled(const Rational& r) const;
    FieldElement inv() const;
    FieldElement pow(long e) const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
    bool operator<(const FieldElement& o) const;  // structural, for containers

    /// True when every nonzero coordinate avoids complex-embedded levels.
    bool is_real() const;

    /// Exact sign of a real element; requires a real embedding.
    int sign() const;

    /// Monic least-degree rational polynomial annihilating the element,
    /// coefficients c_0..c_d with c_d = 1.
    std::vector<Rational> minimal_polynomial() const;

    /// Interval evaluation against the given per-level boxes.
    Box enclosure(const std::vector<Box>& level_boxes) const;

    std::string to_string() const;

  private:
    TowerPtr owner_;
    CoordMap coords_;

    void check_owner(const FieldElement& o) const;
};

/// Coefficientwise field automorphism given by generator images.
class Automorphism {
  public:
    /// Validates that each image is a root of the corresponding minimal
    /// polynomial; throws otherwise.
    Automorphism(std::string name, TowerPtr owner, std::vector<FieldElement> images);

    const std::string& name() const { return name_; }
    const TowerPtr& owner() const { return owner_; }
    const std::vector<FieldElement>& images() const { return images_; }

    FieldElement operator()(const FieldElement& x) const;
    Automorphism compose(const Automorphism& inner) const;  // this after inner
    bool same_map(const Automorphism& o) const;
    bool is_identity() const;

    static Automorphism identity(TowerPtr owner);

  private:
    std::string name_;
    TowerPtr owner_;
    std::vector<FieldElement> images_;
};

class GaloisGroup {
  public:
    /// Verifies identity membership, closure under composition and
    /// distinctness; with galois_over_q also |G| = D. Throws on failure.
    static GaloisGroup verify(TowerPtr owner, std::vector<Automorphism> elements,
                              bool galois_over_q = true);

    const TowerPtr& owner() const { return owner_; }
    const std::vector<Automorphism>& elements() const { return elements_; }
    std::size_t order() const { return elements_.size(); }

    static GaloisGroup trivial(TowerPtr owner);

  private:
    TowerPtr owner_;
    std::vector<Automorphism> elements_;
    GaloisGroup(TowerPtr o, std::vector<Automorphism> e)
        : owner_(std::move(o)), elements_(std::move(e)) {}
};

/// Evaluates a univariate rational polynomial (coefficients c_0..c_d) at a
/// tower element.
FieldElement eval_poly_at(const std::vector<Rational>& coeffs, const FieldElement& x);

/// Exact sign of a univariate rational polynomial at a rational point.
int sign_at(const std::vector<Rational>& coeffs, const Rational& x);

}  // namespace kgeo
