#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kgeo/factor.hpp"
#include "kgeo/tower.hpp"

namespace kgeo {

struct PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// Monomial exponent vector, one entry per ring variable.
using Mono = std::vector<int>;

struct PolyRing {
    std::vector<std::string> vars;
    TowerPtr field;

    static RingPtr make(std::vector<std::string> vars, TowerPtr field);
    int var_index(const std::string& name) const;  // -1 when absent
    int nvars() const { return static_cast<int>(vars.size()); }
    bool over_rationals() const { return field->is_rational(); }
};

/// Sparse multivariate polynomial over Q or a tower field.
class MultiPoly {
  public:
    MultiPoly() = default;
    MultiPoly(RingPtr ring, std::map<Mono, FieldElement> terms);

    static MultiPoly zero(RingPtr ring);
    static MultiPoly constant(RingPtr ring, const Rational& c);
    static MultiPoly constant(RingPtr ring, const FieldElement& c);
    static MultiPoly variable(RingPtr ring, int i);

    const RingPtr& ring() const { return ring_; }
    const std::map<Mono, FieldElement>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    FieldElement constant_value() const;  // requires is_constant
    int total_degree() const;             // -1 for zero
    int degree_in(int var) const;
    bool depends_on(int var) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scaled(const FieldElement& c) const;
    MultiPoly scaled(const Rational& c) const;
    MultiPoly pow(int e) const;
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }
    bool operator<(const MultiPoly& o) const;  // structural, for containers

    /// Leading term under descending lexicographic order.
    std::pair<Mono, FieldElement> leading_term_lex() const;

    MultiPoly derivative(int var) const;
    std::vector<MultiPoly> gradient() const;

    /// Exact evaluation; the point's field must contain the coefficients
    /// (equal tower, or rational coefficients).
    FieldElement evaluate(const std::vector<FieldElement>& point) const;
    /// Substitutes polynomials for the variables (same ring for the images).
    MultiPoly substitute(const std::vector<MultiPoly>& images) const;

    /// Coefficientwise automorphism image g^sigma.
    MultiPoly conjugate(const Automorphism& sigma) const;

    /// Unique components f_j over the monomial Q-basis of the coefficient
    /// field, in basis order: f = sum_j basis_j * f_j.
    std::vector<MultiPoly> coefficient_components() const;

    /// Re-reads the polynomial in another ring with the same variable names
    /// (e.g. Q coefficients into a tower, or into a ring with more
    /// variables).
    MultiPoly to_ring(const RingPtr& target) const;

    /// x0^(deg f) * f(x/x0) in a ring with the fresh variable prepended.
    MultiPoly homogenize(const std::string& new_var) const;

    std::string to_string() const;

  private:
    RingPtr ring_;
    std::map<Mono, FieldElement> terms_;
};

/// Exact quotient; throws (with the remainder in the message) when the
/// division is not exact.
MultiPoly mp_divexact(const MultiPoly& f, const MultiPoly& g);
/// Quotient when g | f, nullopt otherwise.
std::optional<MultiPoly> mp_try_divide(const MultiPoly& f, const MultiPoly& g);

/// Integer-primitive form with positive leading coefficient under
/// descending lex; the canonical representative of the K*-orbit. Rational
/// coefficients only.
MultiPoly normalize_q(const MultiPoly& f);

/// GCD over Q via primitive pseudo-remainder sequences, normalized.
MultiPoly mv_gcd(const MultiPoly& f, const MultiPoly& g);

/// f / gcd(f, df/dx1, ..., df/dxn), normalized; rational coefficients.
MultiPoly squarefree_part(const MultiPoly& f);

struct MPFactor {
    MultiPoly factor;
    int multiplicity = 1;
    bool irreducibility_certified = false;
};

struct MPFactorization {
    Rational unit = Rational(1);
    std::vector<MPFactor> factors;
};

/// Exact factorization of a univariate polynomial over Q (any single
/// variable of the ring may be the active one).
MPFactorization univariate_factor_q(const MultiPoly& f);

struct VerifyResult {
    bool accepted = false;
    std::string reason;
    /// Per factor: irreducibility certified (univariate/linear/small case)
    /// or recorded as assumed.
    std::vector<bool> certified;
};

/// Accepts a claimed factorization iff the product reconstructs f exactly,
/// factors are non-constant and pairwise non-associated.
VerifyResult verify_factorization(const MultiPoly& f, const Rational& unit,
                                  const std::vector<std::pair<MultiPoly, int>>& claim);

/// Kronecker-substitution factorization for <= 2 variables and small degree.
std::optional<MPFactorization> small_multivariate_factor_q(const MultiPoly& f,
                                                           int degree_budget = 6);

/// Parses the canonical polynomial grammar: rational literals, + - * ^,
/// parentheses, ring variables and field generators by name.
MultiPoly parse_poly(const RingPtr& ring, const std::string& text);

/// Structural ring equality: same coefficient field and variable list.
bool same_ring(const RingPtr& a, const RingPtr& b);

/// Extracts dense univariate rational coefficients; requires f univariate
/// in the given variable with rational coefficients.
QPoly to_qpoly(const MultiPoly& f, int var);
MultiPoly from_qpoly(const RingPtr& ring, int var, const QPoly& coeffs);

}  // namespace kgeo
