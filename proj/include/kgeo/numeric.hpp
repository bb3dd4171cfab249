#pragma once

#include <mpfr.h>

#include <optional>
#include <vector>

#include "kgeo/tower.hpp"

namespace kgeo {

/// Arbitrary-precision real number (MPFR-backed, value semantics).
class Real {
  public:
    explicit Real(mpfr_prec_t prec = 256) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Real(const Rational& q, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
    }
    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
    Real& operator=(Real o) { mpfr_swap(v_, o.v_); return *this; }
    ~Real() { mpfr_clear(v_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    Real operator+(const Real& o) const { Real r(prec()); mpfr_add(r.v_, v_, o.v_, MPFR_RNDN); return r; }
    Real operator-(const Real& o) const { Real r(prec()); mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN); return r; }
    Real operator*(const Real& o) const { Real r(prec()); mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN); return r; }
    Real operator/(const Real& o) const { Real r(prec()); mpfr_div(r.v_, v_, o.v_, MPFR_RNDN); return r; }
    Real operator-() const { Real r(prec()); mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }
    Real abs() const { Real r(prec()); mpfr_abs(r.v_, v_, MPFR_RNDN); return r; }
    bool operator<(const Real& o) const { return mpfr_cmp(v_, o.v_) < 0; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    /// Nearest rational with denominator dividing 2^bits.
    Rational to_rational(long bits) const;

  private:
    mpfr_t v_;
};

struct Cplx {
    Real re, im;
    Cplx operator+(const Cplx& o) const { return {re + o.re, im + o.im}; }
    Cplx operator-(const Cplx& o) const { return {re - o.re, im - o.im}; }
    Cplx operator*(const Cplx& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Cplx operator/(const Cplx& o) const {
        Real n = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
    }
    Real abs2() const { return re * re + im * im; }
};

/// All complex roots of a rational polynomial (coefficients c_0..c_d),
/// Durand-Kerner at the given precision.
std::vector<Cplx> complex_roots(const std::vector<Rational>& coeffs, mpfr_prec_t prec);

/// Numeric values of the tower generators, selected by their isolating boxes.
std::vector<Cplx> numeric_generators(const TowerPtr& tf, mpfr_prec_t prec);

/// Numeric value of a tower element given generator values.
Cplx numeric_value(const FieldElement& x, const std::vector<Cplx>& gens, mpfr_prec_t prec);

/// LLL-based fit of a numeric value into the Q-basis of a tower field.
/// Returns a candidate element (unverified by itself); callers must verify
/// the fit exactly.
std::optional<FieldElement> fit_in_field(const Cplx& target, const TowerPtr& tf,
                                         mpfr_prec_t prec);

/// Every exact root of f (rational coefficients c_0..c_d, f != 0) lying in E;
/// nullopt when the numeric fit fails within the precision budget.
std::optional<std::vector<FieldElement>> roots_in_field(const std::vector<Rational>& f,
                                                        const TowerPtr& E,
                                                        mpfr_prec_t prec = 512);

}  // namespace kgeo
