#include "kgeo/numeric.hpp"

#include <algorithm>
#include <stdexcept>

#include "kgeo/factor.hpp"

namespace kgeo {

Rational Real::to_rational(long bits) const {
    mpfr_t scaled;
    mpfr_init2(scaled, prec() + bits);
    mpfr_mul_2si(scaled, v_, bits, MPFR_RNDN);
    Int z;
    mpfr_get_z(z.get_mpz_t(), scaled, MPFR_RNDN);
    mpfr_clear(scaled);
    Int den(1);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
    Rational r(z, den);
    r.canonicalize();
    return r;
}

namespace {

Real real_from_long(long v, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si(r.get(), v, MPFR_RNDN);
    return r;
}

Real pow2(long e, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si(r.get(), 1, MPFR_RNDN);
    mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
    return r;
}

std::vector<Cplx> complex_roots_c(const std::vector<Cplx>& coeffs, mpfr_prec_t prec) {
    int d = static_cast<int>(coeffs.size()) - 1;
    if (d < 1) return {};
    Cplx lead = coeffs[d];
    std::vector<Cplx> c(coeffs);
    for (auto& x : c) x = x / lead;
    // Durand-Kerner from spiral starting points.
    std::vector<Cplx> z;
    Cplx seed{Real(Rational(4, 10), prec), Real(Rational(9, 10), prec)};
    Cplx cur{real_from_long(1, prec), Real(prec)};
    for (int i = 0; i < d; ++i) {
        cur = cur * seed;
        z.push_back(cur);
    }
    auto eval = [&](const Cplx& x) {
        Cplx acc{Real(prec), Real(prec)};
        for (int i = d; i >= 0; --i) acc = acc * x + c[i];
        return acc;
    };
    Real tol = pow2(-(static_cast<long>(prec) - 8), prec);
    for (int iter = 0; iter < 2000; ++iter) {
        Real max_delta(prec);
        for (int i = 0; i < d; ++i) {
            Cplx num = eval(z[i]);
            Cplx den{real_from_long(1, prec), Real(prec)};
            for (int j = 0; j < d; ++j)
                if (j != i) den = den * (z[i] - z[j]);
            Cplx delta = num / den;
            z[i] = z[i] - delta;
            Real m = delta.abs2();
            if (max_delta < m) max_delta = m;
        }
        if (max_delta < tol * tol) break;
    }
    return z;
}

}  // namespace

std::vector<Cplx> complex_roots(const std::vector<Rational>& coeffs, mpfr_prec_t prec) {
    std::vector<Cplx> c;
    c.reserve(coeffs.size());
    for (const auto& q : coeffs) c.push_back(Cplx{Real(q, prec), Real(prec)});
    return complex_roots_c(c, prec);
}

std::vector<Cplx> numeric_generators(const TowerPtr& tf, mpfr_prec_t prec) {
    std::vector<Cplx> gens;
    for (int i = 0; i < tf->num_levels(); ++i) {
        const TowerLevel& lv = tf->level(i);
        if (!lv.box) throw std::domain_error("numeric evaluation requires embedded tower");
        const Box& b = *lv.box;
        if (b.is_point()) {
            gens.push_back(Cplx{Real(b.re.lo, prec), Real(b.im.lo, prec)});
            continue;
        }
        std::vector<Cplx> mc;
        for (const CoordMap& c : lv.minpoly)
            mc.push_back(numeric_value(FieldElement(tf, c), gens, prec));
        mc.push_back(Cplx{real_from_long(1, prec), Real(prec)});
        std::vector<Cplx> roots = complex_roots_c(mc, prec);
        // Select the root inside the isolating box (tiny tolerance for the
        // numeric boundary case).
        Real eps = pow2(-(static_cast<long>(prec) / 2), prec);
        const Cplx* chosen = nullptr;
        for (const Cplx& r : roots) {
            Real rlo(b.re.lo, prec), rhi(b.re.hi, prec);
            Real ilo(b.im.lo, prec), ihi(b.im.hi, prec);
            if (rlo - eps < r.re && r.re < rhi + eps && ilo - eps < r.im && r.im < ihi + eps) {
                chosen = &r;
                break;
            }
        }
        if (!chosen) throw std::runtime_error("no root of the minimal polynomial in the box");
        gens.push_back(*chosen);
    }
    return gens;
}

Cplx numeric_value(const FieldElement& x, const std::vector<Cplx>& gens, mpfr_prec_t prec) {
    Cplx acc{Real(prec), Real(prec)};
    for (const auto& [e, c] : x.coords()) {
        Cplx term{Real(c, prec), Real(prec)};
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int p = 0; p < e[i]; ++p) term = term * gens[i];
        acc = acc + term;
    }
    return acc;
}

namespace {

// Textbook LLL (delta = 3/4) on integer row vectors.
void lll_reduce(std::vector<std::vector<Int>>& b) {
    const std::size_t n = b.size();
    auto dot = [](const std::vector<Int>& x, const std::vector<Int>& y) {
        Int s(0);
        for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
        return s;
    };
    std::vector<std::vector<Rational>> mu(n, std::vector<Rational>(n, Rational(0)));
    std::vector<Rational> B(n, Rational(0));
    auto gram_schmidt = [&]() {
        std::vector<std::vector<Rational>> star(n, std::vector<Rational>(b[0].size()));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < b[i].size(); ++k) star[i][k] = Rational(b[i][k]);
            for (std::size_t j = 0; j < i; ++j) {
                Rational num(0);
                for (std::size_t k = 0; k < b[i].size(); ++k)
                    num += Rational(b[i][k]) * star[j][k];
                mu[i][j] = sgn(B[j]) == 0 ? Rational(0) : num / B[j];
                for (std::size_t k = 0; k < star[i].size(); ++k)
                    star[i][k] -= mu[i][j] * star[j][k];
            }
            B[i] = Rational(0);
            for (const auto& v : star[i]) B[i] += v * v;
        }
    };
    gram_schmidt();
    (void)dot;
    std::size_t k = 1;
    const Rational delta(3, 4);
    int guard = 0;
    while (k < n && ++guard < 100000) {
        // Size reduction.
        for (std::size_t j = k; j-- > 0;) {
            Rational m = mu[k][j];
            Int r;
            // round to nearest
            Rational half = m + Rational(1, 2);
            mpz_fdiv_q(r.get_mpz_t(), half.get_num().get_mpz_t(), half.get_den().get_mpz_t());
            if (sgn(r) != 0) {
                for (std::size_t t = 0; t < b[k].size(); ++t) b[k][t] -= r * b[j][t];
                gram_schmidt();
            }
        }
        if (B[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
            ++k;
        } else {
            std::swap(b[k], b[k - 1]);
            gram_schmidt();
            if (k > 1) --k;
        }
    }
}

}  // namespace

std::optional<FieldElement> fit_in_field(const Cplx& target, const TowerPtr& tf,
                                         mpfr_prec_t prec) {
    const long D = tf->dimension();
    std::vector<Cplx> gens = numeric_generators(tf, prec);
    std::vector<Cplx> basis_vals;
    for (const Expo& e : tf->basis()) {
        CoordMap c;
        c.emplace(e, Rational(1));
        basis_vals.push_back(numeric_value(FieldElement(tf, c), gens, prec));
    }
    // Integer-relation lattice: rows [I | N*Re | N*Im] for basis values, plus
    // the (negated) target row.
    long scale_bits = (3 * static_cast<long>(prec)) / 4;
    auto scaled_int = [&](const Real& r) {
        mpfr_t t;
        mpfr_init2(t, prec + scale_bits);
        mpfr_mul_2si(t, r.get(), scale_bits, MPFR_RNDN);
        Int z;
        mpfr_get_z(z.get_mpz_t(), t, MPFR_RNDN);
        mpfr_clear(t);
        return z;
    };
    std::vector<std::vector<Int>> rows(D + 1, std::vector<Int>(D + 3, Int(0)));
    for (long i = 0; i < D; ++i) {
        rows[i][i] = 1;
        rows[i][D + 1] = scaled_int(basis_vals[i].re);
        rows[i][D + 2] = scaled_int(basis_vals[i].im);
    }
    rows[D][D] = 1;
    rows[D][D + 1] = -scaled_int(target.re);
    rows[D][D + 2] = -scaled_int(target.im);
    lll_reduce(rows);
    for (const auto& row : rows) {
        const Int& den = row[D];
        if (sgn(den) == 0) continue;
        // Residual must be tiny relative to the scale.
        Int limit(1);
        mpz_mul_2exp(limit.get_mpz_t(), limit.get_mpz_t(), scale_bits / 4);
        if (abs(row[D + 1]) > limit || abs(row[D + 2]) > limit) continue;
        CoordMap coords;
        for (long i = 0; i < D; ++i) {
            if (sgn(row[i]) == 0) continue;
            Rational c(row[i], den);
            c.canonicalize();
            coords.emplace(tf->basis()[i], std::move(c));
        }
        return FieldElement(tf, std::move(coords));
    }
    return std::nullopt;
}

std::optional<std::vector<FieldElement>> roots_in_field(const std::vector<Rational>& f,
                                                        const TowerPtr& E, mpfr_prec_t prec) {
    QPoly poly = qp_trim(f);
    if (poly.empty()) throw std::domain_error("roots of the zero polynomial");
    std::vector<FieldElement> out;
    if (qp_degree(poly) == 0) return out;
    QFactorization fac = factor_univariate_q(poly);
    const long D = E->dimension();
    bool unknown = false;
    for (const auto& [piece, mult] : fac.factors) {
        (void)mult;
        int d = qp_degree(piece);
        if (d == 1) {
            out.push_back(E->from_rational(-piece[0] / piece[1]));
            continue;
        }
        if (D % d != 0) continue;  // the degree of a root divides [E:Q]
        std::vector<Cplx> roots = complex_roots(piece, prec);
        std::vector<FieldElement> found;
        for (const Cplx& r : roots) {
            auto cand = fit_in_field(r, E, prec);
            if (!cand) continue;
            if (eval_poly_at(piece, *cand).is_zero() &&
                std::find(found.begin(), found.end(), *cand) == found.end())
                found.push_back(*cand);
        }
        // E is Galois over Q in this library, so an irreducible factor has
        // either all of its roots in E or none; anything in between means the
        // precision budget failed to resolve the factor.
        if (!found.empty() && static_cast<int>(found.size()) != d) unknown = true;
        if (found.empty()) unknown = true;
        for (auto& b : found) out.push_back(std::move(b));
    }
    if (unknown) return std::nullopt;
    return out;
}

}  // namespace kgeo
