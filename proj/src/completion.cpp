#include "kgeo/completion.hpp"

#include <algorithm>
#include <stdexcept>

#include "kgeo/factor.hpp"

namespace kgeo {

namespace {

// Scale to leading (lex) coefficient 1 so conjugates compare canonically.
MultiPoly monic_lex(const MultiPoly& f) {
    if (f.is_zero()) return f;
    return f.scaled(f.leading_term_lex().second.inv());
}

bool all_rational(const MultiPoly& f) {
    for (const auto& [m, c] : f.terms()) {
        (void)m;
        if (!c.is_rational()) return false;
    }
    return true;
}

MultiPoly to_rational_ring(const MultiPoly& f) {
    return f.to_ring(PolyRing::make(f.ring()->vars, TowerField::rationals()));
}

void push_unique(std::vector<MultiPoly>& out, const MultiPoly& f) {
    for (const auto& g : out)
        if (g == f) return;
    out.push_back(f);
}

}  // namespace

ConjugateSystem build_conjugate_system(const std::vector<MultiPoly>& gens,
                                       const GaloisGroup& group) {
    ConjugateSystem cs{group.owner(), group, gens, {}};
    for (const auto& g : gens)
        if (g.ring()->field != group.owner())
            throw std::invalid_argument("generator coefficients outside the group's field");
    cs.systems.reserve(group.elements().size());
    for (const auto& sigma : group.elements()) {
        std::vector<MultiPoly> sys;
        sys.reserve(gens.size());
        for (const auto& g : gens) sys.push_back(g.conjugate(sigma));
        cs.systems.push_back(std::move(sys));
    }
    return cs;
}

ProductSet products_H(const ConjugateSystem& cs, long cap) {
    ProductSet out;
    const long r = static_cast<long>(cs.base_generators.size());
    const long d = static_cast<long>(cs.systems.size());
    if (r == 0 || d == 0) return out;
    // r^d with overflow guard.
    long total = 1;
    for (long k = 0; k < d && !out.capped; ++k) {
        if (total > cap / r + 1) out.capped = true;
        total *= r;
        if (total > cap) out.capped = true;
    }
    if (out.capped) {
        for (long i = 0; i < r; ++i) {
            MultiPoly p = MultiPoly::constant(cs.base_generators.front().ring(), Rational(1));
            for (long k = 0; k < d; ++k) p = p * cs.systems[k][i];
            push_unique(out.polys, monic_lex(p));
        }
        return out;
    }
    std::vector<long> choice(d, 0);
    while (true) {
        MultiPoly p = MultiPoly::constant(cs.base_generators.front().ring(), Rational(1));
        for (long k = 0; k < d; ++k) p = p * cs.systems[k][choice[k]];
        push_unique(out.polys, monic_lex(p));
        long k = 0;
        while (k < d && ++choice[k] == r) choice[k++] = 0;
        if (k == d) break;
    }
    return out;
}

std::vector<MultiPoly> invariant_coefficients_G(const ConjugateSystem& cs,
                                                const std::vector<MultiPoly>& H) {
    std::vector<MultiPoly> out;
    for (const auto& h : H) {
        const RingPtr& ring = h.ring();
        // P_h(t) = prod_tau (t - h^tau), coefficients in t kept low..high.
        std::vector<MultiPoly> coeffs{MultiPoly::constant(ring, Rational(1))};
        for (const auto& tau : cs.group.elements()) {
            MultiPoly htau = h.conjugate(tau);
            std::vector<MultiPoly> next(coeffs.size() + 1, MultiPoly::zero(ring));
            for (std::size_t k = 0; k < coeffs.size(); ++k) {
                next[k + 1] = next[k + 1] + coeffs[k];
                next[k] = next[k] - coeffs[k] * htau;
            }
            coeffs = std::move(next);
        }
        for (std::size_t k = 0; k + 1 < coeffs.size(); ++k) {
            if (coeffs[k].is_zero()) continue;
            if (!all_rational(coeffs[k]))
                throw std::domain_error(
                    "non-rational invariant coefficient: group is not Galois over Q");
            push_unique(out, to_rational_ring(coeffs[k]));
        }
    }
    return out;
}

PolyCompletion galois_complete_polynomial(const MultiPoly& g, const GaloisGroup& group) {
    if (g.is_constant()) throw std::invalid_argument("completion of a constant");
    MultiPoly gstar = MultiPoly::constant(g.ring(), Rational(1));
    for (const auto& sigma : group.elements()) gstar = gstar * g.conjugate(sigma);
    if (!all_rational(gstar))
        throw std::domain_error("conjugate product has non-rational coefficients");
    MultiPoly q = to_rational_ring(gstar);
    return PolyCompletion{q, squarefree_part(q)};
}

MultiPoly zero_ideal_geometric_hypersurface(const std::vector<MultiPoly>& factors,
                                            const GaloisGroup& group) {
    if (factors.empty()) throw std::invalid_argument("no factors supplied");
    std::vector<MultiPoly> bullets;
    for (const auto& g : factors)
        push_unique(bullets, galois_complete_polynomial(g, group).g_bullet);
    MultiPoly prod = bullets.front();
    for (std::size_t i = 1; i < bullets.size(); ++i) prod = prod * bullets[i];
    return normalize_q(prod);
}

bool g_invariance_check(const std::vector<MultiPoly>& gens, const GaloisGroup& group) {
    if (gens.empty()) return true;
    Ideal base(gens.front().ring(), gens);
    for (const auto& sigma : group.elements()) {
        std::vector<MultiPoly> image;
        image.reserve(gens.size());
        for (const auto& g : gens) image.push_back(g.conjugate(sigma));
        if (!ideal_equal(base, Ideal(gens.front().ring(), std::move(image)))) return false;
    }
    return true;
}

namespace {

// Remainder of monic-divisor division of f (coeffs low..high over E) by the
// monic divisor d; true when the remainder vanishes.
bool monic_divides(const std::vector<FieldElement>& f, const std::vector<FieldElement>& d) {
    std::vector<FieldElement> r = f;
    const std::size_t dd = d.size() - 1;  // divisor degree
    while (r.size() > dd) {
        FieldElement lead = r.back();
        std::size_t off = r.size() - 1 - dd;
        if (!lead.is_zero())
            for (std::size_t k = 0; k < dd; ++k) r[off + k] = r[off + k] - lead * d[k];
        r.pop_back();
    }
    return std::all_of(r.begin(), r.end(), [](const FieldElement& c) { return c.is_zero(); });
}

}  // namespace

std::optional<Clustering> clustering_over_intermediate(const std::vector<Rational>& f_in,
                                                       const TowerPtr& E, int max_block,
                                                       mpfr_prec_t prec) {
    QPoly f = qp_squarefree_part(qp_trim(f_in));
    const int deg = qp_degree(f);
    if (deg <= 0) return std::nullopt;
    // Make monic over Q.
    for (auto& c : f) c /= f[deg];
    std::vector<FieldElement> fe;
    fe.reserve(f.size());
    for (const auto& c : f) fe.push_back(E->from_rational(c));

    std::vector<Cplx> roots = complex_roots(f, prec);
    std::vector<Cplx> gens = numeric_generators(E, prec);
    std::vector<bool> used(roots.size(), false);
    Clustering out;

    // Linear blocks first.
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (used[i]) continue;
        auto x = fit_in_field(roots[i], E, prec);
        if (x && eval_poly_at(f, *x).is_zero()) {
            out.factors.push_back({-*x, E->one()});
            used[i] = true;
        }
    }
    if (max_block >= 2) {
        for (std::size_t i = 0; i < roots.size(); ++i) {
            if (used[i]) continue;
            for (std::size_t j = i + 1; j < roots.size(); ++j) {
                if (used[j]) continue;
                Cplx s = roots[i] + roots[j];
                Cplx p = roots[i] * roots[j];
                auto se = fit_in_field(s, E, prec);
                auto pe = fit_in_field(p, E, prec);
                if (!se || !pe) continue;
                std::vector<FieldElement> quad{*pe, -*se, E->one()};
                if (!monic_divides(fe, quad)) continue;
                out.factors.push_back(std::move(quad));
                used[i] = used[j] = true;
                break;
            }
        }
    }
    out.complete = std::all_of(used.begin(), used.end(), [](bool b) { return b; });
    if (out.factors.empty()) return std::nullopt;
    return out;
}

}  // namespace kgeo
