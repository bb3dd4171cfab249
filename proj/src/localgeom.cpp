#include "kgeo/localgeom.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace kgeo {

namespace {

using FMatrix = std::vector<std::vector<FieldElement>>;

// Row echelon over the tower (in place); returns the rank.
int echelon(FMatrix& m) {
    if (m.empty()) return 0;
    const int cols = static_cast<int>(m.front().size());
    int rank = 0;
    for (int col = 0; col < cols && rank < static_cast<int>(m.size()); ++col) {
        int piv = -1;
        for (int i = rank; i < static_cast<int>(m.size()); ++i)
            if (!m[i][col].is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        FieldElement inv = m[rank][col].inv();
        for (int j = col; j < cols; ++j) m[rank][j] = m[rank][j] * inv;
        for (int i = 0; i < static_cast<int>(m.size()); ++i) {
            if (i == rank || m[i][col].is_zero()) continue;
            FieldElement f = m[i][col];
            for (int j = col; j < cols; ++j) m[i][j] = m[i][j] - f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

FMatrix gradient_at(const std::vector<MultiPoly>& gens, const AlgebraicPoint& a) {
    FMatrix m;
    for (const auto& g : gens) {
        std::vector<FieldElement> row;
        for (const auto& d : g.gradient()) row.push_back(d.evaluate(a.coords));
        m.push_back(std::move(row));
    }
    return m;
}

void require_on_zero_set(const std::vector<MultiPoly>& gens, const AlgebraicPoint& a) {
    for (const auto& g : gens)
        if (!g.evaluate(a.coords).is_zero())
            throw std::invalid_argument("point does not lie in the zero set");
}

// Dense Q-coordinates of a tower element.
std::vector<Rational> dense(const FieldElement& x) {
    const TowerPtr& tf = x.owner();
    std::vector<Rational> v(tf->dimension(), Rational(0));
    for (const auto& [e, q] : x.coords()) v[tf->basis_index(e)] = q;
    return v;
}

// One rational solution of (columns) * lambda = target, if any.
std::optional<std::vector<Rational>> solve_q(const std::vector<std::vector<Rational>>& columns,
                                             const std::vector<Rational>& target) {
    const int rows = static_cast<int>(target.size());
    const int ncols = static_cast<int>(columns.size());
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(ncols + 1, Rational(0)));
    for (int j = 0; j < ncols; ++j)
        for (int i = 0; i < rows; ++i) m[i][j] = columns[j][i];
    for (int i = 0; i < rows; ++i) m[i][ncols] = target[i];
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < ncols && rank < rows; ++col) {
        int piv = -1;
        for (int i = rank; i < rows; ++i)
            if (sgn(m[i][col]) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        Rational inv = 1 / m[rank][col];
        for (int j = col; j <= ncols; ++j) m[rank][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == rank || sgn(m[i][col]) == 0) continue;
            Rational f = m[i][col];
            for (int j = col; j <= ncols; ++j) m[i][j] -= f * m[rank][j];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (int i = rank; i < rows; ++i)
        if (sgn(m[i][ncols]) != 0) return std::nullopt;
    std::vector<Rational> sol(ncols, Rational(0));
    for (int i = 0; i < rank; ++i) sol[pivot_col[i]] = m[i][ncols];
    return sol;
}

}  // namespace

std::vector<MultiPoly> point_ideal_generators(const AlgebraicPoint& a, const RingPtr& ring) {
    const TowerPtr& tf = a.owner;
    const int n = static_cast<int>(a.coords.size());
    if (ring->nvars() != n) throw std::invalid_argument("ring arity mismatch");
    if (!ring->over_rationals())
        throw std::invalid_argument("point ideal generators live over the rationals");
    const long D = tf->dimension();
    std::vector<MultiPoly> out;
    // Monomial basis of Q(a_1..a_i) built incrementally: monomials in the
    // first i variables paired with their values at the point.
    std::vector<std::pair<Mono, FieldElement>> span{{Mono(n, 0), tf->one()}};
    for (int i = 0; i < n; ++i) {
        const FieldElement& ai = a.coords[i];
        std::vector<FieldElement> powers{tf->one()};
        std::optional<std::vector<Rational>> sol;
        int deg = 0;
        for (int d = 1; d <= D && !sol; ++d) {
            powers.push_back(powers.back() * ai);
            std::vector<std::vector<Rational>> cols;
            for (int m = 0; m < d; ++m)
                for (const auto& [mono, val] : span) {
                    (void)mono;
                    cols.push_back(dense(val * powers[m]));
                }
            sol = solve_q(cols, dense(powers[d]));
            deg = d;
        }
        if (!sol) throw std::logic_error("no algebraic relation found within the tower degree");
        // f_i = x_i^deg - sum lambda * mono * x_i^m.
        std::map<Mono, FieldElement> terms;
        Mono lead(n, 0);
        lead[i] = deg;
        terms.emplace(std::move(lead), TowerField::rationals()->one());
        std::size_t idx = 0;
        for (int m = 0; m < deg; ++m)
            for (const auto& [mono, val] : span) {
                (void)val;
                const Rational& lam = (*sol)[idx++];
                if (sgn(lam) != 0) {
                    Mono mm = mono;
                    mm[i] += m;
                    auto it = terms.find(mm);
                    if (it == terms.end())
                        terms.emplace(std::move(mm),
                                      TowerField::rationals()->from_rational(-lam));
                    else
                        it->second = it->second - TowerField::rationals()->from_rational(lam);
                }
            }
        out.emplace_back(ring, std::move(terms));
        // Extend the span basis by powers of a_i below deg.
        std::vector<std::pair<Mono, FieldElement>> next;
        for (int m = 0; m < deg; ++m)
            for (const auto& [mono, val] : span) {
                Mono mm = mono;
                mm[i] += m;
                next.emplace_back(std::move(mm), val * powers[m]);
            }
        span = std::move(next);
    }
    return out;
}

int rank_at_point(const std::vector<MultiPoly>& gens, const AlgebraicPoint& a) {
    require_on_zero_set(gens, a);
    FMatrix m = gradient_at(gens, a);
    return echelon(m);
}

std::vector<std::vector<FieldElement>> tangent_space(const std::vector<MultiPoly>& gens,
                                                     const AlgebraicPoint& a) {
    require_on_zero_set(gens, a);
    const int n = gens.empty() ? static_cast<int>(a.coords.size())
                               : gens.front().ring()->nvars();
    FMatrix m = gradient_at(gens, a);
    int rank = echelon(m);
    // Pivot columns of the reduced matrix.
    std::vector<int> pivots;
    std::vector<bool> is_pivot(n, false);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < n; ++j)
            if (!m[i][j].is_zero()) {
                pivots.push_back(j);
                is_pivot[j] = true;
                break;
            }
    std::vector<std::vector<FieldElement>> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<FieldElement> v(n, a.owner->zero());
        v[free] = a.owner->one();
        for (int i = 0; i < rank; ++i) v[pivots[i]] = -m[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

MultiPoly minor_det(const std::vector<std::vector<MultiPoly>>& jac,
                    const std::vector<int>& rows, const std::vector<int>& cols,
                    const RingPtr& ring) {
    const int k = static_cast<int>(rows.size());
    if (k == 0) return MultiPoly::constant(ring, Rational(1));
    // Laplace expansion along the first row (minor sizes stay tiny here).
    MultiPoly det = MultiPoly::zero(ring);
    for (int j = 0; j < k; ++j) {
        std::vector<int> sub_rows(rows.begin() + 1, rows.end());
        std::vector<int> sub_cols;
        for (int l = 0; l < k; ++l)
            if (l != j) sub_cols.push_back(cols[l]);
        MultiPoly cof = jac[rows[0]][cols[j]] * minor_det(jac, sub_rows, sub_cols, ring);
        det = (j % 2 == 0) ? det + cof : det - cof;
    }
    return det;
}

void combinations(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    if (k == 0) {
        f(c);
        return;
    }
    while (true) {
        f(c);
        int i = k - 1;
        while (i >= 0 && c[i] == n - k + i) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
}

}  // namespace

int embedding_dimension(const std::vector<MultiPoly>& gens,
                        const std::vector<AlgebraicPoint>& samples,
                        bool use_generic_rank) {
    if (gens.empty()) {
        if (samples.empty()) throw std::invalid_argument("no generators and no samples");
        return static_cast<int>(samples.front().coords.size());
    }
    const RingPtr& ring = gens.front().ring();
    const int n = ring->nvars();
    if (use_generic_rank) {
        std::vector<std::vector<MultiPoly>> jac;
        for (const auto& g : gens) jac.push_back(g.gradient());
        const int m = static_cast<int>(jac.size());
        Ideal I(ring, gens);
        int generic_rank = 0;
        for (int r = std::min(m, n); r >= 1 && generic_rank == 0; --r) {
            bool escaped = false;
            combinations(m, r, [&](const std::vector<int>& rows) {
                if (escaped) return;
                combinations(n, r, [&](const std::vector<int>& cols) {
                    if (escaped) return;
                    MultiPoly d = minor_det(jac, rows, cols, ring);
                    if (!d.is_zero() && !radical_membership(d, I)) escaped = true;
                });
            });
            if (escaped) generic_rank = r;
        }
        return n - generic_rank;
    }
    int best = 0;
    for (const auto& a : samples) best = std::max(best, n - rank_at_point(gens, a));
    return best;
}

Verdict jacobian_regularity_verdict(const std::vector<MultiPoly>& gens,
                                    const AlgebraicPoint& a, int e,
                                    const std::vector<MultiPoly>& candidates,
                                    const MultiPoly& h) {
    Verdict v;
    require_on_zero_set(gens, a);
    if (h.evaluate(a.coords).is_zero())
        throw std::invalid_argument("denominator vanishes at the point");
    const int n = static_cast<int>(a.coords.size());
    const RingPtr ring =
        gens.empty() ? (candidates.empty() ? h.ring() : candidates.front().ring())
                     : gens.front().ring();
    Ideal I(ring, gens);
    for (const auto& c : candidates)
        if (!ideal_membership(c, I)) {
            v.note = "candidate outside the ideal";
            return v;
        }
    FMatrix cm = gradient_at(candidates, a);
    int crank = candidates.empty() ? 0 : echelon(cm);
    v.ranks.push_back(crank);
    if (crank == n - e) {
        Ideal C(ring, candidates);
        bool local = true;
        for (const auto& g : gens)
            if (!radical_membership(g * h, C)) {
                local = false;
                break;
            }
        if (local) {
            v.outcome = Verdict::Proven;
            return v;
        }
        v.note = "local-coincidence certificate not established";
        return v;
    }
    // Refutation: the tangent space is strictly larger than the dimension of
    // the variety at the point, so the local ring cannot be regular.
    int full_rank = rank_at_point(gens, a);
    v.ranks.push_back(full_rank);
    if (n - full_rank > e && krull_dimension(I) <= e) {
        v.outcome = Verdict::Refuted;
        v.note = "tangent dimension exceeds the local dimension";
        return v;
    }
    v.note = "candidate rank short of n-e and no refutation certificate";
    return v;
}

Ideal sing_hypersurface(const MultiPoly& f) {
    std::vector<MultiPoly> gens{f};
    for (const auto& d : f.gradient()) gens.push_back(d);
    return Ideal(f.ring(), std::move(gens));
}

Ideal sing_irreducible(const std::vector<MultiPoly>& gens, int d) {
    if (gens.empty()) throw std::invalid_argument("empty generator list");
    const RingPtr& ring = gens.front().ring();
    const int n = ring->nvars();
    const int m = static_cast<int>(gens.size());
    const int k = n - d;
    std::vector<std::vector<MultiPoly>> jac;
    for (const auto& g : gens) jac.push_back(g.gradient());
    std::vector<MultiPoly> out = gens;
    if (k <= std::min(m, n) && k >= 1) {
        combinations(m, k, [&](const std::vector<int>& rows) {
            combinations(n, k, [&](const std::vector<int>& cols) {
                MultiPoly det = minor_det(jac, rows, cols, ring);
                if (!det.is_zero()) out.push_back(det);
            });
        });
    } else if (k > std::min(m, n)) {
        // Rank can never reach n-d: everything is singular by this test.
        // Keep just the ideal itself.
    }
    return Ideal(ring, std::move(out));
}

SingDecomposition sing_reducible(const std::vector<std::pair<Ideal, int>>& components) {
    if (components.empty()) throw std::invalid_argument("no components");
    int top = components.front().second;
    for (const auto& [I, d] : components) top = std::max(top, d);
    std::vector<Ideal> pieces;
    std::vector<const Ideal*> top_dim;
    for (const auto& [I, d] : components) {
        if (d == top) {
            pieces.push_back(sing_irreducible(I.generators(), d));
            top_dim.push_back(&I);
        } else {
            pieces.push_back(I);
        }
    }
    for (std::size_t i = 0; i < top_dim.size(); ++i)
        for (std::size_t j = i + 1; j < top_dim.size(); ++j) {
            std::vector<MultiPoly> sum = top_dim[i]->generators();
            for (const auto& g : top_dim[j]->generators()) sum.push_back(g);
            pieces.emplace_back(top_dim[i]->ring(), std::move(sum));
        }
    Ideal combined = pieces.front();
    for (std::size_t i = 1; i < pieces.size(); ++i)
        combined = intersect_ideals(combined, pieces[i]);
    return SingDecomposition{std::move(pieces), std::move(combined)};
}

DifferentialResult differential(const std::vector<MultiPoly>& p, const MultiPoly& q,
                                const std::vector<MultiPoly>& x_gens,
                                const std::vector<MultiPoly>& y_gens,
                                const AlgebraicPoint& a) {
    DifferentialResult out;
    require_on_zero_set(x_gens, a);
    FieldElement qa = q.evaluate(a.coords);
    if (qa.is_zero()) throw std::invalid_argument("denominator vanishes at the point");
    const TowerPtr& tf = a.owner;
    std::vector<FieldElement> fa;
    for (const auto& pi : p) fa.push_back(pi.evaluate(a.coords) * qa.inv());
    for (const auto& g : y_gens)
        if (!g.evaluate(fa).is_zero())
            throw std::invalid_argument("image point escapes the target zero set");
    // Rows q(a)^{-2} (q(a) grad p_i(a) - p_i(a) grad q(a)).
    FieldElement qinv2 = (qa * qa).inv();
    std::vector<FieldElement> gq;
    for (const auto& d : q.gradient()) gq.push_back(d.evaluate(a.coords));
    for (std::size_t i = 0; i < p.size(); ++i) {
        FieldElement pa = p[i].evaluate(a.coords);
        std::vector<FieldElement> row;
        auto gp = p[i].gradient();
        for (std::size_t j = 0; j < gp.size(); ++j)
            row.push_back((qa * gp[j].evaluate(a.coords) - pa * gq[j]) * qinv2);
        out.matrix.push_back(std::move(row));
    }
    // Well-definedness over Q|Q: every coordinate of a lies in the Q-algebra
    // generated by the coordinates of f(a) (closure by span linear algebra).
    std::vector<std::vector<Rational>> span_vecs{dense(tf->one())};
    std::vector<FieldElement> span_elems{tf->one()};
    auto in_span = [&](const FieldElement& x) {
        return static_cast<bool>(solve_q(span_vecs, dense(x)));
    };
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& v : fa)
            for (std::size_t i = 0; i < span_elems.size(); ++i) {
                FieldElement prod = span_elems[i] * v;
                if (!in_span(prod)) {
                    span_vecs.push_back(dense(prod));
                    span_elems.push_back(prod);
                    grew = true;
                }
            }
    }
    bool contained = true;
    for (const auto& c : a.coords)
        if (!in_span(c)) contained = false;
    if (!contained) {
        out.well_defined.outcome = Verdict::Refuted;
        out.well_defined.note = "a coordinate of the point escapes Q[f(a)]";
        return out;
    }
    // The differential must carry the source tangent space into the target's.
    std::vector<std::vector<FieldElement>> ygrads;
    for (const auto& g : y_gens) {
        std::vector<FieldElement> row;
        for (const auto& d : g.gradient()) row.push_back(d.evaluate(fa));
        ygrads.push_back(std::move(row));
    }
    for (const auto& w : tangent_space(x_gens, a)) {
        std::vector<FieldElement> img;
        for (const auto& row : out.matrix) {
            FieldElement s = tf->zero();
            for (std::size_t j = 0; j < row.size(); ++j) s = s + row[j] * w[j];
            img.push_back(std::move(s));
        }
        for (const auto& row : ygrads) {
            FieldElement s = tf->zero();
            for (std::size_t j = 0; j < row.size(); ++j) s = s + row[j] * img[j];
            if (!s.is_zero()) {
                out.well_defined.outcome = Verdict::Refuted;
                out.well_defined.note = "tangent image escapes the target tangent space";
                return out;
            }
        }
    }
    out.well_defined.outcome = Verdict::Proven;
    return out;
}

}  // namespace kgeo
