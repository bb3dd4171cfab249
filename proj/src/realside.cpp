#include "kgeo/realside.hpp"

#include <algorithm>
#include <stdexcept>

#include "kgeo/factor.hpp"

namespace kgeo {

namespace {

int sign_variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

}  // namespace

int sturm_real_root_count(const std::vector<Rational>& f_in) {
    QPoly f = qp_squarefree_part(qp_trim(f_in));
    int d = qp_degree(f);
    if (d <= 0) return 0;
    std::vector<QPoly> chain{f, qp_derivative(f)};
    while (qp_degree(chain.back()) > 0) {
        auto [q, r] = qp_divmod(chain[chain.size() - 2], chain.back());
        (void)q;
        r = qp_trim(r);
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    // Signs at -inf and +inf from leading terms.
    std::vector<int> neg, pos;
    for (const auto& p : chain) {
        int dg = qp_degree(p);
        if (dg < 0) continue;
        int lead = sgn(p[dg]);
        pos.push_back(lead);
        neg.push_back(dg % 2 == 0 ? lead : -lead);
    }
    return sign_variations(neg) - sign_variations(pos);
}

std::pair<MultiPoly, MultiPoly> split_real_imag(const MultiPoly& f) {
    const TowerPtr& tf = f.ring()->field;
    int k = tf->imaginary_unit_level();
    if (k < 0) throw std::domain_error("tower has no imaginary unit generator");
    for (int l = 0; l < tf->num_levels(); ++l)
        if (l != k && tf->level_is_complex(l))
            throw std::domain_error("tower has a complex generator besides i");
    std::map<Mono, FieldElement> at, bt;
    for (const auto& [m, c] : f.terms()) {
        CoordMap ca, cb;
        for (const auto& [e, q] : c.coords()) {
            if (e[k] == 0) {
                ca.emplace(e, q);
            } else {
                Expo er = e;
                er[k] = 0;
                cb.emplace(std::move(er), q);
            }
        }
        if (!ca.empty()) at.emplace(m, FieldElement(tf, std::move(ca)));
        if (!cb.empty()) bt.emplace(m, FieldElement(tf, std::move(cb)));
    }
    return {MultiPoly(f.ring(), std::move(at)), MultiPoly(f.ring(), std::move(bt))};
}

std::vector<MultiPoly> underlying_real_structure(const std::vector<MultiPoly>& gens) {
    if (gens.empty()) return {};
    const RingPtr& r = gens.front().ring();
    const TowerPtr& tf = r->field;
    int k = tf->imaginary_unit_level();
    if (k < 0) throw std::domain_error("tower has no imaginary unit generator");
    const int n = r->nvars();
    std::vector<std::string> vars;
    for (int j = 0; j < n; ++j) vars.push_back("x" + std::to_string(j + 1));
    for (int j = 0; j < n; ++j) vars.push_back("y" + std::to_string(j + 1));
    RingPtr doubled = PolyRing::make(std::move(vars), tf);
    MultiPoly iconst = MultiPoly::constant(doubled, tf->generator(k));
    std::vector<MultiPoly> images;
    for (int j = 0; j < n; ++j)
        images.push_back(MultiPoly::variable(doubled, j) +
                         iconst * MultiPoly::variable(doubled, n + j));
    std::vector<MultiPoly> out;
    for (const auto& g : gens) {
        auto [a, b] = split_real_imag(g.substitute(images));
        if (!a.is_zero()) out.push_back(std::move(a));
        if (!b.is_zero()) out.push_back(std::move(b));
    }
    return out;
}

RealSystem real_galois_completion(const ConjugateSystem& cs) {
    RealSystem out;
    for (const auto& sys : cs.systems) {
        std::vector<RealPair> pairs;
        for (const auto& g : sys) {
            auto [a, b] = split_real_imag(g);
            pairs.push_back(RealPair{std::move(a), std::move(b)});
        }
        bool seen = false;
        for (const auto& prev : out.systems) {
            if (prev.size() != pairs.size()) continue;
            bool eq = true;
            for (std::size_t i = 0; i < pairs.size() && eq; ++i)
                eq = prev[i].a == pairs[i].a && prev[i].b == pairs[i].b;
            if (eq) {
                seen = true;
                break;
            }
        }
        if (!seen) out.systems.push_back(std::move(pairs));
    }
    return out;
}

int real_dim_linear(const std::vector<MultiPoly>& forms, int n) {
    if (forms.empty()) return n;
    const RingPtr& r = forms.front().ring();
    const TowerPtr& tf = r->field;
    // Rows: [coefficients of x_1..x_n | constant].
    std::vector<std::vector<FieldElement>> rows;
    for (const auto& f : forms) {
        if (f.total_degree() > 1) throw std::invalid_argument("nonlinear form");
        std::vector<FieldElement> row(n + 1, tf->zero());
        for (const auto& [m, c] : f.terms()) {
            int var = -1;
            for (int j = 0; j < n; ++j)
                if (m[j] == 1) var = j;
            row[var < 0 ? n : var] = c;
        }
        rows.push_back(std::move(row));
    }
    int rank = 0;
    for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
        int piv = -1;
        for (std::size_t i = rank; i < rows.size(); ++i)
            if (!rows[i][col].is_zero()) {
                piv = static_cast<int>(i);
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        FieldElement inv = rows[rank][col].inv();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(i) == rank || rows[i][col].is_zero()) continue;
            FieldElement factor = rows[i][col] * inv;
            for (int j = col; j <= n; ++j)
                rows[i][j] = rows[i][j] - factor * rows[rank][j];
        }
        ++rank;
    }
    for (std::size_t i = rank; i < rows.size(); ++i)
        if (!rows[i][n].is_zero()) return -1;
    return n - rank;
}

int sign_at_point(const MultiPoly& f, const std::vector<Rational>& point) {
    const TowerPtr& tf = f.ring()->field;
    std::vector<FieldElement> pt;
    pt.reserve(point.size());
    for (const auto& q : point) pt.push_back(tf->from_rational(q));
    FieldElement v = f.evaluate(pt);
    if (v.is_zero()) return 0;
    return v.sign();
}

namespace {

// Deterministic rational sample points ordered by height: integer grid shells
// of max-norm h = 0, 1, 2, ..., interleaved with half-integer shells.
class PointGrid {
  public:
    PointGrid(int n, int height, long budget) : n_(n), height_(height), budget_(budget) {}

    template <typename F>
    bool search(F&& visit) {  // visit returns true to stop; returns whether stopped
        long used = 0;
        for (int h = 0; h <= height_; ++h)
            for (int denom : {1, 2}) {
                if (h == 0 && denom == 2) continue;
                std::vector<int> idx(n_, -h);
                while (true) {
                    bool on_shell = false;
                    for (int v : idx)
                        if (std::abs(v) == h) on_shell = true;
                    if (on_shell || h == 0) {
                        std::vector<Rational> pt;
                        pt.reserve(n_);
                        bool integral = true;
                        for (int v : idx) {
                            Rational q(v, denom);
                            q.canonicalize();
                            if (q.get_den() != 1) integral = false;
                            pt.push_back(std::move(q));
                        }
                        if (denom == 1 || !integral) {
                            if (++used > budget_) return false;
                            if (visit(pt)) return true;
                        }
                    }
                    int k = 0;
                    while (k < n_ && ++idx[k] > h) idx[k++] = -h;
                    if (k == n_) break;
                }
            }
        return false;
    }

  private:
    int n_;
    int height_;
    long budget_;
};

// All exponents even and all coefficients positive (plus a positive constant
// term): certifies strict positivity on R^n.
bool positive_even_form(const MultiPoly& f) {
    bool has_const = false;
    for (const auto& [m, c] : f.terms()) {
        if (!c.is_real() || c.sign() <= 0) return false;
        bool constant = true;
        for (int e : m) {
            if (e % 2 != 0) return false;
            if (e != 0) constant = false;
        }
        if (constant) has_const = true;
    }
    return has_const;
}

// Definite binary quadratic A*u^2 + B*u*v + C*v^2 (homogeneous in exactly two
// variables): when 4AC - B^2 > 0 and A > 0 the only real zero is u = v = 0,
// and the zero set is cut out by the linear system {u + (B/2A) v, v}.
struct DefiniteQuadratic {
    int u, v;                      // variable indices
    FieldElement A, B, C;
};
std::optional<DefiniteQuadratic> definite_binary_quadratic(const MultiPoly& f) {
    const RingPtr& r = f.ring();
    std::vector<int> active;
    for (int j = 0; j < r->nvars(); ++j)
        if (f.depends_on(j)) active.push_back(j);
    if (active.size() != 2 || f.total_degree() != 2) return std::nullopt;
    int u = active[0], v = active[1];
    DefiniteQuadratic q{u, v, r->field->zero(), r->field->zero(), r->field->zero()};
    for (const auto& [m, c] : f.terms()) {
        int eu = m[u], ev = m[v];
        if (eu + ev != 2) return std::nullopt;  // not homogeneous
        if (eu == 2)
            q.A = c;
        else if (ev == 2)
            q.C = c;
        else
            q.B = c;
    }
    if (!q.A.is_real() || !q.B.is_real() || !q.C.is_real()) return std::nullopt;
    FieldElement disc =
        q.A * q.C * q.A.owner()->from_rational(Rational(4)) - q.B * q.B;
    if (q.A.sign() > 0 && (disc.is_zero() ? false : disc.sign() > 0)) return q;
    if (q.A.sign() < 0 && !disc.is_zero() && disc.sign() > 0) {
        q.A = -q.A;
        q.B = -q.B;
        q.C = -q.C;
        return q;
    }
    return std::nullopt;
}

// Classification of a single factor's sign behaviour on R^n.
enum class FactorClass { SignChange, NoRealZeroOrThin, Inconclusive };

FactorClass classify_sign_change(const MultiPoly& g, long budget, int height,
                                 Verdict::SignWitness* w) {
    // Linear real factors always change sign.
    if (g.total_degree() == 1) {
        // Produce an explicit witness along a nonzero gradient direction.
        const int n = g.ring()->nvars();
        for (int j = 0; j < n; ++j) {
            MultiPoly d = g.derivative(j);
            if (d.is_zero()) continue;
            for (long t = 1; t <= 4 * static_cast<long>(height) + 4; ++t) {
                std::vector<Rational> p(n, Rational(0)), m(n, Rational(0));
                p[j] = Rational(t);
                m[j] = Rational(-t);
                int sp = sign_at_point(g, p), sm = sign_at_point(g, m);
                if (sp > 0 && sm < 0) {
                    if (w) *w = {p, m};
                    return FactorClass::SignChange;
                }
                if (sp < 0 && sm > 0) {
                    if (w) *w = {m, p};
                    return FactorClass::SignChange;
                }
            }
        }
    }
    if (positive_even_form(g)) return FactorClass::NoRealZeroOrThin;
    if (definite_binary_quadratic(g)) return FactorClass::NoRealZeroOrThin;
    // Univariate over Q: Sturm decides emptiness of the real zero set.
    {
        std::vector<int> active;
        for (int j = 0; j < g.ring()->nvars(); ++j)
            if (g.depends_on(j)) active.push_back(j);
        if (active.size() <= 1) {
            bool rational = true;
            for (const auto& [m, c] : g.terms()) {
                (void)m;
                if (!c.is_rational()) rational = false;
            }
            if (rational && !active.empty() &&
                sturm_real_root_count(to_qpoly(g, active[0])) == 0)
                return FactorClass::NoRealZeroOrThin;
            if (!rational && active.size() == 1 && g.degree_in(active[0]) == 2) {
                // Quadratic over a real tower: no real root iff B^2-4AC < 0.
                FieldElement A = g.ring()->field->zero(), B = A, C = A;
                for (const auto& [m, c] : g.terms()) {
                    if (m[active[0]] == 2)
                        A = c;
                    else if (m[active[0]] == 1)
                        B = c;
                    else
                        C = c;
                }
                if (A.is_real() && B.is_real() && C.is_real()) {
                    FieldElement disc =
                        B * B - A * C * A.owner()->from_rational(Rational(4));
                    if (!disc.is_zero() && disc.sign() < 0)
                        return FactorClass::NoRealZeroOrThin;
                }
            }
        }
    }
    // Grid search for a sign change.
    std::vector<Rational> pos_pt, neg_pt;
    bool have_pos = false, have_neg = false;
    PointGrid grid(g.ring()->nvars(), height, budget);
    grid.search([&](const std::vector<Rational>& pt) {
        int s = sign_at_point(g, pt);
        if (s > 0 && !have_pos) {
            pos_pt = pt;
            have_pos = true;
        } else if (s < 0 && !have_neg) {
            neg_pt = pt;
            have_neg = true;
        }
        return have_pos && have_neg;
    });
    if (have_pos && have_neg) {
        if (w) *w = {pos_pt, neg_pt};
        return FactorClass::SignChange;
    }
    return FactorClass::Inconclusive;
}

bool all_real_coeffs(const MultiPoly& f) {
    for (const auto& [m, c] : f.terms()) {
        (void)m;
        if (!c.is_real()) return false;
    }
    return true;
}

// Scale to leading (lex) coefficient 1.
MultiPoly monic_lex(const MultiPoly& f) {
    return f.is_zero() ? f : f.scaled(f.leading_term_lex().second.inv());
}

bool check_factorization(const MultiPoly& f, const std::vector<MultiPoly>& factors) {
    if (factors.empty()) return false;
    MultiPoly prod = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) prod = prod * factors[i];
    // f must equal the product up to a scalar of the tower.
    auto q = mp_try_divide(f.to_ring(prod.ring()), prod);
    return q && q->is_constant();
}

// Group tower factors into blocks with rational product: the Q-irreducible
// factors of f. Assumes unique factorization of the square-free f.
std::optional<std::vector<MultiPoly>> rational_blocks(const std::vector<MultiPoly>& factors) {
    const std::size_t s = factors.size();
    if (s > 16) return std::nullopt;
    std::vector<bool> used(s, false);
    std::vector<MultiPoly> blocks;
    for (std::size_t first = 0; first < s; ++first) {
        if (used[first]) continue;
        bool placed = false;
        // Subsets containing `first`, drawn from unused indices, by size.
        std::vector<std::size_t> pool;
        for (std::size_t i = first + 1; i < s; ++i)
            if (!used[i]) pool.push_back(i);
        for (std::size_t card = 0; card <= pool.size() && !placed; ++card) {
            std::vector<std::size_t> comb(card);
            for (std::size_t i = 0; i < card; ++i) comb[i] = i;
            while (true) {
                MultiPoly prod = factors[first];
                for (std::size_t i : comb) prod = prod * factors[pool[i]];
                MultiPoly m = monic_lex(prod);
                bool rational = true;
                for (const auto& [mono, c] : m.terms()) {
                    (void)mono;
                    if (!c.is_rational()) rational = false;
                }
                if (rational) {
                    blocks.push_back(normalize_q(m.to_ring(
                        PolyRing::make(m.ring()->vars, TowerField::rationals()))));
                    used[first] = true;
                    for (std::size_t i : comb) used[pool[i]] = true;
                    placed = true;
                    break;
                }
                if (card == 0) break;
                std::size_t i = card - 1;
                while (true) {
                    if (comb[i] != pool.size() - card + i) break;
                    if (i == 0) goto next_card;
                    --i;
                }
                ++comb[i];
                for (std::size_t j = i + 1; j < card; ++j) comb[j] = comb[j - 1] + 1;
                continue;
            next_card:
                break;
            }
        }
        if (!placed) return std::nullopt;
    }
    return blocks;
}

}  // namespace

Verdict k_geometric_verdict(const MultiPoly& f, const std::vector<MultiPoly>& factors,
                            long sample_budget, int height) {
    Verdict v;
    if (f.is_zero() || f.is_constant()) {
        v.outcome = Verdict::Refuted;
        v.note = "constant polynomial";
        return v;
    }
    MultiPoly fn = normalize_q(f);
    if (!(squarefree_part(fn) == fn)) {
        v.outcome = Verdict::Refuted;
        v.note = "not square-free";
        return v;
    }
    // Q-irreducible blocks: from the supplied absolute factorization, or from
    // exact factorization in the univariate / small bivariate cases, or the
    // polynomial itself when it is certified irreducible.
    std::vector<MultiPoly> blocks;
    if (!factors.empty()) {
        if (!check_factorization(fn, factors)) {
            v.note = "factorization does not reproduce the polynomial";
            return v;
        }
        auto b = rational_blocks(factors);
        if (!b) {
            v.note = "could not group factors into rational blocks";
            return v;
        }
        blocks = std::move(*b);
    } else {
        int nv = 0;
        for (int j = 0; j < f.ring()->nvars(); ++j)
            if (f.depends_on(j)) ++nv;
        std::optional<MPFactorization> fac;
        if (nv <= 1)
            fac = univariate_factor_q(fn);
        else if (nv == 2 && fn.total_degree() <= 6)
            fac = small_multivariate_factor_q(fn);
        if (!fac) {
            v.note = "no factorization available";
            return v;
        }
        for (const auto& mf : fac->factors) blocks.push_back(mf.factor);
    }
    for (const auto& g : blocks) {
        Verdict::SignWitness w;
        switch (classify_sign_change(g, sample_budget, height, &w)) {
            case FactorClass::SignChange:
                v.sign_witnesses.push_back(std::move(w));
                break;
            case FactorClass::NoRealZeroOrThin:
                v.outcome = Verdict::Refuted;
                v.note = "factor without a sign change: " + g.to_string();
                return v;
            case FactorClass::Inconclusive:
                v.note = "sign-change search budget exhausted for " + g.to_string();
                return v;
        }
    }
    v.outcome = Verdict::Proven;
    return v;
}

Verdict k_reliable_verdict(const MultiPoly& f, const std::vector<MultiPoly>& factors,
                           long sample_budget, int height) {
    Verdict v;
    MultiPoly fn = normalize_q(f);
    if (!(squarefree_part(fn) == fn)) {
        v.outcome = Verdict::Refuted;
        v.note = "not square-free";
        return v;
    }
    if (!check_factorization(fn, factors)) {
        v.note = "factorization does not reproduce the polynomial";
        return v;
    }
    const int n = f.ring()->nvars();
    for (const auto& g : factors) {
        if (all_real_coeffs(g)) {
            Verdict::SignWitness w;
            switch (classify_sign_change(g, sample_budget, height, &w)) {
                case FactorClass::SignChange:
                    v.sign_witnesses.push_back(std::move(w));
                    break;
                case FactorClass::NoRealZeroOrThin:
                    v.outcome = Verdict::Refuted;
                    v.note = "real factor with thin real zero set: " + g.to_string();
                    return v;
                case FactorClass::Inconclusive:
                    v.note = "sign-change search budget exhausted for " + g.to_string();
                    return v;
            }
        } else {
            auto [a, b] = split_real_imag(g);
            if (a.total_degree() <= 1 && b.total_degree() <= 1) {
                int d = real_dim_linear({a, b}, n);
                v.ranks.push_back(d);
                if (d < n - 1) {
                    v.outcome = Verdict::Refuted;
                    v.note = "conjugate-pair factor drops dimension: " + g.to_string();
                    return v;
                }
            } else {
                v.note = "nonlinear complex factor: " + g.to_string();
                return v;
            }
        }
    }
    v.outcome = Verdict::Proven;
    return v;
}

namespace {
std::optional<std::vector<MultiPoly>> real_trace_forms(const MultiPoly& g);
}  // namespace

BadSetResult bad_set(const MultiPoly& f, const std::vector<MultiPoly>& factors) {
    BadSetResult out;
    MultiPoly fn = normalize_q(f);
    if (!check_factorization(fn, factors)) {
        out.verdict.note = "factorization does not reproduce the polynomial";
        return out;
    }
    const int n = f.ring()->nvars();
    bool all_classified = true;
    auto push_component = [&](std::vector<MultiPoly> sys) {
        // canonical form, so that distinct presentations of one locus merge
        sys = buchberger(sys, TermOrder::lex()).basis;
        for (auto& g : sys) g = monic_lex(g);
        std::sort(sys.begin(), sys.end(),
                  [](const MultiPoly& x, const MultiPoly& y) { return x < y; });
        for (const auto& prev : out.components)
            if (prev == sys) return;
        out.components.push_back(std::move(sys));
    };
    for (const auto& g : factors) {
        if (all_real_coeffs(g)) {
            if (g.total_degree() <= 1) continue;  // hyperplane: full dimension
            if (auto q = definite_binary_quadratic(g)) {
                // A(u + B/(2A) v)^2 + ((4AC-B^2)/(4A)) v^2: zero set is the
                // linear subspace {u + B/(2A) v = 0, v = 0}.
                MultiPoly u = MultiPoly::variable(g.ring(), q->u);
                MultiPoly vv = MultiPoly::variable(g.ring(), q->v);
                FieldElement half_ratio =
                    q->B * (q->A * q->A.owner()->from_rational(Rational(2))).inv();
                std::vector<MultiPoly> sys{u + vv.scaled(half_ratio), vv};
                if (real_dim_linear(sys, n) < n - 1) push_component(std::move(sys));
                continue;
            }
            Verdict::SignWitness w;
            if (classify_sign_change(g, 20000, 50, &w) == FactorClass::SignChange)
                continue;  // hypersurface factor of full dimension n-1
            all_classified = false;
        } else {
            auto traces = real_trace_forms(g);
            bool linear = traces.has_value();
            if (linear)
                for (const auto& t : *traces) linear = linear && t.total_degree() <= 1;
            if (linear) {
                std::vector<MultiPoly> sys;
                for (auto& t : *traces)
                    if (!t.is_zero()) sys.push_back(t);
                if (real_dim_linear(sys, n) < n - 1) push_component(std::move(sys));
            } else {
                all_classified = false;
            }
        }
    }
    out.verdict.outcome = all_classified ? Verdict::Proven : Verdict::Unknown;
    if (!all_classified) out.verdict.note = "unclassified factor encountered";
    return out;
}

namespace {

// Real-trace forms of g over a tower whose complex part is a single degree-2
// generator theta: g = U0 + U1*theta with U0, U1 real, and {1, theta} is
// R-linearly independent, so real zeros of g are exactly the common zeros of
// U0 and U1. Returns nullopt when the tower's complex part is not of this
// shape.
std::optional<std::vector<MultiPoly>> real_trace_forms(const MultiPoly& g) {
    if (all_real_coeffs(g)) return std::vector<MultiPoly>{g};
    const TowerPtr& tf = g.ring()->field;
    int k = -1;
    for (int l = 0; l < tf->num_levels(); ++l)
        if (tf->level_is_complex(l)) {
            if (k >= 0) return std::nullopt;
            k = l;
        }
    if (k < 0 || tf->level(k).degree != 2) return std::nullopt;
    std::map<Mono, FieldElement> u0, u1;
    for (const auto& [m, c] : g.terms()) {
        CoordMap c0, c1;
        for (const auto& [e, q] : c.coords()) {
            if (e[k] == 0) {
                c0.emplace(e, q);
            } else {
                Expo er = e;
                er[k] = 0;
                c1.emplace(std::move(er), q);
            }
        }
        if (!c0.empty()) u0.emplace(m, FieldElement(tf, std::move(c0)));
        if (!c1.empty()) u1.emplace(m, FieldElement(tf, std::move(c1)));
    }
    std::vector<MultiPoly> out;
    MultiPoly a(g.ring(), std::move(u0)), b(g.ring(), std::move(u1));
    if (!a.is_zero()) out.push_back(std::move(a));
    if (!b.is_zero()) out.push_back(std::move(b));
    return out;
}

}  // namespace

Verdict defined_over_K_verdict(const ConjugateSystem& cs, long sample_budget, int height) {
    Verdict v;
    const int n =
        cs.base_generators.empty() ? 0 : cs.base_generators.front().ring()->nvars();
    for (const auto& sys : cs.systems) {
        Ideal I(sys.front().ring(), sys);
        int cdim = krull_dimension(I);
        std::optional<int> rdim;
        bool real_sys = true, linear = true;
        for (const auto& g : sys) {
            if (!all_real_coeffs(g)) real_sys = false;
            if (g.total_degree() > 1) linear = false;
        }
        if (linear) {
            std::vector<MultiPoly> forms;
            bool ok = true;
            for (const auto& g : sys) {
                auto traces = real_trace_forms(g);
                if (!traces) {
                    ok = false;
                    break;
                }
                for (auto& t : *traces) forms.push_back(std::move(t));
            }
            if (ok) rdim = real_dim_linear(forms, n);
        } else if (real_sys && sys.size() == 1 && cdim == n - 1) {
            Verdict::SignWitness w;
            auto cls = classify_sign_change(sys.front(), sample_budget, height, &w);
            if (cls == FactorClass::SignChange) {
                rdim = n - 1;
                v.sign_witnesses.push_back(std::move(w));
            } else if (cls == FactorClass::NoRealZeroOrThin) {
                // Real zero set empty or strictly thinner than n-1; either way
                // it cannot reach the complex dimension n-1 (n >= 1).
                v.outcome = Verdict::Refuted;
                v.ranks = {cdim, -1};
                v.note = "conjugate hypersurface with no sign change";
                return v;
            }
        }
        if (!rdim) {
            v.note = "real dimension not certifiable for a conjugate system";
            return v;
        }
        v.ranks.push_back(cdim);
        v.ranks.push_back(*rdim);
        if (*rdim != cdim) {
            v.outcome = Verdict::Refuted;
            v.note = "conjugate system drops real dimension";
            return v;
        }
    }
    v.outcome = Verdict::Proven;
    return v;
}

Verdict rational_points_in_conjugates(const ConjugateSystem& cs, int height, long budget) {
    Verdict v;
    if (cs.base_generators.empty()) {
        v.outcome = Verdict::Proven;
        return v;
    }
    const RingPtr& r = cs.base_generators.front().ring();
    const int n = r->nvars();
    // Rational zeros of a tower-coefficient system are the common rational
    // zeros of all Q-coefficient components, evaluated in plain rational
    // arithmetic.
    std::vector<MultiPoly> comps;
    for (const auto& g : cs.base_generators)
        for (const auto& c : g.coefficient_components())
            if (!c.is_zero()) comps.push_back(c);
    // Candidate coordinate values: all rationals of height <= `height` when
    // the full grid fits the budget, else the integer range.
    std::vector<Rational> vals{Rational(0)};
    for (int p = 1; p <= height; ++p)
        for (int q = 1; q <= height; ++q) {
            if (gcd(Int(p), Int(q)) != 1) continue;
            vals.emplace_back(p, q);
            vals.emplace_back(-p, q);
        }
    double full = 1;
    for (int j = 0; j < n; ++j) full *= static_cast<double>(vals.size());
    if (full > static_cast<double>(budget)) {
        vals.clear();
        for (int p = -height; p <= height; ++p) vals.emplace_back(p);
    }
    std::vector<std::size_t> idx(n, 0);
    std::vector<Rational> pt(n, Rational(0));
    long zero_count = 0;
    while (true) {
        for (int j = 0; j < n; ++j) pt[j] = vals[idx[j]];
        bool is_zero = true;
        for (const auto& c : comps) {
            std::vector<FieldElement> fe;
            for (const auto& q : pt) fe.push_back(TowerField::rationals()->from_rational(q));
            if (!c.evaluate(fe).is_zero()) {
                is_zero = false;
                break;
            }
        }
        if (is_zero) {
            ++zero_count;
            std::vector<FieldElement> fe;
            for (const auto& q : pt) fe.push_back(r->field->from_rational(q));
            for (const auto& sys : cs.systems)
                for (const auto& g : sys)
                    if (!g.evaluate(fe).is_zero()) {
                        v.outcome = Verdict::Refuted;
                        v.sign_witnesses.push_back({pt, {}});
                        v.note = "rational zero escapes a conjugate system";
                        return v;
                    }
        }
        int j = 0;
        while (j < n && ++idx[j] == vals.size()) idx[j++] = 0;
        if (j == n) break;
    }
    v.outcome = Verdict::Proven;
    v.ranks.push_back(static_cast<int>(zero_count));
    return v;
}

}  // namespace kgeo
