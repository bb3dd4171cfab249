#include "kgeo/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kgeo {

namespace {

int tdeg(const Mono& m, int from = 0, int to = -1) {
    if (to < 0) to = static_cast<int>(m.size());
    int s = 0;
    for (int i = from; i < to; ++i) s += m[i];
    return s;
}

// a > b under grevlex on the slice [from, to).
int grevlex_cmp(const Mono& a, const Mono& b, int from, int to) {
    int da = tdeg(a, from, to), db = tdeg(b, from, to);
    if (da != db) return da > db ? 1 : -1;
    for (int i = to - 1; i >= from; --i)
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
}

int lex_cmp(const Mono& a, const Mono& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
}

}  // namespace

bool TermOrder::greater(const Mono& a, const Mono& b) const {
    switch (kind) {
        case Lex:
            return lex_cmp(a, b) > 0;
        case GrevLex:
            return grevlex_cmp(a, b, 0, static_cast<int>(a.size())) > 0;
        case Block: {
            int c = grevlex_cmp(a, b, 0, split);
            if (c != 0) return c > 0;
            return grevlex_cmp(a, b, split, static_cast<int>(a.size())) > 0;
        }
    }
    return false;
}

std::pair<Mono, FieldElement> leading_term(const MultiPoly& f, const TermOrder& ord) {
    if (f.is_zero()) throw std::logic_error("leading term of zero");
    auto it = f.terms().begin();
    auto best = it;
    for (++it; it != f.terms().end(); ++it)
        if (ord.greater(it->first, best->first)) best = it;
    return {best->first, best->second};
}

namespace {

bool mono_divides(const Mono& a, const Mono& b) {  // a | b
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Mono mono_lcm(const Mono& a, const Mono& b) {
    Mono m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
    return m;
}

MultiPoly mono_poly(const RingPtr& ring, const Mono& m, const FieldElement& c) {
    std::map<Mono, FieldElement> t;
    if (!c.is_zero()) t.emplace(m, c);
    return MultiPoly(ring, std::move(t));
}

}  // namespace

MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& G,
                      const TermOrder& ord) {
    std::vector<std::pair<Mono, FieldElement>> lts;
    lts.reserve(G.size());
    for (const auto& g : G) lts.push_back(leading_term(g, ord));
    MultiPoly rem = MultiPoly::zero(f.ring());
    MultiPoly work = f;
    while (!work.is_zero()) {
        auto [wm, wc] = leading_term(work, ord);
        bool reduced = false;
        for (std::size_t i = 0; i < G.size(); ++i) {
            if (!mono_divides(lts[i].first, wm)) continue;
            Mono q = wm;
            for (std::size_t j = 0; j < q.size(); ++j) q[j] -= lts[i].first[j];
            FieldElement c = wc * lts[i].second.inv();
            work = work - mono_poly(f.ring(), q, c) * G[i];
            reduced = true;
            break;
        }
        if (!reduced) {
            MultiPoly lt = mono_poly(f.ring(), wm, wc);
            rem = rem + lt;
            work = work - lt;
        }
    }
    return rem;
}

GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, const TermOrder& ord) {
    GroebnerBasis out{ord, {}};
    std::vector<MultiPoly> G;
    for (const auto& g : gens)
        if (!g.is_zero()) G.push_back(g);
    if (G.empty()) return out;
    RingPtr ring = G.front().ring();

    struct Pair {
        std::size_t i, j;
        Mono lcm;
        int deg;
    };
    std::vector<Pair> pairs;
    auto push_pairs = [&](std::size_t j) {
        auto [mj, cj] = leading_term(G[j], ord);
        (void)cj;
        for (std::size_t i = 0; i < j; ++i) {
            auto [mi, ci] = leading_term(G[i], ord);
            (void)ci;
            Mono L = mono_lcm(mi, mj);
            pairs.push_back({i, j, L, tdeg(L)});
        }
    };
    for (std::size_t j = 0; j < G.size(); ++j) push_pairs(j);

    auto lt_of = [&](std::size_t i) { return leading_term(G[i], ord).first; };

    while (!pairs.empty()) {
        // Normal strategy: least lcm degree, ties broken by the term order on
        // lcms, then by insertion indices.
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            const Pair &a = pairs[k], &b = pairs[best];
            bool better;
            if (a.deg != b.deg)
                better = a.deg < b.deg;
            else if (a.lcm != b.lcm)
                better = !ord.greater(a.lcm, b.lcm);
            else
                better = std::tie(a.i, a.j) < std::tie(b.i, b.j);
            if (better) best = k;
        }
        Pair p = pairs[best];
        pairs.erase(pairs.begin() + static_cast<long>(best));

        Mono mi = lt_of(p.i), mj = lt_of(p.j);
        // First Buchberger criterion: coprime leading monomials.
        bool coprime = true;
        for (std::size_t k = 0; k < mi.size(); ++k)
            if (mi[k] > 0 && mj[k] > 0) coprime = false;
        if (coprime) continue;
        // Chain criterion: lt(G[l]) divides lcm and both companion pairs gone.
        bool chained = false;
        for (std::size_t l = 0; l < G.size() && !chained; ++l) {
            if (l == p.i || l == p.j) continue;
            if (!mono_divides(lt_of(l), p.lcm)) continue;
            bool il_alive = false, jl_alive = false;
            for (const Pair& q : pairs) {
                if ((q.i == std::min(l, p.i) && q.j == std::max(l, p.i))) il_alive = true;
                if ((q.i == std::min(l, p.j) && q.j == std::max(l, p.j))) jl_alive = true;
            }
            if (!il_alive && !jl_alive) chained = true;
        }
        if (chained) continue;

        auto [lmi, lci] = leading_term(G[p.i], ord);
        auto [lmj, lcj] = leading_term(G[p.j], ord);
        Mono qi = p.lcm, qj = p.lcm;
        for (std::size_t k = 0; k < qi.size(); ++k) {
            qi[k] -= lmi[k];
            qj[k] -= lmj[k];
        }
        MultiPoly spoly = mono_poly(ring, qi, lci.inv()) * G[p.i] -
                          mono_poly(ring, qj, lcj.inv()) * G[p.j];
        MultiPoly r = normal_form(spoly, G, ord);
        if (!r.is_zero()) {
            G.push_back(r);
            push_pairs(G.size() - 1);
        }
    }

    // Minimalize: drop elements whose leading term another's divides.
    std::vector<MultiPoly> minimal;
    for (std::size_t i = 0; i < G.size(); ++i) {
        Mono mi = lt_of(i);
        bool redundant = false;
        for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) continue;
            Mono mj = lt_of(j);
            if (mono_divides(mj, mi) && (mj != mi || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(G[i]);
    }
    // Reduce each element against the others and make leading coefficients 1.
    std::vector<MultiPoly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        MultiPoly r = others.empty() ? minimal[i] : normal_form(minimal[i], others, ord);
        auto [m, c] = leading_term(r, ord);
        (void)m;
        reduced.push_back(r.scaled(c.inv()));
    }
    // Deterministic output: descending leading monomials.
    std::sort(reduced.begin(), reduced.end(), [&](const MultiPoly& a, const MultiPoly& b) {
        return ord.greater(leading_term(a, ord).first, leading_term(b, ord).first);
    });
    out.basis = std::move(reduced);
    return out;
}

Ideal::Ideal(RingPtr ring, std::vector<MultiPoly> generators)
    : ring_(std::move(ring)), gens_(std::move(generators)) {
    for (const auto& g : gens_)
        if (!same_ring(g.ring(), ring_)) throw std::invalid_argument("ideal generator ring mismatch");
}

Ideal::Ideal(const Ideal& other) : ring_(other.ring_), gens_(other.gens_) {
    std::lock_guard<std::mutex> lock(other.cache_mutex_);
    cache_ = other.cache_;
}

Ideal::Ideal(Ideal&& other) noexcept
    : ring_(std::move(other.ring_)), gens_(std::move(other.gens_)) {
    std::lock_guard<std::mutex> lock(other.cache_mutex_);
    cache_ = std::move(other.cache_);
}

Ideal& Ideal::operator=(Ideal other) {
    ring_ = std::move(other.ring_);
    gens_ = std::move(other.gens_);
    cache_ = std::move(other.cache_);
    return *this;
}

const GroebnerBasis& Ideal::groebner(const TermOrder& ord) const {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = cache_.find(ord);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(ord, buchberger(gens_, ord)).first->second;
}

bool Ideal::is_unit() const {
    const auto& gb = groebner(TermOrder::grevlex()).basis;
    return gb.size() == 1 && gb.front().is_constant();
}

bool Ideal::is_zero_ideal() const { return groebner(TermOrder::grevlex()).basis.empty(); }

bool ideal_membership(const MultiPoly& f, const Ideal& I) {
    if (f.is_zero()) return true;
    const auto& gb = I.groebner(TermOrder::grevlex()).basis;
    if (gb.empty()) return false;
    return normal_form(f, gb, TermOrder::grevlex()).is_zero();
}

bool radical_membership(const MultiPoly& f, const Ideal& I) {
    if (f.is_zero()) return true;
    const RingPtr& r = I.ring();
    std::vector<std::string> vars = r->vars;
    std::string tname = "t";
    while (r->var_index(tname) >= 0 || r->field->level_index(tname) >= 0) tname += "_";
    vars.push_back(tname);
    RingPtr ext = PolyRing::make(std::move(vars), r->field);
    std::vector<MultiPoly> gens;
    for (const auto& g : I.generators()) gens.push_back(g.to_ring(ext));
    MultiPoly t = MultiPoly::variable(ext, ext->nvars() - 1);
    gens.push_back(MultiPoly::constant(ext, Rational(1)) - t * f.to_ring(ext));
    const auto gb = buchberger(gens, TermOrder::grevlex());
    return gb.basis.size() == 1 && gb.basis.front().is_constant();
}

Ideal elimination_ideal(const Ideal& I, const std::vector<bool>& keep) {
    const RingPtr& r = I.ring();
    if (static_cast<int>(keep.size()) != r->nvars())
        throw std::invalid_argument("keep mask arity mismatch");
    // Permute the eliminated variables to the front for the block order.
    std::vector<int> order;
    for (int i = 0; i < r->nvars(); ++i)
        if (!keep[i]) order.push_back(i);
    int split = static_cast<int>(order.size());
    for (int i = 0; i < r->nvars(); ++i)
        if (keep[i]) order.push_back(i);
    std::vector<std::string> pvars;
    for (int i : order) pvars.push_back(r->vars[i]);
    RingPtr perm = PolyRing::make(std::move(pvars), r->field);
    std::vector<MultiPoly> gens;
    for (const auto& g : I.generators()) gens.push_back(g.to_ring(perm));
    const auto gb = buchberger(gens, TermOrder::block(split));
    std::vector<MultiPoly> kept;
    for (const auto& g : gb.basis) {
        bool clean = true;
        for (int i = 0; i < split && clean; ++i)
            if (g.depends_on(i)) clean = false;
        if (clean) kept.push_back(g.to_ring(r));
    }
    return Ideal(r, std::move(kept));
}

Ideal intersect_ideals(const Ideal& I, const Ideal& J) {
    const RingPtr& r = I.ring();
    if (!same_ring(J.ring(), r)) throw std::invalid_argument("ideal ring mismatch");
    std::vector<std::string> vars = r->vars;
    std::string tname = "t";
    while (r->var_index(tname) >= 0 || r->field->level_index(tname) >= 0) tname += "_";
    vars.push_back(tname);
    RingPtr ext = PolyRing::make(std::move(vars), r->field);
    MultiPoly t = MultiPoly::variable(ext, ext->nvars() - 1);
    MultiPoly one_minus_t = MultiPoly::constant(ext, Rational(1)) - t;
    std::vector<MultiPoly> gens;
    for (const auto& g : I.generators()) gens.push_back(t * g.to_ring(ext));
    for (const auto& g : J.generators()) gens.push_back(one_minus_t * g.to_ring(ext));
    Ideal mixed(ext, std::move(gens));
    std::vector<bool> keep(ext->nvars(), true);
    keep.back() = false;
    Ideal elim = elimination_ideal(mixed, keep);
    std::vector<MultiPoly> back;
    for (const auto& g : elim.generators()) back.push_back(g.to_ring(r));
    return Ideal(r, std::move(back));
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
    for (const auto& g : I.generators())
        if (!ideal_membership(g, J)) return false;
    for (const auto& g : J.generators())
        if (!ideal_membership(g, I)) return false;
    return true;
}

bool radical_equal(const Ideal& I, const Ideal& J) {
    for (const auto& g : I.generators())
        if (!radical_membership(g, J)) return false;
    for (const auto& g : J.generators())
        if (!radical_membership(g, I)) return false;
    return true;
}

int krull_dimension(const Ideal& I) {
    const auto& gb = I.groebner(TermOrder::grevlex()).basis;
    if (gb.size() == 1 && gb.front().is_constant()) return -1;
    const int n = I.ring()->nvars();
    std::vector<Mono> lms;
    for (const auto& g : gb) lms.push_back(leading_term(g, TermOrder::grevlex()).first);
    // Largest variable subset S with no leading monomial supported inside S.
    int best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int card = __builtin_popcount(mask);
        if (card <= best) continue;
        bool independent = true;
        for (const Mono& m : lms) {
            bool inside = true;
            for (int i = 0; i < n && inside; ++i)
                if (m[i] > 0 && !(mask & (1u << i))) inside = false;
            if (inside) {
                independent = false;
                break;
            }
        }
        if (independent) best = card;
    }
    return best;
}

}  // namespace kgeo
