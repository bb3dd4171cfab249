#include "kgeo/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace kgeo {

namespace {

void add_term(std::map<Mono, FieldElement>& terms, const Mono& m, const FieldElement& c) {
    if (c.is_zero()) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(m, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

// Descending lex: a beats b when the first differing exponent is larger.
bool lex_greater(const Mono& a, const Mono& b) { return a > b; }

}  // namespace

RingPtr PolyRing::make(std::vector<std::string> vars, TowerPtr field) {
    auto r = std::make_shared<PolyRing>();
    r->vars = std::move(vars);
    r->field = std::move(field);
    return r;
}

int PolyRing::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return static_cast<int>(i);
    return -1;
}

MultiPoly::MultiPoly(RingPtr ring, std::map<Mono, FieldElement> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {}

MultiPoly MultiPoly::zero(RingPtr ring) { return MultiPoly(std::move(ring), {}); }

MultiPoly MultiPoly::constant(RingPtr ring, const Rational& c) {
    return constant(ring, ring->field->from_rational(c));
}

MultiPoly MultiPoly::constant(RingPtr ring, const FieldElement& c) {
    std::map<Mono, FieldElement> t;
    if (!c.is_zero()) t.emplace(Mono(ring->nvars(), 0), c);
    return MultiPoly(std::move(ring), std::move(t));
}

MultiPoly MultiPoly::variable(RingPtr ring, int i) {
    Mono m(ring->nvars(), 0);
    m.at(i) = 1;
    std::map<Mono, FieldElement> t;
    t.emplace(std::move(m), ring->field->one());
    return MultiPoly(std::move(ring), std::move(t));
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Mono& m = terms_.begin()->first;
    return std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
}

FieldElement MultiPoly::constant_value() const {
    if (terms_.empty()) return ring_->field->zero();
    if (!is_constant()) throw std::logic_error("polynomial is not constant");
    return terms_.begin()->second;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        (void)c;
        int s = 0;
        for (int e : m) s += e;
        d = std::max(d, s);
    }
    return d;
}

int MultiPoly::degree_in(int var) const {
    int d = is_zero() ? -1 : 0;
    for (const auto& [m, c] : terms_) {
        (void)c;
        d = std::max(d, m[var]);
    }
    return d;
}

bool MultiPoly::depends_on(int var) const { return degree_in(var) > 0; }

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (!same_ring(ring_, o.ring_)) throw std::invalid_argument("polynomial ring mismatch");
    auto t = terms_;
    for (const auto& [m, c] : o.terms_) add_term(t, m, c);
    return MultiPoly(ring_, std::move(t));
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator-() const {
    std::map<Mono, FieldElement> t;
    for (const auto& [m, c] : terms_) t.emplace(m, -c);
    return MultiPoly(ring_, std::move(t));
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (!same_ring(ring_, o.ring_)) throw std::invalid_argument("polynomial ring mismatch");
    std::map<Mono, FieldElement> t;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Mono m = ma;
            for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
            add_term(t, m, ca * cb);
        }
    return MultiPoly(ring_, std::move(t));
}

MultiPoly MultiPoly::scaled(const FieldElement& c) const {
    if (c.is_zero()) return zero(ring_);
    std::map<Mono, FieldElement> t;
    for (const auto& [m, x] : terms_) t.emplace(m, x * c);
    return MultiPoly(ring_, std::move(t));
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    return scaled(ring_->field->from_rational(c));
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    MultiPoly acc = constant(ring_, Rational(1));
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return same_ring(ring_, o.ring_) && terms_ == o.terms_;
}

bool MultiPoly::operator<(const MultiPoly& o) const {
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end() && jt != o.terms_.end(); ++it, ++jt) {
        if (it->first != jt->first) return it->first < jt->first;
        if (!(it->second == jt->second)) return it->second < jt->second;
    }
    return jt != o.terms_.end();
}

std::pair<Mono, FieldElement> MultiPoly::leading_term_lex() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero");
    auto it = terms_.rbegin();  // std::map is ascending lex
    return {it->first, it->second};
}

MultiPoly MultiPoly::derivative(int var) const {
    std::map<Mono, FieldElement> t;
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Mono mm = m;
        int e = mm[var]--;
        add_term(t, mm, c.scaled(Rational(e)));
    }
    return MultiPoly(ring_, std::move(t));
}

std::vector<MultiPoly> MultiPoly::gradient() const {
    std::vector<MultiPoly> g;
    g.reserve(ring_->nvars());
    for (int i = 0; i < ring_->nvars(); ++i) g.push_back(derivative(i));
    return g;
}

FieldElement MultiPoly::evaluate(const std::vector<FieldElement>& point) const {
    if (static_cast<int>(point.size()) != ring_->nvars())
        throw std::invalid_argument("evaluation point arity mismatch");
    TowerPtr pf = point.empty() ? ring_->field : point.front().owner();
    if (pf != ring_->field && !ring_->over_rationals())
        throw std::invalid_argument("evaluation field mismatch");
    FieldElement acc = pf->zero();
    for (const auto& [m, c] : terms_) {
        FieldElement term =
            (pf == ring_->field) ? c : pf->from_rational(c.rational_value());
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0) term = term * point[i].pow(m[i]);
        acc = acc + term;
    }
    return acc;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
    if (static_cast<int>(images.size()) != ring_->nvars())
        throw std::invalid_argument("substitution arity mismatch");
    const RingPtr& target = images.empty() ? ring_ : images.front().ring();
    MultiPoly acc = zero(target);
    for (const auto& [m, c] : terms_) {
        FieldElement cc = (target->field == ring_->field)
                              ? c
                              : target->field->from_rational(c.rational_value());
        MultiPoly term = constant(target, cc);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0) term = term * images[i].pow(m[i]);
        acc = acc + term;
    }
    return acc;
}

MultiPoly MultiPoly::conjugate(const Automorphism& sigma) const {
    if (sigma.owner() != ring_->field)
        throw std::invalid_argument("automorphism field mismatch");
    std::map<Mono, FieldElement> t;
    for (const auto& [m, c] : terms_) add_term(t, m, sigma(c));
    return MultiPoly(ring_, std::move(t));
}

std::vector<MultiPoly> MultiPoly::coefficient_components() const {
    const TowerPtr& tf = ring_->field;
    RingPtr qring = PolyRing::make(ring_->vars, TowerField::rationals());
    std::vector<std::map<Mono, FieldElement>> comp(tf->dimension());
    for (const auto& [m, c] : terms_)
        for (const auto& [e, q] : c.coords())
            add_term(comp[tf->basis_index(e)], m, TowerField::rationals()->from_rational(q));
    std::vector<MultiPoly> out;
    out.reserve(comp.size());
    for (auto& t : comp) out.emplace_back(qring, std::move(t));
    return out;
}

MultiPoly MultiPoly::to_ring(const RingPtr& target) const {
    std::map<Mono, FieldElement> t;
    std::vector<int> pos(ring_->nvars());
    for (int i = 0; i < ring_->nvars(); ++i) {
        pos[i] = target->var_index(ring_->vars[i]);
        if (pos[i] < 0 && depends_on(i))
            throw std::invalid_argument("target ring lacks variable " + ring_->vars[i]);
    }
    bool same_field = target->field == ring_->field;
    for (const auto& [m, c] : terms_) {
        Mono mm(target->nvars(), 0);
        for (int i = 0; i < ring_->nvars(); ++i)
            if (pos[i] >= 0) mm[pos[i]] = m[i];
        FieldElement cc =
            same_field ? c : target->field->from_rational(c.rational_value());
        add_term(t, mm, cc);
    }
    return MultiPoly(target, std::move(t));
}

MultiPoly MultiPoly::homogenize(const std::string& new_var) const {
    std::vector<std::string> vars;
    vars.push_back(new_var);
    for (const auto& v : ring_->vars) vars.push_back(v);
    RingPtr target = PolyRing::make(std::move(vars), ring_->field);
    int d = total_degree();
    std::map<Mono, FieldElement> t;
    for (const auto& [m, c] : terms_) {
        Mono mm(target->nvars(), 0);
        int s = 0;
        for (int i = 0; i < ring_->nvars(); ++i) {
            mm[i + 1] = m[i];
            s += m[i];
        }
        mm[0] = d - s;
        t.emplace(std::move(mm), c);
    }
    return MultiPoly(std::move(target), std::move(t));
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Mono& m = it->first;
        FieldElement c = it->second;
        bool mono = std::any_of(m.begin(), m.end(), [](int e) { return e != 0; });
        std::string cs;
        bool negated = false;
        if (c.is_rational()) {
            Rational q = c.rational_value();
            if (sgn(q) < 0) {
                negated = true;
                q = -q;
            }
            if (!mono || q != 1) cs = kgeo::to_string(q);
        } else {
            cs = "(" + c.to_string() + ")";
        }
        if (first) {
            if (negated) os << "-";
        } else {
            os << (negated ? " - " : " + ");
        }
        first = false;
        os << cs;
        bool need_star = !cs.empty();
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (need_star) os << "*";
            need_star = true;
            os << ring_->vars[i];
            if (m[i] > 1) os << "^" << m[i];
        }
    }
    return os.str();
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a->field == b->field && a->vars == b->vars);
}

// ---------------------------------------------------------------------------
// Division, GCD, squarefree part

std::optional<MultiPoly> mp_try_divide(const MultiPoly& f, const MultiPoly& g) {
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    MultiPoly rem = f;
    std::map<Mono, FieldElement> quo;
    auto [gm, gc] = g.leading_term_lex();
    FieldElement gcinv = gc.inv();
    while (!rem.is_zero()) {
        auto [rm, rc] = rem.leading_term_lex();
        Mono d = rm;
        bool divides = true;
        for (std::size_t i = 0; i < d.size(); ++i) {
            d[i] -= gm[i];
            if (d[i] < 0) divides = false;
        }
        if (!divides) return std::nullopt;
        FieldElement c = rc * gcinv;
        add_term(quo, d, c);
        std::map<Mono, FieldElement> piece;
        piece.emplace(std::move(d), std::move(c));
        rem = rem - MultiPoly(rem.ring(), std::move(piece)) * g;
    }
    return MultiPoly(f.ring(), std::move(quo));
}

MultiPoly mp_divexact(const MultiPoly& f, const MultiPoly& g) {
    auto q = mp_try_divide(f, g);
    if (!q) throw std::domain_error("inexact polynomial division: " + g.to_string() +
                                    " does not divide " + f.to_string());
    return *q;
}

MultiPoly normalize_q(const MultiPoly& f) {
    if (f.is_zero()) return f;
    if (!f.ring()->over_rationals())
        throw std::invalid_argument("normalize_q needs rational coefficients");
    Int den(1), num(0);
    for (const auto& [m, c] : f.terms()) {
        (void)m;
        Rational q = c.rational_value();
        den = lcm(den, q.get_den());
    }
    for (const auto& [m, c] : f.terms()) {
        (void)m;
        Rational q = c.rational_value();
        num = gcd(num, Int(q.get_num() * (den / q.get_den())));
    }
    Rational scale(den, num);
    scale.canonicalize();
    MultiPoly out = f.scaled(scale);
    if (sgn(out.leading_term_lex().second.rational_value()) < 0) out = -out;
    return out;
}

namespace {

// Univariate view in the main variable: dense coefficients as MultiPolys.
std::vector<MultiPoly> coeffs_in(const MultiPoly& f, int var) {
    int d = f.degree_in(var);
    std::vector<MultiPoly> out(std::max(d + 1, 1), MultiPoly::zero(f.ring()));
    for (const auto& [m, c] : f.terms()) {
        Mono mm = m;
        int e = mm[var];
        mm[var] = 0;
        std::map<Mono, FieldElement> t;
        t.emplace(std::move(mm), c);
        out[e] = out[e] + MultiPoly(f.ring(), std::move(t));
    }
    return out;
}

MultiPoly from_coeffs(const std::vector<MultiPoly>& cs, int var, const RingPtr& ring) {
    MultiPoly x = MultiPoly::variable(ring, var);
    MultiPoly acc = MultiPoly::zero(ring);
    for (int i = static_cast<int>(cs.size()) - 1; i >= 0; --i) acc = acc * x + cs[i];
    return acc;
}

int univ_degree(const std::vector<MultiPoly>& cs) {
    for (int i = static_cast<int>(cs.size()) - 1; i >= 0; --i)
        if (!cs[i].is_zero()) return i;
    return -1;
}

// Pseudo-remainder of f by g, both viewed univariately in var.
MultiPoly pseudo_rem(const MultiPoly& f, const MultiPoly& g, int var) {
    std::vector<MultiPoly> fc = coeffs_in(f, var);
    std::vector<MultiPoly> gc = coeffs_in(g, var);
    int df = univ_degree(fc), dg = univ_degree(gc);
    if (dg < 0) throw std::domain_error("pseudo-division by zero");
    const MultiPoly& lg = gc[dg];
    while (df >= dg) {
        MultiPoly lf = fc[df];
        // fc = lg*fc - lf * x^(df-dg) * gc
        for (auto& c : fc) c = c * lg;
        for (int i = 0; i <= dg; ++i) fc[df - dg + i] = fc[df - dg + i] - lf * gc[i];
        int nd = -1;
        for (int i = df; i >= 0; --i)
            if (!fc[i].is_zero()) {
                nd = i;
                break;
            }
        if (nd == df) throw std::logic_error("pseudo-division failed to reduce degree");
        df = nd;
    }
    return from_coeffs(fc, var, f.ring());
}

}  // namespace

MultiPoly mv_gcd(const MultiPoly& f_in, const MultiPoly& g_in) {
    if (!f_in.ring()->over_rationals())
        throw std::invalid_argument("mv_gcd needs rational coefficients");
    if (f_in.is_zero()) return g_in.is_zero() ? f_in : normalize_q(g_in);
    if (g_in.is_zero()) return normalize_q(f_in);
    MultiPoly f = normalize_q(f_in), g = normalize_q(g_in);
    if (f.is_constant() || g.is_constant())
        return MultiPoly::constant(f.ring(), Rational(1));
    // Main variable: the highest-index variable either depends on.
    int var = -1;
    for (int i = f.ring()->nvars() - 1; i >= 0; --i)
        if (f.depends_on(i) || g.depends_on(i)) {
            var = i;
            break;
        }
    if (var < 0) return MultiPoly::constant(f.ring(), Rational(1));
    auto content = [&](const MultiPoly& p) {
        std::vector<MultiPoly> cs = coeffs_in(p, var);
        MultiPoly c = MultiPoly::zero(p.ring());
        for (const auto& ci : cs)
            if (!ci.is_zero()) c = mv_gcd(c, ci);
        return c;
    };
    MultiPoly cf = content(f), cg = content(g);
    MultiPoly pf = mp_divexact(f, cf), pg = mp_divexact(g, cg);
    // Primitive PRS.
    if (pf.degree_in(var) < pg.degree_in(var)) std::swap(pf, pg);
    while (!pg.is_zero()) {
        MultiPoly r = pseudo_rem(pf, pg, var);
        pf = std::move(pg);
        if (r.is_zero()) {
            pg = r;
        } else {
            pg = mp_divexact(r, content(r));
            pg = normalize_q(pg);
        }
    }
    MultiPoly result = mv_gcd(cf, cg) * pf;
    return normalize_q(result);
}

MultiPoly squarefree_part(const MultiPoly& f) {
    if (f.is_zero()) throw std::domain_error("squarefree part of zero");
    MultiPoly g = MultiPoly::zero(f.ring());
    g = f;
    MultiPoly acc = f;
    for (int i = 0; i < f.ring()->nvars(); ++i) acc = mv_gcd(acc, f.derivative(i));
    return normalize_q(mp_divexact(f, acc));
}

// ---------------------------------------------------------------------------
// Factorization adapters

QPoly to_qpoly(const MultiPoly& f, int var) {
    QPoly out;
    for (const auto& [m, c] : f.terms()) {
        for (std::size_t i = 0; i < m.size(); ++i)
            if (static_cast<int>(i) != var && m[i] != 0)
                throw std::invalid_argument("polynomial is not univariate in the given variable");
        if (static_cast<std::size_t>(m[var]) >= out.size())
            out.resize(m[var] + 1, Rational(0));
        out[m[var]] = c.rational_value();
    }
    return qp_trim(std::move(out));
}

MultiPoly from_qpoly(const RingPtr& ring, int var, const QPoly& coeffs) {
    std::map<Mono, FieldElement> t;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (sgn(coeffs[i]) == 0) continue;
        Mono m(ring->nvars(), 0);
        m[var] = static_cast<int>(i);
        t.emplace(std::move(m), ring->field->from_rational(coeffs[i]));
    }
    return MultiPoly(ring, std::move(t));
}

MPFactorization univariate_factor_q(const MultiPoly& f) {
    int var = -1;
    for (int i = 0; i < f.ring()->nvars(); ++i)
        if (f.depends_on(i)) {
            if (var >= 0) throw std::invalid_argument("polynomial is not univariate");
            var = i;
        }
    MPFactorization out;
    if (var < 0) {
        out.unit = f.constant_value().rational_value();
        return out;
    }
    QFactorization qf = factor_univariate_q(to_qpoly(f, var));
    out.unit = qf.unit;
    for (const auto& [piece, mult] : qf.factors) {
        MPFactor mf;
        mf.factor = from_qpoly(f.ring(), var, piece);
        mf.multiplicity = mult;
        mf.irreducibility_certified = true;
        out.factors.push_back(std::move(mf));
    }
    return out;
}

VerifyResult verify_factorization(const MultiPoly& f, const Rational& unit,
                                  const std::vector<std::pair<MultiPoly, int>>& claim) {
    VerifyResult res;
    MultiPoly prod = MultiPoly::constant(f.ring(), unit);
    for (const auto& [g, m] : claim) {
        if (g.is_constant()) {
            res.reason = "constant factor in claim";
            return res;
        }
        prod = prod * g.pow(m);
    }
    if (!(prod == f)) {
        res.reason = "product does not reconstruct the polynomial";
        return res;
    }
    // Pairwise non-association: over a field, associated means equal up to a
    // scalar, i.e. the quotient of the polynomials is a constant.
    for (std::size_t i = 0; i < claim.size(); ++i)
        for (std::size_t j = i + 1; j < claim.size(); ++j) {
            auto q = mp_try_divide(claim[i].first, claim[j].first);
            if (q && q->is_constant()) {
                res.reason = "factors " + std::to_string(i) + " and " + std::to_string(j) +
                             " are associated";
                return res;
            }
        }
    for (const auto& [g, m] : claim) {
        (void)m;
        bool cert = false;
        if (g.total_degree() == 1) {
            cert = true;
        } else {
            int nv = 0;
            for (int i = 0; i < g.ring()->nvars(); ++i)
                if (g.depends_on(i)) ++nv;
            if (nv == 1 && g.ring()->over_rationals()) {
                MPFactorization fq = univariate_factor_q(g);
                cert = fq.factors.size() == 1 && fq.factors[0].multiplicity == 1;
            } else if (nv == 2 && g.total_degree() <= 6 && g.ring()->over_rationals()) {
                auto sm = small_multivariate_factor_q(g);
                cert = sm && sm->factors.size() == 1 && sm->factors[0].multiplicity == 1;
            }
            if (!cert && nv >= 1 && !g.ring()->over_rationals()) cert = false;
        }
        res.certified.push_back(cert);
    }
    res.accepted = true;
    return res;
}

std::optional<MPFactorization> small_multivariate_factor_q(const MultiPoly& f,
                                                           int degree_budget) {
    if (f.is_zero()) throw std::domain_error("factorization of zero");
    if (!f.ring()->over_rationals()) return std::nullopt;
    std::vector<int> active;
    for (int i = 0; i < f.ring()->nvars(); ++i)
        if (f.depends_on(i)) active.push_back(i);
    if (active.size() > 2 || f.total_degree() > degree_budget) return std::nullopt;
    MPFactorization out;
    if (active.empty()) {
        out.unit = f.constant_value().rational_value();
        return out;
    }
    if (active.size() == 1) return univariate_factor_q(f);

    const int vx = active[0], vy = active[1];
    MultiPoly work = normalize_q(f);
    {
        Rational u = mp_divexact(f, work).constant_value().rational_value();
        out.unit = u;
    }
    // Contents in each variable first.
    auto extract_content = [&](MultiPoly& p, int var) {
        std::vector<MultiPoly> cs = coeffs_in(p, var);
        MultiPoly c = MultiPoly::zero(p.ring());
        for (const auto& ci : cs)
            if (!ci.is_zero()) c = mv_gcd(c, ci);
        if (!c.is_constant()) {
            p = mp_divexact(p, c);
            auto sub = small_multivariate_factor_q(c, degree_budget);
            if (!sub) return false;
            out.unit *= sub->unit;
            for (auto& mf : sub->factors) out.factors.push_back(std::move(mf));
        }
        return true;
    };
    if (!extract_content(work, vx) || !extract_content(work, vy)) return std::nullopt;

    // Kronecker substitution y = x^D with D = deg_x + 1.
    const int D = work.degree_in(vx) + 1;
    auto to_univ = [&](const MultiPoly& p) {
        QPoly q;
        for (const auto& [m, c] : p.terms()) {
            int k = m[vx] + D * m[vy];
            if (static_cast<std::size_t>(k) >= q.size()) q.resize(k + 1, Rational(0));
            q[k] += c.rational_value();
        }
        return qp_trim(std::move(q));
    };
    auto from_univ = [&](const std::vector<Int>& q) {
        std::map<Mono, FieldElement> t;
        for (std::size_t k = 0; k < q.size(); ++k) {
            if (sgn(q[k]) == 0) continue;
            Mono m(f.ring()->nvars(), 0);
            m[vx] = static_cast<int>(k) % D;
            m[vy] = static_cast<int>(k) / D;
            add_term(t, m, f.ring()->field->from_rational(Rational(q[k])));
        }
        return MultiPoly(f.ring(), std::move(t));
    };

    MultiPoly remaining = work;
    while (!remaining.is_constant()) {
        QPoly img = to_univ(remaining);
        QFactorization qf = factor_univariate_q(img);
        int n = static_cast<int>(qf.factors.size());
        // Number of modular pieces counted with multiplicity.
        std::vector<QPoly> pieces;
        for (const auto& [p, m] : qf.factors)
            for (int i = 0; i < m; ++i) pieces.push_back(p);
        bool split = false;
        int total = static_cast<int>(pieces.size());
        // Proper subsets by increasing cardinality.
        for (int card = 1; card <= total / 2 && !split; ++card) {
            std::vector<int> comb(card);
            for (int i = 0; i < card; ++i) comb[i] = i;
            while (true) {
                QPoly prod{Rational(1)};
                for (int i : comb) prod = qp_mul(prod, pieces[comb[0] == -1 ? 0 : i]);
                auto [u2, pz] = qp_primitive(prod);
                (void)u2;
                MultiPoly cand = from_univ(pz);
                if (!cand.is_constant()) {
                    auto quo = mp_try_divide(remaining, cand);
                    if (quo) {
                        MultiPoly candn = normalize_q(cand);
                        bool merged = false;
                        for (auto& mf : out.factors)
                            if (mf.factor == candn) {
                                ++mf.multiplicity;
                                merged = true;
                            }
                        if (!merged) {
                            MPFactor mf;
                            mf.factor = candn;
                            mf.multiplicity = 1;
                            mf.irreducibility_certified = true;
                            out.factors.push_back(std::move(mf));
                        }
                        remaining = normalize_q(*quo);
                        split = true;
                        break;
                    }
                }
                int i = card - 1;
                while (i >= 0 && comb[i] == total - card + i) --i;
                if (i < 0) break;
                ++comb[i];
                for (int j = i + 1; j < card; ++j) comb[j] = comb[j - 1] + 1;
            }
        }
        (void)n;
        if (!split) {
            // Irreducible.
            MultiPoly candn = normalize_q(remaining);
            bool merged = false;
            for (auto& mf : out.factors)
                if (mf.factor == candn) {
                    ++mf.multiplicity;
                    merged = true;
                }
            if (!merged) {
                MPFactor mf;
                mf.factor = candn;
                mf.multiplicity = 1;
                mf.irreducibility_certified = true;
                out.factors.push_back(std::move(mf));
            }
            break;
        }
    }
    // Unit fix-up.
    MultiPoly prod = MultiPoly::constant(f.ring(), out.unit);
    for (const auto& mf : out.factors) prod = prod * mf.factor.pow(mf.multiplicity);
    if (!(prod == f)) {
        auto q = mp_try_divide(f, prod);
        if (!q || !q->is_constant()) return std::nullopt;
        out.unit *= q->constant_value().rational_value();
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Parser {
    const RingPtr& ring;
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " +
                                    msg);
    }

    MultiPoly parse_expr() {
        MultiPoly acc = parse_term();
        while (true) {
            skip_ws();
            if (eat('+'))
                acc = acc + parse_term();
            else if (eat('-'))
                acc = acc - parse_term();
            else
                return acc;
        }
    }

    MultiPoly parse_term() {
        MultiPoly acc = parse_power();
        while (true) {
            skip_ws();
            if (eat('*'))
                acc = acc * parse_power();
            else
                return acc;
        }
    }

    MultiPoly parse_power() {
        MultiPoly base = parse_atom();
        skip_ws();
        if (eat('^')) {
            skip_ws();
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) fail("exponent expected");
            return base.pow(std::stoi(s.substr(start, pos - start)));
        }
        return base;
    }

    MultiPoly parse_atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            MultiPoly inner = parse_expr();
            if (!eat(')')) fail("')' expected");
            return inner;
        }
        if (c == '-') {
            ++pos;
            return -parse_power();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) ||
                                      s[pos] == '.' || s[pos] == '/'))
                ++pos;
            auto q = parse_rational(s.substr(start, pos - start));
            if (!q) fail("bad numeric literal");
            return MultiPoly::constant(ring, *q);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                                      s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            int vi = ring->var_index(name);
            if (vi >= 0) return MultiPoly::variable(ring, vi);
            int gi = ring->field->level_index(name);
            if (gi >= 0) return MultiPoly::constant(ring, ring->field->generator(gi));
            fail("unknown identifier '" + name + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

MultiPoly parse_poly(const RingPtr& ring, const std::string& text) {
    Parser p{ring, text};
    MultiPoly result = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return result;
}

}  // namespace kgeo
