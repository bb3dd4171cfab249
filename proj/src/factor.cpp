#include "kgeo/factor.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace kgeo {

int qp_degree(const QPoly& f) { return static_cast<int>(f.size()) - 1; }

QPoly qp_trim(QPoly f) {
    while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
    return f;
}

QPoly qp_add(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return qp_trim(std::move(r));
}

QPoly qp_sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return qp_trim(std::move(r));
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return qp_trim(std::move(r));
}

QPoly qp_scale(const QPoly& a, const Rational& c) {
    if (sgn(c) == 0) return {};
    QPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

QPoly qp_derivative(const QPoly& f) {
    QPoly r;
    for (std::size_t i = 1; i < f.size(); ++i) r.push_back(f[i] * Rational(static_cast<long>(i)));
    return qp_trim(std::move(r));
}

std::pair<QPoly, QPoly> qp_divmod(const QPoly& a, const QPoly& b) {
    if (b.empty()) throw std::domain_error("division by zero polynomial");
    QPoly rem = a, quo;
    int db = qp_degree(b);
    if (qp_degree(a) >= db) quo.assign(a.size() - b.size() + 1, Rational(0));
    while (qp_degree(rem) >= db) {
        Rational c = rem.back() / b.back();
        int shift = qp_degree(rem) - db;
        quo[shift] = c;
        for (int i = 0; i <= db; ++i) rem[shift + i] -= c * b[i];
        rem = qp_trim(std::move(rem));
    }
    return {qp_trim(std::move(quo)), std::move(rem)};
}

QPoly qp_gcd(QPoly a, QPoly b) {
    a = qp_trim(std::move(a));
    b = qp_trim(std::move(b));
    while (!b.empty()) {
        QPoly r = qp_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
    return a;
}

QPoly qp_squarefree_part(const QPoly& f) {
    if (f.empty()) throw std::domain_error("squarefree part of zero");
    QPoly g = qp_gcd(f, qp_derivative(f));
    QPoly sf = qp_divmod(f, g).first;
    Rational lead = sf.back();
    for (auto& c : sf) c /= lead;
    return sf;
}

bool qp_eq(const QPoly& a, const QPoly& b) { return qp_trim(a) == qp_trim(b); }

std::pair<Rational, std::vector<Int>> qp_primitive(const QPoly& f) {
    if (f.empty()) return {Rational(0), {}};
    Int den(1);
    for (const auto& c : f) den = lcm(den, c.get_den());
    std::vector<Int> zs;
    zs.reserve(f.size());
    Int content(0);
    for (const auto& c : f) {
        Int z = c.get_num() * (den / c.get_den());
        content = gcd(content, z);
        zs.push_back(std::move(z));
    }
    if (sgn(zs.back()) < 0) content = -content;
    for (auto& z : zs) z /= content;
    Rational unit(content, den);
    unit.canonicalize();
    return {unit, std::move(zs)};
}

// ---------------------------------------------------------------------------
// Arithmetic mod m (m = p or a lifted prime power), dense Int vectors.

namespace {

using ZPoly = std::vector<Int>;

Int mod(const Int& a, const Int& m) {
    Int r = a % m;
    if (sgn(r) < 0) r += m;
    return r;
}

Int smod(const Int& a, const Int& m) {  // symmetric representative
    Int r = mod(a, m);
    if (r * 2 > m) r -= m;
    return r;
}

Int inv_mod(const Int& a, const Int& m) {
    Int g, s;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), nullptr, a.get_mpz_t(), m.get_mpz_t());
    if (g != 1) throw std::logic_error("non-invertible element mod m");
    return mod(s, m);
}

ZPoly zp_trim_mod(ZPoly f, const Int& m) {
    for (auto& c : f) c = mod(c, m);
    while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
    return f;
}

ZPoly zp_mul_mod(const ZPoly& a, const ZPoly& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return zp_trim_mod(std::move(r), m);
}

ZPoly zp_add_mod(const ZPoly& a, const ZPoly& b, const Int& m) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return zp_trim_mod(std::move(r), m);
}

ZPoly zp_sub_mod(const ZPoly& a, const ZPoly& b, const Int& m) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return zp_trim_mod(std::move(r), m);
}

// Division with invertible leading coefficient of b mod m.
std::pair<ZPoly, ZPoly> zp_divmod_mod(const ZPoly& a, const ZPoly& b, const Int& m) {
    ZPoly rem = zp_trim_mod(ZPoly(a), m), quo;
    int db = static_cast<int>(b.size()) - 1;
    Int linv = inv_mod(b.back(), m);
    if (static_cast<int>(rem.size()) - 1 >= db) quo.assign(rem.size() - b.size() + 1, Int(0));
    while (static_cast<int>(rem.size()) - 1 >= db) {
        Int c = mod(rem.back() * linv, m);
        int shift = static_cast<int>(rem.size()) - 1 - db;
        quo[shift] = c;
        for (int i = 0; i <= db; ++i) rem[shift + i] -= c * b[i];
        rem = zp_trim_mod(std::move(rem), m);
    }
    return {zp_trim_mod(std::move(quo), m), std::move(rem)};
}

ZPoly zp_monic_mod(const ZPoly& f, const Int& m) {
    if (f.empty()) return f;
    Int linv = inv_mod(f.back(), m);
    ZPoly r = f;
    for (auto& c : r) c = mod(c * linv, m);
    return r;
}

ZPoly zp_gcd_mod(ZPoly a, ZPoly b, const Int& p) {
    a = zp_trim_mod(std::move(a), p);
    b = zp_trim_mod(std::move(b), p);
    while (!b.empty()) {
        ZPoly r = zp_divmod_mod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.empty() ? a : zp_monic_mod(a, p);
}

ZPoly zp_powmod(ZPoly base, Int e, const ZPoly& f, const Int& p) {
    ZPoly acc{Int(1)};
    base = zp_divmod_mod(base, f, p).second;
    while (sgn(e) > 0) {
        if (mpz_odd_p(e.get_mpz_t()))
            acc = zp_divmod_mod(zp_mul_mod(acc, base, p), f, p).second;
        base = zp_divmod_mod(zp_mul_mod(base, base, p), f, p).second;
        e >>= 1;
    }
    return acc;
}

ZPoly zp_derivative_mod(const ZPoly& f, const Int& m) {
    ZPoly r;
    for (std::size_t i = 1; i < f.size(); ++i) r.push_back(f[i] * static_cast<long>(i));
    return zp_trim_mod(std::move(r), m);
}

// Cantor-Zassenhaus factorization of a squarefree monic polynomial mod p.
void cz_factor(const ZPoly& f, const Int& p, std::vector<ZPoly>& out, std::mt19937_64& rng) {
    int d = static_cast<int>(f.size()) - 1;
    if (d <= 0) return;
    if (d == 1) {
        out.push_back(f);
        return;
    }
    // Distinct-degree splitting.
    ZPoly x{Int(0), Int(1)};
    ZPoly h = x;
    ZPoly rest = f;
    for (int k = 1; 2 * k <= static_cast<int>(rest.size()) - 1; ++k) {
        h = zp_powmod(h, p, rest, p);
        ZPoly g = zp_gcd_mod(zp_sub_mod(h, x, p), rest, p);
        if (static_cast<int>(g.size()) - 1 > 0) {
            // Equal-degree splitting of g into degree-k irreducibles.
            std::vector<ZPoly> stack{g};
            while (!stack.empty()) {
                ZPoly cur = stack.back();
                stack.pop_back();
                int dc = static_cast<int>(cur.size()) - 1;
                if (dc == k) {
                    out.push_back(zp_monic_mod(cur, p));
                    continue;
                }
                // Random split: gcd(cur, r^((p^k-1)/2) - 1).
                while (true) {
                    ZPoly r(dc, Int(0));
                    for (auto& c : r) c = Int(static_cast<unsigned long>(rng() % 1000003)) % p;
                    r = zp_trim_mod(std::move(r), p);
                    if (r.empty()) continue;
                    Int e = 1;
                    for (int i = 0; i < k; ++i) e *= p;
                    e = (e - 1) / 2;
                    ZPoly w = zp_powmod(r, e, cur, p);
                    w = zp_sub_mod(w, ZPoly{Int(1)}, p);
                    ZPoly gg = zp_gcd_mod(w, cur, p);
                    int dg = static_cast<int>(gg.size()) - 1;
                    if (dg > 0 && dg < dc) {
                        stack.push_back(gg);
                        stack.push_back(zp_divmod_mod(cur, gg, p).first);
                        break;
                    }
                }
            }
            rest = zp_divmod_mod(rest, g, p).first;
            h = zp_divmod_mod(h, rest, p).second;
        }
    }
    if (static_cast<int>(rest.size()) - 1 > 0) out.push_back(zp_monic_mod(rest, p));
}

// One quadratic Hensel step is overkill at desk scale; linear lifting from p
// to p^k is sufficient and simpler.  Lift a factorization f = prod f_i mod p
// to mod p^k, f monic.
std::vector<ZPoly> hensel_lift(const ZPoly& f, std::vector<ZPoly> factors, const Int& p,
                               int k) {
    Int m = p;
    for (int step = 1; step < k; ++step) {
        Int m_next = m * p;
        // Current product.
        for (std::size_t i = 0; i < factors.size(); ++i) {
            // Lift factor i against the cofactor prod_{j!=i} f_j.
            ZPoly cof{Int(1)};
            for (std::size_t j = 0; j < factors.size(); ++j)
                if (j != i) cof = zp_mul_mod(cof, factors[j], m_next);
            // e = (f - f_i * cof) / m  mod p
            ZPoly prod = zp_mul_mod(factors[i], cof, m_next);
            ZPoly err = zp_sub_mod(f, prod, m_next);
            ZPoly e;
            e.reserve(err.size());
            for (const auto& c : err) e.push_back(mod(c / m, p));
            e = zp_trim_mod(std::move(e), p);
            if (e.empty()) continue;
            // Solve cof * delta = e (mod p, deg delta < deg f_i) via Bezout:
            // gcd(cof, f_i) = 1 mod p.
            // Extended Euclid over F_p.
            ZPoly r0 = zp_trim_mod(ZPoly(cof), p), r1 = zp_trim_mod(ZPoly(factors[i]), p);
            ZPoly s0{Int(1)}, s1{};
            while (!r1.empty()) {
                auto [q, r2] = zp_divmod_mod(r0, r1, p);
                ZPoly s2 = zp_sub_mod(s0, zp_mul_mod(q, s1, p), p);
                r0 = std::move(r1);
                r1 = std::move(r2);
                s0 = std::move(s1);
                s1 = std::move(s2);
            }
            // r0 = gcd (unit), s0 its cof-coefficient: cof*s0 = r0 mod f_i.
            Int u = inv_mod(r0.back(), p);
            for (auto& c : s0) c = mod(c * u, p);
            ZPoly delta =
                zp_divmod_mod(zp_mul_mod(e, s0, p), zp_trim_mod(ZPoly(factors[i]), p), p).second;
            // f_i += m * delta
            ZPoly fi = factors[i];
            fi.resize(std::max(fi.size(), delta.size()), Int(0));
            for (std::size_t j = 0; j < delta.size(); ++j) fi[j] += m * delta[j];
            factors[i] = zp_trim_mod(std::move(fi), m_next);
        }
        m = m_next;
    }
    return factors;
}

Int mignotte_bound(const std::vector<Int>& f) {
    Int norm2(0);
    for (const auto& c : f) norm2 += c * c;
    Int norm = sqrt(norm2) + 1;
    Int b = norm + abs(f.back());
    mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), f.size());
    return b;
}

// Factorizes a primitive squarefree integer polynomial into irreducible
// integer polynomials (Zassenhaus).
std::vector<std::vector<Int>> factor_squarefree_z(std::vector<Int> f) {
    std::vector<std::vector<Int>> out;
    int d = static_cast<int>(f.size()) - 1;
    if (d <= 0) return out;
    if (d == 1) {
        out.push_back(std::move(f));
        return out;
    }
    std::mt19937_64 rng(0xC0FFEE);
    // Choose a prime keeping f squarefree with invertible lead.
    long primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
    Int p;
    ZPoly fp;
    bool found = false;
    for (long pr : primes) {
        p = pr;
        fp = zp_trim_mod(ZPoly(f.begin(), f.end()), p);
        if (static_cast<int>(fp.size()) - 1 != d) continue;  // lead vanished
        ZPoly g = zp_gcd_mod(fp, zp_derivative_mod(fp, p), p);
        if (static_cast<int>(g.size()) - 1 == 0) {
            found = true;
            break;
        }
    }
    if (!found) throw std::runtime_error("no suitable prime for factorization");

    std::vector<ZPoly> modular;
    cz_factor(zp_monic_mod(fp, p), p, modular, rng);
    if (modular.size() == 1) {
        out.push_back(std::move(f));
        return out;
    }

    // Lift to p^k beyond twice the Mignotte bound.
    Int bound = mignotte_bound(f) * 2 * abs(f.back());
    int k = 1;
    Int pk = p;
    while (pk <= bound) {
        pk *= p;
        ++k;
    }
    // Make f monic mod p^k for lifting: lift lc(f)*monic factors pattern.
    Int lc = f.back();
    ZPoly fmon;
    {
        Int lcin = inv_mod(mod(lc, pk), pk);
        for (const auto& c : f) fmon.push_back(mod(c * lcin, pk));
        fmon = zp_trim_mod(std::move(fmon), pk);
    }
    std::vector<ZPoly> lifted = hensel_lift(fmon, modular, p, k);

    // Recombination over subsets, smallest cardinality first.
    std::vector<int> alive(lifted.size(), 1);
    std::vector<Int> remaining = f;
    auto try_subset = [&](const std::vector<int>& idx) -> bool {
        // Candidate = lc * prod lifted[idx]  (coefficients symmetric mod p^k),
        // then primitive part; test exact division over Z.
        ZPoly prod{mod(remaining.back(), pk)};
        for (int i : idx) prod = zp_mul_mod(prod, lifted[i], pk);
        std::vector<Int> cand;
        cand.reserve(prod.size());
        for (const auto& c : prod) cand.push_back(smod(c, pk));
        while (!cand.empty() && sgn(cand.back()) == 0) cand.pop_back();
        if (cand.empty()) return false;
        Int cont(0);
        for (const auto& c : cand) cont = gcd(cont, c);
        if (sgn(cand.back()) < 0) cont = -cont;
        for (auto& c : cand) c /= cont;
        // Exact division test over Q.
        QPoly qa, qb;
        for (const auto& c : remaining) qa.emplace_back(c);
        for (const auto& c : cand) qb.emplace_back(c);
        auto [quo, rem] = qp_divmod(qa, qb);
        if (!rem.empty()) return false;
        out.push_back(cand);
        auto [u2, prim] = qp_primitive(quo);
        (void)u2;
        remaining = prim;
        return true;
    };

    int alive_count = static_cast<int>(lifted.size());
    for (int card = 1; card <= alive_count / 2;) {
        // Enumerate subsets of the alive indices with this cardinality.
        std::vector<int> alive_idx;
        for (std::size_t i = 0; i < lifted.size(); ++i)
            if (alive[i]) alive_idx.push_back(static_cast<int>(i));
        int n = static_cast<int>(alive_idx.size());
        std::vector<int> comb(card);
        for (int i = 0; i < card; ++i) comb[i] = i;
        bool removed = false;
        while (true) {
            std::vector<int> subset;
            for (int i : comb) subset.push_back(alive_idx[i]);
            if (try_subset(subset)) {
                for (int i : subset) alive[i] = 0;
                alive_count -= card;
                removed = true;
                break;
            }
            int i = card - 1;
            while (i >= 0 && comb[i] == n - card + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < card; ++j) comb[j] = comb[j - 1] + 1;
        }
        if (!removed) ++card;
    }
    // Whatever remains is irreducible.
    if (static_cast<int>(remaining.size()) - 1 > 0) out.push_back(remaining);
    return out;
}

}  // namespace

QFactorization factor_univariate_q(const QPoly& f_in) {
    QPoly f = qp_trim(f_in);
    if (f.empty()) throw std::domain_error("factorization of zero");
    if (qp_degree(f) > kUnivariateFactorDegreeCap)
        throw std::domain_error("univariate factorization degree cap exceeded");
    QFactorization result;
    auto [unit, prim] = qp_primitive(f);
    result.unit = unit;
    if (prim.size() <= 1) return result;

    // Yun squarefree decomposition over Q.
    QPoly a;
    for (const auto& z : prim) a.emplace_back(z);
    QPoly g = qp_gcd(a, qp_derivative(a));
    QPoly b = qp_divmod(a, g).first;
    QPoly c = qp_divmod(qp_derivative(a), g).first;
    QPoly d = qp_sub(c, qp_derivative(b));
    int mult = 1;
    while (qp_degree(b) > 0) {
        QPoly w = qp_gcd(b, d);
        if (qp_degree(w) > 0) {
            auto [u2, wz] = qp_primitive(w);
            (void)u2;
            for (auto& piece : factor_squarefree_z(wz)) {
                QPoly qf;
                for (const auto& z : piece) qf.emplace_back(z);
                result.factors.emplace_back(std::move(qf), mult);
            }
        }
        b = qp_divmod(b, w).first;
        c = qp_divmod(d, w).first;
        d = qp_sub(c, qp_derivative(b));
        ++mult;
    }
    // Fix the unit so the product reconstructs f exactly.
    QPoly prod{result.unit};
    for (const auto& [fac, m] : result.factors)
        for (int i = 0; i < m; ++i) prod = qp_mul(prod, fac);
    if (!qp_eq(prod, f)) {
        // Adjust by the residual constant (possible through Yun bookkeeping).
        auto [q, r] = qp_divmod(f, prod);
        if (!r.empty() || qp_degree(q) != 0)
            throw std::logic_error("factorization reconstruction failed");
        result.unit *= q[0];
    }
    return result;
}

}  // namespace kgeo
