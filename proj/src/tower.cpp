#include "kgeo/tower.hpp"

#include <algorithm>
#include <sstream>

namespace kgeo {

namespace {

void add_term(CoordMap& m, const Expo& e, const Rational& c) {
    if (sgn(c) == 0) return;
    auto it = m.find(e);
    if (it == m.end()) {
        m.emplace(e, c);
    } else {
        it->second += c;
        if (sgn(it->second) == 0) m.erase(it);
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// TowerField

TowerPtr TowerField::rationals() {
    static TowerPtr q = make({});
    return q;
}

TowerPtr TowerField::make(std::vector<TowerLevel> levels) {
    auto tf = std::shared_ptr<TowerField>(new TowerField());
    tf->levels_ = std::move(levels);
    tf->dimension_ = 1;
    int k = static_cast<int>(tf->levels_.size());
    for (int i = 0; i < k; ++i) {
        const TowerLevel& lv = tf->levels_[i];
        if (lv.degree < 1) throw std::invalid_argument("tower level degree must be >= 1");
        if (static_cast<int>(lv.minpoly.size()) != lv.degree)
            throw std::invalid_argument("tower level needs exactly degree coefficients");
        for (const CoordMap& c : lv.minpoly)
            for (const auto& [e, q] : c) {
                (void)q;
                if (static_cast<int>(e.size()) != k)
                    throw std::invalid_argument("minpoly coefficient exponent length mismatch");
                for (int j = i; j < k; ++j)
                    if (e[j] != 0)
                        throw std::invalid_argument(
                            "minpoly coefficient must live in the sub-tower");
            }
        tf->dimension_ *= lv.degree;
    }
    // Mixed-radix basis enumeration, lowest level fastest.
    tf->basis_.reserve(tf->dimension_);
    Expo e(k, 0);
    for (long idx = 0; idx < tf->dimension_; ++idx) {
        tf->basis_.push_back(e);
        for (int i = 0; i < k; ++i) {
            if (++e[i] < tf->levels_[i].degree) break;
            e[i] = 0;
        }
    }

    // Embedding validation: real boxes must straddle a sign change of the
    // minimal polynomial; exact points must be exact roots.
    for (int i = 0; i < k; ++i) {
        const TowerLevel& lv = tf->levels_[i];
        if (!lv.box) continue;
        const Box& b = *lv.box;
        // Minimal polynomial of level i evaluated at a rational point gives a
        // sub-tower element.
        auto eval_minpoly = [&](const Rational& r) {
            CoordMap acc;  // m_i(r) = r^d + sum c_j r^j
            Rational rp(1);
            for (int j = 0; j < lv.degree; ++j) {
                for (const auto& [ex, q] : lv.minpoly[j]) add_term(acc, ex, q * rp);
                rp *= r;
            }
            add_term(acc, Expo(k, 0), rp);
            tf->reduce(acc);
            return FieldElement(tf, std::move(acc));
        };
        if (lv.exact_point || b.is_point()) {
            if (!b.is_real()) {
                // A complex rational point can be checked exactly when the
                // minimal polynomial has rational coefficients.
                bool rational_coeffs = true;
                std::vector<Rational> mc;
                for (const CoordMap& c : lv.minpoly) {
                    if (c.empty()) {
                        mc.emplace_back(0);
                    } else if (c.size() == 1 &&
                               std::all_of(c.begin()->first.begin(), c.begin()->first.end(),
                                           [](int x) { return x == 0; })) {
                        mc.push_back(c.begin()->second);
                    } else {
                        rational_coeffs = false;
                        break;
                    }
                }
                if (rational_coeffs) {
                    Rational re(0), im(0);  // Horner over Q(i)
                    mc.push_back(Rational(1));
                    for (auto it = mc.rbegin(); it != mc.rend(); ++it) {
                        Rational nre = re * b.re.lo - im * b.im.lo + *it;
                        Rational nim = re * b.im.lo + im * b.re.lo;
                        re = nre;
                        im = nim;
                    }
                    if (sgn(re) != 0 || sgn(im) != 0)
                        throw std::invalid_argument(
                            "exact-point embedding of '" + lv.name +
                            "' is not a root of its minimal polynomial");
                }
                continue;
            }
            FieldElement v = eval_minpoly(b.re.lo);
            if (!v.is_zero())
                throw std::invalid_argument("exact-point embedding of '" + lv.name +
                                            "' is not a root of its minimal polynomial");
        } else if (b.is_real()) {
            int sa = eval_minpoly(b.re.lo).sign();
            int sb = eval_minpoly(b.re.hi).sign();
            if (sa == 0 || sb == 0 || sa == sb)
                throw std::invalid_argument(
                    "isolating interval of '" + lv.name +
                    "' must produce a sign change of the minimal polynomial");
        }
        // Non-point complex boxes are accepted as supplied; they are only
        // consulted for enclosure certificates, never refined.
    }
    return tf;
}

long TowerField::basis_index(const Expo& e) const {
    long idx = 0, stride = 1;
    for (int i = 0; i < num_levels(); ++i) {
        idx += e[i] * stride;
        stride *= levels_[i].degree;
    }
    return idx;
}

int TowerField::level_index(const std::string& name) const {
    for (int i = 0; i < num_levels(); ++i)
        if (levels_[i].name == name) return i;
    return -1;
}

bool TowerField::level_is_complex(int i) const {
    const TowerLevel& lv = levels_.at(i);
    if (!lv.box) return false;  // unembedded towers are treated as abstract
    return !lv.box->is_real();
}

int TowerField::imaginary_unit_level() const {
    for (int i = 0; i < num_levels(); ++i) {
        const TowerLevel& lv = levels_[i];
        if (lv.degree != 2) continue;
        if (!lv.minpoly[1].empty()) continue;
        auto it = lv.minpoly[0].find(Expo(num_levels(), 0));
        if (it != lv.minpoly[0].end() && it->second == 1 && lv.minpoly[0].size() == 1) return i;
    }
    return -1;
}

FieldElement TowerField::zero() const {
    return FieldElement(shared_from_this(), CoordMap{});
}

FieldElement TowerField::one() const { return from_rational(Rational(1)); }

FieldElement TowerField::from_rational(const Rational& r) const {
    CoordMap c;
    if (sgn(r) != 0) c.emplace(Expo(num_levels(), 0), r);
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement TowerField::generator(int i) const {
    Expo e(num_levels(), 0);
    e.at(i) = 1;
    CoordMap c;
    c.emplace(std::move(e), Rational(1));
    CoordMap cc = c;
    reduce(cc);  // degree-1 generators collapse to their defining value
    return FieldElement(shared_from_this(), std::move(cc));
}

void TowerField::reduce(CoordMap& coords) const {
    bool changed = true;
    while (changed) {
        changed = false;
        // Rewrite the highest violating level first; the minimal polynomial
        // only involves lower levels, so this terminates.
        for (auto it = coords.begin(); it != coords.end(); ++it) {
            int bad = -1;
            for (int i = num_levels() - 1; i >= 0; --i)
                if (it->first[i] >= levels_[i].degree) {
                    bad = i;
                    break;
                }
            if (bad < 0) continue;
            Expo e = it->first;
            Rational c = it->second;
            coords.erase(it);
            const TowerLevel& lv = levels_[bad];
            e[bad] -= lv.degree;
            for (int j = 0; j < lv.degree; ++j) {
                for (const auto& [me, mq] : lv.minpoly[j]) {
                    Expo ne = e;
                    ne[bad] += j;
                    for (int t = 0; t < num_levels(); ++t) ne[t] += me[t];
                    add_term(coords, ne, -c * mq);
                }
            }
            changed = true;
            break;
        }
    }
}

CoordMap TowerField::mul_raw(const CoordMap& a, const CoordMap& b) const {
    CoordMap out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Expo e = ea;
            for (int i = 0; i < num_levels(); ++i) e[i] += eb[i];
            add_term(out, e, ca * cb);
        }
    reduce(out);
    return out;
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(TowerPtr owner, CoordMap coords)
    : owner_(std::move(owner)), coords_(std::move(coords)) {}

void FieldElement::check_owner(const FieldElement& o) const {
    if (owner_ != o.owner_) throw std::invalid_argument("field element owner mismatch");
}

bool FieldElement::is_rational() const {
    if (coords_.empty()) return true;
    if (coords_.size() > 1) return false;
    const Expo& e = coords_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rational FieldElement::rational_value() const {
    if (coords_.empty()) return Rational(0);
    if (!is_rational()) throw std::logic_error("element is not rational");
    return coords_.begin()->second;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_owner(o);
    CoordMap out = coords_;
    for (const auto& [e, c] : o.coords_) add_term(out, e, c);
    return FieldElement(owner_, std::move(out));
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator-() const {
    CoordMap out;
    for (const auto& [e, c] : coords_) out.emplace(e, -c);
    return FieldElement(owner_, std::move(out));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_owner(o);
    return FieldElement(owner_, owner_->mul_raw(coords_, o.coords_));
}

FieldElement FieldElement::scaled(const Rational& r) const {
    if (sgn(r) == 0) return owner_->zero();
    CoordMap out;
    for (const auto& [e, c] : coords_) out.emplace(e, c * r);
    return FieldElement(owner_, std::move(out));
}

FieldElement FieldElement::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    FieldElement acc = owner_->one();
    FieldElement base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

FieldElement FieldElement::inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (is_rational()) return owner_->from_rational(1 / rational_value());
    // Solve (mult-by-x) v = 1 over the Q-basis.
    const long D = owner_->dimension();
    const auto& basis = owner_->basis();
    std::vector<std::vector<Rational>> M(D, std::vector<Rational>(D + 1, Rational(0)));
    for (long j = 0; j < D; ++j) {
        CoordMap bj;
        bj.emplace(basis[j], Rational(1));
        CoordMap col = owner_->mul_raw(coords_, bj);
        for (const auto& [e, c] : col) M[owner_->basis_index(e)][j] = c;
    }
    M[0][D] = Rational(1);
    // Gaussian elimination.
    long row = 0;
    std::vector<long> pivot_col(D, -1);
    for (long col = 0; col < D && row < D; ++col) {
        long p = -1;
        for (long r = row; r < D; ++r)
            if (sgn(M[r][col]) != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(M[p], M[row]);
        Rational inv_p = 1 / M[row][col];
        for (long c = col; c <= D; ++c) M[row][c] *= inv_p;
        for (long r = 0; r < D; ++r) {
            if (r == row || sgn(M[r][col]) == 0) continue;
            Rational f = M[r][col];
            for (long c = col; c <= D; ++c) M[r][c] -= f * M[row][c];
        }
        pivot_col[row] = col;
        ++row;
    }
    CoordMap out;
    for (long r = 0; r < row; ++r)
        if (pivot_col[r] >= 0) add_term(out, basis[pivot_col[r]], M[r][D]);
    FieldElement result(owner_, std::move(out));
    if (!((*this) * result == owner_->one()))
        throw std::logic_error("inverse verification failed");
    return result;
}

bool FieldElement::operator==(const FieldElement& o) const {
    return owner_ == o.owner_ && coords_ == o.coords_;
}

bool FieldElement::operator<(const FieldElement& o) const {
    return coords_ < o.coords_;
}

bool FieldElement::is_real() const {
    for (const auto& [e, c] : coords_) {
        (void)c;
        for (int i = 0; i < owner_->num_levels(); ++i)
            if (e[i] != 0 && owner_->level_is_complex(i)) return false;
    }
    return true;
}

Box FieldElement::enclosure(const std::vector<Box>& level_boxes) const {
    Box acc(Interval::point(Rational(0)), Interval::point(Rational(0)));
    for (const auto& [e, c] : coords_) {
        Box term(Interval::point(Rational(1)), Interval::point(Rational(0)));
        for (int i = 0; i < owner_->num_levels(); ++i)
            for (int p = 0; p < e[i]; ++p) term = term * level_boxes[i];
        acc = acc + term.scaled(c);
    }
    return acc;
}

namespace {

// Sign of a tower element via interval refinement; level boxes are local
// state so the operation stays pure.
int sign_impl(const FieldElement& x, std::vector<Box>& boxes) {
    if (x.is_zero()) return 0;
    if (x.is_rational()) return sgn(x.rational_value());
    const TowerPtr& tf = x.owner();
    if (!x.is_real()) throw std::domain_error("sign of a non-real element");
    for (int i = 0; i < tf->num_levels(); ++i)
        if (!tf->level(i).box && [&] {
                for (const auto& [e, c] : x.coords()) {
                    (void)c;
                    if (e[i] != 0) return true;
                }
                return false;
            }())
            throw std::domain_error("sign requires an embedded tower");

    auto minpoly_at = [&](int lvl, const Rational& r) {
        const TowerLevel& lv = tf->level(lvl);
        CoordMap acc;
        Rational rp(1);
        for (int j = 0; j < lv.degree; ++j) {
            for (const auto& [ex, q] : lv.minpoly[j]) add_term(acc, ex, q * rp);
            rp *= r;
        }
        add_term(acc, Expo(tf->num_levels(), 0), rp);
        tf->reduce(acc);
        return FieldElement(tf, std::move(acc));
    };

    for (int iter = 0; iter < 512; ++iter) {
        Box enc = x.enclosure(boxes);
        if (!enc.re.contains_zero()) return sgn(enc.re.lo) > 0 ? 1 : -1;
        // Bisect every refinable real level.
        bool refined = false;
        for (int i = 0; i < tf->num_levels(); ++i) {
            Box& b = boxes[i];
            if (!b.is_real() || b.re.is_point()) continue;
            Rational m = b.re.mid();
            int sm = sign_impl(minpoly_at(i, m), boxes);
            if (sm == 0) {  // the midpoint is the root itself: nudge the cut
                m = (b.re.lo * 2 + b.re.hi) / 3;
                sm = sign_impl(minpoly_at(i, m), boxes);
                if (sm == 0) throw std::logic_error("degenerate isolating interval");
            }
            int sa = sign_impl(minpoly_at(i, b.re.lo), boxes);
            if (sa == 0) throw std::logic_error("isolating interval endpoint is a root");
            if (sa != sm)
                b.re.hi = m;
            else
                b.re.lo = m;
            refined = true;
        }
        if (!refined) throw std::runtime_error("sign undetermined: no refinable level");
    }
    throw std::runtime_error("sign determination budget exhausted");
}

}  // namespace

int FieldElement::sign() const {
    if (is_zero()) return 0;
    if (is_rational()) return sgn(rational_value());
    std::vector<Box> boxes;
    for (int i = 0; i < owner_->num_levels(); ++i) {
        const auto& lv = owner_->level(i);
        boxes.push_back(lv.box ? *lv.box
                               : Box(Interval::point(Rational(0)), Interval::point(Rational(0))));
    }
    return sign_impl(*this, boxes);
}

std::vector<Rational> FieldElement::minimal_polynomial() const {
    const long D = owner_->dimension();
    const auto& basis = owner_->basis();
    // Incremental row reduction of the powers 1, x, x^2, ... with tracked
    // combination coefficients.
    std::vector<std::vector<Rational>> rows;    // reduced rows, length D
    std::vector<std::vector<Rational>> combos;  // combination over powers
    std::vector<long> pivots;
    FieldElement xp = owner_->one();
    for (long k = 0; k <= D; ++k) {
        std::vector<Rational> v(D, Rational(0));
        for (const auto& [e, c] : xp.coords_) v[owner_->basis_index(e)] = c;
        std::vector<Rational> combo(k + 1, Rational(0));
        combo[k] = Rational(1);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (sgn(v[pivots[r]]) == 0) continue;
            Rational f = v[pivots[r]];
            for (long j = 0; j < D; ++j) v[j] -= f * rows[r][j];
            for (std::size_t j = 0; j < combos[r].size(); ++j) combo[j] -= f * combos[r][j];
        }
        long piv = -1;
        for (long j = 0; j < D; ++j)
            if (sgn(v[j]) != 0) {
                piv = j;
                break;
            }
        if (piv < 0) {
            // Dependency found: combo gives c_0 + c_1 x + ... + c_k x^k = 0.
            Rational lead = combo[k];
            std::vector<Rational> out(k + 1);
            for (long j = 0; j <= k; ++j) out[j] = combo[j] / lead;
            return out;
        }
        Rational inv_p = 1 / v[piv];
        for (long j = 0; j < D; ++j) v[j] *= inv_p;
        for (auto& c : combo) c *= inv_p;
        rows.push_back(std::move(v));
        combos.push_back(std::move(combo));
        pivots.push_back(piv);
        xp = xp * (*this);
    }
    throw std::logic_error("minimal polynomial search failed");
}

std::string FieldElement::to_string() const {
    if (coords_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Print highest basis monomials last for stable, readable output.
    for (const auto& [e, c] : coords_) {
        Rational a = c;
        if (first) {
            if (sgn(a) < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (sgn(a) < 0 ? " - " : " + ");
            if (sgn(a) < 0) a = -a;
        }
        first = false;
        bool mono = std::any_of(e.begin(), e.end(), [](int x) { return x != 0; });
        if (!mono || a != 1) {
            os << kgeo::to_string(a);
            if (mono) os << "*";
        }
        bool inner_first = true;
        for (int i = 0; i < owner_->num_levels(); ++i) {
            if (e[i] == 0) continue;
            if (!inner_first) os << "*";
            inner_first = false;
            os << owner_->level(i).name;
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Automorphism

Automorphism::Automorphism(std::string name, TowerPtr owner, std::vector<FieldElement> images)
    : name_(std::move(name)), owner_(std::move(owner)), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != owner_->num_levels())
        throw std::invalid_argument("automorphism needs one image per generator");
    for (int i = 0; i < owner_->num_levels(); ++i) {
        const TowerLevel& lv = owner_->level(i);
        // Substitute the image into m_i; coefficients are mapped too.
        FieldElement acc = owner_->zero();
        FieldElement ip = owner_->one();
        for (int j = 0; j < lv.degree; ++j) {
            FieldElement cj(owner_, lv.minpoly[j]);
            acc = acc + (*this)(cj)*ip;
            ip = ip * images_[i];
        }
        acc = acc + ip;
        if (!acc.is_zero())
            throw std::invalid_argument("automorphism image of '" + lv.name +
                                        "' is not a root of its minimal polynomial");
    }
}

FieldElement Automorphism::operator()(const FieldElement& x) const {
    if (x.owner() != owner_) throw std::invalid_argument("automorphism owner mismatch");
    FieldElement acc = owner_->zero();
    for (const auto& [e, c] : x.coords()) {
        FieldElement term = owner_->from_rational(c);
        for (int i = 0; i < owner_->num_levels(); ++i)
            if (e[i] > 0) term = term * images_[i].pow(e[i]);
        acc = acc + term;
    }
    return acc;
}

Automorphism Automorphism::compose(const Automorphism& inner) const {
    std::vector<FieldElement> imgs;
    imgs.reserve(images_.size());
    for (const FieldElement& g : inner.images_) imgs.push_back((*this)(g));
    return Automorphism(name_ + "*" + inner.name_, owner_, std::move(imgs));
}

bool Automorphism::same_map(const Automorphism& o) const {
    if (owner_ != o.owner_) return false;
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (!(images_[i] == o.images_[i])) return false;
    return true;
}

bool Automorphism::is_identity() const {
    for (int i = 0; i < owner_->num_levels(); ++i)
        if (!(images_[i] == owner_->generator(i))) return false;
    return true;
}

Automorphism Automorphism::identity(TowerPtr owner) {
    std::vector<FieldElement> imgs;
    for (int i = 0; i < owner->num_levels(); ++i) imgs.push_back(owner->generator(i));
    return Automorphism("id", owner, std::move(imgs));
}

// ---------------------------------------------------------------------------
// GaloisGroup

GaloisGroup GaloisGroup::verify(TowerPtr owner, std::vector<Automorphism> elements,
                                bool galois_over_q) {
    bool has_id = false;
    for (const auto& s : elements)
        if (s.is_identity()) has_id = true;
    if (!has_id) throw std::invalid_argument("galois group: identity missing");
    for (std::size_t i = 0; i < elements.size(); ++i)
        for (std::size_t j = i + 1; j < elements.size(); ++j)
            if (elements[i].same_map(elements[j]))
                throw std::invalid_argument("galois group: duplicate elements");
    for (const auto& s : elements)
        for (const auto& t : elements) {
            Automorphism st = s.compose(t);
            bool found = false;
            for (const auto& u : elements)
                if (u.same_map(st)) {
                    found = true;
                    break;
                }
            if (!found) throw std::invalid_argument("galois group: not closed under composition");
        }
    if (galois_over_q && static_cast<long>(elements.size()) != owner->dimension())
        throw std::invalid_argument("galois group: order differs from the Q-dimension");
    return GaloisGroup(std::move(owner), std::move(elements));
}

GaloisGroup GaloisGroup::trivial(TowerPtr owner) {
    std::vector<Automorphism> e;
    e.push_back(Automorphism::identity(owner));
    return GaloisGroup(std::move(owner), std::move(e));
}

// ---------------------------------------------------------------------------

FieldElement eval_poly_at(const std::vector<Rational>& coeffs, const FieldElement& x) {
    FieldElement acc = x.owner()->zero();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * x + x.owner()->from_rational(*it);
    return acc;
}

int sign_at(const std::vector<Rational>& coeffs, const Rational& x) {
    Rational acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return sgn(acc);
}

}  // namespace kgeo
