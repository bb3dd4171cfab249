// Command-line front end: parses a session file declaring a tower field,
// automorphisms, polynomials, points and matrices, then dispatches one
// command against the library. Text output by default, JSON with
// --structured.

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "kgeo/completion.hpp"
#include "kgeo/projection.hpp"

using namespace kgeo;
using json = nlohmann::ordered_json;

namespace {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_top(const std::string& s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == sep && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!trim(cur).empty()) out.push_back(trim(cur));
    return out;
}

Rational parse_rat_or_throw(const std::string& s) {
    auto r = parse_rational(trim(s));
    if (!r) throw ParseError("cannot read rational '" + s + "'");
    return *r;
}

// "[a,b]" optionally followed by "+[c,d]i" / "+[c,d]*i".
Box parse_box(const std::string& text, bool* exact) {
    std::string s = trim(text);
    auto read_interval = [&](std::size_t& pos) {
        if (pos >= s.size() || s[pos] != '[') throw ParseError("expected '[' in box: " + text);
        std::size_t close = s.find(']', pos);
        if (close == std::string::npos) throw ParseError("unterminated interval: " + text);
        auto parts = split_top(s.substr(pos + 1, close - pos - 1), ',');
        if (parts.size() != 2) throw ParseError("interval needs two endpoints: " + text);
        pos = close + 1;
        return Interval(parse_rat_or_throw(parts[0]), parse_rat_or_throw(parts[1]));
    };
    std::size_t pos = 0;
    Interval re = read_interval(pos);
    Interval im = Interval::point(Rational(0));
    std::string rest = trim(s.substr(pos));
    if (!rest.empty()) {
        if (rest.front() != '+') throw ParseError("malformed box: " + text);
        std::string t = trim(rest.substr(1));
        if (t.empty() || t[0] != '[' || t.find(']') == std::string::npos)
            throw ParseError("malformed box: " + text);
        std::size_t close = t.find(']');
        auto parts = split_top(t.substr(1, close - 1), ',');
        if (parts.size() != 2) throw ParseError("interval needs two endpoints: " + text);
        std::string suffix = trim(t.substr(close + 1));
        if (suffix != "i" && suffix != "*i")
            throw ParseError("imaginary part must end with 'i': " + text);
        im = Interval(parse_rat_or_throw(parts[0]), parse_rat_or_throw(parts[1]));
    }
    if (exact) *exact = re.is_point() && im.is_point();
    return Box(re, im);
}

CoordMap pad_coords(const CoordMap& c, int len) {
    CoordMap out;
    for (const auto& [e, q] : c) {
        Expo ee = e;
        ee.resize(len, 0);
        out.emplace(std::move(ee), q);
    }
    return out;
}

// "field Q(a : a^4 - 2 in [1.18,1.20]; i : i^2 + 1 in [0,0]+[0.9,1.1]i)"
TowerPtr parse_field(const std::string& body) {
    std::string s = trim(body);
    if (s.rfind("Q(", 0) != 0 || s.back() != ')')
        throw ParseError("field declaration must look like Q(...)");
    s = s.substr(2, s.size() - 3);
    std::vector<TowerLevel> levels;  // minpoly coords with Expo length = level index
    std::vector<TowerLevel> partial;
    for (const std::string& clause : split_top(s, ';')) {
        std::size_t colon = clause.find(':');
        if (colon == std::string::npos) throw ParseError("level needs 'name : minpoly in box'");
        std::string name = trim(clause.substr(0, colon));
        std::string rest = clause.substr(colon + 1);
        std::size_t inpos = rest.rfind(" in ");
        if (inpos == std::string::npos) throw ParseError("level needs an 'in [..]' box");
        std::string poly_text = trim(rest.substr(0, inpos));
        std::string box_text = trim(rest.substr(inpos + 4));

        const int k = static_cast<int>(levels.size());
        std::vector<TowerLevel> below;
        for (const auto& l : levels) {
            TowerLevel lv = l;
            std::vector<CoordMap> mp;
            for (const auto& c : l.minpoly) mp.push_back(pad_coords(c, k));
            lv.minpoly = std::move(mp);
            below.push_back(std::move(lv));
        }
        TowerPtr sub = below.empty() ? TowerField::rationals() : TowerField::make(below);
        RingPtr r1 = PolyRing::make({name}, sub);
        MultiPoly m = parse_poly(r1, poly_text);
        int d = m.degree_in(0);
        if (d < 2) throw ParseError("minimal polynomial of " + name + " must have degree >= 2");
        FieldElement lead = sub->zero();
        std::vector<CoordMap> coeffs(d);
        for (const auto& [mono, c] : m.terms()) {
            if (mono[0] == d)
                lead = c;
            else
                coeffs[mono[0]] = c.coords();
        }
        if (!lead.is_rational() || lead.rational_value() != Rational(1))
            throw ParseError("minimal polynomial of " + name + " must be monic");
        TowerLevel lv;
        lv.name = name;
        lv.degree = d;
        lv.minpoly = std::move(coeffs);
        lv.box = parse_box(box_text, &lv.exact_point);
        levels.push_back(std::move(lv));
    }
    const int n = static_cast<int>(levels.size());
    for (auto& l : levels) {
        std::vector<CoordMap> mp;
        for (const auto& c : l.minpoly) mp.push_back(pad_coords(c, n));
        l.minpoly = std::move(mp);
    }
    return TowerField::make(levels);
}

struct Session {
    TowerPtr field = TowerField::rationals();
    std::vector<Automorphism> autos;
    std::optional<GaloisGroup> group;
    RingPtr ring;
    std::vector<std::pair<std::string, MultiPoly>> polys;
    std::vector<std::pair<std::string, std::vector<FieldElement>>> points;
    std::vector<std::pair<std::string, std::vector<std::vector<Rational>>>> matrices;
    std::map<std::string, std::string> options;

    const MultiPoly& poly(const std::string& name) const {
        for (const auto& [k, v] : polys)
            if (k == name) return v;
        throw ParseError("unknown polynomial '" + name + "'");
    }
    const std::vector<FieldElement>& point(const std::string& name) const {
        for (const auto& [k, v] : points)
            if (k == name) return v;
        throw ParseError("unknown point '" + name + "'");
    }
    const std::vector<std::vector<Rational>>& matrix(const std::string& name) const {
        for (const auto& [k, v] : matrices)
            if (k == name) return v;
        throw ParseError("unknown matrix '" + name + "'");
    }
    const GaloisGroup& need_group() const {
        if (!group) throw ParseError("session declares no group");
        return *group;
    }
};

FieldElement parse_element(const Session& ses, const std::string& text) {
    RingPtr r0 = PolyRing::make({}, ses.field);
    MultiPoly p = parse_poly(r0, text);
    if (!p.is_constant()) throw ParseError("expected a field element: " + text);
    return p.is_zero() ? ses.field->zero() : p.constant_value();
}

// Identifiers appearing in polynomial/point expressions that are not tower
// generators become the ring variables, in order of first appearance.
std::vector<std::string> discover_vars(const Session& ses,
                                       const std::vector<std::string>& exprs) {
    std::vector<std::string> vars;
    if (auto it = ses.options.find("vars"); it != ses.options.end()) {
        for (auto& v : split_top(it->second, ',')) vars.push_back(v);
        return vars;
    }
    for (const auto& e : exprs) {
        std::size_t i = 0;
        while (i < e.size()) {
            if (std::isalpha(static_cast<unsigned char>(e[i])) || e[i] == '_') {
                std::size_t j = i;
                while (j < e.size() &&
                       (std::isalnum(static_cast<unsigned char>(e[j])) || e[j] == '_'))
                    ++j;
                std::string id = e.substr(i, j - i);
                if (ses.field->level_index(id) < 0 &&
                    std::find(vars.begin(), vars.end(), id) == vars.end())
                    vars.push_back(id);
                i = j;
            } else {
                ++i;
            }
        }
    }
    return vars;
}

Session parse_session(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open session file: " + path);
    Session ses;
    std::vector<std::pair<std::string, std::string>> deferred;  // kind, rest
    std::string line;
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::istringstream ls(t);
        std::string kind;
        ls >> kind;
        std::string rest = trim(t.substr(kind.size()));
        if (kind == "field") {
            ses.field = parse_field(rest);
        } else if (kind == "auto") {
            std::size_t colon = rest.find(':');
            if (colon == std::string::npos) throw ParseError("auto needs 'name : maps'");
            std::string name = trim(rest.substr(0, colon));
            std::vector<FieldElement> images;
            for (int i = 0; i < ses.field->num_levels(); ++i)
                images.push_back(ses.field->generator(i));
            for (const auto& m : split_top(rest.substr(colon + 1), ',')) {
                std::size_t arrow = m.find("->");
                if (arrow == std::string::npos) throw ParseError("auto map needs '->'");
                std::string gen = trim(m.substr(0, arrow));
                int idx = ses.field->level_index(gen);
                if (idx < 0) throw ParseError("unknown generator '" + gen + "'");
                images[idx] = parse_element(ses, m.substr(arrow + 2));
            }
            ses.autos.emplace_back(name, ses.field, std::move(images));
        } else if (kind == "group") {
            std::vector<Automorphism> elems = ses.autos;
            bool has_id = false;
            for (const auto& a : elems)
                if (a.is_identity()) has_id = true;
            if (!has_id) elems.push_back(Automorphism::identity(ses.field));
            ses.group = GaloisGroup::verify(ses.field, std::move(elems), true);
        } else if (kind == "option") {
            std::istringstream os(rest);
            std::string key;
            os >> key;
            ses.options[key] = trim(rest.substr(key.size()));
        } else if (kind == "poly" || kind == "point" || kind == "matrix") {
            deferred.emplace_back(kind, rest);
        } else {
            throw ParseError("unknown declaration '" + kind + "'");
        }
    }
    std::vector<std::string> exprs;
    for (const auto& [kind, rest] : deferred) {
        std::size_t eq = rest.find('=');
        if (eq == std::string::npos) throw ParseError(kind + " needs 'NAME = ...'");
        if (kind == "poly") exprs.push_back(rest.substr(eq + 1));
    }
    ses.ring = PolyRing::make(discover_vars(ses, exprs), ses.field);
    for (const auto& [kind, rest] : deferred) {
        std::size_t eq = rest.find('=');
        std::string name = trim(rest.substr(0, eq));
        std::string value = trim(rest.substr(eq + 1));
        if (kind == "poly") {
            ses.polys.emplace_back(name, parse_poly(ses.ring, value));
        } else if (kind == "point") {
            if (value.front() != '(' || value.back() != ')')
                throw ParseError("point needs (e, ...)");
            std::vector<FieldElement> coords;
            for (const auto& e : split_top(value.substr(1, value.size() - 2), ','))
                coords.push_back(parse_element(ses, e));
            ses.points.emplace_back(name, std::move(coords));
        } else {
            if (value.front() != '[' || value.back() != ']')
                throw ParseError("matrix needs [[q,...],...]");
            std::vector<std::vector<Rational>> rows;
            for (const auto& row : split_top(value.substr(1, value.size() - 2), ',')) {
                if (row.front() != '[' || row.back() != ']')
                    throw ParseError("matrix row needs [q,...]");
                std::vector<Rational> r;
                for (const auto& e : split_top(row.substr(1, row.size() - 2), ','))
                    r.push_back(parse_rat_or_throw(e));
                rows.push_back(std::move(r));
            }
            ses.matrices.emplace_back(name, std::move(rows));
        }
    }
    return ses;
}

const char* outcome_name(Verdict::Outcome o) {
    switch (o) {
        case Verdict::Proven: return "proven";
        case Verdict::Refuted: return "refuted";
        default: return "unknown";
    }
}

json verdict_json(const Verdict& v) {
    json j;
    j["outcome"] = outcome_name(v.outcome);
    if (!v.note.empty()) j["note"] = v.note;
    if (!v.ranks.empty()) j["ranks"] = v.ranks;
    if (!v.sign_witnesses.empty()) {
        json w = json::array();
        for (const auto& sw : v.sign_witnesses) {
            json e;
            json pos = json::array(), neg = json::array();
            for (const auto& q : sw.pos) pos.push_back(to_string(q));
            for (const auto& q : sw.neg) neg.push_back(to_string(q));
            e["positive_at"] = pos;
            e["negative_at"] = neg;
            w.push_back(e);
        }
        j["sign_witnesses"] = w;
    }
    return j;
}

std::string verdict_text(const Verdict& v) {
    std::string s = outcome_name(v.outcome);
    if (!v.note.empty()) s += " (" + v.note + ")";
    return s;
}

std::string point_text(const std::vector<Rational>& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ", ";
        s += to_string(p[i]);
    }
    return s + ")";
}

struct Output {
    bool structured = false;
    json j;
    std::ostringstream text;

    void kv(const std::string& key, const std::string& value) {
        if (structured)
            j[key] = value;
        else
            text << key << " = " << value << "\n";
    }
    void polys_list(const std::string& key, const std::vector<MultiPoly>& ps) {
        if (structured) {
            json a = json::array();
            for (const auto& p : ps) a.push_back(p.to_string());
            j[key] = a;
        } else {
            text << key << ":\n";
            for (const auto& p : ps) text << "  " << p.to_string() << "\n";
        }
    }
    void verdict(const std::string& key, const Verdict& v) {
        if (structured)
            j[key] = verdict_json(v);
        else
            text << key << ": " << verdict_text(v) << "\n";
    }
};

// Rational-coefficient polynomials parsed in a tower session still live in
// the tower ring; the classification entry points want them over Q.
MultiPoly over_q(const Session& ses, const MultiPoly& f) {
    if (f.ring()->over_rationals()) return f;
    for (const auto& [m, c] : f.terms()) {
        (void)m;
        if (!c.is_rational()) return f;
    }
    return f.to_ring(PolyRing::make(f.ring()->vars, TowerField::rationals()));
}

std::vector<MultiPoly> named_polys(const Session& ses, const std::vector<std::string>& names) {
    std::vector<MultiPoly> out;
    if (names.empty())
        for (const auto& [k, v] : ses.polys) out.push_back(v);
    else
        for (const auto& n : names) out.push_back(ses.poly(n));
    if (out.empty()) throw ParseError("no polynomials in session");
    return out;
}

long option_long(const Session& ses, const std::string& key, long dflt) {
    auto it = ses.options.find(key);
    if (it == ses.options.end()) return dflt;
    return std::stol(it->second);
}

int run_command(const Session& ses, const std::string& cmd,
                const std::vector<std::string>& args, Output& out, bool strict) {
    const long height = option_long(ses, "height", 50);
    const long budget = option_long(ses, "budget", 20000);
    std::vector<Verdict> verdicts;

    if (cmd == "complete-poly") {
        if (args.size() != 1) throw ParseError("usage: complete-poly POLY");
        auto pc = galois_complete_polynomial(ses.poly(args[0]), ses.need_group());
        out.kv("g_bullet", pc.g_bullet.to_string());
        out.kv("g_star", pc.g_star.to_string());
    } else if (cmd == "complete-system") {
        auto cs = build_conjugate_system(named_polys(ses, args), ses.need_group());
        auto H = products_H(cs, option_long(ses, "product-cap", kProductCap));
        auto G = invariant_coefficients_G(cs, H.polys);
        out.kv("conjugate_systems", std::to_string(cs.systems.size()));
        out.kv("h_products", std::to_string(H.polys.size()));
        out.kv("h_capped", H.capped ? "yes" : "no");
        out.polys_list("g_invariants", G);
    } else if (cmd == "zero-ideal") {
        MultiPoly q = zero_ideal_geometric_hypersurface(named_polys(ses, args),
                                                        ses.need_group());
        out.kv("q_bullet", q.to_string());
    } else if (cmd == "classify") {
        if (args.empty()) throw ParseError("usage: classify POLY [FACTOR...]");
        MultiPoly f = over_q(ses, ses.poly(args[0]));
        std::vector<MultiPoly> factors;
        for (std::size_t i = 1; i < args.size(); ++i) factors.push_back(ses.poly(args[i]));
        Verdict geo = k_geometric_verdict(f, factors, budget, static_cast<int>(height));
        out.verdict("geometric", geo);
        verdicts.push_back(geo);
        if (!factors.empty()) {
            Verdict rel = k_reliable_verdict(f, factors, budget, static_cast<int>(height));
            out.verdict("reliable", rel);
            verdicts.push_back(rel);
        }
    } else if (cmd == "badset") {
        if (args.empty()) throw ParseError("usage: badset POLY FACTOR...");
        MultiPoly f = over_q(ses, ses.poly(args[0]));
        std::vector<MultiPoly> factors;
        for (std::size_t i = 1; i < args.size(); ++i) factors.push_back(ses.poly(args[i]));
        BadSetResult r = bad_set(f, factors);
        verdicts.push_back(r.verdict);
        out.verdict("status", r.verdict);
        for (std::size_t i = 0; i < r.components.size(); ++i)
            out.polys_list("component_" + std::to_string(i), r.components[i]);
    } else if (cmd == "defined-over-q") {
        auto cs = build_conjugate_system(named_polys(ses, args), ses.need_group());
        Verdict v = defined_over_K_verdict(cs, budget, static_cast<int>(height));
        verdicts.push_back(v);
        out.verdict("defined_over_q", v);
    } else if (cmd == "sing") {
        if (args.size() != 1) throw ParseError("usage: sing POLY");
        Ideal S = sing_hypersurface(ses.poly(args[0]));
        out.polys_list("sing_groebner", S.groebner(TermOrder::lex()).basis);
    } else if (cmd == "sing-system") {
        if (args.size() < 2) throw ParseError("usage: sing-system DIM POLY...");
        int d = std::stoi(args[0]);
        Ideal S = sing_irreducible(
            named_polys(ses, {args.begin() + 1, args.end()}), d);
        out.polys_list("sing_groebner", S.groebner(TermOrder::lex()).basis);
    } else if (cmd == "tangent") {
        if (args.size() < 2) throw ParseError("usage: tangent POINT POLY...");
        AlgebraicPoint a{ses.field, ses.point(args[0])};
        auto basis = tangent_space(named_polys(ses, {args.begin() + 1, args.end()}), a);
        if (out.structured) {
            json b = json::array();
            for (const auto& v : basis) {
                json row = json::array();
                for (const auto& e : v) row.push_back(e.to_string());
                b.push_back(row);
            }
            out.j["tangent_basis"] = b;
        } else {
            out.text << "tangent_basis:\n";
            for (const auto& v : basis) {
                out.text << "  (";
                for (std::size_t i = 0; i < v.size(); ++i)
                    out.text << (i ? ", " : "") << v[i].to_string();
                out.text << ")\n";
            }
        }
        out.kv("tangent_dimension", std::to_string(basis.size()));
    } else if (cmd == "dim") {
        Ideal I(ses.ring, named_polys(ses, args));
        out.kv("krull_dimension", std::to_string(krull_dimension(I)));
    } else if (cmd == "project") {
        if (args.size() < 2) throw ParseError("usage: project MATRIX R [POLY...]");
        ProjectionSpec spec;
        spec.A = ses.matrix(args[0]);
        spec.r = std::stoi(args[1]);
        spec.n = ses.ring->nvars();
        Ideal I(ses.ring, named_polys(ses, {args.begin() + 2, args.end()}));
        Ideal Y = generic_project(I, spec);
        out.polys_list("image_generators", Y.generators());
        out.kv("image_dimension", std::to_string(krull_dimension(Y)));
    } else if (cmd == "real-structure") {
        auto gens = named_polys(ses, args);
        if (ses.field->imaginary_unit_level() < 0) {
            // Adjoin i so the coordinate split z = x + i*y is expressible.
            const int n = ses.field->num_levels();
            std::vector<TowerLevel> levels;
            for (int k = 0; k < n; ++k) {
                TowerLevel lv = ses.field->level(k);
                for (auto& c : lv.minpoly) c = pad_coords(c, n + 1);
                levels.push_back(std::move(lv));
            }
            TowerLevel li;
            li.name = "i";
            li.degree = 2;
            li.minpoly = {CoordMap{{Expo(n + 1, 0), Rational(1)}}, CoordMap{}};
            li.box = Box(Interval::point(Rational(0)), Interval::point(Rational(1)));
            li.exact_point = true;
            levels.push_back(std::move(li));
            TowerPtr ext = TowerField::make(std::move(levels));
            RingPtr ext_ring = PolyRing::make(ses.ring->vars, ext);
            for (auto& g : gens) {
                std::map<Mono, FieldElement> t;
                for (const auto& [m, c] : g.terms())
                    t.emplace(m, FieldElement(ext, pad_coords(c.coords(), n + 1)));
                g = MultiPoly(ext_ring, std::move(t));
            }
        }
        out.polys_list("real_generators", underlying_real_structure(gens));
    } else if (cmd == "cluster") {
        if (args.size() != 1) throw ParseError("usage: cluster POLY");
        const MultiPoly& f = ses.poly(args[0]);
        int var = -1;
        for (int i = 0; i < f.ring()->nvars(); ++i)
            if (f.depends_on(i)) {
                if (var >= 0) throw ParseError("cluster needs a univariate polynomial");
                var = i;
            }
        if (var < 0) throw ParseError("cluster needs a non-constant polynomial");
        std::vector<Rational> coeffs(f.degree_in(var) + 1, Rational(0));
        for (const auto& [m, c] : f.terms()) {
            if (!c.is_rational()) throw ParseError("cluster needs rational coefficients");
            coeffs[m[var]] = c.rational_value();
        }
        mpfr_prec_t prec = static_cast<mpfr_prec_t>(
            option_long(ses, "precision", 128) * 3.33) + 16;
        auto cl = clustering_over_intermediate(coeffs, ses.field, 2, prec);
        if (!cl) {
            Verdict v;
            v.note = "clustering search inconclusive";
            verdicts.push_back(v);
            out.verdict("status", v);
        } else {
            out.kv("complete", cl->complete ? "yes" : "no");
            std::vector<std::string> texts;
            int idx = 0;
            for (const auto& fac : cl->factors) {
                // monic factor, coefficients low..high including the lead
                int deg = static_cast<int>(fac.size()) - 1;
                std::string s = deg == 1 ? "t" : "t^" + std::to_string(deg);
                for (int k = deg - 1; k >= 0; --k) {
                    if (fac[k].is_zero()) continue;
                    s += " + (" + fac[k].to_string() + ")";
                    if (k > 1)
                        s += "*t^" + std::to_string(k);
                    else if (k == 1)
                        s += "*t";
                }
                out.kv("factor_" + std::to_string(idx++), s);
            }
        }
    } else {
        throw ParseError("unknown command '" + cmd + "'");
    }

    if (strict)
        for (const auto& v : verdicts)
            if (v.outcome == Verdict::Unknown) return 2;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args;
    bool structured = false, strict = false;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--structured")
            structured = true;
        else if (a == "--strict")
            strict = true;
        else
            args.push_back(a);
    }
    if (args.size() < 2) {
        std::cerr << "usage: kgeo SESSION-FILE COMMAND [ARGS...] [--structured] [--strict]\n"
                  << "commands: complete-poly complete-system zero-ideal classify badset\n"
                  << "          defined-over-q sing sing-system tangent dim project\n"
                  << "          real-structure cluster\n";
        return 1;
    }
    try {
        auto t0 = std::chrono::steady_clock::now();
        Session ses = parse_session(args[0]);
        Output out;
        out.structured = structured;
        std::string cmd = args[1];
        std::vector<std::string> cmd_args(args.begin() + 2, args.end());
        int code = run_command(ses, cmd, cmd_args, out, strict);
        auto t1 = std::chrono::steady_clock::now();
        if (structured) {
            json top;
            top["command"] = cmd;
            top["arguments"] = cmd_args;
            top["session"] = args[0];
            top["results"] = out.j;
            top["elapsed_ms"] =
                std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
            std::cout << top.dump(2) << "\n";
        } else {
            std::cout << out.text.str();
        }
        return code;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
