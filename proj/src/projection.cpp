#include "kgeo/projection.hpp"

#include <random>
#include <stdexcept>

namespace kgeo {

void ProjectionSpec::validate() const {
    if (r <= 0 || r >= n) throw std::invalid_argument("projection needs 0 < r < n");
    if (static_cast<int>(A.size()) != r)
        throw std::invalid_argument("projection matrix row count mismatch");
    for (const auto& row : A)
        if (static_cast<int>(row.size()) != n - r)
            throw std::invalid_argument("projection matrix column count mismatch");
}

std::vector<FieldElement> apply_projection(const ProjectionSpec& spec,
                                           const std::vector<FieldElement>& point) {
    spec.validate();
    if (static_cast<int>(point.size()) != spec.n)
        throw std::invalid_argument("projection point arity mismatch");
    std::vector<FieldElement> out;
    for (int i = 0; i < spec.r; ++i) {
        FieldElement v = point[i];
        for (int j = 0; j < spec.n - spec.r; ++j)
            v = v - point[spec.r + j].scaled(spec.A[i][j]);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<MultiPoly> shear_generators(const ProjectionSpec& spec,
                                        const std::vector<MultiPoly>& gens) {
    spec.validate();
    if (gens.empty()) return {};
    const RingPtr& ring = gens.front().ring();
    if (ring->nvars() != spec.n) throw std::invalid_argument("projection ring arity mismatch");
    std::vector<MultiPoly> images;
    for (int i = 0; i < spec.n; ++i) images.push_back(MultiPoly::variable(ring, i));
    for (int i = 0; i < spec.r; ++i)
        for (int j = 0; j < spec.n - spec.r; ++j)
            images[i] = images[i] +
                        MultiPoly::variable(ring, spec.r + j).scaled(spec.A[i][j]);
    std::vector<MultiPoly> out;
    for (const auto& g : gens) out.push_back(g.substitute(images));
    return out;
}

namespace {

bool monic_in(const MultiPoly& g, int var) {
    int d = g.degree_in(var);
    if (d <= 0) return false;
    // The top slice in `var` must be a single constant-coefficient monomial.
    MultiPoly top = MultiPoly::zero(g.ring());
    for (const auto& [m, c] : g.terms())
        if (m[var] == d) {
            for (int i = 0; i < g.ring()->nvars(); ++i)
                if (i != var && m[i] != 0) return false;
            top = top + MultiPoly::constant(g.ring(), c);
        }
    return top.is_constant() && !top.is_zero();
}

Ideal restrict_ring(const std::vector<MultiPoly>& gens, const RingPtr& from,
                    const std::vector<int>& keep_vars) {
    std::vector<std::string> names;
    for (int v : keep_vars) names.push_back(from->vars[v]);
    RingPtr target = PolyRing::make(std::move(names), from->field);
    std::vector<MultiPoly> out;
    for (const auto& g : gens)
        if (!g.is_zero()) out.push_back(g.to_ring(target));
    return Ideal(target, std::move(out));
}

}  // namespace

Ideal monic_project(const Ideal& I, bool* had_monic) {
    const RingPtr& ring = I.ring();
    const int n = ring->nvars();
    if (n < 2) throw std::invalid_argument("nothing to eliminate");
    bool monic = false;
    for (const auto& g : I.generators())
        if (monic_in(g, n - 1)) {
            monic = true;
            break;
        }
    if (had_monic) *had_monic = monic;
    std::vector<bool> keep(n, true);
    keep[n - 1] = false;
    Ideal elim = elimination_ideal(I, keep);
    std::vector<int> keep_vars;
    for (int i = 0; i + 1 < n; ++i) keep_vars.push_back(i);
    return restrict_ring(elim.generators(), ring, keep_vars);
}

bool apex_avoidance(const Ideal& H, const ProjectionSpec& spec) {
    spec.validate();
    const RingPtr& ring = H.ring();
    if (ring->nvars() != spec.n + 1)
        throw std::invalid_argument("homogeneous closure must have n+1 variables");
    for (const auto& g : H.generators()) {
        int d = -1;
        for (const auto& [m, c] : g.terms()) {
            (void)c;
            int s = 0;
            for (int e : m) s += e;
            if (d < 0) d = s;
            if (s != d) throw std::invalid_argument("apex check needs homogeneous generators");
        }
    }
    // Substitute x0 = 0, x'_i = sum_j A_ij x''_j into the x'' variables only.
    const int k = spec.n - spec.r;
    std::vector<std::string> names;
    for (int j = 0; j < k; ++j) names.push_back(ring->vars[1 + spec.r + j]);
    RingPtr rk = PolyRing::make(std::move(names), ring->field);
    std::vector<MultiPoly> images;
    images.push_back(MultiPoly::zero(rk));  // x0
    for (int i = 0; i < spec.r; ++i) {
        MultiPoly v = MultiPoly::zero(rk);
        for (int j = 0; j < k; ++j)
            v = v + MultiPoly::variable(rk, j).scaled(spec.A[i][j]);
        images.push_back(std::move(v));
    }
    for (int j = 0; j < k; ++j) images.push_back(MultiPoly::variable(rk, j));
    std::vector<MultiPoly> gens;
    for (const auto& g : H.generators()) {
        MultiPoly h = g.substitute(images);
        if (!h.is_zero()) gens.push_back(std::move(h));
    }
    Ideal J(rk, std::move(gens));
    for (int j = 0; j < k; ++j)
        if (!radical_membership(MultiPoly::variable(rk, j), J)) return false;
    return true;
}

Ideal generic_project(const Ideal& I, const ProjectionSpec& spec) {
    spec.validate();
    const RingPtr& ring = I.ring();
    if (ring->nvars() != spec.n) throw std::invalid_argument("projection ring arity mismatch");
    std::vector<MultiPoly> sheared = shear_generators(spec, I.generators());
    Ideal J(ring, std::move(sheared));
    std::vector<bool> keep(spec.n, false);
    for (int i = 0; i < spec.r; ++i) keep[i] = true;
    Ideal elim = elimination_ideal(J, keep);
    std::vector<int> keep_vars;
    for (int i = 0; i < spec.r; ++i) keep_vars.push_back(i);
    return restrict_ring(elim.generators(), ring, keep_vars);
}

std::optional<ProjectionSpec> find_generic_matrix(const Ideal& H, int n, int r,
                                                  unsigned seed, int max_attempts,
                                                  int height) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-height, height);
    std::uniform_int_distribution<int> den(1, height);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        ProjectionSpec spec;
        spec.n = n;
        spec.r = r;
        spec.A.assign(r, std::vector<Rational>(n - r, Rational(0)));
        for (auto& row : spec.A)
            for (auto& e : row) e = rat(num(rng), den(rng));
        if (apex_avoidance(H, spec)) return spec;
    }
    return std::nullopt;
}

namespace {

int field_rank(std::vector<std::vector<FieldElement>> m) {
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
        for (int i = rank + 1; i < static_cast<int>(m.size()); ++i) {
            if (m[i][col].is_zero()) continue;
            FieldElement f = m[i][col] * m[rank][col].inv();
            for (int j = col; j < cols; ++j) m[i][j] = m[i][j] - f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

Verdict biregular_samples_verdict(const Ideal& I, const ProjectionSpec& spec,
                                  const std::vector<AlgebraicPoint>& samples) {
    spec.validate();
    Verdict v;
    for (const auto& a : samples)
        for (const auto& g : I.generators())
            if (!g.evaluate(a.coords).is_zero())
                throw std::invalid_argument("sample off the variety");
    std::vector<std::vector<FieldElement>> images;
    for (const auto& a : samples) images.push_back(apply_projection(spec, a.coords));
    for (std::size_t i = 0; i < images.size(); ++i)
        for (std::size_t j = i + 1; j < images.size(); ++j) {
            bool same = true;
            for (int c = 0; c < spec.r && same; ++c)
                if (!(images[i][c] - images[j][c]).is_zero()) same = false;
            if (same) {
                v.outcome = Verdict::Refuted;
                v.note = "samples " + std::to_string(i) + " and " + std::to_string(j) +
                         " collide under the projection";
                return v;
            }
        }
    // Differential of pi_A is the constant matrix (I_r | -A); injectivity on
    // each tangent space means the images of a tangent basis stay independent.
    for (std::size_t s = 0; s < samples.size(); ++s) {
        const auto& a = samples[s];
        auto tangents = tangent_space(I.generators(), a);
        std::vector<std::vector<FieldElement>> mapped;
        for (const auto& t : tangents) {
            std::vector<FieldElement> row;
            for (int i = 0; i < spec.r; ++i) {
                FieldElement e = t[i];
                for (int j = 0; j < spec.n - spec.r; ++j)
                    e = e - t[spec.r + j].scaled(spec.A[i][j]);
                row.push_back(std::move(e));
            }
            mapped.push_back(std::move(row));
        }
        int rk = field_rank(mapped);
        v.ranks.push_back(rk);
        if (rk < static_cast<int>(tangents.size())) {
            v.outcome = Verdict::Refuted;
            v.note = "differential has a kernel at sample " + std::to_string(s);
            return v;
        }
    }
    v.outcome = Verdict::Proven;
    v.note = "proven at the supplied samples only";
    return v;
}

}  // namespace kgeo
