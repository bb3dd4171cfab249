#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "kgeo/multipoly.hpp"

namespace kgeo {

/// Monomial orders: lex, graded reverse lex, and the elimination order that
/// ranks the first `split` variables strictly above the rest (grevlex within
/// each block).
struct TermOrder {
    enum Kind { Lex, GrevLex, Block };
    Kind kind = Lex;
    int split = 0;  // Block only: size of the leading (eliminated) block.

    static TermOrder lex() { return {Lex, 0}; }
    static TermOrder grevlex() { return {GrevLex, 0}; }
    static TermOrder block(int split) { return {Block, split}; }

    /// true when a > b.
    bool greater(const Mono& a, const Mono& b) const;

    bool operator<(const TermOrder& o) const {
        return kind != o.kind ? kind < o.kind : split < o.split;
    }
};

struct GroebnerBasis {
    TermOrder order;
    std::vector<MultiPoly> basis;  // reduced, monic leading coefficients
};

std::pair<Mono, FieldElement> leading_term(const MultiPoly& f, const TermOrder& ord);

/// Remainder of f on division by the (nonempty leading terms) list G.
MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& G,
                      const TermOrder& ord);

GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, const TermOrder& ord);

class Ideal {
public:
    Ideal(RingPtr ring, std::vector<MultiPoly> generators);
    Ideal(const Ideal& other);
    Ideal(Ideal&& other) noexcept;
    Ideal& operator=(Ideal other);

    const RingPtr& ring() const { return ring_; }
    const std::vector<MultiPoly>& generators() const { return gens_; }

    /// Reduced Groebner basis, cached per order (write-once).
    const GroebnerBasis& groebner(const TermOrder& ord) const;

    bool is_unit() const;
    bool is_zero_ideal() const;

private:
    RingPtr ring_;
    std::vector<MultiPoly> gens_;
    mutable std::mutex cache_mutex_;
    mutable std::map<TermOrder, GroebnerBasis> cache_;
};

bool ideal_membership(const MultiPoly& f, const Ideal& I);
bool radical_membership(const MultiPoly& f, const Ideal& I);

/// I ∩ K[keep] where keep[i] flags the variables that survive.
Ideal elimination_ideal(const Ideal& I, const std::vector<bool>& keep);

Ideal intersect_ideals(const Ideal& I, const Ideal& J);

bool ideal_equal(const Ideal& I, const Ideal& J);
bool radical_equal(const Ideal& I, const Ideal& J);

/// Krull dimension of R/I; -1 for the unit ideal.
int krull_dimension(const Ideal& I);

}  // namespace kgeo
