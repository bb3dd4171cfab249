#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace kgeo {

using Int = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline int sgn(const Rational& r) { return mpq_sgn(r.get_mpq_t()); }

/// Parses "3", "-7/2" or a decimal literal like "1.18" into an exact rational.
std::optional<Rational> parse_rational(const std::string& text);

/// Canonical text form: "n" or "n/d" with d > 1.
std::string to_string(const Rational& r);

}  // namespace kgeo
