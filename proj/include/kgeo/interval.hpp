#pragma once

#include <algorithm>
#include <stdexcept>

#include "kgeo/rational.hpp"

namespace kgeo {

/// Closed interval with exact rational endpoints.
struct Interval {
    Rational lo, hi;

    Interval() : lo(0), hi(0) {}
    Interval(Rational a, Rational b) : lo(std::move(a)), hi(std::move(b)) {
        if (lo > hi) throw std::invalid_argument("interval endpoints out of order");
    }
    static Interval point(const Rational& r) { return Interval(r, r); }

    bool is_point() const { return lo == hi; }
    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    Rational mid() const { return (lo + hi) / 2; }
    Rational width() const { return hi - lo; }

    Interval operator+(const Interval& o) const { return Interval(lo + o.lo, hi + o.hi); }
    Interval operator-(const Interval& o) const { return Interval(lo - o.hi, hi - o.lo); }
    Interval operator-() const { return Interval(-hi, -lo); }
    Interval operator*(const Interval& o) const {
        Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        return Interval(std::min(std::min(a, b), std::min(c, d)),
                        std::max(std::max(a, b), std::max(c, d)));
    }
    Interval scaled(const Rational& r) const {
        if (sgn(r) >= 0) return Interval(lo * r, hi * r);
        return Interval(hi * r, lo * r);
    }
};

/// Rectangular complex interval; real embeddings have im = [0,0].
struct Box {
    Interval re, im;

    Box() = default;
    Box(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}

    bool is_real() const { return im.is_point() && sgn(im.lo) == 0; }
    bool is_point() const { return re.is_point() && im.is_point(); }
    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }

    Box operator+(const Box& o) const { return Box(re + o.re, im + o.im); }
    Box operator-(const Box& o) const { return Box(re - o.re, im - o.im); }
    Box operator*(const Box& o) const {
        return Box(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    Box scaled(const Rational& r) const { return Box(re.scaled(r), im.scaled(r)); }
};

}  // namespace kgeo
