#pragma once

// Closed intervals and rectangles with exact rational endpoints.

#include "mahler/polycore/integer.hpp"

namespace mahler {

struct Interval {
    Rational lo, hi;

    Interval() = default;
    Interval(Rational a, Rational b) : lo(std::move(a)), hi(std::move(b)) {}
    static Interval point(const Rational& a) { return {a, a}; }

    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool intersects(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }
    bool positive() const { return lo > 0; }
    // Outward rounding of both ends to the grid 2^-bits.
    Interval rounded(long bits) const;
    // Relative width (hi - lo) / lo for positive intervals.
    Rational relative_width() const;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
// Requires 0 outside b.
Interval operator/(const Interval& a, const Interval& b);
Interval square(const Interval& a);
Interval hull(const Interval& a, const Interval& b);
Interval intersect(const Interval& a, const Interval& b);
Interval max_with(const Interval& a, const Rational& c);
// Enclosure of sqrt(a) for a.lo >= 0, on the grid 2^-bits.
Interval sqrt_enclosure(const Interval& a, long bits);
// Enclosure of a^(1/n) for a.lo >= 0.
Interval root_enclosure(const Interval& a, unsigned long n, long bits);
Interval pow(const Interval& a, unsigned long n);

// Axis-parallel rectangle in the complex plane.
struct CInterval {
    Interval re, im;

    static CInterval point(const Rational& x, const Rational& y = 0) {
        return {Interval::point(x), Interval::point(y)};
    }
    bool intersects(const CInterval& o) const { return re.intersects(o.re) && im.intersects(o.im); }
    bool contains(const CInterval& o) const { return re.contains(o.re) && im.contains(o.im); }
    Rational width() const;
    CInterval rounded(long bits) const { return {re.rounded(bits), im.rounded(bits)}; }
    CInterval conj() const { return {re, -im}; }
    // Enclosure of |z|^2.
    Interval norm2() const { return square(re) + square(im); }
};

CInterval operator+(const CInterval& a, const CInterval& b);
CInterval operator-(const CInterval& a, const CInterval& b);
CInterval operator*(const CInterval& a, const CInterval& b);
// Requires 0 outside b.
CInterval inverse(const CInterval& b);
CInterval pow(const CInterval& a, unsigned long n);

} // namespace mahler
