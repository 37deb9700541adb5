#include "mahler/polycore/interval.hpp"

#include "mahler/error.hpp"

#include <algorithm>

namespace mahler {

Interval Interval::rounded(long bits) const { return {dyadic_floor(lo, bits), dyadic_ceil(hi, bits)}; }

Rational Interval::relative_width() const {
    if (lo <= 0) throw DomainError("relative width of a nonpositive interval");
    return (hi - lo) / lo;
}

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
    Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains(Rational(0))) throw DomainError("interval division by an interval containing zero");
    return a * Interval(1 / b.hi, 1 / b.lo);
}

Interval square(const Interval& a) {
    if (a.lo >= 0) return {a.lo * a.lo, a.hi * a.hi};
    if (a.hi <= 0) return {a.hi * a.hi, a.lo * a.lo};
    const Rational m = std::max(Rational(-a.lo), a.hi);
    return {Rational(0), m * m};
}

Interval hull(const Interval& a, const Interval& b) { return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)}; }

Interval intersect(const Interval& a, const Interval& b) { return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)}; }

Interval max_with(const Interval& a, const Rational& c) { return {std::max(a.lo, c), std::max(a.hi, c)}; }

Interval sqrt_enclosure(const Interval& a, long bits) { return root_enclosure(a, 2, bits); }

Interval root_enclosure(const Interval& a, unsigned long n, long bits) {
    if (a.lo < 0) throw DomainError("root of an interval with negative part");
    return {root_lower(a.lo, n, bits), root_upper(a.hi, n, bits)};
}

Interval pow(const Interval& a, unsigned long n) {
    Interval r = Interval::point(Rational(1));
    for (unsigned long i = 0; i < n; ++i) r = r * a;
    return r;
}

Rational CInterval::width() const { return std::max(re.width(), im.width()); }

CInterval operator+(const CInterval& a, const CInterval& b) { return {a.re + b.re, a.im + b.im}; }
CInterval operator-(const CInterval& a, const CInterval& b) { return {a.re - b.re, a.im - b.im}; }

CInterval operator*(const CInterval& a, const CInterval& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

CInterval inverse(const CInterval& b) {
    const Interval n = b.norm2();
    return {b.re / n, (-b.im) / n};
}

CInterval pow(const CInterval& a, unsigned long n) {
    CInterval r = CInterval::point(Rational(1));
    CInterval base = a;
    while (n) {
        if (n & 1ul) r = r * base;
        n >>= 1ul;
        if (n) base = base * base;
    }
    return r;
}

} // namespace mahler
