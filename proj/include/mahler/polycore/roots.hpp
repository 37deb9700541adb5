#pragma once

// Certified isolation of the complex roots of an integer polynomial.

#include "mahler/polycore/interval.hpp"
#include "mahler/polycore/polynomial.hpp"

#include <vector>

namespace mahler {

// Rectangle holding exactly `multiplicity` roots (with multiplicity) of its polynomial in its
// interior. Boxes returned together are pairwise disjoint.
struct RootBox {
    Rational re_lo, re_hi, im_lo, im_hi;
    int multiplicity = 1;

    Rational re_mid() const { return (re_lo + re_hi) / 2; }
    Rational im_mid() const { return (im_lo + im_hi) / 2; }
    Rational width() const;
    CInterval region() const { return {{re_lo, re_hi}, {im_lo, im_hi}}; }
    bool intersects(const RootBox& o) const { return region().intersects(o.region()); }
    // A box symmetric about the real axis isolates a real root of a real polynomial.
    bool is_real() const { return im_lo == -im_hi; }
    // Certified sign of the imaginary part (0 for real roots).
    int im_sign() const;
};

// Default box width 2^-60.
Rational default_precision();

// Boxes of width <= precision around every root of p (p nonzero), sorted by the real and then
// the imaginary part of their centers. A real root gets a box symmetric about the real axis,
// and the boxes of a conjugate pair are mirror images.
std::vector<RootBox> isolate_roots(const IntPoly& p, const Rational& precision);

} // namespace mahler
