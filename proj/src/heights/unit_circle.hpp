#pragma once

#include "mahler/polycore/polynomial.hpp"

namespace mahler::detail {

// Where the roots of an irreducible integer polynomial lie relative to the unit circle.
enum class CircleSide { inside, outside, on_circle, mixed };

CircleSide unit_circle_side(const IntPoly& f);

// Extra root precision so that products over all roots keep about `bits` correct bits.
long guard_bits(const IntPoly& f);

} // namespace mahler::detail
