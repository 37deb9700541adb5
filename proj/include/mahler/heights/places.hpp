#pragma once

// Weil height bookkeeping place by place.

#include "mahler/algnum/algebraic.hpp"

#include <vector>

namespace mahler {

// An embedding up to complex conjugation; local degree 1 for real, 2 for complex places.
struct ArchimedeanPlace {
    std::size_t conjugate = 0; // index into the root order of the minimal polynomial
    int local_degree = 1;
    Interval modulus;          // enclosure of |x| under this embedding
};

// Conjugates with a common p-adic valuation, read off one Newton polygon segment. Their
// places contribute prod |x|_v = p^exponent with exponent = -valuation * count / degree.
struct FinitePlaceGroup {
    Integer prime;
    Rational valuation;
    int count = 0;
    Rational exponent;
};

struct PlaceDecomposition {
    int degree = 0;
    std::vector<ArchimedeanPlace> archimedean;
    std::vector<FinitePlaceGroup> nonarchimedean;
};

// Segments of the p-adic Newton polygon as (root valuation, number of roots), valuations
// increasing. Zero roots are not counted.
std::vector<std::pair<Rational, int>> newton_slopes(const IntPoly& f, const Integer& p);

// Places of Q(x) for nonzero x. Finite places are listed for the primes dividing the leading
// or constant coefficient of the minimal polynomial; all others have |x|_v = 1.
PlaceDecomposition place_decomposition(const AlgebraicNumber& x, long bits);

// Checks prod_v |x|_v = 1: the finite part exactly, the archimedean part by enclosure.
bool product_formula_holds(const PlaceDecomposition& d);

} // namespace mahler
