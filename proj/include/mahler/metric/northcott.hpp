#pragma once

// Elements of bounded Weil height in Q and in quadratic fields, the smallest height above 1
// and the resulting bound on the length of restricted representations.

#include "mahler/algnum/field.hpp"
#include "mahler/heights/measure.hpp"

#include <vector>

namespace mahler {

struct HeightEntry {
    FieldElement element;
    int degree = 1;           // degree of the element over Q
    AlgebraicNumber measure;  // M(element), a positive real number of degree <= 2
    MeasureValue height;      // M(element)^(1/degree)
};

// Every x in K^x with H(x) <= B, ordered by height, then minimal polynomial, then root.
// K must be Q or quadratic; UnsupportedDegree otherwise.
std::vector<HeightEntry> northcott_enumerate(const NumberField& K, const Rational& B);

// Smallest H(x) over non-torsion x in K (Q or quadratic), with a minimizer.
HeightEntry smallest_height(const NumberField& K);
// The same for the Galois closure of Q(alpha).
HeightEntry q_of(const AlgebraicNumber& alpha, int closure_cap = kDefaultClosureCap);

// Largest N >= 1 with q^(N-1) <= B, i.e. floor(1 + log B / log q); q > 1, B >= 1.
int length_bound(const MeasureValue& q, const MeasureValue& B);

} // namespace mahler
