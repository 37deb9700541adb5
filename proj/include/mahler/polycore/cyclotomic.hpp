#pragma once

#include "mahler/polycore/polynomial.hpp"

namespace mahler {

// The n-th cyclotomic polynomial.
IntPoly cyclotomic_poly(unsigned long n);

// n when the primitive polynomial f equals the n-th cyclotomic polynomial, otherwise 0.
unsigned long cyclotomic_index(const IntPoly& f);

// Euler's totient.
unsigned long euler_phi(unsigned long n);

// True when every root of p is zero or a root of unity.
bool is_cyclotomic_product(const IntPoly& p);

} // namespace mahler
