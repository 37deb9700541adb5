#pragma once

#include "mahler/polycore/polynomial.hpp"

#include <utility>
#include <vector>

namespace mahler {

// Factorization over Q: p = constant * prod factor^multiplicity.
struct Factorization {
    Rational constant;
    std::vector<std::pair<IntPoly, int>> factors; // irreducible, primitive, positive leading coeff
};

inline constexpr int kDefaultFactorDegreeCap = 64;

// Squarefree decomposition, then Zassenhaus (modular factorization, Hensel lifting and
// subset recombination). Factors are sorted by degree, then by coefficients from the leading
// one down. Throws UnsupportedDegree when a squarefree part exceeds `degree_cap`.
Factorization factor_rational(const IntPoly& p, int degree_cap = kDefaultFactorDegreeCap);

// Irreducible factors of a squarefree primitive polynomial with positive leading coefficient.
std::vector<IntPoly> factor_squarefree(const IntPoly& f, int degree_cap = kDefaultFactorDegreeCap);

bool is_irreducible(const IntPoly& p);

// Distinct irreducible factors (multiplicities dropped), sorted as in factor_rational.
std::vector<IntPoly> irreducible_factors(const IntPoly& p, int degree_cap = kDefaultFactorDegreeCap);

} // namespace mahler
