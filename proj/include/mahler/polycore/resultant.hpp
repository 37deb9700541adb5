#pragma once

// Resultants via fraction-free (Bareiss) elimination of the Sylvester matrix, and the
// composed polynomials built from them by evaluation and interpolation.

#include "mahler/polycore/polynomial.hpp"

#include <functional>
#include <vector>

namespace mahler {

// Determinant of a square integer matrix (row-major, n*n entries).
Integer determinant(std::vector<Integer> m, std::size_t n);

// Res(p, q) = lc(p)^deg(q) * prod q(alpha) over the roots alpha of p. Both must be nonzero.
Integer resultant(const IntPoly& p, const IntPoly& q);
Rational resultant(const RatPoly& p, const RatPoly& q);

// Polynomial R(t) = Res_y(m(y), g_t(y)) for a family g_t whose coefficients are polynomial
// in t of total t-degree at most `degree_bound`; recovered from degree_bound+1 evaluations.
RatPoly interpolate_resultant(const RatPoly& m, const std::function<RatPoly(const Rational&)>& g_at,
                              int degree_bound);

// Newton interpolation through (xs[i], ys[i]).
RatPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

// Primitive integer polynomials whose roots are alpha*beta, alpha+beta and alpha^k for roots
// alpha of p and beta of q (with multiplicity). p and q must have nonzero constant terms for
// the product.
IntPoly composed_product(const IntPoly& p, const IntPoly& q);
IntPoly composed_sum(const IntPoly& p, const IntPoly& q);
IntPoly power_poly(const IntPoly& p, unsigned k);

} // namespace mahler
