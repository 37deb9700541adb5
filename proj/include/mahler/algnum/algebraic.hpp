#pragma once

// Algebraic numbers as (irreducible minimal polynomial, isolating box).

#include "mahler/polycore/roots.hpp"

#include <functional>
#include <string>
#include <vector>

namespace mahler {

class AlgebraicNumber {
public:
    // The rational number 0.
    AlgebraicNumber();
    // Trusted constructor: `minpoly` irreducible, `box` isolating exactly one of its roots.
    AlgebraicNumber(IntPoly minpoly, RootBox box);

    static AlgebraicNumber from_rational(const Rational& q);
    static AlgebraicNumber from_integer(long n) { return from_rational(Rational(n)); }
    // The root of p (any nonzero polynomial) lying in the given box; throws DomainError when
    // the box does not isolate exactly one distinct root.
    static AlgebraicNumber root_in(const IntPoly& p, const CInterval& box);
    // The k-th root of p in the deterministic root order (0-based).
    static AlgebraicNumber root_of(const IntPoly& p, std::size_t k);

    const IntPoly& minpoly() const { return minpoly_; }
    const RootBox& box() const { return box_; }
    int degree() const { return minpoly_.degree(); }
    bool is_rational() const { return degree() == 1; }
    // Requires is_rational().
    Rational rational_value() const;
    bool is_zero() const { return is_rational() && minpoly_[0] == 0; }
    bool is_real() const { return box_.is_real(); }

    // Same number with a box of width <= width.
    AlgebraicNumber refined(const Rational& width) const;
    // Rectangle of width <= 2^-bits containing the number.
    CInterval enclosure(long bits) const;
    // Rough floating value of the box center (diagnostics and tie-breaking only).
    double approx_re() const;
    double approx_im() const;

    std::string to_string() const;

    friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b);
    friend bool operator!=(const AlgebraicNumber& a, const AlgebraicNumber& b) { return !(a == b); }

private:
    IntPoly minpoly_;
    RootBox box_;
};

// Picks the root of `annihilator` (nonzero, vanishing at the target) whose boxes meet the
// enclosures produced by `enclosure(bits)` for increasing bits, until exactly one distinct root
// remains. `enclosure` may throw DomainError to signal that it cannot yet produce a useful
// rectangle at the requested accuracy.
AlgebraicNumber select_root(const IntPoly& annihilator, const std::function<CInterval(long)>& enclosure);

AlgebraicNumber mul(const AlgebraicNumber& x, const AlgebraicNumber& y);
AlgebraicNumber add(const AlgebraicNumber& x, const AlgebraicNumber& y);
AlgebraicNumber neg(const AlgebraicNumber& x);
AlgebraicNumber inv(const AlgebraicNumber& x);
AlgebraicNumber pow_int(const AlgebraicNumber& x, long n);
AlgebraicNumber product(const std::vector<AlgebraicNumber>& xs);

// All roots of the minimal polynomial, ordered by real part then imaginary part.
std::vector<AlgebraicNumber> conjugates(const AlgebraicNumber& x);
bool is_torsion(const AlgebraicNumber& x);

// Order m and index j (0 <= j < m, gcd(j, m) = 1) with x = exp(2 pi i j / m); x must be torsion.
std::pair<unsigned long, unsigned long> torsion_index(const AlgebraicNumber& x);
// exp(2 pi i j / m).
AlgebraicNumber root_of_unity(unsigned long m, long j);

// Certified sign comparisons by refinement (values must differ, otherwise Undecided is thrown
// after the refinement budget).
int compare_real_parts(const AlgebraicNumber& a, const AlgebraicNumber& b);

} // namespace mahler
