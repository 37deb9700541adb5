#pragma once

// Explicit elements of rad(Q): exp(2 pi i j / m) * base^exponent with the positive real root.

#include "mahler/algnum/algebraic.hpp"

#include <string>

namespace mahler {

struct SurdExpr {
    unsigned long unity_order = 1; // m
    long unity_index = 0;          // j mod m
    Rational base = 1;             // nonzero; a negative base takes the principal branch
    Rational exponent = 1;

    static SurdExpr rational(const Rational& q) { return SurdExpr{1, 0, q, 1}; }
    static SurdExpr unity(unsigned long m, long j) { return SurdExpr{m, j, 1, 1}; }
};

// Canonical form: 0 <= j < m with gcd(j, m) = 1 (or m = 1, j = 0), and either base = 1 with
// exponent 0, or base > 1 not a perfect power. Two surds denote the same number iff their
// canonical forms are equal.
SurdExpr canonical(const SurdExpr& s);
bool same_value(const SurdExpr& a, const SurdExpr& b);

SurdExpr surd_mul_unity(const SurdExpr& s, unsigned long m, long j);
// s^n for an integer n.
SurdExpr surd_pow(const SurdExpr& s, long n);

AlgebraicNumber from_surd(const SurdExpr& s);

// Text in the number grammar, e.g. "zeta(4,1)*(2)^(1/2)" or "-3/2".
std::string to_string(const SurdExpr& s);

} // namespace mahler
