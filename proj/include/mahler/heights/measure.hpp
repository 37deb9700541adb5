#pragma once

// Mahler measures and Weil heights as certified enclosures, with an exact form
// base^exponent attached whenever it can be proven.

#include "mahler/algnum/surd.hpp"

#include <functional>
#include <optional>
#include <string>

namespace mahler {

// Working accuracy: enclosures have relative width about 2^-bits.
inline constexpr long kDefaultBits = 60;

// base^exponent with base > 1 not a perfect power and exponent > 0, or the value 1 stored as 1^1.
struct ExactPower {
    Rational base = 1;
    Rational exponent = 1;

    // Brings base^exponent (base >= 1, exponent >= 0) to canonical form.
    static ExactPower make(const Rational& base, const Rational& exponent = 1);
    bool is_one() const { return base == 1; }
    bool is_rational() const { return exponent.get_den() == 1; }
    // Requires is_rational().
    Rational rational_value() const;
    ExactPower pow(const Rational& e) const;
    Interval enclosure(long bits) const;
    // "6", "2^(1/2)", "3/2^(2/3)" style text.
    std::string to_string() const;

    friend bool operator==(const ExactPower& a, const ExactPower& b) {
        return a.base == b.base && a.exponent == b.exponent;
    }
};

int compare(const ExactPower& a, const ExactPower& b);
// Product of two exact values, over a common root order.
ExactPower multiply(const ExactPower& a, const ExactPower& b);

class MeasureValue {
public:
    using Refiner = std::function<Interval(long bits)>;

    MeasureValue() : MeasureValue(ExactPower{}) {}
    explicit MeasureValue(const ExactPower& e, long bits = kDefaultBits);
    MeasureValue(Interval enclosure, std::optional<ExactPower> exact, Refiner refine);
    static MeasureValue from_rational(const Rational& q) { return MeasureValue(ExactPower::make(q)); }

    const std::optional<ExactPower>& exact() const { return exact_; }
    bool is_exact() const { return exact_.has_value(); }
    const Interval& enclosure() const { return enclosure_; }
    // Same value with the enclosure recomputed at `bits` and intersected with the current one.
    MeasureValue refined(long bits) const;
    double approx() const;
    std::string to_string() const;

private:
    Interval enclosure_;
    std::optional<ExactPower> exact_;
    Refiner refine_;
};

// Sign of a - b. Exact pairs are decided exactly; otherwise the enclosures are refined up to
// max_bits and Undecided is thrown when they still overlap.
int compare(const MeasureValue& a, const MeasureValue& b, long max_bits = 4096);
MeasureValue operator*(const MeasureValue& a, const MeasureValue& b);
MeasureValue max(const MeasureValue& a, const MeasureValue& b);
// v^e for a rational e >= 0.
MeasureValue pow(const MeasureValue& v, const Rational& e);

// |a_d| * prod max(1, |z|) over the roots of the minimal polynomial.
MeasureValue mahler_roots(const AlgebraicNumber& x, long bits = kDefaultBits);
// H(x)^deg(x) with H the product of max(1, |x|_v) over all places.
MeasureValue mahler_places(const AlgebraicNumber& x, long bits = kDefaultBits);
// M(x)^(1/deg x).
MeasureValue weil_height(const AlgebraicNumber& x, long bits = kDefaultBits);
// Mahler measure of any nonzero integer polynomial, multiplicities included.
MeasureValue mahler_poly(const IntPoly& p, long bits = kDefaultBits);

// Exact height and measure of an explicit element of rad(Q).
ExactPower height_of_surd(const SurdExpr& s);
MeasureValue measure_of_surd(const SurdExpr& s);

} // namespace mahler
