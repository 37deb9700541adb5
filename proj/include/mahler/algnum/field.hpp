#pragma once

// Number fields Q(theta) given by a generator, their elements, polynomials over them,
// factorization over a field, Galois closures and products of conjugates.

#include "mahler/algnum/algebraic.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mahler {

inline constexpr int kDefaultClosureCap = 12;

class FieldElement;

class NumberField {
public:
    // Q itself (generator 0, degree 1).
    NumberField();
    explicit NumberField(const AlgebraicNumber& generator);
    static NumberField rationals() { return NumberField(); }

    int degree() const;
    bool is_rationals() const { return degree() == 1; }
    const AlgebraicNumber& generator() const;
    // Monic minimal polynomial of the generator over Q.
    const RatPoly& modulus() const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement gen() const;
    FieldElement from_rational(const Rational& q) const;
    // Reduces p modulo the modulus.
    FieldElement element(const RatPoly& p) const;

    friend bool operator==(const NumberField& a, const NumberField& b) { return a.d_ == b.d_; }
    friend bool operator!=(const NumberField& a, const NumberField& b) { return !(a == b); }

private:
    struct Data;
    std::shared_ptr<const Data> d_;
    friend class FieldElement;
};

class FieldElement {
public:
    FieldElement(NumberField field, RatPoly coords);

    const NumberField& field() const { return field_; }
    // Coordinates in the power basis of the generator (degree < field degree).
    const RatPoly& coords() const { return c_; }
    bool is_zero() const { return c_.is_zero(); }
    bool is_rational() const { return c_.degree() <= 0; }
    Rational rational_value() const;

    FieldElement inverse() const;
    FieldElement pow(long n) const;

    // Minimal polynomial over Q and the corresponding algebraic number.
    IntPoly minpoly() const;
    AlgebraicNumber value() const;
    CInterval enclosure(long bits) const;

    std::string to_string() const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }
    friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.c_ == b.c_; }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

private:
    NumberField field_;
    RatPoly c_;
};

// Polynomial over a number field, constant term first, trimmed.
class FieldPoly {
public:
    FieldPoly(NumberField field, std::vector<FieldElement> coeffs);
    static FieldPoly from_int(const IntPoly& p, const NumberField& field);

    const NumberField& field() const { return field_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<FieldElement>& coeffs() const { return c_; }
    const FieldElement& operator[](std::size_t i) const { return c_[i]; }
    const FieldElement& lead() const { return c_.back(); }
    FieldPoly monic() const;
    // Enclosure of the value at z (coefficients evaluated at the field generator).
    CInterval eval_enclosure(const CInterval& z, long bits) const;
    std::string to_string() const;

    friend FieldPoly operator*(const FieldPoly& a, const FieldPoly& b);
    friend bool operator==(const FieldPoly& a, const FieldPoly& b);

private:
    NumberField field_;
    std::vector<FieldElement> c_;
};

// Irreducible monic factors over K of a nonzero integer polynomial, with multiplicities; the
// product of factor^multiplicity times the leading coefficient of p reproduces p.
std::vector<std::pair<FieldPoly, int>> factor_over_field(const IntPoly& p, const NumberField& K,
                                                         int cap = kDefaultClosureCap);
// Same for a squarefree polynomial over K.
std::vector<FieldPoly> factor_squarefree_over_field(const FieldPoly& p, int cap = kDefaultClosureCap);

// The element of K equal to y, if any.
std::optional<FieldElement> field_member(const NumberField& K, const AlgebraicNumber& y);

// True when the generator's minimal polynomial splits into linear factors over K.
bool is_galois(const NumberField& K);

struct GaloisClosure {
    NumberField field;
    FieldElement alpha; // the input number as an element of the closure
};
// Galois closure of Q(x) with an embedding of x; UnsupportedDegree above `cap`.
GaloisClosure galois_closure(const AlgebraicNumber& x, int cap = kDefaultClosureCap);

// Minimal polynomial of x over K (monic, irreducible over K, vanishing at x).
FieldPoly minimal_polynomial_over(const AlgebraicNumber& x, const NumberField& K, int cap = kDefaultClosureCap);

// Product of the conjugates of x over K, i.e. (-1)^r h(0) for the monic minimal polynomial h of
// x over K of degree r. Requires K Galois over Q; throws NonGaloisField when K is shown not to
// be, UnsupportedDegree when deg K exceeds `cap`.
FieldElement product_of_conjugates_over(const AlgebraicNumber& x, const NumberField& K, int cap = kDefaultClosureCap);

// Exact solution of a square rational linear system A x = b (A row-major n*n, invertible).
std::vector<Rational> solve_linear(std::vector<Rational> a, std::vector<Rational> b, std::size_t n);

} // namespace mahler
