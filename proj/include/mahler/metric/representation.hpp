#pragma once

// Multiplicative representations target = zeta * factor_1 * ... * factor_N, their reduction into
// the radical of the Galois closure of the target, and projection of radical factors into it.

#include "mahler/algnum/field.hpp"
#include "mahler/heights/measure.hpp"

#include <string>
#include <vector>

namespace mahler {

// exp(2 pi i index / order), kept with 0 <= index < order and gcd(index, order) = 1.
struct RootOfUnity {
    unsigned long order = 1;
    unsigned long index = 0;

    static RootOfUnity of(const AlgebraicNumber& torsion);
    bool is_one() const { return order == 1; }
    AlgebraicNumber value() const { return root_of_unity(order, static_cast<long>(index)); }
    RootOfUnity pow(long n) const;
    std::string to_string() const;
    friend bool operator==(const RootOfUnity& a, const RootOfUnity& b) { return a.order == b.order && a.index == b.index; }
};

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b);

struct Representation {
    AlgebraicNumber target;
    std::vector<AlgebraicNumber> factors;
    // When set, target = unity * prod(factors); otherwise target = prod(factors) and unity is 1.
    bool torsion_slack = false;
    RootOfUnity unity;
};

// Exact check of the product identity.
bool representation_holds(const Representation& rep);

struct RestrictedRep {
    Representation rep;
    MeasureValue bound;
    bool within_bound = false;  // product of the factor measures is at most the bound
    bool in_radical = false;    // every factor has a power in the field
    bool single_torsion = false; // at most one root of unity among the factors and the slack
    bool holds() const { return within_bound && in_radical && single_torsion; }
};

RestrictedRep restrict_representation(const Representation& rep, const MeasureValue& bound, const NumberField& K);

// Smallest L in [1, cap] with x^L in K, or 0.
int radical_order(const AlgebraicNumber& x, const NumberField& K, int cap = 64);

// M(a) <= M(b), deciding equal measures exactly where possible.
bool measure_at_most(const AlgebraicNumber& a, const AlgebraicNumber& b);

struct Reduction {
    RootOfUnity unity;          // target = unity * prod(reduced.factors)
    Representation reduced;
    NumberField field;          // Galois closure of Q(target)
    std::vector<int> degrees;   // r_n = [K(factor_n) : K] for the original factors
    std::vector<int> root_orders; // L_n with reduced factor_n^L_n in K
    std::vector<FieldElement> powers; // reduced factor_n^L_n as elements of K
};

// Replaces each factor a_n by an r_n-th root b_n of the product of its conjugates over K, with
// r_n = [K(a_n):K], takes the root of largest real part (then positive imaginary part) and
// moves the leftover root of unity into a factor whenever the measure bound survives.
// The result is verified (product identity, radical membership, M(b_n) <= M(a_n)); a failed
// verification raises Error.
Reduction reduce_representation(const Representation& rep, int closure_cap = kDefaultClosureCap);

struct Projection {
    Representation rep;          // target^L = unity * prod(factors), factors in K
    int exponent = 1;            // L, the lcm of the root orders
    std::vector<int> root_orders; // L_n
    std::vector<int> multiplicities; // J_n = L / L_n
};

// Raises a representation with radical factors to the power L so that every factor
// (a_n^L_n)^J_n lies in K.
Projection project_to_field(const Representation& rep, const NumberField& K, int cap = 64);

} // namespace mahler
