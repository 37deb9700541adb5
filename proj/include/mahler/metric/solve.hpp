#pragma once

// Metric and ultrametric Mahler measures with witnesses and certificates.

#include "mahler/algnum/expression.hpp"
#include "mahler/metric/representation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mahler {

// unity * prod p_i^e_i over distinct ascending primes with nonzero rational exponents.
struct ExponentVector {
    std::vector<Integer> primes;
    std::vector<Rational> exps;
    RootOfUnity unity;

    static ExponentVector of_rational(const Rational& q);
    // Product of surds; the bases are factored over the primes.
    static ExponentVector of_surds(const std::vector<SurdExpr>& surds);
    bool is_torsion() const { return primes.empty(); }
    // Least common denominator of the exponents.
    Integer denominator() const;
    // Measure of the positive real part, max(prod_{e>0} p^(k e), prod_{e<0} p^(-k e)) with k
    // the denominator; it is also the measure of its negative.
    Integer positive_measure() const;
    SurdExpr to_surd() const;
    AlgebraicNumber value() const { return from_surd(to_surd()); }
    std::string to_string() const { return mahler::to_string(to_surd()); }
};

struct SolveConfig {
    long kmax = 12;                 // largest exponent denominator tried in witness searches
    int closure_cap = kDefaultClosureCap;
    long bits = kDefaultBits;
    long node_cap = 2000000;        // search nodes per witness search
    Rational northcott_cap = 4;     // largest height bound enumerated for candidate values
};

struct Certificate {
    std::string measure; // "M1" or "Minf"
    std::optional<int> closure_degree;
    std::optional<MeasureValue> q;
    std::optional<int> length_bound; // with B = M(target)
    long kmax = 0;
    int closure_cap = 0;
    bool caps_exceeded = false;
    std::string argument;            // how the value was certified
    std::optional<bool> location;    // value lies in the Galois closure
    bool witness_in_field = false;   // every witness factor lies in the Galois closure
    bool witness_shortest = false;   // no shorter witness exists
    std::vector<std::string> candidates; // candidate values left between the bounds
};

struct WitnessFactor {
    AlgebraicNumber value;
    std::string text; // number grammar
    MeasureValue measure;
};

struct SolveResult {
    bool exact = false;
    MeasureValue value; // the exact value, or the upper bound
    MeasureValue lower;
    MeasureValue upper;
    Representation witness;
    std::vector<WitnessFactor> factors;
    Certificate certificate;
};

// `surds` optionally describes alpha as a product of surds (used for non-rational targets).
SolveResult m_one(const AlgebraicNumber& alpha, const SolveConfig& config = {},
                  const std::vector<SurdExpr>* surds = nullptr);
SolveResult m_inf(const AlgebraicNumber& alpha, const SolveConfig& config = {},
                  const std::vector<SurdExpr>* surds = nullptr);

// True iff the exact value lies in the Galois closure of Q(alpha); for rational alpha the value
// must be a rational integer.
bool verify_location(const SolveResult& result, const AlgebraicNumber& alpha, int closure_cap = kDefaultClosureCap);

// One-line JSON object with stable key order: value, exact, bounds, witness, certificate.
std::string result_json(const SolveResult& result, bool with_witness);

} // namespace mahler
