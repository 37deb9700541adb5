#include "mahler/metric/northcott.hpp"

#include "mahler/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mahler {

namespace {

// Sign of sqrt(d) - t for a positive non-square d.
int cmp_sqrt(const Rational& d, const Rational& t) {
    if (t < 0) return 1;
    return cmp(d, t * t);
}

// Real roots of a x^2 + b x + c (a > 0, D = b^2 - 4ac > 0) satisfy a|z| = (|b| +- sqrt D) / 2
// when ac > 0 and a|z| = (sqrt D +- |b|) / 2 when ac < 0.
bool both_outside(const Integer& a, const Integer& b, const Integer& c) {
    const Rational d(b * b - 4 * a * c);
    if (a * c > 0) return cmp_sqrt(d, Rational(abs(b) - 2 * a)) < 0;
    return cmp_sqrt(d, Rational(abs(b) + 2 * a)) > 0;
}

// M of the irreducible primitive a x^2 + b x + c with a > 0, as a positive real number.
AlgebraicNumber quadratic_measure(const Integer& a, const Integer& b, const Integer& c) {
    const Integer d = b * b - 4 * a * c;
    const Integer ab = abs(b);
    if (d < 0) return AlgebraicNumber::from_rational(Rational(a > c ? a : c));
    if (both_outside(a, b, c)) return AlgebraicNumber::from_rational(Rational(abs(c)));
    if (cmp_sqrt(Rational(d), Rational(2 * a - ab)) < 0) return AlgebraicNumber::from_rational(Rational(a));
    return AlgebraicNumber::root_of(IntPoly{Integer(a * c), Integer(-ab), Integer(1)}, 1);
}

bool quadratic_measure_at_most(const Integer& a, const Integer& b, const Integer& c, const Rational& bound) {
    const Integer d = b * b - 4 * a * c;
    const Integer ab = abs(b);
    if (d < 0) return Rational(a > c ? a : c) <= bound;
    if (both_outside(a, b, c)) return Rational(abs(c)) <= bound;
    if (cmp_sqrt(Rational(d), Rational(2 * a - ab)) < 0) return Rational(a) <= bound;
    return cmp_sqrt(Rational(d), 2 * bound - Rational(ab)) < 0;
}

// m^(1/d) for a positive real algebraic m.
MeasureValue root_of_measure(const AlgebraicNumber& m, int d) {
    if (m.is_rational()) return MeasureValue(ExactPower::make(m.rational_value(), Rational(1, d)));
    auto enc = [m, d](long bits) {
        const Interval re = m.enclosure(bits + 4).re;
        return d == 1 ? re : root_enclosure(re, static_cast<unsigned long>(d), bits + 4);
    };
    return MeasureValue(enc(kDefaultBits), std::nullopt, enc);
}

struct Candidate {
    HeightEntry entry;
    AlgebraicNumber square; // H^2
    double key;
    IntPoly minpoly;
    int branch;
    Rational rational; // value when degree 1
};

bool candidate_less(const Candidate& x, const Candidate& y) {
    if (std::fabs(x.key - y.key) > 1e-9 * std::max(1.0, x.key)) return x.key < y.key;
    if (x.square != y.square) return compare_real_parts(x.square, y.square) < 0;
    if (x.entry.degree != y.entry.degree) return x.entry.degree < y.entry.degree;
    if (x.entry.degree == 1) return x.rational < y.rational;
    if (x.minpoly != y.minpoly) return poly_less(x.minpoly, y.minpoly);
    return x.branch < y.branch;
}

void add_rationals(const NumberField& K, const Rational& B, std::vector<Candidate>& out) {
    const Integer top = floor_of(B);
    for (Integer n = 1; n <= top; ++n)
        for (Integer d = 1; d <= top; ++d) {
            Integer g;
            mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
            if (g != 1) continue;
            const Integer h = n > d ? n : d;
            for (int s : {-1, 1}) {
                Rational q(s * n, d);
                q.canonicalize();
                const AlgebraicNumber m = AlgebraicNumber::from_rational(Rational(h));
                HeightEntry e{K.from_rational(q), 1, m, MeasureValue(ExactPower::make(Rational(h)))};
                out.push_back({e, AlgebraicNumber::from_rational(Rational(h * h)), to_double(Rational(h * h)),
                               IntPoly{}, 0, q});
            }
        }
}

void add_quadratics(const NumberField& K, const Rational& B, std::vector<Candidate>& out) {
    const RatPoly& mod = K.modulus();
    const Rational p = mod[1], q = mod[0];
    const Rational disc_k = p * p - 4 * q;
    const FieldElement delta = K.gen() * K.from_rational(2) + K.from_rational(p); // a square root of disc_k
    const Rational bound = B * B;
    const Integer top = floor_of(bound);
    for (Integer a = 1; a <= top; ++a)
        for (Integer c = -top; c <= top; ++c) {
            if (c == 0) continue;
            for (Integer b = -2 * top; b <= 2 * top; ++b) {
                Integer g;
                mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
                if (g != 1) continue;
                const Integer d = b * b - 4 * a * c;
                if (mpz_perfect_square_p(d.get_mpz_t())) continue;
                Rational ratio = Rational(d) / disc_k;
                if (ratio < 0) continue;
                const auto s = exact_root(ratio, 2);
                if (!s) continue;
                if (!quadratic_measure_at_most(a, b, c, bound)) continue;
                const AlgebraicNumber m = quadratic_measure(a, b, c);
                const IntPoly f{c, b, a};
                for (int branch : {0, 1}) {
                    const FieldElement sd = K.from_rational(branch ? *s : Rational(-*s)) * delta;
                    const FieldElement x = (K.from_rational(Rational(-b)) + sd) * K.from_rational(Rational(1) / Rational(2 * a));
                    HeightEntry e{x, 2, m, root_of_measure(m, 2)};
                    out.push_back({e, m, m.is_rational() ? to_double(m.rational_value()) : m.approx_re(), f, branch, 0});
                }
            }
        }
}

} // namespace

std::vector<HeightEntry> northcott_enumerate(const NumberField& K, const Rational& B) {
    if (K.degree() > 2) throw UnsupportedDegree("height enumeration supports Q and quadratic fields only");
    if (B < 1) throw DomainError("height bound below 1");
    std::vector<Candidate> c;
    add_rationals(K, B, c);
    if (K.degree() == 2) add_quadratics(K, B, c);
    std::stable_sort(c.begin(), c.end(), candidate_less);
    std::vector<HeightEntry> out;
    out.reserve(c.size());
    for (auto& x : c) out.push_back(std::move(x.entry));
    return out;
}

HeightEntry smallest_height(const NumberField& K) {
    // 2 is never torsion and has height 2, so the minimum is found below 2.
    for (auto& e : northcott_enumerate(K, Rational(2)))
        if (!(e.measure.is_rational() && e.measure.rational_value() == 1)) return e;
    throw Error("no non-torsion element of height <= 2");
}

HeightEntry q_of(const AlgebraicNumber& alpha, int closure_cap) {
    const GaloisClosure c = galois_closure(alpha, closure_cap);
    if (c.field.degree() > 2) throw UnsupportedDegree("q is computed for Galois closures of degree <= 2");
    return smallest_height(c.field);
}

int length_bound(const MeasureValue& q, const MeasureValue& B) {
    if (compare(q, MeasureValue()) <= 0) throw DomainError("length bound needs q > 1");
    // Powers of q inseparable from B at the refinement budget count as equal.
    auto at_most = [&B](const MeasureValue& x) {
        try {
            return compare(x, B) <= 0;
        } catch (const Undecided&) {
            return true;
        }
    };
    int n = 1;
    while (at_most(pow(q, Rational(n)))) ++n;
    return n;
}

} // namespace mahler
