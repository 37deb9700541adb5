// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit when any criterion fails.

#include "mahler/algnum/expression.hpp"
#include "mahler/error.hpp"
#include "mahler/heights/places.hpp"
#include "mahler/metric/northcott.hpp"
#include "mahler/metric/representation.hpp"
#include "mahler/metric/solve.hpp"
#include "mahler/polycore/factor.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

using namespace mahler;

namespace {

// Pinned limits.
const Rational kLehmerLo(117, 100), kLehmerHi(118, 100), kWidth(1, 1000000000);
constexpr double kLehmerSeconds = 5, kAgreeSeconds = 60, kOracleSeconds = 600;
constexpr int kPolys = 200, kSurds = 50, kReps = 100, kPairs = 200;

struct Verdict {
    bool pass = true;
    std::string detail;
    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

AlgebraicNumber Q(const Rational& q) { return AlgebraicNumber::from_rational(q); }

std::string str(double x) {
    std::ostringstream o;
    o.precision(3);
    o << x;
    return o.str();
}

// --- 1 ---

Verdict lehmer_value() {
    Verdict v;
    const auto t = std::chrono::steady_clock::now();
    const IntPoly l = parse_poly("x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1");
    std::optional<AlgebraicNumber> root;
    for (const auto& r : conjugates(AlgebraicNumber::root_of(l, 0)))
        if (r.is_real() && r.box().re_lo > 1) root = r;
    if (!root) {
        v.fail("no real root above 1");
        return v;
    }
    const Interval e = mahler_roots(*root, 60).enclosure();
    const double s = seconds_since(t);
    if (e.lo < kLehmerLo || e.hi > kLehmerHi) v.fail("enclosure outside [1.17, 1.18]");
    if (e.hi - e.lo > kWidth) v.fail("width above 1e-9");
    if (s >= kLehmerSeconds) v.fail("runtime " + str(s) + " s");
    v.detail = v.pass ? "[" + to_decimal(e.lo, 12) + ", " + to_decimal(e.hi, 12, true) + "] in " + str(s) + " s" : v.detail;
    return v;
}

// --- 2 ---

Verdict pipeline_agreement() {
    Verdict v;
    const auto t = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<int> deg(1, 8), coef(-20, 20);
    int done = 0;
    while (done < kPolys) {
        const int d = deg(rng);
        std::vector<Integer> c(static_cast<std::size_t>(d) + 1);
        for (auto& x : c) x = coef(rng);
        if (c.back() == 0 || c.front() == 0) continue;
        const IntPoly f(c);
        const Factorization fac = factor_rational(f);
        if (fac.factors.size() != 1 || fac.factors[0].second != 1) continue;
        const AlgebraicNumber x = AlgebraicNumber::root_of(fac.factors[0].first, 0);
        const MeasureValue a = mahler_roots(x, 60), b = mahler_places(x, 60);
        if (!a.enclosure().intersects(b.enclosure())) {
            v.fail("disjoint enclosures for " + to_string(f));
            break;
        }
        const Interval i = intersect(a.refined(60).enclosure(), b.refined(60).enclosure());
        if ((i.hi - i.lo) / i.lo > kWidth) {
            v.fail("relative width above 1e-9 for " + to_string(f));
            break;
        }
        ++done;
    }
    const double s = seconds_since(t);
    if (s >= kAgreeSeconds) v.fail("runtime " + str(s) + " s");
    if (v.pass) v.detail = std::to_string(done) + " polynomials in " + str(s) + " s";
    return v;
}

// --- 3 ---

Verdict height_identities() {
    Verdict v;
    std::mt19937_64 rng(1729);
    std::uniform_int_distribution<int> num(1, 12), den(1, 6), ord(1, 8), ex(-3, 3), exd(1, 3);
    int count = 0, checks = 0;
    while (count < kSurds) {
        SurdExpr s{1, 0, Rational(num(rng), den(rng)), Rational(ex(rng), exd(rng))};
        s.base.canonicalize();
        s.exponent.canonicalize();
        if (s.base == 1 || s.exponent == 0) continue;
        ++count;
        const MeasureValue h = weil_height(from_surd(s));
        if (!h.is_exact()) {
            v.fail("no exact height for " + to_string(s));
            break;
        }
        const unsigned long m = static_cast<unsigned long>(ord(rng));
        const long j = std::uniform_int_distribution<long>(0, static_cast<long>(m) - 1)(rng);
        const MeasureValue hz = weil_height(from_surd(surd_mul_unity(s, m, j)));
        ++checks;
        if (!hz.is_exact() || !(*hz.exact() == *h.exact())) v.fail("H(zeta s) != H(s) for " + to_string(s));
        for (long n = -3; n <= 3; ++n) {
            const AlgebraicNumber p = from_surd(surd_pow(s, n));
            const MeasureValue hn = p.is_rational() && p.rational_value() == 1 ? MeasureValue() : weil_height(p);
            ++checks;
            if (!hn.is_exact() || !(*hn.exact() == h.exact()->pow(Rational(std::labs(n)))))
                v.fail("H(s^n) != H(s)^|n| for " + to_string(s) + ", n = " + std::to_string(n));
        }
    }
    if (v.pass) v.detail = std::to_string(checks) + " exact identities over " + std::to_string(count) + " surds";
    return v;
}

// --- 4 and 7 ---

struct RationalResult {
    Rational target;
    SolveResult result;
};

std::vector<RationalResult> exact_rational_results; // feeds criterion 7

bool witness_product_holds(const SolveResult& r, const AlgebraicNumber& target, bool product) {
    AlgebraicNumber p = AlgebraicNumber::from_integer(1);
    Rational acc = 1;
    for (const auto& f : r.witness.factors) {
        p = mul(p, f);
        const MeasureValue m = mahler_roots(f);
        if (!m.is_exact() || !m.exact()->is_rational()) return false;
        const Rational x = m.exact()->rational_value();
        acc = product ? acc * x : (x > acc ? x : acc);
    }
    if (r.witness.torsion_slack) p = mul(p, r.witness.unity.value());
    return p == target && r.value.is_exact() && r.value.exact()->is_rational() && acc == r.value.exact()->rational_value();
}

Verdict degree_one_metric() {
    Verdict v;
    int count = 0;
    for (long a = 1; a <= 50; ++a)
        for (long b = 1; b <= 50; ++b) {
            if (std::gcd(a, b) != 1) continue;
            for (long s : {1L, -1L}) {
                Rational q(s * a, b);
                q.canonicalize();
                const SolveResult r = m_one(Q(q));
                ++count;
                if (!r.exact || !(*r.value.exact() == ExactPower::make(Rational(std::max(a, b)))))
                    v.fail("M1(" + to_string(q) + ") != " + std::to_string(std::max(a, b)));
                else if (!witness_product_holds(r, Q(q), true))
                    v.fail("invalid witness for " + to_string(q));
                exact_rational_results.push_back({q, r});
            }
        }
    if (v.pass) v.detail = std::to_string(count) + " rationals exact";
    return v;
}

// --- 5: lattice oracle ---

using Vec4 = std::array<Integer, 4>;
constexpr std::array<long, 4> kPrimes{2, 3, 5, 7};
constexpr long kScale = 60; // lcm(1..6)

// Row-echelon integer basis of a sublattice of Z^4.
class Lattice {
public:
    void insert(Vec4 v) {
        for (std::size_t c = 0; c < 4; ++c) {
            if (v[c] == 0) continue;
            if (!rows_[c]) {
                rows_[c] = normalized(v, c);
                return;
            }
            Vec4& r = *rows_[c];
            // Replace (r, v) by (g-row, reduced v) with extended gcd on column c.
            Integer g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), r[c].get_mpz_t(), v[c].get_mpz_t());
            const Integer rc = r[c] / g, vc = v[c] / g;
            Vec4 nr, nv;
            for (std::size_t k = 0; k < 4; ++k) {
                nr[k] = s * r[k] + t * v[k];
                nv[k] = rc * v[k] - vc * r[k];
            }
            r = normalized(nr, c);
            v = nv;
        }
    }

    bool contains(Vec4 v) const {
        for (std::size_t c = 0; c < 4; ++c) {
            if (v[c] == 0) continue;
            if (!rows_[c]) return false;
            const Vec4& r = *rows_[c];
            if (v[c] % r[c] != 0) return false;
            const Integer f = v[c] / r[c];
            for (std::size_t k = 0; k < 4; ++k) v[k] -= f * r[k];
        }
        return true;
    }

private:
    static Vec4 normalized(Vec4 v, std::size_t c) {
        if (v[c] < 0)
            for (auto& x : v) x = -x;
        return v;
    }
    std::array<std::optional<Vec4>, 4> rows_;
};

struct Generator {
    Vec4 scaled;   // exponents times kScale
    Integer measure;
};

// Surds (A/B)^(1/k) over {2,3,5,7}, k <= 6, lowest-terms numerators bounded by `bound`, measure <= cap.
std::vector<Generator> generators(long bound, long cap) {
    std::vector<Generator> out;
    std::array<long, 4> n{};
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == 4) {
            long g = 0;
            for (long x : n) g = std::gcd(g, x);
            if (g == 0) return;
            Integer a = 1, b = 1;
            for (std::size_t k = 0; k < 4; ++k) {
                if (n[k] > 0) a *= ipow(Integer(kPrimes[k]), static_cast<unsigned long>(n[k]));
                if (n[k] < 0) b *= ipow(Integer(kPrimes[k]), static_cast<unsigned long>(-n[k]));
                if (a > cap || b > cap) return;
            }
            for (long k = 1; k <= 6; ++k) {
                if (std::gcd(g, k) != 1) continue;
                Generator gen;
                for (std::size_t j = 0; j < 4; ++j) gen.scaled[j] = Integer(n[j] * (kScale / k));
                gen.measure = a > b ? a : b;
                out.push_back(gen);
            }
            return;
        }
        for (long e = -bound; e <= bound; ++e) {
            n[i] = e;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

// Smallest m such that the exponent vector lies in the span of generators of measure <= m.
class Oracle {
public:
    explicit Oracle(long bound) {
        // Measures above 7^3 never matter for exponents bounded by 3.
        auto gens = generators(bound, 400);
        std::sort(gens.begin(), gens.end(), [](const Generator& x, const Generator& y) { return x.measure < y.measure; });
        Lattice l;
        for (std::size_t i = 0; i < gens.size();) {
            const Integer m = gens[i].measure;
            for (; i < gens.size() && gens[i].measure == m; ++i) l.insert(gens[i].scaled);
            levels_.emplace_back(m, l);
        }
    }

    Integer minimum(const std::array<long, 4>& e) const {
        Vec4 v;
        bool zero = true;
        for (std::size_t k = 0; k < 4; ++k) {
            v[k] = Integer(e[k] * kScale);
            zero = zero && e[k] == 0;
        }
        if (zero) return 1;
        for (const auto& [m, l] : levels_)
            if (l.contains(v)) return m;
        return 0;
    }

private:
    std::vector<std::pair<Integer, Lattice>> levels_;
};

Verdict ultrametric_oracle() {
    Verdict v;
    const auto t = std::chrono::steady_clock::now();
    std::map<long, Oracle> oracles;
    int count = 0;
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b)
            for (long c = -3; c <= 3; ++c)
                for (long d = -3; d <= 3; ++d) {
                    const std::array<long, 4> e{a, b, c, d};
                    long top = 0;
                    for (long x : e) top = std::max(top, std::labs(x));
                    if (top > 0 && !oracles.count(3 * top)) oracles.emplace(3 * top, Oracle(3 * top));
                    const Integer expected = top == 0 ? Integer(1) : oracles.at(3 * top).minimum(e);
                    Rational q = 1;
                    for (std::size_t k = 0; k < 4; ++k) q *= rpow(Rational(kPrimes[k]), e[k]);
                    for (long s : {1L, -1L}) {
                        const Rational target = q * s;
                        const SolveResult r = m_inf(Q(target));
                        ++count;
                        if (!r.exact || !(*r.value.exact() == ExactPower::make(Rational(expected))))
                            v.fail("Minf(" + to_string(target) + ") = " + r.value.to_string() + ", oracle " + to_string(expected));
                        else if (!witness_product_holds(r, Q(target), false))
                            v.fail("invalid witness for " + to_string(target));
                        exact_rational_results.push_back({target, r});
                    }
                }
    const double s = seconds_since(t);
    if (s >= kOracleSeconds) v.fail("runtime " + str(s) + " s");
    if (v.pass) v.detail = std::to_string(count) + " targets agree in " + str(s) + " s";
    return v;
}

// --- 6 ---

AlgebraicNumber gaussian(long a, long b) {
    if (b == 0) return AlgebraicNumber::from_integer(a);
    const IntPoly f{Integer(a * a + b * b), Integer(-2 * a), Integer(1)};
    return AlgebraicNumber::root_of(f, b > 0 ? 1 : 0);
}

AlgebraicNumber quadratic_surd(long c, long d) {
    return parse_number(std::to_string(c) + "*" + std::to_string(d) + "^(1/2)").value();
}

// M(x) <= M(y) from independent enclosures of both pipelines, or equal exact forms.
bool measure_le(const AlgebraicNumber& x, const AlgebraicNumber& y) {
    const MeasureValue mx = mahler_places(x), my = mahler_roots(y);
    if (mx.is_exact() && my.is_exact()) return compare(*mx.exact(), *my.exact()) <= 0;
    return mx.refined(200).enclosure().hi <= my.refined(200).enclosure().lo;
}

Verdict reduction_suite() {
    Verdict v;
    std::mt19937_64 rng(314159);
    std::uniform_int_distribution<long> small(-3, 3), len(1, 3), kind(0, 2), coef(1, 3);
    const std::array<long, 5> radicands{2, 3, 5, 6, 7};
    int done = 0;
    while (done < kReps) {
        const long d = radicands[static_cast<std::size_t>(std::uniform_int_distribution<int>(0, 4)(rng))];
        Representation rep;
        const long n = len(rng);
        for (long i = 0; i < n; ++i) {
            const long k = kind(rng);
            if (k == 0) {
                const long a = small(rng), b = small(rng);
                if (a == 0 && b == 0) {
                    --i;
                    continue;
                }
                rep.factors.push_back(gaussian(a, b));
            } else if (k == 1) {
                rep.factors.push_back(quadratic_surd(coef(rng) * (small(rng) < 0 ? -1 : 1), d));
            } else {
                rep.factors.push_back(AlgebraicNumber::from_integer(coef(rng) + 1));
            }
        }
        rep.target = product(rep.factors);
        ++done;
        try {
            const Reduction red = reduce_representation(rep);
            const NumberField K = galois_closure(rep.target).field;
            // (i) exact product identity
            AlgebraicNumber p = red.unity.value();
            for (const auto& b : red.reduced.factors) p = mul(p, b);
            if (p != rep.target) v.fail("product identity fails for representation " + std::to_string(done));
            for (std::size_t j = 0; j < rep.factors.size(); ++j) {
                const AlgebraicNumber& b = red.reduced.factors[j];
                // (ii) some power of the factor lies in the closure
                const AlgebraicNumber power = pow_int(b, red.root_orders[static_cast<std::size_t>(j)]);
                if (K.degree() % power.degree() != 0 || !field_member(K, power))
                    v.fail("factor outside rad(K) in representation " + std::to_string(done));
                // (iii) measures do not increase
                if (!measure_le(b, rep.factors[j])) v.fail("measure increased in representation " + std::to_string(done));
            }
        } catch (const std::exception& e) {
            v.fail(std::string("reduction raised: ") + e.what());
        }
    }
    if (v.pass) v.detail = std::to_string(done) + " representations verified";
    return v;
}

// --- 7 ---

Verdict location_certificates() {
    Verdict v;
    for (const auto& [q, r] : exact_rational_results) {
        if (!r.exact) continue;
        const ExactPower& x = *r.value.exact();
        if (!x.is_rational() || x.rational_value().get_den() != 1) v.fail("non-integer value for " + to_string(q));
        if (!verify_location(r, Q(q))) v.fail("location check failed for " + to_string(q));
    }
    if (exact_rational_results.empty()) v.fail("no results to check");
    if (v.pass) v.detail = std::to_string(exact_rational_results.size()) + " exact results are rational integers";
    return v;
}

// --- 8 ---

Verdict non_galois() {
    Verdict v;
    const IntPoly f = parse_poly("x^3-x-1");
    std::vector<AlgebraicNumber> complex;
    for (const auto& r : conjugates(AlgebraicNumber::root_of(f, 0)))
        if (!r.is_real()) complex.push_back(r);
    if (complex.size() != 2) {
        v.fail("expected two complex roots");
        return v;
    }
    const AlgebraicNumber g2 = complex[1], g3 = complex[0];
    const NumberField K(g2);
    const AlgebraicNumber p = mul(g2, g3);
    // p is real of degree 3: membership would force Q(p) = Q(g2), a real field containing g2.
    const bool argument = p.is_real() && p.degree() == 3 && K.degree() == 3 && !g2.is_real();
    const bool member = field_member(K, p).has_value();
    if (!argument) v.fail("degree argument does not apply");
    if (member) v.fail("membership test accepted the product");
    if (v.pass) v.detail = "product " + p.to_string() + " not in Q(g2)";
    return v;
}

// --- 9 ---

Verdict northcott_counts() {
    Verdict v;
    const auto list = northcott_enumerate(NumberField(), Rational(3));
    if (list.size() != 14) v.fail("count " + std::to_string(list.size()));
    for (const char* x : {"6", "1/2", "-5/3"}) {
        const HeightEntry q = q_of(parse_number(x).value());
        if (!q.height.is_exact() || !(*q.height.exact() == ExactPower::make(Rational(2)))) v.fail("q(" + std::string(x) + ") != 2");
    }
    if (v.pass) v.detail = "14 elements, q = 2";
    return v;
}

// --- 10 ---

Verdict inequality_lattice() {
    Verdict v;
    std::mt19937_64 rng(2718);
    std::uniform_int_distribution<int> ex(-2, 2);
    auto draw = [&] {
        Rational q = std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
        for (long p : kPrimes) q *= rpow(Rational(p), ex(rng));
        return q;
    };
    auto value = [&v](const SolveResult& r) {
        if (!r.exact) v.fail("inexact result");
        return r.value.exact()->rational_value();
    };
    for (int t = 0; t < kPairs; ++t) {
        const Rational a = draw(), b = draw();
        const Rational ia = value(m_inf(Q(a))), ib = value(m_inf(Q(b))), iab = value(m_inf(Q(a * b)));
        const Rational oa = value(m_one(Q(a))), ob = value(m_one(Q(b))), oab = value(m_one(Q(a * b)));
        const Rational ma = mahler_roots(Q(a)).exact()->rational_value();
        if (iab > (ia > ib ? ia : ib)) v.fail("strong triangle inequality fails for " + to_string(a) + ", " + to_string(b));
        if (oab > oa * ob) v.fail("submultiplicativity fails for " + to_string(a) + ", " + to_string(b));
        if (ia > oa || oa > ma) v.fail("Minf <= M1 <= M fails for " + to_string(a));
    }
    if (v.pass) v.detail = std::to_string(kPairs) + " pairs";
    return v;
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
        {"Lehmer value", lehmer_value},
        {"dual-pipeline agreement", pipeline_agreement},
        {"height identities", height_identities},
        {"degree-1 metric measure", degree_one_metric},
        {"ultrametric oracle equivalence", ultrametric_oracle},
        {"reduction suite", reduction_suite},
        {"location certificates", location_certificates},
        {"non-Galois counterexample", non_galois},
        {"Northcott counts", northcott_counts},
        {"inequality lattice", inequality_lattice},
    };
    int failures = 0, index = 0;
    for (const auto& [name, check] : criteria) {
        ++index;
        Verdict v;
        try {
            v = check();
        } catch (const std::exception& e) {
            v.fail(std::string("raised: ") + e.what());
        }
        failures += v.pass ? 0 : 1;
        std::printf("%s %2d %s: %s\n", v.pass ? "PASS" : "FAIL", index, name, v.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
