#include <doctest.h>

#include "mahler/algnum/expression.hpp"
#include "mahler/error.hpp"
#include "mahler/metric/northcott.hpp"
#include "mahler/metric/representation.hpp"
#include "mahler/metric/solve.hpp"

#include <random>
#include <set>

using namespace mahler;

namespace {

AlgebraicNumber N(const std::string& s) { return parse_number(s).value(); }
AlgebraicNumber Q(long a, long b = 1) { return AlgebraicNumber::from_rational(Rational(a, b)); }
MeasureValue V(long n) { return MeasureValue(ExactPower::make(Rational(n))); }

Rational exact_value(const SolveResult& r) {
    REQUIRE(r.exact);
    REQUIRE(r.value.is_exact());
    return r.value.exact()->rational_value();
}

std::string witness_text(const SolveResult& r) {
    std::string t = r.witness.torsion_slack ? r.witness.unity.to_string() : "";
    for (const auto& f : r.factors) t += (t.empty() ? "" : "*") + f.text;
    return t;
}

// Product (M1) or maximum (Minf) of independently recomputed factor measures.
Rational recomputed(const SolveResult& r, bool product) {
    Rational acc = 1;
    for (const auto& f : r.witness.factors) {
        const MeasureValue m = mahler_roots(f);
        REQUIRE(m.is_exact());
        const Rational v = m.exact()->rational_value();
        acc = product ? acc * v : (v > acc ? v : acc);
    }
    return acc;
}

void check_witness(const SolveResult& r, const AlgebraicNumber& alpha, bool product) {
    CHECK(representation_holds(r.witness));
    CHECK(r.witness.target == alpha);
    CHECK(recomputed(r, product) == exact_value(r));
    CHECK(N(witness_text(r)) == alpha);
}

// Minimal polynomial coefficients (c, b, a) of (u + v sqrt(d)) / w for v != 0.
IntPoly quadratic_minpoly(long u, long v, long w, long d) {
    return normalize(IntPoly{Integer(u * u - d * v * v), Integer(-2 * u * w), Integer(w * w)});
}

// Count of x in Q(sqrt d) with H(x) <= 3/2 by brute force over (u + v sqrt d) / w.
std::size_t brute_force_count(long d) {
    std::set<std::tuple<long, long, long>> seen;
    std::size_t count = 0;
    for (long w = 1; w <= 4; ++w)
        for (long u = -9; u <= 9; ++u)
            for (long v = -9; v <= 9; ++v) {
                if (u == 0 && v == 0) continue;
                const long g = std::gcd(std::gcd(std::labs(u), std::labs(v)), w);
                if (!seen.insert({u / g, v / g, w / g}).second) continue;
                if (v == 0) {
                    const long n = std::labs(u) / std::gcd(std::labs(u), w), m = w / std::gcd(std::labs(u), w);
                    if (2 * std::max(n, m) <= 3) ++count;
                    continue;
                }
                const MeasureValue m = mahler_poly(quadratic_minpoly(u, v, w, d));
                if (compare(m, MeasureValue(ExactPower::make(Rational(9, 4)))) <= 0) ++count;
            }
    return count;
}

} // namespace

TEST_CASE("rational height enumeration") {
    const NumberField Qf;
    const auto three = northcott_enumerate(Qf, Rational(3));
    CHECK(three.size() == 14);
    std::set<std::string> values;
    for (const auto& e : three) values.insert(e.element.value().to_string());
    CHECK(values == std::set<std::string>{"1", "-1", "2", "-2", "3", "-3", "1/2", "-1/2", "1/3", "-1/3", "2/3",
                                          "-2/3", "3/2", "-3/2"});
    const auto one = northcott_enumerate(Qf, Rational(1));
    REQUIRE(one.size() == 2);
    CHECK(one[0].element.value() == Q(-1));
    CHECK(one[1].element.value() == Q(1));
    CHECK_THROWS_AS(northcott_enumerate(Qf, Rational(1, 2)), DomainError);
}

TEST_CASE("quadratic height enumeration") {
    const NumberField Qi = galois_closure(N("zeta(4,1)")).field;
    const auto one = northcott_enumerate(Qi, Rational(1));
    REQUIRE(one.size() == 4);
    std::set<std::string> torsion;
    for (const auto& e : one) {
        CHECK(is_torsion(e.element.value()));
        torsion.insert(RootOfUnity::of(e.element.value()).to_string());
    }
    CHECK(torsion == std::set<std::string>{"1", "-1", "zeta(4,1)", "zeta(4,3)"});

    for (long d : {-1L, 2L}) {
        const NumberField K = galois_closure(N(d == -1 ? "zeta(4,1)" : "2^(1/2)")).field;
        const auto list = northcott_enumerate(K, Rational(3, 2));
        CHECK(list.size() == brute_force_count(d));
        for (const auto& e : list) {
            const MeasureValue h = weil_height(e.element.value());
            CHECK(compare(h, MeasureValue(ExactPower::make(Rational(3, 2)))) <= 0);
            CHECK(compare(h, e.height) == 0);
        }
        for (std::size_t i = 1; i < list.size(); ++i) {
            const int c = compare(list[i - 1].height, list[i].height, 256);
            CHECK(c <= 0);
        }
    }
    const NumberField cubic = galois_closure(N("2^(1/3)")).field;
    CHECK_THROWS_AS(northcott_enumerate(cubic, Rational(2)), UnsupportedDegree);
}

TEST_CASE("smallest height and length bound") {
    CHECK(q_of(Q(6)).height.exact()->rational_value() == 2);
    CHECK(q_of(Q(1, 2)).height.exact()->rational_value() == 2);
    const HeightEntry r2 = q_of(N("2^(1/2)"));
    CHECK(compare(r2.height, MeasureValue()) > 0);
    CHECK(compare(r2.height, weil_height(N("2^(1/2)"))) <= 0);
    CHECK(compare(weil_height(r2.element.value()), r2.height) == 0);
    // brute force over (u + v sqrt 2) / w
    for (long w = 1; w <= 3; ++w)
        for (long u = -4; u <= 4; ++u)
            for (long v = -4; v <= 4; ++v) {
                if (v == 0 && (u == 0 || std::labs(u) == w)) continue;
                const MeasureValue h = v == 0 ? weil_height(Q(u, w))
                                              : pow(mahler_poly(quadratic_minpoly(u, v, w, 2)), Rational(1, 2));
                if (compare(h, MeasureValue()) == 0) continue;
                CHECK(compare(r2.height, h) <= 0);
            }

    CHECK(length_bound(V(2), V(6)) == 3);
    CHECK(length_bound(V(2), V(2)) == 2);
    CHECK(length_bound(V(2), V(1)) == 1);
    CHECK(length_bound(V(2), V(8)) == 4);
    CHECK(length_bound(r2.height, V(2)) >= 2);
    CHECK_THROWS_AS(length_bound(V(1), V(2)), DomainError);
}

TEST_CASE("reduction into the radical of the closure") {
    SUBCASE("gaussian norms") {
        const Representation rep{Q(2), {N("root(x^2-2*x+2,1)"), N("root(x^2-2*x+2,0)")}, false, {}};
        REQUIRE(representation_holds(rep));
        const Reduction red = reduce_representation(rep);
        CHECK(red.unity.is_one());
        CHECK(red.field.degree() == 1);
        for (const auto& b : red.reduced.factors) CHECK(b == N("2^(1/2)"));
        CHECK(red.degrees == std::vector<int>{2, 2});
    }
    SUBCASE("identity") {
        const Representation rep{Q(2), {Q(2)}, false, {}};
        const Reduction red = reduce_representation(rep);
        CHECK(red.unity.is_one());
        CHECK(red.reduced.factors == std::vector<AlgebraicNumber>{Q(2)});
    }
    SUBCASE("surd factors") {
        const Representation rep{Q(6), {N("3*2^(1/2)"), N("2^(1/2)")}, false, {}};
        const Reduction red = reduce_representation(rep);
        CHECK(representation_holds(red.reduced));
        CHECK(red.unity.is_one());
        CHECK(mahler_roots(red.reduced.factors[0]).exact()->rational_value() == 18);
        CHECK(mahler_roots(red.reduced.factors[1]).exact()->rational_value() == 2);
        CHECK(pow_int(red.reduced.factors[0], 2) == Q(-18));
        CHECK(pow_int(red.reduced.factors[1], 2) == Q(-2));
    }
    SUBCASE("quadratic closure") {
        // sqrt2 = 2^(1/4) * 2^(1/4): K = Q(sqrt 2), each factor has degree 2 over K
        const Representation rep{N("2^(1/2)"), {N("2^(1/4)"), N("2^(1/4)")}, false, {}};
        const Reduction red = reduce_representation(rep);
        CHECK(red.field.degree() == 2);
        CHECK(red.degrees == std::vector<int>{2, 2});
        CHECK(representation_holds(red.reduced));
        for (std::size_t n = 0; n < 2; ++n) {
            CHECK(field_member(red.field, pow_int(red.reduced.factors[n], red.root_orders[n])));
            CHECK(measure_at_most(red.reduced.factors[n], rep.factors[n]));
        }
    }
    CHECK_THROWS_AS(reduce_representation(Representation{Q(2), {}, false, {}}), DomainError);
}

TEST_CASE("projection into the field") {
    const NumberField Qf;
    const Projection a = project_to_field(Representation{Q(2), {N("2^(1/2)"), N("2^(1/2)")}, false, {}}, Qf);
    CHECK(a.exponent == 2);
    CHECK(a.rep.target == Q(4));
    CHECK(a.rep.factors == std::vector<AlgebraicNumber>{Q(2), Q(2)});
    const Projection b =
        project_to_field(Representation{N("2^(1/2)*3^(1/3)"), {N("2^(1/2)"), N("3^(1/3)")}, false, {}}, Qf);
    CHECK(b.exponent == 6);
    CHECK(b.rep.target == Q(72));
    CHECK(b.rep.factors == std::vector<AlgebraicNumber>{Q(8), Q(9)});
    CHECK(b.multiplicities == std::vector<int>{3, 2});
    const Projection c = project_to_field(Representation{Q(5), {Q(5)}, false, {}}, Qf);
    CHECK(c.exponent == 1);
    CHECK(c.rep.factors == std::vector<AlgebraicNumber>{Q(5)});
}

TEST_CASE("restricted representations") {
    const NumberField Qf;
    const Representation rep{Q(6), {Q(2), Q(3)}, false, {}};
    CHECK(restrict_representation(rep, V(6), Qf).holds());
    CHECK_FALSE(restrict_representation(rep, V(5), Qf).within_bound);
    const Representation two_torsion{Q(6), {Q(-1), Q(-6)}, false, {}};
    CHECK(restrict_representation(two_torsion, V(6), Qf).single_torsion);
    const Representation slack{Q(6), {Q(-1), Q(-6)}, true, RootOfUnity{}};
    CHECK(restrict_representation(slack, V(6), Qf).holds());
    const Representation outside{Q(2), {N("2^(1/2)"), N("2^(1/2)")}, false, {}};
    CHECK(restrict_representation(outside, V(4), Qf).in_radical);
    const AlgebraicNumber phi = N("root(x^2-x-1,1)");
    const Representation not_radical{Q(2), {phi, mul(Q(2), inv(phi))}, false, {}};
    CHECK_FALSE(restrict_representation(not_radical, V(100), Qf).in_radical);
}

TEST_CASE("metric measure of rationals") {
    const SolveResult six = m_one(Q(6));
    CHECK(exact_value(six) == 6);
    CHECK(six.witness.factors.size() == 1);
    check_witness(six, Q(6), true);
    CHECK(exact_value(m_one(Q(1))) == 1);
    CHECK(exact_value(m_one(Q(2, 3))) == 3);
    CHECK(exact_value(m_one(Q(-7, 5))) == 7);
    check_witness(m_one(Q(-7, 5)), Q(-7, 5), true);
    CHECK(*six.certificate.length_bound == 3);
    CHECK(six.certificate.q->exact()->rational_value() == 2);
    CHECK(*six.certificate.location);
    CHECK(six.certificate.witness_in_field);
}

TEST_CASE("ultrametric measure of rationals") {
    const SolveResult six = m_inf(Q(6));
    CHECK(exact_value(six) == 3);
    CHECK(witness_text(six) == "2*3");
    check_witness(six, Q(6), false);
    const SolveResult two = m_inf(Q(2));
    CHECK(exact_value(two) == 2);
    CHECK(witness_text(two) == "2");
    const SolveResult twelve = m_inf(Q(12));
    CHECK(exact_value(twelve) == 3);
    CHECK(witness_text(twelve) == "2*2*3");
    CHECK(twelve.certificate.witness_shortest);
    check_witness(twelve, Q(12), false);
    CHECK(exact_value(m_inf(Q(1))) == 1);
    CHECK(exact_value(m_inf(Q(-1))) == 1);
    const SolveResult neg = m_inf(Q(-40, 9));
    CHECK(exact_value(neg) == 5);
    check_witness(neg, Q(-40, 9), false);
    CHECK(neg.certificate.witness_shortest);
    CHECK(*neg.certificate.location);
}

TEST_CASE("location checks") {
    CHECK(verify_location(m_one(Q(6)), Q(6)));
    CHECK(verify_location(m_inf(Q(12)), Q(12)));
    SolveResult forged = m_one(Q(6));
    forged.value = MeasureValue(ExactPower::make(Rational(13, 2)));
    CHECK_FALSE(verify_location(forged, Q(6)));
    SolveResult bounds = m_one(Q(6));
    bounds.exact = false;
    CHECK_FALSE(verify_location(bounds, Q(6)));
}

TEST_CASE("quotient invariance") {
    for (const char* z : {"-1", "zeta(4,1)", "zeta(3,1)", "zeta(6,5)"})
        for (long n : {6L, 12L, 35L}) {
            const AlgebraicNumber target = N(std::string(z) + "*" + std::to_string(n));
            const SolveResult one = m_one(target), inf = m_inf(target);
            CHECK(exact_value(one) == exact_value(m_one(Q(n))));
            CHECK(exact_value(inf) == exact_value(m_inf(Q(n))));
            CHECK(representation_holds(one.witness));
            CHECK(representation_holds(inf.witness));
            CHECK(N(witness_text(inf)) == target);
        }
}

TEST_CASE("inequalities on rational pairs") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> ex(-2, 2);
    auto draw = [&] {
        Rational q = 1;
        for (long p : {2L, 3L, 5L, 7L}) q *= rpow(Rational(p), ex(rng));
        return q;
    };
    for (int t = 0; t < 60; ++t) {
        const Rational a = draw(), b = draw();
        const AlgebraicNumber x = AlgebraicNumber::from_rational(a), y = AlgebraicNumber::from_rational(b),
                              xy = AlgebraicNumber::from_rational(a * b);
        const Rational ix = exact_value(m_inf(x)), iy = exact_value(m_inf(y)), ixy = exact_value(m_inf(xy));
        const Rational ox = exact_value(m_one(x)), oy = exact_value(m_one(y)), oxy = exact_value(m_one(xy));
        CHECK(ixy <= (ix > iy ? ix : iy));
        CHECK(oxy <= ox * oy);
        CHECK(ix <= ox);
        CHECK(ox <= Rational(rational_height(a)));
    }
}

TEST_CASE("witness integrity and length bounds") {
    for (long a = -30; a <= 30; ++a)
        for (long b = 1; b <= 12; ++b) {
            if (a == 0 || std::gcd(std::labs(a), b) != 1) continue;
            const AlgebraicNumber x = Q(a, b);
            for (const SolveResult& r : {m_one(x), m_inf(x)}) {
                const bool product = r.certificate.measure == "M1";
                check_witness(r, x, product);
                REQUIRE(r.certificate.length_bound);
                CHECK(static_cast<int>(r.witness.factors.size()) <= *r.certificate.length_bound);
                CHECK(*r.certificate.location);
            }
        }
}

TEST_CASE("non-rational targets") {
    const AlgebraicNumber r2 = N("2^(1/2)");
    const SolveResult inf = m_inf(r2);
    CHECK(inf.exact);
    CHECK(inf.value.exact()->rational_value() == 2);
    CHECK(representation_holds(inf.witness));
    const SolveResult one = m_one(r2);
    CHECK(compare(one.lower, one.upper) <= 0);
    CHECK(compare(one.lower, weil_height(r2)) >= 0);
    CHECK(compare(one.upper, mahler_roots(r2)) <= 0);
    CHECK(representation_holds(one.witness));

    const AlgebraicNumber phi = N("root(x^2-x-1,1)");
    const SolveResult g = m_one(phi);
    CHECK_FALSE(g.exact);
    CHECK(compare(g.lower, g.upper) <= 0);
    const SolveResult gi = m_inf(phi);
    CHECK(compare(gi.lower, gi.upper) <= 0);
    CHECK(compare(gi.lower, MeasureValue()) > 0);

    const std::string json = result_json(m_inf(Q(12)), true);
    CHECK(json.find("\"value\":\"3\"") == 1);
    CHECK(json.find("\"text\":\"2*2*3\"") != std::string::npos);
    CHECK(result_json(m_inf(Q(12)), true) == json);
}
