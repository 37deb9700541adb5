#include <doctest.h>

#include "mahler/algnum/expression.hpp"
#include "mahler/algnum/field.hpp"
#include "mahler/error.hpp"

#include <random>

using namespace mahler;

namespace {

IntPoly P(const char* s) { return parse_poly(s); }
AlgebraicNumber N(const char* s) { return parse_number(s).value(); }
AlgebraicNumber Q(long a, long b = 1) { return AlgebraicNumber::from_rational(Rational(a, b)); }

SurdExpr surd(unsigned long m, long j, long a, long b, long p, long q) {
    SurdExpr s{m, j, Rational(a, b), Rational(p, q)};
    s.base.canonicalize();
    s.exponent.canonicalize();
    return s;
}

// The real root of x^3 - x - 1 and the complex root with positive imaginary part.
AlgebraicNumber cubic_root(int which) {
    const auto c = conjugates(AlgebraicNumber::root_of(P("x^3-x-1"), 0));
    for (const auto& r : c) {
        if (which == 0 && r.is_real()) return r;
        if (which == 1 && !r.is_real() && r.box().im_sign() > 0) return r;
        if (which == 2 && !r.is_real() && r.box().im_sign() < 0) return r;
    }
    throw Error("cubic root not found");
}

} // namespace

TEST_CASE("from_surd examples") {
    const AlgebraicNumber r2 = from_surd(surd(1, 0, 2, 1, 1, 2));
    CHECK(r2.minpoly() == P("x^2-2"));
    CHECK(r2.is_real());
    CHECK(r2.box().re_lo > 0);

    CHECK(from_surd(surd(1, 0, 4, 1, 1, 2)) == Q(2));
    CHECK(from_surd(surd(4, 1, 2, 1, 1, 2)).minpoly() == P("x^2+2"));
    CHECK(from_surd(surd(4, 1, 2, 1, 1, 2)).box().im_sign() == 1);
    // principal branch of a negative base
    CHECK(from_surd(surd(1, 0, -4, 1, 1, 2)) == mul(Q(2), root_of_unity(4, 1)));
    CHECK(from_surd(surd(1, 0, -8, 1, 1, 3)).minpoly() == P("x^2-2*x+4"));
    CHECK(from_surd(surd(1, 0, 2, 3, -1, 2)).minpoly() == P("2*x^2-3"));
}

TEST_CASE("surd canonical form") {
    CHECK(same_value(surd(1, 0, 4, 1, 1, 2), SurdExpr::rational(2)));
    CHECK(same_value(surd(1, 0, 1, 4, -1, 2), SurdExpr::rational(2)));
    CHECK(same_value(surd(8, 2, 1, 1, 1, 1), SurdExpr::unity(4, 1)));
    CHECK(same_value(SurdExpr::rational(-3), surd(2, 1, 3, 1, 1, 1)));
    const SurdExpr c = canonical(surd(1, 0, 9, 4, 3, 4));
    CHECK(c.base == Rational(3, 2));
    CHECK(c.exponent == Rational(3, 2));
    // idempotent and consistent with the algebraic value
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> small(1, 9), ord(1, 8), ex(-4, 4), den(1, 4);
    for (int t = 0; t < 40; ++t) {
        int p = ex(rng);
        if (p == 0) p = 1;
        SurdExpr s = surd(static_cast<unsigned long>(ord(rng)), small(rng), small(rng), small(rng), p, den(rng));
        if (s.base == 1) continue;
        const SurdExpr c1 = canonical(s);
        const SurdExpr c2 = canonical(c1);
        CHECK(same_value(c1, c2));
        CHECK(c1.unity_order == c2.unity_order);
        CHECK(c1.base == c2.base);
        CHECK(c1.exponent == c2.exponent);
        CHECK(from_surd(s) == from_surd(c1));
        CHECK(from_surd(s) == parse_number(to_string(s)).value());
    }
}

TEST_CASE("multiplication examples") {
    const AlgebraicNumber r2 = N("2^(1/2)"), r3 = N("3^(1/2)");
    CHECK(mul(r2, r2) == Q(2));
    const AlgebraicNumber r6 = mul(r2, r3);
    CHECK(r6.minpoly() == P("x^2-6"));
    CHECK(r6.box().re_lo > 0);
    const AlgebraicNumber a = add(Q(1), root_of_unity(4, 1)), b = add(Q(1), root_of_unity(4, 3));
    CHECK(a.minpoly() == P("x^2-2*x+2"));
    CHECK(mul(a, b) == Q(2));
}

TEST_CASE("inverse and powers") {
    CHECK(inv(Q(2, 3)) == Q(3, 2));
    CHECK_THROWS_AS(inv(Q(0)), DomainError);
    CHECK(pow_int(N("2^(1/2)"), 4) == Q(4));
    CHECK(pow_int(N("2^(1/2)"), 0) == Q(1));
    CHECK(pow_int(N("2^(1/2)"), -2) == Q(1, 2));
    const AlgebraicNumber phi = AlgebraicNumber::root_of(P("x^2-x-1"), 1);
    const AlgebraicNumber phi2 = pow_int(phi, 2);
    CHECK(phi2.minpoly() == P("x^2-3*x+1"));
    CHECK(phi2 == AlgebraicNumber::root_of(P("x^2-3*x+1"), 1));
    CHECK(mul(inv(phi), phi) == Q(1));
}

TEST_CASE("conjugates") {
    auto c = conjugates(N("2^(1/2)"));
    REQUIRE(c.size() == 2);
    CHECK(c[0] == neg(N("2^(1/2)")));
    CHECK(c[1] == N("2^(1/2)"));
    auto d = conjugates(AlgebraicNumber::root_of(P("x^3-x-1"), 0));
    REQUIRE(d.size() == 3);
    int real = 0;
    for (const auto& x : d) real += x.is_real() ? 1 : 0;
    CHECK(real == 1);
    CHECK(conjugates(Q(5)).size() == 1);
    // product of conjugates is (-1)^d a0 / ad
    for (const char* f : {"x^3-x-1", "3*x^2-5", "2*x^4+x-7"}) {
        const IntPoly p = P(f);
        auto cs = conjugates(AlgebraicNumber::root_of(p, 0));
        Rational expect(p[0], p.lead());
        if (p.degree() % 2) expect = -expect;
        CHECK(product(cs) == AlgebraicNumber::from_rational(expect));
        for (const auto& x : cs) CHECK(x.minpoly() == p);
    }
}

TEST_CASE("torsion") {
    CHECK(is_torsion(AlgebraicNumber::root_of(P("x^2+x+1"), 0)));
    CHECK(is_torsion(Q(-1)));
    CHECK_FALSE(is_torsion(N("2^(1/2)")));
    CHECK(torsion_index(root_of_unity(12, 5)) == std::pair<unsigned long, unsigned long>{12, 5});
    CHECK(torsion_index(N("zeta(6,2)")) == std::pair<unsigned long, unsigned long>{3, 1});
    CHECK(pow_int(root_of_unity(7, 3), 7) == Q(1));
}

TEST_CASE("multiplication is commutative and associative on surds") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> base(2, 7), ord(1, 4), den(1, 3);
    for (int t = 0; t < 10; ++t) {
        auto pick = [&] { return from_surd(surd(static_cast<unsigned long>(ord(rng)), 1, base(rng), 1, 1, den(rng))); };
        const AlgebraicNumber x = pick(), y = pick(), z = pick();
        CHECK(mul(x, y) == mul(y, x));
        CHECK(mul(mul(x, y), z) == mul(x, mul(y, z)));
    }
}

TEST_CASE("expression parsing") {
    CHECK(N("zeta(4,1)*(2)^(1/2)").minpoly() == P("x^2+2"));
    CHECK(N("6") == Q(6));
    CHECK(N("-3/4") == Q(-3, 4));
    CHECK(N("(2/3)^(1/2)").minpoly() == P("3*x^2-2"));
    CHECK(N("2^(1/2)*2^(1/2)") == Q(2));
    CHECK(N("root(x^2-2,1)^2") == Q(2));
    CHECK(N("(2*3)^2") == Q(36));
    CHECK_THROWS_AS(parse_number("nonsense("), ParseError);
    CHECK_THROWS_AS(parse_number(""), ParseError);
    CHECK_THROWS_AS(parse_number("0"), ParseError);
    CHECK_THROWS_AS(parse_number("zeta(4,1)^(1/2)"), ParseError);
    CHECK_THROWS_AS(parse_number("root(x^2-2,5)"), ParseError);
}

TEST_CASE("field arithmetic") {
    NumberField K(N("2^(1/2)"));
    const FieldElement t = K.gen();
    CHECK(t * t == K.from_rational(2));
    const FieldElement u = K.from_rational(1) + t;
    CHECK(u * u.inverse() == K.one());
    CHECK(u.minpoly() == P("x^2-2*x-1"));
    CHECK(u.value() == add(Q(1), N("2^(1/2)")));
}

TEST_CASE("factorization over number fields") {
    NumberField K(N("2^(1/2)"));
    auto f = factor_over_field(P("x^2-2"), K);
    REQUIRE(f.size() == 2);
    CHECK(f[0].first.degree() == 1);
    CHECK(f[1].first.degree() == 1);
    CHECK(f[0].first * f[1].first == FieldPoly::from_int(P("x^2-2"), K));

    const AlgebraicNumber g1 = cubic_root(0);
    NumberField L(g1);
    auto h = factor_over_field(P("x^3-x-1"), L);
    REQUIRE(h.size() == 2);
    CHECK(h[0].first.degree() == 1);
    CHECK(h[1].first.degree() == 2);
    CHECK(h[0].first * h[1].first == FieldPoly::from_int(P("x^3-x-1"), L));
    CHECK(-h[0].first[0] == L.gen());

    auto q = factor_over_field(P("x^2+1"), NumberField::rationals());
    REQUIRE(q.size() == 1);
    CHECK(q[0].first.degree() == 2);

    // x^4 + 1 splits into quadratics over Q(i) and Q(sqrt 2), linearly over Q(zeta_8)
    CHECK(factor_over_field(P("x^4+1"), NumberField(N("zeta(4,1)"))).size() == 2);
    CHECK(factor_over_field(P("x^4+1"), NumberField(N("zeta(8,1)"))).size() == 4);
}

TEST_CASE("field membership") {
    NumberField K(N("zeta(8,1)"));
    CHECK(field_member(K, N("2^(1/2)")).has_value());
    CHECK(field_member(K, N("zeta(4,1)")).has_value());
    CHECK_FALSE(field_member(K, N("3^(1/2)")).has_value());
    CHECK_FALSE(field_member(K, N("2^(1/4)")).has_value());
    const auto m = field_member(K, N("zeta(4,1)*2^(1/2)"));
    REQUIRE(m.has_value());
    CHECK(m->value() == N("zeta(4,1)*2^(1/2)"));
}

TEST_CASE("Galois closures") {
    const GaloisClosure q = galois_closure(Q(2, 3));
    CHECK(q.field.degree() == 1);
    CHECK(q.alpha.rational_value() == Rational(2, 3));

    const GaloisClosure r = galois_closure(N("2^(1/2)"));
    CHECK(r.field.degree() == 2);
    CHECK(r.alpha.value() == N("2^(1/2)"));

    const GaloisClosure c = galois_closure(cubic_root(0));
    CHECK(c.field.degree() == 6);
    CHECK(c.alpha.value() == cubic_root(0));
    for (const auto& [f, m] : factor_over_field(P("x^3-x-1"), c.field)) CHECK(f.degree() == 1);
    CHECK(is_galois(c.field));

    const GaloisClosure k = galois_closure(N("2^(1/3)"));
    CHECK(k.field.degree() == 6);
    CHECK_THROWS_AS(galois_closure(N("2^(1/3)"), 4), UnsupportedDegree);
}

TEST_CASE("products of conjugates over a field") {
    NumberField Qf;
    CHECK(product_of_conjugates_over(N("2^(1/2)"), Qf).rational_value() == -2);
    CHECK(product_of_conjugates_over(add(Q(1), N("zeta(4,1)")), Qf).rational_value() == 2);
    // over Q the product is the norm up to sign
    for (const char* f : {"x^3-x-1", "5*x^2-3*x+7", "2*x^3+4*x-1"}) {
        const IntPoly p = P(f);
        const Rational got = product_of_conjugates_over(AlgebraicNumber::root_of(p, 0), Qf).rational_value();
        CHECK(abs(got) == abs(Rational(p[0], p.lead())));
    }
    // non-Galois field is rejected
    CHECK_THROWS_AS(product_of_conjugates_over(cubic_root(1), NumberField(cubic_root(1))), NonGaloisField);
    // over a Galois field the product lies in the field
    NumberField Ki(N("zeta(4,1)"));
    const FieldElement pr = product_of_conjugates_over(N("2^(1/4)"), Ki);
    CHECK(pr.rational_value() == -2);
}

TEST_CASE("conjugates over a non-Galois cubic field") {
    // gamma_2 has degree 2 over Q(gamma_1); its conjugates there are gamma_2, gamma_3 and
    // their product 1/gamma_1 does not lie in Q(gamma_2).
    const AlgebraicNumber g1 = cubic_root(0), g2 = cubic_root(1), g3 = cubic_root(2);
    NumberField K1(g1);
    const FieldPoly h = minimal_polynomial_over(g2, K1);
    CHECK(h.degree() == 2);
    const FieldElement prod = h[0];
    CHECK(prod.value() == mul(g2, g3));
    CHECK(prod.value() == inv(g1));
    CHECK_FALSE(field_member(NumberField(g2), prod.value()).has_value());
    CHECK(field_member(NumberField(g1), prod.value()).has_value());
}

TEST_CASE("degree identity over Galois fields") {
    // [K(g):K] equals [Q(g) : K cap Q(g)], the intersection being generated by the
    // coefficients of the minimal polynomial of g over K and contained in Q(g).
    struct Case {
        const char* field;
        const char* gamma;
        int expected;
    };
    for (const Case& c : {Case{"zeta(4,1)", "2^(1/4)", 4}, Case{"2^(1/2)", "2^(1/4)", 2}, Case{"zeta(8,1)", "2^(1/4)", 2},
                          Case{"zeta(3,1)", "2^(1/3)", 3}}) {
        NumberField K(N(c.field));
        const AlgebraicNumber g = N(c.gamma);
        const FieldPoly h = minimal_polynomial_over(g, K);
        CHECK(h.degree() == c.expected);
        // degree of the field generated by the coefficients
        int sub = 1;
        for (const auto& a : h.coeffs()) {
            if (a.is_rational()) continue;
            const AlgebraicNumber v = a.value();
            sub = std::max(sub, v.degree());
            CHECK(field_member(NumberField(g), v).has_value());
        }
        CHECK(g.degree() == h.degree() * sub);
    }
}
