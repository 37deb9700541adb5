#include "mahler/algnum/surd.hpp"

#include "mahler/error.hpp"

#include <numeric>

namespace mahler {

namespace {

unsigned long ulcm(unsigned long a, unsigned long b) { return a / std::gcd(a, b) * b; }

// Largest k with c = c0^k for a rational c > 0; returns (c0, k).
std::pair<Rational, unsigned long> perfect_power(const Rational& c) {
    const Integer u = c.get_num(), v = c.get_den();
    const unsigned long bits = static_cast<unsigned long>(mpz_sizeinbase(u > v ? u.get_mpz_t() : v.get_mpz_t(), 2));
    for (unsigned long k = bits; k >= 2; --k) {
        auto a = exact_root(u, k);
        if (!a) continue;
        auto b = exact_root(v, k);
        if (!b) continue;
        return {Rational(*a, *b), k};
    }
    return {c, 1};
}

long mod_long(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

SurdExpr reduce_unity(SurdExpr s) {
    const long m = static_cast<long>(s.unity_order);
    long j = mod_long(s.unity_index, m);
    if (j == 0) {
        s.unity_order = 1;
        s.unity_index = 0;
        return s;
    }
    const long g = std::gcd(j, m);
    s.unity_order = static_cast<unsigned long>(m / g);
    s.unity_index = j / g;
    return s;
}

// Multiplies in exp(2 pi i j2 / m2).
SurdExpr combine_unity(SurdExpr s, unsigned long m2, long j2) {
    const unsigned long L = ulcm(s.unity_order, m2);
    const long J = s.unity_index * static_cast<long>(L / s.unity_order) + j2 * static_cast<long>(L / m2);
    s.unity_order = L;
    s.unity_index = mod_long(J, static_cast<long>(L));
    return s;
}

} // namespace

SurdExpr canonical(const SurdExpr& in) {
    if (in.unity_order == 0) throw DomainError("root of unity of order 0");
    if (in.base == 0) throw DomainError("surd with zero base");
    SurdExpr s = in;
    s.exponent.canonicalize();
    s.unity_index = mod_long(s.unity_index, static_cast<long>(s.unity_order));
    if (s.base < 0) {
        // principal branch: (-c)^(p/q) = exp(i pi p / q) c^(p/q)
        const Integer p = s.exponent.get_num(), q = s.exponent.get_den();
        const unsigned long two_q = 2 * q.get_ui();
        const long pm = mod_long(static_cast<long>(mpz_fdiv_ui(p.get_mpz_t(), two_q)), static_cast<long>(two_q));
        s = combine_unity(s, two_q, pm);
        s.base = -s.base;
    }
    if (s.base == 1 || s.exponent == 0) {
        s.base = 1;
        s.exponent = 0;
    } else {
        if (s.base < 1) {
            s.base = 1 / s.base;
            s.exponent = -s.exponent;
        }
        auto [c0, k] = perfect_power(s.base);
        s.base = c0;
        s.exponent *= Rational(static_cast<long>(k));
        s.exponent.canonicalize();
    }
    return reduce_unity(s);
}

bool same_value(const SurdExpr& a, const SurdExpr& b) {
    const SurdExpr x = canonical(a), y = canonical(b);
    return x.unity_order == y.unity_order && x.unity_index == y.unity_index && x.base == y.base && x.exponent == y.exponent;
}

SurdExpr surd_mul_unity(const SurdExpr& s, unsigned long m, long j) {
    if (m == 0) throw DomainError("root of unity of order 0");
    return canonical(combine_unity(canonical(s), m, mod_long(j, static_cast<long>(m))));
}

SurdExpr surd_pow(const SurdExpr& s_in, long n) {
    SurdExpr s = canonical(s_in);
    s.unity_index = mod_long(static_cast<long>((static_cast<__int128>(s.unity_index) * n) % static_cast<long>(s.unity_order)),
                             static_cast<long>(s.unity_order));
    s.exponent *= Rational(n);
    return canonical(s);
}

AlgebraicNumber from_surd(const SurdExpr& in) {
    const SurdExpr s = canonical(in);
    const AlgebraicNumber zeta = root_of_unity(s.unity_order, s.unity_index);
    if (s.base == 1) return zeta;
    const Integer p = s.exponent.get_num(), q = s.exponent.get_den();
    const Integer u = s.base.get_num(), v = s.base.get_den();
    const unsigned long ap = Integer(abs(p)).get_ui();
    Integer A = ipow(u, ap), B = ipow(v, ap);
    if (p < 0) std::swap(A, B);
    const Rational value(A, B);
    AlgebraicNumber rho = AlgebraicNumber::from_rational(value);
    if (q != 1) {
        const unsigned long qq = q.get_ui();
        IntPoly ann = IntPoly::monomial(B, static_cast<int>(qq)) - IntPoly::constant(A);
        rho = select_root(ann, [&](long bits) {
            return CInterval{{root_lower(value, qq, bits + 2), root_upper(value, qq, bits + 2)}, Interval::point(Rational(0))};
        });
    }
    return mul(zeta, rho);
}

std::string to_string(const SurdExpr& in) {
    const SurdExpr s = canonical(in);
    std::vector<std::string> parts;
    const bool integral = s.exponent.get_den() == 1;
    if (integral) {
        Rational mag = rpow(s.base, s.exponent.get_num().get_si());
        if (s.unity_order == 2) mag = -mag;
        if (s.unity_order > 2)
            parts.push_back("zeta(" + std::to_string(s.unity_order) + "," + std::to_string(s.unity_index) + ")");
        if (mag != 1 || parts.empty()) parts.push_back(mahler::to_string(mag));
    } else {
        if (s.unity_order == 2) parts.push_back("-1");
        if (s.unity_order > 2)
            parts.push_back("zeta(" + std::to_string(s.unity_order) + "," + std::to_string(s.unity_index) + ")");
        parts.push_back("(" + mahler::to_string(s.base) + ")^(" + mahler::to_string(s.exponent) + ")");
    }
    std::string out;
    for (const auto& p : parts) out += (out.empty() ? "" : "*") + p;
    return out;
}

} // namespace mahler
