#include "mahler/polycore/polynomial.hpp"

#include "mahler/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mahler {

Integer content(const IntPoly& p) {
    Integer g = 0;
    for (const auto& c : p.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly normalize(const IntPoly& p) {
    if (p.is_zero()) return p;
    Integer g = content(p);
    if (p.lead() < 0) g = -g;
    std::vector<Integer> r(p.coeffs());
    for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(r));
}

IntPoly primitive_from(const RatPoly& p) {
    Integer l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> r;
    r.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        Rational t = c * l;
        r.push_back(t.get_num());
    }
    return normalize(IntPoly(std::move(r)));
}

RatPoly to_rat(const IntPoly& p) {
    std::vector<Rational> r(p.coeffs().begin(), p.coeffs().end());
    return RatPoly(std::move(r));
}

bool divides(const IntPoly& b, const IntPoly& a, IntPoly* quotient) {
    if (b.is_zero()) throw DomainError("division by zero polynomial");
    if (a.is_zero()) {
        if (quotient) *quotient = IntPoly();
        return true;
    }
    if (a.degree() < b.degree()) return false;
    // Cheap necessary condition on constant terms.
    if (b[0] != 0 && a[0] != 0 && !mpz_divisible_p(a[0].get_mpz_t(), b[0].get_mpz_t())) return false;
    std::vector<Integer> r(a.coeffs());
    const int db = b.degree();
    std::vector<Integer> q(static_cast<std::size_t>(a.degree() - db + 1));
    Integer t;
    for (int i = a.degree(); i >= db; --i) {
        const Integer& top = r[static_cast<std::size_t>(i)];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), b.lead().get_mpz_t())) return false;
        mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), b.lead().get_mpz_t());
        q[static_cast<std::size_t>(i - db)] = t;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= t * b[j];
    }
    for (int i = 0; i < db; ++i)
        if (r[static_cast<std::size_t>(i)] != 0) return false;
    if (quotient) *quotient = IntPoly(std::move(q));
    return true;
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
    IntPoly q;
    if (!divides(b, a, &q)) throw DomainError("inexact polynomial division");
    return q;
}

IntPoly pow(const IntPoly& p, unsigned n) {
    IntPoly r = IntPoly::constant(Integer(1));
    IntPoly b = p;
    while (n) {
        if (n & 1u) r *= b;
        n >>= 1u;
        if (n) b *= b;
    }
    return r;
}

Integer max_norm(const IntPoly& p) {
    Integer m = 0;
    for (const auto& c : p.coeffs())
        if (abs(c) > m) m = abs(c);
    return m;
}

bool poly_less(const IntPoly& a, const IntPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

namespace {

// Pseudo-remainder of a by b over Z.
IntPoly prem(const IntPoly& a, const IntPoly& b) {
    std::vector<Integer> r(a.coeffs());
    const int db = b.degree();
    int dr = a.degree();
    const Integer& lb = b.lead();
    while (dr >= db && dr >= 0) {
        const Integer top = r[static_cast<std::size_t>(dr)];
        for (auto& c : r) c *= lb;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(dr - db + j)] -= top * b[j];
        r.pop_back();
        --dr;
        while (dr >= 0 && r[static_cast<std::size_t>(dr)] == 0) {
            r.pop_back();
            --dr;
        }
    }
    return IntPoly(std::move(r));
}

} // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    IntPoly u = normalize(a), v = normalize(b);
    if (u.is_zero()) return v;
    if (v.is_zero()) return u;
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        IntPoly r = normalize(prem(u, v));
        u = std::move(v);
        v = std::move(r);
    }
    return normalize(u);
}

bool is_squarefree(const IntPoly& p) { return gcd(p, p.derivative()).degree() <= 0; }

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
    std::vector<std::pair<IntPoly, int>> out;
    IntPoly f = normalize(p);
    if (f.degree() <= 0) return out;
    IntPoly fp = f.derivative();
    IntPoly a = gcd(f, fp);
    RatPoly bq = to_rat(exact_div(f, a));
    RatPoly cq = divmod(to_rat(fp), to_rat(a)).first;
    RatPoly dq = cq - bq.derivative();
    int i = 1;
    while (bq.degree() > 0) {
        RatPoly g = gcd(bq, dq);
        if (g.degree() > 0) out.emplace_back(primitive_from(g), i);
        bq = divmod(bq, g).first;
        cq = divmod(dq, g).first;
        dq = cq - bq.derivative();
        ++i;
    }
    return out;
}

IntPoly squarefree_part(const IntPoly& p) {
    IntPoly f = normalize(p);
    if (f.degree() <= 0) return f;
    return normalize(exact_div(f, gcd(f, f.derivative())));
}

RatPoly monic(const RatPoly& p) {
    if (p.is_zero()) return p;
    Rational inv = 1 / p.lead();
    return inv * p;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw DomainError("division by zero polynomial");
    if (a.degree() < b.degree()) return {RatPoly(), a};
    std::vector<Rational> r(a.coeffs());
    const int db = b.degree();
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
    const Rational inv = 1 / b.lead();
    for (int i = a.degree(); i >= db; --i) {
        const Rational t = r[static_cast<std::size_t>(i)] * inv;
        if (t == 0) continue;
        q[static_cast<std::size_t>(i - db)] = t;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= t * b[j];
    }
    r.resize(static_cast<std::size_t>(db));
    return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly rem(const RatPoly& a, const RatPoly& b) { return divmod(a, b).second; }

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
    // Run the integer primitive PRS to keep coefficients small.
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    IntPoly g = gcd(primitive_from(a), primitive_from(b));
    return monic(to_rat(g));
}

XGcd xgcd(const RatPoly& a, const RatPoly& b) {
    RatPoly r0 = a, r1 = b;
    RatPoly s0 = RatPoly::constant(Rational(1)), s1;
    RatPoly t0, t1 = RatPoly::constant(Rational(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        RatPoly s2 = s0 - q * s1;
        RatPoly t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const Rational inv = 1 / r0.lead();
    return {inv * r0, inv * s0, inv * t0};
}

RatPoly compose(const RatPoly& p, const RatPoly& q) {
    RatPoly acc;
    for (int i = p.degree(); i >= 0; --i) acc = acc * q + RatPoly::constant(p[i]);
    return acc;
}

namespace {

template <class C>
std::string poly_text(const Poly<C>& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const C c = p[i];
        if (c == 0) continue;
        const bool neg = c < 0;
        const C mag = neg ? C(-c) : c;
        if (neg)
            os << "-";
        else if (!first)
            os << "+";
        first = false;
        if (i == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << "*";
        os << "x";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

} // namespace

std::string to_string(const IntPoly& p) { return poly_text(p); }
std::string to_string(const RatPoly& p) { return poly_text(p); }

IntPoly parse_poly(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty polynomial");
    std::vector<Integer> coeffs;
    auto add = [&](long deg, const Integer& c) {
        if (deg > 100000) throw ParseError("exponent too large in '" + text + "'");
        if (coeffs.size() <= static_cast<std::size_t>(deg)) coeffs.resize(static_cast<std::size_t>(deg) + 1, Integer(0));
        coeffs[static_cast<std::size_t>(deg)] += c;
    };
    std::size_t i = 0;
    auto digits = [&](std::string& out) {
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) out.push_back(s[i++]);
    };
    bool first = true;
    while (i < s.size()) {
        int sgn = 1;
        if (s[i] == '+' || s[i] == '-') {
            sgn = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw ParseError("expected '+' or '-' at position " + std::to_string(i) + " in '" + text + "'");
        }
        first = false;
        std::string num;
        digits(num);
        bool has_x = false;
        if (i < s.size() && s[i] == '*') {
            if (num.empty()) throw ParseError("dangling '*' in '" + text + "'");
            ++i;
            if (i >= s.size() || s[i] != 'x') throw ParseError("expected 'x' after '*' in '" + text + "'");
        }
        if (i < s.size() && s[i] == 'x') {
            has_x = true;
            ++i;
        }
        if (num.empty() && !has_x) throw ParseError("expected a term at position " + std::to_string(i) + " in '" + text + "'");
        long deg = 0;
        if (has_x) {
            deg = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string e;
                digits(e);
                if (e.empty() || e.size() > 6) throw ParseError("bad exponent in '" + text + "'");
                deg = std::stol(e);
            }
        }
        Integer c = num.empty() ? Integer(1) : Integer(num);
        add(deg, sgn < 0 ? Integer(-c) : c);
    }
    return IntPoly(std::move(coeffs));
}

} // namespace mahler
