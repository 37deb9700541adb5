#include "mahler/polycore/integer.hpp"

#include "mahler/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace mahler {

Integer ipow(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rational rpow(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    if (exp < 0) {
        if (base == 0) throw DomainError("negative power of zero");
        Rational inv = 1 / base;
        return rpow(inv, -exp);
    }
    Rational r(ipow(base.get_num(), static_cast<unsigned long>(exp)),
               ipow(base.get_den(), static_cast<unsigned long>(exp)));
    r.canonicalize();
    return r;
}

Integer floor_of(const Rational& x) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
}

Integer ceil_of(const Rational& x) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
}

Rational pow2(long e) {
    Integer one(1);
    if (e >= 0) {
        Integer r;
        mpz_mul_2exp(r.get_mpz_t(), one.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
        return Rational(r);
    }
    Integer d;
    mpz_mul_2exp(d.get_mpz_t(), one.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
    return Rational(Integer(1), d);
}

Rational dyadic_floor(const Rational& x, long bits) {
    const Rational scale = pow2(bits);
    Rational r(floor_of(x * scale));
    r /= scale;
    return r;
}

Rational dyadic_ceil(const Rational& x, long bits) {
    const Rational scale = pow2(bits);
    Rational r(ceil_of(x * scale));
    r /= scale;
    return r;
}

namespace {

Integer iroot_floor(const Integer& x, unsigned long n) {
    Integer r;
    mpz_root(r.get_mpz_t(), x.get_mpz_t(), n);
    return r;
}

} // namespace

Rational root_lower(const Rational& x, unsigned long n, long bits) {
    if (x <= 0) return Rational(0);
    if (n == 1) return dyadic_floor(x, bits);
    // floor((x * 2^(n*bits))^(1/n)) / 2^bits, computed on floor(x * 2^(n bits)).
    const Integer scaled = floor_of(x * pow2(static_cast<long>(n) * bits));
    Rational r(iroot_floor(scaled, n));
    r /= pow2(bits);
    return r;
}

Rational root_upper(const Rational& x, unsigned long n, long bits) {
    if (x <= 0) return Rational(0);
    if (n == 1) return dyadic_ceil(x, bits);
    const Integer scaled = ceil_of(x * pow2(static_cast<long>(n) * bits));
    Integer r = iroot_floor(scaled, n);
    if (ipow(r, n) < scaled) r += 1;
    Rational out(r);
    out /= pow2(bits);
    return out;
}

std::optional<Integer> exact_root(const Integer& x, unsigned long n) {
    if (n == 0) return std::nullopt;
    if (x < 0) {
        if (n % 2 == 0) return std::nullopt;
        auto r = exact_root(Integer(-x), n);
        if (!r) return std::nullopt;
        return Integer(-*r);
    }
    Integer r;
    if (mpz_root(r.get_mpz_t(), x.get_mpz_t(), n) != 0) return r;
    return std::nullopt;
}

std::optional<Rational> exact_root(const Rational& x, unsigned long n) {
    auto a = exact_root(x.get_num(), n);
    auto b = exact_root(x.get_den(), n);
    if (!a || !b) return std::nullopt;
    Rational r(*a, *b);
    r.canonicalize();
    return r;
}

Integer rational_height(const Rational& x) {
    Integer a = abs(x.get_num());
    Integer b = abs(x.get_den());
    return a > b ? a : b;
}

long valuation(const Integer& x, const Integer& p) {
    if (x == 0) throw DomainError("valuation of zero");
    Integer y = abs(x);
    long v = 0;
    Integer q, r;
    while (true) {
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), y.get_mpz_t(), p.get_mpz_t());
        if (r != 0) break;
        y = q;
        ++v;
    }
    return v;
}

bool is_probable_prime(const Integer& x) {
    return mpz_probab_prime_p(x.get_mpz_t(), 30) > 0;
}

namespace {

// Pollard rho with Brent's cycle detection; n is odd composite.
Integer pollard_rho(const Integer& n) {
    for (unsigned long c = 1;; ++c) {
        Integer x = 2, y = 2, d = 1, q = 1, ys;
        const unsigned long m = 64;
        unsigned long r = 1;
        auto f = [&](const Integer& v) {
            Integer t = v * v + c;
            mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
            return t;
        };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    Integer diff = abs(x - y);
                    q = q * diff;
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            } while (k < r && d == 1);
            r *= 2;
        } while (d == 1);
        if (d == n) {
            do {
                ys = f(ys);
                Integer diff = abs(x - ys);
                mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (d == 1);
        }
        if (d != n) return d;
    }
}

void factor_into(const Integer& n, std::map<Integer, long>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out[n] += 1;
        return;
    }
    Integer d = pollard_rho(n);
    factor_into(d, out);
    factor_into(Integer(n / d), out);
}

} // namespace

std::vector<std::pair<Integer, long>> factor_integer(const Integer& x) {
    if (x == 0) throw DomainError("factorization of zero");
    Integer n = abs(x);
    std::map<Integer, long> found;
    for (unsigned long p = 2; p < 10000 && n > 1; p += (p == 2 ? 1 : 2)) {
        if (static_cast<unsigned long>(p) * p > n && n < Integer(100000000)) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            found[Integer(p)] += 1;
            n /= p;
        }
    }
    if (n > 1) factor_into(n, found);
    return {found.begin(), found.end()};
}

std::string to_string(const Integer& x) { return x.get_str(); }
std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        return std::all_of(t.begin() + static_cast<long>(i), t.end(),
                           [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    auto strip_plus = [](std::string t) {
        if (!t.empty() && t[0] == '+') t.erase(0, 1);
        return t;
    };
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!valid_int(s)) throw ParseError("invalid rational: '" + text + "'");
        return Rational(Integer(strip_plus(s)));
    }
    const std::string a = s.substr(0, slash), b = s.substr(slash + 1);
    if (!valid_int(a) || !valid_int(b)) throw ParseError("invalid rational: '" + text + "'");
    Integer den(strip_plus(b));
    if (den == 0) throw ParseError("zero denominator: '" + text + "'");
    Rational r(Integer(strip_plus(a)), den);
    r.canonicalize();
    return r;
}

std::string to_decimal(const Rational& x, int digits, bool round_up) {
    const Integer scale = ipow(Integer(10), static_cast<unsigned long>(digits));
    const Rational y = x * scale;
    const Integer n = round_up ? ceil_of(y) : floor_of(y);
    std::string s = Integer(abs(n)).get_str();
    if (digits > 0) {
        if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
        s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    }
    return n < 0 ? "-" + s : s;
}

double to_double(const Rational& x) { return x.get_d(); }

} // namespace mahler
