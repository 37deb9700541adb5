#include "mahler/polycore/resultant.hpp"

#include "mahler/error.hpp"

namespace mahler {

Integer determinant(std::vector<Integer> m, std::size_t n) {
    if (n == 0) return Integer(1);
    auto at = [&](std::size_t i, std::size_t j) -> Integer& { return m[i * n + j]; };
    Integer prev = 1;
    int sgn = 1;
    Integer t;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && at(piv, k) == 0) ++piv;
            if (piv == n) return Integer(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(piv, j));
            sgn = -sgn;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    Integer d = at(n - 1, n - 1);
    return sgn < 0 ? Integer(-d) : d;
}

Integer resultant(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero()) throw DomainError("resultant of zero polynomial");
    const int m = p.degree(), n = q.degree();
    const std::size_t size = static_cast<std::size_t>(m + n);
    if (size == 0) return Integer(1);
    std::vector<Integer> s(size * size, Integer(0));
    // n rows of p coefficients, then m rows of q coefficients (leading coefficient first).
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j) s[static_cast<std::size_t>(r) * size + static_cast<std::size_t>(r + j)] = p[m - j];
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j)
            s[static_cast<std::size_t>(n + r) * size + static_cast<std::size_t>(r + j)] = q[n - j];
    return determinant(std::move(s), size);
}

namespace {

// Integer multiple d*p with d the lcm of denominators.
std::pair<IntPoly, Integer> clear_denominators(const RatPoly& p) {
    Integer l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> r;
    for (const auto& c : p.coeffs()) {
        Rational t = c * l;
        r.push_back(t.get_num());
    }
    return {IntPoly(std::move(r)), l};
}

} // namespace

Rational resultant(const RatPoly& p, const RatPoly& q) {
    auto [pi, dp] = clear_denominators(p);
    auto [qi, dq] = clear_denominators(q);
    Rational r(resultant(pi, qi));
    // Res(a p, b q) = a^deg q * b^deg p * Res(p, q)
    r /= Rational(ipow(dp, static_cast<unsigned long>(q.degree())) * ipow(dq, static_cast<unsigned long>(p.degree())));
    return r;
}

RatPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    const std::size_t n = xs.size();
    std::vector<Rational> dd(ys);
    for (std::size_t k = 1; k < n; ++k)
        for (std::size_t i = n - 1; i >= k; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - k]);
            if (i == k) break;
        }
    RatPoly acc = RatPoly::constant(dd[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;) {
        acc = acc * RatPoly{Rational(-xs[i]), Rational(1)} + RatPoly::constant(dd[i]);
    }
    return acc;
}

RatPoly interpolate_resultant(const RatPoly& m, const std::function<RatPoly(const Rational&)>& g_at,
                              int degree_bound) {
    std::vector<Rational> xs, ys;
    const int half = degree_bound / 2;
    for (int j = 0; j <= degree_bound; ++j) {
        Rational x(j - half);
        RatPoly g = g_at(x);
        xs.push_back(x);
        ys.push_back(g.is_zero() ? Rational(0) : resultant(m, g));
    }
    return interpolate(xs, ys);
}

IntPoly composed_product(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero() || p[0] == 0 || q[0] == 0)
        throw DomainError("composed product needs nonzero roots");
    const int n = q.degree();
    const RatPoly pr = to_rat(p);
    // y^n q(t / y) = sum_k q_k t^k y^(n-k)
    auto g_at = [&](const Rational& t) {
        std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
        Rational tk = 1;
        for (int k = 0; k <= n; ++k) {
            c[static_cast<std::size_t>(n - k)] = q[k] * tk;
            tk *= t;
        }
        return RatPoly(std::move(c));
    };
    return primitive_from(interpolate_resultant(pr, g_at, p.degree() * n));
}

IntPoly composed_sum(const IntPoly& p, const IntPoly& q) {
    const RatPoly pr = to_rat(p);
    const RatPoly qr = to_rat(q);
    // q(t - y) as a polynomial in y
    const RatPoly q_neg = qr.negated_variable();
    auto g_at = [&](const Rational& t) { return q_neg.shifted(Rational(-t)); };
    return primitive_from(interpolate_resultant(pr, g_at, p.degree() * q.degree()));
}

IntPoly power_poly(const IntPoly& p, unsigned k) {
    if (k == 0) throw DomainError("power_poly with k = 0");
    if (k == 1) return normalize(p);
    const RatPoly pr = to_rat(p);
    auto g_at = [&](const Rational& t) { return RatPoly::constant(t) - RatPoly::monomial(Rational(1), static_cast<int>(k)); };
    return primitive_from(interpolate_resultant(pr, g_at, p.degree()));
}

} // namespace mahler
