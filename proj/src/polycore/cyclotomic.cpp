#include "mahler/polycore/cyclotomic.hpp"

#include "mahler/error.hpp"
#include "mahler/polycore/factor.hpp"

namespace mahler {

unsigned long euler_phi(unsigned long n) {
    unsigned long r = n;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        r -= r / p;
    }
    if (n > 1) r -= r / n;
    return r;
}

IntPoly cyclotomic_poly(unsigned long n) {
    if (n == 0) throw DomainError("cyclotomic polynomial of order 0");
    // Phi_n = prod_{d | n} (x^d - 1)^mu(n/d): multiply the positive terms, divide the rest.
    IntPoly num = IntPoly::constant(Integer(1)), den = IntPoly::constant(Integer(1));
    for (unsigned long d = 1; d <= n; ++d) {
        if (n % d) continue;
        unsigned long m = n / d;
        int mu = 1;
        for (unsigned long p = 2; p <= m; ++p) {
            if (m % p) continue;
            m /= p;
            if (m % p == 0) {
                mu = 0;
                break;
            }
            mu = -mu;
        }
        if (mu == 0) continue;
        IntPoly t = IntPoly::monomial(Integer(1), static_cast<int>(d)) - IntPoly::constant(Integer(1));
        if (mu > 0)
            num *= t;
        else
            den *= t;
    }
    return exact_div(num, den);
}

unsigned long cyclotomic_index(const IntPoly& f) {
    const IntPoly g = normalize(f);
    const int d = g.degree();
    if (d < 1 || g.lead() != 1) return 0;
    const unsigned long deg = static_cast<unsigned long>(d);
    // phi(n) >= sqrt(n/2), so n <= 2 deg^2.
    for (unsigned long n = 1; n <= 2 * deg * deg + 2; ++n) {
        if (euler_phi(n) != deg) continue;
        if (cyclotomic_poly(n) == g) return n;
    }
    return 0;
}

bool is_cyclotomic_product(const IntPoly& p) {
    if (p.is_zero()) throw DomainError("cyclotomic test of the zero polynomial");
    for (const auto& g : irreducible_factors(p)) {
        if (g == IntPoly::x()) continue;
        if (cyclotomic_index(g) == 0) return false;
    }
    return true;
}

} // namespace mahler
