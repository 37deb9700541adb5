#include "mahler/polycore/factor.hpp"

#include "mahler/error.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

namespace mahler {

namespace {

using u64 = std::uint64_t;

// Polynomials over F_p, p < 2^31, constant term first, trimmed.
struct ModPoly {
    std::vector<u64> c;
    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
};

struct Fp {
    u64 p;

    u64 add(u64 a, u64 b) const { return (a + b) % p; }
    u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
    u64 mul(u64 a, u64 b) const { return (a * b) % p; }
    u64 pow(u64 a, u64 e) const {
        u64 r = 1;
        a %= p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const { return pow(a, p - 2); }

    ModPoly reduce(const IntPoly& f) const {
        ModPoly r;
        Integer pp(static_cast<unsigned long>(p));
        for (const auto& c : f.coeffs()) {
            Integer m;
            mpz_mod(m.get_mpz_t(), c.get_mpz_t(), pp.get_mpz_t());
            r.c.push_back(m.get_ui());
        }
        r.trim();
        return r;
    }

    ModPoly sub(const ModPoly& a, const ModPoly& b) const {
        ModPoly r;
        r.c.assign(std::max(a.c.size(), b.c.size()), 0);
        for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
        for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = sub(r.c[i], b.c[i]);
        r.trim();
        return r;
    }
    ModPoly add(const ModPoly& a, const ModPoly& b) const {
        ModPoly r;
        r.c.assign(std::max(a.c.size(), b.c.size()), 0);
        for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
        for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = add(r.c[i], b.c[i]);
        r.trim();
        return r;
    }
    ModPoly mul(const ModPoly& a, const ModPoly& b) const {
        ModPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.c.assign(a.c.size() + b.c.size() - 1, 0);
        for (std::size_t i = 0; i < a.c.size(); ++i) {
            if (!a.c[i]) continue;
            for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = (r.c[i + j] + a.c[i] * b.c[j]) % p;
        }
        r.trim();
        return r;
    }
    ModPoly scale(const ModPoly& a, u64 s) const {
        ModPoly r = a;
        for (auto& v : r.c) v = mul(v, s);
        r.trim();
        return r;
    }
    ModPoly monic(const ModPoly& a) const {
        if (a.is_zero()) return a;
        return scale(a, inv(a.c.back()));
    }
    std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) const {
        ModPoly q, r = a;
        if (a.degree() < b.degree()) return {q, r};
        q.c.assign(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
        const u64 li = inv(b.c.back());
        const int db = b.degree();
        for (int i = a.degree(); i >= db; --i) {
            const u64 t = mul(r.c[static_cast<std::size_t>(i)], li);
            if (!t) continue;
            q.c[static_cast<std::size_t>(i - db)] = t;
            for (int j = 0; j <= db; ++j) {
                auto& slot = r.c[static_cast<std::size_t>(i - db + j)];
                slot = sub(slot, mul(t, b.c[static_cast<std::size_t>(j)]));
            }
        }
        r.c.resize(static_cast<std::size_t>(db));
        r.trim();
        q.trim();
        return {q, r};
    }
    ModPoly rem(const ModPoly& a, const ModPoly& b) const { return divmod(a, b).second; }
    ModPoly gcd(ModPoly a, ModPoly b) const {
        while (!b.is_zero()) {
            ModPoly r = rem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return monic(a);
    }
    // (s, t) with s a + t b = 1 for coprime a, b.
    std::pair<ModPoly, ModPoly> bezout(const ModPoly& a, const ModPoly& b) const {
        ModPoly r0 = a, r1 = b, s0{{1}}, s1, t0, t1{{1}};
        while (!r1.is_zero()) {
            auto [q, r] = divmod(r0, r1);
            r0 = std::move(r1);
            r1 = std::move(r);
            ModPoly s2 = sub(s0, mul(q, s1));
            ModPoly t2 = sub(t0, mul(q, t1));
            s0 = std::move(s1);
            s1 = std::move(s2);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        const u64 li = inv(r0.c.back());
        return {scale(s0, li), scale(t0, li)};
    }
    ModPoly powmod(ModPoly base, Integer e, const ModPoly& m) const {
        ModPoly r{{1}};
        base = rem(base, m);
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) r = rem(mul(r, base), m);
            e >>= 1;
            if (e > 0) base = rem(mul(base, base), m);
        }
        return r;
    }
    ModPoly derivative(const ModPoly& a) const {
        ModPoly r;
        for (std::size_t i = 1; i < a.c.size(); ++i) r.c.push_back(mul(a.c[i], i % p));
        r.trim();
        return r;
    }

    // Distinct-degree factorization of a monic squarefree polynomial.
    std::vector<std::pair<ModPoly, int>> ddf(ModPoly f) const {
        std::vector<std::pair<ModPoly, int>> out;
        const ModPoly x{{0, 1}};
        ModPoly h = x;
        int i = 0;
        while (f.degree() >= 2 * (i + 1)) {
            ++i;
            h = powmod(h, Integer(static_cast<unsigned long>(p)), f);
            ModPoly g = gcd(f, sub(h, x));
            if (g.degree() > 0) {
                out.emplace_back(g, i);
                f = divmod(f, g).first;
                h = rem(h, f);
            }
        }
        if (f.degree() > 0) out.emplace_back(monic(f), f.degree());
        return out;
    }

    // Equal-degree splitting (Cantor-Zassenhaus, odd p) into irreducibles of degree d.
    void edf(const ModPoly& f, int d, std::mt19937_64& rng, std::vector<ModPoly>& out) const {
        if (f.degree() == d) {
            out.push_back(monic(f));
            return;
        }
        Integer pd = 1;
        for (int i = 0; i < d; ++i) pd *= static_cast<unsigned long>(p);
        const Integer e = (pd - 1) / 2;
        while (true) {
            ModPoly a;
            for (int i = 0; i < f.degree(); ++i) a.c.push_back(rng() % p);
            a.trim();
            if (a.degree() <= 0) continue;
            ModPoly b = powmod(a, e, f);
            b = sub(b, ModPoly{{1}});
            ModPoly g = gcd(f, b);
            if (g.degree() > 0 && g.degree() < f.degree()) {
                edf(g, d, rng, out);
                edf(divmod(f, g).first, d, rng, out);
                return;
            }
        }
    }
};

bool small_is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Integer mod_sym(const Integer& a, const Integer& m) {
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (2 * r > m) r -= m;
    return r;
}

IntPoly to_int(const ModPoly& a) {
    std::vector<Integer> r;
    for (u64 v : a.c) r.emplace_back(static_cast<unsigned long>(v));
    return IntPoly(std::move(r));
}

IntPoly reduce_mod(const IntPoly& f, const Integer& m) {
    std::vector<Integer> r;
    for (const auto& c : f.coeffs()) {
        Integer t;
        mpz_mod(t.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        r.push_back(t);
    }
    return IntPoly(std::move(r));
}

IntPoly sym_mod(const IntPoly& f, const Integer& m) {
    std::vector<Integer> r;
    for (const auto& c : f.coeffs()) r.push_back(mod_sym(c, m));
    return IntPoly(std::move(r));
}

// Lifts f = g*h (mod p) to mod p^k. g carries the leading coefficient of f, h is monic.
std::pair<IntPoly, IntPoly> hensel_pair(const IntPoly& f, const ModPoly& g0, const ModPoly& h0, const Fp& F,
                                        int k) {
    const Integer p(static_cast<unsigned long>(F.p));
    auto [s, t] = F.bezout(g0, h0);
    IntPoly g = to_int(g0), h = to_int(h0);
    // exact leading coefficient of f on g
    {
        std::vector<Integer> gc(g.coeffs());
        gc.back() = f.lead();
        g = IntPoly(std::move(gc));
    }
    Integer pj = p;
    for (int j = 1; j < k; ++j) {
        IntPoly diff = f - g * h;
        std::vector<Integer> ec;
        for (const auto& c : diff.coeffs()) {
            Integer q;
            mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), pj.get_mpz_t());
            ec.push_back(q);
        }
        ModPoly e = F.reduce(IntPoly(std::move(ec)));
        auto [q, r] = F.divmod(F.mul(e, t), g0);
        ModPoly dh = F.add(F.mul(e, s), F.mul(q, h0));
        dh = F.rem(dh, h0.degree() > 0 ? h0 : ModPoly{{1}});
        // dh has degree < deg h by construction; rem above only guards against drift.
        g = g + pj * to_int(r);
        h = h + pj * to_int(dh);
        pj *= p;
    }
    return {reduce_mod(g, pj), reduce_mod(h, pj)};
}

// Lifts monic modular factors of f (f = lc * prod factors mod p) to mod p^k, appending monic
// lifted factors to out in the same order.
void hensel_multi(const IntPoly& f, const std::vector<ModPoly>& factors, const Fp& F, int k,
                  std::vector<IntPoly>& out) {
    const Integer p(static_cast<unsigned long>(F.p));
    const Integer pk = ipow(p, static_cast<unsigned long>(k));
    if (factors.size() == 1) {
        Integer inv;
        Integer lc = f.lead();
        mpz_mod(lc.get_mpz_t(), lc.get_mpz_t(), pk.get_mpz_t());
        mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), pk.get_mpz_t());
        out.push_back(reduce_mod(inv * f, pk));
        return;
    }
    const std::size_t mid = factors.size() / 2;
    ModPoly g0 = F.reduce(IntPoly::constant(f.lead()));
    ModPoly h0{{1}};
    for (std::size_t i = 0; i < mid; ++i) g0 = F.mul(g0, factors[i]);
    for (std::size_t i = mid; i < factors.size(); ++i) h0 = F.mul(h0, factors[i]);
    auto [g, h] = hensel_pair(f, g0, h0, F, k);
    const std::vector<ModPoly> left(factors.begin(), factors.begin() + static_cast<long>(mid));
    const std::vector<ModPoly> right(factors.begin() + static_cast<long>(mid), factors.end());
    hensel_multi(g, left, F, k, out);
    hensel_multi(h, right, F, k, out);
}

struct PrimeChoice {
    Fp field{0};
    std::vector<ModPoly> factors;
};

// Picks, among the first few primes keeping f squarefree of full degree, the one giving the
// fewest modular factors.
PrimeChoice choose_prime(const IntPoly& f) {
    PrimeChoice best;
    int tried = 0;
    std::mt19937_64 rng(0x5eedULL);
    for (u64 p = 101; tried < 6 && p < 1000000; p += 2) {
        if (!small_is_prime(p)) continue;
        Fp F{p};
        ModPoly fp = F.reduce(f);
        if (fp.degree() != f.degree()) continue;
        if (F.gcd(fp, F.derivative(fp)).degree() > 0) continue;
        ++tried;
        auto dd = F.ddf(F.monic(fp));
        std::size_t count = 0;
        for (const auto& [g, d] : dd) count += static_cast<std::size_t>(g.degree() / d);
        if (best.field.p == 0 || count < best.factors.size()) {
            std::vector<ModPoly> fs;
            for (const auto& [g, d] : dd) F.edf(g, d, rng, fs);
            best.field = F;
            best.factors = std::move(fs);
            if (count == 1) break;
        }
    }
    if (best.field.p == 0) throw Error("no suitable prime for modular factorization");
    return best;
}

// Coefficient bound for lc(f) times any factor of f (Mignotte).
Integer factor_bound(const IntPoly& f) {
    Integer norm2 = 0;
    for (const auto& c : f.coeffs()) norm2 += c * c;
    Integer root;
    mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
    root += 1;
    return abs(f.lead()) * ipow(Integer(2), static_cast<unsigned long>(f.degree())) * root;
}

// Zassenhaus recombination of lifted factors.
std::vector<IntPoly> recombine(IntPoly f, std::vector<IntPoly> lifted, const Integer& pk) {
    std::vector<IntPoly> found;
    std::size_t s = 1;
    while (2 * s <= lifted.size()) {
        bool progress = false;
        const std::size_t r = lifted.size();
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        while (true) {
            const Integer lc = f.lead();
            // constant-term test before forming the full product
            Integer c0 = lc;
            for (std::size_t i : idx) {
                c0 *= lifted[i][0];
                mpz_mod(c0.get_mpz_t(), c0.get_mpz_t(), pk.get_mpz_t());
            }
            c0 = mod_sym(c0, pk);
            bool ok = c0 != 0 && mpz_divisible_p(Integer(lc * f[0]).get_mpz_t(), c0.get_mpz_t());
            if (ok) {
                IntPoly cand = IntPoly::constant(lc);
                for (std::size_t i : idx) cand = reduce_mod(cand * lifted[i], pk);
                cand = normalize(sym_mod(cand, pk));
                IntPoly quo;
                if (divides(cand, f, &quo)) {
                    found.push_back(cand);
                    f = quo;
                    std::vector<IntPoly> rest;
                    for (std::size_t i = 0, j = 0; i < r; ++i) {
                        if (j < s && idx[j] == i) {
                            ++j;
                            continue;
                        }
                        rest.push_back(lifted[i]);
                    }
                    lifted = std::move(rest);
                    progress = true;
                    break;
                }
            }
            // next combination
            std::size_t i = s;
            while (i > 0 && idx[i - 1] == r - s + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!progress) ++s;
    }
    if (f.degree() > 0) found.push_back(normalize(f));
    return found;
}

void sort_factors(std::vector<IntPoly>& v) { std::sort(v.begin(), v.end(), poly_less); }

} // namespace

std::vector<IntPoly> factor_squarefree(const IntPoly& f_in, int degree_cap) {
    IntPoly f = normalize(f_in);
    std::vector<IntPoly> out;
    if (f.degree() <= 0) return out;
    if (f[0] == 0) {
        out.push_back(IntPoly::x());
        IntPoly q = exact_div(f, IntPoly::x());
        auto rest = factor_squarefree(q, degree_cap);
        out.insert(out.end(), rest.begin(), rest.end());
        sort_factors(out);
        return out;
    }
    if (f.degree() == 1) return {f};
    if (f.degree() > degree_cap)
        throw UnsupportedDegree("factorization degree " + std::to_string(f.degree()) + " exceeds cap " +
                                std::to_string(degree_cap));
    PrimeChoice pc = choose_prime(f);
    if (pc.factors.size() == 1) return {f};
    const Integer bound = 2 * factor_bound(f) + 1;
    const Integer p(static_cast<unsigned long>(pc.field.p));
    int k = 1;
    Integer pk = p;
    while (pk <= bound) {
        pk *= p;
        ++k;
    }
    std::vector<IntPoly> lifted;
    hensel_multi(f, pc.factors, pc.field, k, lifted);
    out = recombine(f, std::move(lifted), pk);
    sort_factors(out);
    return out;
}

Factorization factor_rational(const IntPoly& p, int degree_cap) {
    if (p.is_zero()) throw DomainError("factorization of the zero polynomial");
    Factorization result;
    const IntPoly n = normalize(p);
    result.constant = Rational(p.lead()) / Rational(n.lead());
    for (const auto& [sq, mult] : squarefree_decomposition(n)) {
        for (auto& g : factor_squarefree(sq, degree_cap)) result.factors.emplace_back(std::move(g), mult);
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const auto& a, const auto& b) {
                  if (poly_less(a.first, b.first)) return true;
                  if (poly_less(b.first, a.first)) return false;
                  return a.second < b.second;
              });
    // p = constant * n and n = prod factors^mult exactly, since factors are primitive.
    return result;
}

bool is_irreducible(const IntPoly& p) {
    IntPoly n = normalize(p);
    if (n.degree() <= 0) return false;
    auto f = factor_rational(n);
    return f.factors.size() == 1 && f.factors[0].second == 1;
}

std::vector<IntPoly> irreducible_factors(const IntPoly& p, int degree_cap) {
    std::vector<IntPoly> out;
    for (auto& [g, m] : factor_rational(p, degree_cap).factors) out.push_back(g);
    return out;
}

} // namespace mahler
