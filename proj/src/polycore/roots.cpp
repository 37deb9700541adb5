#include "mahler/polycore/roots.hpp"

#include "bigfloat.hpp"
#include "mahler/error.hpp"

#include <algorithm>
#include <cmath>

namespace mahler {

using detail::BigFloat;

Rational RootBox::width() const { return std::max(re_hi - re_lo, im_hi - im_lo); }

int RootBox::im_sign() const {
    if (is_real()) return 0;
    if (im_lo > 0) return 1;
    if (im_hi < 0) return -1;
    throw DomainError("root box straddles the real axis without being symmetric");
}

Rational default_precision() { return pow2(-60); }

namespace {

struct Cx {
    BigFloat re, im;
    explicit Cx(mpfr_prec_t p) : re(p), im(p) {}
};

// Scratch registers for complex arithmetic at a fixed precision.
class Arith {
public:
    explicit Arith(mpfr_prec_t p) : p_(p), a_(p), b_(p), c_(p), d_(p) {}

    // r = x * y; r must not alias x or y.
    void mul(Cx& r, const Cx& x, const Cx& y) {
        mpfr_mul(a_.get(), x.re.get(), y.re.get(), MPFR_RNDN);
        mpfr_mul(b_.get(), x.im.get(), y.im.get(), MPFR_RNDN);
        mpfr_sub(r.re.get(), a_.get(), b_.get(), MPFR_RNDN);
        mpfr_mul(a_.get(), x.re.get(), y.im.get(), MPFR_RNDN);
        mpfr_mul(b_.get(), x.im.get(), y.re.get(), MPFR_RNDN);
        mpfr_add(r.im.get(), a_.get(), b_.get(), MPFR_RNDN);
    }
    // r = x / y; r must not alias x or y. Returns false when y is zero.
    bool div(Cx& r, const Cx& x, const Cx& y) {
        mpfr_sqr(c_.get(), y.re.get(), MPFR_RNDN);
        mpfr_sqr(d_.get(), y.im.get(), MPFR_RNDN);
        mpfr_add(c_.get(), c_.get(), d_.get(), MPFR_RNDN);
        if (mpfr_zero_p(c_.get())) return false;
        mpfr_mul(a_.get(), x.re.get(), y.re.get(), MPFR_RNDN);
        mpfr_mul(b_.get(), x.im.get(), y.im.get(), MPFR_RNDN);
        mpfr_add(a_.get(), a_.get(), b_.get(), MPFR_RNDN);
        mpfr_mul(b_.get(), x.im.get(), y.re.get(), MPFR_RNDN);
        mpfr_mul(d_.get(), x.re.get(), y.im.get(), MPFR_RNDN);
        mpfr_sub(b_.get(), b_.get(), d_.get(), MPFR_RNDN);
        mpfr_div(r.re.get(), a_.get(), c_.get(), MPFR_RNDN);
        mpfr_div(r.im.get(), b_.get(), c_.get(), MPFR_RNDN);
        return true;
    }
    void abs2(BigFloat& r, const Cx& x) {
        mpfr_sqr(a_.get(), x.re.get(), MPFR_RNDN);
        mpfr_sqr(b_.get(), x.im.get(), MPFR_RNDN);
        mpfr_add(r.get(), a_.get(), b_.get(), MPFR_RNDN);
    }
    mpfr_prec_t prec() const { return p_; }

private:
    mpfr_prec_t p_;
    BigFloat a_, b_, c_, d_;
};

Cx convert(const Cx& z, mpfr_prec_t p) {
    Cx r(p);
    mpfr_set(r.re.get(), z.re.get(), MPFR_RNDN);
    mpfr_set(r.im.get(), z.im.get(), MPFR_RNDN);
    return r;
}

// Aberth iteration on the roots z of the squarefree polynomial f. Returns true when the
// corrections dropped below the working precision.
bool aberth(const IntPoly& f, std::vector<Cx>& z, mpfr_prec_t prec, int max_iter) {
    const int n = f.degree();
    Arith ar(prec);
    std::vector<BigFloat> coef;
    for (int k = 0; k <= n; ++k) {
        coef.emplace_back(prec);
        coef.back().set(f[k]);
    }
    Cx pv(prec), dv(prec), t(prec), ratio(prec), sum(prec), diff(prec), inv(prec), w(prec), one(prec);
    one.re.set(1.0);
    BigFloat m2(prec), w2(prec), eps2(prec);
    mpfr_set_ui_2exp(eps2.get(), 1, -2 * (prec - 6), MPFR_RNDN);
    std::vector<bool> done(static_cast<std::size_t>(n), false);
    for (int it = 0; it < max_iter; ++it) {
        bool all_done = true;
        for (int i = 0; i < n; ++i) {
            if (done[static_cast<std::size_t>(i)]) continue;
            Cx& zi = z[static_cast<std::size_t>(i)];
            // Horner for f and f'
            mpfr_set(pv.re.get(), coef[static_cast<std::size_t>(n)].get(), MPFR_RNDN);
            mpfr_set_zero(pv.im.get(), 1);
            mpfr_set_zero(dv.re.get(), 1);
            mpfr_set_zero(dv.im.get(), 1);
            for (int k = n - 1; k >= 0; --k) {
                ar.mul(t, dv, zi);
                mpfr_add(dv.re.get(), t.re.get(), pv.re.get(), MPFR_RNDN);
                mpfr_add(dv.im.get(), t.im.get(), pv.im.get(), MPFR_RNDN);
                ar.mul(t, pv, zi);
                mpfr_add(pv.re.get(), t.re.get(), coef[static_cast<std::size_t>(k)].get(), MPFR_RNDN);
                mpfr_set(pv.im.get(), t.im.get(), MPFR_RNDN);
            }
            if (mpfr_zero_p(pv.re.get()) && mpfr_zero_p(pv.im.get())) {
                done[static_cast<std::size_t>(i)] = true;
                continue;
            }
            if (!ar.div(ratio, pv, dv)) {
                // stationary point: nudge and retry next sweep
                mpfr_mul_d(zi.re.get(), zi.re.get(), 1.0009765625, MPFR_RNDN);
                mpfr_add_d(zi.im.get(), zi.im.get(), 1e-3, MPFR_RNDN);
                all_done = false;
                continue;
            }
            mpfr_set_zero(sum.re.get(), 1);
            mpfr_set_zero(sum.im.get(), 1);
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                const Cx& zj = z[static_cast<std::size_t>(j)];
                mpfr_sub(diff.re.get(), zi.re.get(), zj.re.get(), MPFR_RNDN);
                mpfr_sub(diff.im.get(), zi.im.get(), zj.im.get(), MPFR_RNDN);
                if (!ar.div(inv, one, diff)) continue;
                mpfr_add(sum.re.get(), sum.re.get(), inv.re.get(), MPFR_RNDN);
                mpfr_add(sum.im.get(), sum.im.get(), inv.im.get(), MPFR_RNDN);
            }
            // w = ratio / (1 - ratio * sum)
            ar.mul(t, ratio, sum);
            mpfr_ui_sub(t.re.get(), 1, t.re.get(), MPFR_RNDN);
            mpfr_neg(t.im.get(), t.im.get(), MPFR_RNDN);
            if (!ar.div(w, ratio, t)) {
                mpfr_set(w.re.get(), ratio.re.get(), MPFR_RNDN);
                mpfr_set(w.im.get(), ratio.im.get(), MPFR_RNDN);
            }
            mpfr_sub(zi.re.get(), zi.re.get(), w.re.get(), MPFR_RNDN);
            mpfr_sub(zi.im.get(), zi.im.get(), w.im.get(), MPFR_RNDN);
            ar.abs2(w2, w);
            ar.abs2(m2, zi);
            if (mpfr_cmp_ui_2exp(m2.get(), 1, -2 * prec) < 0) mpfr_set_ui_2exp(m2.get(), 1, -2 * prec, MPFR_RNDN);
            mpfr_mul(m2.get(), m2.get(), eps2.get(), MPFR_RNDN);
            if (mpfr_cmp(w2.get(), m2.get()) <= 0)
                done[static_cast<std::size_t>(i)] = true;
            else
                all_done = false;
        }
        if (all_done) return true;
    }
    return false;
}

std::vector<Cx> initial_points(const IntPoly& f, mpfr_prec_t prec) {
    const int n = f.degree();
    int k = 0;
    while (f[k] == 0) ++k;
    double radius = 1.0;
    if (k < n) {
        const double lq = std::log(std::fabs(to_double(Rational(f[k])))) - std::log(std::fabs(to_double(Rational(f.lead()))));
        radius = std::exp(lq / (n - k));
    }
    if (!(radius > 1e-300 && radius < 1e300)) radius = 1.0;
    std::vector<Cx> z;
    const double pi = 3.14159265358979323846;
    for (int i = 0; i < n; ++i) {
        Cx c(prec);
        const double ang = 2 * pi * i / n + 0.4;
        c.re.set(radius * std::cos(ang));
        c.im.set(radius * std::sin(ang));
        z.push_back(std::move(c));
    }
    return z;
}

// Integer form of an approximation on the grid 2^-E.
struct GridPoint {
    Integer x, y;
};

Integer to_grid(const BigFloat& v, long e) {
    Rational q = v.exact() * pow2(e);
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    // round to nearest
    if (Rational(r) + Rational(1, 2) < q) r += 1;
    return r;
}

// Certifies approximations; returns the boxes or nothing on failure.
bool certify(const IntPoly& f, const std::vector<Cx>& z, const Rational& precision, long e, std::vector<RootBox>& out) {
    const int n = f.degree();
    std::vector<GridPoint> g;
    g.reserve(z.size());
    for (const auto& c : z) g.push_back({to_grid(c.re, e), to_grid(c.im, e)});

    // Snap nearly real points and mirror conjugate pairs.
    const long snap_bits = e / 2;
    std::vector<int> kind(g.size()); // 0 real, 1 upper, -1 lower
    for (std::size_t i = 0; i < g.size(); ++i) {
        Integer mag = abs(g[i].x) + abs(g[i].y);
        Integer scale = mag > ipow(Integer(2), static_cast<unsigned long>(e)) ? mag : ipow(Integer(2), static_cast<unsigned long>(e));
        // |y| <= 2^-snap_bits * max(1, |z|) in grid units
        Integer lim = scale >> static_cast<mp_bitcnt_t>(snap_bits);
        if (abs(g[i].y) <= lim) {
            g[i].y = 0;
            kind[i] = 0;
        } else {
            kind[i] = g[i].y > 0 ? 1 : -1;
        }
    }
    std::vector<bool> used(g.size(), false);
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (kind[i] != 1) continue;
        std::size_t best = g.size();
        Integer best_d;
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (kind[j] != -1 || used[j]) continue;
            Integer dx = g[j].x - g[i].x, dy = g[j].y + g[i].y;
            Integer d = dx * dx + dy * dy;
            if (best == g.size() || d < best_d) {
                best = j;
                best_d = d;
            }
        }
        if (best == g.size()) return false;
        used[best] = true;
        g[best].x = g[i].x;
        g[best].y = -g[i].y;
    }
    for (std::size_t j = 0; j < g.size(); ++j)
        if (kind[j] == -1 && !used[j]) return false;

    // Weierstrass corrections: r_i^2 = n^2 |acc_i|^2 / (lc^2 4^E prod_j |d_ij|^2).
    const Integer two_e = ipow(Integer(2), static_cast<unsigned long>(e));
    std::vector<Integer> shifted(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        shifted[static_cast<std::size_t>(k)] = f[k] * ipow(two_e, static_cast<unsigned long>(n - k));
    std::vector<Rational> rho(g.size());
    const Rational half_prec = precision / 2;
    const Rational floor_rad = pow2(-e);
    for (std::size_t i = 0; i < g.size(); ++i) {
        Integer ar = shifted[static_cast<std::size_t>(n)], ai = 0;
        for (int k = n - 1; k >= 0; --k) {
            Integer nr = ar * g[i].x - ai * g[i].y + shifted[static_cast<std::size_t>(k)];
            Integer ni = ar * g[i].y + ai * g[i].x;
            ar = std::move(nr);
            ai = std::move(ni);
        }
        Integer den = f.lead() * f.lead() * two_e * two_e;
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (j == i) continue;
            Integer dx = g[i].x - g[j].x, dy = g[i].y - g[j].y;
            Integer d = dx * dx + dy * dy;
            if (d == 0) return false;
            den *= d;
        }
        Rational r2(Integer(n) * n * (ar * ar + ai * ai), den);
        r2.canonicalize();
        // strictly larger than the inclusion radius, so the root is interior
        Rational r = root_upper(r2, 2, e + 4) + floor_rad;
        if (r > half_prec) return false;
        rho[i] = r;
    }
    const Rational unit = pow2(-e);
    std::vector<RootBox> boxes;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Rational cx = Rational(g[i].x) * unit, cy = Rational(g[i].y) * unit;
        RootBox b;
        b.re_lo = cx - rho[i];
        b.re_hi = cx + rho[i];
        b.im_lo = cy - rho[i];
        b.im_hi = cy + rho[i];
        boxes.push_back(std::move(b));
    }
    for (std::size_t i = 0; i < boxes.size(); ++i)
        for (std::size_t j = i + 1; j < boxes.size(); ++j)
            if (boxes[i].intersects(boxes[j])) return false;
    // Mirror boxes of conjugate pairs are exact mirror images by construction; a box centred on
    // the axis must not touch a non-real neighbour, which disjointness already ensures.
    out = std::move(boxes);
    return true;
}

long precision_bits(const Rational& precision) {
    // smallest b with 2^-b <= precision
    long b = 0;
    Rational t(1);
    while (t > precision) {
        t /= 2;
        ++b;
    }
    return b;
}

std::vector<RootBox> isolate_squarefree(const IntPoly& f, const Rational& precision) {
    const int n = f.degree();
    std::vector<RootBox> out;
    if (n <= 0) return out;
    if (n == 1) {
        const Rational r(-f[0], f[1]);
        const Rational h = precision / 2;
        RootBox b;
        b.re_lo = r - h;
        b.re_hi = r + h;
        b.im_lo = -h;
        b.im_hi = h;
        out.push_back(std::move(b));
        return out;
    }
    const long pbits = precision_bits(precision);
    long logn = 1;
    while ((1L << logn) < n) ++logn;
    std::vector<Cx> z = initial_points(f, 64);
    aberth(f, z, 64, 400 + 20 * n);
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(std::max<long>(96, pbits + 3 * logn + 40));
    for (int attempt = 0; attempt < 14; ++attempt) {
        std::vector<Cx> zz;
        for (const auto& c : z) zz.push_back(convert(c, prec));
        const bool converged = aberth(f, zz, prec, attempt == 0 ? 200 + 10 * n : 400 + 20 * n);
        z = std::move(zz);
        if (converged && certify(f, z, precision, static_cast<long>(prec) - 2, out)) return out;
        if (!converged && attempt > 3) {
            // restart from scratch at higher precision
            z = initial_points(f, prec);
        }
        prec *= 2;
    }
    throw Error("root isolation failed to converge for " + to_string(f));
}

bool center_less(const RootBox& a, const RootBox& b) {
    const Rational ar = a.re_mid(), br = b.re_mid();
    if (ar != br) return ar < br;
    return a.im_mid() < b.im_mid();
}

} // namespace

std::vector<RootBox> isolate_roots(const IntPoly& p, const Rational& precision) {
    if (p.is_zero()) throw DomainError("root isolation of the zero polynomial");
    if (precision <= 0) throw DomainError("root isolation precision must be positive");
    const auto parts = squarefree_decomposition(p);
    Rational prec = precision;
    for (int round = 0; round < 64; ++round) {
        std::vector<RootBox> all;
        for (const auto& [f, mult] : parts) {
            for (auto& b : isolate_squarefree(f, prec)) {
                b.multiplicity = mult;
                all.push_back(std::move(b));
            }
        }
        bool disjoint = true;
        for (std::size_t i = 0; i < all.size() && disjoint; ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j)
                if (all[i].intersects(all[j])) {
                    disjoint = false;
                    break;
                }
        if (disjoint) {
            std::sort(all.begin(), all.end(), center_less);
            return all;
        }
        prec /= 16;
    }
    throw Error("could not separate roots of " + to_string(p));
}

} // namespace mahler
