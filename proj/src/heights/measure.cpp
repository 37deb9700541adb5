#include "mahler/heights/measure.hpp"

#include "mahler/error.hpp"
#include "mahler/polycore/factor.hpp"
#include "unit_circle.hpp"

#include <cmath>
#include <numeric>

namespace mahler {

namespace detail {

namespace {

long bit_length(const Integer& n) { return static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)); }

// h with f(x) = x^k h(x + 1/x) for a reciprocal f of degree 2k.
IntPoly trace_polynomial(const IntPoly& f) {
    const int k = f.degree() / 2;
    IntPoly prev = IntPoly::constant(Integer(2)), cur = IntPoly::x();
    IntPoly h = IntPoly::constant(f[k]);
    for (int j = 1; j <= k; ++j) {
        h += f[k + j] * cur;
        IntPoly next = IntPoly::x() * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return h;
}

bool all_roots_in_open_segment(const IntPoly& h) {
    for (long bits = 8; bits <= 4096; bits *= 2) {
        bool decided = true;
        for (const auto& b : isolate_roots(h, pow2(-bits))) {
            if (!b.is_real()) return false;
            if (b.re_hi <= -2 || b.re_lo >= 2) return false;
            if (b.re_lo <= -2 || b.re_hi >= 2) decided = false;
        }
        if (decided) return true;
    }
    throw Undecided("roots too close to the ends of [-2, 2]");
}

} // namespace

long guard_bits(const IntPoly& f) {
    Integer l1 = 0;
    for (const auto& c : f.coeffs()) l1 += abs(c);
    return 12 + 2 * bit_length(Integer(f.degree() + 1)) + bit_length(l1);
}

CircleSide unit_circle_side(const IntPoly& f) {
    if (f.degree() == 1) {
        const int c = cmp(abs(f[0]), abs(f[1]));
        return c < 0 ? CircleSide::inside : c > 0 ? CircleSide::outside : CircleSide::on_circle;
    }
    if (f == f.reversed()) return all_roots_in_open_segment(trace_polynomial(f)) ? CircleSide::on_circle : CircleSide::mixed;
    // Without the reciprocal symmetry no root lies on the circle, so refinement decides each root.
    for (long bits = 16; bits <= 8192; bits *= 2) {
        int inside = 0, outside = 0;
        const auto boxes = isolate_roots(f, pow2(-bits));
        for (const auto& b : boxes) {
            const Interval n = b.region().norm2();
            if (n.hi < 1)
                ++inside;
            else if (n.lo > 1)
                ++outside;
        }
        if (inside && outside) return CircleSide::mixed;
        if (inside + outside == static_cast<int>(boxes.size())) return inside ? CircleSide::inside : CircleSide::outside;
    }
    throw Undecided("roots too close to the unit circle");
}

} // namespace detail

// --- exact powers ---

ExactPower ExactPower::make(const Rational& base, const Rational& exponent) {
    if (base < 1 || exponent < 0) throw DomainError("exact power needs base >= 1 and exponent >= 0");
    if (base == 1 || exponent == 0) return ExactPower{};
    Rational b = base, e = exponent;
    const unsigned long top = mpz_sizeinbase(b.get_num_mpz_t(), 2);
    for (unsigned long k = top; k >= 2; --k) {
        if (auto r = exact_root(b, k)) {
            b = *r;
            e *= k;
            break;
        }
    }
    return ExactPower{b, e};
}

Rational ExactPower::rational_value() const {
    if (!is_rational()) throw DomainError("exact power is not rational");
    return rpow(base, exponent.get_num().get_si());
}

ExactPower ExactPower::pow(const Rational& e) const {
    if (e < 0) throw DomainError("negative power of a measure");
    return make(base, exponent * e);
}

Interval ExactPower::enclosure(long bits) const {
    if (is_one()) return Interval::point(Rational(1));
    const Interval p = mahler::pow(Interval::point(base), exponent.get_num().get_ui());
    if (exponent.get_den() == 1) return p;
    return root_enclosure(p, exponent.get_den().get_ui(), bits + 4);
}

std::string ExactPower::to_string() const {
    if (is_rational()) return rational_value().get_str();
    const std::string b = base.get_den() == 1 ? base.get_str() : "(" + base.get_str() + ")";
    return b + "^(" + exponent.get_str() + ")";
}

int compare(const ExactPower& a, const ExactPower& b) {
    if (a == b) return 0;
    if (a.base == b.base) return cmp(a.exponent, b.exponent);
    // Distinct canonical forms denote distinct values, so refinement terminates.
    for (long bits = 64;; bits *= 2) {
        const Interval x = a.enclosure(bits), y = b.enclosure(bits);
        if (x.hi < y.lo) return -1;
        if (y.hi < x.lo) return 1;
        if (bits > (1L << 22)) throw Undecided("exact powers too close to separate");
    }
}

ExactPower multiply(const ExactPower& a, const ExactPower& b) {
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    if (a.base == b.base) return ExactPower::make(a.base, a.exponent + b.exponent);
    if (a.exponent == b.exponent) return ExactPower::make(a.base * b.base, a.exponent);
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.exponent.get_den_mpz_t(), b.exponent.get_den_mpz_t());
    const Rational na = a.exponent * l, nb = b.exponent * l;
    return ExactPower::make(rpow(a.base, na.get_num().get_si()) * rpow(b.base, nb.get_num().get_si()), Rational(1, l));
}

// --- measure values ---

MeasureValue::MeasureValue(const ExactPower& e, long bits)
    : enclosure_(e.enclosure(bits)), exact_(e), refine_([e](long b) { return e.enclosure(b); }) {}

MeasureValue::MeasureValue(Interval enclosure, std::optional<ExactPower> exact, Refiner refine)
    : enclosure_(std::move(enclosure)), exact_(std::move(exact)), refine_(std::move(refine)) {
    if (enclosure_.lo < 1) enclosure_.lo = 1;
    if (exact_ && !enclosure_.intersects(exact_->enclosure(64)))
        throw Error("exact measure " + exact_->to_string() + " outside its enclosure");
}

MeasureValue MeasureValue::refined(long bits) const {
    MeasureValue r = *this;
    const Interval fresh = refine_(bits);
    r.enclosure_ = enclosure_.intersects(fresh) ? intersect(enclosure_, fresh) : fresh;
    if (r.enclosure_.lo < 1) r.enclosure_.lo = 1;
    return r;
}

double MeasureValue::approx() const { return to_double(enclosure_.mid()); }

std::string MeasureValue::to_string() const {
    if (exact_) return exact_->to_string();
    return "[" + to_decimal(enclosure_.lo, 12) + ", " + to_decimal(enclosure_.hi, 12, true) + "]";
}

int compare(const MeasureValue& a, const MeasureValue& b, long max_bits) {
    if (a.is_exact() && b.is_exact()) return compare(*a.exact(), *b.exact());
    for (long bits = 64; bits <= max_bits; bits *= 2) {
        const Interval x = a.refined(bits).enclosure(), y = b.refined(bits).enclosure();
        if (x.hi < y.lo) return -1;
        if (y.hi < x.lo) return 1;
    }
    throw Undecided("measures not separated at " + std::to_string(max_bits) + " bits");
}

MeasureValue operator*(const MeasureValue& a, const MeasureValue& b) {
    std::optional<ExactPower> e;
    if (a.is_exact() && b.is_exact()) e = multiply(*a.exact(), *b.exact());
    return MeasureValue(a.enclosure() * b.enclosure(), e, [a, b](long bits) {
        return a.refined(bits + 2).enclosure() * b.refined(bits + 2).enclosure();
    });
}

MeasureValue max(const MeasureValue& a, const MeasureValue& b) {
    if (a.is_exact() && b.is_exact()) return compare(*a.exact(), *b.exact()) >= 0 ? a : b;
    auto join = [](const Interval& x, const Interval& y) {
        return Interval(x.lo > y.lo ? x.lo : y.lo, x.hi > y.hi ? x.hi : y.hi);
    };
    return MeasureValue(join(a.enclosure(), b.enclosure()), std::nullopt, [a, b, join](long bits) {
        return join(a.refined(bits).enclosure(), b.refined(bits).enclosure());
    });
}

namespace {

Interval power_enclosure(const Interval& x, const Rational& e, long bits) {
    const Interval p = pow(x, e.get_num().get_ui());
    if (e.get_den() == 1) return p;
    return root_enclosure(p, e.get_den().get_ui(), bits + 4);
}

} // namespace

MeasureValue pow(const MeasureValue& v, const Rational& e) {
    if (e < 0) throw DomainError("negative power of a measure");
    if (e == 0) return MeasureValue();
    std::optional<ExactPower> x;
    if (v.is_exact()) x = v.exact()->pow(e);
    const long extra = 4 + static_cast<long>(mpz_sizeinbase(e.get_num_mpz_t(), 2));
    return MeasureValue(power_enclosure(v.enclosure(), e, kDefaultBits), x, [v, e, extra](long bits) {
        return power_enclosure(v.refined(bits + extra).enclosure(), e, bits);
    });
}

// --- measures of numbers ---

namespace {

// |lc| * prod max(1, |z|)^mult over the roots of p.
Interval roots_enclosure(const IntPoly& p, long bits) {
    const long work = bits + detail::guard_bits(p);
    Interval acc = Interval::point(Rational(p.lead() * p.lead()));
    for (const auto& b : isolate_roots(p, pow2(-work))) {
        const Interval m = max_with(b.region().norm2(), Rational(1));
        acc = (acc * pow(m, static_cast<unsigned long>(b.multiplicity))).rounded(work);
    }
    return sqrt_enclosure(acc, bits + 8);
}

std::optional<Rational> exact_measure(const IntPoly& f) {
    switch (detail::unit_circle_side(f)) {
    case detail::CircleSide::inside:
    case detail::CircleSide::on_circle:
        return Rational(abs(f.lead()));
    case detail::CircleSide::outside:
        return Rational(abs(f[0]));
    case detail::CircleSide::mixed:
        break;
    }
    return std::nullopt;
}

} // namespace

MeasureValue mahler_roots(const AlgebraicNumber& x, long bits) {
    if (x.is_zero()) throw DomainError("Mahler measure of zero");
    const IntPoly f = x.minpoly();
    std::optional<ExactPower> e;
    if (auto m = exact_measure(f)) e = ExactPower::make(*m);
    return MeasureValue(roots_enclosure(f, bits), e, [f](long b) { return roots_enclosure(f, b); });
}

MeasureValue weil_height(const AlgebraicNumber& x, long bits) {
    return pow(mahler_roots(x, bits), Rational(1, x.degree()));
}

MeasureValue mahler_poly(const IntPoly& p, long bits) {
    if (p.is_zero()) throw DomainError("Mahler measure of the zero polynomial");
    const Factorization fac = factor_rational(p);
    std::optional<Rational> exact = abs(fac.constant);
    for (const auto& [f, m] : fac.factors) {
        if (!exact) break;
        if (auto v = exact_measure(f))
            *exact *= rpow(*v, m);
        else
            exact.reset();
    }
    std::optional<ExactPower> e;
    if (exact) e = ExactPower::make(*exact);
    return MeasureValue(roots_enclosure(p, bits), e, [p](long b) { return roots_enclosure(p, b); });
}

ExactPower height_of_surd(const SurdExpr& s) {
    const SurdExpr c = canonical(s);
    if (c.base == 1) return ExactPower{};
    return ExactPower::make(Rational(rational_height(c.base)), abs(c.exponent));
}

MeasureValue measure_of_surd(const SurdExpr& s) {
    const ExactPower h = height_of_surd(s);
    if (h.is_one()) return MeasureValue();
    return MeasureValue(h.pow(from_surd(s).degree()));
}

} // namespace mahler
