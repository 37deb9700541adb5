#include "mahler/heights/places.hpp"

#include "mahler/error.hpp"
#include "mahler/heights/measure.hpp"
#include "unit_circle.hpp"

#include <map>

namespace mahler {

std::vector<std::pair<Rational, int>> newton_slopes(const IntPoly& f, const Integer& p) {
    struct Point {
        int i;
        long v;
    };
    std::vector<Point> hull;
    for (int i = 0; i <= f.degree(); ++i) {
        if (f[i] == 0) continue;
        const Point q{i, valuation(f[i], p)};
        // Pop while the last hull point lies on or above the chord to q.
        while (hull.size() >= 2) {
            const Point& a = hull[hull.size() - 2];
            const Point& b = hull.back();
            if ((b.v - a.v) * (q.i - b.i) < (q.v - b.v) * (b.i - a.i)) break;
            hull.pop_back();
        }
        hull.push_back(q);
    }
    std::vector<std::pair<Rational, int>> out;
    for (std::size_t k = hull.size(); k-- > 1;) {
        const Point& a = hull[k - 1];
        const Point& b = hull[k];
        Rational slope(b.v - a.v, b.i - a.i);
        slope.canonicalize();
        out.emplace_back(-slope, b.i - a.i);
    }
    return out;
}

PlaceDecomposition place_decomposition(const AlgebraicNumber& x, long bits) {
    if (x.is_zero()) throw DomainError("places of zero");
    const IntPoly& f = x.minpoly();
    PlaceDecomposition d;
    d.degree = f.degree();
    const long work = bits + detail::guard_bits(f);
    const auto boxes = isolate_roots(f, pow2(-work));
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        const RootBox& b = boxes[i];
        if (b.is_real()) {
            const Interval r{b.re_lo, b.re_hi};
            Interval m = r.lo >= 0 ? r : r.hi <= 0 ? -r : Interval(Rational(0), Rational(abs(r.lo) > abs(r.hi) ? abs(r.lo) : abs(r.hi)));
            d.archimedean.push_back({i, 1, m});
        } else if (b.im_sign() > 0) {
            d.archimedean.push_back({i, 2, sqrt_enclosure(b.region().norm2(), work)});
        }
    }
    std::map<Integer, bool> primes;
    for (const Integer& c : {f.lead(), f[0]})
        for (const auto& [p, e] : factor_integer(c)) primes[p] = true;
    for (const auto& [p, unused] : primes) {
        for (const auto& [v, count] : newton_slopes(f, p)) {
            if (v == 0) continue;
            d.nonarchimedean.push_back({p, v, count, -v * count / d.degree});
        }
    }
    return d;
}

bool product_formula_holds(const PlaceDecomposition& d) {
    // d * sum of finite exponents is an integer power of each prime.
    Rational finite = 1;
    for (const auto& g : d.nonarchimedean) {
        const Rational e = g.exponent * d.degree;
        if (e.get_den() != 1) return false;
        finite *= rpow(Rational(g.prime), e.get_num().get_si());
    }
    Interval arch = Interval::point(Rational(1));
    int count = 0;
    for (const auto& a : d.archimedean) {
        arch = arch * pow(a.modulus, static_cast<unsigned long>(a.local_degree));
        count += a.local_degree;
    }
    if (count != d.degree) return false;
    return arch.contains(1 / finite);
}

namespace {

Interval places_enclosure(const AlgebraicNumber& x, const Integer& finite, long bits) {
    const PlaceDecomposition d = place_decomposition(x, bits);
    Interval acc = Interval::point(Rational(finite));
    const long work = bits + detail::guard_bits(x.minpoly());
    for (const auto& a : d.archimedean)
        acc = (acc * pow(max_with(a.modulus, Rational(1)), static_cast<unsigned long>(a.local_degree))).rounded(work);
    return acc.rounded(bits + 8);
}

} // namespace

MeasureValue mahler_places(const AlgebraicNumber& x, long bits) {
    const PlaceDecomposition d = place_decomposition(x, bits);
    // prod over finite places of max(1, |x|_v)^deg: p to the total negative valuation of the roots.
    Integer finite = 1;
    for (const auto& g : d.nonarchimedean)
        if (g.valuation < 0) {
            const Rational e = -g.valuation * g.count;
            finite *= ipow(g.prime, e.get_num().get_ui());
        }
    std::optional<ExactPower> exact;
    const IntPoly& f = x.minpoly();
    switch (detail::unit_circle_side(f)) {
    case detail::CircleSide::inside:
    case detail::CircleSide::on_circle:
        exact = ExactPower::make(Rational(finite));
        break;
    case detail::CircleSide::outside:
        exact = ExactPower::make(Rational(finite) * Rational(abs(f[0]), abs(f.lead())));
        break;
    case detail::CircleSide::mixed:
        break;
    }
    return MeasureValue(places_enclosure(x, finite, bits), exact,
                        [x, finite](long b) { return places_enclosure(x, finite, b); });
}

} // namespace mahler
