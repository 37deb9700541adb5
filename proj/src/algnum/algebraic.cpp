#include "mahler/algnum/algebraic.hpp"

#include "mahler/error.hpp"
#include "mahler/polycore/cyclotomic.hpp"
#include "mahler/polycore/factor.hpp"
#include "mahler/polycore/resultant.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

namespace mahler {

namespace {

constexpr long kMaxBits = 8192;

// Root isolation memo keyed by polynomial and box width 2^-bits.
const std::vector<RootBox>& boxes_at(const IntPoly& p, long bits) {
    static std::mutex mu;
    static std::map<std::pair<std::string, long>, std::vector<RootBox>> memo;
    const auto key = std::make_pair(to_string(p), bits);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    auto boxes = isolate_roots(p, pow2(-bits));
    std::lock_guard<std::mutex> lock(mu);
    if (memo.size() > 20000) memo.clear();
    return memo.emplace(key, std::move(boxes)).first->second;
}

long bits_for(const Rational& width) {
    long b = 0;
    Rational t(1);
    while (t > width) {
        t /= 2;
        ++b;
    }
    return b;
}

RootBox meet(const RootBox& a, const RootBox& b) {
    RootBox r;
    r.re_lo = std::max(a.re_lo, b.re_lo);
    r.re_hi = std::min(a.re_hi, b.re_hi);
    r.im_lo = std::max(a.im_lo, b.im_lo);
    r.im_hi = std::min(a.im_hi, b.im_hi);
    r.multiplicity = 1;
    return r;
}

RootBox point_box(const Rational& q) {
    RootBox b;
    const Rational h = pow2(-64);
    b.re_lo = q - h;
    b.re_hi = q + h;
    b.im_lo = -h;
    b.im_hi = h;
    return b;
}

// Indices of boxes (of p at 2^-bits) meeting `region`.
std::vector<std::size_t> meeting(const IntPoly& p, long bits, const CInterval& region) {
    std::vector<std::size_t> r;
    const auto& boxes = boxes_at(p, bits);
    for (std::size_t i = 0; i < boxes.size(); ++i)
        if (boxes[i].region().intersects(region)) r.push_back(i);
    return r;
}

long magnitude_bits(const CInterval& z) {
    Rational m = std::max({Rational(abs(z.re.lo)), Rational(abs(z.re.hi)), Rational(abs(z.im.lo)), Rational(abs(z.im.hi)), Rational(1)});
    long b = 0;
    while (m > 1) {
        m /= 2;
        ++b;
    }
    return b;
}

} // namespace

AlgebraicNumber::AlgebraicNumber() : minpoly_(IntPoly::x()), box_(point_box(Rational(0))) {}

AlgebraicNumber::AlgebraicNumber(IntPoly minpoly, RootBox box) : minpoly_(normalize(minpoly)), box_(std::move(box)) {
    if (minpoly_.degree() < 1) throw DomainError("minimal polynomial must have positive degree");
    if (minpoly_.degree() == 1) box_ = point_box(rational_value());
}

AlgebraicNumber AlgebraicNumber::from_rational(const Rational& q) {
    IntPoly p{Integer(-q.get_num()), Integer(q.get_den())};
    return AlgebraicNumber(p, point_box(q));
}

Rational AlgebraicNumber::rational_value() const {
    if (!is_rational()) throw DomainError("not a rational number: " + to_string());
    Rational r(-minpoly_[0], minpoly_[1]);
    r.canonicalize();
    return r;
}

AlgebraicNumber AlgebraicNumber::root_in(const IntPoly& p, const CInterval& box) {
    return select_root(p, [&](long) { return box; });
}

AlgebraicNumber AlgebraicNumber::root_of(const IntPoly& p, std::size_t k) {
    const IntPoly sp = squarefree_part(p);
    const auto& boxes = boxes_at(sp, 60);
    if (k >= boxes.size()) throw DomainError("root index out of range for " + mahler::to_string(p));
    return root_in(sp, boxes[k].region());
}

AlgebraicNumber AlgebraicNumber::refined(const Rational& width) const {
    if (is_rational() || box_.width() <= width) return *this;
    for (long bits = bits_for(width); bits <= kMaxBits; bits += 16) {
        auto idx = meeting(minpoly_, bits, box_.region());
        if (idx.size() == 1) {
            AlgebraicNumber r = *this;
            r.box_ = meet(boxes_at(minpoly_, bits)[idx[0]], box_);
            return r;
        }
    }
    throw Undecided("refinement budget exhausted for " + to_string());
}

CInterval AlgebraicNumber::enclosure(long bits) const {
    if (is_rational()) return CInterval::point(rational_value());
    return refined(pow2(-bits)).box_.region();
}

double AlgebraicNumber::approx_re() const { return to_double(box_.re_mid()); }
double AlgebraicNumber::approx_im() const { return to_double(box_.im_mid()); }

std::string AlgebraicNumber::to_string() const {
    if (is_rational()) return mahler::to_string(rational_value());
    const auto& boxes = boxes_at(minpoly_, 60);
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        if (!boxes[i].intersects(box_)) continue;
        if (AlgebraicNumber(minpoly_, boxes[i]) == *this)
            return "root(" + mahler::to_string(minpoly_) + "," + std::to_string(i) + ")";
    }
    throw Error("could not locate root index");
}

bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (a.minpoly_ != b.minpoly_) return false;
    if (a.is_rational()) return true;
    for (long bits = 60; bits <= kMaxBits; bits += 16) {
        auto ia = meeting(a.minpoly_, bits, a.box_.region());
        auto ib = meeting(b.minpoly_, bits, b.box_.region());
        if (ia.size() == 1 && ib.size() == 1) return ia[0] == ib[0];
    }
    throw Undecided("equality test did not settle");
}

AlgebraicNumber select_root(const IntPoly& annihilator, const std::function<CInterval(long)>& enclosure) {
    if (annihilator.is_zero()) throw DomainError("zero annihilator");
    const auto factors = irreducible_factors(annihilator);
    if (factors.empty()) throw DomainError("constant annihilator");
    if (factors.size() == 1 && factors[0].degree() == 1) {
        Rational r(-factors[0][0], factors[0][1]);
        r.canonicalize();
        return AlgebraicNumber::from_rational(r);
    }
    for (long bits = 16; bits <= kMaxBits; bits = bits < 256 ? bits * 2 : bits + 128) {
        CInterval e;
        try {
            e = enclosure(bits);
        } catch (const DomainError&) {
            continue;
        }
        std::vector<std::pair<std::size_t, std::size_t>> hits;
        for (std::size_t f = 0; f < factors.size(); ++f) {
            if (factors[f].degree() == 1) {
                Rational r(-factors[f][0], factors[f][1]);
                if (e.re.contains(r) && e.im.contains(Rational(0))) hits.emplace_back(f, 0);
                continue;
            }
            for (std::size_t i : meeting(factors[f], bits, e)) hits.emplace_back(f, i);
        }
        if (hits.size() == 1) {
            const IntPoly& g = factors[hits[0].first];
            if (g.degree() == 1) {
                Rational r(-g[0], g[1]);
                r.canonicalize();
                return AlgebraicNumber::from_rational(r);
            }
            return AlgebraicNumber(g, boxes_at(g, bits)[hits[0].second]);
        }
        if (hits.empty()) throw Error("root selection: enclosure meets no root of " + to_string(annihilator));
    }
    throw Undecided("root selection did not settle for " + to_string(annihilator));
}

AlgebraicNumber mul(const AlgebraicNumber& x, const AlgebraicNumber& y) {
    if (x.is_rational() && y.is_rational()) return AlgebraicNumber::from_rational(x.rational_value() * y.rational_value());
    if (x.is_zero() || y.is_zero()) return AlgebraicNumber();
    if (x.is_rational() && x.rational_value() == 1) return y;
    if (y.is_rational() && y.rational_value() == 1) return x;
    const IntPoly ann = composed_product(x.minpoly(), y.minpoly());
    return select_root(ann, [&](long bits) {
        const CInterval a = x.enclosure(bits + 4), b = y.enclosure(bits + 4);
        const long extra = magnitude_bits(a) + magnitude_bits(b);
        const CInterval a2 = x.enclosure(bits + 4 + extra), b2 = y.enclosure(bits + 4 + extra);
        return (a2 * b2).rounded(bits + 8);
    });
}

AlgebraicNumber add(const AlgebraicNumber& x, const AlgebraicNumber& y) {
    if (x.is_rational() && y.is_rational()) return AlgebraicNumber::from_rational(x.rational_value() + y.rational_value());
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    const IntPoly ann = composed_sum(x.minpoly(), y.minpoly());
    return select_root(ann, [&](long bits) { return (x.enclosure(bits + 2) + y.enclosure(bits + 2)).rounded(bits + 8); });
}

AlgebraicNumber neg(const AlgebraicNumber& x) {
    if (x.is_rational()) return AlgebraicNumber::from_rational(-x.rational_value());
    RootBox b;
    b.re_lo = -x.box().re_hi;
    b.re_hi = -x.box().re_lo;
    b.im_lo = -x.box().im_hi;
    b.im_hi = -x.box().im_lo;
    return AlgebraicNumber(x.minpoly().negated_variable(), b);
}

AlgebraicNumber inv(const AlgebraicNumber& x) {
    if (x.is_zero()) throw DomainError("inverse of zero");
    if (x.is_rational()) return AlgebraicNumber::from_rational(1 / x.rational_value());
    const IntPoly ann = x.minpoly().reversed();
    return select_root(ann, [&](long bits) {
        const CInterval a = x.enclosure(bits);
        const Interval n2 = a.norm2();
        if (n2.lo <= 0) throw DomainError("enclosure meets zero");
        // |1/z| error ~ width / |z|^2
        long extra = 0;
        Rational t = n2.lo;
        while (t < 1) {
            t *= 2;
            ++extra;
        }
        return inverse(x.enclosure(bits + extra + 4)).rounded(bits + 8);
    });
}

AlgebraicNumber pow_int(const AlgebraicNumber& x, long n) {
    if (n == 0) return AlgebraicNumber::from_integer(1);
    if (n < 0) return inv(pow_int(x, -n));
    if (x.is_rational()) return AlgebraicNumber::from_rational(rpow(x.rational_value(), n));
    if (n == 1) return x;
    const unsigned long k = static_cast<unsigned long>(n);
    const IntPoly ann = power_poly(x.minpoly(), static_cast<unsigned>(k));
    return select_root(ann, [&](long bits) {
        const CInterval a = x.enclosure(bits);
        long extra = magnitude_bits(a) * static_cast<long>(k) + 2 * static_cast<long>(std::log2(static_cast<double>(k)) + 1);
        return pow(x.enclosure(bits + extra + 4), k).rounded(bits + 8);
    });
}

AlgebraicNumber product(const std::vector<AlgebraicNumber>& xs) {
    AlgebraicNumber acc = AlgebraicNumber::from_integer(1);
    for (const auto& x : xs) acc = mul(acc, x);
    return acc;
}

std::vector<AlgebraicNumber> conjugates(const AlgebraicNumber& x) {
    if (x.is_rational()) return {x};
    std::vector<AlgebraicNumber> out;
    for (const auto& b : boxes_at(x.minpoly(), 60)) out.emplace_back(x.minpoly(), b);
    return out;
}

bool is_torsion(const AlgebraicNumber& x) { return cyclotomic_index(x.minpoly()) != 0; }

std::pair<unsigned long, unsigned long> torsion_index(const AlgebraicNumber& x) {
    const unsigned long m = cyclotomic_index(x.minpoly());
    if (m == 0) throw DomainError("not a root of unity: " + x.to_string());
    if (m == 1) return {1, 0};
    const double pi = 3.14159265358979323846;
    const AlgebraicNumber r = x.refined(pow2(-40));
    double ang = std::atan2(r.approx_im(), r.approx_re());
    if (ang < 0) ang += 2 * pi;
    unsigned long best = 0;
    double best_d = 1e9;
    for (unsigned long k = 0; k < m; ++k) {
        if (std::gcd(k, m) != 1) continue;
        double d = std::fabs(ang - 2 * pi * static_cast<double>(k) / static_cast<double>(m));
        d = std::min(d, 2 * pi - d);
        if (d < best_d) {
            best_d = d;
            best = k;
        }
    }
    return {m, best};
}

AlgebraicNumber root_of_unity(unsigned long m, long j) {
    if (m == 0) throw DomainError("root of unity of order 0");
    long jj = j % static_cast<long>(m);
    if (jj < 0) jj += static_cast<long>(m);
    const unsigned long g = std::gcd(static_cast<unsigned long>(jj), m);
    const unsigned long order = m / g, idx = static_cast<unsigned long>(jj) / g;
    if (order == 1) return AlgebraicNumber::from_integer(1);
    if (order == 2) return AlgebraicNumber::from_integer(-1);
    const IntPoly phi = cyclotomic_poly(order);
    const double pi = 3.14159265358979323846;
    const double ang = 2 * pi * static_cast<double>(idx) / static_cast<double>(order);
    const double cx = std::cos(ang), cy = std::sin(ang);
    const auto& boxes = boxes_at(phi, 60);
    std::size_t best = 0;
    double best_d = 1e9;
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        const double dx = to_double(boxes[i].re_mid()) - cx, dy = to_double(boxes[i].im_mid()) - cy;
        const double d = dx * dx + dy * dy;
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    return AlgebraicNumber(phi, boxes[best]);
}

int compare_real_parts(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (a == b) return 0;
    for (long bits = 32; bits <= kMaxBits; bits += 64) {
        const CInterval ea = a.enclosure(bits), eb = b.enclosure(bits);
        if (ea.re.hi < eb.re.lo) return -1;
        if (eb.re.hi < ea.re.lo) return 1;
        if (a.is_rational() && b.is_rational()) break;
    }
    throw Undecided("real parts could not be separated");
}

} // namespace mahler
