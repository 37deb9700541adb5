#include "mahler/algnum/field.hpp"

#include "mahler/error.hpp"
#include "mahler/polycore/factor.hpp"
#include "mahler/polycore/resultant.hpp"

#include <algorithm>

namespace mahler {

struct NumberField::Data {
    AlgebraicNumber gen;
    RatPoly modulus;
    int degree;
};

NumberField::NumberField()
    : d_(std::make_shared<const Data>(Data{AlgebraicNumber(), RatPoly::x(), 1})) {}

NumberField::NumberField(const AlgebraicNumber& generator)
    : d_(std::make_shared<const Data>(Data{generator, monic(to_rat(generator.minpoly())), generator.degree()})) {}

int NumberField::degree() const { return d_->degree; }
const AlgebraicNumber& NumberField::generator() const { return d_->gen; }
const RatPoly& NumberField::modulus() const { return d_->modulus; }

FieldElement NumberField::zero() const { return FieldElement(*this, RatPoly()); }
FieldElement NumberField::one() const { return from_rational(Rational(1)); }
FieldElement NumberField::from_rational(const Rational& q) const { return FieldElement(*this, RatPoly::constant(q)); }
FieldElement NumberField::gen() const { return element(RatPoly::x()); }
FieldElement NumberField::element(const RatPoly& p) const { return FieldElement(*this, rem(p, modulus())); }

FieldElement::FieldElement(NumberField field, RatPoly coords) : field_(std::move(field)), c_(std::move(coords)) {
    if (c_.degree() >= field_.degree()) c_ = rem(c_, field_.modulus());
}

Rational FieldElement::rational_value() const {
    if (!is_rational()) throw DomainError("field element is not rational");
    return c_[0];
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) { return FieldElement(a.field_, a.c_ + b.c_); }
FieldElement operator-(const FieldElement& a, const FieldElement& b) { return FieldElement(a.field_, a.c_ - b.c_); }
FieldElement operator-(const FieldElement& a) { return FieldElement(a.field_, -a.c_); }
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    if (a.field_ != b.field_) throw DomainError("field elements from different fields");
    return FieldElement(a.field_, rem(a.c_ * b.c_, a.field_.modulus()));
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero field element");
    if (is_rational()) return field_.from_rational(1 / c_[0]);
    const XGcd g = xgcd(c_, field_.modulus());
    return FieldElement(field_, g.s);
}

FieldElement FieldElement::pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    FieldElement r = field_.one(), b = *this;
    while (n) {
        if (n & 1) r = r * b;
        n >>= 1;
        if (n) b = b * b;
    }
    return r;
}

IntPoly FieldElement::minpoly() const {
    if (is_rational()) {
        const Rational q = c_[0];
        return normalize(IntPoly{Integer(-q.get_num()), Integer(q.get_den())});
    }
    const RatPoly a = c_;
    auto g_at = [&](const Rational& t) { return RatPoly::constant(t) - a; };
    const IntPoly charpoly = primitive_from(interpolate_resultant(field_.modulus(), g_at, field_.degree()));
    return squarefree_part(charpoly);
}

namespace {

long coefficient_bits(const RatPoly& p) {
    long b = 0;
    for (const auto& c : p.coeffs()) {
        b = std::max<long>(b, static_cast<long>(mpz_sizeinbase(c.get_num_mpz_t(), 2)));
        b = std::max<long>(b, static_cast<long>(mpz_sizeinbase(c.get_den_mpz_t(), 2)));
    }
    return b;
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

CInterval horner(const RatPoly& p, const CInterval& z, long bits) {
    CInterval acc = CInterval::point(p[p.degree()]);
    for (int i = p.degree() - 1; i >= 0; --i) acc = (acc * z + CInterval::point(p[i])).rounded(bits);
    return acc;
}

} // namespace

CInterval FieldElement::enclosure(long bits) const {
    if (is_rational()) return CInterval::point(c_[0]);
    const AlgebraicNumber& g = field_.generator();
    const long mag = magnitude_bits(g.enclosure(8));
    const long extra = c_.degree() * (mag + 2) + coefficient_bits(c_) + 8;
    return horner(c_, g.enclosure(bits + extra), bits + extra).rounded(bits + 4);
}

AlgebraicNumber FieldElement::value() const {
    if (is_rational()) return AlgebraicNumber::from_rational(c_[0]);
    return select_root(minpoly(), [this](long bits) { return enclosure(bits); });
}

std::string FieldElement::to_string() const {
    std::string s = mahler::to_string(c_);
    std::replace(s.begin(), s.end(), 'x', 't');
    return s;
}

// --- polynomials over a field ---

FieldPoly::FieldPoly(NumberField field, std::vector<FieldElement> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldPoly FieldPoly::from_int(const IntPoly& p, const NumberField& field) {
    std::vector<FieldElement> c;
    for (const auto& a : p.coeffs()) c.push_back(field.from_rational(Rational(a)));
    return FieldPoly(field, std::move(c));
}

FieldPoly FieldPoly::monic() const {
    if (is_zero()) return *this;
    const FieldElement inv = lead().inverse();
    std::vector<FieldElement> c;
    for (const auto& a : c_) c.push_back(a * inv);
    return FieldPoly(field_, std::move(c));
}

FieldPoly operator*(const FieldPoly& a, const FieldPoly& b) {
    if (a.is_zero() || b.is_zero()) return FieldPoly(a.field_, {});
    std::vector<FieldElement> r(a.c_.size() + b.c_.size() - 1, a.field_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    return FieldPoly(a.field_, std::move(r));
}

bool operator==(const FieldPoly& a, const FieldPoly& b) { return a.c_ == b.c_; }

CInterval FieldPoly::eval_enclosure(const CInterval& z, long bits) const {
    if (is_zero()) return CInterval::point(Rational(0));
    const long mag = magnitude_bits(z);
    const long work = bits + degree() * (mag + 2) + 8;
    CInterval acc = lead().enclosure(work);
    for (int i = degree() - 1; i >= 0; --i)
        acc = (acc * z + c_[static_cast<std::size_t>(i)].enclosure(work)).rounded(work);
    return acc;
}

std::string FieldPoly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        const auto& c = c_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + c.to_string() + ")";
        if (i > 0) s += "*x" + (i > 1 ? "^" + std::to_string(i) : std::string());
    }
    return s;
}

namespace {

FieldPoly kpoly(const NumberField& K, std::vector<FieldElement> c) { return FieldPoly(K, std::move(c)); }

FieldPoly sub(const FieldPoly& a, const FieldPoly& b) {
    std::vector<FieldElement> r(std::max(a.coeffs().size(), b.coeffs().size()), a.field().zero());
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.coeffs().size(); ++i) r[i] = r[i] - b[i];
    return kpoly(a.field(), std::move(r));
}

std::pair<FieldPoly, FieldPoly> divmod(const FieldPoly& a, const FieldPoly& b) {
    if (b.is_zero()) throw DomainError("division by zero polynomial over a field");
    const NumberField& K = a.field();
    if (a.degree() < b.degree()) return {kpoly(K, {}), a};
    std::vector<FieldElement> r(a.coeffs());
    std::vector<FieldElement> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), K.zero());
    const FieldElement inv = b.lead().inverse();
    const int db = b.degree();
    for (int i = a.degree(); i >= db; --i) {
        const FieldElement t = r[static_cast<std::size_t>(i)] * inv;
        if (t.is_zero()) continue;
        q[static_cast<std::size_t>(i - db)] = t;
        for (int j = 0; j <= db; ++j) {
            auto& slot = r[static_cast<std::size_t>(i - db + j)];
            slot = slot - t * b[static_cast<std::size_t>(j)];
        }
    }
    r.resize(static_cast<std::size_t>(db), K.zero());
    return {kpoly(K, std::move(q)), kpoly(K, std::move(r))};
}

FieldPoly gcd(FieldPoly a, FieldPoly b) {
    while (!b.is_zero()) {
        FieldPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// p(x + a)
FieldPoly shift(const FieldPoly& p, const FieldElement& a) {
    const NumberField& K = p.field();
    const FieldPoly lin = kpoly(K, {a, K.one()});
    FieldPoly acc = kpoly(K, {});
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * lin;
        std::vector<FieldElement> c(acc.coeffs());
        if (c.empty()) c.push_back(K.zero());
        c[0] = c[0] + p[static_cast<std::size_t>(i)];
        acc = kpoly(K, std::move(c));
    }
    return acc;
}

// Norm from K to Q: prod over embeddings of the conjugated polynomial.
RatPoly norm(const FieldPoly& p) {
    const NumberField& K = p.field();
    if (K.is_rationals()) {
        std::vector<Rational> c;
        for (const auto& a : p.coeffs()) c.push_back(a.rational_value());
        return RatPoly(std::move(c));
    }
    const int n = K.degree();
    const int total = n * p.degree();
    std::vector<Rational> xs, ys;
    for (int j = 0; j <= total; ++j) {
        const Rational x0(j - total / 2);
        RatPoly h;
        Rational xk = 1;
        for (const auto& c : p.coeffs()) {
            h = h + xk * c.coords();
            xk *= x0;
        }
        xs.push_back(x0);
        ys.push_back(h.is_zero() ? Rational(0) : resultant(K.modulus(), h));
    }
    return interpolate(xs, ys);
}

std::vector<FieldPoly> sorted_by_degree(std::vector<FieldPoly> v) {
    std::stable_sort(v.begin(), v.end(), [](const FieldPoly& a, const FieldPoly& b) { return a.degree() < b.degree(); });
    return v;
}

} // namespace

std::vector<FieldPoly> factor_squarefree_over_field(const FieldPoly& p_in, int cap) {
    const NumberField& K = p_in.field();
    if (p_in.is_zero()) throw DomainError("factorization of the zero polynomial");
    if (K.degree() > cap)
        throw UnsupportedDegree("field degree " + std::to_string(K.degree()) + " exceeds cap " + std::to_string(cap));
    const FieldPoly p = p_in.monic();
    if (p.degree() <= 1) return p.degree() == 1 ? std::vector<FieldPoly>{p} : std::vector<FieldPoly>{};
    const int factor_cap = std::max(kDefaultFactorDegreeCap, K.degree() * p.degree());
    if (K.is_rationals()) {
        std::vector<FieldPoly> out;
        for (const auto& g : factor_squarefree(primitive_from(norm(p)), factor_cap))
            out.push_back(FieldPoly::from_int(g, K).monic());
        return out;
    }
    const FieldElement theta = K.gen();
    for (long s = 0; s <= 60; s = s > 0 ? -s : 1 - s) {
        const FieldElement shift_by = K.from_rational(Rational(s)) * theta;
        const FieldPoly g = shift(p, -shift_by); // p(x - s theta)
        const IntPoly n = primitive_from(norm(g));
        if (!is_squarefree(n)) continue;
        const auto qf = factor_squarefree(n, factor_cap);
        if (qf.size() == 1) return {p};
        std::vector<FieldPoly> out;
        int total = 0;
        for (const auto& f : qf) {
            const FieldPoly h = shift(FieldPoly::from_int(f, K), shift_by); // f(x + s theta)
            FieldPoly d = gcd(p, h);
            if (d.degree() <= 0) continue;
            total += d.degree();
            out.push_back(std::move(d));
        }
        if (total != p.degree()) throw Error("factorization over number field lost degree");
        return sorted_by_degree(std::move(out));
    }
    throw Error("no squarefree norm found while factoring over a number field");
}

std::vector<std::pair<FieldPoly, int>> factor_over_field(const IntPoly& p, const NumberField& K, int cap) {
    if (p.is_zero()) throw DomainError("factorization of the zero polynomial");
    std::vector<std::pair<FieldPoly, int>> out;
    for (const auto& [f, m] : squarefree_decomposition(p))
        for (auto& g : factor_squarefree_over_field(FieldPoly::from_int(f, K), cap)) out.emplace_back(std::move(g), m);
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first.degree() < b.first.degree(); });
    return out;
}

std::optional<FieldElement> field_member(const NumberField& K, const AlgebraicNumber& y) {
    if (y.is_rational()) return K.from_rational(y.rational_value());
    if (K.degree() % y.degree() != 0) return std::nullopt;
    if (y.minpoly() == K.generator().minpoly() && y == K.generator()) return K.gen();
    for (const auto& [f, m] : factor_over_field(y.minpoly(), K)) {
        if (f.degree() != 1) continue;
        const FieldElement c = -f[0];
        if (c.value() == y) return c;
    }
    return std::nullopt;
}

bool is_galois(const NumberField& K) {
    if (K.is_rationals()) return true;
    for (const auto& [f, m] : factor_over_field(K.generator().minpoly(), K))
        if (f.degree() != 1) return false;
    return true;
}

std::vector<Rational> solve_linear(std::vector<Rational> a, std::vector<Rational> b, std::size_t n) {
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv * n + col] == 0) ++piv;
        if (piv == n) throw DomainError("singular linear system");
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[col * n + j]);
            std::swap(b[piv], b[col]);
        }
        const Rational inv = 1 / a[col * n + col];
        for (std::size_t j = col; j < n; ++j) a[col * n + j] *= inv;
        b[col] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i * n + col] == 0) continue;
            const Rational f = a[i * n + col];
            for (std::size_t j = col; j < n; ++j) a[i * n + j] -= f * a[col * n + j];
            b[i] -= f * b[col];
        }
    }
    return b;
}

namespace {

// Index of the factor of `factors` vanishing at x.
std::size_t vanishing_factor(const std::vector<FieldPoly>& factors, const AlgebraicNumber& x) {
    if (factors.size() == 1) return 0;
    for (long bits = 24; bits <= 4096; bits *= 2) {
        std::vector<std::size_t> hits;
        const CInterval z = x.enclosure(bits);
        for (std::size_t i = 0; i < factors.size(); ++i) {
            const CInterval v = factors[i].eval_enclosure(z, bits);
            if (v.re.contains(Rational(0)) && v.im.contains(Rational(0))) hits.push_back(i);
        }
        if (hits.size() == 1) return hits[0];
        if (hits.empty()) throw Error("no factor vanishes at " + x.to_string());
    }
    throw Undecided("could not decide which factor vanishes at " + x.to_string());
}

// Roots of f among the conjugates of x (f divides the minimal polynomial of x).
std::vector<AlgebraicNumber> roots_among_conjugates(const FieldPoly& f, const AlgebraicNumber& x) {
    const auto conj = conjugates(x);
    for (long bits = 24; bits <= 4096; bits *= 2) {
        std::vector<AlgebraicNumber> hits;
        for (const auto& c : conj) {
            const CInterval v = f.eval_enclosure(c.enclosure(bits), bits);
            if (v.re.contains(Rational(0)) && v.im.contains(Rational(0))) hits.push_back(c);
        }
        if (static_cast<int>(hits.size()) == f.degree()) return hits;
    }
    throw Undecided("could not isolate the roots of a factor over a number field");
}

} // namespace

FieldPoly minimal_polynomial_over(const AlgebraicNumber& x, const NumberField& K, int cap) {
    std::vector<FieldPoly> fs;
    for (auto& [f, m] : factor_over_field(x.minpoly(), K, cap)) fs.push_back(f);
    return fs[vanishing_factor(fs, x)];
}

FieldElement product_of_conjugates_over(const AlgebraicNumber& x, const NumberField& K, int cap) {
    if (x.is_zero()) throw DomainError("product of conjugates of zero");
    if (K.degree() > cap)
        throw UnsupportedDegree("field degree " + std::to_string(K.degree()) + " exceeds cap " + std::to_string(cap));
    if (!is_galois(K)) throw NonGaloisField("field generated by " + K.generator().to_string() + " is not Galois over Q");
    const FieldPoly h = minimal_polynomial_over(x, K, cap);
    return h.degree() % 2 ? -h[0] : h[0];
}

GaloisClosure galois_closure(const AlgebraicNumber& x, int cap) {
    if (x.is_rational()) {
        NumberField Q;
        return {Q, Q.from_rational(x.rational_value())};
    }
    if (x.degree() > cap)
        throw UnsupportedDegree("degree " + std::to_string(x.degree()) + " exceeds closure cap " + std::to_string(cap));
    NumberField K(x);
    FieldElement alpha = K.gen();
    while (true) {
        std::vector<FieldPoly> nonlinear;
        for (auto& [f, m] : factor_over_field(x.minpoly(), K, cap))
            if (f.degree() > 1) nonlinear.push_back(f);
        if (nonlinear.empty()) return {K, alpha};
        const FieldPoly& g = nonlinear.front();
        const int n = K.degree(), k = g.degree(), total = n * k;
        if (total > cap)
            throw UnsupportedDegree("Galois closure degree exceeds cap " + std::to_string(cap));
        const AlgebraicNumber beta = roots_among_conjugates(g, x).front();
        const FieldElement theta = K.gen();
        // primitive element beta + s*theta with squarefree norm
        long s = 0;
        IntPoly nm;
        for (;; s = s > 0 ? -s : 1 - s) {
            if (s > 60) throw Error("no primitive element found for the Galois closure");
            const FieldPoly shifted = shift(g, -(K.from_rational(Rational(s)) * theta));
            nm = primitive_from(norm(shifted));
            if (is_squarefree(nm)) break;
        }
        const AlgebraicNumber theta_num = K.generator();
        const Rational sq(s);
        const AlgebraicNumber new_gen = select_root(nm, [&](long bits) {
            const CInterval a = beta.enclosure(bits + 4), b = theta_num.enclosure(bits + 8);
            return (a + CInterval::point(sq) * b).rounded(bits + 8);
        });
        NumberField L(new_gen);
        // Express theta in the power basis of the new generator by linear algebra in the tower
        // K[z]/(g), where the new generator is z + s*theta.
        const FieldPoly gm = g.monic();
        const FieldPoly prim = kpoly(K, {K.from_rational(sq) * theta, K.one()});
        std::vector<Rational> a(static_cast<std::size_t>(total) * static_cast<std::size_t>(total));
        FieldPoly power = kpoly(K, {K.one()});
        for (int i = 0; i < total; ++i) {
            for (int b = 0; b < k; ++b) {
                const RatPoly coords = b <= power.degree() ? power[static_cast<std::size_t>(b)].coords() : RatPoly();
                for (int e = 0; e < n; ++e)
                    a[static_cast<std::size_t>(b * n + e) * static_cast<std::size_t>(total) + static_cast<std::size_t>(i)] = coords[e];
            }
            power = divmod(power * prim, gm).second;
        }
        std::vector<Rational> rhs(static_cast<std::size_t>(total), Rational(0));
        rhs[1] = 1; // theta = theta^1 z^0
        const RatPoly theta_in_L(solve_linear(std::move(a), std::move(rhs), static_cast<std::size_t>(total)));
        const FieldElement t = L.element(theta_in_L);
        FieldElement mapped = L.zero();
        const RatPoly& ac = alpha.coords();
        for (int j = ac.degree(); j >= 0; --j) mapped = mapped * t + L.from_rational(ac[j]);
        alpha = mapped;
        K = L;
    }
}

} // namespace mahler
