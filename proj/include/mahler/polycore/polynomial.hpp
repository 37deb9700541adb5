#pragma once

// Dense univariate polynomials over Z and Q. Coefficients are stored constant term
// first and the vector is kept trimmed, so the zero polynomial has no coefficients
// and degree() == -1.

#include "mahler/polycore/integer.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace mahler {

template <class C>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<C> coeffs) : c_(coeffs) { trim(); }
    static Poly constant(const C& a) { return Poly(std::vector<C>{a}); }
    // a * x^k
    static Poly monomial(const C& a, int k) {
        std::vector<C> v(static_cast<std::size_t>(k) + 1, C(0));
        v.back() = a;
        return Poly(std::move(v));
    }
    static Poly x() { return monomial(C(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<C>& coeffs() const { return c_; }
    // Coefficient of x^i; zero outside the stored range.
    C operator[](int i) const {
        if (i < 0 || i > degree()) return C(0);
        return c_[static_cast<std::size_t>(i)];
    }
    const C& lead() const { return c_.back(); }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<C> r(std::max(a.c_.size(), b.c_.size()), C(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a) {
        std::vector<C> r(a.c_);
        for (auto& v : r) v = -v;
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<C> r(a.c_.size() + b.c_.size() - 1, C(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    friend Poly operator*(const C& s, const Poly& a) {
        std::vector<C> r(a.c_);
        for (auto& v : r) v *= s;
        return Poly(std::move(r));
    }
    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    template <class V>
    V eval(const V& x) const {
        V acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + V(*it);
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<C> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = C(static_cast<long>(i)) * c_[i];
        return Poly(std::move(r));
    }

    // x^deg * p(1/x)
    Poly reversed() const {
        std::vector<C> r(c_.rbegin(), c_.rend());
        return Poly(std::move(r));
    }

    // p(-x)
    Poly negated_variable() const {
        std::vector<C> r(c_);
        for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
        return Poly(std::move(r));
    }

    // p(x^k)
    Poly inflate(int k) const {
        if (is_zero()) return Poly();
        std::vector<C> r(static_cast<std::size_t>(degree() * k + 1), C(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i * static_cast<std::size_t>(k)] = c_[i];
        return Poly(std::move(r));
    }

    // p(x + a), by repeated synthetic division.
    Poly shifted(const C& a) const {
        std::vector<C> r(c_);
        const std::size_t n = r.size();
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = n - 1; j > i; --j) r[j - 1] += a * r[j];
        return Poly(std::move(r));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<C> c_;
};

using IntPoly = Poly<Integer>;
using RatPoly = Poly<Rational>;

// --- integer polynomials ---

Integer content(const IntPoly& p);
// Primitive part with positive leading coefficient; zero maps to zero.
IntPoly normalize(const IntPoly& p);
// Scales a rational polynomial to a primitive integer polynomial with positive leading coefficient.
IntPoly primitive_from(const RatPoly& p);
RatPoly to_rat(const IntPoly& p);
// Exact division over Z; throws DomainError when b does not divide a.
IntPoly exact_div(const IntPoly& a, const IntPoly& b);
// Returns the quotient when b divides a over Z, otherwise nothing.
bool divides(const IntPoly& b, const IntPoly& a, IntPoly* quotient = nullptr);
IntPoly pow(const IntPoly& p, unsigned n);
// Infinity norm of the coefficient vector.
Integer max_norm(const IntPoly& p);
// Lexicographic comparison used for deterministic ordering: degree, then coefficients from
// the leading one downwards.
bool poly_less(const IntPoly& a, const IntPoly& b);

// Greatest common divisor over Q returned as a normalized integer polynomial.
IntPoly gcd(const IntPoly& a, const IntPoly& b);
bool is_squarefree(const IntPoly& p);
// Yun's algorithm: p = c * prod f_i^i, each f_i squarefree and pairwise coprime.
// Returns (f_i, i) for the nonconstant f_i.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p);
IntPoly squarefree_part(const IntPoly& p);

// --- rational polynomials ---

RatPoly monic(const RatPoly& p);
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
RatPoly rem(const RatPoly& a, const RatPoly& b);
RatPoly gcd(const RatPoly& a, const RatPoly& b);
// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
struct XGcd {
    RatPoly g, s, t;
};
XGcd xgcd(const RatPoly& a, const RatPoly& b);
// Substitution p(q(x)).
RatPoly compose(const RatPoly& p, const RatPoly& q);

// --- text form ---

// Human-readable form in the polynomial grammar, e.g. "x^2-2".
std::string to_string(const IntPoly& p);
std::string to_string(const RatPoly& p);
// Parses the polynomial grammar: integer coefficients, variable x, '^' powers.
IntPoly parse_poly(const std::string& text);

} // namespace mahler
