#include "mahler/metric/representation.hpp"

#include "mahler/error.hpp"
#include "mahler/polycore/factor.hpp"

#include <cmath>
#include <numeric>

namespace mahler {

RootOfUnity RootOfUnity::of(const AlgebraicNumber& torsion) {
    const auto [m, j] = torsion_index(torsion);
    return RootOfUnity{m, j};
}

RootOfUnity RootOfUnity::pow(long n) const {
    const long m = static_cast<long>(order);
    long j = static_cast<long>(index) * (n % m) % m;
    if (j < 0) j += m;
    const long g = std::gcd(j, m);
    if (j == 0) return RootOfUnity{};
    return RootOfUnity{static_cast<unsigned long>(m / g), static_cast<unsigned long>(j / g)};
}

std::string RootOfUnity::to_string() const {
    if (order == 1) return "1";
    if (order == 2) return "-1";
    return "zeta(" + std::to_string(order) + "," + std::to_string(index) + ")";
}

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
    const unsigned long m = std::lcm(a.order, b.order);
    unsigned long j = (a.index * (m / a.order) + b.index * (m / b.order)) % m;
    if (j == 0) return RootOfUnity{};
    const unsigned long g = std::gcd(j, m);
    return RootOfUnity{m / g, j / g};
}

bool representation_holds(const Representation& rep) {
    AlgebraicNumber p = product(rep.factors);
    if (rep.torsion_slack) p = mul(rep.unity.value(), p);
    return p == rep.target;
}

int radical_order(const AlgebraicNumber& x, const NumberField& K, int cap) {
    AlgebraicNumber y = x;
    for (int L = 1; L <= cap; ++L) {
        if (field_member(K, y)) return L;
        y = mul(y, x);
    }
    return 0;
}

namespace {

IntPoly normalized(const IntPoly& f) { return normalize(f); }

} // namespace

bool measure_at_most(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    const IntPoly& f = a.minpoly();
    const IntPoly& g = b.minpoly();
    // M(f(x)) = M(f(-x)) = M(x^d f(1/x))
    for (const IntPoly& h : {f, normalized(f.negated_variable()), normalized(f.reversed()),
                             normalized(f.reversed().negated_variable())})
        if (h == g) return true;
    const MeasureValue ma = mahler_roots(a), mb = mahler_roots(b);
    return compare(ma, mb) <= 0;
}

RestrictedRep restrict_representation(const Representation& rep, const MeasureValue& bound, const NumberField& K) {
    RestrictedRep r{rep, bound};
    MeasureValue total;
    int torsion = rep.torsion_slack && !rep.unity.is_one() ? 1 : 0;
    r.in_radical = true;
    for (const auto& f : rep.factors) {
        total = total * mahler_roots(f);
        if (is_torsion(f)) ++torsion;
        if (radical_order(f, K) == 0) r.in_radical = false;
    }
    r.within_bound = compare(total, bound) <= 0;
    r.single_torsion = torsion <= 1;
    return r;
}

namespace {

// The r-th root of p with the largest real part, then positive imaginary part.
AlgebraicNumber principal_root(const AlgebraicNumber& p, int r) {
    if (r == 1) return p;
    std::optional<AlgebraicNumber> best;
    for (const IntPoly& g : irreducible_factors(p.minpoly().inflate(r))) {
        for (const auto& z : conjugates(AlgebraicNumber::root_of(g, 0))) {
            if (pow_int(z, r) != p) continue;
            if (!best) {
                best = z;
                continue;
            }
            const double dr = z.approx_re() - best->approx_re();
            const double scale = 1e-12 * std::max(1.0, std::fabs(best->approx_re()));
            if (dr > scale || (std::fabs(dr) <= scale && z.approx_im() > best->approx_im())) best = z;
        }
    }
    if (!best) throw Error("no r-th root found among the candidate roots");
    return *best;
}

// Smallest t >= 1 with zeta^(r t) in K.
int unity_power_in_field(const RootOfUnity& zeta, int r, const NumberField& K) {
    for (int t = 1;; ++t) {
        const RootOfUnity w = zeta.pow(static_cast<long>(r) * t);
        if (w.is_one() || w.order == 2 || field_member(K, w.value())) return t;
    }
}

} // namespace

Reduction reduce_representation(const Representation& rep, int closure_cap) {
    if (rep.factors.empty()) throw DomainError("representation without factors");
    const GaloisClosure closure = galois_closure(rep.target, closure_cap);
    const NumberField& K = closure.field;
    Reduction out{RootOfUnity{}, Representation{rep.target, {}, false, RootOfUnity{}}, K, {}, {}, {}};
    for (const auto& a : rep.factors) {
        if (a.is_zero()) throw DomainError("zero factor in a representation");
        const FieldPoly h = minimal_polynomial_over(a, K, closure_cap);
        const int r = h.degree();
        const FieldElement conj_product = r % 2 ? -h[0] : h[0];
        out.degrees.push_back(r);
        out.root_orders.push_back(r);
        out.powers.push_back(conj_product);
        out.reduced.factors.push_back(principal_root(conj_product.value(), r));
    }
    AlgebraicNumber zeta = mul(rep.target, inv(product(out.reduced.factors)));
    if (rep.torsion_slack) zeta = mul(zeta, inv(rep.unity.value()));
    if (!is_torsion(zeta)) throw Error("reduction left a non-torsion quotient");
    RootOfUnity unity = RootOfUnity::of(zeta);
    if (rep.torsion_slack) unity = unity * rep.unity;
    if (!unity.is_one()) {
        for (std::size_t n = 0; n < out.reduced.factors.size(); ++n) {
            const AlgebraicNumber b = mul(unity.value(), out.reduced.factors[n]);
            if (!measure_at_most(b, rep.factors[n])) continue;
            const int r = out.root_orders[n];
            const int t = unity_power_in_field(unity, r, K);
            out.reduced.factors[n] = b;
            out.root_orders[n] = r * t;
            out.powers[n] = *field_member(K, unity.pow(static_cast<long>(r) * t).value()) * out.powers[n].pow(t);
            unity = RootOfUnity{};
            break;
        }
    }
    out.unity = unity;
    out.reduced.torsion_slack = !unity.is_one();
    out.reduced.unity = unity;

    // Verify the three reduction properties before returning.
    if (!representation_holds(out.reduced)) throw Error("reduction broke the product identity");
    for (std::size_t n = 0; n < rep.factors.size(); ++n) {
        const auto y = field_member(K, pow_int(out.reduced.factors[n], out.root_orders[n]));
        if (!y || *y != out.powers[n]) throw Error("reduced factor is not a radical of the closure");
        if (!measure_at_most(out.reduced.factors[n], rep.factors[n])) throw Error("reduced factor has a larger measure");
    }
    return out;
}

Projection project_to_field(const Representation& rep, const NumberField& K, int cap) {
    Projection p;
    long L = 1;
    for (const auto& a : rep.factors) {
        const int l = radical_order(a, K, cap);
        if (l == 0) throw UnsupportedDegree("factor " + a.to_string() + " has no power in the field within the cap");
        p.root_orders.push_back(l);
        L = std::lcm(L, static_cast<long>(l));
    }
    p.exponent = static_cast<int>(L);
    p.rep.target = pow_int(rep.target, L);
    for (std::size_t n = 0; n < rep.factors.size(); ++n) {
        const int j = static_cast<int>(L / p.root_orders[n]);
        p.multiplicities.push_back(j);
        const FieldElement y = *field_member(K, pow_int(rep.factors[n], p.root_orders[n]));
        p.rep.factors.push_back(y.pow(j).value());
    }
    const RootOfUnity u = rep.torsion_slack ? rep.unity.pow(L) : RootOfUnity{};
    p.rep.torsion_slack = !u.is_one();
    p.rep.unity = u;
    if (!representation_holds(p.rep)) throw Error("projection broke the product identity");
    return p;
}

} // namespace mahler
