#include "mahler/metric/solve.hpp"

#include "mahler/error.hpp"
#include "mahler/metric/northcott.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace mahler {

// --- exponent vectors ---

namespace {

void add_exponents(std::map<Integer, Rational>& acc, const Rational& base, const Rational& e) {
    for (const auto& [p, k] : factor_integer(base.get_num())) acc[p] += e * k;
    for (const auto& [p, k] : factor_integer(base.get_den())) acc[p] -= e * k;
}

ExponentVector from_map(const std::map<Integer, Rational>& acc, RootOfUnity unity) {
    ExponentVector v;
    v.unity = unity;
    for (const auto& [p, e] : acc)
        if (e != 0) {
            v.primes.push_back(p);
            v.exps.push_back(e);
        }
    return v;
}

} // namespace

ExponentVector ExponentVector::of_rational(const Rational& q) {
    if (q == 0) throw DomainError("exponent vector of zero");
    std::map<Integer, Rational> acc;
    add_exponents(acc, abs(q), 1);
    return from_map(acc, q < 0 ? RootOfUnity{2, 1} : RootOfUnity{});
}

ExponentVector ExponentVector::of_surds(const std::vector<SurdExpr>& surds) {
    std::map<Integer, Rational> acc;
    RootOfUnity unity;
    for (const auto& raw : surds) {
        const SurdExpr s = canonical(raw);
        if (s.base == 0) throw DomainError("exponent vector of zero");
        unity = unity * RootOfUnity{s.unity_order, static_cast<unsigned long>(s.unity_index)};
        if (s.base != 1) add_exponents(acc, s.base, s.exponent);
    }
    return from_map(acc, unity);
}

Integer ExponentVector::denominator() const {
    Integer l = 1;
    for (const auto& e : exps) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.get_den_mpz_t());
    return l;
}

namespace {

// (A, B) with A / B = prod p^(k e) and gcd(A, B) = 1, k the common denominator.
std::pair<Integer, Integer> split(const ExponentVector& v) {
    const Integer k = v.denominator();
    Integer a = 1, b = 1;
    for (std::size_t i = 0; i < v.primes.size(); ++i) {
        const Rational n = v.exps[i] * k;
        if (n > 0)
            a *= ipow(v.primes[i], n.get_num().get_ui());
        else
            b *= ipow(v.primes[i], Integer(-n.get_num()).get_ui());
    }
    return {a, b};
}

} // namespace

Integer ExponentVector::positive_measure() const {
    const auto [a, b] = split(*this);
    return a > b ? a : b;
}

SurdExpr ExponentVector::to_surd() const {
    const auto [a, b] = split(*this);
    const SurdExpr s{unity.order, static_cast<long>(unity.index), Rational(a, b), Rational(Integer(1), denominator())};
    return canonical(s);
}

// --- witness search ---

namespace {

// Integer-scaled exponent vector over a fixed prime list.
using Vec = std::vector<long>;

struct Atom {
    Vec v;            // exponents times the common scale
    ExponentVector ev;
    Integer measure;
    double size;      // log of the positive real value
};

bool atom_less(const Atom& x, const Atom& y) {
    if (x.measure != y.measure) return x.measure < y.measure;
    return x.size < y.size;
}

// Largest j with p^j <= m.
long log_floor(const Integer& p, const Integer& m) {
    long j = 0;
    Integer t = p;
    while (t <= m) {
        ++j;
        t *= p;
    }
    return j;
}

// Nonzero exponent vectors n over `primes` with max(A, B) <= m and gcd(A, B) = 1.
std::vector<std::vector<long>> bounded_vectors(const std::vector<Integer>& primes, const Integer& m) {
    std::vector<std::vector<long>> out{{}};
    for (const auto& p : primes) {
        const long c = log_floor(p, m);
        std::vector<std::vector<long>> next;
        for (const auto& v : out)
            for (long e = -c; e <= c; ++e) {
                auto w = v;
                w.push_back(e);
                next.push_back(std::move(w));
            }
        out = std::move(next);
    }
    std::vector<std::vector<long>> kept;
    for (const auto& n : out) {
        Integer a = 1, b = 1;
        bool zero = true;
        for (std::size_t i = 0; i < n.size(); ++i) {
            if (n[i] > 0) a *= ipow(primes[i], static_cast<unsigned long>(n[i]));
            if (n[i] < 0) b *= ipow(primes[i], static_cast<unsigned long>(-n[i]));
            zero = zero && n[i] == 0;
        }
        if (!zero && a <= m && b <= m) kept.push_back(n);
    }
    return kept;
}

std::vector<Atom> make_atoms(const std::vector<Integer>& primes, const Integer& m, long kmax, long scale) {
    std::vector<Atom> atoms;
    for (const auto& n : bounded_vectors(primes, m)) {
        long g = 0;
        for (long x : n) g = std::gcd(g, x);
        for (long k = 1; k <= kmax; ++k) {
            if (std::gcd(g, k) != 1) continue;
            Atom a;
            a.ev.primes = primes;
            double size = 0;
            for (std::size_t i = 0; i < n.size(); ++i) {
                a.v.push_back(n[i] * (scale / k));
                a.ev.exps.push_back(Rational(n[i], k));
                a.ev.exps.back().canonicalize();
                size += static_cast<double>(n[i]) / static_cast<double>(k) * std::log(to_double(Rational(primes[i])));
            }
            // drop zero exponents to keep the vector canonical
            ExponentVector c;
            for (std::size_t i = 0; i < primes.size(); ++i)
                if (a.ev.exps[i] != 0) {
                    c.primes.push_back(primes[i]);
                    c.exps.push_back(a.ev.exps[i]);
                }
            a.ev = c;
            a.measure = a.ev.positive_measure();
            a.size = size;
            atoms.push_back(std::move(a));
        }
    }
    std::sort(atoms.begin(), atoms.end(), atom_less);
    return atoms;
}

class Search {
public:
    Search(std::vector<Integer> primes, const Integer& m, long scale, const std::vector<Atom>& atoms, long node_cap)
        : primes_(std::move(primes)), scale_(scale), atoms_(atoms), node_cap_(node_cap) {
        log_m_ = std::log(to_double(Rational(m)));
        for (const auto& p : primes_) {
            caps_.push_back(log_floor(p, m) * scale);
            logs_.push_back(std::log(to_double(Rational(p))));
        }
    }

    long lower_bound(const Vec& rem) const {
        long lb = 0;
        double up = 0, down = 0;
        for (std::size_t i = 0; i < rem.size(); ++i) {
            const long r = std::labs(rem[i]);
            lb = std::max(lb, (r + caps_[i] - 1) / caps_[i]);
            (rem[i] > 0 ? up : down) += static_cast<double>(r) * logs_[i];
        }
        const double h = std::max(up, down) / static_cast<double>(scale_) / log_m_;
        return std::max(lb, static_cast<long>(std::ceil(h - 1e-9)));
    }

    // Factors of exactly `length` atoms, in nondecreasing atom order; empty on failure.
    std::optional<std::vector<int>> run(const Vec& target, long length) {
        picked_.clear();
        if (dfs(target, length, 0)) return picked_;
        return std::nullopt;
    }

    bool exhausted() const { return nodes_ > node_cap_; }

private:
    bool dfs(const Vec& rem, long left, std::size_t start) {
        if (++nodes_ > node_cap_) return false;
        if (left == 0) return std::all_of(rem.begin(), rem.end(), [](long x) { return x == 0; });
        if (lower_bound(rem) > left) return false;
        Vec next(rem.size());
        for (std::size_t i = start; i < atoms_.size(); ++i) {
            for (std::size_t j = 0; j < rem.size(); ++j) next[j] = rem[j] - atoms_[i].v[j];
            picked_.push_back(static_cast<int>(i));
            if (dfs(next, left - 1, i)) return true;
            picked_.pop_back();
            if (exhausted()) return false;
        }
        return false;
    }

    std::vector<Integer> primes_;
    long scale_;
    const std::vector<Atom>& atoms_;
    long node_cap_;
    long nodes_ = 0;
    double log_m_ = 0;
    std::vector<long> caps_;
    std::vector<double> logs_;
    std::vector<int> picked_;
};

struct Witness {
    std::vector<ExponentVector> factors; // positive real factors
    bool shortest = false;
    bool caps_exceeded = false;
    bool integral = true;
};

// Shortest product of atoms of measure <= m equal to the positive real part of `target`
// (integer exponents).
Witness shortest_witness(const ExponentVector& target, const Integer& m, const SolveConfig& config) {
    Witness w;
    const std::vector<Integer>& primes = target.primes;
    Vec goal;
    for (const auto& e : target.exps) goal.push_back(e.get_num().get_si());

    const std::vector<Atom> ints = make_atoms(primes, m, 1, 1);
    Search s(primes, m, 1, ints, config.node_cap);
    const long lb = s.lower_bound(goal);
    // Splitting each prime into powers p^j <= m always succeeds at this length.
    long fallback = 0;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        const long c = log_floor(primes[i], m);
        fallback += (std::labs(goal[i]) + c - 1) / c;
    }
    std::optional<std::vector<int>> found;
    long length = lb;
    for (; length <= fallback && !found && !s.exhausted(); ++length) found = s.run(goal, length);
    std::vector<ExponentVector> best;
    if (found) {
        --length;
        for (int i : *found) best.push_back(ints[static_cast<std::size_t>(i)].ev);
    } else {
        w.caps_exceeded = true;
        length = fallback;
        for (std::size_t i = 0; i < primes.size(); ++i) {
            const long c = log_floor(primes[i], m);
            long r = std::labs(goal[i]);
            while (r > 0) {
                const long take = std::min(r, c);
                ExponentVector f;
                f.primes = {primes[i]};
                f.exps = {Rational(goal[i] > 0 ? take : -take)};
                best.push_back(f);
                r -= take;
            }
        }
    }
    w.shortest = found && length == lb;
    if (!w.shortest && config.kmax > 1) {
        // Fractional exponents may shorten the product.
        long scale = 1;
        for (long k = 2; k <= config.kmax; ++k) scale = std::lcm(scale, k);
        const std::vector<Atom> fr = make_atoms(primes, m, config.kmax, scale);
        Search f(primes, m, scale, fr, config.node_cap);
        Vec scaled = goal;
        for (auto& x : scaled) x *= scale;
        for (long n = lb; n < length && !f.exhausted(); ++n) {
            if (auto got = f.run(scaled, n)) {
                best.clear();
                for (int i : *got) best.push_back(fr[static_cast<std::size_t>(i)].ev);
                w.integral = std::all_of(best.begin(), best.end(), [](const ExponentVector& e) { return e.denominator() == 1; });
                w.shortest = n == lb;
                break;
            }
        }
        if (f.exhausted()) w.caps_exceeded = true;
    }
    w.factors = std::move(best);
    return w;
}

// --- targets ---

// alpha = unity * (positive real surd), when it has that shape.
std::optional<ExponentVector> surd_shape(const AlgebraicNumber& alpha, const std::vector<SurdExpr>* surds) {
    if (surds) return ExponentVector::of_surds(*surds);
    if (alpha.is_rational()) return ExponentVector::of_rational(alpha.rational_value());
    const IntPoly& f = alpha.minpoly();
    // All conjugates share one modulus.
    double lo = HUGE_VAL, hi = 0;
    for (const auto& z : conjugates(alpha)) {
        const double r = std::hypot(z.approx_re(), z.approx_im());
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    if (hi - lo > 1e-6 * std::max(1.0, hi)) return std::nullopt;
    const Rational modulus_power = Rational(abs(f[0]), abs(f.lead()));
    const SurdExpr y{1, 0, modulus_power, Rational(1, f.degree())};
    const AlgebraicNumber zeta = mul(alpha, inv(from_surd(y)));
    if (!is_torsion(zeta)) return std::nullopt;
    std::vector<SurdExpr> parts{y, SurdExpr::unity(1, 0)};
    const RootOfUnity u = RootOfUnity::of(zeta);
    parts[1] = SurdExpr::unity(u.order, static_cast<long>(u.index));
    return ExponentVector::of_surds(parts);
}

bool integral_exponents(const ExponentVector& v) { return v.denominator() == 1; }

Integer largest_prime(const ExponentVector& v) { return v.primes.empty() ? Integer(1) : v.primes.back(); }

ExponentVector without_unity(ExponentVector v) {
    v.unity = RootOfUnity{};
    return v;
}

WitnessFactor witness_factor(const ExponentVector& v) {
    const SurdExpr s = v.to_surd();
    return WitnessFactor{from_surd(s), to_string(s), MeasureValue(ExactPower::make(Rational(v.positive_measure())))};
}

WitnessFactor witness_factor(const AlgebraicNumber& x) { return WitnessFactor{x, x.to_string(), mahler_roots(x)}; }

// Builds the witness from positive real factors and the unity of the target: a sign goes on
// the first factor, other roots of unity stay as the recorded slack.
void set_witness(SolveResult& r, const AlgebraicNumber& alpha, std::vector<ExponentVector> parts, const RootOfUnity& unity) {
    RootOfUnity slack = unity;
    if (unity.order == 2 && !parts.empty()) {
        parts.front().unity = unity;
        slack = RootOfUnity{};
    }
    r.witness = Representation{alpha, {}, !slack.is_one(), slack};
    r.factors.clear();
    for (const auto& p : parts) {
        r.factors.push_back(witness_factor(p));
        r.witness.factors.push_back(r.factors.back().value);
    }
    if (r.witness.factors.empty()) {
        // torsion target: the target itself, of measure 1
        r.witness = Representation{alpha, {alpha}, false, RootOfUnity{}};
        r.factors = {WitnessFactor{alpha, unity.to_string(), MeasureValue()}};
    }
}

void set_trivial_witness(SolveResult& r, const AlgebraicNumber& alpha) {
    r.witness = Representation{alpha, {alpha}, false, RootOfUnity{}};
    r.factors = {witness_factor(alpha)};
}

bool all_rational(const std::vector<WitnessFactor>& f) {
    return std::all_of(f.begin(), f.end(), [](const WitnessFactor& w) { return w.value.is_rational(); });
}

struct FieldData {
    std::optional<NumberField> field;
    std::optional<HeightEntry> q;
};

FieldData field_data(const AlgebraicNumber& alpha, const SolveConfig& config, Certificate& cert) {
    FieldData d;
    try {
        d.field = galois_closure(alpha, config.closure_cap).field;
        cert.closure_degree = d.field->degree();
        if (d.field->degree() <= 2) {
            d.q = smallest_height(*d.field);
            cert.q = d.q->height;
            cert.length_bound = length_bound(d.q->height, mahler_roots(alpha));
        }
    } catch (const UnsupportedDegree&) {
        cert.caps_exceeded = true;
    }
    return d;
}

void set_location(SolveResult& r, const AlgebraicNumber& alpha, const FieldData& d) {
    if (r.factors.size() == 1) r.certificate.witness_shortest = true;
    if (d.field) {
        bool in = true;
        for (const auto& f : r.factors) in = in && field_member(*d.field, f.value).has_value();
        r.certificate.witness_in_field = in;
    }
    if (r.exact) r.certificate.location = verify_location(r, alpha, r.certificate.closure_cap);
}

Certificate base_certificate(const char* measure, const SolveConfig& config) {
    Certificate c;
    c.measure = measure;
    c.kmax = config.kmax;
    c.closure_cap = config.closure_cap;
    return c;
}

// Sign of m^k - e, m a positive real algebraic number and e = b^(n/k).
int compare_exact(const AlgebraicNumber& m, const ExactPower& e) {
    const long k = e.exponent.get_den().get_si();
    const AlgebraicNumber lhs = pow_int(m, k);
    const AlgebraicNumber rhs = AlgebraicNumber::from_rational(rpow(e.base, e.exponent.get_num().get_si()));
    if (lhs == rhs) return 0;
    return compare_real_parts(lhs, rhs);
}

// Sign of M(a)^da - M(b)^db for heights given as (measure, degree).
int compare_heights(const HeightEntry& a, const HeightEntry& b) {
    const AlgebraicNumber x = pow_int(a.measure, b.degree), y = pow_int(b.measure, a.degree);
    if (x == y) return 0;
    return compare_real_parts(x, y);
}

// Measures M(beta), beta in K non-torsion, between lower and the exact upper bound.
std::vector<AlgebraicNumber> candidate_values(const NumberField& K, const std::optional<HeightEntry>& q,
                                              const ExactPower& upper) {
    // H(beta) <= M(beta) <= upper
    const Rational b = upper.enclosure(64).hi;
    std::vector<AlgebraicNumber> out;
    for (const auto& e : northcott_enumerate(K, b)) {
        if (e.measure.is_rational() && e.measure.rational_value() == 1) continue;
        if (compare_exact(e.measure, upper) > 0) continue;
        if (q) {
            const HeightEntry as_measure{e.element, 1, e.measure, MeasureValue()};
            if (compare_heights(as_measure, *q) < 0) continue;
        }
        if (std::find(out.begin(), out.end(), e.measure) == out.end()) out.push_back(e.measure);
    }
    std::sort(out.begin(), out.end(), [](const AlgebraicNumber& x, const AlgebraicNumber& y) {
        return x != y && compare_real_parts(x, y) < 0;
    });
    return out;
}

// a > b when certified; inseparable values count as not greater.
bool greater(const MeasureValue& a, const MeasureValue& b) {
    try {
        return compare(a, b) > 0;
    } catch (const Undecided&) {
        return false;
    }
}

MeasureValue value_of(const AlgebraicNumber& m) {
    if (m.is_rational()) return MeasureValue(ExactPower::make(m.rational_value()));
    auto enc = [m](long bits) { return m.enclosure(bits + 4).re; };
    return MeasureValue(enc(kDefaultBits), std::nullopt, enc);
}

} // namespace

// --- M1 ---

SolveResult m_one(const AlgebraicNumber& alpha, const SolveConfig& config, const std::vector<SurdExpr>* surds) {
    if (alpha.is_zero()) throw DomainError("metric measure of zero");
    SolveResult r;
    r.certificate = base_certificate("M1", config);
    const FieldData d = field_data(alpha, config, r.certificate);
    const auto shape = surd_shape(alpha, surds);

    if (shape && integral_exponents(*shape)) {
        // unity * A/B: every factorization has prod M >= H = max(A, B), attained by A/B itself.
        const MeasureValue v(ExactPower::make(Rational(shape->positive_measure())));
        r.exact = true;
        r.value = r.lower = r.upper = v;
        if (shape->unity.order <= 2)
            set_trivial_witness(r, alpha);
        else
            set_witness(r, alpha, {without_unity(*shape)}, shape->unity);
        r.certificate.argument = "height lower bound attained by a single rational factor";
        r.certificate.witness_shortest = true;
        set_location(r, alpha, d);
        return r;
    }

    // Lower bound: H(alpha) and, over fields with computable q, q.
    r.lower = weil_height(alpha, config.bits);
    if (d.q && greater(d.q->height, r.lower)) r.lower = d.q->height;

    // Upper bound: the trivial factorization or the prime split of a surd.
    const MeasureValue trivial = mahler_roots(alpha, config.bits);
    r.upper = trivial;
    set_trivial_witness(r, alpha);
    r.certificate.argument = "bounds: height and q below, best factorization found above";
    if (shape) {
        std::vector<ExponentVector> parts;
        Integer prod = 1;
        for (std::size_t i = 0; i < shape->primes.size(); ++i) {
            ExponentVector f;
            f.primes = {shape->primes[i]};
            f.exps = {shape->exps[i]};
            prod *= f.positive_measure();
            parts.push_back(f);
        }
        const MeasureValue split_value(ExactPower::make(Rational(prod)));
        int c = 1;
        try {
            c = compare(split_value, trivial);
        } catch (const Undecided&) {
        }
        if (c < 0) {
            r.upper = split_value;
            set_witness(r, alpha, parts, shape->unity);
        }
    }
    r.value = r.upper;
    if (r.upper.is_exact() && r.lower.is_exact() && compare(r.lower, r.upper) == 0) {
        r.exact = true;
        r.certificate.argument = "lower and upper bounds meet";
    }
    set_location(r, alpha, d);
    return r;
}

// --- Minf ---

SolveResult m_inf(const AlgebraicNumber& alpha, const SolveConfig& config, const std::vector<SurdExpr>* surds) {
    if (alpha.is_zero()) throw DomainError("ultrametric measure of zero");
    SolveResult r;
    r.certificate = base_certificate("Minf", config);
    const FieldData d = field_data(alpha, config, r.certificate);
    const auto shape = surd_shape(alpha, surds);

    if (shape && integral_exponents(*shape)) {
        // A factor of measure <= m only involves primes p <= m, so the largest prime of the
        // support is a lower bound, attained by splitting into primes.
        const Integer m = largest_prime(*shape);
        const MeasureValue v(ExactPower::make(Rational(m)));
        r.exact = true;
        r.value = r.lower = r.upper = v;
        if (shape->is_torsion()) {
            set_witness(r, alpha, {}, shape->unity);
            r.certificate.witness_shortest = true;
        } else {
            const Witness w = shortest_witness(without_unity(*shape), m, config);
            set_witness(r, alpha, w.factors, shape->unity);
            r.certificate.witness_shortest = w.shortest;
            r.certificate.caps_exceeded = r.certificate.caps_exceeded || w.caps_exceeded;
        }
        r.certificate.argument = "largest prime of the support; every factor of measure m is supported on primes <= m";
        set_location(r, alpha, d);
        return r;
    }

    // Lower bound: the value is the measure of a non-torsion element of the closure, so at least q.
    r.lower = MeasureValue();
    if (d.q) r.lower = d.q->height;
    r.upper = mahler_roots(alpha, config.bits);
    set_trivial_witness(r, alpha);
    r.certificate.argument = "bounds: q below, best factorization found above";
    if (shape) {
        // p^(n/k) = (p^(1/k))^n, each factor of measure p.
        std::vector<ExponentVector> parts;
        for (std::size_t i = 0; i < shape->primes.size(); ++i) {
            const Rational& e = shape->exps[i];
            ExponentVector f;
            f.primes = {shape->primes[i]};
            f.exps = {Rational(e > 0 ? 1 : -1) / Rational(e.get_den())};
            for (long j = 0; j < Integer(abs(e.get_num())).get_si(); ++j) parts.push_back(f);
        }
        const MeasureValue split_value(ExactPower::make(Rational(largest_prime(*shape))));
        int c = 1;
        try {
            c = compare(split_value, r.upper);
        } catch (const Undecided&) {
        }
        if (c < 0) {
            r.upper = split_value;
            set_witness(r, alpha, parts, shape->unity);
        }
    }
    r.value = r.upper;
    if (d.field && d.field->degree() <= 2 && r.upper.is_exact() && compare(*r.upper.exact(), ExactPower::make(config.northcott_cap)) <= 0) {
        const auto cands = candidate_values(*d.field, d.q, *r.upper.exact());
        for (const auto& c : cands) r.certificate.candidates.push_back(c.to_string());
        if (cands.size() == 1 && compare_exact(cands.front(), *r.upper.exact()) == 0) {
            r.exact = true;
            r.lower = r.upper;
            r.certificate.argument = "the only measure of a closure element between the bounds is attained";
        } else if (!cands.empty()) {
            const MeasureValue smallest = value_of(cands.front());
            if (greater(smallest, r.lower)) r.lower = smallest;
        }
    }
    set_location(r, alpha, d);
    return r;
}

bool verify_location(const SolveResult& result, const AlgebraicNumber& alpha, int closure_cap) {
    if (!result.exact || !result.value.is_exact()) return false;
    const ExactPower& v = *result.value.exact();
    if (alpha.is_rational()) return v.is_rational() && v.rational_value().get_den() == 1;
    if (v.is_rational()) return true;
    try {
        const NumberField K = galois_closure(alpha, closure_cap).field;
        return field_member(K, from_surd(SurdExpr{1, 0, v.base, v.exponent})).has_value();
    } catch (const UnsupportedDegree&) {
        return false;
    }
}

} // namespace mahler
