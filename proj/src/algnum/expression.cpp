#include "mahler/algnum/expression.hpp"

#include "mahler/error.hpp"

#include <cctype>

namespace mahler {

AlgebraicNumber NumberExpr::value() const {
    AlgebraicNumber acc = AlgebraicNumber::from_integer(1);
    // Multiply rational parts first to keep intermediate degrees small.
    Rational q = 1;
    std::vector<AlgebraicNumber> parts;
    for (const auto& s : surds) {
        const SurdExpr c = canonical(s);
        if (c.unity_order <= 2 && c.exponent.get_den() == 1) {
            q *= rpow(c.base, c.exponent.get_num().get_si());
            if (c.unity_order == 2) q = -q;
        } else {
            parts.push_back(from_surd(c));
        }
    }
    for (const auto& o : others) parts.push_back(o);
    acc = AlgebraicNumber::from_rational(q);
    for (const auto& p : parts) acc = mul(acc, p);
    return acc;
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
    }

    NumberExpr parse() {
        if (s_.empty()) fail("empty expression");
        NumberExpr e = expr();
        if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at position " + std::to_string(i_) + " in '" + text_ + "'");
    }
    bool peek(char c) const { return i_ < s_.size() && s_[i_] == c; }
    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++i_;
    }
    bool starts(const char* w) const { return s_.compare(i_, std::char_traits<char>::length(w), w) == 0; }

    std::string digits() {
        std::string d;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) d.push_back(s_[i_++]);
        if (d.empty()) fail("expected digits");
        return d;
    }
    Integer signed_int() {
        bool neg = false;
        if (peek('-') || peek('+')) neg = s_[i_++] == '-';
        Integer v(digits());
        return neg ? Integer(-v) : v;
    }
    Rational rational_literal() {
        Integer a = signed_int();
        Integer b = 1;
        if (peek('/')) {
            ++i_;
            b = Integer(digits());
            if (b == 0) fail("zero denominator");
        }
        Rational r(a, b);
        r.canonicalize();
        return r;
    }
    bool at_rational() const {
        std::size_t j = i_;
        if (j < s_.size() && (s_[j] == '-' || s_[j] == '+')) ++j;
        return j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]));
    }

    NumberExpr expr() {
        NumberExpr e = term();
        while (peek('*')) {
            ++i_;
            NumberExpr t = term();
            e.surds.insert(e.surds.end(), t.surds.begin(), t.surds.end());
            e.others.insert(e.others.end(), t.others.begin(), t.others.end());
        }
        return e;
    }

    // Atom; sets `rational_base` when the atom is a bare rational.
    NumberExpr atom(std::optional<Rational>& rational_base) {
        NumberExpr e;
        if (at_rational()) {
            const Rational q = rational_literal();
            if (q == 0) fail("zero is not allowed");
            rational_base = q;
            e.surds.push_back(SurdExpr::rational(q));
            return e;
        }
        if (starts("zeta(")) {
            i_ += 5;
            const Integer m = signed_int();
            expect(',');
            const Integer j = signed_int();
            expect(')');
            if (m <= 0 || !m.fits_ulong_p() || m > 100000) fail("bad root of unity order");
            if (!j.fits_slong_p()) fail("bad root of unity index");
            e.surds.push_back(SurdExpr::unity(m.get_ui(), j.get_si()));
            return e;
        }
        if (starts("root(")) {
            i_ += 5;
            const std::size_t comma = s_.find(',', i_);
            if (comma == std::string::npos) fail("expected ','");
            IntPoly p;
            try {
                p = parse_poly(s_.substr(i_, comma - i_));
            } catch (const ParseError& err) {
                fail(std::string("bad polynomial (") + err.what() + ")");
            }
            i_ = comma + 1;
            const Integer k = signed_int();
            expect(')');
            if (p.degree() < 1) fail("root of a constant polynomial");
            if (k < 0 || k >= p.degree()) fail("root index out of range");
            const AlgebraicNumber a = AlgebraicNumber::root_of(p, k.get_ui());
            if (a.is_zero()) fail("zero is not allowed");
            if (a.is_rational()) {
                rational_base = a.rational_value();
                e.surds.push_back(SurdExpr::rational(a.rational_value()));
            } else {
                e.others.push_back(a);
            }
            return e;
        }
        if (peek('(')) {
            ++i_;
            if (at_rational()) {
                const std::size_t save = i_;
                const Rational q = rational_literal();
                if (peek(')')) {
                    ++i_;
                    if (q == 0) fail("zero is not allowed");
                    rational_base = q;
                    e.surds.push_back(SurdExpr::rational(q));
                    return e;
                }
                i_ = save;
            }
            e = expr();
            expect(')');
            return e;
        }
        fail("expected a number");
    }

    NumberExpr term() {
        std::optional<Rational> rational_base;
        NumberExpr e = atom(rational_base);
        if (!peek('^')) return e;
        ++i_;
        Rational power;
        if (peek('(')) {
            ++i_;
            power = rational_literal();
            expect(')');
        } else {
            power = Rational(signed_int());
        }
        if (power.get_den() != 1) {
            if (!rational_base) fail("fractional power needs a rational base");
            NumberExpr r;
            r.surds.push_back(SurdExpr{1, 0, *rational_base, power});
            return r;
        }
        if (!power.get_num().fits_slong_p() || abs(power.get_num()) > 10000) fail("power too large");
        const long n = power.get_num().get_si();
        NumberExpr r;
        for (const auto& s : e.surds) r.surds.push_back(surd_pow(s, n));
        for (const auto& o : e.others) r.others.push_back(pow_int(o, n));
        return r;
    }

    std::string text_;
    std::string s_;
    std::size_t i_ = 0;
};

} // namespace

NumberExpr parse_number(const std::string& text) { return Parser(text).parse(); }

} // namespace mahler
