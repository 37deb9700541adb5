#pragma once

// Minimal RAII wrapper over MPFR used by the numerical root finder.

#include "mahler/polycore/integer.hpp"

#include <mpfr.h>

namespace mahler::detail {

class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    void set(const Integer& z) { mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN); }
    void set(const Rational& q) { mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }
    void set(double d) { mpfr_set_d(v_, d, MPFR_RNDN); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    // Exact value of the binary float.
    Rational exact() const {
        if (mpfr_zero_p(v_)) return Rational(0);
        Integer m;
        const mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
        Rational r(m);
        return r * pow2(e);
    }

private:
    mpfr_t v_;
};

} // namespace mahler::detail
