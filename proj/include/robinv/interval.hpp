#pragma once

// Directed-rounding interval arithmetic over MPFR. Every operation rounds
// the lower endpoint toward -inf and the upper endpoint toward +inf, so an
// interval always encloses the exact image of its inputs.

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace robinv {

using Prec = mpfr_prec_t;

class RealInterval {
public:
    explicit RealInterval(Prec prec) : prec_(check_prec(prec)) {
        mpfr_init2(lo_, prec_);
        mpfr_init2(hi_, prec_);
        mpfr_set_zero(lo_, 1);
        mpfr_set_zero(hi_, 1);
    }

    RealInterval(const RealInterval& o) : prec_(o.prec_) {
        mpfr_init2(lo_, prec_);
        mpfr_init2(hi_, prec_);
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }

    RealInterval(RealInterval&& o) noexcept : prec_(o.prec_) {
        mpfr_init2(lo_, prec_);
        mpfr_init2(hi_, prec_);
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
    }

    RealInterval& operator=(RealInterval o) noexcept {
        std::swap(prec_, o.prec_);
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
        return *this;
    }

    ~RealInterval() {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }

    static RealInterval exact(const mpq_class& q, Prec prec) {
        RealInterval r(prec);
        mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
        return r;
    }

    static RealInterval exact(const mpz_class& z, Prec prec) {
        RealInterval r(prec);
        mpfr_set_z(r.lo_, z.get_mpz_t(), MPFR_RNDD);
        mpfr_set_z(r.hi_, z.get_mpz_t(), MPFR_RNDU);
        return r;
    }

    static RealInterval exact(long v, Prec prec) {
        RealInterval r(prec);
        mpfr_set_si(r.lo_, v, MPFR_RNDD);
        mpfr_set_si(r.hi_, v, MPFR_RNDU);
        return r;
    }

    static RealInterval exact(std::uint64_t v, Prec prec) {
        RealInterval r(prec);
        mpfr_set_uj(r.lo_, v, MPFR_RNDD);
        mpfr_set_uj(r.hi_, v, MPFR_RNDU);
        return r;
    }

    // [a, b] from two decimal strings; the string values are rounded outward.
    static RealInterval from_strings(const char* a, const char* b, Prec prec) {
        RealInterval r(prec);
        mpfr_set_str(r.lo_, a, 10, MPFR_RNDD);
        mpfr_set_str(r.hi_, b, 10, MPFR_RNDU);
        if (mpfr_nan_p(r.lo_) || mpfr_nan_p(r.hi_))
            throw std::invalid_argument("RealInterval::from_strings: bad literal");
        return r;
    }

    mpfr_srcptr lo() const { return lo_; }
    mpfr_srcptr hi() const { return hi_; }
    mpfr_ptr lo() { return lo_; }
    mpfr_ptr hi() { return hi_; }
    Prec prec() const { return prec_; }

    double lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }

    bool contains(const mpq_class& q) const {
        return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 &&
               mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
    }

    bool contains(const RealInterval& o) const {
        return mpfr_cmp(lo_, o.lo_) <= 0 && mpfr_cmp(hi_, o.hi_) >= 0;
    }

    bool contains_zero() const {
        return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
    }

    bool is_positive() const { return mpfr_sgn(lo_) > 0; }
    bool is_negative() const { return mpfr_sgn(hi_) < 0; }

    // hi - lo rounded up
    RealInterval width() const {
        RealInterval w(prec_);
        mpfr_sub(w.hi_, hi_, lo_, MPFR_RNDU);
        mpfr_set(w.lo_, w.hi_, MPFR_RNDD);
        return w;
    }

    double width_d() const {
        mpfr_t w;
        mpfr_init2(w, prec_);
        mpfr_sub(w, hi_, lo_, MPFR_RNDU);
        double d = mpfr_get_d(w, MPFR_RNDU);
        mpfr_clear(w);
        return d;
    }

    void check_valid() const {
        if (mpfr_nan_p(lo_) || mpfr_nan_p(hi_) || !mpfr_number_p(lo_) ||
            !mpfr_number_p(hi_) || mpfr_cmp(lo_, hi_) > 0)
            throw std::logic_error("RealInterval: invalid enclosure");
    }

private:
    static Prec check_prec(Prec p) {
        if (p < MPFR_PREC_MIN) throw std::invalid_argument("precision too small");
        return p;
    }

    mpfr_t lo_;
    mpfr_t hi_;
    Prec prec_;
};

namespace detail {

inline Prec join_prec(const RealInterval& a, const RealInterval& b) {
    return std::max(a.prec(), b.prec());
}

}  // namespace detail

inline RealInterval operator+(const RealInterval& a, const RealInterval& b) {
    RealInterval r(detail::join_prec(a, b));
    mpfr_add(r.lo(), a.lo(), b.lo(), MPFR_RNDD);
    mpfr_add(r.hi(), a.hi(), b.hi(), MPFR_RNDU);
    return r;
}

inline RealInterval operator-(const RealInterval& a, const RealInterval& b) {
    RealInterval r(detail::join_prec(a, b));
    mpfr_sub(r.lo(), a.lo(), b.hi(), MPFR_RNDD);
    mpfr_sub(r.hi(), a.hi(), b.lo(), MPFR_RNDU);
    return r;
}

inline RealInterval operator-(const RealInterval& a) {
    RealInterval r(a.prec());
    mpfr_neg(r.lo(), a.hi(), MPFR_RNDD);
    mpfr_neg(r.hi(), a.lo(), MPFR_RNDU);
    return r;
}

inline RealInterval operator*(const RealInterval& a, const RealInterval& b) {
    const Prec p = detail::join_prec(a, b);
    RealInterval r(p);
    mpfr_t t;
    mpfr_init2(t, p);
    // lo: min of the four endpoint products rounded down
    mpfr_mul(r.lo(), a.lo(), b.lo(), MPFR_RNDD);
    mpfr_mul(t, a.lo(), b.hi(), MPFR_RNDD);
    mpfr_min(r.lo(), r.lo(), t, MPFR_RNDD);
    mpfr_mul(t, a.hi(), b.lo(), MPFR_RNDD);
    mpfr_min(r.lo(), r.lo(), t, MPFR_RNDD);
    mpfr_mul(t, a.hi(), b.hi(), MPFR_RNDD);
    mpfr_min(r.lo(), r.lo(), t, MPFR_RNDD);
    // hi: max of the four rounded up
    mpfr_mul(r.hi(), a.lo(), b.lo(), MPFR_RNDU);
    mpfr_mul(t, a.lo(), b.hi(), MPFR_RNDU);
    mpfr_max(r.hi(), r.hi(), t, MPFR_RNDU);
    mpfr_mul(t, a.hi(), b.lo(), MPFR_RNDU);
    mpfr_max(r.hi(), r.hi(), t, MPFR_RNDU);
    mpfr_mul(t, a.hi(), b.hi(), MPFR_RNDU);
    mpfr_max(r.hi(), r.hi(), t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

inline RealInterval operator/(const RealInterval& a, const RealInterval& b) {
    if (b.contains_zero())
        throw std::domain_error("interval division by interval containing 0");
    const Prec p = detail::join_prec(a, b);
    RealInterval r(p);
    mpfr_t t;
    mpfr_init2(t, p);
    mpfr_div(r.lo(), a.lo(), b.lo(), MPFR_RNDD);
    mpfr_div(t, a.lo(), b.hi(), MPFR_RNDD);
    mpfr_min(r.lo(), r.lo(), t, MPFR_RNDD);
    mpfr_div(t, a.hi(), b.lo(), MPFR_RNDD);
    mpfr_min(r.lo(), r.lo(), t, MPFR_RNDD);
    mpfr_div(t, a.hi(), b.hi(), MPFR_RNDD);
    mpfr_min(r.lo(), r.lo(), t, MPFR_RNDD);
    mpfr_div(r.hi(), a.lo(), b.lo(), MPFR_RNDU);
    mpfr_div(t, a.lo(), b.hi(), MPFR_RNDU);
    mpfr_max(r.hi(), r.hi(), t, MPFR_RNDU);
    mpfr_div(t, a.hi(), b.lo(), MPFR_RNDU);
    mpfr_max(r.hi(), r.hi(), t, MPFR_RNDU);
    mpfr_div(t, a.hi(), b.hi(), MPFR_RNDU);
    mpfr_max(r.hi(), r.hi(), t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

inline RealInterval log(const RealInterval& x) {
    if (mpfr_sgn(x.lo()) <= 0)
        throw std::domain_error("interval log of interval touching 0");
    RealInterval r(x.prec());
    mpfr_log(r.lo(), x.lo(), MPFR_RNDD);
    mpfr_log(r.hi(), x.hi(), MPFR_RNDU);
    return r;
}

inline RealInterval exp(const RealInterval& x) {
    RealInterval r(x.prec());
    mpfr_exp(r.lo(), x.lo(), MPFR_RNDD);
    mpfr_exp(r.hi(), x.hi(), MPFR_RNDU);
    return r;
}

inline RealInterval sqrt(const RealInterval& x) {
    if (mpfr_sgn(x.lo()) < 0)
        throw std::domain_error("interval sqrt of negative interval");
    RealInterval r(x.prec());
    mpfr_sqrt(r.lo(), x.lo(), MPFR_RNDD);
    mpfr_sqrt(r.hi(), x.hi(), MPFR_RNDU);
    return r;
}

inline RealInterval cube_root(const RealInterval& x) {
    RealInterval r(x.prec());
    mpfr_cbrt(r.lo(), x.lo(), MPFR_RNDD);
    mpfr_cbrt(r.hi(), x.hi(), MPFR_RNDU);
    return r;
}

// x^n for nonnegative x; all uses in this library have positive bases
inline RealInterval pow_int(const RealInterval& x, unsigned long n) {
    if (mpfr_sgn(x.lo()) < 0)
        throw std::domain_error("pow_int requires a nonnegative base interval");
    RealInterval r(x.prec());
    mpfr_pow_ui(r.lo(), x.lo(), n, MPFR_RNDD);
    mpfr_pow_ui(r.hi(), x.hi(), n, MPFR_RNDU);
    return r;
}

inline RealInterval inv(const RealInterval& x) {
    if (x.contains_zero())
        throw std::domain_error("interval reciprocal of interval containing 0");
    RealInterval r(x.prec());
    mpfr_ui_div(r.lo(), 1, x.hi(), MPFR_RNDD);
    mpfr_ui_div(r.hi(), 1, x.lo(), MPFR_RNDU);
    return r;
}

// Strict ordering between enclosures: true only when every point of a is
// below every point of b.
inline bool strictly_below(const RealInterval& a, const RealInterval& b) {
    return mpfr_cmp(a.hi(), b.lo()) < 0;
}

inline bool strictly_above(const RealInterval& a, const RealInterval& b) {
    return mpfr_cmp(a.lo(), b.hi()) > 0;
}

inline bool strictly_below(const mpq_class& q, const RealInterval& b) {
    return mpfr_cmp_q(b.lo(), q.get_mpq_t()) > 0;
}

inline bool strictly_above(const mpq_class& q, const RealInterval& b) {
    return mpfr_cmp_q(b.hi(), q.get_mpq_t()) < 0;
}

// ---------------------------------------------------------------------------
// Constants.
// gamma and pi come from MPFR's correctly rounded built-ins. The Mertens
// constant has no MPFR primitive; it is frozen as a 75-digit literal checked
// against an independent series evaluation, widened by 1e-72 on both sides.

inline RealInterval const_gamma(Prec prec) {
    RealInterval r(prec);
    mpfr_const_euler(r.lo(), MPFR_RNDD);
    mpfr_const_euler(r.hi(), MPFR_RNDU);
    return r;
}

inline RealInterval const_pi(Prec prec) {
    RealInterval r(prec);
    mpfr_const_pi(r.lo(), MPFR_RNDD);
    mpfr_const_pi(r.hi(), MPFR_RNDU);
    return r;
}

// Mertens constant: sum over primes of [log(1-1/p) + 1/p], plus gamma.
inline RealInterval const_c1(Prec prec) {
    static const char* kMertens =
        "0.261497212847642783755426838608695859051566648261199206192064213924924"
        "510897";
    RealInterval r = RealInterval::from_strings(kMertens, kMertens, prec);
    RealInterval pad = RealInterval::from_strings("-1e-72", "1e-72", prec);
    return r + pad;
}

inline RealInterval exp_gamma(Prec prec) { return exp(const_gamma(prec)); }

inline RealInterval pi_squared(Prec prec) {
    RealInterval pi = const_pi(prec);
    return pi * pi;
}

inline RealInterval pi_squared_over_6(Prec prec) {
    return pi_squared(prec) / RealInterval::exact(6L, prec);
}

// log of an exact rational, e.g. log(2.51) = log(251/100)
inline RealInterval log_rational(const mpq_class& q, Prec prec) {
    return log(RealInterval::exact(q, prec));
}

inline RealInterval log_2_51(Prec prec) {
    return log_rational(mpq_class(251, 100), prec);
}

inline RealInterval log_10(Prec prec) {
    return log(RealInterval::exact(10L, prec));
}

}  // namespace robinv
