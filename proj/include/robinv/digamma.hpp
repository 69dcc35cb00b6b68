#pragma once

// Rigorous enclosures of the digamma and trigamma functions. Arguments are
// shifted upward by the recurrences psi(x+1) = psi(x) + 1/x and
// psi'(x+1) = psi'(x) - 1/x^2 into the asymptotic regime, where the
// divergent series is truncated with the first omitted Bernoulli term
// bounding the error (alternating envelope).

#include <gmpxx.h>

#include <cstddef>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "robinv/interval.hpp"

namespace robinv {

// B_{2n} as an exact rational, cached; B_0 = 1
inline const mpq_class& bernoulli_even(std::size_t n) {
    static std::mutex mu;
    static std::vector<mpq_class> all = {mpq_class(1), mpq_class(-1, 2)};
    static std::vector<mpq_class> even = {mpq_class(1)};
    std::lock_guard<std::mutex> lk(mu);
    while (even.size() <= n) {
        // B_m = -1/(m+1) * sum_{i=0}^{m-1} C(m+1, i) B_i
        std::size_t m = all.size();
        mpq_class s = 0;
        mpz_class binom;
        for (std::size_t i = 0; i < m; ++i) {
            if (all[i] == 0) continue;
            mpz_bin_uiui(binom.get_mpz_t(), m + 1, i);
            s += mpq_class(binom) * all[i];
        }
        mpq_class bm = -s / mpq_class(m + 1);
        bm.canonicalize();
        all.push_back(bm);
        if (m % 2 == 0) even.push_back(bm);
    }
    return even[n];
}

namespace detail {

// Asymptotic tail common to psi and psi'. Returns the enclosure of
//   psi(t)  = log t - 1/(2t) - sum_{n>=1} B_{2n}/(2n t^{2n})
//   psi'(t) = 1/t + 1/(2t^2) + sum_{n>=1} B_{2n}/t^{2n+1}
// for exact rational t >= 10, truncated with first-omitted-term error bars.
inline RealInterval psi_asymptotic(const mpq_class& t, Prec prec, bool derivative) {
    const Prec wp = prec + 32;
    RealInterval ti = RealInterval::exact(t, wp);
    RealInterval t2 = ti * ti;
    RealInterval inv_t2 = inv(t2);

    RealInterval acc(wp);
    if (!derivative) {
        acc = log(ti) - inv(RealInterval::exact(2L, wp) * ti);
    } else {
        acc = inv(ti) + inv(t2 * RealInterval::exact(2L, wp));
    }

    // running power: psi uses 1/t^{2n}, psi' uses 1/t^{2n+1}
    RealInterval pw = derivative ? inv(t2 * ti) : inv_t2;
    mpfr_t err, cand;
    mpfr_init2(err, wp);
    mpfr_init2(cand, wp);
    mpfr_set_inf(err, 1);

    const double target_exp = -static_cast<double>(prec) - 8;
    for (std::size_t n = 1;; ++n) {
        const mpq_class& b = bernoulli_even(n);
        RealInterval term = RealInterval::exact(b, wp) * pw;
        if (!derivative)
            term = term / RealInterval::exact(static_cast<long>(2 * n), wp);
        // magnitude of this term (upper bound)
        mpfr_abs(cand, term.lo(), MPFR_RNDU);
        mpfr_t a2;
        mpfr_init2(a2, wp);
        mpfr_abs(a2, term.hi(), MPFR_RNDU);
        mpfr_max(cand, cand, a2, MPFR_RNDU);
        mpfr_clear(a2);
        if (mpfr_cmp(cand, err) > 0) {
            // series started diverging: this term is omitted and its
            // magnitude bounds the remainder
            mpfr_set(err, cand, MPFR_RNDU);
            break;
        }
        mpfr_set(err, cand, MPFR_RNDU);
        if (!derivative)
            acc = acc - term;
        else
            acc = acc + term;
        pw = pw * inv_t2;
        // stop once the NEXT term bound is small enough: approximate by the
        // current term times 1/t^2, checked exactly on the next iteration;
        // here we simply stop when this term is already below target
        if (mpfr_zero_p(cand) ||
            mpfr_get_exp(cand) < static_cast<mpfr_exp_t>(target_exp)) {
            // widen by the first omitted term's magnitude bound
            RealInterval next = RealInterval::exact(bernoulli_even(n + 1), wp) * pw;
            if (!derivative)
                next = next / RealInterval::exact(static_cast<long>(2 * n + 2), wp);
            mpfr_abs(cand, next.lo(), MPFR_RNDU);
            mpfr_init2(a2, wp);
            mpfr_abs(a2, next.hi(), MPFR_RNDU);
            mpfr_max(cand, cand, a2, MPFR_RNDU);
            mpfr_clear(a2);
            mpfr_set(err, cand, MPFR_RNDU);
            break;
        }
    }
    mpfr_sub(acc.lo(), acc.lo(), err, MPFR_RNDD);
    mpfr_add(acc.hi(), acc.hi(), err, MPFR_RNDU);
    mpfr_clear(err);
    mpfr_clear(cand);
    return acc;
}

}  // namespace detail

// psi(x) for exact rational x > 0
inline RealInterval digamma(const mpq_class& x, Prec prec) {
    if (x <= 0) throw std::domain_error("digamma: x must be > 0");
    const Prec wp = prec + 32;
    // shift into the asymptotic regime; higher precision needs larger shift
    long x0 = std::max<long>(10, static_cast<long>(prec / 6));
    mpq_class shift_to(x0);
    RealInterval correction(wp);  // sum of 1/(x+i) over the shift
    mpq_class t = x;
    while (t < shift_to) {
        correction = correction + inv(RealInterval::exact(t, wp));
        t += 1;
    }
    return detail::psi_asymptotic(t, prec, false) - correction;
}

// psi'(x) for exact rational x > 0
inline RealInterval trigamma(const mpq_class& x, Prec prec) {
    if (x <= 0) throw std::domain_error("trigamma: x must be > 0");
    const Prec wp = prec + 32;
    long x0 = std::max<long>(10, static_cast<long>(prec / 6));
    mpq_class shift_to(x0);
    RealInterval correction(wp);  // sum of 1/(x+i)^2 over the shift
    mpq_class t = x;
    while (t < shift_to) {
        RealInterval ti = RealInterval::exact(t, wp);
        correction = correction + inv(ti * ti);
        t += 1;
    }
    return detail::psi_asymptotic(t, prec, true) + correction;
}

}  // namespace robinv
