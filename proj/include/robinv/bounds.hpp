#pragma once

// The named bound functions used by the divisibility-family arguments:
// A(k), B(k), C(k), C-hat, C-tilde, D(k), E_j, b(k), b-tilde(k), the
// Mertens-sum bound and the explicit nth-prime bounds. Exact rationals
// where cheap, rigorous intervals otherwise.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "robinv/arith.hpp"
#include "robinv/decide.hpp"
#include "robinv/interval.hpp"

namespace robinv {

struct FamilyParams {
    unsigned j = 1;  // index of the excluded prime p_j, in {1,2,3}
    std::size_t k = 1;

    void validate() const {
        if (j < 1 || j > 3) throw std::invalid_argument("FamilyParams: j must be in {1,2,3}");
        if (k < 1) throw std::invalid_argument("FamilyParams: k must be >= 1");
        if (j > k + 1) throw std::invalid_argument("FamilyParams: j must be <= k+1");
    }
};

namespace detail {

// index set {1..k+1} \ {j}
inline std::vector<std::size_t> family_indices(const FamilyParams& p) {
    std::vector<std::size_t> idx;
    idx.reserve(p.k);
    for (std::size_t l = 1; l <= p.k + 1; ++l)
        if (l != p.j) idx.push_back(l);
    return idx;
}

}  // namespace detail

// A(k) = prod (p_l + 1)/p_l over {1..k+1} \ {j}
inline mpq_class A_exact(const FamilyParams& p) {
    p.validate();
    mpq_class a = 1;
    for (std::size_t l : detail::family_indices(p)) {
        std::uint64_t pl = nth_prime(l);
        a *= mpq_class(pl + 1, pl);
    }
    a.canonicalize();
    return a;
}

// B(k) = prod p_l^2/(p_l^2 - 1) over the same index set
inline mpq_class B_exact(const FamilyParams& p) {
    p.validate();
    mpq_class b = 1;
    for (std::size_t l : detail::family_indices(p)) {
        mpz_class pl(static_cast<unsigned long>(nth_prime(l)));
        b *= mpq_class(pl * pl, pl * pl - 1);
    }
    b.canonicalize();
    return b;
}

// A(k) <= log(p_{k+1}) exp(c1 - 1/p_j + 5/log(p_{k+1}))
inline RealInterval A_upper(const FamilyParams& p, Prec prec) {
    p.validate();
    std::uint64_t pk1 = nth_prime(p.k + 1);
    RealInterval logp = log(RealInterval::exact(pk1, prec));
    RealInterval arg = const_c1(prec) -
                       RealInterval::exact(mpq_class(1, nth_prime(p.j)), prec) +
                       RealInterval::exact(5L, prec) / logp;
    return logp * exp(arg);
}

// (lower, upper) with lower < p_k < upper for k >= 6:
// k(log k + log log k - 1) and k(log k + log log k)
inline std::pair<RealInterval, RealInterval> prime_bounds(std::size_t k, Prec prec) {
    if (k < 6) throw std::invalid_argument("prime_bounds: k must be >= 6");
    RealInterval ki = RealInterval::exact(static_cast<std::uint64_t>(k), prec);
    RealInterval lk = log(ki);
    RealInterval llk = log(lk);
    RealInterval one = RealInterval::exact(1L, prec);
    return {ki * (lk + llk - one), ki * (lk + llk)};
}

namespace detail {

// f(k) = (k+1)(log(k+1) + log log(k+1)); with_minus_one subtracts 1 inside
inline RealInterval f_of(std::size_t k, Prec prec, bool with_minus_one) {
    if (k < 2) throw std::domain_error("bound functions require k >= 2");
    RealInterval k1 = RealInterval::exact(static_cast<std::uint64_t>(k + 1), prec);
    RealInterval lk = log(k1);
    RealInterval llk = log(lk);
    RealInterval inner = lk + llk;
    if (with_minus_one) inner = inner - RealInterval::exact(1L, prec);
    return k1 * inner;
}

}  // namespace detail

// C-hat(k) = exp(5/log((k+1)(log(k+1)+log log(k+1)-1))); independent of j
inline RealInterval C_hat(std::size_t k, Prec prec) {
    RealInterval fm1 = detail::f_of(k, prec, true);
    return exp(RealInterval::exact(5L, prec) / log(fm1));
}

// C-tilde(k) = log(f(k)) * C-hat(k)
inline RealInterval C_tilde(std::size_t k, Prec prec) {
    return log(detail::f_of(k, prec, false)) * C_hat(k, prec);
}

// C(k) = C-tilde(k) * exp(c1 - 1/p_j)
inline RealInterval C_of(const FamilyParams& p, Prec prec) {
    p.validate();
    RealInterval arg = const_c1(prec) -
                       RealInterval::exact(mpq_class(1, nth_prime(p.j)), prec);
    return C_tilde(p.k, prec) * exp(arg);
}

// D(k) = log((k+1)(log(k+1)+log log(k+1)-1) log(2.51) - log(p_j))
struct DResult {
    RealInterval value;
    bool lemma_valid;  // the lower-bound lemma requires k >= 99
};

inline DResult D_of(const FamilyParams& p, Prec prec) {
    p.validate();
    RealInterval fm1 = detail::f_of(p.k, prec, true);
    RealInterval arg =
        fm1 * log_2_51(prec) - log(RealInterval::exact(nth_prime(p.j), prec));
    return {log(arg), p.k >= 99};
}

// Certifies log log m > D(k) for m = p_{k+1}#/p_j, with log m obtained as
// theta(p_{k+1}) - log(p_j) from the exact prime list.
inline bool certify_D(const FamilyParams& p, Prec prec) {
    DResult d = D_of(p, prec);
    if (!d.lemma_valid) return false;
    std::vector<std::uint64_t> primes;
    for (std::size_t l = 1; l <= p.k + 1; ++l)
        if (l != p.j) primes.push_back(nth_prime(l));
    RealInterval loglog_m = log(log_product_of_primes(primes, prec));
    return strictly_above(loglog_m, d.value);
}

// E_j = 6 p_j^2 e^{gamma - c1 + 1/p_j} / (pi^2 (p_j^2 - 1))
inline RealInterval E_of(unsigned j, Prec prec) {
    if (j < 1 || j > 3) throw std::invalid_argument("E_of: j must be in {1,2,3}");
    std::uint64_t pj = nth_prime(j);
    mpq_class pj2(static_cast<unsigned long>(pj * pj));
    RealInterval arg = const_gamma(prec) - const_c1(prec) +
                       RealInterval::exact(mpq_class(1, pj), prec);
    RealInterval num = RealInterval::exact(mpq_class(6) * pj2, prec) * exp(arg);
    RealInterval den =
        pi_squared(prec) * RealInterval::exact(mpq_class(pj2 - 1), prec);
    return num / den;
}

// Threshold values that overflow any plain float for moderate k are carried
// in log form; the plain value is attached when it is representable.
struct LogScaled {
    RealInterval log_value;
    std::optional<RealInterval> value;
};

namespace detail {

inline std::optional<RealInterval> try_exp(const RealInterval& lg) {
    // mpfr exponents span far beyond doubles; refuse only truly huge logs
    if (mpfr_cmp_d(lg.hi(), 1e15) >= 0) return std::nullopt;
    return exp(lg);
}

}  // namespace detail

// b(k): log b(k) = exp(sqrt(2.51 (2^{k+1}-1)/e^gamma)) - k log 2
inline LogScaled b_of(std::size_t k, Prec prec) {
    if (k < 1) throw std::invalid_argument("b_of: k must be >= 1");
    mpz_class pow2k1 = (mpz_class(1) << (k + 1)) - 1;
    RealInterval arg =
        RealInterval::exact(mpq_class(251, 100), prec) *
        RealInterval::exact(mpq_class(pow2k1), prec) / exp_gamma(prec);
    RealInterval lg =
        exp(sqrt(arg)) -
        RealInterval::exact(static_cast<std::uint64_t>(k), prec) *
            log(RealInterval::exact(2L, prec));
    return {lg, detail::try_exp(lg)};
}

// log(2^k b-tilde(k)) = exp((0.0168 (2^{k+1}-1)/e^gamma)^{1/3})
inline LogScaled b_tilde_of(std::size_t k, Prec prec) {
    if (k < 1) throw std::invalid_argument("b_tilde_of: k must be >= 1");
    mpz_class pow2k1 = (mpz_class(1) << (k + 1)) - 1;
    RealInterval arg =
        RealInterval::exact(mpq_class(21, 1250), prec) *
        RealInterval::exact(mpq_class(pow2k1), prec) / exp_gamma(prec);
    RealInterval lg = exp(cube_root(arg));
    return {lg, detail::try_exp(lg)};
}

// sum_{l=1}^{k+1} 1/p_l  <  log log p_{k+1} + c1 + 5/log p_{k+1}
inline Verdict mertens_upper_check(std::size_t k, Prec prec) {
    if (k < 1) throw std::invalid_argument("mertens_upper_check: k must be >= 1");
    RealInterval sum(prec);
    // interval accumulation keeps denominators bounded at large k
    mpfr_t t;
    mpfr_init2(t, prec);
    for (std::size_t l = 1; l <= k + 1; ++l) {
        std::uint64_t pl = nth_prime(l);
        mpfr_set_uj(t, pl, MPFR_RNDU);
        mpfr_ui_div(t, 1, t, MPFR_RNDD);
        mpfr_add(sum.lo(), sum.lo(), t, MPFR_RNDD);
        mpfr_set_uj(t, pl, MPFR_RNDD);
        mpfr_ui_div(t, 1, t, MPFR_RNDU);
        mpfr_add(sum.hi(), sum.hi(), t, MPFR_RNDU);
    }
    mpfr_clear(t);
    RealInterval logp = log(RealInterval::exact(nth_prime(k + 1), prec));
    RealInterval bound =
        log(logp) + const_c1(prec) + RealInterval::exact(5L, prec) / logp;
    if (strictly_below(sum, bound)) return {VerdictKind::Holds, static_cast<unsigned>(prec)};
    if (strictly_above(sum, bound)) return {VerdictKind::Fails, static_cast<unsigned>(prec)};
    return {VerdictKind::Undecidable, static_cast<unsigned>(prec)};
}

// One row of the bounds table exposed by the CLI.
struct BoundRow {
    std::size_t k = 0;
    unsigned j = 0;
    mpq_class A;
    mpq_class B;
    RealInterval C;
    std::optional<RealInterval> D;  // absent when D(k)'s argument is not positive
    RealInterval E;
    RealInterval b_log;
    RealInterval b_tilde_log;
};

inline BoundRow bound_row(const FamilyParams& p, Prec prec) {
    p.validate();
    std::optional<RealInterval> d;
    try {
        d = D_of(p, prec).value;
    } catch (const std::domain_error&) {
        // small k: (k+1)(log(k+1)+loglog(k+1)-1) log 2.51 <= log p_j
    }
    return {p.k,
            p.j,
            A_exact(p),
            B_exact(p),
            C_of(p, prec),
            std::move(d),
            E_of(p.j, prec),
            b_of(p.k, prec).log_value,
            b_tilde_of(p.k, prec).log_value};
}

}  // namespace robinv
