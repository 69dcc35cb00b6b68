#pragma once

// Exact integer arithmetic: factorization, multiplicative functions, prime
// generation, primorials, k-free tests, Chebyshev theta and a segmented
// sum-of-divisors sieve.

#include <gmpxx.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <deque>
#include <numeric>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "robinv/interval.hpp"

namespace robinv {

// ---------------------------------------------------------------------------
// Prime generation

inline std::vector<std::uint64_t> sieve_primes(std::uint64_t limit) {
    std::vector<std::uint64_t> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i * i <= limit; ++i)
        if (!composite[i])
            for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    for (std::uint64_t i = 2; i <= limit; ++i)
        if (!composite[i]) primes.push_back(i);
    return primes;
}

namespace detail {

// Shared extendable prime table. Readers copy-free access the current
// snapshot; extension swaps in a larger table under a mutex.
class PrimeTable {
public:
    static PrimeTable& instance() {
        static PrimeTable t;
        return t;
    }

    // Primes up to at least `limit`; the returned reference stays valid for
    // the program lifetime (tables are never shrunk, old ones retained).
    const std::vector<std::uint64_t>& upto(std::uint64_t limit) {
        std::lock_guard<std::mutex> lk(mu_);
        if (limit_ < limit) {
            std::uint64_t target = std::max<std::uint64_t>(limit, limit_ * 2);
            tables_.push_back(sieve_primes(target));
            limit_ = target;
        }
        return tables_.back();
    }

    std::uint64_t nth(std::size_t k) {
        if (k == 0) throw std::invalid_argument("nth_prime: k must be >= 1");
        // p_k < k(log k + log log k) for k >= 6
        double kd = static_cast<double>(std::max<std::size_t>(k, 6));
        auto bound = static_cast<std::uint64_t>(
            kd * (std::log(kd) + std::log(std::log(kd))) + 16);
        for (;;) {
            const auto& t = upto(bound);
            if (t.size() >= k) return t[k - 1];
            bound *= 2;
        }
    }

private:
    PrimeTable() { tables_.push_back(sieve_primes(1 << 16)); limit_ = 1 << 16; }

    std::mutex mu_;
    // deque: growth never invalidates references handed out earlier
    std::deque<std::vector<std::uint64_t>> tables_;
    std::atomic<std::uint64_t> limit_{0};
};

}  // namespace detail

inline std::uint64_t nth_prime(std::size_t k) {
    return detail::PrimeTable::instance().nth(k);
}

// ---------------------------------------------------------------------------
// Deterministic 64-bit primality (Miller-Rabin with a fixed base set that is
// known exact for all n < 2^64) and Pollard rho factor splitting.

namespace detail {

inline std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod64(r, a, m);
        a = mulmod64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace detail

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = detail::powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = detail::mulmod64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

namespace detail {

inline std::uint64_t pollard_rho(std::uint64_t n) {
    if ((n & 1) == 0) return 2;
    std::uint64_t c = 1;
    for (;;) {
        std::uint64_t x = 2, y = 2, d = 1;
        auto f = [&](std::uint64_t v) { return (mulmod64(v, v, n) + c) % n; };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            std::uint64_t diff = x > y ? x - y : y - x;
            d = std::gcd(diff, n);
        }
        if (d != n) return d;
        ++c;
    }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Factorization

struct Factorization {
    // (prime, exponent), primes strictly increasing; empty list is n = 1
    std::vector<std::pair<std::uint64_t, unsigned>> pairs;

    mpz_class value() const {
        mpz_class v = 1;
        for (const auto& [p, e] : pairs) {
            mpz_class pe;
            mpz_ui_pow_ui(pe.get_mpz_t(), p, e);
            v *= pe;
        }
        return v;
    }

    bool canonical() const {
        std::uint64_t prev = 0;
        for (const auto& [p, e] : pairs) {
            if (p <= prev || e == 0 || !is_prime_u64(p)) return false;
            prev = p;
        }
        return true;
    }
};

inline Factorization factor(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factor: n must be >= 1");
    Factorization f;
    if (n == 1) return f;
    // trial division by the shared table, rho fallback for large cofactors
    static constexpr std::uint64_t kTrialBound = 1 << 16;
    const auto& small = detail::PrimeTable::instance().upto(kTrialBound);
    std::vector<std::uint64_t> factors;
    for (std::uint64_t p : small) {
        if (p * p > n) break;
        while (n % p == 0) { factors.push_back(p); n /= p; }
    }
    // remaining cofactor: prime, or split recursively by rho
    std::vector<std::uint64_t> stack;
    if (n > 1) stack.push_back(n);
    while (!stack.empty()) {
        std::uint64_t m = stack.back();
        stack.pop_back();
        if (is_prime_u64(m)) {
            factors.push_back(m);
        } else {
            std::uint64_t d = detail::pollard_rho(m);
            stack.push_back(d);
            stack.push_back(m / d);
        }
    }
    std::sort(factors.begin(), factors.end());
    for (std::uint64_t p : factors) {
        if (!f.pairs.empty() && f.pairs.back().first == p)
            ++f.pairs.back().second;
        else
            f.pairs.emplace_back(p, 1u);
    }
    return f;
}

// ---------------------------------------------------------------------------
// Multiplicative functions

// sigma(p^e) = (p^{e+1} - 1)/(p - 1), exact integer geometric sum
inline mpz_class sigma(const Factorization& f) {
    mpz_class s = 1;
    for (const auto& [p, e] : f.pairs) {
        mpz_class pe1;
        mpz_ui_pow_ui(pe1.get_mpz_t(), p, e + 1);
        s *= (pe1 - 1) / (mpz_class(p) - 1);
    }
    return s;
}

inline mpz_class phi(const Factorization& f) {
    mpz_class t = 1;
    for (const auto& [p, e] : f.pairs) {
        mpz_class pe;
        mpz_ui_pow_ui(pe.get_mpz_t(), p, e - 1);
        t *= pe * (mpz_class(p) - 1);
    }
    return t;
}

inline mpq_class abundancy(const Factorization& f) {
    mpq_class q(sigma(f), f.value());
    q.canonicalize();
    return q;
}

inline mpq_class abundancy(std::uint64_t n) { return abundancy(factor(n)); }

// n/phi(n) as an exact reduced rational
inline mpq_class n_over_phi(const Factorization& f) {
    mpq_class q(f.value(), phi(f));
    q.canonicalize();
    return q;
}

// ---------------------------------------------------------------------------
// Primorials

inline mpz_class primorial(std::size_t k) {
    if (k == 0) throw std::invalid_argument("primorial: k must be >= 1");
    mpz_class v = 1;
    for (std::size_t i = 1; i <= k; ++i) v *= nth_prime(i);
    return v;
}

// p_k# / p_j for j <= k
inline mpz_class primorial_over(std::size_t k, std::size_t j) {
    if (j == 0 || j > k)
        throw std::invalid_argument("primorial_over: requires 1 <= j <= k");
    mpz_class v = 1;
    for (std::size_t i = 1; i <= k; ++i)
        if (i != j) v *= nth_prime(i);
    return v;
}

inline Factorization primorial_factorization(std::size_t k) {
    Factorization f;
    for (std::size_t i = 1; i <= k; ++i) f.pairs.emplace_back(nth_prime(i), 1u);
    return f;
}

// ---------------------------------------------------------------------------
// k-free test: every exponent < k

inline bool is_k_free(std::uint64_t n, unsigned k) {
    if (k < 2) throw std::invalid_argument("is_k_free: k must be >= 2");
    Factorization f = factor(n);
    for (const auto& [p, e] : f.pairs)
        if (e >= k) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Chebyshev theta(x) = sum of log p over primes p <= x

inline RealInterval chebyshev_theta(double x, Prec prec) {
    if (x < 2) throw std::invalid_argument("chebyshev_theta: x must be >= 2");
    auto limit = static_cast<std::uint64_t>(x);
    const auto& primes = detail::PrimeTable::instance().upto(limit);
    RealInterval sum(prec);
    mpfr_t t;
    mpfr_init2(t, prec);
    for (std::uint64_t p : primes) {
        if (p > limit) break;
        mpfr_set_uj(t, p, MPFR_RNDD);
        mpfr_log(t, t, MPFR_RNDD);
        mpfr_add(sum.lo(), sum.lo(), t, MPFR_RNDD);
        mpfr_set_uj(t, p, MPFR_RNDU);
        mpfr_log(t, t, MPFR_RNDU);
        mpfr_add(sum.hi(), sum.hi(), t, MPFR_RNDU);
    }
    mpfr_clear(t);
    return sum;
}

// theta over an explicit prime list (e.g. the primes of a primorial)
inline RealInterval log_product_of_primes(const std::vector<std::uint64_t>& primes,
                                          Prec prec) {
    RealInterval sum(prec);
    mpfr_t t;
    mpfr_init2(t, prec);
    for (std::uint64_t p : primes) {
        mpfr_set_uj(t, p, MPFR_RNDD);
        mpfr_log(t, t, MPFR_RNDD);
        mpfr_add(sum.lo(), sum.lo(), t, MPFR_RNDD);
        mpfr_set_uj(t, p, MPFR_RNDU);
        mpfr_log(t, t, MPFR_RNDU);
        mpfr_add(sum.hi(), sum.hi(), t, MPFR_RNDU);
    }
    mpfr_clear(t);
    return sum;
}

// ---------------------------------------------------------------------------
// Segmented sum-of-divisors sieve.
//
// For one segment [lo, hi]: divide out every base prime p <= sqrt(hi) from
// each multiple, accumulating sigma multiplicatively; a remaining cofactor
// > 1 is a single prime factor. Exact in uint64 for hi <= ~1e18.

inline std::vector<std::uint64_t> sigma_segment(
    std::uint64_t lo, std::uint64_t hi,
    const std::vector<std::uint64_t>& base_primes) {
    if (lo < 1 || lo > hi) throw std::invalid_argument("sigma_segment: bad range");
    const std::size_t len = static_cast<std::size_t>(hi - lo + 1);
    std::vector<std::uint64_t> rem(len), sig(len, 1);
    for (std::size_t i = 0; i < len; ++i) rem[i] = lo + i;
    for (std::uint64_t p : base_primes) {
        if (p * p > hi) break;
        std::uint64_t first = ((lo + p - 1) / p) * p;
        for (std::uint64_t m = first; m <= hi; m += p) {
            std::size_t i = static_cast<std::size_t>(m - lo);
            std::uint64_t pe = 1, geo = 1;
            while (rem[i] % p == 0) {
                rem[i] /= p;
                pe *= p;
                geo += pe;
            }
            sig[i] *= geo;
        }
    }
    for (std::size_t i = 0; i < len; ++i)
        if (rem[i] > 1) sig[i] *= rem[i] + 1;
    if (lo == 1) sig[0] = 1;
    return sig;
}

// Streams (n, sigma(n)) over [lo, hi] in order.
inline void sigma_sieve(std::uint64_t lo, std::uint64_t hi,
                        const std::function<void(std::uint64_t, std::uint64_t)>& fn,
                        std::uint64_t segment_size = 1 << 16) {
    if (lo < 1 || lo > hi) throw std::invalid_argument("sigma_sieve: bad range");
    if (segment_size == 0) throw std::invalid_argument("sigma_sieve: zero segment");
    auto sqrt_hi = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(hi))) + 2;
    const auto& base = detail::PrimeTable::instance().upto(sqrt_hi);
    for (std::uint64_t seg_lo = lo; seg_lo <= hi;) {
        std::uint64_t seg_hi = std::min(hi, seg_lo + segment_size - 1);
        auto sig = sigma_segment(seg_lo, seg_hi, base);
        for (std::uint64_t n = seg_lo; n <= seg_hi; ++n)
            fn(n, sig[static_cast<std::size_t>(n - seg_lo)]);
        if (seg_hi == hi) break;
        seg_lo = seg_hi + 1;
    }
}

}  // namespace robinv
