#pragma once

// Exact harmonic numbers, the digamma interpolation H(x), the H(x) bound
// lemma suite, monotonicity of exp(H_n)log(H_n)/n, and the Lagarias /
// Kaneko-Lagarias checks with the Robin implication.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "robinv/arith.hpp"
#include "robinv/decide.hpp"
#include "robinv/digamma.hpp"
#include "robinv/interval.hpp"
#include "robinv/report.hpp"
#include "robinv/robin.hpp"

namespace robinv {

struct HarmonicValue {
    std::uint64_t n = 0;
    mpq_class value;
};

inline mpq_class harmonic(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("harmonic: n must be >= 1");
    mpq_class h = 0;
    for (std::uint64_t k = 1; k <= n; ++k) h += mpq_class(1, k);
    return h;
}

// Incremental exact H_n for sweeps
class HarmonicAccumulator {
public:
    HarmonicAccumulator() : n_(1), h_(1) {}
    std::uint64_t n() const { return n_; }
    const mpq_class& value() const { return h_; }
    void advance() {
        ++n_;
        h_ += mpq_class(1, n_);
    }

private:
    std::uint64_t n_;
    mpq_class h_;
};

// Running interval enclosure of H_n at a fixed working precision; used by
// long sweeps where exact denominators would grow factorially.
class HarmonicIntervalAccumulator {
public:
    explicit HarmonicIntervalAccumulator(Prec prec) : h_(prec), n_(1) {
        mpfr_set_ui(h_.lo(), 1, MPFR_RNDD);
        mpfr_set_ui(h_.hi(), 1, MPFR_RNDU);
    }
    std::uint64_t n() const { return n_; }
    const RealInterval& value() const { return h_; }
    void advance() {
        ++n_;
        mpfr_t t;
        mpfr_init2(t, h_.prec());
        mpfr_set_uj(t, n_, MPFR_RNDU);
        mpfr_ui_div(t, 1, t, MPFR_RNDD);
        mpfr_add(h_.lo(), h_.lo(), t, MPFR_RNDD);
        mpfr_set_uj(t, n_, MPFR_RNDD);
        mpfr_ui_div(t, 1, t, MPFR_RNDU);
        mpfr_add(h_.hi(), h_.hi(), t, MPFR_RNDU);
        mpfr_clear(t);
    }

private:
    RealInterval h_;
    std::uint64_t n_;
};

struct RealPoint {
    mpq_class x;
    RealInterval H{64};
    RealInterval Hprime{64};
};

// H(x) = psi(x+1) + gamma, H'(x) = psi'(x+1)
inline RealPoint H_real(const mpq_class& x, Prec prec) {
    if (x < 1) throw std::domain_error("H_real: x must be >= 1");
    RealPoint p;
    p.x = x;
    p.H = digamma(x + 1, prec) + const_gamma(prec);
    p.Hprime = trigamma(x + 1, prec);
    return p;
}

namespace detail {

// Exact H_n feeds the exponential as a zero-width interval below this n;
// above it the digamma route encloses H_n instead.
constexpr std::uint64_t kExactHarmonicReach = 20000;

inline RealInterval H_enclosure(const mpz_class& n, Prec prec) {
    return digamma(mpq_class(n + 1), prec) + const_gamma(prec);
}

// exp(H) log(H); H must be >= 1
inline RealInterval kl_rhs_from_H(const RealInterval& H) {
    return exp(H) * log(H);
}

}  // namespace detail

// sigma(n) < H_n + exp(H_n) log(H_n), stated for all n >= 1
inline InequalityReport check_lagarias(std::uint64_t n,
                                       const PrecisionPolicy& policy = {}) {
    if (n == 0) throw std::invalid_argument("check_lagarias: n must be >= 1");
    InequalityReport rep;
    rep.n = static_cast<unsigned long>(n);
    rep.inequality = InequalityId::Lagarias;
    rep.lhs = mpq_class(sigma(factor(n)));
    if (n == 1) {
        // sigma(1) = 1 = H_1 + exp(H_1) log(H_1): strict inequality misses
        rep.verdict = {VerdictKind::Fails, policy.start_bits};
        rep.prec_used = policy.start_bits;
        rep.rhs = RealInterval::exact(1L, policy.start_bits);
        rep.margin = rep.rhs - RealInterval::exact(rep.lhs, policy.start_bits);
        rep.flags = {"strictness-edge"};
        return rep;
    }
    bool exact_h = n <= detail::kExactHarmonicReach;
    mpq_class hn = exact_h ? harmonic(n) : mpq_class();
    auto rhs_eval = [&](Prec p) {
        RealInterval H = exact_h ? RealInterval::exact(hn, p)
                                 : detail::H_enclosure(rep.n, p);
        return H + detail::kl_rhs_from_H(H);
    };
    rep.verdict = decide(rep.lhs, rhs_eval, policy);
    rep.prec_used = rep.verdict.bits_reached;
    rep.rhs = rhs_eval(static_cast<Prec>(rep.prec_used));
    rep.margin = rep.rhs - RealInterval::exact(rep.lhs, rep.prec_used);
    if (!exact_h) rep.flags.push_back("H-enclosure");
    return rep;
}

// sigma(n) < exp(H_n) log(H_n), stated for all n > 60
inline InequalityReport check_kaneko_lagarias(std::uint64_t n,
                                              const PrecisionPolicy& policy = {}) {
    if (n < 2)
        throw std::invalid_argument("check_kaneko_lagarias: n must be >= 2");
    InequalityReport rep;
    rep.n = static_cast<unsigned long>(n);
    rep.inequality = InequalityId::KanekoLagarias;
    rep.lhs = mpq_class(sigma(factor(n)));
    bool exact_h = n <= detail::kExactHarmonicReach;
    mpq_class hn = exact_h ? harmonic(n) : mpq_class();
    auto rhs_eval = [&](Prec p) {
        RealInterval H = exact_h ? RealInterval::exact(hn, p)
                                 : detail::H_enclosure(rep.n, p);
        return detail::kl_rhs_from_H(H);
    };
    rep.verdict = decide(rep.lhs, rhs_eval, policy);
    rep.prec_used = rep.verdict.bits_reached;
    rep.rhs = rhs_eval(static_cast<Prec>(rep.prec_used));
    rep.margin = rep.rhs - RealInterval::exact(rep.lhs, rep.prec_used);
    if (!exact_h) rep.flags.push_back("H-enclosure");
    return rep;
}

// Kaneko-Lagarias for arbitrary-size n with sigma(n) supplied by the caller
// (superabundant entries carry it in factorization form).
inline Verdict kl_verdict_big(const mpz_class& n, const mpz_class& sigma_n,
                              const PrecisionPolicy& policy = {},
                              double* h_width_out = nullptr) {
    mpq_class lhs(sigma_n);
    Verdict v = decide(
        lhs,
        [&](Prec p) {
            RealInterval H = detail::H_enclosure(n, p);
            if (h_width_out) *h_width_out = H.width_d();
            return detail::kl_rhs_from_H(H);
        },
        policy);
    return v;
}

// ---------------------------------------------------------------------------
// Landscape sweeps: all Lagarias / KL failures in [lo, hi]. Runs on an
// interval harmonic accumulator; anything the running enclosure cannot
// separate is retried with the exact rational H_n.

struct LandscapeResult {
    std::vector<std::uint64_t> kl_failures;
    std::vector<std::uint64_t> kl_undecided;
    std::vector<std::uint64_t> lagarias_failures;
    std::vector<std::uint64_t> lagarias_undecided;
};

inline LandscapeResult lagarias_landscape(std::uint64_t lo, std::uint64_t hi,
                                          const PrecisionPolicy& policy = {}) {
    if (lo < 2 || lo > hi)
        throw std::invalid_argument("lagarias_landscape: range must start >= 2");
    LandscapeResult res;
    HarmonicIntervalAccumulator acc(192);
    while (acc.n() < lo) acc.advance();
    sigma_sieve(lo, hi, [&](std::uint64_t n, std::uint64_t sn) {
        while (acc.n() < n) acc.advance();
        mpq_class lhs(static_cast<unsigned long>(sn));
        const RealInterval& H = acc.value();
        RealInterval kl = detail::kl_rhs_from_H(H);
        RealInterval lag = H + kl;
        auto settle = [&](const RealInterval& rhs, bool with_h,
                          std::vector<std::uint64_t>& failures,
                          std::vector<std::uint64_t>& undecided) {
            if (strictly_below(lhs, rhs)) return;
            if (strictly_above(lhs, rhs)) {
                failures.push_back(n);
                return;
            }
            // rare: fall back to the exact rational H_n
            mpq_class hn = harmonic(n);
            Verdict v = decide(
                lhs,
                [&](Prec p) {
                    RealInterval He = RealInterval::exact(hn, p);
                    RealInterval r = detail::kl_rhs_from_H(He);
                    return with_h ? He + r : r;
                },
                policy);
            if (v.fails())
                failures.push_back(n);
            else if (v.undecidable())
                undecided.push_back(n);
        };
        settle(kl, false, res.kl_failures, res.kl_undecided);
        settle(lag, true, res.lagarias_failures, res.lagarias_undecided);
    });
    return res;
}

// ---------------------------------------------------------------------------
// Lemma suite

struct LemmaGrid {
    mpq_class step{1, 8};
    std::uint64_t x_max = 1000;
    std::uint64_t int_max = 10000;
};

namespace detail {

inline RealInterval six_over_pi_sq(Prec p) {
    return RealInterval::exact(6L, p) / pi_squared(p);
}

// H log H / x^2 from the digamma route
inline RealInterval h_log_h_over_x2(const mpq_class& x, Prec p) {
    RealInterval H = digamma(x + 1, p) + const_gamma(p);
    RealInterval x2 = RealInterval::exact(x * x, p);
    return H * log(H) / x2;
}

}  // namespace detail

// Certifies one of the H(x) lemmas over a rational grid plus integer points.
//   L1:  H(x) < log x + gamma + 1/(2x)          for x >= 1
//   L2:  H(x) < 2 log x / (1 + 6/(pi^2 x))      for x >= 4
//   L3a: H_{n+1} <= n / log n                   for integer n > 1
//   L3b: log H(x) <= x / (2 log x)              for x >= 4
//   L4:  H(x) log H(x) < x^2/(x + 6/pi^2)       for x >= 4
//   L5:  H'(x) > H(x) log H(x) / x^2            for x >= 4
// L5 additionally reports which of two candidate reciprocal lower bounds
// for the trigamma certifies: 1/(x + 6/pi^2) vs 1/(x + 6 pi^2).
inline CheckpointReport verify_H_lemma(const std::string& id,
                                       const LemmaGrid& grid = {},
                                       Prec prec = 96) {
    CheckpointReport rep;
    rep.checkpoint_id = id;
    rep.parameters = "step=" + rational_str(grid.step) +
                     " x_max=" + std::to_string(grid.x_max) +
                     " int_max=" + std::to_string(grid.int_max);

    auto grid_points = [&](long domain_min) {
        std::vector<mpq_class> pts;
        for (mpq_class x(domain_min); x <= static_cast<long>(grid.x_max);
             x += grid.step)
            pts.push_back(x);
        for (std::uint64_t n = grid.x_max + 1; n <= grid.int_max; ++n)
            pts.emplace_back(static_cast<unsigned long>(n));
        return pts;
    };

    std::uint64_t checked = 0, failed = 0;
    std::string first_fail;
    auto run = [&](const std::vector<mpq_class>& pts,
                   const std::function<bool(const mpq_class&)>& point_ok) {
        for (const mpq_class& x : pts) {
            ++checked;
            if (!point_ok(x)) {
                ++failed;
                if (first_fail.empty()) first_fail = rational_str(x);
            }
        }
    };

    if (id == "L1") {
        run(grid_points(1), [&](const mpq_class& x) {
            RealInterval H = digamma(x + 1, prec) + const_gamma(prec);
            RealInterval rhs = log(RealInterval::exact(x, prec)) +
                               const_gamma(prec) +
                               RealInterval::exact(mpq_class(1) / (2 * x), prec);
            return strictly_below(H, rhs);
        });
    } else if (id == "L2") {
        run(grid_points(4), [&](const mpq_class& x) {
            RealInterval H = digamma(x + 1, prec) + const_gamma(prec);
            RealInterval xi = RealInterval::exact(x, prec);
            RealInterval rhs =
                RealInterval::exact(2L, prec) * log(xi) /
                (RealInterval::exact(1L, prec) + detail::six_over_pi_sq(prec) / xi);
            return strictly_below(H, rhs);
        });
    } else if (id == "L3a") {
        // integer points only, exact harmonic on the left
        HarmonicAccumulator acc;
        acc.advance();  // H_2
        for (std::uint64_t n = 2; n <= grid.int_max; ++n) {
            while (acc.n() < n + 1) acc.advance();
            ++checked;
            RealInterval rhs =
                RealInterval::exact(static_cast<std::uint64_t>(n), prec) /
                log(RealInterval::exact(static_cast<std::uint64_t>(n), prec));
            if (!strictly_below(acc.value(), rhs)) {
                ++failed;
                if (first_fail.empty()) first_fail = std::to_string(n);
            }
        }
    } else if (id == "L3b") {
        run(grid_points(4), [&](const mpq_class& x) {
            RealInterval H = digamma(x + 1, prec) + const_gamma(prec);
            RealInterval xi = RealInterval::exact(x, prec);
            RealInterval rhs = xi / (RealInterval::exact(2L, prec) * log(xi));
            return strictly_below(log(H), rhs);
        });
    } else if (id == "L4") {
        run(grid_points(4), [&](const mpq_class& x) {
            RealInterval H = digamma(x + 1, prec) + const_gamma(prec);
            RealInterval xi = RealInterval::exact(x, prec);
            RealInterval rhs =
                xi * xi / (xi + detail::six_over_pi_sq(prec));
            return strictly_below(H * log(H), rhs);
        });
    } else if (id == "L5") {
        std::uint64_t variant_a_fail = 0, variant_b_fail = 0;
        run(grid_points(4), [&](const mpq_class& x) {
            RealInterval target = detail::h_log_h_over_x2(x, prec);
            RealInterval T = trigamma(x + 1, prec);
            RealInterval xi = RealInterval::exact(x, prec);
            RealInterval bound_a =
                inv(xi + detail::six_over_pi_sq(prec));
            RealInterval bound_b =
                inv(xi + RealInterval::exact(6L, prec) * pi_squared(prec));
            bool a_chain = !strictly_below(T, bound_a) &&
                           strictly_above(bound_a, target);
            bool b_chain = strictly_above(bound_b, target);
            if (!a_chain) ++variant_a_fail;
            if (!b_chain) ++variant_b_fail;
            return strictly_above(T, target);  // the lemma's conclusion
        });
        rep.witness.push_back("variant 1/(x+6/pi^2) chain certifies: " +
                              std::string(variant_a_fail == 0 ? "yes" : "no"));
        rep.witness.push_back("variant 1/(x+6*pi^2) chain certifies: " +
                              std::string(variant_b_fail == 0 ? "yes" : "no"));
    } else {
        throw std::invalid_argument("unknown lemma id: " + id);
    }

    rep.certified = failed == 0 && checked > 0;
    rep.witness.push_back("points checked=" + std::to_string(checked) +
                          " failed=" + std::to_string(failed));
    if (!first_fail.empty()) rep.witness.push_back("first failure at x=" + first_fail);
    return rep;
}

inline std::vector<std::string> lemma_ids() {
    return {"L1", "L2", "L3a", "L3b", "L4", "L5"};
}

// ---------------------------------------------------------------------------
// Monotone sequence exp(H_n) log(H_n)/n

namespace detail {

inline RealInterval g_from_exact_H(const mpq_class& hn, std::uint64_t n, Prec p) {
    RealInterval H = RealInterval::exact(hn, p);
    return exp(H) * log(H) / RealInterval::exact(n, p);
}

}  // namespace detail

// Strict interval separation g_n < g_{n+1} for every n < limit, exact H_n
// inside the exponentials; spot-checks the continuous claim at midpoints.
inline CheckpointReport verify_g_monotone(std::uint64_t limit,
                                          const PrecisionPolicy& policy = {}) {
    if (limit < 2) throw std::invalid_argument("verify_g_monotone: limit >= 2");
    CheckpointReport rep;
    rep.checkpoint_id = "G_MONOTONE";
    rep.parameters = "limit=" + std::to_string(limit);
    rep.certified = true;
    HarmonicAccumulator acc;
    mpq_class h_prev = acc.value();  // H_1
    for (std::uint64_t n = 1; n < limit; ++n) {
        acc.advance();
        mpq_class h_next = acc.value();
        unsigned bits = policy.start_bits;
        bool step_ok = false;
        for (;;) {
            RealInterval gn = detail::g_from_exact_H(h_prev, n, bits);
            RealInterval gn1 = detail::g_from_exact_H(h_next, n + 1, bits);
            if (strictly_below(gn, gn1)) {
                step_ok = true;
                break;
            }
            if (bits >= policy.max_bits) break;
            bits = std::min(policy.next(bits), policy.max_bits);
        }
        if (!step_ok) {
            rep.certified = false;
            rep.witness.push_back("step n=" + std::to_string(n) + " not separated");
        }
        h_prev = h_next;
    }
    // continuous claim at a few rational midpoints
    std::uint64_t mid_fail = 0;
    for (std::uint64_t n : {4ull, 10ull, 100ull, 1000ull}) {
        if (n + 1 >= limit && n != 4) continue;
        mpq_class x(2 * n + 1, 2);
        RealPoint a = H_real(mpq_class(static_cast<unsigned long>(n)), 128);
        RealPoint b = H_real(x, 128);
        RealInterval ga = exp(a.H) * log(a.H) / RealInterval::exact(n, 128);
        RealInterval gb = exp(b.H) * log(b.H) / RealInterval::exact(x, 128);
        if (!strictly_below(ga, gb)) ++mid_fail;
    }
    if (mid_fail) {
        rep.certified = false;
        rep.witness.push_back("midpoint spot-checks failed=" + std::to_string(mid_fail));
    }
    if (rep.certified)
        rep.witness.push_back("all steps strictly separated up to n=" +
                              std::to_string(limit));
    return rep;
}

// (i) H_n >= log n + gamma + 1/(2n+1) and (ii) exp(H_n)log(H_n)/n >
// e^gamma log log n for 2 <= n <= limit (ii from n >= 3).
inline CheckpointReport verify_robin_implies_kl(std::uint64_t limit,
                                                const PrecisionPolicy& policy = {}) {
    if (limit < 2) throw std::invalid_argument("verify_robin_implies_kl: limit >= 2");
    CheckpointReport rep;
    rep.checkpoint_id = "ROBIN_IMPLIES_KL";
    rep.parameters = "limit=" + std::to_string(limit);
    rep.certified = true;
    HarmonicAccumulator acc;
    for (std::uint64_t n = 2; n <= limit; ++n) {
        while (acc.n() < n) acc.advance();
        const mpq_class& hn = acc.value();
        // (i) exact H_n strictly above the enclosure of the approximation
        auto lower = [&](Prec p) {
            return log(RealInterval::exact(n, p)) + const_gamma(p) +
                   RealInterval::exact(mpq_class(1, 2 * n + 1), p);
        };
        bool i_ok = false;
        unsigned bits = policy.start_bits;
        for (;;) {
            if (strictly_above(hn, lower(bits))) {
                i_ok = true;
                break;
            }
            if (bits >= policy.max_bits) break;
            bits = std::min(policy.next(bits), policy.max_bits);
        }
        bool ii_ok = true;
        if (n >= 3) {
            mpz_class nz(static_cast<unsigned long>(n));
            ii_ok = decide_interval_lt(
                        [&](Prec p) { return robin_rhs(nz, p); },
                        [&](Prec p) { return detail::g_from_exact_H(hn, n, p); },
                        policy)
                        .holds();
        }
        if (!i_ok || !ii_ok) {
            rep.certified = false;
            rep.witness.push_back("n=" + std::to_string(n) + " i=" +
                                  (i_ok ? "ok" : "FAIL") + " ii=" +
                                  (ii_ok ? "ok" : "FAIL"));
        }
    }
    if (rep.certified)
        rep.witness.push_back("both facts hold for all n <= " + std::to_string(limit));
    return rep;
}

}  // namespace robinv
