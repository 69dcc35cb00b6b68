#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "robinv/arith.hpp"
#include "robinv/lagarias.hpp"

using namespace robinv;

namespace {

// [DERIVED] failure set of the strict sigma(n) < exp(H_n)log(H_n), n <= 200
const std::vector<std::uint64_t> kKLFails = {2, 3, 4, 6, 12, 24, 60};

}  // namespace

TEST_CASE("exact harmonic numbers", "[lagarias]") {
    REQUIRE(harmonic(1) == 1);
    REQUIRE(harmonic(2) == mpq_class(3, 2));
    REQUIRE(harmonic(4) == mpq_class(25, 12));
    HarmonicAccumulator acc;  // starts at n=1, H_1 = 1
    REQUIRE(acc.n() == 1);
    REQUIRE(acc.value() == 1);
    while (acc.n() < 500) acc.advance();
    REQUIRE(acc.value() == harmonic(500));
}

TEST_CASE("interval harmonic accumulator encloses the exact value", "[lagarias]") {
    HarmonicIntervalAccumulator acc(192);  // starts at n=1
    while (acc.n() < 3000) acc.advance();
    mpq_class exact = harmonic(3000);
    REQUIRE(mpfr_cmp_q(acc.value().lo(), exact.get_mpq_t()) <= 0);
    REQUIRE(mpfr_cmp_q(acc.value().hi(), exact.get_mpq_t()) >= 0);
}

TEST_CASE("H_real interpolates harmonic numbers", "[lagarias]") {
    for (std::uint64_t n : {1ull, 5ull, 100ull, 5000ull}) {
        RealPoint pt = H_real(mpq_class(static_cast<unsigned long>(n)), 160);
        mpq_class hn = harmonic(n);
        REQUIRE(mpfr_cmp_q(pt.H.lo(), hn.get_mpq_t()) <= 0);
        REQUIRE(mpfr_cmp_q(pt.H.hi(), hn.get_mpq_t()) >= 0);
        REQUIRE(mpfr_sgn(pt.Hprime.lo()) > 0);  // H is increasing
    }
    // non-integer point between H_2 and H_3
    RealPoint mid = H_real(mpq_class(5, 2), 160);
    REQUIRE(strictly_below(harmonic(2), mid.H));
    REQUIRE(strictly_above(harmonic(3), mid.H));
    REQUIRE_THROWS_AS(H_real(mpq_class(1, 2), 160), std::domain_error);
}

TEST_CASE("Lagarias holds for all n in [2, 2000], fails only at n=1", "[lagarias]") {
    InequalityReport r1 = check_lagarias(1);
    REQUIRE(r1.verdict.fails());  // equality: sigma(1) = 1 = H_1 + e^1 log 1
    REQUIRE(r1.has_flag("strictness-edge"));
    for (std::uint64_t n = 2; n <= 2000; ++n)
        REQUIRE(check_lagarias(n).verdict.holds());
}

TEST_CASE("Kaneko-Lagarias boundary at n=60", "[lagarias]") {
    REQUIRE(check_kaneko_lagarias(60).verdict.fails());
    REQUIRE(check_kaneko_lagarias(61).verdict.holds());
    REQUIRE(check_kaneko_lagarias(120).verdict.holds());
    for (std::uint64_t n = 2; n <= 200; ++n) {
        bool expect_fail = std::find(kKLFails.begin(), kKLFails.end(), n) !=
                           kKLFails.end();
        REQUIRE(check_kaneko_lagarias(n).verdict.fails() == expect_fail);
    }
}

TEST_CASE("big-n KL verdict matches the small-n path", "[lagarias]") {
    for (std::uint64_t n : {60ull, 61ull, 5040ull, 100000ull}) {
        double hw = 0;
        Verdict big = kl_verdict_big(mpz_class(static_cast<unsigned long>(n)),
                                     sigma(factor(n)), {}, &hw);
        Verdict small = check_kaneko_lagarias(n).verdict;
        REQUIRE(big.kind == small.kind);
    }
    // beyond 64-bit: primorial of 30 primes
    mpz_class m = primorial(30);
    Verdict v = kl_verdict_big(m, sigma(primorial_factorization(30)), {});
    REQUIRE(v.holds());
}

TEST_CASE("landscape sweep matches per-n checks", "[lagarias]") {
    LandscapeResult land = lagarias_landscape(2, 5000);
    REQUIRE(land.kl_failures == kKLFails);
    REQUIRE(land.lagarias_failures.empty());
    // windows not starting at 2
    LandscapeResult win = lagarias_landscape(50, 70);
    REQUIRE(win.kl_failures == std::vector<std::uint64_t>{60});
}

TEST_CASE("lemma suite on a reduced grid", "[lagarias]") {
    LemmaGrid grid;
    grid.step = mpq_class(1, 8);
    grid.x_max = 60;
    grid.int_max = 300;
    for (const auto& id : lemma_ids()) {
        CheckpointReport rep = verify_H_lemma(id, grid, 128);
        INFO(id);
        REQUIRE(rep.certified);
    }
    REQUIRE_THROWS_AS(verify_H_lemma("L9", grid, 128), std::invalid_argument);
}

TEST_CASE("monotone sequence certifies with strict separation", "[lagarias]") {
    CheckpointReport rep = verify_g_monotone(2000, {});
    REQUIRE(rep.certified);
}

TEST_CASE("Robin implies Kaneko-Lagarias scaffolding", "[lagarias]") {
    CheckpointReport rep = verify_robin_implies_kl(2000, {});
    REQUIRE(rep.certified);
}
