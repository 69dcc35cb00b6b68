#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "robinv/robin.hpp"

using namespace robinv;

namespace {

// independent oracle: divisor enumeration + double-free rigorous recheck via
// the library's own decide at high fixed precision
std::uint64_t sigma_oracle(std::uint64_t n) {
    std::uint64_t s = 0;
    for (std::uint64_t d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            s += d;
            if (d != n / d) s += n / d;
        }
    return s;
}

// the 27 violators in [2, 5040]
const std::vector<std::uint64_t> kViolators = {
    2,  3,  4,  5,  6,  8,   9,   10,  12,  16,  18,  20,  24, 30,
    36, 48, 60, 72, 84, 120, 180, 240, 360, 720, 840, 2520, 5040};

}  // namespace

TEST_CASE("single-n verdicts at the boundary", "[robin]") {
    InequalityReport r5040 = check_robin(5040);
    REQUIRE(r5040.verdict.fails());
    REQUIRE(r5040.lhs == mpq_class(403, 105));  // 19344/5040 reduced

    InequalityReport r5041 = check_robin(5041);
    REQUIRE(r5041.verdict.holds());

    InequalityReport r10080 = check_robin(10080);
    REQUIRE(r10080.verdict.holds());
}

TEST_CASE("degenerate small n carry flags", "[robin]") {
    InequalityReport r1 = check_robin(1);
    REQUIRE(r1.verdict.fails());
    REQUIRE(r1.has_flag("degenerate-rhs"));
    REQUIRE(r1.has_flag("conventional-non-violator"));

    InequalityReport r2 = check_robin(2);
    REQUIRE(r2.verdict.fails());  // log log 2 < 0
    REQUIRE(r2.has_flag("degenerate-rhs"));

    REQUIRE_THROWS_AS(check_robin(0), std::invalid_argument);
}

TEST_CASE("scan reproduces the exception set exactly", "[robin]") {
    ScanResult r = scan_robin(1, 100000, {}, 2);
    REQUIRE(r.undecided.empty());
    std::vector<std::uint64_t> got = r.violators;
    // n=1 is conventionally excluded by the scan; if present, drop it
    got.erase(std::remove(got.begin(), got.end(), 1ull), got.end());
    REQUIRE(got == kViolators);
}

TEST_CASE("scan agrees with a brute-force oracle on a window", "[robin]") {
    // every n the scan reports as violating must fail the double-precision
    // sanity bound computed from enumerated sigma, and vice versa (away from
    // the decision boundary the double filter is conclusive)
    ScanResult r = scan_robin(2, 6000, {});
    for (std::uint64_t n = 2; n <= 6000; ++n) {
        bool in_scan = std::binary_search(r.violators.begin(), r.violators.end(), n);
        InequalityReport direct = check_robin(n);
        REQUIRE(in_scan == direct.verdict.fails());
        mpq_class want(static_cast<unsigned long>(sigma_oracle(n)),
                       static_cast<unsigned long>(n));
        want.canonicalize();
        REQUIRE(direct.lhs == want);
    }
}

TEST_CASE("odd violators stop at 9", "[robin]") {
    std::vector<std::uint64_t> odd;
    for (std::uint64_t v : kViolators)
        if (v % 2) odd.push_back(v);
    REQUIRE(odd == std::vector<std::uint64_t>{3, 5, 9});
}

TEST_CASE("scan determinism across worker counts and segment sizes", "[robin]") {
    ScanResult a = scan_robin(1, 30000, {}, 1, 1u << 16);
    ScanResult b = scan_robin(1, 30000, {}, 4, 1024);
    REQUIRE(a.violators == b.violators);
    ScanResult empty = scan_robin(7, 7, {});
    REQUIRE(empty.violators.empty());
    REQUIRE_THROWS_AS(scan_robin(10, 5, {}), std::invalid_argument);
}

TEST_CASE("prefilter never skips a violator", "[robin]") {
    for (std::uint64_t n = 3; n <= 20000; ++n) {
        if (detail::prefilter_accepts_as_holding(n, sigma_oracle(n)))
            REQUIRE(check_robin(n).verdict.holds());
    }
}

TEST_CASE("coprime family certifies", "[robin]") {
    CheckpointReport rep = verify_family_coprime(1, 20000);
    REQUIRE(rep.certified);  // odd n > 9 never violate; family starts > 5040
    CheckpointReport rep3 = verify_family_coprime(3, 20000);
    REQUIRE(rep3.certified);
    REQUIRE_THROWS_AS(verify_family_coprime(4, 20000), std::invalid_argument);
    REQUIRE_THROWS_AS(verify_family_coprime(1, 100), std::invalid_argument);
}

TEST_CASE("classification of the violator set", "[robin]") {
    auto table = classify_counterexamples(100000, {});
    REQUIRE(table.size() == kViolators.size());
    auto it5040 = std::find_if(table.begin(), table.end(),
                               [](const ViolatorClass& c) { return c.n == 5040; });
    REQUIRE(it5040 != table.end());
    REQUIRE(it5040->k == 4);          // 5040 = 2^4 * 315
    REQUIRE(it5040->odd_part == 315);
    REQUIRE(it5040->even);
    auto it9 = std::find_if(table.begin(), table.end(),
                            [](const ViolatorClass& c) { return c.n == 9; });
    REQUIRE(it9 != table.end());
    REQUIRE_FALSE(it9->even);
    REQUIRE(it9->k == 0);
}

TEST_CASE("density estimate is the exact ratio", "[robin]") {
    mpq_class d = density_estimate(100000, {});
    mpq_class want(kViolators.size(), 100000);
    want.canonicalize();
    REQUIRE(d == want);
    REQUIRE(density_estimate(1, {}) == 0);
}

TEST_CASE("2^k family holds above the threshold", "[robin]") {
    // k=1: odd samples just above b(1) ~ 1240
    std::vector<mpz_class> samples;
    for (int i = 0; i < 20; ++i) samples.emplace_back(1241 + 2 * i);
    CheckpointReport rep = verify_2k_family(1, samples);
    REQUIRE(rep.certified);
    // k=4: threshold b(4) ~ e^740, far beyond direct reach; the log-form
    // chain takes over for samples above it
    std::vector<mpz_class> big;
    mpz_class base = mpz_class(1) << 1100;  // log ~ 762 > log b(4)
    for (int i = 0; i < 3; ++i) big.push_back(base + 2 * i + 1);
    CheckpointReport rep4 = verify_2k_family(4, big);
    REQUIRE(rep4.certified);
    // a sample below the threshold is rejected, not silently passed
    CheckpointReport low = verify_2k_family(4, {mpz_class(1241)});
    REQUIRE_FALSE(low.certified);
}

TEST_CASE("checkpoint ids dispatch", "[robin]") {
    auto ids = checkpoint_ids();
    REQUIRE(ids.size() == 7);
    REQUIRE_THROWS_AS(verify_checkpoint("NO_SUCH", {}), std::invalid_argument);
}

TEST_CASE("checkpoint SMALL_N_15_8", "[robin]") {
    CheckpointReport rep = verify_checkpoint("SMALL_N_15_8", {});
    REQUIRE(rep.certified);
}

TEST_CASE("checkpoint PRIMORIALS", "[robin]") {
    CheckpointReport rep = verify_checkpoint("PRIMORIALS", {});
    REQUIRE(rep.certified);
}

TEST_CASE("checkpoint EVEN_2N", "[robin]") {
    CheckpointReport rep = verify_checkpoint("EVEN_2N", {});
    REQUIRE(rep.certified);
}

TEST_CASE("checkpoint SIGMA_PHI_CHAIN", "[robin]") {
    CheckpointReport rep = verify_checkpoint("SIGMA_PHI_CHAIN", {});
    REQUIRE(rep.certified);
}
