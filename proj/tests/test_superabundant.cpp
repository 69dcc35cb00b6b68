#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "robinv/superabundant.hpp"

using namespace robinv;

namespace {

// [DERIVED] first superabundant numbers
const std::vector<unsigned long> kFirstSA = {1, 2, 4, 6, 12, 24, 36, 48, 60, 120};

}  // namespace

TEST_CASE("record scan finds the classical list", "[sa]") {
    std::vector<SAEntry> s = sa_scan(120);
    REQUIRE(s.size() == kFirstSA.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        REQUIRE(s[i].n == kFirstSA[i]);
    // abundancy records strictly increase
    for (std::size_t i = 1; i < s.size(); ++i)
        REQUIRE(s[i].abundancy > s[i - 1].abundancy);
}

TEST_CASE("generator agrees with the record scan", "[sa]") {
    std::vector<SAEntry> gen = sa_generate(25);
    std::vector<SAEntry> scan = sa_scan(1000000);
    REQUIRE(gen.size() == 25);
    REQUIRE(scan.size() >= 25);
    for (std::size_t i = 0; i < 25; ++i) {
        REQUIRE(gen[i].n == scan[i].n);
        REQUIRE(gen[i].abundancy == scan[i].abundancy);
    }
}

TEST_CASE("generated entries have non-increasing exponents on consecutive primes",
          "[sa]") {
    for (const SAEntry& e : sa_generate(40)) {
        mpz_class rebuilt = 1;
        unsigned prev = ~0u;
        for (std::size_t i = 0; i < e.fact.pairs.size(); ++i) {
            const auto& [p, exp_] = e.fact.pairs[i];
            REQUIRE(p == nth_prime(i + 1));  // consecutive primes from 2
            REQUIRE(exp_ <= prev);
            prev = exp_;
            for (unsigned t = 0; t < exp_; ++t)
                rebuilt *= static_cast<unsigned long>(p);
        }
        REQUIRE(rebuilt == e.n);
        // abundancy field is sigma(n)/n, exactly
        mpq_class ab(sigma(e.fact), e.n);
        ab.canonicalize();
        REQUIRE(ab == e.abundancy);
    }
}

TEST_CASE("KL certifies on generated superabundants", "[sa]") {
    CheckpointReport rep = verify_kl_on_sa(40);
    REQUIRE(rep.certified);
}

TEST_CASE("reduction mechanism certifies on a desk-scale sweep", "[sa]") {
    CheckpointReport rep = verify_lli_reduction(2000);
    REQUIRE(rep.certified);
    REQUIRE_THROWS_AS(verify_lli_reduction(10), std::invalid_argument);
}
