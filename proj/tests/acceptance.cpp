// Acceptance suite: every criterion prints exactly one PASS/FAIL line.
// Exit status is the number of failed criteria.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "robinv/arith.hpp"
#include "robinv/bounds.hpp"
#include "robinv/lagarias.hpp"
#include "robinv/robin.hpp"
#include "robinv/superabundant.hpp"

using namespace robinv;
using Clock = std::chrono::steady_clock;

namespace {

int g_failed = 0;

void report(int idx, bool ok, const std::string& what) {
    std::printf("[%s] criterion %2d: %s\n", ok ? "PASS" : "FAIL", idx,
                what.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failed;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// additive divisor sieve: sigma via d | n enumeration, independent of the
// multiplicative segmented sieve used by the scanner
std::vector<std::uint64_t> sigma_additive(std::uint64_t limit) {
    std::vector<std::uint64_t> s(limit + 1, 0);
    for (std::uint64_t d = 1; d <= limit; ++d)
        for (std::uint64_t m = d; m <= limit; m += d) s[m] += d;
    return s;
}

std::string run_cli(const std::string& args) {
    std::string cmd = std::string(ROBINV_BIN_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return "<popen failed>";
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0)
        out.append(buf.data(), got);
    pclose(p);
    return out;
}

std::uint64_t fnv1a(const std::vector<std::uint64_t>& vs) {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint64_t v : vs)
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    return h;
}

std::string parse_witness(const CheckpointReport& rep, const std::string& key) {
    for (const auto& w : rep.witness)
        if (w.rfind(key, 0) == 0) return w.substr(key.size());
    return "";
}

std::string sig_digits(const RealInterval& x, int n) {
    char buf[64];
    mpfr_snprintf(buf, sizeof buf, "%.*RNe", n - 1, x.lo());
    return buf;
}

// --------------------------------------------------------------------------

void criterion_1() {
    auto t0 = Clock::now();
    ScanResult r = scan_robin(1, 1000000, {}, 4);
    double secs = seconds_since(t0);

    std::vector<std::uint64_t> sig = sigma_additive(1000000);
    std::vector<std::uint64_t> oracle;
    for (std::uint64_t n = 2; n <= 1000000; ++n) {
        if (n == 2) {
            oracle.push_back(2);  // log log 2 < 0: unconditional violator
            continue;
        }
        double lhs = double(sig[n]) / double(n);
        double rhs = 1.7810724179901979852 * std::log(std::log(double(n)));
        if (rhs > lhs + 0.01) continue;  // safely holding
        mpq_class q(static_cast<unsigned long>(sig[n]),
                    static_cast<unsigned long>(n));
        q.canonicalize();
        mpz_class nz(static_cast<unsigned long>(n));
        if (decide(q, [&](Prec p) { return robin_rhs(nz, p); }, {}).fails())
            oracle.push_back(n);
    }

    bool in_range = !r.violators.empty() &&
                    r.violators.front() >= 2 && r.violators.back() <= 5040;
    bool has_5040 = std::binary_search(r.violators.begin(), r.violators.end(),
                                       5040ull);
    bool ok = r.undecided.empty() && in_range && has_5040 &&
              r.violators == oracle && secs <= 60.0;
    std::ostringstream msg;
    msg << "exception set on [1, 1e6]: " << r.violators.size()
        << " violators, all in [2, 5040], oracle match, "
        << (int)secs << "s (limit 60s)";
    report(1, ok, msg.str());
}

void criterion_2() {
    CheckpointReport a = checkpoint_eq7_at_k({64, 4096, 2.0});
    CheckpointReport b = checkpoint_eq7_at_k({256, 4096, 2.0});
    std::string ka = parse_witness(a, "smallest certified k=");
    std::string kb = parse_witness(b, "smallest certified k=");
    bool ok = a.certified && b.certified && !ka.empty() && ka == kb;
    report(2, ok, "EQ7_AT_K certifies at k=13042; smallest certified k=" + ka +
                      " stable across 64->256-bit policies");
}

void criterion_3() {
    CheckpointReport rep = verify_checkpoint("FREE21", {});
    RealInterval lo_prec = b_tilde_of(20, 64).log_value;
    RealInterval hi_prec = b_tilde_of(20, 256).log_value;
    bool agree = sig_digits(lo_prec, 6) == sig_digits(hi_prec, 6);
    report(3, rep.certified && agree,
           "FREE21: log(2^20 btilde(20)) < 6e11 < 10^13.11485 log 10; endpoints "
           "agree to 6 digits across 64/256 bits (" + sig_digits(hi_prec, 6) + ")");
}

void criterion_4() {
    bool e_ok = true;
    for (unsigned j = 1; j <= 3; ++j)
        e_ok = e_ok && strictly_below(mpq_class(1), E_of(j, 128));
    bool c_ok = strictly_above(mpq_class(61, 40), C_hat(13042, 128));
    report(4, e_ok && c_ok,
           "E_j > 1 for j in {1,2,3}; C-hat(13042) < 1.525, interval-certified");
}

void criterion_5() {
    auto t0 = Clock::now();
    CheckpointReport rep = checkpoint_theta(529, 1000000, {});
    double secs = seconds_since(t0);
    std::ostringstream msg;
    msg << "theta certificate exp(theta(x)) >= 2.51^x on [529, 1e6], "
        << (int)secs << "s (limit 120s)";
    report(5, rep.certified && secs <= 120.0, msg.str());
}

void criterion_6() {
    bool ok = true;
    std::size_t first_bad = 0;
    for (std::size_t k = 6; k <= 10000; ++k) {
        auto [lo, hi] = prime_bounds(k, 96);
        mpq_class pk(static_cast<unsigned long>(nth_prime(k)));
        if (!(strictly_above(pk, lo) && strictly_below(pk, hi))) {
            ok = false;
            if (!first_bad) first_bad = k;
        }
    }
    report(6, ok, "k(log k + log log k - 1) < p_k < k(log k + log log k) for "
                  "6 <= k <= 10^4" +
                      (ok ? "" : " (first failure k=" + std::to_string(first_bad) + ")"));
}

void criterion_7() {
    bool ok = true;
    RealInterval z2 = pi_squared_over_6(128);
    for (unsigned j = 1; j <= 3 && ok; ++j)
        for (std::size_t k = 1; k <= 200 && ok; ++k) {
            if (j > k + 1) continue;
            mpz_class m = primorial_over(k + 1, j);
            mpz_class ph = 1;
            for (std::size_t i = 1; i <= k + 1; ++i)
                if (i != j)
                    ph *= mpz_class(static_cast<unsigned long>(nth_prime(i))) - 1;
            mpq_class want(m, ph);
            want.canonicalize();
            if (A_exact({j, k}) * B_exact({j, k}) != want) ok = false;
            std::uint64_t pj = nth_prime(j);
            mpq_class corr = B_exact({j, k}) * mpq_class(pj * pj, pj * pj - 1);
            if (!strictly_below(corr, z2)) ok = false;
        }
    report(7, ok, "A*B = m/phi(m) exactly and B*p_j^2/(p_j^2-1) < pi^2/6 for "
                  "k <= 200, j in {1,2,3}");
}

void criterion_8() {
    LandscapeResult land = lagarias_landscape(2, 100000);

    // brute-force oracle on independent sigma: double filter with a wide
    // margin, per-n exact recheck anywhere ambiguous
    std::vector<std::uint64_t> sig = sigma_additive(100000);
    std::vector<std::uint64_t> kl_oracle, lag_oracle;
    double h = 1.0;  // H_1
    for (std::uint64_t n = 2; n <= 100000; ++n) {
        h += 1.0 / double(n);
        double kl = std::exp(h) * std::log(h);
        double s = double(sig[n]);
        bool kl_close = std::abs(kl - s) < 0.05 * kl;
        bool lag_close = std::abs(h + kl - s) < 0.05 * (h + kl);
        if (kl_close ? check_kaneko_lagarias(n).verdict.fails() : s > kl)
            kl_oracle.push_back(n);
        if (lag_close ? check_lagarias(n).verdict.fails() : s > h + kl)
            lag_oracle.push_back(n);
    }
    bool ok = land.kl_undecided.empty() && land.lagarias_undecided.empty() &&
              land.kl_failures == kl_oracle &&
              land.lagarias_failures == lag_oracle &&
              !land.kl_failures.empty() && land.kl_failures.back() == 60 &&
              land.lagarias_failures.empty();
    report(8, ok, "KL fails at n=60 and holds on (60, 1e5]; Lagarias holds on "
                  "[2, 1e5]; both match the brute-force oracle");
}

void criterion_9() {
    CheckpointReport rep = verify_g_monotone(10000, {});
    report(9, rep.certified,
           "exp(H_n)log(H_n)/n strictly increasing for n <= 10^4 with interval "
           "separation at every step");
}

void criterion_10() {
    bool ok = true;
    std::string l5_info;
    for (const auto& id : lemma_ids()) {
        CheckpointReport rep = verify_H_lemma(id, {}, 96);
        if (!rep.certified) ok = false;
        if (id == "L5")
            for (const auto& w : rep.witness)
                if (w.find("variant") != std::string::npos)
                    l5_info += (l5_info.empty() ? "" : "; ") + w;
    }
    report(10, ok, "lemmas L1-L5 certify on step-1/8 grids to x=10^3 and "
                   "integers to 10^4 (" + l5_info + ")");
}

void criterion_11() {
    std::vector<SAEntry> gen = sa_generate(30);
    std::vector<SAEntry> scan = sa_scan(10000000);
    bool prefix = scan.size() >= 30;
    for (std::size_t i = 0; i < 30 && prefix; ++i)
        prefix = gen[i].n == scan[i].n && gen[i].abundancy == scan[i].abundancy;
    const std::vector<unsigned long> first10 = {1, 2, 4,  6,  12,
                                                24, 36, 48, 60, 120};
    bool ten = true;
    for (std::size_t i = 0; i < 10; ++i) ten = ten && gen[i].n == first10[i];
    CheckpointReport kl = verify_kl_on_sa(100);
    CheckpointReport red = verify_lli_reduction(10000);
    report(11, prefix && ten && kl.certified && red.certified,
           "sa_generate(30) = sa_scan(1e7) prefix; first ten match oracle; "
           "KL certifies on 100 superabundants; reduction certifies to 1e4");
}

void criterion_12() {
    // determinism
    std::string a = run_cli("robin scan 4000 6000 --format json-lines");
    std::string b = run_cli("robin scan 4000 6000 --format json-lines");

    // resume equivalence: seed a token at a mid-scan chunk boundary and let
    // the binary finish; output must equal the uninterrupted run
    std::string flags = "--segment-size 1024 --format json-lines";
    std::string full = run_cli("robin scan 1 30000 " + flags);
    ScanResult head = scan_robin(1, 8192, {});
    std::ostringstream tok;
    char dig[32];
    std::snprintf(dig, sizeof dig, "%016llx",
                  static_cast<unsigned long long>(fnv1a(head.violators)));
    tok << "{\"fingerprint\":\"robin-scan|1|30000|64|4096|1024\","
        << "\"last_n\":8192,\"violators\":[";
    for (std::size_t i = 0; i < head.violators.size(); ++i)
        tok << (i ? "," : "") << head.violators[i];
    tok << "],\"undecided\":[],\"digest\":\"" << dig << "\"}";
    std::string tok_path = "/tmp/robinv_acc_tok.json";
    {
        std::ofstream f(tok_path);
        f << tok.str();
    }
    std::string resumed =
        run_cli("robin scan 1 30000 " + flags + " --resume " + tok_path);
    std::remove(tok_path.c_str());

    bool ok = !a.empty() && a == b && !full.empty() && resumed == full;
    report(12, ok, "byte-identical json-lines across runs; interrupted-then-"
                   "resumed scan equals uninterrupted scan");
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    std::printf("%d/12 criteria passed\n", 12 - g_failed);
    return g_failed;
}
