// Command-line front end: one subcommand per verification, machine-readable
// reports (json-lines / csv / human), resumable range scans.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "robinv/arith.hpp"
#include "robinv/bounds.hpp"
#include "robinv/lagarias.hpp"
#include "robinv/report.hpp"
#include "robinv/robin.hpp"
#include "robinv/superabundant.hpp"

namespace {

using json = nlohmann::json;

struct RunConfig {
    unsigned precision_start = 64;
    unsigned precision_max = 4096;
    unsigned workers = 1;
    std::uint64_t segment_size = 1 << 16;
    std::string output;
    std::string format = "human";
    std::string resume_file;
    std::vector<std::uint64_t> expect_fail;

    robinv::PrecisionPolicy policy() const {
        return {precision_start, precision_max, 2.0};
    }

    bool expected(std::uint64_t n) const {
        return std::find(expect_fail.begin(), expect_fail.end(), n) !=
               expect_fail.end();
    }
};

class Reporter {
public:
    explicit Reporter(const RunConfig& cfg) : cfg_(cfg) {
        if (!cfg.output.empty()) {
            file_.open(cfg.output);
            if (!file_) throw CLI::ValidationError("--output: cannot open " + cfg.output);
        }
    }

    std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

    void emit(const robinv::InequalityReport& r, const std::string& cmd) {
        if (cfg_.format == "json-lines") {
            out() << robinv::json_line(r, cmd) << "\n";
        } else if (cfg_.format == "csv") {
            if (!csv_header_done_) {
                out() << robinv::csv_header_inequality() << "\n";
                csv_header_done_ = true;
            }
            out() << robinv::csv_line(r, cmd) << "\n";
        } else {
            int digits = 15;
            out() << cmd << "  n=" << r.n.get_str()
                  << "  " << to_string(r.inequality)
                  << "  lhs=" << robinv::rational_str(r.lhs)
                  << "  rhs=[" << robinv::interval_lo_str(r.rhs, digits) << ", "
                  << robinv::interval_hi_str(r.rhs, digits) << "]"
                  << "  verdict=" << to_string(r.verdict.kind)
                  << "  prec=" << r.prec_used;
            for (const auto& f : r.flags) out() << "  [" << f << "]";
            out() << "\n";
        }
        note(r.verdict, r.n.fits_ulong_p() ? r.n.get_ui() : 0);
    }

    void emit(const robinv::CheckpointReport& r, const std::string& cmd) {
        if (cfg_.format == "json-lines") {
            out() << robinv::json_line(r, cmd) << "\n";
        } else if (cfg_.format == "csv") {
            out() << cmd << "," << r.checkpoint_id << ","
                  << (r.certified ? "certified" : "NOT-certified") << "\n";
        } else {
            out() << cmd << "  " << r.checkpoint_id << " (" << r.parameters
                  << "): " << (r.certified ? "certified" : "NOT certified") << "\n";
            for (const auto& w : r.witness) out() << "    " << w << "\n";
        }
        if (!r.certified) saw_fail_ = true;
    }

    void line(const std::string& s) { out() << s << "\n"; }

    void note(const robinv::Verdict& v, std::uint64_t n) {
        if (v.undecidable())
            saw_undecidable_ = true;
        else if (v.fails() && !cfg_.expected(n))
            saw_fail_ = true;
    }

    void force_fail() { saw_fail_ = true; }

    int exit_code() const {
        if (saw_undecidable_) return 2;
        if (saw_fail_) return 1;
        return 0;
    }

private:
    const RunConfig& cfg_;
    std::ofstream file_;
    bool csv_header_done_ = false;
    bool saw_fail_ = false;
    bool saw_undecidable_ = false;
};

// ---------------------------------------------------------------------------
// Resume tokens (atomic write-temp-then-rename after every chunk)

std::uint64_t fnv1a(const std::vector<std::uint64_t>& vs) {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint64_t v : vs) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    }
    return h;
}

void write_token(const std::string& path, const std::string& fingerprint,
                 std::uint64_t last_n, const std::vector<std::uint64_t>& violators,
                 const std::vector<std::uint64_t>& undecided) {
    json t;
    t["fingerprint"] = fingerprint;
    t["last_n"] = last_n;
    t["violators"] = violators;
    t["undecided"] = undecided;
    char dig[32];
    std::snprintf(dig, sizeof dig, "%016llx",
                  static_cast<unsigned long long>(fnv1a(violators)));
    t["digest"] = dig;
    std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp);
        f << t.dump();
    }
    std::filesystem::rename(tmp, path);
}

struct ResumeState {
    std::uint64_t last_n = 0;
    std::vector<std::uint64_t> violators;
    std::vector<std::uint64_t> undecided;
};

std::optional<ResumeState> read_token(const std::string& path,
                                      const std::string& fingerprint) {
    std::ifstream f(path);
    if (!f) return std::nullopt;
    json t = json::parse(f, nullptr, false);
    if (t.is_discarded()) throw CLI::ValidationError("--resume: corrupt token file");
    if (t.value("fingerprint", "") != fingerprint)
        throw CLI::ValidationError("--resume: fingerprint mismatch");
    ResumeState s;
    s.last_n = t.value("last_n", 0ull);
    s.violators = t.value("violators", std::vector<std::uint64_t>{});
    s.undecided = t.value("undecided", std::vector<std::uint64_t>{});
    char dig[32];
    std::snprintf(dig, sizeof dig, "%016llx",
                  static_cast<unsigned long long>(fnv1a(s.violators)));
    if (t.value("digest", "") != dig)
        throw CLI::ValidationError("--resume: partial-state digest mismatch");
    return s;
}

// ---------------------------------------------------------------------------

void run_scan(const RunConfig& cfg, Reporter& rep, std::uint64_t lo,
              std::uint64_t hi) {
    std::ostringstream fp;
    fp << "robin-scan|" << lo << "|" << hi << "|" << cfg.precision_start << "|"
       << cfg.precision_max << "|" << cfg.segment_size;
    ResumeState st;
    if (!cfg.resume_file.empty()) {
        if (auto prev = read_token(cfg.resume_file, fp.str())) st = *prev;
    }
    std::uint64_t start = st.last_n ? st.last_n + 1 : lo;
    // chunks of worker-parallel segments; a token lands after each chunk
    const std::uint64_t chunk = cfg.segment_size * std::max(1u, cfg.workers) * 4;
    for (std::uint64_t c_lo = start; c_lo <= hi;) {
        std::uint64_t c_hi = std::min(hi, c_lo + chunk - 1);
        robinv::ScanResult r = robinv::scan_robin(c_lo, c_hi, cfg.policy(),
                                                  cfg.workers, cfg.segment_size);
        st.violators.insert(st.violators.end(), r.violators.begin(),
                            r.violators.end());
        st.undecided.insert(st.undecided.end(), r.undecided.begin(),
                            r.undecided.end());
        st.last_n = c_hi;
        if (!cfg.resume_file.empty())
            write_token(cfg.resume_file, fp.str(), st.last_n, st.violators,
                        st.undecided);
        std::cerr << "scan: " << c_hi << "/" << hi << " (" << st.violators.size()
                  << " violators)\r";
        if (c_hi == hi) break;
        c_lo = c_hi + 1;
    }
    std::cerr << "\n";
    for (std::uint64_t v : st.violators)
        rep.emit(robinv::check_robin(v, cfg.policy()), "robin scan");
    for (std::uint64_t u : st.undecided) {
        rep.line("undecidable: " + std::to_string(u));
        rep.note({robinv::VerdictKind::Undecidable, cfg.precision_max}, u);
    }
    rep.line("violators=" + std::to_string(st.violators.size()) +
             " undecided=" + std::to_string(st.undecided.size()));
}

std::vector<mpz_class> default_2k_samples(std::size_t k, std::size_t count) {
    // smallest odd integers above the b(k) threshold, from the log form
    robinv::LogScaled b = robinv::b_of(k, 256);
    std::vector<mpz_class> out;
    mpz_class n0;
    if (b.value) {
        mpfr_get_z(n0.get_mpz_t(), b.value->hi(), MPFR_RNDU);
        n0 += 1;
    } else {
        // threshold beyond plain representation: take 2^ceil(log b / log 2)
        mpfr_t bits;
        mpfr_init2(bits, 256);
        mpfr_const_log2(bits, MPFR_RNDD);
        mpfr_div(bits, b.log_value.hi(), bits, MPFR_RNDU);
        bool too_big = !mpfr_fits_ulong_p(bits, MPFR_RNDU) ||
                       mpfr_get_ui(bits, MPFR_RNDU) > 10000000;
        unsigned long e = too_big ? 0 : mpfr_get_ui(bits, MPFR_RNDU) + 1;
        mpfr_clear(bits);
        if (too_big)
            throw CLI::ValidationError(
                "family2k: b(k) threshold too large to materialize samples; "
                "use a smaller --k");
        n0 = mpz_class(1) << e;
        n0 += 1;
    }
    if (n0 % 2 == 0) n0 += 1;
    for (std::size_t i = 0; i < count; ++i) out.push_back(n0 + 2 * i);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rigorous verification of the Robin, Lagarias and "
                 "Kaneko-Lagarias inequalities"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--precision-start", cfg.precision_start, "starting interval precision (bits)")
        ->envname("ROBINV_PRECISION_START");
    app.add_option("--precision-max", cfg.precision_max, "maximum interval precision (bits)")
        ->envname("ROBINV_PRECISION_MAX");
    app.add_option("--workers", cfg.workers, "worker threads for range scans")
        ->envname("ROBINV_WORKERS");
    app.add_option("--segment-size", cfg.segment_size, "sieve segment size")
        ->envname("ROBINV_SEGMENT_SIZE");
    app.add_option("--output", cfg.output, "write reports to a file instead of stdout")
        ->envname("ROBINV_OUTPUT");
    app.add_option("--format", cfg.format, "json-lines | csv | human")
        ->check(CLI::IsMember({"json-lines", "csv", "human"}))
        ->envname("ROBINV_FORMAT");
    app.add_option("--resume", cfg.resume_file, "token file for resumable scans");
    app.add_option("--expect-fail", cfg.expect_fail,
                   "n values whose Fails verdict is expected (still exit 0)");

    // ---- plain arithmetic
    std::uint64_t arg_n = 0;
    auto* c_factor = app.add_subcommand("factor", "prime factorization");
    c_factor->add_option("n", arg_n, "integer >= 1")->required();
    auto* c_sigma = app.add_subcommand("sigma", "sum of divisors");
    c_sigma->add_option("n", arg_n)->required();
    auto* c_phi = app.add_subcommand("phi", "Euler totient");
    c_phi->add_option("n", arg_n)->required();

    // ---- robin
    auto* robin = app.add_subcommand("robin", "Robin inequality checks");
    robin->require_subcommand(1);
    std::uint64_t r_n = 0, r_lo = 1, r_hi = 1, r_limit = 0;
    unsigned r_j = 1;
    std::string r_id;
    auto* rc = robin->add_subcommand("check", "single n");
    rc->add_option("n", r_n)->required();
    auto* rs = robin->add_subcommand("scan", "range scan for violators");
    rs->add_option("lo", r_lo)->required();
    rs->add_option("hi", r_hi)->required();
    auto* rf = robin->add_subcommand("family", "numbers coprime to p_j");
    rf->add_option("--j", r_j)->check(CLI::Range(1u, 3u))->required();
    rf->add_option("--limit", r_limit)->required();
    auto* rk = robin->add_subcommand("checkpoints", "re-verify the numeric checkpoints");
    rk->add_option("--id", r_id, "single checkpoint id");
    auto* rd = robin->add_subcommand("density", "violator density up to limit");
    rd->add_option("--limit", r_limit)->required();
    auto* rcl = robin->add_subcommand("classify", "2-adic classification of violators");
    rcl->add_option("--limit", r_limit)->required();
    std::size_t r_k = 1, r_samples = 8;
    auto* r2k = robin->add_subcommand("family2k", "2^k n family above the b(k) threshold");
    r2k->add_option("--k", r_k)->required();
    r2k->add_option("--samples", r_samples);

    // ---- bounds
    auto* bounds = app.add_subcommand("bounds", "bound-function evaluation");
    bounds->require_subcommand(1);
    unsigned b_j = 1;
    std::string b_range = "2..20";
    std::size_t b_k = 1;
    auto* bt = bounds->add_subcommand("table", "A,B,C,D,E,b rows over a k range");
    bt->add_option("--j", b_j)->check(CLI::Range(1u, 3u));
    bt->add_option("--k-range", b_range, "A..B");
    auto* bb = bounds->add_subcommand("b", "b(k) threshold (log form)");
    bb->add_option("--k", b_k)->required();
    auto* bbt = bounds->add_subcommand("btilde", "b-tilde(k) threshold (log form)");
    bbt->add_option("--k", b_k)->required();

    // ---- lagarias
    auto* lag = app.add_subcommand("lagarias", "Lagarias / Kaneko-Lagarias checks");
    lag->require_subcommand(1);
    std::uint64_t l_n = 0, l_limit = 0, l_max = 1000;
    std::string l_variant = "lagarias", l_id, l_grid = "1/8";
    auto* lc = lag->add_subcommand("check", "single n");
    lc->add_option("n", l_n)->required();
    lc->add_option("--variant", l_variant)->check(CLI::IsMember({"lagarias", "kaneko"}));
    auto* ll = lag->add_subcommand("lemmas", "H(x) lemma suite");
    ll->add_option("--id", l_id, "L1|L2|L3a|L3b|L4|L5");
    ll->add_option("--grid", l_grid, "grid step as a rational, e.g. 1/8");
    ll->add_option("--max", l_max, "grid upper end");
    auto* lm = lag->add_subcommand("monotone", "monotone sequence exp(H_n)log(H_n)/n");
    lm->add_option("--limit", l_limit)->required();
    auto* li = lag->add_subcommand("implies-kl", "Robin implies Kaneko-Lagarias");
    li->add_option("--limit", l_limit)->required();

    // ---- superabundant
    auto* sa = app.add_subcommand("sa", "superabundant numbers");
    sa->require_subcommand(1);
    std::size_t s_count = 0;
    std::uint64_t s_limit = 0;
    auto* sl = sa->add_subcommand("list", "enumerate superabundant numbers");
    sl->add_option("--count", s_count, "first C entries (generator)");
    sl->add_option("--limit", s_limit, "entries <= L (record scan)");
    auto* sv = sa->add_subcommand("verify-kl", "Kaneko-Lagarias on superabundants");
    sv->add_option("--count", s_count)->required();
    auto* sr = sa->add_subcommand("verify-reduction", "reduction mechanism sweep");
    sr->add_option("--limit", s_limit)->required();

    // global flags may appear anywhere, including after subcommand arguments
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        a->fallthrough();
        for (CLI::App* s : a->get_subcommands([](CLI::App*) { return true; }))
            enable_fallthrough(s);
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc_parse = app.exit(e);
        return rc_parse == 0 ? 0 : 64;
    }

    try {
        Reporter rep(cfg);
        auto policy = cfg.policy();

        if (*c_factor) {
            auto f = robinv::factor(arg_n);
            std::string s = std::to_string(arg_n) + " =";
            if (f.pairs.empty()) s += " 1";
            for (const auto& [p, e] : f.pairs)
                s += " " + std::to_string(p) + "^" + std::to_string(e);
            rep.line(s);
        } else if (*c_sigma) {
            rep.line(robinv::sigma(robinv::factor(arg_n)).get_str());
        } else if (*c_phi) {
            rep.line(robinv::phi(robinv::factor(arg_n)).get_str());
        } else if (*rc) {
            rep.emit(robinv::check_robin(r_n, policy), "robin check");
        } else if (*rs) {
            run_scan(cfg, rep, r_lo, r_hi);
        } else if (*rf) {
            rep.emit(robinv::verify_family_coprime(r_j, r_limit, policy, cfg.workers),
                     "robin family");
        } else if (*rk) {
            auto ids = r_id.empty() ? robinv::checkpoint_ids()
                                    : std::vector<std::string>{r_id};
            for (const auto& id : ids)
                rep.emit(robinv::verify_checkpoint(id, policy), "robin checkpoints");
        } else if (*rd) {
            mpq_class d = robinv::density_estimate(r_limit, policy, cfg.workers);
            rep.line("violator density <= " + std::to_string(r_limit) + ": " +
                     robinv::rational_str(d));
        } else if (*rcl) {
            auto table = robinv::classify_counterexamples(r_limit, policy, cfg.workers);
            for (const auto& c : table) {
                rep.line("n=" + std::to_string(c.n) + " k=" + std::to_string(c.k) +
                         " odd_part=" + std::to_string(c.odd_part) +
                         (c.even ? " even" : " odd") +
                         (c.k >= 1 ? (c.odd_part_within_b ? " within-b(k)"
                                                          : " OUTSIDE-b(k)")
                                   : ""));
            }
            rep.line("violators=" + std::to_string(table.size()));
        } else if (*r2k) {
            auto samples = default_2k_samples(r_k, r_samples);
            rep.emit(robinv::verify_2k_family(r_k, samples, policy), "robin family2k");
        } else if (*bt) {
            auto dots = b_range.find("..");
            if (dots == std::string::npos)
                throw CLI::ValidationError("--k-range: expected A..B");
            std::size_t ka = std::stoull(b_range.substr(0, dots));
            std::size_t kb = std::stoull(b_range.substr(dots + 2));
            if (ka < 2) ka = 2;
            int digits = 12;
            for (std::size_t k = ka; k <= kb; ++k) {
                auto row = robinv::bound_row({b_j, k}, cfg.precision_start);
                rep.line("k=" + std::to_string(k) + " j=" + std::to_string(b_j) +
                         " A=" + robinv::rational_str(row.A) +
                         " B=" + robinv::rational_str(row.B) +
                         " C<=" + robinv::interval_hi_str(row.C, digits) +
                         " D>=" + (row.D ? robinv::interval_lo_str(*row.D, digits)
                                         : std::string("n/a")) +
                         " E>=" + robinv::interval_lo_str(row.E, digits) +
                         " log_b<=" + robinv::interval_hi_str(row.b_log, digits) +
                         " log_btilde<=" +
                         robinv::interval_hi_str(row.b_tilde_log, digits));
            }
        } else if (*bb || *bbt) {
            auto v = *bb ? robinv::b_of(b_k, cfg.precision_start)
                         : robinv::b_tilde_of(b_k, cfg.precision_start);
            int digits = robinv::digits_for_prec(cfg.precision_start);
            std::string s = std::string(*bb ? "log b(" : "log 2^k btilde(") +
                            std::to_string(b_k) + ") in [" +
                            robinv::interval_lo_str(v.log_value, digits) + ", " +
                            robinv::interval_hi_str(v.log_value, digits) + "]";
            if (v.value && mpfr_cmp_d(v.value->hi(), 1e30) < 0)
                s += "  value in [" + robinv::interval_lo_str(*v.value, digits) +
                     ", " + robinv::interval_hi_str(*v.value, digits) + "]";
            rep.line(s);
        } else if (*lc) {
            rep.emit(l_variant == "kaneko"
                         ? robinv::check_kaneko_lagarias(l_n, policy)
                         : robinv::check_lagarias(l_n, policy),
                     "lagarias check");
        } else if (*ll) {
            robinv::LemmaGrid grid;
            grid.step = mpq_class(l_grid);
            grid.step.canonicalize();
            grid.x_max = l_max;
            auto ids = l_id.empty() ? robinv::lemma_ids()
                                    : std::vector<std::string>{l_id};
            for (const auto& id : ids)
                rep.emit(robinv::verify_H_lemma(id, grid, cfg.precision_start),
                         "lagarias lemmas");
        } else if (*lm) {
            rep.emit(robinv::verify_g_monotone(l_limit, policy), "lagarias monotone");
        } else if (*li) {
            rep.emit(robinv::verify_robin_implies_kl(l_limit, policy),
                     "lagarias implies-kl");
        } else if (*sl) {
            if (s_count == 0 && s_limit == 0)
                throw CLI::ValidationError("sa list: need --count or --limit");
            auto entries = s_count ? robinv::sa_generate(s_count)
                                   : robinv::sa_scan(s_limit);
            for (const auto& e : entries)
                rep.line(e.n.get_str() + "  sigma/n=" +
                         robinv::rational_str(e.abundancy));
        } else if (*sv) {
            rep.emit(robinv::verify_kl_on_sa(s_count, policy), "sa verify-kl");
        } else if (*sr) {
            rep.emit(robinv::verify_lli_reduction(s_limit, policy),
                     "sa verify-reduction");
        }
        return rep.exit_code();
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 64;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 64;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 70;
    }
}
