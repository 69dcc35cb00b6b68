#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "robinv/decide.hpp"
#include "robinv/interval.hpp"

namespace robinv {

enum class InequalityId { Robin, Lagarias, KanekoLagarias };

inline const char* to_string(InequalityId id) {
    switch (id) {
        case InequalityId::Robin: return "robin";
        case InequalityId::Lagarias: return "lagarias";
        case InequalityId::KanekoLagarias: return "kaneko-lagarias";
    }
    return "?";
}

struct InequalityReport {
    mpz_class n;
    InequalityId inequality = InequalityId::Robin;
    mpq_class lhs;
    RealInterval rhs{64};
    Verdict verdict;
    RealInterval margin{64};  // rhs - lhs
    unsigned prec_used = 0;
    std::vector<std::string> flags;

    bool has_flag(const std::string& f) const {
        return std::find(flags.begin(), flags.end(), f) != flags.end();
    }
};

struct CheckpointReport {
    std::string checkpoint_id;
    std::string parameters;
    bool certified = false;
    std::vector<std::string> witness;
};

// ---------------------------------------------------------------------------
// Deterministic decimal rendering: endpoints are serialized as decimal
// strings with a digit count derived from the working precision, rounded in
// the endpoint's own direction so the printed interval still encloses.

inline int digits_for_prec(unsigned prec_bits) {
    return std::clamp<int>(static_cast<int>(prec_bits) / 4, 17, 40);
}

inline std::string decimal_str(mpfr_srcptr x, int digits, mpfr_rnd_t rnd) {
    char buf[128];
    mpfr_snprintf(buf, sizeof buf, "%.*R*e", digits, rnd, x);
    return buf;
}

inline std::string interval_lo_str(const RealInterval& x, int digits) {
    return decimal_str(x.lo(), digits, MPFR_RNDD);
}

inline std::string interval_hi_str(const RealInterval& x, int digits) {
    return decimal_str(x.hi(), digits, MPFR_RNDU);
}

inline std::string rational_str(const mpq_class& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace detail {

inline std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}  // namespace detail

inline std::string json_line(const InequalityReport& r, const std::string& cmd) {
    int digits = digits_for_prec(r.prec_used ? r.prec_used : 64);
    std::string s = "{\"cmd\":\"" + detail::json_escape(cmd) + "\"";
    s += ",\"n\":\"" + r.n.get_str() + "\"";
    s += ",\"inequality\":\"" + std::string(to_string(r.inequality)) + "\"";
    s += ",\"lhs\":\"" + rational_str(r.lhs) + "\"";
    s += ",\"rhs_lo\":\"" + interval_lo_str(r.rhs, digits) + "\"";
    s += ",\"rhs_hi\":\"" + interval_hi_str(r.rhs, digits) + "\"";
    s += ",\"verdict\":\"" + std::string(to_string(r.verdict.kind)) + "\"";
    s += ",\"margin_lo\":\"" + interval_lo_str(r.margin, digits) + "\"";
    s += ",\"margin_hi\":\"" + interval_hi_str(r.margin, digits) + "\"";
    s += ",\"prec_bits\":" + std::to_string(r.prec_used);
    s += ",\"flags\":[";
    for (std::size_t i = 0; i < r.flags.size(); ++i) {
        if (i) s += ",";
        s += "\"" + detail::json_escape(r.flags[i]) + "\"";
    }
    s += "]}";
    return s;
}

inline std::string json_line(const CheckpointReport& r, const std::string& cmd) {
    std::string s = "{\"cmd\":\"" + detail::json_escape(cmd) + "\"";
    s += ",\"checkpoint\":\"" + detail::json_escape(r.checkpoint_id) + "\"";
    s += ",\"parameters\":\"" + detail::json_escape(r.parameters) + "\"";
    s += ",\"certified\":";
    s += r.certified ? "true" : "false";
    s += ",\"witness\":[";
    for (std::size_t i = 0; i < r.witness.size(); ++i) {
        if (i) s += ",";
        s += "\"" + detail::json_escape(r.witness[i]) + "\"";
    }
    s += "]}";
    return s;
}

inline std::string csv_header_inequality() {
    return "cmd,n,inequality,lhs,rhs_lo,rhs_hi,verdict,margin_lo,margin_hi,"
           "prec_bits,flags";
}

inline std::string csv_line(const InequalityReport& r, const std::string& cmd) {
    int digits = digits_for_prec(r.prec_used ? r.prec_used : 64);
    std::string flags;
    for (std::size_t i = 0; i < r.flags.size(); ++i) {
        if (i) flags += ";";
        flags += r.flags[i];
    }
    return cmd + "," + r.n.get_str() + "," + to_string(r.inequality) + "," +
           rational_str(r.lhs) + "," + interval_lo_str(r.rhs, digits) + "," +
           interval_hi_str(r.rhs, digits) + "," + to_string(r.verdict.kind) +
           "," + interval_lo_str(r.margin, digits) + "," +
           interval_hi_str(r.margin, digits) + "," +
           std::to_string(r.prec_used) + "," + flags;
}

}  // namespace robinv
