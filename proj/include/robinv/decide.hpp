#pragma once

// Three-valued comparison of an exact rational against a rigorously enclosed
// real expression, with adaptive precision escalation.

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>

#include "robinv/interval.hpp"

namespace robinv {

enum class VerdictKind { Holds, Fails, Undecidable };

struct Verdict {
    VerdictKind kind = VerdictKind::Undecidable;
    unsigned bits_reached = 0;

    bool holds() const { return kind == VerdictKind::Holds; }
    bool fails() const { return kind == VerdictKind::Fails; }
    bool undecidable() const { return kind == VerdictKind::Undecidable; }
};

inline const char* to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::Holds: return "Holds";
        case VerdictKind::Fails: return "Fails";
        case VerdictKind::Undecidable: return "Undecidable";
    }
    return "?";
}

struct PrecisionPolicy {
    unsigned start_bits = 64;
    unsigned max_bits = 4096;
    double growth = 2.0;

    void validate() const {
        if (start_bits < 16 || start_bits > max_bits || growth <= 1.0)
            throw std::invalid_argument("invalid PrecisionPolicy");
    }

    unsigned next(unsigned bits) const {
        auto n = static_cast<unsigned>(std::ceil(bits * growth));
        return n > bits ? n : bits + 1;
    }
};

// Decides lhs < rhs. Holds once lhs is strictly below the enclosure's lo,
// Fails once strictly above its hi, otherwise escalates precision.
template <class RhsEval>
Verdict decide(const mpq_class& lhs, RhsEval&& rhs_eval,
               const PrecisionPolicy& policy = {}) {
    policy.validate();
    unsigned bits = policy.start_bits;
    for (;;) {
        RealInterval rhs = rhs_eval(static_cast<Prec>(bits));
        if (mpfr_cmp_q(rhs.lo(), lhs.get_mpq_t()) > 0)
            return {VerdictKind::Holds, bits};
        if (mpfr_cmp_q(rhs.hi(), lhs.get_mpq_t()) < 0)
            return {VerdictKind::Fails, bits};
        if (bits >= policy.max_bits) return {VerdictKind::Undecidable, bits};
        bits = std::min(policy.next(bits), policy.max_bits);
    }
}

// Decides lhs < rhs for two enclosed expressions.
template <class LhsEval, class RhsEval>
Verdict decide_interval_lt(LhsEval&& lhs_eval, RhsEval&& rhs_eval,
                           const PrecisionPolicy& policy = {}) {
    policy.validate();
    unsigned bits = policy.start_bits;
    for (;;) {
        RealInterval lhs = lhs_eval(static_cast<Prec>(bits));
        RealInterval rhs = rhs_eval(static_cast<Prec>(bits));
        if (strictly_below(lhs, rhs)) return {VerdictKind::Holds, bits};
        if (strictly_above(lhs, rhs)) return {VerdictKind::Fails, bits};
        if (bits >= policy.max_bits) return {VerdictKind::Undecidable, bits};
        bits = std::min(policy.next(bits), policy.max_bits);
    }
}

}  // namespace robinv
