#pragma once

// Closed-form criteria deciding C_t for particular shapes of (t, d).
//
// Each criterion is sufficient in one direction only: it either proves that d
// satisfies C_t, proves that it does not, or says nothing (inconclusive).

#include "rootcong/arith.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rootcong {

enum class CriterionId {
    DLeT,                   // d <= t
    CorPower,               // small prime power
    PropSuffcond,           // per-prime valuation bound
    PropBeta,               // large cofactor with beta_p >= 1
    CorTooLargeValue,       // d > t p^{nu_p(d)}
    PropTooLargeValuation,  // nu_p(d) too large
    PropParticular,         // t = q p^u, d = q p^r, p odd
    CorPowerNot,            // t = p^u, d = p^r, p odd
    PropAnother,            // t = q p^u, d = (q+1) p^r
    DirectCheck,            // exhaustive scan over c
};

std::string_view to_string(CriterionId id);

enum class Outcome { holds, fails, inconclusive };

std::string_view to_string(Outcome outcome);

struct CriterionVerdict {
    CriterionId id = CriterionId::DLeT;
    Outcome outcome = Outcome::inconclusive;
    /// Named values behind the outcome, e.g. {"p", 2}, {"beta", 1}, {"bound", 3}.
    std::vector<std::pair<std::string, std::int64_t>> detail;

    bool decided() const { return outcome != Outcome::inconclusive; }
    /// Value of a detail entry; throws std::out_of_range if absent.
    std::int64_t at(std::string_view key) const;
};

struct SuffcondParams {
    std::uint64_t p = 0;
    std::int64_t k_p = 0;
    std::int64_t gamma_p = 0;
    /// floor(log_p(k_p t p^gamma_p / d)); may be -1. Unrelated to floor(log_p t).
    std::int64_t alpha_p_suff = 0;
    /// Right-hand side of the inequality; the prime passes when nu_p(d) <= bound.
    std::int64_t bound = 0;
};

/// Upper end of the r-range proven to hold for d = p^r:
/// (a+1)(t+1) - (p^{a+1} - 1)/(p - 1) with a = floor(log_p t).
std::int64_t power_holds_bound(std::uint64_t t, std::uint64_t p);

/// (a+1) t - nu_p(t!) with a = floor(log_p t); exponents above it fail.
std::int64_t toolarge_valuation_bound(std::uint64_t t, std::uint64_t p);

/// u t + 1 - nu_p((t-1)!).
std::int64_t particular_bound(std::uint64_t t, std::uint64_t p, unsigned u);

/// The exceptional set A_t. The composite branch requires d / p^{nu_p(d)} <= t
/// for every prime p | d.
bool in_At(std::uint64_t t, std::uint64_t d);

SuffcondParams suffcond_params(std::uint64_t t, std::uint64_t d, std::uint64_t p);

CriterionVerdict crit_d_le_t(std::uint64_t t, std::uint64_t d);
CriterionVerdict crit_power_holds(std::uint64_t t, std::uint64_t d);
CriterionVerdict crit_toolarge_valuation(std::uint64_t t, std::uint64_t d);
CriterionVerdict crit_toolarge_value(std::uint64_t t, std::uint64_t d);
CriterionVerdict crit_beta(std::uint64_t t, std::uint64_t d);
CriterionVerdict crit_particular(std::uint64_t t, std::uint64_t d);
CriterionVerdict crit_powernot(std::uint64_t t, std::uint64_t d);
CriterionVerdict crit_another(std::uint64_t t, std::uint64_t d);
CriterionVerdict crit_suffcond(std::uint64_t t, std::uint64_t d);

/// All closed-form criteria in classifier order: necessary failures, then
/// sufficient conditions, then the specialised failures.
std::vector<CriterionVerdict> evaluate_criteria(std::uint64_t t, std::uint64_t d);

}  // namespace rootcong
