#pragma once

// The averaged roots-of-unity binomial congruence.
//
// For an instance (t, d, c, n) the quantity of interest is
//
//     S = (1/t) sum_{s<t} C(n + d zeta_t^s, c) - C(n, c)
//       = (1/c!) sum_{k=1}^{floor(c/t)} d^{kt} e_{c-kt}({n-c+1, ..., n}),
//
// a rational number. d satisfies C_t iff nu_p(S) >= nu_p(d) for every prime
// p | d, every c in {0, ..., d-1} and one fixed n0 (default -1).

#include "rootcong/arith.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rootcong {

struct CongruenceInstance {
    std::uint64_t t = 1;
    std::uint64_t d = 1;
    std::uint64_t c = 0;
    std::int64_t n = -1;
};

enum class Verdict { holds, fails, undecided };

std::string to_string(Verdict verdict);

struct ValuationReport {
    std::uint64_t prime = 0;
    std::int64_t required = 0;  // nu_p(d)
    ExtendedInt found;          // nu_p(S)
    bool satisfied = false;     // found >= required
};

struct DirectCheckOutcome {
    Verdict verdict = Verdict::holds;
    std::optional<std::uint64_t> failing_c;
    /// One report per prime divisor of d at failing_c; empty unless the verdict is fails.
    std::vector<ValuationReport> reports;
    std::int64_t n0 = -1;

    /// First unsatisfied report, if any.
    const ValuationReport* failing_report() const;
};

/// Raised internally when a direct check runs past its deadline.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded() : std::runtime_error("direct check exceeded its time budget") {}
};

/// Exact integer N = sum_{k>=1} d^{kt} e_{c-kt}({n-c+1..n}), so that S = N / c!.
BigInt lemma1_numerator(const CongruenceInstance& inst);

/// Exact S for the instance.
Rational lemma1_sum(const CongruenceInstance& inst);

/// x == y (mod d) for rationals: nu_p(x - y) >= nu_p(d) for every prime p | d.
bool congruent_mod(const Rational& x, const Rational& y, std::uint64_t d);

struct PrecisionPolicy {
    /// Precision above nu_p(d) + nu_p(c!) used on the first attempt.
    unsigned initial_slack = 1;
    /// Past this slack the exact integer path is used.
    unsigned max_slack = 1u << 12;
};

/// nu_p(S) computed modulo p^M with escalating M. Requires p | d and p prime.
ExtendedInt sum_valuation(std::uint64_t t, std::uint64_t d, std::uint64_t c, std::int64_t n0, std::uint64_t p,
                          const PrecisionPolicy& policy = {});

struct DirectCheckOptions {
    std::int64_t n0 = -1;
    /// Values of c tried before the ascending scan, in priority order.
    std::vector<std::uint64_t> c_hints;
    /// Past this point the check gives up with Verdict::undecided.
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Decides C_t by scanning c in {t, ..., d-1} at the fixed n0; c < t always holds exactly.
DirectCheckOutcome check_Ct_direct(std::uint64_t t, std::uint64_t d, const DirectCheckOptions& options = {});

/// The single congruence at (t, d, c, n); requires c < d.
bool check_gid_at(std::uint64_t t, std::uint64_t d, std::uint64_t c, std::int64_t n);

}  // namespace rootcong
