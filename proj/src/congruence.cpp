#include "rootcong/congruence.hpp"

#include "rootcong/residue.hpp"
#include "rootcong/symfun.hpp"

#include <algorithm>
#include <map>

namespace rootcong {

namespace {

// Walks c = 0, 1, 2, ... over the nested intervals {n0-c+1, ..., n0} and
// evaluates N_c = sum_{k>=1} (d^t)^k e_{c-kt} modulo p^M by Horner's rule.
// Terms with k*t*nu_p(d) >= M vanish in the ring, so only the top
// kmax*t orders of the prefix are kept.
class ModularSumScanner {
public:
    ModularSumScanner(std::uint64_t t, std::uint64_t d, std::uint64_t p, std::int64_t n0, unsigned exponent,
                      std::optional<std::chrono::steady_clock::time_point> deadline)
        : t_(t),
          n0_(n0),
          ring_(make_ring(p, exponent)),
          max_terms_((exponent - 1) / (t * valuation(p, d))),
          prefix_(SymmetricPrefix::empty_mod(n0, ring_, Truncation::highest(std::max<std::uint64_t>(1, max_terms_ * t)))),
          deadline_(deadline) {
        BigInt base(static_cast<unsigned long>(d));
        mpz_powm_ui(step_.get_mpz_t(), base.get_mpz_t(), t, ring_->modulus().get_mpz_t());
    }

    const ResidueRing& ring() const { return *ring_; }

    void advance_to(std::uint64_t c) {
        while (c_ < c) {
            ++c_;
            prefix_ = std::move(prefix_).extend(n0_ - static_cast<std::int64_t>(c_) + 1);
            if (deadline_ && (c_ & 31U) == 0 && std::chrono::steady_clock::now() > *deadline_) {
                throw BudgetExceeded();
            }
        }
    }

    /// N_c mod p^M at the current c.
    BigInt numerator() const {
        const std::uint64_t terms = std::min<std::uint64_t>(max_terms_, c_ / t_);
        BigInt acc(0);
        for (std::uint64_t k = terms; k >= 1; --k) {
            acc += prefix_.coefficient(c_ - k * t_);
            acc *= step_;
            ring_->reduce(acc);
        }
        return acc;
    }

private:
    std::uint64_t t_;
    std::int64_t n0_;
    RingHandle ring_;
    std::uint64_t max_terms_;
    SymmetricPrefix prefix_;
    BigInt step_;  // d^t mod p^M
    std::uint64_t c_ = 0;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
};

void require_prime_divisor(std::uint64_t p, std::uint64_t d) {
    if (!is_prime(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
    if (d == 0 || d % p != 0) throw std::invalid_argument(std::to_string(p) + " does not divide d");
}

// Failing values among `cs` (ascending, each >= t) for one prime, with their
// exact nu_p(S). Stops after the first failure when `first_only` is set.
std::map<std::uint64_t, std::int64_t> scan_failures(std::uint64_t t, std::uint64_t d, std::uint64_t p,
                                                    std::int64_t n0, const std::vector<std::uint64_t>& cs,
                                                    bool first_only,
                                                    std::optional<std::chrono::steady_clock::time_point> deadline) {
    std::map<std::uint64_t, std::int64_t> failures;
    if (cs.empty()) return failures;
    const auto v = static_cast<std::int64_t>(valuation(p, d));
    const auto exponent = static_cast<unsigned>(v + static_cast<std::int64_t>(vp_factorial(p, cs.back())));
    ModularSumScanner scanner(t, d, p, n0, exponent, deadline);
    for (std::uint64_t c : cs) {
        scanner.advance_to(c);
        const auto factorial_val = static_cast<std::int64_t>(vp_factorial(p, c));
        const ExtendedInt val = scanner.ring().valuation(scanner.numerator());
        if (val < ExtendedInt(v + factorial_val)) {
            failures.emplace(c, val.value() - factorial_val);
            if (first_only) break;
        }
    }
    return failures;
}

}  // namespace

std::string to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        case Verdict::undecided: return "undecided";
    }
    return "?";
}

const ValuationReport* DirectCheckOutcome::failing_report() const {
    for (const auto& report : reports) {
        if (!report.satisfied) return &report;
    }
    return nullptr;
}

BigInt lemma1_numerator(const CongruenceInstance& inst) {
    if (inst.t == 0) throw std::invalid_argument("t must be positive");
    const auto c = static_cast<std::int64_t>(inst.c);
    const SymmetricPrefix prefix = elementary_symmetric_exact(inst.n - c + 1, inst.n);
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), inst.d, inst.t);
    BigInt step = power;
    BigInt total(0);
    for (std::uint64_t k = 1; k * inst.t <= inst.c; ++k) {
        total += power * prefix.coefficient(inst.c - k * inst.t);
        power *= step;
    }
    return total;
}

Rational lemma1_sum(const CongruenceInstance& inst) {
    return Rational(lemma1_numerator(inst), factorial(inst.c));
}

bool congruent_mod(const Rational& x, const Rational& y, std::uint64_t d) {
    if (d == 0) throw std::invalid_argument("modulus must be positive");
    const Rational diff = x - y;
    for (const auto& [p, r] : factorize(d)) {
        if (vp(p, diff) < ExtendedInt(r)) return false;
    }
    return true;
}

ExtendedInt sum_valuation(std::uint64_t t, std::uint64_t d, std::uint64_t c, std::int64_t n0, std::uint64_t p,
                          const PrecisionPolicy& policy) {
    if (t == 0) throw std::invalid_argument("t must be positive");
    require_prime_divisor(p, d);
    if (c < t) return ExtendedInt::infinity();
    const auto factorial_val = static_cast<std::int64_t>(vp_factorial(p, c));
    const auto base = static_cast<unsigned>(valuation(p, d) + factorial_val);
    for (unsigned slack = std::max(1u, policy.initial_slack); slack <= policy.max_slack; slack *= 2) {
        ModularSumScanner scanner(t, d, p, n0, base + slack, std::nullopt);
        scanner.advance_to(c);
        const BigInt residue = scanner.numerator();
        if (residue != 0) return scanner.ring().valuation(residue) - factorial_val;
    }
    return vp(p, lemma1_numerator({t, d, c, n0})) - factorial_val;
}

DirectCheckOutcome check_Ct_direct(std::uint64_t t, std::uint64_t d, const DirectCheckOptions& options) {
    if (t == 0 || d == 0) throw std::invalid_argument("t and d must be positive");
    DirectCheckOutcome outcome;
    outcome.n0 = options.n0;
    if (d <= t) return outcome;
    const PrimeFactorization factors = factorize(d);

    std::optional<std::uint64_t> failing_c;
    std::map<std::uint64_t, std::int64_t> known;  // prime -> found valuation at failing_c

    try {
        std::vector<std::uint64_t> hints;
        for (std::uint64_t c : options.c_hints) {
            if (c >= t && c < d && std::find(hints.begin(), hints.end(), c) == hints.end()) hints.push_back(c);
        }
        if (!hints.empty()) {
            std::vector<std::uint64_t> sorted = hints;
            std::sort(sorted.begin(), sorted.end());
            std::map<std::uint64_t, std::map<std::uint64_t, std::int64_t>> per_prime;
            for (const auto& [p, r] : factors) {
                per_prime[p] = scan_failures(t, d, p, options.n0, sorted, false, options.deadline);
            }
            for (std::uint64_t c : hints) {
                for (const auto& [p, fails] : per_prime) {
                    if (auto it = fails.find(c); it != fails.end()) known[p] = it->second;
                }
                if (!known.empty()) {
                    failing_c = c;
                    break;
                }
            }
        }

        if (!failing_c) {
            std::uint64_t limit = d;  // exclusive
            for (const auto& [p, r] : factors) {
                std::vector<std::uint64_t> cs;
                for (std::uint64_t c = t; c < limit; ++c) cs.push_back(c);
                const auto fails = scan_failures(t, d, p, options.n0, cs, true, options.deadline);
                if (fails.empty()) continue;
                const auto [c, found] = *fails.begin();
                if (!failing_c || c < *failing_c) known.clear();
                failing_c = c;
                known[p] = found;
                limit = c;
            }
        }
    } catch (const BudgetExceeded&) {
        outcome.verdict = Verdict::undecided;
        return outcome;
    }

    if (!failing_c) return outcome;
    outcome.verdict = Verdict::fails;
    outcome.failing_c = failing_c;
    for (const auto& [p, r] : factors) {
        ValuationReport report;
        report.prime = p;
        report.required = r;
        if (auto it = known.find(p); it != known.end()) {
            report.found = it->second;
        } else {
            report.found = sum_valuation(t, d, *failing_c, options.n0, p);
        }
        report.satisfied = report.found >= ExtendedInt(report.required);
        outcome.reports.push_back(report);
    }
    return outcome;
}

bool check_gid_at(std::uint64_t t, std::uint64_t d, std::uint64_t c, std::int64_t n) {
    if (c >= d) throw std::invalid_argument("check_gid_at requires c < d");
    return congruent_mod(lemma1_sum({t, d, c, n}), Rational(0L), d);
}

}  // namespace rootcong
