#include "rootcong/classifier.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <stdexcept>
#include <thread>
#include <utility>

namespace rootcong {

namespace {

using CriterionFn = CriterionVerdict (*)(std::uint64_t, std::uint64_t);

// Cheap necessary failures, then sufficient conditions, then specialised failures.
constexpr CriterionFn kLadder[] = {
    crit_toolarge_value, crit_toolarge_valuation, crit_d_le_t,   crit_power_holds, crit_suffcond,
    crit_beta,           crit_particular,         crit_powernot, crit_another,
};

// Hand-picked witnesses for the residual moduli with t <= 5.
const std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t>& known_witnesses() {
    static const std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> table = {
        {{3, 6}, 5},       {{4, 512}, 384},   {{4, 2187}, 1701},    {{5, 15}, 13},
        {{5, 20}, 18},     {{5, 4096}, 3072}, {{5, 19683}, 15309},
    };
    return table;
}

Outcome to_outcome(Verdict verdict) {
    switch (verdict) {
        case Verdict::holds: return Outcome::holds;
        case Verdict::fails: return Outcome::fails;
        case Verdict::undecided: return Outcome::inconclusive;
    }
    return Outcome::inconclusive;
}

Verdict to_verdict(Outcome outcome) {
    switch (outcome) {
        case Outcome::holds: return Verdict::holds;
        case Outcome::fails: return Verdict::fails;
        case Outcome::inconclusive: return Verdict::undecided;
    }
    return Verdict::undecided;
}

}  // namespace

std::vector<std::uint64_t> witness_hints(std::uint64_t t, std::uint64_t d) {
    if (t == 0 || d == 0) throw std::invalid_argument("t and d must be positive");
    std::vector<std::uint64_t> hints;
    auto add = [&](std::uint64_t c) {
        if (c >= t && c < d && std::find(hints.begin(), hints.end(), c) == hints.end()) hints.push_back(c);
    };

    if (auto it = known_witnesses().find({t, d}); it != known_witnesses().end()) add(it->second);

    const PrimeFactorization factors = factorize(d);
    if (factors.size() == 1) {
        const auto [p, r] = factors.front();
        const unsigned alpha = floor_log(p, t);
        if (r > alpha) {
            // m p^{r-alpha-1} for m = t, t+1, ...: the c used for too-large valuations and its neighbours.
            const std::uint64_t step = checked_pow(p, r - alpha - 1);
            for (std::uint64_t m = t; m < 3 * t && m * step < d; ++m) add(m * step);
        }
        if (t % p == 0) {
            const unsigned u = valuation(p, t);
            if (r > u) add((t - 1) * checked_pow(p, r - u) + checked_pow(p, r - u - 1));
        }
    } else if (factors.size() > 1) {
        add(d - 2);
        add(d - d / factors.back().prime);
    }
    return hints;
}

ClassificationResult classify(std::uint64_t t, std::uint64_t d, const ClassifyOptions& options) {
    if (t == 0 || d == 0) throw std::invalid_argument("t and d must be positive");
    const auto start = std::chrono::steady_clock::now();
    ClassificationResult result;
    result.t = t;
    result.d = d;

    for (CriterionFn criterion : kLadder) {
        result.provenance.push_back(criterion(t, d));
        if (result.provenance.back().decided()) {
            result.verdict = to_verdict(result.provenance.back().outcome);
            result.wall_time = std::chrono::steady_clock::now() - start;
            return result;
        }
    }

    DirectCheckOptions direct;
    direct.n0 = options.n0;
    direct.c_hints = witness_hints(t, d);
    direct.deadline = start + options.budget;
    DirectCheckOutcome outcome = check_Ct_direct(t, d, direct);

    CriterionVerdict verdict{CriterionId::DirectCheck, to_outcome(outcome.verdict), {{"n0", outcome.n0}}};
    if (const ValuationReport* failing = outcome.failing_report()) {
        verdict.detail.emplace_back("c", static_cast<std::int64_t>(*outcome.failing_c));
        verdict.detail.emplace_back("p", static_cast<std::int64_t>(failing->prime));
        verdict.detail.emplace_back("found", failing->found.value());
        verdict.detail.emplace_back("bound", failing->required);
    } else if (outcome.verdict == Verdict::holds) {
        verdict.detail.emplace_back("bound", static_cast<std::int64_t>(d) - 1);
    }
    result.provenance.push_back(std::move(verdict));
    result.verdict = outcome.verdict;
    result.witness = std::move(outcome);
    result.wall_time = std::chrono::steady_clock::now() - start;
    return result;
}

std::vector<ClassificationResult> scan(std::uint64_t t, std::uint64_t d_min, std::uint64_t d_max, unsigned jobs,
                                       const ClassifyOptions& options) {
    if (t == 0 || d_min == 0 || d_min > d_max) throw std::invalid_argument("scan needs t >= 1 and 1 <= d_min <= d_max");
    const std::uint64_t count = d_max - d_min + 1;
    std::vector<ClassificationResult> results(count);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t i = next++; i < count; i = next++) results[i] = classify(t, d_min + i, options);
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::min<std::uint64_t>(count, 256))));
    if (threads == 1) {
        worker();
        return results;
    }
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    pool.clear();  // joins
    return results;
}

std::optional<Verdict> classify_corollary_simple(std::uint64_t t, std::uint64_t d) {
    if (t == 0 || d == 0) throw std::invalid_argument("t and d must be positive");
    const PrimeFactorization factors = factorize(d);
    if (factors.empty() || factors.back().prime <= t) return std::nullopt;
    if (factors.size() == 1 && factors.front().exponent <= t) return Verdict::holds;
    return Verdict::fails;
}

}  // namespace rootcong
