#pragma once

// Decides C_t by running the closed-form criteria in a fixed order and falling
// back to the direct check for whatever they leave open.

#include "rootcong/congruence.hpp"
#include "rootcong/criteria.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

namespace rootcong {

struct ClassificationResult {
    std::uint64_t t = 1;
    std::uint64_t d = 1;
    Verdict verdict = Verdict::undecided;
    /// Criteria consulted, in order; the last entry is the decisive one unless undecided.
    std::vector<CriterionVerdict> provenance;
    /// Present whenever the direct check ran.
    std::optional<DirectCheckOutcome> witness;
    std::chrono::steady_clock::duration wall_time{};

    const CriterionVerdict& decisive() const { return provenance.back(); }
};

struct ClassifyOptions {
    std::int64_t n0 = -1;
    /// Time allowed for the direct check of a single d.
    std::chrono::milliseconds budget = std::chrono::minutes(30);
};

/// c values worth trying first in a direct check of (t, d).
std::vector<std::uint64_t> witness_hints(std::uint64_t t, std::uint64_t d);

ClassificationResult classify(std::uint64_t t, std::uint64_t d, const ClassifyOptions& options = {});

/// Classifies every d in [d_min, d_max] on `jobs` worker threads; results are ordered by d.
std::vector<ClassificationResult> scan(std::uint64_t t, std::uint64_t d_min, std::uint64_t d_max, unsigned jobs = 1,
                                       const ClassifyOptions& options = {});

/// When d has a prime divisor p > t: holds iff d = p^r with p > t and r <= t.
/// Empty when d has no prime divisor above t.
std::optional<Verdict> classify_corollary_simple(std::uint64_t t, std::uint64_t d);

}  // namespace rootcong
