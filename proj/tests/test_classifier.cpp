#include "doctest.h"

#include "rootcong/classifier.hpp"

#include <algorithm>
#include <set>

using namespace rootcong;

namespace {

std::set<std::uint64_t> holding(const std::vector<ClassificationResult>& results) {
    std::set<std::uint64_t> out;
    for (const auto& result : results) {
        if (result.verdict == Verdict::holds) out.insert(result.d);
    }
    return out;
}

// {1} together with p^r <= limit for r <= max_exponent, plus extras.
std::set<std::uint64_t> prime_powers(std::uint64_t limit, unsigned max_exponent, std::set<std::uint64_t> extras) {
    extras.insert(1);
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (!is_prime(p)) continue;
        std::uint64_t q = 1;
        for (unsigned r = 1; r <= max_exponent && q <= limit / p; ++r) {
            q *= p;
            extras.insert(q);
        }
    }
    return extras;
}

}  // namespace

TEST_CASE("classify examples") {
    const ClassificationResult seven = classify(1, 7);
    CHECK(seven.verdict == Verdict::holds);
    CHECK(seven.t == 1);
    CHECK(seven.d == 7);

    const ClassificationResult six = classify(3, 6);
    CHECK(six.verdict == Verdict::fails);
    CHECK(six.decisive().id == CriterionId::DirectCheck);
    CHECK(six.decisive().outcome == Outcome::fails);
    REQUIRE(six.witness);
    CHECK(six.witness->failing_c == std::optional<std::uint64_t>(5));
    REQUIRE(six.witness->failing_report() != nullptr);
    CHECK(six.witness->failing_report()->prime == 2);
    CHECK(six.decisive().at("c") == 5);

    const ClassificationResult twelve = classify(4, 12);
    CHECK(twelve.verdict == Verdict::fails);
    CHECK(twelve.decisive().id == CriterionId::PropBeta);
    CHECK_FALSE(twelve.witness);

    CHECK(classify(4, 6).decisive().id == CriterionId::PropSuffcond);
    CHECK(classify(4, 6).verdict == Verdict::holds);
}

TEST_CASE("hints") {
    const auto contains = [](const std::vector<std::uint64_t>& hints, std::uint64_t c) {
        return std::find(hints.begin(), hints.end(), c) != hints.end();
    };
    CHECK(contains(witness_hints(5, 19683), 15309));
    CHECK(contains(witness_hints(4, 512), 384));
    CHECK(contains(witness_hints(4, 2187), 1701));
    CHECK(contains(witness_hints(5, 4096), 3072));
    CHECK(contains(witness_hints(3, 6), 5));
    for (std::uint64_t t = 1; t <= 6; ++t) {
        for (std::uint64_t d = 1; d <= 3000; ++d) {
            for (std::uint64_t c : witness_hints(t, d)) REQUIRE(c < d);
        }
    }
}

TEST_CASE("scan t = 2 and t = 3") {
    CHECK(holding(scan(2, 1, 100)) == prime_powers(100, 2, {8}));
    CHECK(holding(scan(3, 1, 100)) == prime_powers(100, 3, {16, 32, 81}));
}

TEST_CASE("scan t = 4 up to 50") {
    const auto results = scan(4, 1, 50);
    REQUIRE(results.size() == 50);
    for (std::size_t i = 0; i < results.size(); ++i) CHECK(results[i].d == i + 1);
    const auto holds = holding(results);
    CHECK(holds.count(6) == 1);
    CHECK(holds.count(12) == 0);
    CHECK(holds == prime_powers(50, 4, {6, 32}));
}

TEST_CASE("moduli up to t hold") {
    for (std::uint64_t t = 1; t <= 12; ++t) {
        for (std::uint64_t d = 1; d <= t; ++d) {
            const ClassificationResult result = classify(t, d);
            REQUIRE(result.verdict == Verdict::holds);
        }
    }
}

TEST_CASE("closed form for a prime divisor above t") {
    CHECK(classify_corollary_simple(3, 25) == std::optional<Verdict>(Verdict::holds));
    CHECK(classify_corollary_simple(3, 625) == std::optional<Verdict>(Verdict::fails));
    CHECK(classify_corollary_simple(3, 10) == std::optional<Verdict>(Verdict::fails));
    CHECK_FALSE(classify_corollary_simple(3, 8));
    CHECK_FALSE(classify_corollary_simple(4, 1));

    for (std::uint64_t t = 1; t <= 6; ++t) {
        for (std::uint64_t d = 1; d <= 2000; ++d) {
            const auto simple = classify_corollary_simple(t, d);
            if (!simple) continue;
            INFO("t=" << t << " d=" << d);
            REQUIRE(classify(t, d).verdict == *simple);
        }
    }
}

TEST_CASE("the decisive criterion is the first decided one") {
    for (std::uint64_t t = 1; t <= 5; ++t) {
        for (std::uint64_t d = 1; d <= 300; ++d) {
            const ClassificationResult result = classify(t, d);
            const std::vector<CriterionVerdict> ladder = evaluate_criteria(t, d);
            REQUIRE_FALSE(result.provenance.empty());
            const auto first = std::find_if(ladder.begin(), ladder.end(), [](const auto& v) { return v.decided(); });
            const std::size_t consulted = result.provenance.size();
            for (std::size_t i = 0; i + 1 < consulted; ++i) {
                REQUIRE(result.provenance[i].id == ladder[i].id);
                REQUIRE_FALSE(result.provenance[i].decided());
            }
            if (first == ladder.end()) {
                REQUIRE(result.decisive().id == CriterionId::DirectCheck);
                REQUIRE(result.witness);
            } else {
                REQUIRE(result.decisive().id == first->id);
                REQUIRE(consulted == static_cast<std::size_t>(first - ladder.begin()) + 1);
            }
            const Outcome expected = result.verdict == Verdict::holds ? Outcome::holds : Outcome::fails;
            REQUIRE(result.decisive().outcome == expected);
            if (result.verdict == Verdict::fails && result.decisive().id == CriterionId::DirectCheck) {
                REQUIRE(result.witness->failing_report() != nullptr);
            }
        }
    }
}

TEST_CASE("scan output does not depend on the number of workers") {
    const auto serial = scan(5, 1, 200, 1);
    const auto parallel = scan(5, 1, 200, 4);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        REQUIRE(serial[i].d == parallel[i].d);
        REQUIRE(serial[i].verdict == parallel[i].verdict);
        REQUIRE(serial[i].decisive().id == parallel[i].decisive().id);
        REQUIRE(serial[i].decisive().detail == parallel[i].decisive().detail);
    }
    CHECK_THROWS_AS(scan(5, 10, 3), std::invalid_argument);
}

TEST_CASE("an exhausted budget is reported as undecided") {
    ClassifyOptions options;
    options.budget = std::chrono::milliseconds(0);
    const ClassificationResult result = classify(5, 4096, options);
    CHECK(result.verdict == Verdict::undecided);
    // Criteria still decide without touching the budget.
    CHECK(classify(4, 12, options).verdict == Verdict::fails);
}
