#pragma once

// Flat, machine-readable records of classifications (JSON lines and CSV).

#include "rootcong/classifier.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace rootcong {

struct ReportRecord {
    std::uint64_t t = 0;
    std::uint64_t d = 0;
    std::string verdict;  // "holds" | "fails" | "undecided"
    std::string decisive_criterion;
    std::optional<std::uint64_t> witness_c;
    std::optional<std::uint64_t> witness_prime;
    std::optional<ExtendedInt> found_valuation;
    std::optional<std::int64_t> required_valuation;
    std::int64_t elapsed_ms = 0;

    friend bool operator==(const ReportRecord&, const ReportRecord&) = default;
};

/// Witness fields are filled when the direct check produced a failure.
ReportRecord make_record(const ClassificationResult& result);

nlohmann::ordered_json to_json(const ReportRecord& record);
/// Throws std::invalid_argument on missing or mistyped fields.
ReportRecord record_from_json(const nlohmann::ordered_json& json);

/// t,d,verdict,decisive_criterion,witness_c,witness_prime,found_valuation,required_valuation,elapsed_ms
std::string_view csv_header();
std::string to_csv_row(const ReportRecord& record);
/// Inverse of to_csv_row; throws std::invalid_argument on malformed rows.
ReportRecord record_from_csv(std::string_view row);

/// One human-readable line.
std::string to_text(const ReportRecord& record);

}  // namespace rootcong
