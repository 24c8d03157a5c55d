#include "rootcong/report.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace rootcong {

namespace {

template <typename T>
T parse_number(std::string_view text, std::string_view field) {
    T value{};
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size()) {
        throw std::invalid_argument("bad value for " + std::string(field) + ": '" + std::string(text) + "'");
    }
    return value;
}

ExtendedInt parse_valuation(std::string_view text) {
    if (text == "+inf") return ExtendedInt::infinity();
    return parse_number<std::int64_t>(text, "found_valuation");
}

template <typename T>
std::string optional_cell(const std::optional<T>& value) {
    if (!value) return "";
    if constexpr (std::is_same_v<T, ExtendedInt>) {
        return value->to_string();
    } else {
        return std::to_string(*value);
    }
}

template <typename T>
nlohmann::ordered_json optional_json(const std::optional<T>& value) {
    if (!value) return nullptr;
    return *value;
}

template <typename T>
std::optional<T> optional_field(const nlohmann::ordered_json& json, const char* key) {
    if (!json.contains(key) || json.at(key).is_null()) return std::nullopt;
    return json.at(key).get<T>();
}

}  // namespace

ReportRecord make_record(const ClassificationResult& result) {
    ReportRecord record;
    record.t = result.t;
    record.d = result.d;
    record.verdict = to_string(result.verdict);
    record.decisive_criterion = result.provenance.empty() ? "" : std::string(to_string(result.decisive().id));
    record.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(result.wall_time).count();
    if (result.witness && result.witness->failing_c) {
        if (const ValuationReport* failing = result.witness->failing_report()) {
            record.witness_c = *result.witness->failing_c;
            record.witness_prime = failing->prime;
            record.found_valuation = failing->found;
            record.required_valuation = failing->required;
        }
    }
    return record;
}

nlohmann::ordered_json to_json(const ReportRecord& record) {
    nlohmann::ordered_json json;
    json["t"] = record.t;
    json["d"] = record.d;
    json["verdict"] = record.verdict;
    json["decisive_criterion"] = record.decisive_criterion;
    json["witness_c"] = optional_json(record.witness_c);
    json["witness_prime"] = optional_json(record.witness_prime);
    if (!record.found_valuation) {
        json["found_valuation"] = nullptr;
    } else if (record.found_valuation->is_infinite()) {
        json["found_valuation"] = "+inf";
    } else {
        json["found_valuation"] = record.found_valuation->value();
    }
    json["required_valuation"] = optional_json(record.required_valuation);
    json["elapsed_ms"] = record.elapsed_ms;
    return json;
}

ReportRecord record_from_json(const nlohmann::ordered_json& json) {
    try {
        ReportRecord record;
        record.t = json.at("t").get<std::uint64_t>();
        record.d = json.at("d").get<std::uint64_t>();
        record.verdict = json.at("verdict").get<std::string>();
        record.decisive_criterion = json.at("decisive_criterion").get<std::string>();
        record.witness_c = optional_field<std::uint64_t>(json, "witness_c");
        record.witness_prime = optional_field<std::uint64_t>(json, "witness_prime");
        if (json.contains("found_valuation") && !json.at("found_valuation").is_null()) {
            const auto& found = json.at("found_valuation");
            record.found_valuation =
                found.is_string() ? parse_valuation(found.get<std::string>()) : ExtendedInt(found.get<std::int64_t>());
        }
        record.required_valuation = optional_field<std::int64_t>(json, "required_valuation");
        record.elapsed_ms = json.at("elapsed_ms").get<std::int64_t>();
        return record;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed report record: ") + e.what());
    }
}

std::string_view csv_header() {
    return "t,d,verdict,decisive_criterion,witness_c,witness_prime,found_valuation,required_valuation,elapsed_ms";
}

std::string to_csv_row(const ReportRecord& record) {
    std::ostringstream out;
    out << record.t << ',' << record.d << ',' << record.verdict << ',' << record.decisive_criterion << ','
        << optional_cell(record.witness_c) << ',' << optional_cell(record.witness_prime) << ','
        << optional_cell(record.found_valuation) << ',' << optional_cell(record.required_valuation) << ','
        << record.elapsed_ms;
    return out.str();
}

ReportRecord record_from_csv(std::string_view row) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = row.find(',', start);
        cells.push_back(row.substr(start, comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (cells.size() != 9) throw std::invalid_argument("expected 9 CSV cells, got " + std::to_string(cells.size()));

    ReportRecord record;
    record.t = parse_number<std::uint64_t>(cells[0], "t");
    record.d = parse_number<std::uint64_t>(cells[1], "d");
    record.verdict = std::string(cells[2]);
    record.decisive_criterion = std::string(cells[3]);
    if (!cells[4].empty()) record.witness_c = parse_number<std::uint64_t>(cells[4], "witness_c");
    if (!cells[5].empty()) record.witness_prime = parse_number<std::uint64_t>(cells[5], "witness_prime");
    if (!cells[6].empty()) record.found_valuation = parse_valuation(cells[6]);
    if (!cells[7].empty()) record.required_valuation = parse_number<std::int64_t>(cells[7], "required_valuation");
    record.elapsed_ms = parse_number<std::int64_t>(cells[8], "elapsed_ms");
    return record;
}

std::string to_text(const ReportRecord& record) {
    std::ostringstream out;
    out << "t=" << record.t << " d=" << record.d << " verdict=" << record.verdict
        << " decisive=" << record.decisive_criterion;
    if (record.witness_c) {
        out << " c=" << *record.witness_c << " p=" << optional_cell(record.witness_prime)
            << " found=" << optional_cell(record.found_valuation)
            << " required=" << optional_cell(record.required_valuation);
    }
    out << " elapsed_ms=" << record.elapsed_ms;
    return out.str();
}

}  // namespace rootcong
