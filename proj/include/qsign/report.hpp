#pragma once

#include "qsign/bigint.hpp"

#include "json.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qsign {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kToolVersion = "qsign 1.0.0";

/// Integers within +-(2^53 - 1) become JSON numbers; anything wider is a
/// decimal string so no JSON reader can round it.
Json encode_int(const BigInt& v);
Json encode_ints(std::span<const BigInt> vs);

enum class Status { pass, fail, error };

std::string_view to_string(Status s) noexcept;

struct CrossCheck {
    std::string name;
    std::string expected;
    std::string actual;

    [[nodiscard]] bool agrees() const noexcept { return expected == actual; }
};

/// Machine-readable outcome of one verification command.
///
/// `violations` hold failures of a mathematical claim under test;
/// `cross_checks` hold comparisons between independent evaluation routes,
/// which should always agree. `data` carries the command's payload and
/// `notes` free-form documentation (e.g. formulas kept for the record only).
struct ReportDocument {
    std::string command;
    Json params = Json::object();
    Status status = Status::pass;
    std::vector<Json> violations;
    std::vector<CrossCheck> cross_checks;
    std::optional<std::string> started;
    std::optional<double> elapsed;
    std::string tool_version{kToolVersion};
    Json data = Json::object();
    std::vector<std::string> notes;

    void add_violation(Json record) { violations.push_back(std::move(record)); }
    void add_cross_check(std::string name, std::string expected, std::string actual);

    [[nodiscard]] bool cross_checks_agree() const noexcept;
    /// Sets status from content: error when a cross check disagrees, else
    /// fail on any violation, else pass. An `error` status is left untouched.
    void finalize();

    [[nodiscard]] Json to_json() const;
};

/// Serializes the report as one compact JSON object followed by a newline.
/// `destination` is a path or "-" for `out`. Throws UsageError when the path
/// cannot be written.
void emit_report(const ReportDocument& doc, const std::string& destination, std::ostream& out);

/// Opens `destination` ("-" selects `out`) and hands the stream to `writer`.
template <typename Writer>
void with_destination(const std::string& destination, std::ostream& out, Writer&& writer);

void write_coefficient_csv(std::ostream& os, std::span<const BigInt> coeffs);

}  // namespace qsign

#include "qsign/report_impl.hpp"
