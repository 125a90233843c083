#include "qsign/report.hpp"

#include <ostream>

namespace qsign {

namespace {

const BigInt kJsonSafeLimit = BigInt("9007199254740991");

}  // namespace

Json encode_int(const BigInt& v)
{
    if (abs(v) <= kJsonSafeLimit)
        return Json(v.get_si());
    return Json(to_decimal(v));
}

Json encode_ints(std::span<const BigInt> vs)
{
    Json arr = Json::array();
    for (const auto& v : vs)
        arr.push_back(encode_int(v));
    return arr;
}

std::string_view to_string(Status s) noexcept
{
    switch (s) {
    case Status::pass:
        return "pass";
    case Status::fail:
        return "fail";
    case Status::error:
        return "error";
    }
    return "error";
}

void ReportDocument::add_cross_check(std::string name, std::string expected, std::string actual)
{
    cross_checks.push_back({std::move(name), std::move(expected), std::move(actual)});
}

bool ReportDocument::cross_checks_agree() const noexcept
{
    for (const auto& c : cross_checks) {
        if (!c.agrees())
            return false;
    }
    return true;
}

void ReportDocument::finalize()
{
    if (status == Status::error)
        return;
    if (!cross_checks_agree())
        status = Status::error;
    else
        status = violations.empty() ? Status::pass : Status::fail;
}

Json ReportDocument::to_json() const
{
    Json j = Json::object();
    j["command"] = command;
    j["params"] = params;
    j["status"] = to_string(status);
    j["violations"] = Json::array();
    for (const auto& v : violations)
        j["violations"].push_back(v);
    j["cross_checks"] = Json::array();
    for (const auto& c : cross_checks)
        j["cross_checks"].push_back(Json{{"name", c.name},
                                         {"expected", c.expected},
                                         {"actual", c.actual},
                                         {"agree", c.agrees()}});
    j["started"] = started ? Json(*started) : Json(nullptr);
    j["elapsed"] = elapsed ? Json(*elapsed) : Json(nullptr);
    j["tool_version"] = tool_version;
    j["data"] = data;
    j["notes"] = notes;
    return j;
}

void emit_report(const ReportDocument& doc, const std::string& destination, std::ostream& out)
{
    const std::string text = doc.to_json().dump();
    with_destination(destination, out, [&](std::ostream& os) { os << text << '\n'; });
}

void write_coefficient_csv(std::ostream& os, std::span<const BigInt> coeffs)
{
    os << "exponent,coefficient\n";
    for (std::size_t e = 0; e < coeffs.size(); ++e)
        os << e << ',' << coeffs[e].get_str() << '\n';
}

}  // namespace qsign
