#pragma once

#include "qsign/product.hpp"
#include "qsign/report.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

// Per-key verification units (one n or one p) and the ordered parallel
// runner that merges them into a single report.
namespace qsign::sweep {

/// first: (1-q^{3j+1})(1-q^{3j+2}); second: the same squared;
/// third: (1-q^{5j+1})...(1-q^{5j+4}).
enum class Family { first, second, third };

Family parse_family(const std::string& name);
std::string to_string(Family f);
qpoly::ProductSpec family_spec(Family f, std::uint64_t n);
/// Sign period: 3 for the mod-3 families, 5 for the third.
std::uint64_t family_period(Family f);

/// Degree, endpoints, reflection symmetry and value 0 at q = 1 of an
/// untruncated product, appended as cross checks.
void add_structural_checks(ReportDocument& doc, const qpoly::WideSeries& series,
                           const qpoly::ProductSpec& spec);

/// Expansion, sign pattern at the family's period, and structural checks
/// (degree, endpoints, reflection symmetry, value 0 at q = 1).
ReportDocument product_sign_report(Family f, std::uint64_t n);

/// Partial-sum positivity; for n <= kPartialSumCrossCheckMax the whole
/// vector is compared against the dp signed counts.
inline constexpr std::uint64_t kPartialSumCrossCheckMax = 30;
ReportDocument partial_sums_report(std::uint64_t n);

/// A-polynomial of expand_borwein(n) against the alternating q-binomial sum with m = n + 1.
ReportDocument identity_report(std::uint64_t n);

/// One key's outcome in manifest/merge form.
Json to_record(const std::string& key_name, std::uint64_t key, const ReportDocument& doc);

/// Concatenates records (already in ascending key order) into one report.
ReportDocument merge_records(const std::string& command, Json params, const std::string& key_name,
                             const std::vector<Json>& records);

/// Evaluates `work` for every key on up to `jobs` threads and hands results
/// to `deliver` strictly in the order of `keys`. The first exception (in key
/// order) is rethrown after the workers stop.
void run_ordered(const std::vector<std::uint64_t>& keys, unsigned jobs,
                 const std::function<Json(std::uint64_t)>& work,
                 const std::function<void(std::uint64_t, const Json&)>& deliver);

}  // namespace qsign::sweep
