#pragma once

#include "qsign/report.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qsign {

/// FNV-1a 64 of a canonical parameter string, as 16 lowercase hex digits.
std::string parameter_hash(std::string_view canonical);

/// Progress of a sweep over n: one stored record per completed n, valid
/// only for the parameter hash it was created with.
struct RunManifest {
    std::string param_hash;
    std::string params;
    std::map<std::uint64_t, Json> completed;

    /// Throws UsageError if the file is unreadable or malformed.
    static RunManifest load(const std::string& path);
    /// Writes to a sibling temporary and renames it over `path`.
    void save(const std::string& path) const;
};

/// Requested n in [n_min, n_max] not yet completed, ascending. Throws
/// UsageError when the manifest was written for different parameters.
std::vector<std::uint64_t> resume(const RunManifest& manifest, const std::string& param_hash,
                                  std::uint64_t n_min, std::uint64_t n_max);

}  // namespace qsign
