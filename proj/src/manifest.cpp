#include "qsign/manifest.hpp"

#include "qsign/errors.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace qsign {

std::string parameter_hash(std::string_view canonical)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : canonical) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

RunManifest RunManifest::load(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot read manifest '" + path + "'");
    RunManifest m;
    try {
        const Json j = Json::parse(in);
        m.param_hash = j.at("param_hash").get<std::string>();
        m.params = j.at("params").get<std::string>();
        for (const auto& rec : j.at("completed"))
            m.completed.emplace(rec.at("n").get<std::uint64_t>(), rec);
    } catch (const Json::exception& e) {
        throw UsageError("malformed manifest '" + path + "': " + e.what());
    }
    return m;
}

void RunManifest::save(const std::string& path) const
{
    Json j = Json::object();
    j["param_hash"] = param_hash;
    j["params"] = params;
    if (!completed.empty()) {
        j["n_min"] = completed.begin()->first;
        j["n_max"] = completed.rbegin()->first;
    }
    j["completed"] = Json::array();
    for (const auto& [n, rec] : completed)
        j["completed"].push_back(rec);

    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out)
            throw UsageError("cannot write manifest '" + tmp + "'");
        out << j.dump(1) << '\n';
        if (!out)
            throw UsageError("write to manifest '" + tmp + "' failed");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw UsageError("cannot replace manifest '" + path + "'");
}

std::vector<std::uint64_t> resume(const RunManifest& manifest, const std::string& param_hash,
                                  std::uint64_t n_min, std::uint64_t n_max)
{
    if (manifest.param_hash != param_hash)
        throw UsageError("manifest parameter hash " + manifest.param_hash + " does not match " +
                         param_hash + "; rerun with --fresh to discard it");
    std::vector<std::uint64_t> todo;
    for (std::uint64_t n = n_min; n <= n_max; ++n) {
        if (!manifest.completed.contains(n))
            todo.push_back(n);
    }
    return todo;
}

}  // namespace qsign
