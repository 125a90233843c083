#include "qsign/sweep.hpp"

#include "qsign/borwein.hpp"
#include "qsign/errors.hpp"
#include "qsign/modcount.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <future>
#include <thread>

namespace qsign::sweep {

Family parse_family(const std::string& name)
{
    if (name == "first")
        return Family::first;
    if (name == "second")
        return Family::second;
    if (name == "third")
        return Family::third;
    throw UsageError("unknown product family '" + name + "' (expected first, second or third)");
}

std::string to_string(Family f)
{
    switch (f) {
    case Family::first:
        return "first";
    case Family::second:
        return "second";
    case Family::third:
        return "third";
    }
    return "first";
}

qpoly::ProductSpec family_spec(Family f, std::uint64_t n)
{
    switch (f) {
    case Family::second:
        return qpoly::ProductSpec{3, {1, 2}, 2, n, {}};
    case Family::third:
        return qpoly::ProductSpec{5, {1, 2, 3, 4}, 1, n, {}};
    case Family::first:
        break;
    }
    return qpoly::borwein_spec(n);
}

std::uint64_t family_period(Family f) { return f == Family::third ? 5 : 3; }

void add_structural_checks(ReportDocument& doc, const qpoly::WideSeries& series,
                           const qpoly::ProductSpec& spec)
{
    const auto exps = spec.exponents();
    const std::uint64_t degree = spec.full_degree();
    const int parity = exps.size() % 2 == 0 ? 1 : -1;

    std::size_t actual_degree = series.top();
    while (actual_degree > 0 && series.sign(actual_degree) == 0)
        --actual_degree;
    doc.add_cross_check("degree", std::to_string(degree), std::to_string(actual_degree));
    doc.add_cross_check("constant_term", "1", series.coefficient(0).get_str());
    doc.add_cross_check("leading_coefficient", std::to_string(parity),
                        series.coefficient(degree).get_str());

    bool reflected = series.top() == degree;
    for (std::size_t e = 0; reflected && e < degree - e; ++e) {
        BigInt lo = series.coefficient(e);
        if (parity < 0)
            lo = -lo;
        reflected = lo == series.coefficient(degree - e);
    }
    doc.add_cross_check("reflection_symmetry", "true", reflected ? "true" : "false");

    BigInt total = 0;
    for (std::size_t e = 0; e <= series.top(); ++e)
        total += series.coefficient(e);
    doc.add_cross_check("value_at_1", "0", total.get_str());
}

ReportDocument product_sign_report(Family f, std::uint64_t n)
{
    ReportDocument doc;
    doc.command = f == Family::first ? "verify" : "conjecture23";
    doc.params["family"] = to_string(f);
    doc.params["n"] = n;

    const auto spec = family_spec(f, n);
    const auto series = qpoly::expand_product_wide(spec);
    const auto signs = borwein::check_sign_pattern(series, n, family_period(f));
    for (const auto& v : signs.violations) {
        Json rec = Json{{"n", n}};
        rec.update(borwein::to_json(v));
        doc.add_violation(std::move(rec));
    }
    add_structural_checks(doc, series, spec);
    doc.data["degree"] = spec.full_degree();
    doc.data["max_bits"] = series.max_bits();
    doc.finalize();
    return doc;
}

ReportDocument partial_sums_report(std::uint64_t n)
{
    ReportDocument doc = borwein::verify_partial_sum_positivity(n);
    if (n <= kPartialSumCrossCheckMax) {
        const auto dp = modcount::dp_signed_counts(n);
        doc.add_cross_check("partial_sums_vs_signed_counts", encode_ints(dp.signed_counts).dump(),
                            doc.data["partial_sums"].dump());
    }
    doc.finalize();
    return doc;
}

ReportDocument identity_report(std::uint64_t n)
{
    ReportDocument doc;
    doc.command = "identity";
    doc.params["n"] = n;
    const std::uint64_t m = n + 1;
    const auto expanded = borwein::decompose_abc(borwein::expand_borwein(n)).a;
    const auto alternating = borwein::a_via_qbinomial(m);
    if (expanded != alternating) {
        const std::size_t len = std::max(expanded.size(), alternating.size());
        for (std::size_t e = 0; e < len; ++e) {
            if (expanded.coeff(e) != alternating.coeff(e)) {
                doc.add_violation(Json{{"n", n}, {"m", m}, {"exponent", e},
                                       {"expansion", encode_int(expanded.coeff(e))},
                                       {"qbinomial_sum", encode_int(alternating.coeff(e))}});
                break;
            }
        }
    }
    doc.data["m"] = m;
    doc.data["a_degree"] = expanded.degree() ? Json(*expanded.degree()) : Json(nullptr);
    doc.finalize();
    return doc;
}

Json to_record(const std::string& key_name, std::uint64_t key, const ReportDocument& doc)
{
    Json rec = Json::object();
    rec[key_name] = key;
    rec["status"] = to_string(doc.status);
    rec["violations"] = doc.violations;
    rec["cross_checks"] = Json::array();
    for (const auto& c : doc.cross_checks)
        rec["cross_checks"].push_back(Json{{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}});
    rec["data"] = doc.data;
    rec["notes"] = doc.notes;
    return rec;
}

ReportDocument merge_records(const std::string& command, Json params, const std::string& key_name,
                             const std::vector<Json>& records)
{
    ReportDocument doc;
    doc.command = command;
    doc.params = std::move(params);
    Json results = Json::array();
    for (const auto& rec : records) {
        const std::uint64_t key = rec.at(key_name).get<std::uint64_t>();
        const std::string prefix = key_name + "=" + std::to_string(key) + ":";
        for (const auto& v : rec.at("violations")) {
            Json tagged = Json{{key_name, key}};
            tagged.update(v);
            doc.add_violation(std::move(tagged));
        }
        for (const auto& c : rec.at("cross_checks"))
            doc.add_cross_check(prefix + c.at("name").get<std::string>(), c.at("expected").get<std::string>(),
                                c.at("actual").get<std::string>());
        for (const auto& note : rec.at("notes")) {
            const auto s = note.get<std::string>();
            if (std::find(doc.notes.begin(), doc.notes.end(), s) == doc.notes.end())
                doc.notes.push_back(s);
        }
        results.push_back(Json{{key_name, key}, {"status", rec.at("status")}, {"data", rec.at("data")}});
    }
    doc.data["results"] = std::move(results);
    doc.finalize();
    return doc;
}

void run_ordered(const std::vector<std::uint64_t>& keys, unsigned jobs,
                 const std::function<Json(std::uint64_t)>& work,
                 const std::function<void(std::uint64_t, const Json&)>& deliver)
{
    const std::size_t count = keys.size();
    if (count == 0)
        return;
    jobs = std::clamp<unsigned>(jobs, 1, static_cast<unsigned>(std::min<std::size_t>(count, 256)));

    std::vector<std::promise<Json>> slots(count);
    std::vector<std::future<Json>> results;
    results.reserve(count);
    for (auto& s : slots)
        results.push_back(s.get_future());

    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count)
                return;
            if (stop.load()) {
                slots[i].set_exception(std::make_exception_ptr(InternalError("sweep cancelled")));
                continue;
            }
            try {
                slots[i].set_value(work(keys[i]));
            } catch (...) {
                slots[i].set_exception(std::current_exception());
            }
        }
    };

    std::exception_ptr failure;
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < jobs; ++t)
            pool.emplace_back(worker);
        for (std::size_t i = 0; i < count && !failure; ++i) {
            try {
                deliver(keys[i], results[i].get());
            } catch (...) {
                failure = std::current_exception();
                stop.store(true);
            }
        }
    }
    if (failure)
        std::rethrow_exception(failure);
}

}  // namespace qsign::sweep
