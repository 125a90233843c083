#include "qsign/cli.hpp"

#include "qsign/errors.hpp"
#include "qsign/manifest.hpp"
#include "qsign/modcount.hpp"
#include "qsign/partitions.hpp"
#include "qsign/product.hpp"
#include "qsign/report.hpp"
#include "qsign/sweep.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

namespace qsign::cli {

namespace {

struct Options {
    std::string json = "-";
    std::string csv;
    std::uint64_t n = 0;
    std::uint64_t n_min = 0;
    std::uint64_t n_max = 0;
    std::vector<std::uint64_t> p;
    std::uint64_t k_max = 100;
    std::uint64_t j_max = 2000;
    unsigned jobs = 1;
    std::string manifest;
    bool fresh = false;
    bool timings = false;
    std::string family = "first";

    CLI::App* active = nullptr;

    bool given(const std::string& name) const
    {
        const auto* opt = active->get_option_no_throw(name);
        return opt != nullptr && opt->count() > 0;
    }
};

struct Range {
    std::uint64_t lo;
    std::uint64_t hi;
};

std::string utc_now()
{
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

Range resolve_range(const Options& o)
{
    if (o.given("--n")) {
        if (o.given("--n-min") || o.given("--n-max"))
            throw UsageError("--n cannot be combined with --n-min/--n-max");
        return {o.n, o.n};
    }
    if (!o.given("--n-max"))
        throw UsageError("either --n or --n-max is required");
    if (o.n_min > o.n_max)
        throw UsageError("--n-min exceeds --n-max");
    return {o.n_min, o.n_max};
}

int exit_code_for(const ReportDocument& doc)
{
    if (doc.status == Status::error || !doc.cross_checks_agree())
        return kExitInternal;
    if (!doc.violations.empty())
        return kExitClaimFailed;
    return kExitPass;
}

class Runner {
public:
    Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int range_command(const std::string& command, const Options& o,
                      const std::function<ReportDocument(std::uint64_t)>& unit, Json extra_params)
    {
        const Range range = resolve_range(o);
        const std::string canonical =
            "command=" + command + ";" + extra_params.dump() + ";tool=" + std::string(kToolVersion);
        const std::string hash = parameter_hash(canonical);

        RunManifest manifest{hash, canonical, {}};
        std::vector<std::uint64_t> todo;
        const bool use_manifest = !o.manifest.empty();
        if (use_manifest && !o.fresh && std::filesystem::exists(o.manifest)) {
            manifest = RunManifest::load(o.manifest);
            todo = resume(manifest, hash, range.lo, range.hi);
            log(command + ": resuming, " + std::to_string(todo.size()) + " of " +
                std::to_string(range.hi - range.lo + 1) + " values left");
        } else {
            for (std::uint64_t n = range.lo; n <= range.hi; ++n)
                todo.push_back(n);
        }

        sweep::run_ordered(
            todo, o.jobs,
            [&](std::uint64_t n) { return sweep::to_record("n", n, unit(n)); },
            [&](std::uint64_t n, const Json& rec) {
                manifest.completed[n] = rec;
                if (use_manifest)
                    manifest.save(o.manifest);
                log(command + " n=" + std::to_string(n) + " " + rec.at("status").get<std::string>());
            });

        std::vector<Json> records;
        for (std::uint64_t n = range.lo; n <= range.hi; ++n)
            records.push_back(manifest.completed.at(n));
        Json params = std::move(extra_params);
        params["n_min"] = range.lo;
        params["n_max"] = range.hi;
        return finish(sweep::merge_records(command, std::move(params), "n", records), o);
    }

    int prime_command(const std::string& command, const Options& o,
                      const std::function<ReportDocument(std::uint64_t)>& unit, Json params)
    {
        if (o.p.empty())
            throw UsageError("--p is required");
        std::vector<std::uint64_t> primes = o.p;
        std::sort(primes.begin(), primes.end());
        primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

        std::vector<Json> records;
        sweep::run_ordered(
            primes, o.jobs,
            [&](std::uint64_t p) { return sweep::to_record("p", p, unit(p)); },
            [&](std::uint64_t p, const Json& rec) {
                records.push_back(rec);
                log(command + " p=" + std::to_string(p) + " " + rec.at("status").get<std::string>());
            });
        Json ps = Json::array();
        for (auto p : primes)
            ps.push_back(p);
        params["p"] = ps;
        return finish(sweep::merge_records(command, std::move(params), "p", records), o);
    }

    int expand(const Options& o)
    {
        const auto family = sweep::parse_family(o.family);
        const auto spec = sweep::family_spec(family, o.n);
        const auto series = qpoly::expand_product_wide(spec);

        if (!o.csv.empty()) {
            with_destination(o.csv, out_, [&](std::ostream& os) {
                os << "exponent,coefficient\n";
                for (std::size_t e = 0; e <= series.top(); ++e)
                    os << e << ',' << series.coefficient(e).get_str() << '\n';
            });
        }

        ReportDocument doc;
        doc.command = "expand";
        doc.params["family"] = sweep::to_string(family);
        doc.params["n"] = o.n;
        sweep::add_structural_checks(doc, series, spec);
        doc.data["degree"] = spec.full_degree();
        doc.data["limb_width"] = series.limb_width();
        doc.data["max_bits"] = series.max_bits();
        if (o.csv.empty()) {
            Json coeffs = Json::array();
            for (std::size_t e = 0; e <= series.top(); ++e)
                coeffs.push_back(encode_int(series.coefficient(e)));
            doc.data["coefficients"] = std::move(coeffs);
        }
        doc.finalize();

        // with a CSV dump the report is only written when asked for
        if (!o.csv.empty() && !o.given("--json")) {
            stamp(doc, o);
            return exit_code_for(doc);
        }
        return finish(std::move(doc), o);
    }

    void start() { started_ = std::chrono::steady_clock::now(); started_utc_ = utc_now(); }

    void log(const std::string& line) { err_ << "[qsign] " << line << '\n'; }

    int finish(ReportDocument doc, const Options& o)
    {
        stamp(doc, o);
        emit_report(doc, o.json, out_);
        return exit_code_for(doc);
    }

    void stamp(ReportDocument& doc, const Options& o)
    {
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started_).count();
        log(doc.command + " finished: " + std::string(to_string(doc.status)) + " in " +
            std::to_string(elapsed) + " s");
        if (o.timings) {
            doc.started = started_utc_;
            doc.elapsed = elapsed;
        }
    }

private:
    std::ostream& out_;
    std::ostream& err_;
    std::chrono::steady_clock::time_point started_ = std::chrono::steady_clock::now();
    std::string started_utc_;
};

void add_output_options(CLI::App* sub, Options& o)
{
    sub->add_option("--json", o.json, "report destination: path or - for stdout");
    sub->add_flag("--timings", o.timings, "fill the started/elapsed report fields");
}

void add_range_options(CLI::App* sub, Options& o)
{
    sub->add_option("--n", o.n, "single n");
    sub->add_option("--n-min", o.n_min, "first n of the range (default 0)");
    sub->add_option("--n-max", o.n_max, "last n of the range");
    sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 256u));
    sub->add_option("--manifest", o.manifest, "resumable progress file");
    sub->add_flag("--fresh", o.fresh, "discard an existing manifest");
    add_output_options(sub, o);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact verification of sign patterns in Borwein-type q-products", "qsign"};
    app.require_subcommand(1, 1);
    app.set_version_flag("--version", std::string(kToolVersion));

    Options o;
    auto* expand = app.add_subcommand("expand", "coefficient dump of a product (CSV or JSON)");
    expand->add_option("--n", o.n, "product index")->required();
    expand->add_option("--family", o.family, "first | second | third");
    expand->add_option("--csv", o.csv, "CSV destination: path or -");
    add_output_options(expand, o);

    auto* verify = app.add_subcommand("verify", "sign pattern of the first product over a range of n");
    add_range_options(verify, o);

    auto* partial = app.add_subcommand("partial-sums", "positivity of residue partial sums");
    add_range_options(partial, o);

    auto* modcount_cmd = app.add_subcommand("modcount", "signed subset counts over Z_N, three evaluators");
    add_range_options(modcount_cmd, o);

    auto* identity = app.add_subcommand("identity", "A-polynomial against the alternating q-binomial sum");
    add_range_options(identity, o);

    auto* stanley = app.add_subcommand("stanley", "a_{p,pk} as two restricted partition counts");
    stanley->add_option("--p", o.p, "prime(s)")->required();
    stanley->add_option("--k-max", o.k_max, "largest k (default 100)");
    stanley->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 256u));
    add_output_options(stanley, o);

    auto* coherence = app.add_subcommand("coherence", "a_{p,j} a_{p,j+p} >= 0");
    coherence->add_option("--p", o.p, "prime(s)")->required();
    coherence->add_option("--j-max", o.j_max, "largest index (default 2000)");
    coherence->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 256u));
    add_output_options(coherence, o);

    auto* conj23 = app.add_subcommand("conjecture23", "sign sweeps for the squared and mod-5 products");
    conj23->add_option("--family", o.family, "second | third")->required();
    add_range_options(conj23, o);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::CallForVersion&) {
        out << kToolVersion << '\n';
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "qsign: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    o.active = app.get_subcommands().front();
    Runner runner(out, err);
    runner.start();
    std::string command;
    try {
        if (expand->parsed()) {
            command = "expand";
            return runner.expand(o);
        }
        if (verify->parsed()) {
            command = "verify";
            return runner.range_command(
                command, o, [](std::uint64_t n) { return sweep::product_sign_report(sweep::Family::first, n); },
                Json{{"family", "first"}});
        }
        if (partial->parsed()) {
            command = "partial-sums";
            return runner.range_command(command, o, sweep::partial_sums_report, Json::object());
        }
        if (modcount_cmd->parsed()) {
            command = "modcount";
            return runner.range_command(command, o, modcount::cross_validate, Json::object());
        }
        if (identity->parsed()) {
            command = "identity";
            return runner.range_command(command, o, sweep::identity_report, Json::object());
        }
        if (stanley->parsed()) {
            command = "stanley";
            const std::uint64_t k_max = o.k_max;
            return runner.prime_command(
                command, o, [k_max](std::uint64_t p) { return partitions::verify_stanley_formula(p, k_max); },
                Json{{"k_max", k_max}});
        }
        if (coherence->parsed()) {
            command = "coherence";
            const std::uint64_t j_max = o.j_max;
            return runner.prime_command(
                command, o, [j_max](std::uint64_t p) { return partitions::sign_coherence_check(p, j_max); },
                Json{{"j_max", j_max}});
        }
        if (conj23->parsed()) {
            command = "conjecture23";
            const auto family = sweep::parse_family(o.family);
            if (family == sweep::Family::first)
                throw UsageError("conjecture23 takes --family second or third");
            return runner.range_command(
                command, o, [family](std::uint64_t n) { return sweep::product_sign_report(family, n); },
                Json{{"family", sweep::to_string(family)}});
        }
    } catch (const UsageError& e) {
        err << "qsign: " << e.what() << "\n\n" << o.active->help();
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "qsign: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CapacityError& e) {
        err << "qsign: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "qsign: internal failure: " << e.what() << '\n';
        ReportDocument doc;
        doc.command = command;
        doc.status = Status::error;
        doc.notes.push_back(e.what());
        try {
            emit_report(doc, o.json, out);
        } catch (const UsageError&) {
            // the failure itself is what gets reported
        }
        return kExitInternal;
    }
    err << app.help();
    return kExitUsage;
}

}  // namespace qsign::cli
