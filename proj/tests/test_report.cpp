#include "qsign/errors.hpp"
#include "qsign/manifest.hpp"
#include "qsign/report.hpp"
#include "qsign/sweep.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qsign;

namespace {

std::filesystem::path scratch(const std::string& name)
{
    auto dir = std::filesystem::temp_directory_path() / "qsign_test_report";
    std::filesystem::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST(EncodeInt, SwitchesToStringsPast53Bits)
{
    EXPECT_EQ(encode_int(BigInt(42)), Json(42));
    EXPECT_EQ(encode_int(BigInt(-7)), Json(-7));
    EXPECT_EQ(encode_int(BigInt("9007199254740991")), Json(9007199254740991LL));
    EXPECT_EQ(encode_int(BigInt("-9007199254740991")), Json(-9007199254740991LL));
    EXPECT_EQ(encode_int(BigInt("9007199254740992")), Json("9007199254740992"));
    EXPECT_EQ(encode_int(BigInt("-123456789012345678901234567890")), Json("-123456789012345678901234567890"));
}

TEST(ReportDocument, FieldOrderAndStatus)
{
    ReportDocument doc;
    doc.command = "verify";
    doc.finalize();
    std::ostringstream os;
    emit_report(doc, "-", os);
    const std::string text = os.str();
    EXPECT_EQ(text.rfind("{\"command\":\"verify\",\"params\":{},\"status\":\"pass\",\"violations\":[],", 0), 0u);
    EXPECT_EQ(text.back(), '\n');
    EXPECT_NE(text.find("\"started\":null,\"elapsed\":null,\"tool_version\":\"qsign 1.0.0\""), std::string::npos);

    doc.add_violation(Json{{"exponent", 3}});
    doc.finalize();
    EXPECT_EQ(doc.status, Status::fail);
    EXPECT_EQ(doc.to_json().at("violations").size(), 1u);
    EXPECT_EQ(doc.to_json().at("status"), "fail");
}

TEST(ReportDocument, DisagreeingCrossCheckIsError)
{
    ReportDocument doc;
    doc.add_cross_check("route", "1", "1");
    doc.finalize();
    EXPECT_EQ(doc.status, Status::pass);
    doc.add_cross_check("route2", "1", "2");
    doc.finalize();
    EXPECT_FALSE(doc.cross_checks_agree());
    EXPECT_EQ(doc.status, Status::error);
    EXPECT_EQ(doc.to_json().at("cross_checks")[1].at("agree"), false);
}

TEST(EmitReport, WritesFilesAndRejectsBadPaths)
{
    ReportDocument doc;
    doc.command = "x";
    doc.finalize();
    const auto path = scratch("r.json");
    std::ostringstream unused;
    emit_report(doc, path.string(), unused);
    EXPECT_TRUE(unused.str().empty());
    std::ifstream in(path);
    const auto parsed = Json::parse(in);
    EXPECT_EQ(parsed.at("command"), "x");
    EXPECT_THROW(emit_report(doc, "/nonexistent-dir/sub/r.json", unused), UsageError);
}

TEST(CoefficientCsv, HeaderAndRows)
{
    std::ostringstream os;
    const std::vector<BigInt> c{1, -1, BigInt("100000000000000000000")};
    write_coefficient_csv(os, c);
    EXPECT_EQ(os.str(), "exponent,coefficient\n0,1\n1,-1\n2,100000000000000000000\n");
}

TEST(Manifest, HashIsStableAndSensitive)
{
    EXPECT_EQ(parameter_hash("abc"), parameter_hash("abc"));
    EXPECT_NE(parameter_hash("abc"), parameter_hash("abd"));
    EXPECT_EQ(parameter_hash("").size(), 16u);
    EXPECT_EQ(parameter_hash(""), "cbf29ce484222325");
}

TEST(Manifest, ResumeExamples)
{
    RunManifest m{"h", "p", {}};
    std::vector<std::uint64_t> all;
    for (std::uint64_t n = 0; n <= 15; ++n)
        all.push_back(n);
    EXPECT_EQ(resume(m, "h", 0, 15), all);
    for (std::uint64_t n = 0; n <= 10; ++n)
        m.completed[n] = Json{{"n", n}};
    EXPECT_EQ(resume(m, "h", 0, 15), (std::vector<std::uint64_t>{11, 12, 13, 14, 15}));
    EXPECT_THROW(resume(m, "other", 0, 15), UsageError);
}

TEST(Manifest, SaveLoadRoundTrip)
{
    const auto path = scratch("m.json");
    RunManifest m{"0123456789abcdef", "command=verify", {}};
    m.completed[3] = Json{{"n", 3}, {"status", "pass"}};
    m.completed[5] = Json{{"n", 5}, {"status", "fail"}};
    m.save(path.string());
    const auto back = RunManifest::load(path.string());
    EXPECT_EQ(back.param_hash, m.param_hash);
    EXPECT_EQ(back.params, m.params);
    EXPECT_EQ(back.completed, m.completed);

    std::ofstream(scratch("bad.json")) << "{not json";
    EXPECT_THROW(RunManifest::load(scratch("bad.json").string()), UsageError);
    EXPECT_THROW(RunManifest::load(scratch("missing.json").string()), UsageError);
}

TEST(RunOrdered, DeliversInKeyOrderForAnyJobCount)
{
    std::vector<std::uint64_t> keys;
    for (std::uint64_t k = 0; k < 50; ++k)
        keys.push_back(k);
    for (unsigned jobs : {1u, 3u, 8u}) {
        std::vector<std::uint64_t> seen;
        sweep::run_ordered(
            keys, jobs, [](std::uint64_t k) { return Json{{"sq", k * k}}; },
            [&](std::uint64_t k, const Json& j) {
                EXPECT_EQ(j.at("sq"), k * k);
                seen.push_back(k);
            });
        EXPECT_EQ(seen, keys);
    }
}

TEST(RunOrdered, RethrowsFirstFailure)
{
    const std::vector<std::uint64_t> keys{1, 2, 3, 4, 5, 6};
    std::vector<std::uint64_t> seen;
    EXPECT_THROW(sweep::run_ordered(
                     keys, 4,
                     [](std::uint64_t k) {
                         if (k == 3)
                             throw OracleMismatch("k = 3");
                         return Json(k);
                     },
                     [&](std::uint64_t k, const Json&) { seen.push_back(k); }),
                 OracleMismatch);
    EXPECT_EQ(seen, (std::vector<std::uint64_t>{1, 2}));
}

TEST(MergeRecords, TagsViolationsAndChecks)
{
    ReportDocument a;
    a.add_violation(Json{{"exponent", 4}});
    a.add_cross_check("degree", "3", "3");
    a.notes.push_back("same note");
    a.finalize();
    ReportDocument b;
    b.notes.push_back("same note");
    b.finalize();
    const auto merged = sweep::merge_records("verify", Json::object(), "n",
                                             {sweep::to_record("n", 7, a), sweep::to_record("n", 8, b)});
    EXPECT_EQ(merged.status, Status::fail);
    ASSERT_EQ(merged.violations.size(), 1u);
    EXPECT_EQ(merged.violations[0].at("n"), 7);
    EXPECT_EQ(merged.cross_checks[0].name, "n=7:degree");
    EXPECT_EQ(merged.notes.size(), 1u);
    EXPECT_EQ(merged.data.at("results").size(), 2u);
}
