#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "crashfix/stats.hpp"
#include "support.hpp"

using namespace crashfix;
namespace fs = std::filesystem;

namespace {

const MiningReport& goldenReport() {
    static const MiningReport report = mine(fs::path(testsupport::dataDir()) / "golden");
    return report;
}

const MiningReport& syntheticReport() {
    static const MiningReport report = mine(fs::path(testsupport::dataDir()) / "synthetic");
    return report;
}

BugOutcome bugOutcome(std::string id, CrashCategory crash, std::string topLabel,
                      int filesChanged = 1) {
    BugOutcome bug;
    bug.bugId = std::move(id);
    bug.crash = crash;
    bug.topLabel = std::move(topLabel);
    bug.filesChanged = filesChanged;
    return bug;
}

const DistributionBucket& bucketFor(const Distribution& dist, const std::string& key) {
    for (const auto& bucket : dist.buckets) {
        if (bucket.key == key) return bucket;
    }
    static const DistributionBucket missing{"<missing>", -1, -1.0};
    return missing;
}

} // namespace

TEST_CASE("round_percent rounds half-up to one decimal") {
    CHECK(round_percent(1, 3) == doctest::Approx(33.3));
    CHECK(round_percent(2, 3) == doctest::Approx(66.7));
    CHECK(round_percent(1, 8) == doctest::Approx(12.5));
    CHECK(round_percent(1, 16) == doctest::Approx(6.3));
    CHECK(round_percent(5, 5) == doctest::Approx(100.0));
    CHECK(round_percent(0, 10) == doctest::Approx(0.0));
    CHECK(round_percent(1, 2000) == doctest::Approx(0.1)); // 0.05 exactly: half goes up
    CHECK(round_percent(1, 3000) == doctest::Approx(0.0)); // 0.033 truncates
    CHECK(round_percent(9, 12) == doctest::Approx(75.0));
    CHECK(round_percent(3, 0) == doctest::Approx(0.0));
    CHECK(round_percent(0, 0) == doctest::Approx(0.0));
}

TEST_CASE("crash distribution orders by count then name") {
    MiningReport report;
    report.crashBugCounts = {{"NPE", 2}, {"OOBE", 1}, {"CCE", 1}};
    auto dist = crash_distribution(report);
    CHECK(dist.total == 4);
    REQUIRE(dist.buckets.size() == 3);
    CHECK(dist.buckets[0].key == "NPE");
    CHECK(dist.buckets[0].percent == doctest::Approx(50.0));
    CHECK(dist.buckets[1].key == "CCE"); // tie with OOBE broken alphabetically
    CHECK(dist.buckets[2].key == "OOBE");

    MiningReport empty;
    auto zero = crash_distribution(empty);
    CHECK(zero.total == 0);
    REQUIRE(zero.buckets.size() == 3); // all categories always present
    for (const auto& bucket : zero.buckets) {
        CHECK(bucket.count == 0);
        CHECK(bucket.percent == doctest::Approx(0.0));
    }
}

TEST_CASE("files-changed histogram buckets 1/2/3/4+ within one category") {
    MiningReport report;
    report.perBug["1"] = bugOutcome("1", CrashCategory::NPE, "null_checker", 1);
    report.perBug["2"] = bugOutcome("2", CrashCategory::NPE, "null_checker", 1);
    report.perBug["3"] = bugOutcome("3", CrashCategory::NPE, "use_clear", 2);
    report.perBug["4"] = bugOutcome("4", CrashCategory::NPE, "Unknown", 4);
    report.perBug["5"] = bugOutcome("5", CrashCategory::NPE, "Unknown", 7);
    report.perBug["6"] = bugOutcome("6", CrashCategory::OOBE, "check_range", 3); // other category

    auto dist = files_changed_histogram(report, CrashCategory::NPE);
    CHECK(dist.total == 5);
    REQUIRE(dist.buckets.size() == 4);
    CHECK(bucketFor(dist, "1").count == 2);
    CHECK(bucketFor(dist, "2").count == 1);
    CHECK(bucketFor(dist, "3").count == 0);
    CHECK(bucketFor(dist, "4+").count == 2);
    CHECK(bucketFor(dist, "1").percent == doctest::Approx(40.0));
    CHECK(bucketFor(dist, "4+").percent == doctest::Approx(40.0));
    // "1" and "4+" tie at two bugs apiece; the string order decides.
    CHECK(dist.buckets[0].key == "1");
    CHECK(dist.buckets[1].key == "4+");

    auto other = files_changed_histogram(report, CrashCategory::CCE);
    CHECK(other.total == 0);
    REQUIRE(other.buckets.size() == 4);
}

TEST_CASE("fix-type distribution includes Unknown and NoChange in the same 100%") {
    MiningReport report;
    report.perBug["1"] = bugOutcome("1", CrashCategory::NPE, "null_checker");
    report.perBug["2"] = bugOutcome("2", CrashCategory::NPE, "null_checker");
    report.perBug["3"] = bugOutcome("3", CrashCategory::NPE, "use_clear");
    report.perBug["4"] = bugOutcome("4", CrashCategory::NPE, "Unknown");
    report.perBug["5"] = bugOutcome("5", CrashCategory::NPE, "NoChange");
    report.perBug["6"] = bugOutcome("6", CrashCategory::NPE, "not_a_real_label");

    auto dist = fix_type_distribution(report, CrashCategory::NPE);
    CHECK(dist.total == 6);
    REQUIRE(dist.buckets.size() == 7); // five catalog labels + Unknown + NoChange
    CHECK(bucketFor(dist, "null_checker").count == 2);
    CHECK(bucketFor(dist, "use_clear").count == 1);
    CHECK(bucketFor(dist, "Unknown").count == 2); // the stray label lands here
    CHECK(bucketFor(dist, "NoChange").count == 1);
    CHECK(bucketFor(dist, "change_sequence").count == 0);

    long long countSum = 0;
    double percentSum = 0.0;
    for (const auto& bucket : dist.buckets) {
        countSum += bucket.count;
        percentSum += bucket.percent;
    }
    CHECK(countSum == dist.total);
    CHECK(percentSum == doctest::Approx(100.0).epsilon(0.01));
}

TEST_CASE("distribution invariants hold on real reports") {
    for (const MiningReport* report : {&goldenReport(), &syntheticReport()}) {
        std::vector<Distribution> dists = {crash_distribution(*report)};
        for (CrashCategory cat : all_crash_categories()) {
            dists.push_back(files_changed_histogram(*report, cat));
            dists.push_back(fix_type_distribution(*report, cat));
        }
        for (const auto& dist : dists) {
            long long countSum = 0;
            double percentSum = 0.0;
            for (const auto& bucket : dist.buckets) {
                countSum += bucket.count;
                percentSum += bucket.percent;
            }
            CHECK(countSum == dist.total);
            if (dist.total > 0) {
                CHECK(std::abs(percentSum - 100.0) <= 0.05 * static_cast<double>(dist.buckets.size()));
            }
            for (std::size_t i = 1; i < dist.buckets.size(); ++i) {
                const auto& prev = dist.buckets[i - 1];
                const auto& cur = dist.buckets[i];
                CHECK((prev.count > cur.count || (prev.count == cur.count && prev.key < cur.key)));
            }
        }
    }
}

TEST_CASE("histogram totals agree with a direct recount") {
    const MiningReport& report = syntheticReport();
    for (CrashCategory cat : all_crash_categories()) {
        long long direct = 0;
        for (const auto& [bugId, bugRecord] : report.perBug) {
            if (bugRecord.crash == cat) ++direct;
        }
        CHECK(files_changed_histogram(report, cat).total == direct);
        CHECK(fix_type_distribution(report, cat).total == direct);
    }
}

TEST_CASE("the synthetic corpus reproduces the headline numbers") {
    const MiningReport& report = syntheticReport();

    auto crashes = crash_distribution(report);
    CHECK(crashes.total == 100);
    CHECK(bucketFor(crashes, "NPE").count == 79);
    CHECK(bucketFor(crashes, "OOBE").count == 12);
    CHECK(bucketFor(crashes, "CCE").count == 9);
    CHECK(bucketFor(crashes, "NPE").percent == doctest::Approx(79.0));
    CHECK(bucketFor(crashes, "OOBE").percent == doctest::Approx(12.0));
    CHECK(bucketFor(crashes, "CCE").percent == doctest::Approx(9.0));

    auto npeTypes = fix_type_distribution(report, CrashCategory::NPE);
    CHECK(bucketFor(npeTypes, "null_checker").count == 71);
    CHECK(bucketFor(npeTypes, "null_checker").percent == doctest::Approx(89.9));
    CHECK(bucketFor(npeTypes, "Unknown").count == 0);
    CHECK(bucketFor(npeTypes, "NoChange").count == 0);

    auto coverage = coverage_summary(report);
    REQUIRE(coverage.size() == 3);
    CHECK(coverage[0].crash == CrashCategory::NPE);
    CHECK(coverage[0].classified == 79);
    CHECK(coverage[0].covered == 76);
    CHECK(coverage[0].percent == doctest::Approx(96.2));
    CHECK(coverage[0].topLabels ==
          std::vector<std::string>{"null_checker", "initialize_object", "change_sequence"});
    CHECK(coverage[1].crash == CrashCategory::OOBE);
    CHECK(coverage[1].classified == 12);
    CHECK(coverage[1].covered == 9);
    CHECK(coverage[1].percent == doctest::Approx(75.0));
    CHECK(coverage[2].crash == CrashCategory::CCE);
    CHECK(coverage[2].classified == 9);
    CHECK(coverage[2].covered == 7);
    CHECK(coverage[2].percent == doctest::Approx(77.8));
}

TEST_CASE("coverage is n/a without classified bugs and 100% with one") {
    MiningReport allUnknown;
    allUnknown.perBug["1"] = bugOutcome("1", CrashCategory::NPE, "Unknown");
    allUnknown.perBug["2"] = bugOutcome("2", CrashCategory::NPE, "NoChange");
    auto coverage = coverage_summary(allUnknown);
    CHECK(!coverage[0].defined);
    CHECK(coverage[0].classified == 0);

    auto doc = stats_to_json(allUnknown);
    CHECK(doc["coverage"]["NPE"] == "n/a");
    CHECK(doc["coverage"]["OOBE"] == "n/a");

    MiningReport single;
    single.perBug["1"] = bugOutcome("1", CrashCategory::CCE, "lazy_cast");
    auto one = coverage_summary(single);
    CHECK(one[2].defined);
    CHECK(one[2].percent == doctest::Approx(100.0));
    CHECK(one[2].topLabels == std::vector<std::string>{"lazy_cast"});
}

TEST_CASE("stats json carries every distribution") {
    auto doc = stats_to_json(goldenReport());
    CHECK(doc["crash_distribution"]["total"] == 17);
    for (const char* cat : {"NPE", "OOBE", "CCE"}) {
        CHECK(doc["files_changed"][cat]["buckets"].size() == 4);
        CHECK(doc["fix_types"][cat].contains("total"));
        CHECK(doc["coverage"].contains(cat));
    }
    // Every golden bug changed exactly one file.
    for (const auto& bucket : doc["files_changed"]["NPE"]["buckets"]) {
        if (bucket["key"] == "1") {
            CHECK(bucket["count"] == 5);
            CHECK(bucket["percent"] == doctest::Approx(100.0));
        }
    }
}

TEST_CASE("rendered text names each section and the coverage line") {
    std::string text = render_stats_text(goldenReport());
    CHECK(text.find("== Crash distribution (linked bugs) ==") != std::string::npos);
    CHECK(text.find("== Files changed per fix, NPE ==") != std::string::npos);
    CHECK(text.find("== Fix types, CCE ==") != std::string::npos);
    CHECK(text.find("== Top-3 fix-type coverage ==") != std::string::npos);
    // Five golden NPE bugs, five distinct labels: the top three cover 3/5.
    CHECK(text.find("NPE: 60.0% (3/5, change_sequence + initialize_object + null_checker)") !=
          std::string::npos);
    CHECK(text.find("OOBE: 37.5% (3/8, add_try_catch + check_array_length + check_range)") !=
          std::string::npos);

    MiningReport empty;
    std::string emptyText = render_stats_text(empty);
    CHECK(emptyText.find("NPE: n/a (no classified bugs)") != std::string::npos);
}

TEST_CASE("figure csvs are stable, LF-only, and complete") {
    fs::path outA = fs::temp_directory_path() / "crashfix_stats_csv_a";
    fs::path outB = fs::temp_directory_path() / "crashfix_stats_csv_b";
    fs::remove_all(outA);
    fs::remove_all(outB);

    auto writtenA = write_figure_csvs(goldenReport(), outA);
    auto writtenB = write_figure_csvs(goldenReport(), outB);
    std::vector<std::string> names;
    for (const auto& path : writtenA) names.push_back(path.filename().string());
    CHECK(names == std::vector<std::string>{"fig3.csv", "fig4_npe.csv", "fig5_oobe.csv",
                                            "fig6_cce.csv", "fig7_npe.csv", "fig8_oobe.csv",
                                            "fig9_cce.csv"});

    std::string fig3 = testsupport::readFile((outA / "fig3.csv").string());
    CHECK(fig3 ==
          "category,count,percent\n"
          "OOBE,8,47.1\n"
          "NPE,5,29.4\n"
          "CCE,4,23.5\n");
    CHECK(fig3.find('\r') == std::string::npos);

    REQUIRE(writtenA.size() == writtenB.size());
    for (std::size_t i = 0; i < writtenA.size(); ++i) {
        CHECK(testsupport::readFile(writtenA[i].string()) ==
              testsupport::readFile(writtenB[i].string()));
    }

    std::string fig7 = testsupport::readFile((outA / "fig7_npe.csv").string());
    CHECK(fig7.substr(0, fig7.find('\n')) == "fix_type,count,percent");

    fs::remove_all(outA);
    fs::remove_all(outB);
}
