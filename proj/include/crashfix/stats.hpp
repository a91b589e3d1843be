#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "crashfix/miner.hpp"

#include "json.hpp"

namespace crashfix {

struct DistributionBucket {
    std::string key;
    long long count = 0;
    double percent = 0.0;
};

/// Buckets sorted by count descending, ties alphabetical. Percents are
/// rounded half-up to one decimal and sum to ~100 whenever total > 0.
struct Distribution {
    long long total = 0;
    std::vector<DistributionBucket> buckets;
};

/// 100 * count / total, half-up to one decimal; 0 when total is 0.
double round_percent(long long count, long long total);

/// Linked crash bugs per category.
Distribution crash_distribution(const MiningReport& report);

/// Bugs of the category bucketed by files changed: "1", "2", "3", "4+".
Distribution files_changed_histogram(const MiningReport& report, CrashCategory crash);

/// Bug-level top labels: one bucket per catalog label of the category, plus
/// "Unknown" and "NoChange" lines.
Distribution fix_type_distribution(const MiningReport& report, CrashCategory crash);

struct CategoryCoverage {
    CrashCategory crash = CrashCategory::NPE;
    std::vector<std::string> topLabels; // up to three, most frequent first
    long long covered = 0;
    long long classified = 0; // bugs whose top label is a real catalog label
    bool defined = false;     // false renders as "n/a"
    double percent = 0.0;
};

/// Share of classified bugs covered by the category's three most frequent
/// top labels. Unknown/NoChange bugs are outside the denominator.
std::vector<CategoryCoverage> coverage_summary(const MiningReport& report);

nlohmann::json distribution_to_json(const Distribution& dist);
nlohmann::json stats_to_json(const MiningReport& report);
std::string render_stats_text(const MiningReport& report);

/// fig3.csv plus the per-category fig4..fig9 files; returns the written paths.
std::vector<std::filesystem::path> write_figure_csvs(const MiningReport& report,
                                                     const std::filesystem::path& outDir);

} // namespace crashfix
