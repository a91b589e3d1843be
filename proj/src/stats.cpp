#include "crashfix/stats.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>

namespace crashfix {

namespace {

std::string formatPercent(double percent) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f", percent);
    return buf;
}

void finishDistribution(Distribution& dist) {
    for (auto& bucket : dist.buckets) {
        bucket.percent = round_percent(bucket.count, dist.total);
    }
    std::sort(dist.buckets.begin(), dist.buckets.end(),
              [](const DistributionBucket& a, const DistributionBucket& b) {
                  if (a.count != b.count) return a.count > b.count;
                  return a.key < b.key;
              });
}

Distribution fromCounts(const std::map<std::string, long long>& counts, long long total) {
    Distribution dist;
    dist.total = total;
    for (const auto& [key, count] : counts) dist.buckets.push_back({key, count, 0.0});
    finishDistribution(dist);
    return dist;
}

} // namespace

double round_percent(long long count, long long total) {
    if (total <= 0) return 0.0;
    long long tenths = (2000 * count + total) / (2 * total);
    return static_cast<double>(tenths) / 10.0;
}

Distribution crash_distribution(const MiningReport& report) {
    std::map<std::string, long long> counts;
    long long total = 0;
    for (CrashCategory cat : all_crash_categories()) {
        long long count = 0;
        auto it = report.crashBugCounts.find(crash_category_name(cat));
        if (it != report.crashBugCounts.end()) count = it->second;
        counts[crash_category_name(cat)] = count;
        total += count;
    }
    return fromCounts(counts, total);
}

Distribution files_changed_histogram(const MiningReport& report, CrashCategory crash) {
    std::map<std::string, long long> counts{{"1", 0}, {"2", 0}, {"3", 0}, {"4+", 0}};
    long long total = 0;
    for (const auto& [bugId, bug] : report.perBug) {
        if (bug.crash != crash) continue;
        ++total;
        ++counts[bug.filesChanged >= 4 ? "4+" : std::to_string(std::max(1, bug.filesChanged))];
    }
    return fromCounts(counts, total);
}

Distribution fix_type_distribution(const MiningReport& report, CrashCategory crash) {
    std::map<std::string, long long> counts;
    for (const CatalogEntry* entry : catalog_for(crash)) counts[entry->label.id] = 0;
    counts["Unknown"] = 0;
    counts["NoChange"] = 0;
    long long total = 0;
    for (const auto& [bugId, bug] : report.perBug) {
        if (bug.crash != crash) continue;
        ++total;
        auto it = counts.find(bug.topLabel);
        if (it != counts.end()) {
            ++it->second;
        } else {
            ++counts["Unknown"];
        }
    }
    return fromCounts(counts, total);
}

std::vector<CategoryCoverage> coverage_summary(const MiningReport& report) {
    std::vector<CategoryCoverage> out;
    for (CrashCategory cat : all_crash_categories()) {
        CategoryCoverage cov;
        cov.crash = cat;
        std::map<std::string, long long> counts;
        for (const auto& [bugId, bug] : report.perBug) {
            if (bug.crash != cat) continue;
            if (bug.topLabel == "Unknown" || bug.topLabel == "NoChange") continue;
            ++counts[bug.topLabel];
            ++cov.classified;
        }
        std::vector<std::pair<std::string, long long>> ranked(counts.begin(), counts.end());
        std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
            if (a.second != b.second) return a.second > b.second;
            return a.first < b.first;
        });
        for (std::size_t i = 0; i < ranked.size() && i < 3; ++i) {
            cov.topLabels.push_back(ranked[i].first);
            cov.covered += ranked[i].second;
        }
        if (cov.classified > 0) {
            cov.defined = true;
            cov.percent = round_percent(cov.covered, cov.classified);
        }
        out.push_back(std::move(cov));
    }
    return out;
}

nlohmann::json distribution_to_json(const Distribution& dist) {
    nlohmann::json buckets = nlohmann::json::array();
    for (const auto& bucket : dist.buckets) {
        buckets.push_back({{"key", bucket.key},
                           {"count", bucket.count},
                           {"percent", bucket.percent}});
    }
    return nlohmann::json{{"total", dist.total}, {"buckets", std::move(buckets)}};
}

nlohmann::json stats_to_json(const MiningReport& report) {
    nlohmann::json doc;
    doc["crash_distribution"] = distribution_to_json(crash_distribution(report));
    nlohmann::json files = nlohmann::json::object();
    nlohmann::json types = nlohmann::json::object();
    for (CrashCategory cat : all_crash_categories()) {
        const char* name = crash_category_name(cat);
        files[name] = distribution_to_json(files_changed_histogram(report, cat));
        types[name] = distribution_to_json(fix_type_distribution(report, cat));
    }
    doc["files_changed"] = std::move(files);
    doc["fix_types"] = std::move(types);
    nlohmann::json coverage = nlohmann::json::object();
    for (const auto& cov : coverage_summary(report)) {
        if (!cov.defined) {
            coverage[crash_category_name(cov.crash)] = "n/a";
            continue;
        }
        coverage[crash_category_name(cov.crash)] = {{"top_labels", cov.topLabels},
                                                    {"covered", cov.covered},
                                                    {"classified", cov.classified},
                                                    {"percent", cov.percent}};
    }
    doc["coverage"] = std::move(coverage);
    return doc;
}

namespace {

void renderDistribution(std::string& out, const std::string& title, const Distribution& dist) {
    out += "== " + title + " ==\n";
    std::size_t width = 0;
    for (const auto& bucket : dist.buckets) width = std::max(width, bucket.key.size());
    for (const auto& bucket : dist.buckets) {
        char line[160];
        std::snprintf(line, sizeof(line), "%-*s %6lld  %5.1f%%\n", static_cast<int>(width),
                      bucket.key.c_str(), bucket.count, bucket.percent);
        out += line;
    }
    out += "total: " + std::to_string(dist.total) + "\n\n";
}

} // namespace

std::string render_stats_text(const MiningReport& report) {
    std::string out;
    renderDistribution(out, "Crash distribution (linked bugs)", crash_distribution(report));
    for (CrashCategory cat : all_crash_categories()) {
        renderDistribution(out, std::string("Files changed per fix, ") + crash_category_name(cat),
                           files_changed_histogram(report, cat));
    }
    for (CrashCategory cat : all_crash_categories()) {
        renderDistribution(out, std::string("Fix types, ") + crash_category_name(cat),
                           fix_type_distribution(report, cat));
    }
    out += "== Top-3 fix-type coverage ==\n";
    for (const auto& cov : coverage_summary(report)) {
        out += crash_category_name(cov.crash);
        if (!cov.defined) {
            out += ": n/a (no classified bugs)\n";
            continue;
        }
        out += ": " + formatPercent(cov.percent) + "% (" + std::to_string(cov.covered) + "/" +
               std::to_string(cov.classified) + ", ";
        for (std::size_t i = 0; i < cov.topLabels.size(); ++i) {
            if (i) out += " + ";
            out += cov.topLabels[i];
        }
        out += ")\n";
    }
    return out;
}

std::vector<std::filesystem::path> write_figure_csvs(const MiningReport& report,
                                                     const std::filesystem::path& outDir) {
    std::filesystem::create_directories(outDir);
    std::vector<std::filesystem::path> written;
    auto writeCsv = [&](const char* name, const char* keyHeader, const Distribution& dist) {
        std::filesystem::path path = outDir / name;
        std::ofstream out(path, std::ios::binary);
        if (!out) throw CorpusError("cannot write " + path.string());
        out << keyHeader << ",count,percent\n";
        for (const auto& bucket : dist.buckets) {
            out << bucket.key << ',' << bucket.count << ',' << formatPercent(bucket.percent)
                << '\n';
        }
        written.push_back(path);
    };
    writeCsv("fig3.csv", "category", crash_distribution(report));
    writeCsv("fig4_npe.csv", "files_changed",
             files_changed_histogram(report, CrashCategory::NPE));
    writeCsv("fig5_oobe.csv", "files_changed",
             files_changed_histogram(report, CrashCategory::OOBE));
    writeCsv("fig6_cce.csv", "files_changed",
             files_changed_histogram(report, CrashCategory::CCE));
    writeCsv("fig7_npe.csv", "fix_type", fix_type_distribution(report, CrashCategory::NPE));
    writeCsv("fig8_oobe.csv", "fix_type", fix_type_distribution(report, CrashCategory::OOBE));
    writeCsv("fig9_cce.csv", "fix_type", fix_type_distribution(report, CrashCategory::CCE));
    return written;
}

} // namespace crashfix
