#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "crashfix/classifier.hpp"
#include "crashfix/corpus.hpp"

namespace crashfix {

struct DanglingLinkError : CorpusError {
    explicit DanglingLinkError(std::vector<std::string> offendingLinks);
    std::vector<std::string> offenders;
};

// shortDesc keyword scan (longDesc too when scanLongDesc). Bugs matching two
// categories are excluded and appended to ambiguousLog.
std::map<std::string, CrashCategory> identify_crash_bugs(
    const std::vector<BugReport>& reports, bool scanLongDesc = false,
    std::vector<std::string>* ambiguousLog = nullptr);

// Manifest links are authoritative when links.jsonl exists; otherwise commit
// messages are scanned for "bug <id>" / "#<id>" references to known bugs.
std::vector<BugFixLink> link_fix_commits(const Corpus& corpus,
                                         const std::map<std::string, CrashCategory>& categorized);

struct ExtractionResult {
    std::vector<FileRevisionPair> pairs;
    int skippedAddedFiles = 0;
};

ExtractionResult extract_revision_pairs(const BugFixLink& link, const CommitRecord& commit);

struct PairOutcome {
    std::string commitId;
    std::string path;
    VerdictKind verdict = VerdictKind::NoChange;
    std::string topLabel;                   // empty unless matched
    std::vector<std::string> matchedLabels; // catalog priority order
};

struct BugOutcome {
    std::string bugId;
    CrashCategory crash = CrashCategory::NPE;
    int filesChanged = 0;
    std::string topLabel; // label id, "Unknown", or "NoChange"
    std::vector<PairOutcome> pairs;
};

struct MiningReport {
    std::map<std::string, BugOutcome> perBug; // bugs with at least one pair
    long long totalBugs = 0;
    long long totalCommits = 0;
    long long totalFileRevisions = 0;
    long long linkCount = 0;
    std::map<std::string, long long> crashBugCounts; // category name -> linked bugs
    long long skippedAddedFiles = 0;
    std::vector<std::string> ambiguousBugs;
    std::vector<std::string> linkedBugsWithoutPairs;
};

struct MineOptions {
    bool scanLongDesc = false;
    const TypeHierarchy* hierarchy = nullptr;
    // Parallelism cap for pair classification; <0 reads CRASHFIX_THREADS,
    // 0 (or an unset variable) means hardware concurrency.
    int threads = -1;
};

MiningReport mine(const Corpus& corpus, const MineOptions& options = {});
MiningReport mine(const std::filesystem::path& corpusRoot, const MineOptions& options = {});

nlohmann::json report_to_json(const MiningReport& report);
MiningReport report_from_json(const nlohmann::json& doc);

} // namespace crashfix
