#include "crashfix/miner.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <mutex>
#include <regex>
#include <set>
#include <thread>
#include <tuple>

namespace crashfix {

namespace {

std::string joinStrings(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

} // namespace

DanglingLinkError::DanglingLinkError(std::vector<std::string> offendingLinks)
    : CorpusError("dangling manifest links: " + joinStrings(offendingLinks, "; ")),
      offenders(std::move(offendingLinks)) {}

namespace {

bool isWordChar(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string toLower(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    return out;
}

bool containsWord(const std::string& haystack, const std::string& word) {
    std::size_t pos = 0;
    while ((pos = haystack.find(word, pos)) != std::string::npos) {
        bool leftOk = pos == 0 || !isWordChar(haystack[pos - 1]);
        std::size_t end = pos + word.size();
        bool rightOk = end >= haystack.size() || !isWordChar(haystack[end]);
        if (leftOk && rightOk) return true;
        ++pos;
    }
    return false;
}

struct KeywordSet {
    CrashCategory category;
    std::vector<std::string> fullNamesLower; // substring, case-insensitive
    std::vector<std::string> abbreviations;  // word-boundary, case-sensitive
};

const std::vector<KeywordSet>& keywordSets() {
    static const std::vector<KeywordSet> sets = {
        {CrashCategory::NPE, {"nullpointerexception"}, {"NPE"}},
        {CrashCategory::OOBE,
         {"indexoutofboundsexception", "arrayindexoutofboundsexception"},
         {"OOBE"}},
        {CrashCategory::CCE, {"classcastexception"}, {"CCE"}},
    };
    return sets;
}

bool matchesKeywords(const std::string& text, const KeywordSet& set) {
    std::string lower = toLower(text);
    for (const auto& name : set.fullNamesLower) {
        if (lower.find(name) != std::string::npos) return true;
    }
    for (const auto& abbr : set.abbreviations) {
        if (containsWord(text, abbr)) return true;
    }
    return false;
}

int resolveThreadCount(int requested) {
    if (requested < 0) {
        const char* env = std::getenv("CRASHFIX_THREADS");
        requested = env ? std::atoi(env) : 0;
    }
    if (requested <= 0) {
        unsigned hw = std::thread::hardware_concurrency();
        requested = hw ? static_cast<int>(hw) : 1;
    }
    return requested;
}

} // namespace

std::map<std::string, CrashCategory> identify_crash_bugs(const std::vector<BugReport>& reports,
                                                         bool scanLongDesc,
                                                         std::vector<std::string>* ambiguousLog) {
    std::map<std::string, CrashCategory> out;
    for (const auto& bug : reports) {
        std::string text = bug.shortDesc;
        if (scanLongDesc && !bug.longDesc.empty()) text += "\n" + bug.longDesc;
        std::vector<CrashCategory> hits;
        for (const auto& set : keywordSets()) {
            if (matchesKeywords(text, set)) hits.push_back(set.category);
        }
        if (hits.size() == 1) {
            out.emplace(bug.bugId, hits.front());
        } else if (hits.size() > 1 && ambiguousLog) {
            ambiguousLog->push_back(bug.bugId);
        }
    }
    return out;
}

std::vector<BugFixLink> link_fix_commits(const Corpus& corpus,
                                         const std::map<std::string, CrashCategory>& categorized) {
    std::vector<BugFixLink> links;
    std::set<std::pair<std::string, std::string>> seen;
    auto addLink = [&](const std::string& bugId, const std::string& commitId, LinkSource source) {
        auto it = categorized.find(bugId);
        if (it == categorized.end()) return;
        if (!seen.emplace(bugId, commitId).second) return;
        links.push_back({bugId, commitId, it->second, source});
    };

    if (corpus.manifest) {
        std::set<std::string> bugIds;
        for (const auto& bug : corpus.bugs) bugIds.insert(bug.bugId);
        std::set<std::string> commitIds;
        for (const auto& commit : corpus.commits) commitIds.insert(commit.commitId);
        std::vector<std::string> offenders;
        for (const auto& row : *corpus.manifest) {
            if (!bugIds.count(row.bugId)) {
                offenders.push_back("bug " + row.bugId + " -> " + row.commitId +
                                    " (unknown bug)");
            } else if (!commitIds.count(row.commitId)) {
                offenders.push_back("bug " + row.bugId + " -> " + row.commitId +
                                    " (unknown commit)");
            }
        }
        if (!offenders.empty()) throw DanglingLinkError(std::move(offenders));
        for (const auto& row : *corpus.manifest) {
            addLink(row.bugId, row.commitId, LinkSource::ExplicitManifest);
        }
        return links;
    }

    static const std::regex bugRef(R"((?:\b[Bb][Uu][Gg]\b[\s:#-]*|#)(\d+))");
    for (const auto& commit : corpus.commits) {
        auto begin = std::sregex_iterator(commit.message.begin(), commit.message.end(), bugRef);
        for (auto it = begin; it != std::sregex_iterator(); ++it) {
            addLink((*it)[1].str(), commit.commitId, LinkSource::MessageRegex);
        }
    }
    return links;
}

ExtractionResult extract_revision_pairs(const BugFixLink& link, const CommitRecord& commit) {
    ExtractionResult result;
    for (const auto& file : commit.changedFiles) {
        if (!file.beforeText) {
            ++result.skippedAddedFiles;
            continue;
        }
        if (*file.beforeText == file.afterText) continue;
        FileRevisionPair pair;
        pair.link = link;
        pair.path = file.path;
        pair.beforeText = file.beforeText;
        pair.afterText = file.afterText;
        result.pairs.push_back(std::move(pair));
    }
    return result;
}

MiningReport mine(const Corpus& corpus, const MineOptions& options) {
    MiningReport report;
    report.totalBugs = static_cast<long long>(corpus.bugs.size());
    report.totalCommits = static_cast<long long>(corpus.commits.size());

    std::vector<std::string> ambiguous;
    auto categorized = identify_crash_bugs(corpus.bugs, options.scanLongDesc, &ambiguous);
    std::sort(ambiguous.begin(), ambiguous.end());
    report.ambiguousBugs = std::move(ambiguous);

    auto links = link_fix_commits(corpus, categorized);
    report.linkCount = static_cast<long long>(links.size());
    std::sort(links.begin(), links.end(), [](const BugFixLink& a, const BugFixLink& b) {
        return std::tie(a.bugId, a.commitId) < std::tie(b.bugId, b.commitId);
    });

    std::map<std::string, const CommitRecord*> commitIndex;
    for (const auto& commit : corpus.commits) commitIndex[commit.commitId] = &commit;

    std::map<std::string, CrashCategory> linkedBugs;
    std::vector<FileRevisionPair> flat;
    for (const auto& link : links) {
        linkedBugs.emplace(link.bugId, link.crash);
        auto extraction = extract_revision_pairs(link, *commitIndex.at(link.commitId));
        report.skippedAddedFiles += extraction.skippedAddedFiles;
        for (auto& pair : extraction.pairs) flat.push_back(std::move(pair));
    }
    std::sort(flat.begin(), flat.end(), [](const FileRevisionPair& a, const FileRevisionPair& b) {
        return std::tie(a.link.bugId, a.link.commitId, a.path) <
               std::tie(b.link.bugId, b.link.commitId, b.path);
    });
    report.totalFileRevisions = static_cast<long long>(flat.size());

    for (CrashCategory cat : all_crash_categories()) {
        report.crashBugCounts.emplace(crash_category_name(cat), 0);
    }
    for (const auto& [bugId, cat] : linkedBugs) {
        ++report.crashBugCounts[crash_category_name(cat)];
    }

    DetectionContext ctx{options.hierarchy};
    std::vector<Classification> classifications(flat.size());
    int threads = std::min<int>(resolveThreadCount(options.threads),
                                std::max<int>(1, static_cast<int>(flat.size())));
    {
        std::atomic<std::size_t> next{0};
        std::atomic<bool> failed{false};
        std::exception_ptr firstError;
        std::mutex errorLock;
        auto worker = [&] {
            std::size_t i;
            while (!failed && (i = next.fetch_add(1)) < flat.size()) {
                try {
                    classifications[i] = classify_pair(flat[i], flat[i].link.crash, ctx);
                } catch (...) {
                    std::lock_guard<std::mutex> guard(errorLock);
                    if (!firstError) firstError = std::current_exception();
                    failed = true;
                }
            }
        };
        std::vector<std::thread> pool;
        for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
        for (auto& t : pool) t.join();
        if (firstError) std::rethrow_exception(firstError);
    }

    for (std::size_t i = 0; i < flat.size(); ++i) {
        const FileRevisionPair& pair = flat[i];
        const Classification& cls = classifications[i];
        BugOutcome& bug = report.perBug[pair.link.bugId];
        if (bug.bugId.empty()) {
            bug.bugId = pair.link.bugId;
            bug.crash = pair.link.crash;
        }
        PairOutcome outcome;
        outcome.commitId = pair.link.commitId;
        outcome.path = pair.path;
        outcome.verdict = cls.verdict;
        outcome.topLabel = cls.topLabelId;
        for (const auto& [label, evidence] : cls.matches) outcome.matchedLabels.push_back(label.id);
        bug.pairs.push_back(std::move(outcome));
        ++bug.filesChanged;
    }

    for (auto& [bugId, bug] : report.perBug) {
        const CatalogEntry* best = nullptr;
        bool anyChange = false;
        for (const auto& pair : bug.pairs) {
            if (pair.verdict != VerdictKind::NoChange) anyChange = true;
            for (const auto& label : pair.matchedLabels) {
                const CatalogEntry* entry = catalog_entry(label);
                if (entry && (!best || entry->priority < best->priority)) best = entry;
            }
        }
        bug.topLabel = best ? best->label.id : (anyChange ? "Unknown" : "NoChange");
    }

    for (const auto& [bugId, cat] : linkedBugs) {
        if (!report.perBug.count(bugId)) report.linkedBugsWithoutPairs.push_back(bugId);
    }

    return report;
}

MiningReport mine(const std::filesystem::path& corpusRoot, const MineOptions& options) {
    return mine(load_corpus(corpusRoot), options);
}

nlohmann::json report_to_json(const MiningReport& report) {
    nlohmann::json counts;
    counts["total_bugs"] = report.totalBugs;
    counts["total_commits"] = report.totalCommits;
    counts["total_file_revisions"] = report.totalFileRevisions;
    counts["link_count"] = report.linkCount;
    counts["skipped_added_files"] = report.skippedAddedFiles;
    counts["ambiguous_bugs"] = report.ambiguousBugs;
    counts["linked_bugs_without_pairs"] = report.linkedBugsWithoutPairs;
    nlohmann::json crashCounts = nlohmann::json::object();
    for (const auto& [name, count] : report.crashBugCounts) crashCounts[name] = count;
    counts["crash_bug_counts"] = crashCounts;

    nlohmann::json perBug = nlohmann::json::object();
    for (const auto& [bugId, bug] : report.perBug) {
        nlohmann::json jb;
        jb["crash"] = crash_category_name(bug.crash);
        jb["files_changed"] = bug.filesChanged;
        jb["top_label"] = bug.topLabel;
        nlohmann::json pairs = nlohmann::json::array();
        for (const auto& pair : bug.pairs) {
            nlohmann::json jp;
            jp["commit_id"] = pair.commitId;
            jp["path"] = pair.path;
            jp["verdict"] = verdict_name(pair.verdict);
            jp["top_label"] = pair.topLabel;
            jp["matches"] = pair.matchedLabels;
            pairs.push_back(std::move(jp));
        }
        jb["pairs"] = std::move(pairs);
        perBug[bugId] = std::move(jb);
    }

    nlohmann::json doc;
    doc["corpus_counts"] = std::move(counts);
    doc["per_bug"] = std::move(perBug);
    return doc;
}

namespace {

VerdictKind verdictFromName(const std::string& name) {
    if (name == "matched") return VerdictKind::Matched;
    if (name == "no_change") return VerdictKind::NoChange;
    if (name == "unknown") return VerdictKind::Unknown;
    throw CorpusError("malformed report: unknown verdict \"" + name + "\"");
}

} // namespace

MiningReport report_from_json(const nlohmann::json& doc) {
    try {
        MiningReport report;
        const auto& counts = doc.at("corpus_counts");
        report.totalBugs = counts.at("total_bugs").get<long long>();
        report.totalCommits = counts.at("total_commits").get<long long>();
        report.totalFileRevisions = counts.at("total_file_revisions").get<long long>();
        report.linkCount = counts.at("link_count").get<long long>();
        report.skippedAddedFiles = counts.at("skipped_added_files").get<long long>();
        report.ambiguousBugs = counts.at("ambiguous_bugs").get<std::vector<std::string>>();
        report.linkedBugsWithoutPairs =
            counts.at("linked_bugs_without_pairs").get<std::vector<std::string>>();
        for (const auto& [name, value] : counts.at("crash_bug_counts").items()) {
            report.crashBugCounts[name] = value.get<long long>();
        }
        for (const auto& [bugId, jb] : doc.at("per_bug").items()) {
            BugOutcome bug;
            bug.bugId = bugId;
            auto crash = parse_crash_category(jb.at("crash").get<std::string>());
            if (!crash) {
                throw CorpusError("malformed report: unknown crash category for bug " + bugId);
            }
            bug.crash = *crash;
            bug.filesChanged = jb.at("files_changed").get<int>();
            bug.topLabel = jb.at("top_label").get<std::string>();
            for (const auto& jp : jb.at("pairs")) {
                PairOutcome pair;
                pair.commitId = jp.at("commit_id").get<std::string>();
                pair.path = jp.at("path").get<std::string>();
                pair.verdict = verdictFromName(jp.at("verdict").get<std::string>());
                pair.topLabel = jp.at("top_label").get<std::string>();
                pair.matchedLabels = jp.at("matches").get<std::vector<std::string>>();
                bug.pairs.push_back(std::move(pair));
            }
            report.perBug[bugId] = std::move(bug);
        }
        return report;
    } catch (const nlohmann::json::exception& err) {
        throw CorpusError(std::string("malformed report: ") + err.what());
    }
}

} // namespace crashfix
