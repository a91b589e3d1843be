// Acceptance gate: exercises the seven headline guarantees end to end and
// prints one PASS/FAIL line per criterion. Exit code is the failure count.
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "crashfix/change_script.hpp"
#include "crashfix/classifier.hpp"
#include "crashfix/miner.hpp"
#include "crashfix/stats.hpp"
#include "crashfix/suggest.hpp"

#include "support.hpp"

using namespace crashfix;

namespace {

double secondsSince(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Gate {
    int failures = 0;

    void criterion(int number, const char* description,
                   const std::function<bool(std::string&)>& body) {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = body(detail);
        } catch (const std::exception& err) {
            detail = std::string("exception: ") + err.what();
        }
        std::printf("%s %d %s [%.2fs]%s%s\n", ok ? "PASS" : "FAIL", number, description,
                    secondsSince(start), detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
};

std::vector<std::string> fingerprintsOf(const std::vector<StmtPtr>& stmts) {
    std::vector<std::string> out;
    out.reserve(stmts.size());
    for (const auto& stmt : stmts) out.push_back(stmt->fingerprint);
    return out;
}

bool replayMatches(const std::string& before, const std::string& after, std::string& detail) {
    ChangeScript script = extract_change_script(before, after);
    std::vector<StmtPtr> replayed = apply_script(script.beforeUnit.statements, script);
    if (fingerprintsOf(replayed) != fingerprintsOf(script.afterUnit.statements)) {
        detail = "replayed statements differ from the after revision";
        return false;
    }
    return true;
}

// Exhaustive LCS: longest subset of `a` (in order) that is a subsequence of
// `b`. Only usable for short lists; that is the point of the oracle.
int bruteForceLcs(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    int best = 0;
    for (unsigned mask = 0; mask < (1u << a.size()); ++mask) {
        std::vector<std::string> sub;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (mask >> i & 1u) sub.push_back(a[i]);
        }
        std::size_t next = 0;
        for (const std::string& fp : b) {
            if (next < sub.size() && sub[next] == fp) ++next;
        }
        if (next == sub.size()) best = std::max<int>(best, static_cast<int>(sub.size()));
    }
    return best;
}

CrashSite siteOf(const std::string& snippet, const std::string& focus) {
    CrashSite site;
    site.snippet = snippet;
    std::size_t at = snippet.find(focus);
    site.focusBegin = at;
    site.focusEnd = at + focus.size();
    return site;
}

} // namespace

int main() {
    Gate gate;
    const std::string golden = testsupport::dataDir() + "/golden";
    const std::string synthetic = testsupport::dataDir() + "/synthetic";

    gate.criterion(1, "golden corpus pairs classify to their expected labels",
                   [&](std::string& detail) {
        auto start = std::chrono::steady_clock::now();
        for (const auto& pair : testsupport::goldenPairs()) {
            Classification cls =
                classify(testsupport::goldenBefore(pair), testsupport::goldenAfter(pair),
                         pair.crash);
            if (cls.verdict != VerdictKind::Matched || cls.topLabelId != pair.label) {
                detail = std::string(pair.exampleId) + ": verdict " +
                         verdict_name(cls.verdict) + ", top label '" + cls.topLabelId +
                         "', wanted '" + pair.label + "'";
                return false;
            }
        }
        if (secondsSince(start) >= 5.0) {
            detail = "classification of 17 pairs exceeded the 5s budget";
            return false;
        }
        return true;
    });

    gate.criterion(2, "change scripts replay to the after revision", [&](std::string& detail) {
        for (const auto& pair : testsupport::goldenPairs()) {
            if (!replayMatches(testsupport::goldenBefore(pair), testsupport::goldenAfter(pair),
                               detail)) {
                detail += std::string(" (") + pair.exampleId + ")";
                return false;
            }
        }
        std::mt19937 rng(424242);
        for (int trial = 0; trial < 200; ++trial) {
            testsupport::MutationCase mixed = testsupport::randomMutation(rng);
            if (!replayMatches(mixed.before, mixed.after, detail)) {
                detail += " (seed 424242, trial " + std::to_string(trial) + ")";
                return false;
            }
        }
        return true;
    });

    gate.criterion(3, "statement alignment matches a brute-force LCS oracle",
                   [&](std::string& detail) {
        const auto& pool = testsupport::statementPool();
        std::mt19937 rng(9001);
        auto pick = [&](std::size_t n) {
            return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
        };
        auto randomUnit = [&]() {
            std::string source;
            std::size_t len = pick(9); // 0..8 statements
            for (std::size_t i = 0; i < len; ++i) {
                source += pool[pick(pool.size())];
                source += '\n';
            }
            return parse_statements(source);
        };
        for (int trial = 0; trial < 500; ++trial) {
            SourceUnit before = randomUnit();
            SourceUnit after = randomUnit();
            auto matches = align_statements(before.statements, after.statements);
            auto beforeFps = fingerprintsOf(before.statements);
            auto afterFps = fingerprintsOf(after.statements);
            int oracle = bruteForceLcs(beforeFps, afterFps);
            if (static_cast<int>(matches.size()) != oracle) {
                detail = "trial " + std::to_string(trial) + ": alignment length " +
                         std::to_string(matches.size()) + ", oracle " + std::to_string(oracle);
                return false;
            }
            int lastBefore = -1;
            int lastAfter = -1;
            for (auto [b, a] : matches) {
                if (b <= lastBefore || a <= lastAfter || beforeFps[b] != afterFps[a]) {
                    detail = "trial " + std::to_string(trial) +
                             ": alignment is not a valid common subsequence";
                    return false;
                }
                lastBefore = b;
                lastAfter = a;
            }
        }
        return true;
    });

    gate.criterion(4, "synthetic corpus mining recovers the planted distribution",
                   [&](std::string& detail) {
        auto start = std::chrono::steady_clock::now();
        MiningReport report = mine(std::filesystem::path(synthetic));
        std::map<std::string, long long> wantCounts = {{"NPE", 79}, {"OOBE", 12}, {"CCE", 9}};
        if (report.crashBugCounts != wantCounts) {
            detail = "crash bug counts off:";
            for (const auto& [name, count] : report.crashBugCounts) {
                detail += ' ' + name + '=' + std::to_string(count);
            }
            return false;
        }
        struct Plan {
            CrashCategory crash;
            std::map<std::string, long long> labelCounts;
        };
        const std::vector<Plan> plans = {
            {CrashCategory::NPE,
             {{"null_checker", 71},
              {"initialize_object", 3},
              {"change_sequence", 2},
              {"use_is_empty", 2},
              {"use_clear", 1}}},
            {CrashCategory::OOBE,
             {{"check_array_length", 4},
              {"check_range", 3},
              {"fix_off_by_one", 2},
              {"add_try_catch", 1},
              {"use_correct_increment", 1},
              {"set_lower_bound", 1}}},
            {CrashCategory::CCE,
             {{"use_instance_checker", 5},
              {"lazy_cast", 1},
              {"use_correct_castee", 1},
              {"use_correct_caster", 1},
              {"type_checking", 1}}},
        };
        for (const Plan& plan : plans) {
            Distribution dist = fix_type_distribution(report, plan.crash);
            for (const auto& bucket : dist.buckets) {
                auto it = plan.labelCounts.find(bucket.key);
                long long want = it == plan.labelCounts.end() ? 0 : it->second;
                if (bucket.count != want) {
                    detail = std::string(crash_category_name(plan.crash)) + " bucket " +
                             bucket.key + ": count " + std::to_string(bucket.count) +
                             ", planted " + std::to_string(want);
                    return false;
                }
                double exact = dist.total > 0 ? 100.0 * bucket.count / dist.total : 0.0;
                if (bucket.percent < exact - 0.1 || bucket.percent > exact + 0.1) {
                    detail = std::string(crash_category_name(plan.crash)) + " bucket " +
                             bucket.key + ": percent drifted from the exact ratio";
                    return false;
                }
            }
        }
        if (secondsSince(start) >= 30.0) {
            detail = "mining the 100-bug corpus exceeded the 30s budget";
            return false;
        }
        return true;
    });

    gate.criterion(5, "guard suggestions re-classify to their own label",
                   [&](std::string& detail) {
        struct Fixture {
            CrashCategory crash;
            std::string snippet;
            std::string focus;
        };
        const std::vector<Fixture> fixtures = {
            {CrashCategory::NPE, "x.run();", "x.run()"},
            {CrashCategory::NPE, "fViewer.refresh();", "fViewer.refresh()"},
            {CrashCategory::NPE, "y = box.value;", "box.value"},
            {CrashCategory::NPE, "label.setText(name);", "label.setText(name)"},
            {CrashCategory::OOBE, "use(slots[i]);", "slots[i]"},
            {CrashCategory::OOBE, "values[k] = 0;", "values[k]"},
            {CrashCategory::OOBE, "int v = data[pos];", "data[pos]"},
            {CrashCategory::OOBE, "sum = sum + items[j];", "items[j]"},
            {CrashCategory::CCE, "IResource r = (IResource) root.findMember(path);",
             "(IResource) root.findMember(path)"},
            {CrashCategory::CCE, "String s = (String) value;", "(String) value"},
            {CrashCategory::CCE, "List l = (List) getChildren();", "(List) getChildren()"},
            {CrashCategory::CCE, "Widget w = (Widget) items[0];", "(Widget) items[0]"},
        };
        int verified = 0;
        for (const Fixture& fixture : fixtures) {
            auto suggestions = suggest(siteOf(fixture.snippet, fixture.focus), fixture.crash);
            if (suggestions.empty()) {
                detail = "no suggestion for '" + fixture.snippet + "'";
                return false;
            }
            for (const Suggestion& suggestion : suggestions) {
                Classification cls =
                    classify(fixture.snippet, suggestion.patchedSnippet, fixture.crash);
                if (cls.verdict != VerdictKind::Matched ||
                    cls.topLabelId != suggestion.label.id) {
                    detail = suggestion.label.id + " patch for '" + fixture.snippet +
                             "' classified as '" + cls.topLabelId + "'";
                    return false;
                }
                ++verified;
            }
        }
        detail = std::to_string(fixtures.size()) + " sites, " + std::to_string(verified) +
                 " suggestions verified";
        return true;
    });

    gate.criterion(6, "mining output is deterministic under input reordering",
                   [&](std::string& detail) {
        std::string first = report_to_json(mine(std::filesystem::path(golden))).dump(2);
        std::string second = report_to_json(mine(std::filesystem::path(golden))).dump(2);
        if (first != second) {
            detail = "two runs over the same directory differ";
            return false;
        }
        Corpus corpus = load_corpus(golden);
        std::mt19937 rng(5150);
        std::shuffle(corpus.bugs.begin(), corpus.bugs.end(), rng);
        std::shuffle(corpus.commits.begin(), corpus.commits.end(), rng);
        for (auto& commit : corpus.commits) {
            std::shuffle(commit.changedFiles.begin(), commit.changedFiles.end(), rng);
        }
        if (corpus.manifest) std::shuffle(corpus.manifest->begin(), corpus.manifest->end(), rng);
        std::string shuffled = report_to_json(mine(corpus)).dump(2);
        if (first != shuffled) {
            detail = "report changed after shuffling the corpus vectors";
            return false;
        }
        return true;
    });

    gate.criterion(7, "opaque-heavy sources mine to completion without a crash",
                   [&](std::string& detail) {
        Corpus corpus;
        corpus.bugs.push_back({"901", "NullPointerException while refreshing the editor", ""});
        CommitRecord commit;
        commit.commitId = "z1";
        commit.message = "fix bug 901";
        ChangedFile file;
        file.path = "Editor.java";
        // Half the statements fall outside the parsed subset on purpose.
        file.beforeText = "synchronized (lock) { cache.flush(); }\n"
                          "switch (kind) { case 1: break; }\n"
                          "x = 1;\n"
                          "fViewer.refresh();\n";
        file.afterText = "synchronized (lock) { cache.flush(); }\n"
                         "switch (kind) { case 2: break; }\n"
                         "x = 1;\n"
                         "fViewer.refresh();\n";
        commit.changedFiles.push_back(std::move(file));
        corpus.commits.push_back(std::move(commit));

        MiningReport report = mine(corpus);
        if (report.totalFileRevisions != 1 || report.perBug.count("901") == 0) {
            detail = "the opaque pair did not make it into the report";
            return false;
        }
        const BugOutcome& outcome = report.perBug.at("901");
        if (outcome.topLabel != "Unknown" || outcome.pairs.size() != 1 ||
            outcome.pairs[0].verdict != VerdictKind::Unknown) {
            detail = "expected an Unknown outcome, got '" + outcome.topLabel + "'";
            return false;
        }
        return true;
    });

    std::printf("%d of 7 criteria passed\n", 7 - gate.failures);
    return gate.failures;
}
