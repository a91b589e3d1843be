#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "crashfix/classifier.hpp"
#include "crashfix/miner.hpp"
#include "crashfix/stats.hpp"
#include "crashfix/suggest.hpp"

namespace {

using namespace crashfix;

std::string readFileOrThrow(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CorpusError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void writeFileOrThrow(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CorpusError("cannot write " + path.string());
    out << content;
}

nlohmann::json classificationToJson(const Classification& cls) {
    nlohmann::json doc;
    doc["crash"] = crash_category_name(cls.crash);
    doc["verdict"] = verdict_name(cls.verdict);
    doc["top_label"] = cls.topLabelId;
    doc["op_count"] = cls.script.ops.size();
    nlohmann::json matches = nlohmann::json::array();
    for (const auto& [label, evidence] : cls.matches) {
        nlohmann::json m;
        m["label"] = label.id;
        m["display_name"] = label.displayName;
        m["narrative"] = evidence.narrative;
        nlohmann::json ops = nlohmann::json::array();
        for (int idx : evidence.matchedOps) {
            ops.push_back({{"index", idx}, {"kind", edit_kind_name(cls.script.ops[idx].kind)}});
        }
        m["ops"] = std::move(ops);
        matches.push_back(std::move(m));
    }
    doc["matches"] = std::move(matches);
    return doc;
}

void printClassificationText(const Classification& cls) {
    std::cout << "verdict: " << verdict_name(cls.verdict) << "\n";
    if (!cls.topLabelId.empty()) std::cout << "top label: " << cls.topLabelId << "\n";
    std::cout << "ops:";
    if (cls.script.ops.empty()) std::cout << " none";
    for (const auto& op : cls.script.ops) std::cout << ' ' << edit_kind_name(op.kind);
    std::cout << "\n";
    for (const auto& [label, evidence] : cls.matches) {
        std::cout << "  " << label.id << ": " << evidence.narrative << "\n";
    }
}

struct ClassifyArgs {
    std::string beforePath;
    std::string afterPath;
    std::string crash;
    std::string hierarchyPath;
    std::string format = "text";
};

struct MineArgs {
    std::string corpusPath;
    std::string outDir;
    std::string hierarchyPath;
    std::string format = "text";
    bool scanLongDesc = false;
};

struct StatsArgs {
    std::string reportPath;
    std::string outDir = ".";
    std::string format = "text";
};

struct SuggestArgs {
    std::string snippetPath;
    std::string focus;
    std::string crash;
    std::string epilogue = "return";
    std::string format = "text";
};

int runClassify(const ClassifyArgs& args) {
    TypeHierarchy hierarchy;
    DetectionContext ctx;
    if (!args.hierarchyPath.empty()) {
        hierarchy = TypeHierarchy::load_file(args.hierarchyPath);
        ctx.hierarchy = &hierarchy;
    }
    std::string before = readFileOrThrow(args.beforePath);
    std::string after = readFileOrThrow(args.afterPath);
    Classification cls = classify(before, after, *parse_crash_category(args.crash), ctx);
    if (args.format == "json") {
        std::cout << classificationToJson(cls).dump(2) << "\n";
    } else {
        printClassificationText(cls);
    }
    return 0;
}

int runMine(const MineArgs& args) {
    TypeHierarchy hierarchy;
    MineOptions options;
    options.scanLongDesc = args.scanLongDesc;
    if (!args.hierarchyPath.empty()) {
        hierarchy = TypeHierarchy::load_file(args.hierarchyPath);
        options.hierarchy = &hierarchy;
    }
    MiningReport report = mine(std::filesystem::path(args.corpusPath), options);
    nlohmann::json doc = report_to_json(report);
    std::filesystem::path outDir(args.outDir);
    std::filesystem::create_directories(outDir);
    writeFileOrThrow(outDir / "report.json", doc.dump(2) + "\n");
    auto figures = write_figure_csvs(report, outDir);
    if (args.format == "json") {
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    std::cout << "bugs: " << report.totalBugs << ", commits: " << report.totalCommits
              << ", links: " << report.linkCount << ", file revisions: "
              << report.totalFileRevisions << "\n";
    std::cout << "crash bugs:";
    for (const auto& [name, count] : report.crashBugCounts) {
        std::cout << ' ' << name << '=' << count;
    }
    std::cout << "\n";
    std::cout << "wrote " << (outDir / "report.json").string() << " and " << figures.size()
              << " figure CSVs\n";
    return 0;
}

int runStats(const StatsArgs& args) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(readFileOrThrow(args.reportPath));
    } catch (const nlohmann::json::exception& err) {
        throw CorpusError("malformed report " + args.reportPath + ": " + err.what());
    }
    MiningReport report = report_from_json(doc);
    if (args.format == "json") {
        std::cout << stats_to_json(report).dump(2) << "\n";
    } else if (args.format == "csv") {
        for (const auto& path : write_figure_csvs(report, args.outDir)) {
            std::cout << path.string() << "\n";
        }
    } else {
        std::cout << render_stats_text(report);
    }
    return 0;
}

int runSuggest(const SuggestArgs& args) {
    CrashSite site;
    site.snippet = readFileOrThrow(args.snippetPath);
    std::size_t colon = args.focus.find(':');
    try {
        if (colon == std::string::npos) throw std::invalid_argument("missing :");
        site.focusBegin = std::stoul(args.focus.substr(0, colon));
        site.focusEnd = std::stoul(args.focus.substr(colon + 1));
    } catch (const std::exception&) {
        std::cerr << "error: --focus expects <start:end> byte offsets\n";
        return 1;
    }
    GuardEpilogue epilogue = GuardEpilogue::Return;
    if (args.epilogue == "continue") epilogue = GuardEpilogue::Continue;
    if (args.epilogue == "return-null") epilogue = GuardEpilogue::ReturnNull;
    auto suggestions = suggest(site, *parse_crash_category(args.crash), epilogue);
    if (args.format == "json") {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& s : suggestions) {
            out.push_back({{"label", s.label.id},
                           {"display_name", s.label.displayName},
                           {"rationale", s.rationale},
                           {"patched_snippet", s.patchedSnippet}});
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    if (suggestions.empty()) {
        std::cout << "no applicable templates\n";
        return 0;
    }
    for (const auto& s : suggestions) {
        std::cout << "== " << s.label.id << " (" << s.label.displayName << ") ==\n"
                  << s.rationale << "\n---\n"
                  << s.patchedSnippet;
        if (s.patchedSnippet.empty() || s.patchedSnippet.back() != '\n') std::cout << "\n";
        std::cout << "\n";
    }
    return 0;
}

int runCatalogList() {
    for (CrashCategory cat : all_crash_categories()) {
        for (const CatalogEntry* entry : catalog_for(cat)) {
            std::cout << entry->label.id << '\t' << crash_category_name(cat) << '\t'
                      << entry->label.displayName << '\t' << entry->exampleRef << '\n';
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"crash-fix mining and classification toolkit"};
    app.require_subcommand(1);

    auto crashValues = CLI::IsMember({"npe", "oobe", "cce"}, CLI::ignore_case);

    ClassifyArgs classifyArgs;
    CLI::App* classifyCmd =
        app.add_subcommand("classify", "classify one before/after revision pair");
    classifyCmd->add_option("before", classifyArgs.beforePath, "pre-fix source file")->required();
    classifyCmd->add_option("after", classifyArgs.afterPath, "post-fix source file")->required();
    classifyCmd->add_option("--crash", classifyArgs.crash, "crash category")
        ->required()
        ->check(crashValues);
    classifyCmd->add_option("--type-hierarchy", classifyArgs.hierarchyPath,
                            "two-column TSV of sub/super type facts");
    classifyCmd->add_option("--format", classifyArgs.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    MineArgs mineArgs;
    CLI::App* mineCmd = app.add_subcommand("mine", "mine a corpus directory into a report");
    mineCmd->add_option("corpus", mineArgs.corpusPath, "corpus root directory")->required();
    mineCmd->add_option("--out", mineArgs.outDir, "output directory")->required();
    mineCmd->add_flag("--scan-long-desc", mineArgs.scanLongDesc,
                      "scan long descriptions for crash keywords too");
    mineCmd->add_option("--type-hierarchy", mineArgs.hierarchyPath,
                        "two-column TSV of sub/super type facts");
    mineCmd->add_option("--format", mineArgs.format, "stdout format")
        ->check(CLI::IsMember({"json", "text"}));

    StatsArgs statsArgs;
    CLI::App* statsCmd =
        app.add_subcommand("stats", "recompute distributions from a saved report");
    statsCmd->add_option("report", statsArgs.reportPath, "report.json from mine")->required();
    statsCmd->add_option("--out", statsArgs.outDir, "directory for --format csv");
    statsCmd->add_option("--format", statsArgs.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    SuggestArgs suggestArgs;
    CLI::App* suggestCmd = app.add_subcommand("suggest", "instantiate guard fix templates");
    suggestCmd->add_option("snippet", suggestArgs.snippetPath, "buggy snippet file")->required();
    suggestCmd->add_option("--focus", suggestArgs.focus, "crashing expression as start:end")
        ->required();
    suggestCmd->add_option("--crash", suggestArgs.crash, "crash category")
        ->required()
        ->check(crashValues);
    suggestCmd->add_option("--guard-epilogue", suggestArgs.epilogue, "inserted guard body")
        ->check(CLI::IsMember({"return", "continue", "return-null"}));
    suggestCmd->add_option("--format", suggestArgs.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    CLI::App* catalogCmd = app.add_subcommand("catalog", "fix-type catalog");
    catalogCmd->require_subcommand(1);
    CLI::App* catalogListCmd = catalogCmd->add_subcommand("list", "print all catalog entries");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (classifyCmd->parsed()) return runClassify(classifyArgs);
        if (mineCmd->parsed()) return runMine(mineArgs);
        if (statsCmd->parsed()) return runStats(statsArgs);
        if (suggestCmd->parsed()) return runSuggest(suggestArgs);
        if (catalogListCmd->parsed()) return runCatalogList();
    } catch (const InapplicableSiteError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const CorpusError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 1;
}
