// Writes the checked-in synthetic corpus: 100 linked crash bugs with a
// 79/12/9 category split and fixed per-label counts, then re-mines the
// result and refuses to emit anything that does not classify back to the
// label it was built for.
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "crashfix/classifier.hpp"
#include "crashfix/miner.hpp"
#include "crashfix/stats.hpp"

namespace fs = std::filesystem;
using namespace crashfix;

namespace {

constexpr unsigned kSeed = 1907;

struct NamePools {
    std::mt19937 rng{kSeed};
    int serial = 0;

    std::string pick(const std::vector<std::string>& pool) {
        std::uniform_int_distribution<std::size_t> d(0, pool.size() - 1);
        return pool[d(rng)];
    }
    // Serial suffix keeps file texts distinct across the corpus.
    std::string field() {
        static const std::vector<std::string> pool = {
            "fViewer", "fTable", "fModel", "fManager", "fCache",
            "fStore",  "fTree",  "fInput", "fAdapter", "fRegistry"};
        return pick(pool) + std::to_string(++serial);
    }
    std::string local() {
        static const std::vector<std::string> pool = {"entry", "item",  "node",
                                                      "part",  "value", "target"};
        return pick(pool) + std::to_string(++serial);
    }
    std::string array() {
        static const std::vector<std::string> pool = {"entries",  "items", "children",
                                                      "elements", "slots", "markers"};
        return pick(pool) + std::to_string(++serial);
    }
    std::string index() {
        static const std::vector<std::string> pool = {"i", "j", "k", "index", "pos", "offset"};
        return pick(pool) + std::to_string(++serial);
    }
    std::string method() {
        static const std::vector<std::string> pool = {"refresh",  "update",   "dispose",
                                                      "repaint",  "validate", "reload",
                                                      "activate", "commitState"};
        return pick(pool);
    }
    std::string type() {
        static const std::vector<std::string> pool = {
            "IResource",   "IDocument", "IViewerInput", "IStatusField",
            "IBuildEntry", "IMarker",   "IWorkingCopy", "IDecoration"};
        return pick(pool);
    }
    std::string className() {
        static const std::vector<std::string> pool = {
            "ViewerPart",    "ModelSync",     "MarkerSweep",  "EditorBinder",
            "OutlineWalker", "ConsoleFilter", "LaunchHolder", "RulerColumn"};
        return pick(pool) + std::to_string(++serial) + ".java";
    }
};

struct FilePair {
    std::string before;
    std::string after;
};

FilePair makeNullChecker(NamePools& n) {
    std::string obj = n.field();
    std::string m = n.method();
    FilePair f;
    f.before = obj + "." + m + "();\n";
    f.after = "if (" + obj + " == null)\n    return;\n" + obj + "." + m + "();\n";
    return f;
}

FilePair makeInitializeObject(NamePools& n) {
    std::string x = n.field();
    std::string reg = n.field();
    std::string key = n.local();
    std::string type = n.type();
    FilePair f;
    f.before = "if (" + x + " == null) {\n    " + reg + ".put(" + key + ", new " + type +
               "());\n}\n" + x + ".markDirty(" + key + ");\n";
    f.after = "if (" + x + " == null) {\n    " + x + " = new " + type + "();\n    " + reg +
              ".put(" + key + ", " + x + ");\n}\n" + x + ".markDirty(" + key + ");\n";
    return f;
}

FilePair makeChangeSequence(NamePools& n) {
    std::string a = n.method();
    std::string b = "handle" + n.type();
    std::string v = n.local();
    FilePair f;
    f.before = a + "(" + v + ");\nsuper." + b + "(" + v + ");\n";
    f.after = "super." + b + "(" + v + ");\n" + a + "(" + v + ");\n";
    return f;
}

FilePair makeUseIsEmpty(NamePools& n) {
    std::string list = n.field();
    std::string v = n.local();
    std::string type = n.type();
    FilePair f;
    std::string body = "if (" + v + " instanceof " + type + ") {\n    " + type + " element = (" +
                       type + ")" + v + ";\n    return verifyElement(element);\n}\n";
    f.before = body;
    f.after = "if (" + list + ".isEmpty()) return true;\n" + body;
    return f;
}

FilePair makeUseClear(NamePools& n) {
    std::string m = n.field();
    FilePair f;
    f.before = m + " = null;\n";
    f.after = m + ".clear();\n";
    return f;
}

FilePair makeCheckRange(NamePools& n) {
    std::string arr = n.array();
    std::string i = n.index();
    std::string type = n.type();
    std::string item = n.local();
    FilePair f;
    std::string use = type + " current = " + arr + "[" + i + "];\n" + item +
                      ".setLabel(current.getName());\n";
    f.before = use;
    f.after = "if (0 <= " + i + " && " + i + " < " + arr + ".length) {\n    " + type +
              " current = " + arr + "[" + i + "];\n    " + item +
              ".setLabel(current.getName());\n}\n";
    return f;
}

FilePair makeCheckArrayLength(NamePools& n) {
    std::string arr = n.array();
    FilePair f;
    std::string use = "Object data = " + arr + "[" + arr + ".length - 1].getData();\n";
    f.before = use;
    f.after = "if (" + arr + ".length > 0) {\n    " + use + "}\n";
    return f;
}

FilePair makeFixOffByOne(NamePools& n, bool comparatorVariant) {
    FilePair f;
    if (comparatorVariant) {
        std::string arr = n.array();
        std::string i = n.index();
        f.before = "for (int " + i + " = 0; " + i + " <= " + arr + ".length; " + i +
                   "++) {\n    visit(" + arr + "[" + i + "]);\n}\n";
        f.after = "for (int " + i + " = 0; " + i + " < " + arr + ".length; " + i +
                  "++) {\n    visit(" + arr + "[" + i + "]);\n}\n";
        return f;
    }
    std::string x = n.field();
    f.before = x + " = " + x + ".getChildren()[1];\n";
    f.after = x + " = " + x + ".getChildren()[0];\n";
    return f;
}

FilePair makeAddTryCatch(NamePools& n) {
    std::string type = n.type();
    std::string list = n.field();
    std::string i = n.index();
    FilePair f;
    f.before = type + " listener =\n    (" + type + ") " + list + ".get(" + i + ");\n";
    f.after = type + " listener = null;\ntry {\n    listener =\n        (" + type + ") " + list +
              ".get(" + i + ");\n} catch (ArrayIndexOutOfBoundsException) { }\n";
    return f;
}

FilePair makeUseCorrectIncrement(NamePools& n) {
    std::string outer = n.array();
    std::string arr = n.array();
    std::string i = n.index();
    std::string j = n.index();
    std::string type = n.type();
    FilePair f;
    std::string head = "for (int " + i + " = 0; " + i + " < " + outer + ".length; " + i +
                       "++) {\n    " + arr + " = lookupEditors(" + outer + "[" + i +
                       "]);\n    for (int " + j + " = 0; " + j + " < " + arr + ".length; " + j +
                       "++) {\n        " + type + " editor = " + arr + "[";
    std::string tail = "];\n    }\n}\n";
    f.before = head + i + tail;
    f.after = head + j + tail;
    return f;
}

FilePair makeSetLowerBound(NamePools& n) {
    std::string tree = n.field();
    std::string item = n.local();
    std::string idx = n.index();
    FilePair f;
    f.before = tree + ".clear(" + tree + ".indexOf(" + item + "), true);\n";
    f.after = "int " + idx + " = " + tree + ".indexOf(" + item + ");\nif (" + idx +
              " >= 0)\n    " + tree + ".clear(" + idx + ", true);\n";
    return f;
}

FilePair makeUseInstanceChecker(NamePools& n) {
    std::string type = n.type();
    std::string cu = n.local();
    std::string res = n.local();
    FilePair f;
    std::string cast = type + " " + cu + " = (" + type + ")\n    JavaCore.create(" + res + ");\n";
    f.before = cast;
    f.after = "Object element = JavaCore.create(" + res + ");\nif (!(element instanceof " + type +
              "))\n    return;\n" + cast;
    return f;
}

FilePair makeLazyCast(NamePools& n) {
    std::string f1 = n.field();
    std::string type = n.type();
    std::string path = n.field();
    FilePair f;
    f.before = f1 + " = (" + type + ") root.findMember(" + path + ");\nif (" + f1 +
               " != null) {\n    initializeFromMember();\n}\n";
    f.after = "Object found = root.findMember(" + path + ");\nif (found instanceof " + type +
              ") {\n    " + f1 + " = (" + type + ") found;\n    if (" + f1 +
              " != null) {\n        initializeFromMember();\n    }\n}\n";
    return f;
}

FilePair makeUseCorrectCastee(NamePools& n) {
    std::string t1 = n.type();
    std::string t2 = n.type();
    while (t2 == t1) t2 = n.type();
    FilePair f;
    f.before = t1 + " type = (" + t1 + ")pop();\n" + t2 + " object = (" + t2 + ")pop();\n";
    f.after = t1 + " type = (" + t1 + ")pop();\n" + t2 + " object = (" + t2 + ")popValue();\n";
    return f;
}

FilePair makeUseCorrectCaster(NamePools& n) {
    std::string t1 = "Workspace" + n.type();
    std::string t2 = n.type();
    std::string v = n.local();
    FilePair f;
    f.before = t1 + " " + v + " =\n    (" + t1 + ")dialog.getFirstResult();\nupdateText(" + v +
               ".getId());\n";
    f.after = t2 + " " + v + " =\n    (" + t2 + ")dialog.getFirstResult();\nupdateText(" + v +
              ".getId());\n";
    return f;
}

FilePair makeTypeChecking(NamePools& n) {
    std::string v = n.local();
    std::string target = n.field();
    std::string m = n.method();
    FilePair f;
    f.before = m + "(" + v + ");\n";
    f.after = "if (" + v + ".getClass() == " + target + ") {\n    " + m + "(" + v + ");\n}\n";
    return f;
}

FilePair makeFile(const std::string& label, NamePools& n, int variant) {
    if (label == "null_checker") return makeNullChecker(n);
    if (label == "initialize_object") return makeInitializeObject(n);
    if (label == "change_sequence") return makeChangeSequence(n);
    if (label == "use_is_empty") return makeUseIsEmpty(n);
    if (label == "use_clear") return makeUseClear(n);
    if (label == "check_range") return makeCheckRange(n);
    if (label == "check_array_length") return makeCheckArrayLength(n);
    if (label == "fix_off_by_one") return makeFixOffByOne(n, variant % 2 == 1);
    if (label == "add_try_catch") return makeAddTryCatch(n);
    if (label == "use_correct_increment") return makeUseCorrectIncrement(n);
    if (label == "set_lower_bound") return makeSetLowerBound(n);
    if (label == "use_instance_checker") return makeUseInstanceChecker(n);
    if (label == "lazy_cast") return makeLazyCast(n);
    if (label == "use_correct_castee") return makeUseCorrectCastee(n);
    if (label == "use_correct_caster") return makeUseCorrectCaster(n);
    if (label == "type_checking") return makeTypeChecking(n);
    throw std::runtime_error("no template for label " + label);
}

std::string shortDescFor(CrashCategory cat, NamePools& n, int rotation) {
    std::string tail;
    switch (rotation % 4) {
    case 0: tail = "while refreshing the " + n.local() + " view"; break;
    case 1: tail = "during workspace save"; break;
    case 2: tail = "when the selection changes"; break;
    default: tail = "on project rebuild"; break;
    }
    switch (cat) {
    case CrashCategory::NPE:
        if (rotation % 3 == 1) return "NPE " + tail;
        if (rotation % 3 == 2) return "crash: java.lang.NullPointerException " + tail;
        return "NullPointerException " + tail;
    case CrashCategory::OOBE:
        if (rotation % 3 == 1) return "IndexOutOfBoundsException " + tail;
        if (rotation % 3 == 2) return "OOBE " + tail;
        return "ArrayIndexOutOfBoundsException " + tail;
    default:
        if (rotation % 3 == 1) return "CCE " + tail;
        return "ClassCastException " + tail;
    }
}

std::string messageFor(NamePools& n, int rotation) {
    static const std::vector<std::string> pool = {
        "Guard the viewer input before refreshing",
        "Reuse caches instead of nulling them out",
        "Check the selection bounds before painting",
        "Tolerate stale listeners during shutdown",
        "Verify the runtime type before casting the result",
        "Reorder the selection callbacks",
        "Clamp the computed index to the available width",
        "Skip filtering when nothing is registered",
    };
    return pool[rotation % pool.size()] + " (" + n.local() + ")";
}

void writeFile(const fs::path& path, const std::string& content) {
    fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

struct Plan {
    CrashCategory cat;
    std::string label;
};

} // namespace

int main(int argc, char** argv) {
    fs::path outDir = argc > 1 ? fs::path(argv[1]) : fs::path("data/synthetic");

    // Per-category label counts; top-3 coverage lands at 96.2 / 75.0 / 77.8.
    std::vector<std::pair<std::string, int>> npe = {{"null_checker", 71},
                                                    {"initialize_object", 3},
                                                    {"change_sequence", 2},
                                                    {"use_is_empty", 2},
                                                    {"use_clear", 1}};
    std::vector<std::pair<std::string, int>> oobe = {{"check_array_length", 4},
                                                     {"check_range", 3},
                                                     {"fix_off_by_one", 2},
                                                     {"add_try_catch", 1},
                                                     {"use_correct_increment", 1},
                                                     {"set_lower_bound", 1}};
    std::vector<std::pair<std::string, int>> cce = {{"use_instance_checker", 5},
                                                    {"lazy_cast", 1},
                                                    {"use_correct_castee", 1},
                                                    {"use_correct_caster", 1},
                                                    {"type_checking", 1}};

    NamePools pools;
    std::vector<Plan> plans;
    auto expand = [&](CrashCategory cat, const std::vector<std::pair<std::string, int>>& labelCounts) {
        std::vector<Plan> block;
        for (const auto& [label, count] : labelCounts) {
            for (int i = 0; i < count; ++i) block.push_back({cat, label});
        }
        std::shuffle(block.begin(), block.end(), pools.rng);
        plans.insert(plans.end(), block.begin(), block.end());
    };
    expand(CrashCategory::NPE, npe);
    expand(CrashCategory::OOBE, oobe);
    expand(CrashCategory::CCE, cce);

    fs::remove_all(outDir);
    fs::create_directories(outDir);

    std::string bugsJsonl;
    std::string linksJsonl;
    int bugNumber = 2000;
    int rotation = 0;
    std::map<std::string, std::map<std::string, int>> written; // category -> label -> bugs
    for (const Plan& plan : plans) {
        ++bugNumber;
        ++rotation;
        std::string bugId = std::to_string(bugNumber);
        std::string commitId = "s" + bugId;

        std::uniform_int_distribution<int> d(0, 99);
        int roll = d(pools.rng);
        int files = roll < 78 ? 1 : roll < 90 ? 2 : roll < 97 ? 3 : 4;

        for (int fileNo = 0; fileNo < files; ++fileNo) {
            FilePair pair = makeFile(plan.label, pools, fileNo);
            Classification check = classify(pair.before, pair.after, plan.cat);
            if (check.verdict != VerdictKind::Matched || check.topLabelId != plan.label) {
                std::cerr << "template for " << plan.label << " classified as "
                          << (check.topLabelId.empty() ? verdict_name(check.verdict)
                                                       : check.topLabelId)
                          << "\n";
                return 1;
            }
            std::string fileName = pools.className();
            writeFile(outDir / "commits" / commitId / "before" / fileName, pair.before);
            writeFile(outDir / "commits" / commitId / "after" / fileName, pair.after);
        }
        writeFile(outDir / "commits" / commitId / "message.txt",
                  messageFor(pools, rotation) + "\n");

        nlohmann::json bug{{"bug_id", bugId},
                           {"short_desc", shortDescFor(plan.cat, pools, rotation)}};
        bugsJsonl += bug.dump() + "\n";
        nlohmann::json link{{"bug_id", bugId}, {"commit_id", commitId}};
        linksJsonl += link.dump() + "\n";
        ++written[crash_category_name(plan.cat)][plan.label];
    }
    writeFile(outDir / "bugs.jsonl", bugsJsonl);
    writeFile(outDir / "links.jsonl", linksJsonl);

    // Re-mine what we wrote and require the plan to be recovered exactly.
    MiningReport report = mine(outDir);
    bool ok = report.totalBugs == 100 && report.linkCount == 100;
    std::map<std::string, std::map<std::string, int>> recovered;
    for (const auto& [bugId, bug] : report.perBug) {
        ++recovered[crash_category_name(bug.crash)][bug.topLabel];
    }
    if (recovered != written) ok = false;
    for (const auto& [cat, labels] : written) {
        long long total = 0;
        for (const auto& [label, count] : labels) total += count;
        std::cout << cat << ": " << total << " bugs";
        for (const auto& [label, count] : labels) std::cout << ", " << label << "=" << count;
        std::cout << "\n";
    }
    for (const auto& cov : coverage_summary(report)) {
        std::cout << crash_category_name(cov.crash) << " top-3 coverage: "
                  << (cov.defined ? std::to_string(cov.percent) : "n/a") << " (" << cov.covered
                  << "/" << cov.classified << ")\n";
    }
    if (!ok) {
        std::cerr << "generated corpus does not recover the construction plan\n";
        return 1;
    }
    std::cout << "wrote " << outDir.string() << "\n";
    return 0;
}
