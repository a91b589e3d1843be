#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "crashfix/catalog.hpp"

namespace testsupport {

inline std::string dataDir() {
    return CRASHFIX_DATA_DIR;
}

inline std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct GoldenPair {
    const char* exampleId; // worked-example id, also shown by `catalog list`
    const char* bugId;
    const char* commitId;
    const char* file;
    crashfix::CrashCategory crash;
    const char* label;                // expected top label
    std::vector<const char*> matches; // every label expected to match, in priority order
};

inline const std::vector<GoldenPair>& goldenPairs() {
    using crashfix::CrashCategory;
    static const std::vector<GoldenPair> pairs = {
        {"A.1.1", "101", "c101", "TextHoverManager.java", CrashCategory::NPE, "null_checker",
         {"null_checker"}},
        {"A.1.2", "102", "c102", "SelectionHandler.java", CrashCategory::NPE, "change_sequence",
         {"change_sequence"}},
        {"A.1.3", "103", "c103", "BuildTimeKeeper.java", CrashCategory::NPE, "initialize_object",
         {"initialize_object"}},
        {"A.1.4", "104", "c104", "ElementFilter.java", CrashCategory::NPE, "use_is_empty",
         {"use_is_empty"}},
        {"A.1.6", "106", "c106", "FontCache.java", CrashCategory::NPE, "use_clear",
         {"use_clear"}},
        {"A.2.1", "121", "c121", "DetailPaneUpdater.java", CrashCategory::OOBE,
         "check_array_length", {"check_array_length"}},
        {"A.2.2", "122", "c122", "ProposalTable.java", CrashCategory::OOBE, "check_range",
         {"check_range", "check_array_length"}},
        {"A.2.3", "123", "c123", "ErrorTreeWalker.java", CrashCategory::OOBE, "fix_off_by_one",
         {"fix_off_by_one"}},
        {"A.2.4", "124", "c124", "JobListenerRegistry.java", CrashCategory::OOBE, "add_try_catch",
         {"add_try_catch"}},
        {"A.2.5", "125", "c125", "EditorLookup.java", CrashCategory::OOBE,
         "use_correct_increment", {"use_correct_increment"}},
        {"A.2.6", "126", "c126", "TreeItemClearer.java", CrashCategory::OOBE, "set_lower_bound",
         {"set_lower_bound"}},
        {"A.2.7", "127", "c127", "KeyStrokeBuffer.java", CrashCategory::OOBE,
         "use_correct_argument", {"use_correct_argument"}},
        {"A.2.8", "128", "c128", "ColumnWidthEstimator.java", CrashCategory::OOBE,
         "set_upper_bound", {"set_upper_bound"}},
        {"A.3.1", "131", "c131", "CompilationUnitResolver.java", CrashCategory::CCE,
         "use_instance_checker", {"use_instance_checker"}},
        {"A.3.2", "132", "c132", "ContainerSelector.java", CrashCategory::CCE, "lazy_cast",
         {"lazy_cast", "use_instance_checker"}},
        {"A.3.3", "133", "c133", "StackValuePopper.java", CrashCategory::CCE,
         "use_correct_castee", {"use_correct_castee"}},
        {"A.3.4", "134", "c134", "PluginModelPicker.java", CrashCategory::CCE,
         "use_correct_caster", {"use_correct_caster"}},
    };
    return pairs;
}

inline std::string goldenPath(const GoldenPair& pair, const char* side) {
    return dataDir() + "/golden/commits/" + pair.commitId + "/" + side + "/" + pair.file;
}

inline std::string goldenBefore(const GoldenPair& pair) {
    return readFile(goldenPath(pair, "before"));
}

inline std::string goldenAfter(const GoldenPair& pair) {
    return readFile(goldenPath(pair, "after"));
}

// Parseable statement templates for the randomized round-trip harness.
inline const std::vector<std::string>& statementPool() {
    static const std::vector<std::string> pool = {
        "x = 1;",
        "fViewer.refresh();",
        "int count = items.length;",
        "if (value == null) return;",
        "for (int i = 0; i < n; i++) { sum = sum + i; }",
        "while (cursor.hasNext()) { cursor.advance(); }",
        "try { parse(line); } catch (BadLocationException e) { recover(); }",
        "entries[pos] = new Entry(pos);",
        "return fModel.getElement(index);",
        "label.setText(provider.getText(element));",
        "IResource member = (IResource) root.findMember(path);",
        "if (0 <= index && index < slots.length) { use(slots[index]); }",
        "break;",
        "count++;",
    };
    return pool;
}

struct MutationCase {
    std::string before;
    std::string after;
};

// Random statement list plus one to three list edits (insert, delete, swap,
// digit tweak). Deterministic for a given generator state.
inline MutationCase randomMutation(std::mt19937& rng) {
    const auto& pool = statementPool();
    auto pick = [&](std::size_t n) {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    };

    std::vector<std::string> before;
    std::size_t len = pick(9); // 0..8
    for (std::size_t i = 0; i < len; ++i) before.push_back(pool[pick(pool.size())]);

    std::vector<std::string> after = before;
    std::size_t edits = 1 + pick(3);
    for (std::size_t e = 0; e < edits; ++e) {
        switch (pick(4)) {
        case 0: { // insert
            std::size_t at = pick(after.size() + 1);
            after.insert(after.begin() + at, pool[pick(pool.size())]);
            break;
        }
        case 1: { // delete
            if (after.empty()) break;
            after.erase(after.begin() + pick(after.size()));
            break;
        }
        case 2: { // swap
            if (after.size() < 2) break;
            std::size_t a = pick(after.size());
            std::size_t b = pick(after.size());
            std::swap(after[a], after[b]);
            break;
        }
        default: { // tweak one digit, a small token-level update
            if (after.empty()) break;
            std::string& stmt = after[pick(after.size())];
            for (char& c : stmt) {
                if (c >= '0' && c <= '9') {
                    c = c == '9' ? '0' : static_cast<char>(c + 1);
                    break;
                }
            }
            break;
        }
        }
    }

    auto join = [](const std::vector<std::string>& lines) {
        std::string out;
        for (const auto& line : lines) {
            out += line;
            out += '\n';
        }
        return out;
    };
    return {join(before), join(after)};
}

} // namespace testsupport
