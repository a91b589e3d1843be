#include "crashfix/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace fs = std::filesystem;

namespace crashfix {

const char* link_source_name(LinkSource source) {
    switch (source) {
        case LinkSource::ExplicitManifest: return "explicit-manifest";
        case LinkSource::MessageRegex: return "message-regex";
    }
    return "?";
}

namespace {

std::string readFile(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CorpusError("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

std::string requiredString(const nlohmann::json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end() || !it->is_string()) {
        throw CorpusError(where + ": missing string field \"" + key + "\"");
    }
    return it->get<std::string>();
}

std::string optionalString(const nlohmann::json& obj, const char* key) {
    auto it = obj.find(key);
    return it != obj.end() && it->is_string() ? it->get<std::string>() : std::string();
}

// Calls fn(lineNumber, parsedObject) for every non-blank line.
template <typename Fn>
void forEachJsonLine(const fs::path& path, Fn fn) {
    std::ifstream in(path);
    if (!in) throw CorpusError("cannot read " + path.string());
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        std::string trimmed = line;
        while (!trimmed.empty() && (trimmed.back() == '\r' || trimmed.back() == ' ')) trimmed.pop_back();
        if (trimmed.empty()) continue;
        nlohmann::json obj;
        try {
            obj = nlohmann::json::parse(trimmed);
        } catch (const nlohmann::json::parse_error& err) {
            throw CorpusError(path.string() + " line " + std::to_string(lineNo) + ": " + err.what());
        }
        if (!obj.is_object()) {
            throw CorpusError(path.string() + " line " + std::to_string(lineNo) +
                              ": expected a JSON object");
        }
        fn(lineNo, obj);
    }
}

std::vector<std::string> relativeFilePaths(const fs::path& dir) {
    std::vector<std::string> out;
    if (!fs::exists(dir)) return out;
    for (const auto& entry : fs::recursive_directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        out.push_back(fs::relative(entry.path(), dir).generic_string());
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

Corpus load_corpus(const fs::path& root) {
    if (!fs::exists(root) || !fs::is_directory(root)) {
        throw CorpusError("unreadable corpus: " + root.string());
    }

    Corpus corpus;

    fs::path bugsFile = root / "bugs.jsonl";
    if (fs::exists(bugsFile)) {
        std::set<std::string> seen;
        forEachJsonLine(bugsFile, [&](int lineNo, const nlohmann::json& obj) {
            BugReport bug;
            bug.bugId = requiredString(obj, "bug_id",
                                       bugsFile.string() + " line " + std::to_string(lineNo));
            bug.shortDesc = optionalString(obj, "short_desc");
            bug.longDesc = optionalString(obj, "long_desc");
            if (!seen.insert(bug.bugId).second) {
                throw CorpusError(bugsFile.string() + " line " + std::to_string(lineNo) +
                                  ": duplicate bug_id " + bug.bugId);
            }
            corpus.bugs.push_back(std::move(bug));
        });
    }

    fs::path commitsDir = root / "commits";
    if (fs::exists(commitsDir)) {
        std::vector<fs::path> commitDirs;
        for (const auto& entry : fs::directory_iterator(commitsDir)) {
            if (entry.is_directory()) commitDirs.push_back(entry.path());
        }
        std::sort(commitDirs.begin(), commitDirs.end());
        for (const auto& dir : commitDirs) {
            CommitRecord commit;
            commit.commitId = dir.filename().string();
            fs::path messageFile = dir / "message.txt";
            if (!fs::exists(messageFile)) {
                throw CorpusError("commit " + commit.commitId + " has no message.txt");
            }
            commit.message = readFile(messageFile);

            fs::path beforeDir = dir / "before";
            fs::path afterDir = dir / "after";
            std::set<std::string> paths;
            for (auto& p : relativeFilePaths(beforeDir)) paths.insert(std::move(p));
            for (auto& p : relativeFilePaths(afterDir)) paths.insert(std::move(p));
            for (const auto& path : paths) {
                ChangedFile file;
                file.path = path;
                if (fs::exists(beforeDir / path)) file.beforeText = readFile(beforeDir / path);
                if (fs::exists(afterDir / path)) file.afterText = readFile(afterDir / path);
                commit.changedFiles.push_back(std::move(file));
            }
            corpus.commits.push_back(std::move(commit));
        }
    }

    fs::path linksFile = root / "links.jsonl";
    if (fs::exists(linksFile)) {
        std::vector<ManifestLink> manifest;
        forEachJsonLine(linksFile, [&](int lineNo, const nlohmann::json& obj) {
            std::string where = linksFile.string() + " line " + std::to_string(lineNo);
            manifest.push_back({requiredString(obj, "bug_id", where),
                                requiredString(obj, "commit_id", where)});
        });
        corpus.manifest = std::move(manifest);
    }

    return corpus;
}

} // namespace crashfix
