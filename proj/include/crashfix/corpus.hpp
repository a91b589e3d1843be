#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "crashfix/catalog.hpp"

namespace crashfix {

struct BugReport {
    std::string bugId;
    std::string shortDesc;
    std::string longDesc;
};

struct ChangedFile {
    std::string path;
    std::optional<std::string> beforeText; // absent for newly added files
    std::string afterText;                 // empty for deleted files
};

struct CommitRecord {
    std::string commitId;
    std::string message;
    std::vector<ChangedFile> changedFiles;
};

struct ManifestLink {
    std::string bugId;
    std::string commitId;
};

struct Corpus {
    std::vector<BugReport> bugs;
    std::vector<CommitRecord> commits;
    std::optional<std::vector<ManifestLink>> manifest;
};

enum class LinkSource { ExplicitManifest, MessageRegex };
const char* link_source_name(LinkSource source);

struct BugFixLink {
    std::string bugId;
    std::string commitId;
    CrashCategory crash = CrashCategory::NPE;
    LinkSource linkSource = LinkSource::MessageRegex;
};

struct FileRevisionPair {
    BugFixLink link;
    std::string path;
    std::optional<std::string> beforeText;
    std::optional<std::string> afterText;
};

struct CorpusError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Reads the on-disk layout:
//   <root>/bugs.jsonl                           {"bug_id","short_desc","long_desc"}
//   <root>/commits/<commitId>/message.txt
//   <root>/commits/<commitId>/before/<path...>  (absent file = added)
//   <root>/commits/<commitId>/after/<path...>
//   <root>/links.jsonl                          optional {"bug_id","commit_id"}
Corpus load_corpus(const std::filesystem::path& root);

} // namespace crashfix
