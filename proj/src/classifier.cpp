#include "crashfix/classifier.hpp"

namespace crashfix {

const char* verdict_name(VerdictKind verdict) {
    switch (verdict) {
        case VerdictKind::Matched: return "matched";
        case VerdictKind::NoChange: return "no_change";
        case VerdictKind::Unknown: return "unknown";
    }
    return "?";
}

Classification classify(std::string_view beforeSource, std::string_view afterSource,
                        CrashCategory crash, const DetectionContext& ctx) {
    Classification result;
    result.crash = crash;
    result.script = extract_change_script(beforeSource, afterSource);
    if (result.script.empty()) {
        result.verdict = VerdictKind::NoChange;
        return result;
    }
    for (const CatalogEntry* entry : catalog_for(crash)) {
        if (auto evidence = detect(*entry, result.script, ctx)) {
            result.matches.emplace_back(entry->label, std::move(*evidence));
        }
    }
    if (result.matches.empty()) {
        result.verdict = VerdictKind::Unknown;
    } else {
        result.verdict = VerdictKind::Matched;
        result.topLabelId = result.matches.front().first.id;
    }
    return result;
}

Classification classify_pair(const FileRevisionPair& pair, CrashCategory crash,
                             const DetectionContext& ctx) {
    if (!pair.beforeText || !pair.afterText) {
        throw IncompletePairError("incomplete pair: " + pair.link.commitId + ":" + pair.path +
                                  " is missing a revision text");
    }
    return classify(*pair.beforeText, *pair.afterText, crash, ctx);
}

} // namespace crashfix
