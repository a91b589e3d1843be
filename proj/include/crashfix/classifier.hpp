#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "crashfix/catalog.hpp"
#include "crashfix/corpus.hpp"

namespace crashfix {

enum class VerdictKind { Matched, NoChange, Unknown };
const char* verdict_name(VerdictKind verdict);

struct Classification {
    CrashCategory crash = CrashCategory::NPE;
    std::vector<std::pair<FixTypeLabel, Evidence>> matches; // catalog priority order
    VerdictKind verdict = VerdictKind::NoChange;
    std::string topLabelId; // set iff verdict == Matched
    ChangeScript script;
};

struct IncompletePairError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Classification classify(std::string_view beforeSource, std::string_view afterSource,
                        CrashCategory crash, const DetectionContext& ctx = {});

// Adapter over mining records; throws IncompletePairError when either
// revision text is missing.
Classification classify_pair(const FileRevisionPair& pair, CrashCategory crash,
                             const DetectionContext& ctx = {});

} // namespace crashfix
