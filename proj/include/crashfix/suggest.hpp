#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "crashfix/catalog.hpp"

namespace crashfix {

struct CrashSite {
    std::string snippet;
    std::size_t focusBegin = 0; // byte span of the crashing expression
    std::size_t focusEnd = 0;
};

enum class GuardEpilogue { Return, Continue, ReturnNull };

struct Suggestion {
    FixTypeLabel label;
    std::string patchedSnippet;
    std::string rationale;
};

struct InapplicableSiteError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Guard-template instantiation: every returned patch classifies back to its
/// own label as the top match against the original snippet. Ordered by
/// catalog priority. Templates whose guard condition already exists in the
/// snippet are skipped, so suggesting is idempotent.
std::vector<Suggestion> suggest(const CrashSite& site, CrashCategory crash,
                                GuardEpilogue epilogue = GuardEpilogue::Return);

} // namespace crashfix
