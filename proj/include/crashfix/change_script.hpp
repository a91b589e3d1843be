#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "crashfix/ast.hpp"

namespace crashfix {

enum class EditKind { Insert, Delete, Update, Move, Wrap };

const char* edit_kind_name(EditKind kind);

// One positional token substitution inside an Update. Pure insertions carry
// an empty oldText; pure removals an empty newText.
struct TokenEdit {
    std::string oldText;
    std::string newText;
};

struct EditOp {
    EditKind kind = EditKind::Insert;
    int beforeIndex = -1; // Delete/Update/Move; first wrapped index for Wrap
    int afterIndex = -1;  // Insert/Update/Move/Wrap
    StmtPtr beforeStmt;   // Delete/Update(old)/Move
    StmtPtr afterStmt;    // Insert/Update(new)/Move/Wrap(guard)
    std::vector<TokenEdit> tokenDelta;     // Update only
    std::vector<int> wrappedBeforeIndices; // Wrap only
    // A Delete/Insert at the same aligned gap position whose token distance
    // exceeds the Update threshold stays two ops, but the pairing is kept so
    // rules can treat them as one replacement.
    bool pairedReplacement = false;
    int pairedOpIndex = -1;
};

struct ChangeScript {
    SourceUnit beforeUnit;
    SourceUnit afterUnit;
    std::vector<std::pair<int, int>> matches; // aligned (beforeIdx, afterIdx)
    std::vector<EditOp> ops;

    bool empty() const { return ops.empty(); }
};

struct CorruptScriptError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Longest common subsequence over statement fingerprints; ties resolved by
// matching the earliest before-index first.
std::vector<std::pair<int, int>> align_statements(const std::vector<StmtPtr>& before,
                                                  const std::vector<StmtPtr>& after);

ChangeScript extract_change_script(const SourceUnit& beforeUnit, const SourceUnit& afterUnit);
ChangeScript extract_change_script(std::string_view beforeSource, std::string_view afterSource);

// Replays the script against a before-list; the result is fingerprint-equal
// to the after list the script was extracted from. Throws CorruptScriptError
// on inconsistent indices or coverage gaps.
std::vector<StmtPtr> apply_script(const std::vector<StmtPtr>& before, const ChangeScript& script);

} // namespace crashfix
