#include "crashfix/change_script.hpp"

#include <algorithm>
#include <map>

namespace crashfix {

const char* edit_kind_name(EditKind kind) {
    switch (kind) {
        case EditKind::Insert: return "insert";
        case EditKind::Delete: return "delete";
        case EditKind::Update: return "update";
        case EditKind::Move: return "move";
        case EditKind::Wrap: return "wrap";
    }
    return "?";
}

namespace {

// Generic LCS with earliest-left-index tie-breaking, shared by the statement
// aligner and the token-delta computation.
template <typename Eq>
std::vector<std::pair<int, int>> lcsPairs(std::size_t n, std::size_t m, Eq eq) {
    std::vector<std::vector<int>> dp(n + 1, std::vector<int>(m + 1, 0));
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t j = m; j-- > 0;) {
            if (eq(i, j)) {
                dp[i][j] = dp[i + 1][j + 1] + 1;
            } else {
                dp[i][j] = std::max(dp[i + 1][j], dp[i][j + 1]);
            }
        }
    }
    std::vector<std::pair<int, int>> pairs;
    std::size_t i = 0, j = 0;
    while (i < n && j < m) {
        if (eq(i, j) && dp[i][j] == dp[i + 1][j + 1] + 1) {
            pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
            ++i;
            ++j;
        } else if (dp[i][j + 1] == dp[i][j]) {
            ++j; // keep the current left element available for a later match
        } else {
            ++i;
        }
    }
    return pairs;
}

struct Pending {
    int index = -1; // statement index in its own unit
    int gap = 0;    // which inter-match gap the statement falls into
    bool consumed = false;
};

std::vector<TokenEdit> tokenDeltaBetween(const std::vector<Token>& oldToks,
                                         const std::vector<Token>& newToks) {
    auto matched = lcsPairs(oldToks.size(), newToks.size(), [&](std::size_t i, std::size_t j) {
        return oldToks[i].text == newToks[j].text;
    });
    std::vector<TokenEdit> delta;
    std::size_t oi = 0, ni = 0;
    auto flushGap = [&](std::size_t oEnd, std::size_t nEnd) {
        while (oi < oEnd && ni < nEnd) {
            delta.push_back({oldToks[oi].text, newToks[ni].text});
            ++oi;
            ++ni;
        }
        while (oi < oEnd) delta.push_back({oldToks[oi++].text, ""});
        while (ni < nEnd) delta.push_back({"", newToks[ni++].text});
    };
    for (const auto& [mo, mn] : matched) {
        flushGap(static_cast<std::size_t>(mo), static_cast<std::size_t>(mn));
        oi = static_cast<std::size_t>(mo) + 1;
        ni = static_cast<std::size_t>(mn) + 1;
    }
    flushGap(oldToks.size(), newToks.size());
    return delta;
}

constexpr std::size_t kUpdateTokenThreshold = 3;

} // namespace

std::vector<std::pair<int, int>> align_statements(const std::vector<StmtPtr>& before,
                                                  const std::vector<StmtPtr>& after) {
    return lcsPairs(before.size(), after.size(), [&](std::size_t i, std::size_t j) {
        return before[i]->fingerprint == after[j]->fingerprint;
    });
}

ChangeScript extract_change_script(const SourceUnit& beforeUnit, const SourceUnit& afterUnit) {
    ChangeScript script;
    script.beforeUnit = beforeUnit;
    script.afterUnit = afterUnit;

    const auto& before = beforeUnit.statements;
    const auto& after = afterUnit.statements;
    script.matches = align_statements(before, after);

    std::vector<Pending> deletes;
    std::vector<Pending> inserts;
    {
        std::size_t mi = 0;
        int gap = 0;
        for (int b = 0; b < static_cast<int>(before.size()); ++b) {
            while (mi < script.matches.size() && script.matches[mi].first < b) {
                ++mi;
                ++gap;
            }
            if (mi < script.matches.size() && script.matches[mi].first == b) continue;
            deletes.push_back({b, gap, false});
        }
        mi = 0;
        gap = 0;
        for (int a = 0; a < static_cast<int>(after.size()); ++a) {
            while (mi < script.matches.size() && script.matches[mi].second < a) {
                ++mi;
                ++gap;
            }
            if (mi < script.matches.size() && script.matches[mi].second == a) continue;
            inserts.push_back({a, gap, false});
        }
    }

    struct Draft {
        EditOp op;
        int pairedDraft = -1; // index into drafts, fixed up after sorting
    };
    std::vector<Draft> drafts;

    // Move: a deleted statement reappearing verbatim elsewhere.
    for (auto& del : deletes) {
        for (auto& ins : inserts) {
            if (ins.consumed) continue;
            if (before[del.index]->fingerprint != after[ins.index]->fingerprint) continue;
            del.consumed = true;
            ins.consumed = true;
            EditOp op;
            op.kind = EditKind::Move;
            op.beforeIndex = del.index;
            op.afterIndex = ins.index;
            op.beforeStmt = before[del.index];
            op.afterStmt = after[ins.index];
            drafts.push_back({std::move(op), -1});
            break;
        }
    }

    // Wrap: an inserted guard whose body is exactly a contiguous run of deletes.
    for (auto& ins : inserts) {
        if (ins.consumed) continue;
        const StmtPtr& guard = after[ins.index];
        StmtKind kind = guard->kind();
        if (kind != StmtKind::If && kind != StmtKind::TryCatch) continue;
        std::vector<StmtPtr> body = guard_body_children(*guard);
        if (body.empty()) continue;
        for (std::size_t start = 0; start + body.size() <= deletes.size(); ++start) {
            bool runMatches = true;
            for (std::size_t k = 0; k < body.size(); ++k) {
                const Pending& del = deletes[start + k];
                if (del.consumed || del.index != deletes[start].index + static_cast<int>(k) ||
                    before[del.index]->fingerprint != body[k]->fingerprint) {
                    runMatches = false;
                    break;
                }
            }
            if (!runMatches) continue;
            EditOp op;
            op.kind = EditKind::Wrap;
            op.beforeIndex = deletes[start].index;
            op.afterIndex = ins.index;
            op.afterStmt = guard;
            for (std::size_t k = 0; k < body.size(); ++k) {
                deletes[start + k].consumed = true;
                op.wrappedBeforeIndices.push_back(deletes[start + k].index);
            }
            ins.consumed = true;
            drafts.push_back({std::move(op), -1});
            break;
        }
    }

    // Update / paired replacement: positional delete-insert pairs within a gap.
    for (auto& del : deletes) {
        if (del.consumed) continue;
        for (auto& ins : inserts) {
            if (ins.consumed || ins.gap != del.gap) continue;
            del.consumed = true;
            ins.consumed = true;
            const StmtPtr& oldStmt = before[del.index];
            const StmtPtr& newStmt = after[ins.index];
            auto delta = tokenDeltaBetween(tokenize(oldStmt->normalizedText),
                                           tokenize(newStmt->normalizedText));
            if (delta.size() <= kUpdateTokenThreshold) {
                EditOp op;
                op.kind = EditKind::Update;
                op.beforeIndex = del.index;
                op.afterIndex = ins.index;
                op.beforeStmt = oldStmt;
                op.afterStmt = newStmt;
                op.tokenDelta = std::move(delta);
                drafts.push_back({std::move(op), -1});
            } else {
                EditOp delOp;
                delOp.kind = EditKind::Delete;
                delOp.beforeIndex = del.index;
                delOp.beforeStmt = oldStmt;
                delOp.pairedReplacement = true;
                EditOp insOp;
                insOp.kind = EditKind::Insert;
                insOp.afterIndex = ins.index;
                insOp.afterStmt = newStmt;
                insOp.pairedReplacement = true;
                int delDraft = static_cast<int>(drafts.size());
                drafts.push_back({std::move(delOp), delDraft + 1});
                drafts.push_back({std::move(insOp), delDraft});
            }
            break;
        }
    }

    for (const auto& del : deletes) {
        if (del.consumed) continue;
        EditOp op;
        op.kind = EditKind::Delete;
        op.beforeIndex = del.index;
        op.beforeStmt = before[del.index];
        drafts.push_back({std::move(op), -1});
    }
    for (const auto& ins : inserts) {
        if (ins.consumed) continue;
        EditOp op;
        op.kind = EditKind::Insert;
        op.afterIndex = ins.index;
        op.afterStmt = after[ins.index];
        drafts.push_back({std::move(op), -1});
    }

    // Deterministic positional order: anchor every op to a before-coordinate
    // (inserts anchor to their splice point).
    auto beforeAnchor = [&](const EditOp& op) {
        if (op.beforeIndex >= 0) return op.beforeIndex;
        int anchor = static_cast<int>(before.size());
        for (const auto& [b, a] : script.matches) {
            if (a > op.afterIndex) {
                anchor = std::min(anchor, b);
                break;
            }
        }
        return anchor;
    };
    std::vector<int> order(drafts.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int lhs, int rhs) {
        const EditOp& a = drafts[lhs].op;
        const EditOp& b = drafts[rhs].op;
        int aAnchor = beforeAnchor(a), bAnchor = beforeAnchor(b);
        if (aAnchor != bAnchor) return aAnchor < bAnchor;
        if (a.afterIndex != b.afterIndex) return a.afterIndex < b.afterIndex;
        return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    });
    std::vector<int> finalPos(drafts.size());
    for (std::size_t i = 0; i < order.size(); ++i) finalPos[order[i]] = static_cast<int>(i);
    script.ops.reserve(drafts.size());
    for (int draftIdx : order) {
        EditOp op = std::move(drafts[draftIdx].op);
        if (drafts[draftIdx].pairedDraft >= 0) {
            op.pairedOpIndex = finalPos[drafts[draftIdx].pairedDraft];
        }
        script.ops.push_back(std::move(op));
    }
    return script;
}

ChangeScript extract_change_script(std::string_view beforeSource, std::string_view afterSource) {
    return extract_change_script(parse_statements(beforeSource), parse_statements(afterSource));
}

std::vector<StmtPtr> apply_script(const std::vector<StmtPtr>& before, const ChangeScript& script) {
    std::size_t afterLen = script.matches.size();
    for (const auto& op : script.ops) {
        if (op.kind != EditKind::Delete) ++afterLen;
    }

    std::vector<StmtPtr> result(afterLen);
    std::vector<char> consumed(before.size(), 0);

    auto takeBefore = [&](int idx) {
        if (idx < 0 || idx >= static_cast<int>(before.size()) || consumed[idx]) {
            throw CorruptScriptError("corrupt script: bad before index " + std::to_string(idx));
        }
        consumed[idx] = 1;
        return before[idx];
    };
    auto fillAfter = [&](int idx, StmtPtr stmt) {
        if (idx < 0 || idx >= static_cast<int>(result.size()) || result[idx] || !stmt) {
            throw CorruptScriptError("corrupt script: bad after index " + std::to_string(idx));
        }
        result[idx] = std::move(stmt);
    };

    for (const auto& [b, a] : script.matches) fillAfter(a, takeBefore(b));
    for (const auto& op : script.ops) {
        switch (op.kind) {
            case EditKind::Insert:
                fillAfter(op.afterIndex, op.afterStmt);
                break;
            case EditKind::Delete:
                takeBefore(op.beforeIndex);
                break;
            case EditKind::Update:
                takeBefore(op.beforeIndex);
                fillAfter(op.afterIndex, op.afterStmt);
                break;
            case EditKind::Move:
                fillAfter(op.afterIndex, takeBefore(op.beforeIndex));
                break;
            case EditKind::Wrap:
                for (int w : op.wrappedBeforeIndices) takeBefore(w);
                fillAfter(op.afterIndex, op.afterStmt);
                break;
        }
    }

    for (std::size_t i = 0; i < consumed.size(); ++i) {
        if (!consumed[i]) {
            throw CorruptScriptError("corrupt script: before statement " + std::to_string(i) +
                                     " not accounted for");
        }
    }
    for (std::size_t i = 0; i < result.size(); ++i) {
        if (!result[i]) {
            throw CorruptScriptError("corrupt script: after slot " + std::to_string(i) +
                                     " left empty");
        }
    }
    return result;
}

} // namespace crashfix
