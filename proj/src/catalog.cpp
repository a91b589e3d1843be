#include "crashfix/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace crashfix {

const char* crash_category_name(CrashCategory category) {
    switch (category) {
        case CrashCategory::NPE: return "NPE";
        case CrashCategory::OOBE: return "OOBE";
        case CrashCategory::CCE: return "CCE";
    }
    return "?";
}

std::optional<CrashCategory> parse_crash_category(std::string_view text) {
    std::string lower;
    lower.reserve(text.size());
    for (char c : text) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (lower == "npe" || lower == "nullpointerexception") return CrashCategory::NPE;
    if (lower == "oobe" || lower == "indexoutofboundsexception" ||
        lower == "arrayindexoutofboundsexception") {
        return CrashCategory::OOBE;
    }
    if (lower == "cce" || lower == "classcastexception") return CrashCategory::CCE;
    return std::nullopt;
}

std::vector<CrashCategory> all_crash_categories() {
    return {CrashCategory::NPE, CrashCategory::OOBE, CrashCategory::CCE};
}

void TypeHierarchy::add(const std::string& sub, const std::string& super) {
    supers_[sub].insert(super);
}

bool TypeHierarchy::is_supertype(const std::string& super, const std::string& sub) const {
    std::set<std::string> seen;
    std::vector<std::string> frontier{sub};
    while (!frontier.empty()) {
        std::string cur = std::move(frontier.back());
        frontier.pop_back();
        auto it = supers_.find(cur);
        if (it == supers_.end()) continue;
        for (const auto& s : it->second) {
            if (s == super) return true;
            if (seen.insert(s).second) frontier.push_back(s);
        }
    }
    return false;
}

TypeHierarchy TypeHierarchy::from_stream(std::istream& in) {
    TypeHierarchy h;
    std::string line;
    int lineNo = 0;
    auto trim = [](std::string s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
        std::size_t i = 0;
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        return s.substr(i);
    };
    while (std::getline(in, line)) {
        ++lineNo;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::size_t tab = t.find('\t');
        if (tab == std::string::npos) {
            throw std::runtime_error("type hierarchy line " + std::to_string(lineNo) +
                                     ": expected sub<TAB>super");
        }
        std::string sub = trim(t.substr(0, tab));
        std::string super = trim(t.substr(tab + 1));
        if (sub.empty() || super.empty()) {
            throw std::runtime_error("type hierarchy line " + std::to_string(lineNo) +
                                     ": empty type name");
        }
        h.add(sub, super);
    }
    return h;
}

TypeHierarchy TypeHierarchy::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open type hierarchy file: " + path);
    return from_stream(in);
}

namespace {

ExprPtr stripParen(ExprPtr e) {
    while (e) {
        const auto* p = e->as<ParenExpr>();
        if (!p) break;
        e = p->inner;
    }
    return e;
}

void collectConjuncts(const ExprPtr& e, std::vector<ExprPtr>& out) {
    ExprPtr s = stripParen(e);
    if (!s) return;
    if (const auto* b = s->as<BinaryExpr>(); b && b->op == "&&") {
        collectConjuncts(b->lhs, out);
        collectConjuncts(b->rhs, out);
        return;
    }
    out.push_back(s);
}

bool isNullLiteral(const ExprPtr& e) {
    const auto* lit = e ? e->as<LiteralExpr>() : nullptr;
    return lit && lit->kind == LiteralKind::Null;
}

bool isLiteralish(const ExprPtr& e) {
    if (!e) return true;
    if (e->kind() == ExprKind::Literal) return true;
    if (const auto* u = e->as<UnaryExpr>()) return isLiteralish(stripParen(u->operand));
    return false;
}

std::optional<long long> intLiteral(const std::string& text) {
    if (text.empty()) return std::nullopt;
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    }
    return std::stoll(text);
}

bool identShaped(const std::string& text) {
    if (text.empty()) return false;
    auto headOk = std::isalpha(static_cast<unsigned char>(text[0])) || text[0] == '_' || text[0] == '$';
    if (!headOk) return false;
    return std::all_of(text.begin(), text.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
    });
}

// The non-null side of an == / != comparison against null, or null.
ExprPtr nullComparedSide(const ExprPtr& conjunct) {
    const auto* b = conjunct ? conjunct->as<BinaryExpr>() : nullptr;
    if (!b || (b->op != "==" && b->op != "!=")) return nullptr;
    ExprPtr l = stripParen(b->lhs), r = stripParen(b->rhs);
    if (isNullLiteral(l)) return r;
    if (isNullLiteral(r)) return l;
    return nullptr;
}

// Inserted or wrapping guard statements. requireUnpaired applies only to
// plain Inserts; Wraps are never part of a replacement pair.
struct GuardOp {
    int opIndex;
    StmtPtr stmt;
};

std::vector<GuardOp> guardOps(const ChangeScript& script, StmtKind wanted, bool requireUnpaired) {
    std::vector<GuardOp> out;
    for (std::size_t i = 0; i < script.ops.size(); ++i) {
        const EditOp& op = script.ops[i];
        bool insert = op.kind == EditKind::Insert && (!requireUnpaired || !op.pairedReplacement);
        if (!insert && op.kind != EditKind::Wrap) continue;
        if (!op.afterStmt || op.afterStmt->kind() != wanted) continue;
        out.push_back({static_cast<int>(i), op.afterStmt});
    }
    return out;
}

ExprPtr ifCond(const StmtPtr& stmt) {
    const auto* node = stmt ? stmt->as<IfNode>() : nullptr;
    return node ? node->cond : nullptr;
}

// One Update, or one Delete/Insert pair recorded as a replacement.
struct Replacement {
    std::vector<int> opIdxs;
    StmtPtr oldStmt;
    StmtPtr newStmt;
    const std::vector<TokenEdit>* delta; // null for paired replacements
};

std::vector<Replacement> replacements(const ChangeScript& script, bool includeUpdates,
                                      bool includePaired) {
    std::vector<Replacement> out;
    for (std::size_t i = 0; i < script.ops.size(); ++i) {
        const EditOp& op = script.ops[i];
        if (op.kind == EditKind::Update && includeUpdates) {
            out.push_back({{static_cast<int>(i)}, op.beforeStmt, op.afterStmt, &op.tokenDelta});
        } else if (op.kind == EditKind::Delete && op.pairedReplacement && includePaired &&
                   op.pairedOpIndex >= 0 &&
                   op.pairedOpIndex < static_cast<int>(script.ops.size())) {
            const EditOp& ins = script.ops[op.pairedOpIndex];
            out.push_back(
                {{static_cast<int>(i), op.pairedOpIndex}, op.beforeStmt, ins.afterStmt, nullptr});
        }
    }
    return out;
}

std::vector<ExprPtr> exprsOf(const StmtPtr& stmt) {
    std::vector<ExprPtr> out;
    visit_exprs(stmt, [&](const ExprPtr& e) { out.push_back(e); });
    return out;
}

bool usedOutside(const SourceUnit& unit, const std::string& rendered, const Span& exclude) {
    bool found = false;
    visit_exprs(unit, [&](const ExprPtr& e) {
        if (found || exclude.contains(e->span)) return;
        if (render_expr(e) == rendered) found = true;
    });
    return found;
}

bool isDereferenced(const SourceUnit& unit, const std::string& rendered) {
    bool found = false;
    visit_exprs(unit, [&](const ExprPtr& e) {
        if (found) return;
        if (const auto* m = e->as<MethodCallExpr>(); m && m->receiver &&
            render_expr(m->receiver) == rendered) {
            found = true;
        } else if (const auto* f = e->as<FieldAccessExpr>(); f &&
                   render_expr(f->receiver) == rendered) {
            found = true;
        } else if (const auto* a = e->as<ArrayAccessExpr>(); a &&
                   render_expr(a->array) == rendered) {
            found = true;
        }
    });
    return found;
}

bool isNullCompared(const SourceUnit& unit, const std::string& rendered) {
    bool found = false;
    visit_exprs(unit, [&](const ExprPtr& e) {
        if (found) return;
        ExprPtr side = nullComparedSide(stripParen(e));
        if (side && render_expr(side) == rendered) found = true;
    });
    return found;
}

// `a < b` bounds a from above and b from below; mirrored for > / >=.
struct BoundReading {
    bool lower;
    ExprPtr expr;
};

std::vector<BoundReading> boundReadings(const ExprPtr& cmp) {
    std::vector<BoundReading> out;
    const auto* b = cmp ? cmp->as<BinaryExpr>() : nullptr;
    if (!b) return out;
    ExprPtr l = stripParen(b->lhs), r = stripParen(b->rhs);
    if (b->op == "<" || b->op == "<=") {
        out.push_back({false, l});
        out.push_back({true, r});
    } else if (b->op == ">" || b->op == ">=") {
        out.push_back({true, l});
        out.push_back({false, r});
    }
    return out;
}

bool isIntValue(const ExprPtr& e, long long want) {
    ExprPtr s = stripParen(e);
    if (!s) return false;
    if (const auto* u = s->as<UnaryExpr>(); u && u->op == "-") {
        const auto* lit = stripParen(u->operand) ? stripParen(u->operand)->as<LiteralExpr>() : nullptr;
        if (!lit || lit->kind != LiteralKind::Int) return false;
        auto v = intLiteral(lit->text);
        return v && -*v == want;
    }
    const auto* lit = s->as<LiteralExpr>();
    if (!lit || lit->kind != LiteralKind::Int) return false;
    auto v = intLiteral(lit->text);
    return v && *v == want;
}

// Exactly `x >= 0`, `x > -1`, `0 <= x`, or `-1 < x`.
ExprPtr strictZeroLowerBound(const ExprPtr& cond) {
    ExprPtr c = stripParen(cond);
    const auto* b = c ? c->as<BinaryExpr>() : nullptr;
    if (!b) return nullptr;
    if (b->op == ">=" && isIntValue(b->rhs, 0)) return stripParen(b->lhs);
    if (b->op == ">" && isIntValue(b->rhs, -1)) return stripParen(b->lhs);
    if (b->op == "<=" && isIntValue(b->lhs, 0)) return stripParen(b->rhs);
    if (b->op == "<" && isIntValue(b->lhs, -1)) return stripParen(b->rhs);
    return nullptr;
}

ExprPtr upperBoundedSide(const ExprPtr& cond) {
    ExprPtr c = stripParen(cond);
    const auto* b = c ? c->as<BinaryExpr>() : nullptr;
    if (!b) return nullptr;
    if (b->op == "<" || b->op == "<=") return stripParen(b->lhs);
    if (b->op == ">" || b->op == ">=") return stripParen(b->rhs);
    return nullptr;
}

std::vector<ExprPtr> castsOf(const StmtPtr& stmt) {
    std::vector<ExprPtr> out;
    visit_exprs(stmt, [&](const ExprPtr& e) {
        if (e->kind() == ExprKind::Cast) out.push_back(e);
    });
    return out;
}

bool containsCastOfType(const StmtPtr& stmt, const std::string& typeName) {
    for (const auto& c : castsOf(stmt)) {
        if (c->as<CastExpr>()->typeName == typeName) return true;
    }
    return false;
}

ExprPtr findInstanceOf(const ExprPtr& root) {
    ExprPtr found;
    visit_exprs(root, [&](const ExprPtr& e) {
        if (!found && e->kind() == ExprKind::InstanceOf) found = e;
    });
    return found;
}

bool isLoopVariable(const SourceUnit& unit, const std::string& name) {
    bool found = false;
    auto targetsName = [&](const ExprPtr& e) {
        const auto* a = stripParen(e) ? stripParen(e)->as<AssignExpr>() : nullptr;
        if (!a) return false;
        const auto* n = stripParen(a->target) ? stripParen(a->target)->as<NameExpr>() : nullptr;
        return n && n->id == name;
    };
    for (const auto& top : unit.statements) {
        visit_statements(top, [&](const StmtPtr& s) {
            if (found) return;
            const auto* f = s->as<ForNode>();
            if (!f) return;
            if (f->init) {
                if (const auto* vd = f->init->as<VarDeclNode>(); vd && vd->name == name) found = true;
                if (const auto* es = f->init->as<ExprStmtNode>(); es && targetsName(es->expr)) found = true;
            }
            if (f->update && targetsName(f->update)) found = true;
        });
    }
    return found;
}

Evidence makeEvidence(std::vector<int> ops, std::string narrative, std::vector<Span> spans) {
    Evidence ev;
    ev.matchedOps = std::move(ops);
    ev.narrative = std::move(narrative);
    ev.spans = std::move(spans);
    return ev;
}

using Rule = std::function<std::optional<Evidence>(const ChangeScript&, const DetectionContext&)>;

// ---- NPE rules ----

std::optional<Evidence> ruleNullChecker(const ChangeScript& s, const DetectionContext&) {
    for (const auto& g : guardOps(s, StmtKind::If, /*requireUnpaired=*/true)) {
        ExprPtr cond = ifCond(g.stmt);
        std::vector<ExprPtr> conjs;
        collectConjuncts(cond, conjs);
        for (const auto& c : conjs) {
            ExprPtr side = nullComparedSide(c);
            if (!side) continue;
            std::string rendered = render_expr(side);
            bool isWrap = s.ops[g.opIndex].kind == EditKind::Wrap;
            Span exclude = isWrap ? cond->span : g.stmt->span;
            if (!usedOutside(s.afterUnit, rendered, exclude)) continue;
            return makeEvidence({g.opIndex}, "adds a null guard on " + rendered, {cond->span});
        }
    }
    return std::nullopt;
}

std::optional<Evidence> ruleChangeSequence(const ChangeScript& s, const DetectionContext&) {
    std::vector<int> moves;
    std::vector<Span> spans;
    for (std::size_t i = 0; i < s.ops.size(); ++i) {
        switch (s.ops[i].kind) {
            case EditKind::Move:
                moves.push_back(static_cast<int>(i));
                spans.push_back(s.ops[i].afterStmt->span);
                break;
            case EditKind::Insert:
            case EditKind::Delete:
            case EditKind::Wrap:
                return std::nullopt;
            case EditKind::Update:
                break;
        }
    }
    if (moves.empty()) return std::nullopt;
    return makeEvidence(std::move(moves), "reorders statements without adding or removing any",
                        std::move(spans));
}

std::optional<Evidence> ruleInitializeObject(const ChangeScript& s, const DetectionContext&) {
    auto newlyConstructedNames = [&](const StmtPtr& stmt) {
        std::vector<std::string> names;
        visit_exprs(stmt, [&](const ExprPtr& e) {
            const auto* a = e->as<AssignExpr>();
            if (!a) return;
            const auto* n = stripParen(a->target) ? stripParen(a->target)->as<NameExpr>() : nullptr;
            if (n && stripParen(a->value) && stripParen(a->value)->kind() == ExprKind::New) {
                names.push_back(n->id);
            }
        });
        visit_statements(stmt, [&](const StmtPtr& st) {
            const auto* vd = st->as<VarDeclNode>();
            if (vd && vd->init && stripParen(vd->init) &&
                stripParen(vd->init)->kind() == ExprKind::New) {
                names.push_back(vd->name);
            }
        });
        return names;
    };
    auto check = [&](const StmtPtr& stmt, std::vector<int> ops) -> std::optional<Evidence> {
        for (const auto& name : newlyConstructedNames(stmt)) {
            if (isNullCompared(s.afterUnit, name) || isDereferenced(s.afterUnit, name)) {
                return makeEvidence(std::move(ops), "initializes " + name + " with a new object",
                                    {stmt->span});
            }
        }
        return std::nullopt;
    };
    for (const auto& r : replacements(s, true, true)) {
        if (auto ev = check(r.newStmt, r.opIdxs)) return ev;
    }
    for (std::size_t i = 0; i < s.ops.size(); ++i) {
        const EditOp& op = s.ops[i];
        if (op.kind != EditKind::Insert || op.pairedReplacement) continue;
        if (auto ev = check(op.afterStmt, {static_cast<int>(i)})) return ev;
    }
    return std::nullopt;
}

std::optional<Evidence> ruleUseIsEmpty(const ChangeScript& s, const DetectionContext&) {
    auto condCallsIsEmpty = [&](const ExprPtr& cond) {
        bool found = false;
        visit_exprs(cond, [&](const ExprPtr& e) {
            const auto* m = e->as<MethodCallExpr>();
            if (m && m->name == "isEmpty") found = true;
        });
        return found;
    };
    for (std::size_t i = 0; i < s.ops.size(); ++i) {
        const EditOp& op = s.ops[i];
        bool insert = op.kind == EditKind::Insert && !op.pairedReplacement;
        if (!insert && op.kind != EditKind::Wrap) continue;
        if (!op.afterStmt) continue;
        ExprPtr cond;
        if (const auto* f = op.afterStmt->as<IfNode>()) cond = f->cond;
        if (const auto* w = op.afterStmt->as<WhileNode>()) cond = w->cond;
        if (cond && condCallsIsEmpty(cond)) {
            return makeEvidence({static_cast<int>(i)}, "guards with an isEmpty() check",
                                {cond->span});
        }
    }
    return std::nullopt;
}

std::optional<Evidence> ruleUseClear(const ChangeScript& s, const DetectionContext&) {
    for (const auto& r : replacements(s, true, true)) {
        std::string nulledName;
        visit_exprs(r.oldStmt, [&](const ExprPtr& e) {
            const auto* a = e->as<AssignExpr>();
            if (a && isNullLiteral(stripParen(a->value)) && nulledName.empty()) {
                nulledName = render_expr(stripParen(a->target));
            }
        });
        if (nulledName.empty()) continue;
        bool clearsIt = false;
        visit_exprs(r.newStmt, [&](const ExprPtr& e) {
            const auto* m = e->as<MethodCallExpr>();
            if (m && m->name == "clear" && m->receiver &&
                render_expr(m->receiver) == nulledName) {
                clearsIt = true;
            }
        });
        if (clearsIt) {
            return makeEvidence(r.opIdxs,
                                "replaces a null assignment with " + nulledName + ".clear()",
                                {r.newStmt->span});
        }
    }
    return std::nullopt;
}

// ---- OOBE rules ----

std::optional<Evidence> ruleCheckRange(const ChangeScript& s, const DetectionContext&) {
    for (const auto& g : guardOps(s, StmtKind::If, true)) {
        ExprPtr cond = ifCond(g.stmt);
        std::vector<ExprPtr> conjs;
        collectConjuncts(cond, conjs);
        std::map<std::string, std::pair<bool, bool>> bounds; // rendered -> (lower, upper)
        for (const auto& c : conjs) {
            for (const auto& reading : boundReadings(c)) {
                if (isLiteralish(reading.expr)) continue;
                auto& entry = bounds[render_expr(reading.expr)];
                (reading.lower ? entry.first : entry.second) = true;
            }
        }
        for (const auto& [rendered, lu] : bounds) {
            if (lu.first && lu.second) {
                return makeEvidence({g.opIndex},
                                    "guards " + rendered + " with lower and upper bounds",
                                    {cond->span});
            }
        }
    }
    return std::nullopt;
}

std::optional<Evidence> ruleCheckArrayLength(const ChangeScript& s, const DetectionContext&) {
    auto touchesLength = [](const ExprPtr& e) {
        bool found = false;
        visit_exprs(e, [&](const ExprPtr& sub) {
            const auto* f = sub->as<FieldAccessExpr>();
            if (f && f->field == "length") found = true;
        });
        return found;
    };
    for (const auto& g : guardOps(s, StmtKind::If, true)) {
        ExprPtr cond = ifCond(g.stmt);
        bool found = false;
        visit_exprs(cond, [&](const ExprPtr& e) {
            const auto* b = e->as<BinaryExpr>();
            if (!b || found) return;
            static const std::set<std::string> cmps = {"<", "<=", ">", ">=", "==", "!="};
            if (!cmps.count(b->op)) return;
            if (touchesLength(b->lhs) || touchesLength(b->rhs)) found = true;
        });
        if (found) {
            return makeEvidence({g.opIndex}, "guards on an array length bound", {cond->span});
        }
    }
    return std::nullopt;
}

std::optional<Evidence> ruleFixOffByOne(const ChangeScript& s, const DetectionContext&) {
    auto relopSwap = [](const std::string& a, const std::string& b) {
        return (a == "<" && b == "<=") || (a == "<=" && b == "<") ||
               (a == ">" && b == ">=") || (a == ">=" && b == ">");
    };
    for (std::size_t i = 0; i < s.ops.size(); ++i) {
        const EditOp& op = s.ops[i];
        if (op.kind != EditKind::Update) continue;
        for (const auto& edit : op.tokenDelta) {
            auto oldVal = intLiteral(edit.oldText);
            auto newVal = intLiteral(edit.newText);
            bool offByOne = oldVal && newVal && std::llabs(*oldVal - *newVal) == 1;
            if (offByOne || relopSwap(edit.oldText, edit.newText)) {
                return makeEvidence({static_cast<int>(i)},
                                    "adjusts " + edit.oldText + " to " + edit.newText,
                                    {op.afterStmt->span});
            }
        }
    }
    return std::nullopt;
}

bool arrayIndexUsesName(const StmtPtr& stmt, const std::string& name) {
    bool found = false;
    visit_exprs(stmt, [&](const ExprPtr& e) {
        const auto* a = e->as<ArrayAccessExpr>();
        if (!a || found) return;
        visit_exprs(a->index, [&](const ExprPtr& sub) {
            const auto* n = sub->as<NameExpr>();
            if (n && n->id == name) found = true;
        });
    });
    return found;
}

std::optional<Evidence> ruleUseCorrectIncrement(const ChangeScript& s, const DetectionContext&) {
    for (std::size_t i = 0; i < s.ops.size(); ++i) {
        const EditOp& op = s.ops[i];
        if (op.kind != EditKind::Update || op.tokenDelta.size() != 1) continue;
        const TokenEdit& edit = op.tokenDelta.front();
        if (!identShaped(edit.oldText) || !identShaped(edit.newText)) continue;
        if (!arrayIndexUsesName(op.beforeStmt, edit.oldText)) continue;
        if (!arrayIndexUsesName(op.afterStmt, edit.newText)) continue;
        if (!isLoopVariable(s.afterUnit, edit.newText)) continue;
        return makeEvidence({static_cast<int>(i)},
                            "switches index " + edit.oldText + " to loop variable " + edit.newText,
                            {op.afterStmt->span});
    }
    return std::nullopt;
}

std::optional<Evidence> ruleAddTryCatch(const ChangeScript& s, const DetectionContext&) {
    for (std::size_t i = 0; i < s.ops.size(); ++i) {
        const EditOp& op = s.ops[i];
        if (op.kind != EditKind::Insert && op.kind != EditKind::Wrap) continue;
        if (!op.afterStmt) continue;
        const auto* t = op.afterStmt->as<TryCatchNode>();
        if (!t || t->catchType.find("OutOfBounds") == std::string::npos) continue;
        return makeEvidence({static_cast<int>(i)}, "wraps the access in try/catch " + t->catchType,
                            {op.afterStmt->span});
    }
    return std::nullopt;
}

std::optional<Evidence> ruleSetLowerBound(const ChangeScript& s, const DetectionContext&) {
    for (const auto& g : guardOps(s, StmtKind::If, true)) {
        ExprPtr cond = ifCond(g.stmt);
        ExprPtr bounded = strictZeroLowerBound(cond);
        if (!bounded || isLiteralish(bounded)) continue;
        std::string rendered = render_expr(bounded);
        if (!usedOutside(s.afterUnit, rendered, cond->span)) continue;
        return makeEvidence({g.opIndex}, "guards " + rendered + " with a lower bound check",
                            {cond->span});
    }
    return std::nullopt;
}

std::optional<Evidence> ruleUseCorrectArgument(const ChangeScript& s, const DetectionContext& ctx) {
    if (ruleUseCorrectIncrement(s, ctx)) return std::nullopt;
    auto callsOf = [](const StmtPtr& stmt) {
        std::vector<ExprPtr> out;
        visit_exprs(stmt, [&](const ExprPtr& e) {
            if (e->kind() == ExprKind::MethodCall) out.push_back(e);
        });
        return out;
    };
    for (std::size_t i = 0; i < s.ops.size(); ++i) {
        const EditOp& op = s.ops[i];
        if (op.kind != EditKind::Update) continue;
        auto oldCalls = callsOf(op.beforeStmt);
        auto newCalls = callsOf(op.afterStmt);
        if (oldCalls.size() != newCalls.size()) continue;
        for (std::size_t c = 0; c < oldCalls.size(); ++c) {
            const auto* oc = oldCalls[c]->as<MethodCallExpr>();
            const auto* nc = newCalls[c]->as<MethodCallExpr>();
            if (oc->name != nc->name || oc->args.size() != nc->args.size()) continue;
            if (render_expr(oc->receiver) != render_expr(nc->receiver)) continue;
            int differing = 0;
            for (std::size_t a = 0; a < oc->args.size(); ++a) {
                if (render_expr(oc->args[a]) != render_expr(nc->args[a])) ++differing;
            }
            if (differing == 1) {
                return makeEvidence({static_cast<int>(i)},
                                    "changes one argument of " + nc->name + "()",
                                    {newCalls[c]->span});
            }
        }
    }
    return std::nullopt;
}

std::optional<Evidence> ruleSetUpperBound(const ChangeScript& s, const DetectionContext&) {
    auto minCalls = [](const StmtPtr& stmt) {
        std::vector<ExprPtr> out;
        visit_exprs(stmt, [&](const ExprPtr& e) {
            const auto* m = e->as<MethodCallExpr>();
            if (m && m->name == "min") out.push_back(e);
        });
        return out;
    };
    for (const auto& r : replacements(s, true, true)) {
        if (!minCalls(r.oldStmt).empty()) continue;
        auto calls = minCalls(r.newStmt);
        if (calls.empty()) continue;
        std::set<std::string> oldRendered;
        for (const auto& e : exprsOf(r.oldStmt)) oldRendered.insert(render_expr(e));
        for (const auto& call : calls) {
            for (const auto& arg : call->as<MethodCallExpr>()->args) {
                if (oldRendered.count(render_expr(stripParen(arg)))) {
                    return makeEvidence(r.opIdxs, "caps a value with min()", {call->span});
                }
            }
        }
    }
    for (const auto& g : guardOps(s, StmtKind::If, true)) {
        ExprPtr cond = ifCond(g.stmt);
        if (strictZeroLowerBound(cond)) continue;
        ExprPtr bounded = upperBoundedSide(cond);
        if (!bounded || isLiteralish(bounded)) continue;
        return makeEvidence({g.opIndex},
                            "guards " + render_expr(bounded) + " with an upper bound check",
                            {cond->span});
    }
    return std::nullopt;
}

// ---- CCE rules ----

struct InstanceGuard {
    int opIndex;
    StmtPtr stmt;
    ExprPtr cond;
    const InstanceOfExpr* test;
};

std::vector<InstanceGuard> instanceGuards(const ChangeScript& s) {
    std::vector<InstanceGuard> out;
    for (std::size_t i = 0; i < s.ops.size(); ++i) {
        const EditOp& op = s.ops[i];
        if (op.kind != EditKind::Insert && op.kind != EditKind::Wrap) continue;
        if (!op.afterStmt || op.afterStmt->kind() != StmtKind::If) continue;
        ExprPtr cond = ifCond(op.afterStmt);
        ExprPtr test = findInstanceOf(cond);
        if (!test) continue;
        out.push_back({static_cast<int>(i), op.afterStmt, cond, test->as<InstanceOfExpr>()});
    }
    return out;
}

std::optional<Evidence> ruleLazyCast(const ChangeScript& s, const DetectionContext&) {
    for (const auto& g : instanceGuards(s)) {
        const std::string& type = g.test->typeName;
        if (!containsCastOfType(g.stmt, type)) continue;
        for (std::size_t i = 0; i < s.ops.size(); ++i) {
            const EditOp& op = s.ops[i];
            bool oldSide = op.kind == EditKind::Delete ||
                           (op.kind == EditKind::Update && op.beforeStmt);
            if (!oldSide || !containsCastOfType(op.beforeStmt, type)) continue;
            return makeEvidence({g.opIndex, static_cast<int>(i)},
                                "moves the " + type + " cast behind an instanceof check",
                                {g.stmt->span});
        }
    }
    return std::nullopt;
}

std::optional<Evidence> ruleUseInstanceChecker(const ChangeScript& s, const DetectionContext&) {
    for (const auto& g : instanceGuards(s)) {
        const std::string& type = g.test->typeName;
        std::string operand = render_expr(stripParen(g.test->operand));
        bool castInContext = false;
        visit_exprs(s.afterUnit, [&](const ExprPtr& e) {
            const auto* c = e->as<CastExpr>();
            if (!c || castInContext) return;
            if (c->typeName == type || render_expr(stripParen(c->operand)) == operand) {
                castInContext = true;
            }
        });
        if (!castInContext) continue;
        return makeEvidence({g.opIndex},
                            "checks " + operand + " instanceof " + type + " before casting",
                            {g.cond->span});
    }
    return std::nullopt;
}

// Positional pairing of the casts on each side of an Update.
struct CastPair {
    const CastExpr* oldCast;
    const CastExpr* newCast;
    Span newSpan;
};

std::vector<CastPair> castPairs(const EditOp& op) {
    std::vector<CastPair> out;
    auto olds = castsOf(op.beforeStmt);
    auto news = castsOf(op.afterStmt);
    for (std::size_t i = 0; i < std::min(olds.size(), news.size()); ++i) {
        out.push_back({olds[i]->as<CastExpr>(), news[i]->as<CastExpr>(), news[i]->span});
    }
    return out;
}

std::optional<Evidence> ruleUseSuperType(const ChangeScript& s, const DetectionContext& ctx) {
    if (!ctx.hierarchy || ctx.hierarchy->empty()) return std::nullopt;
    for (std::size_t i = 0; i < s.ops.size(); ++i) {
        const EditOp& op = s.ops[i];
        if (op.kind != EditKind::Update) continue;
        for (const auto& pair : castPairs(op)) {
            if (pair.oldCast->typeName == pair.newCast->typeName) continue;
            if (render_expr(stripParen(pair.oldCast->operand)) !=
                render_expr(stripParen(pair.newCast->operand))) {
                continue;
            }
            if (!ctx.hierarchy->is_supertype(pair.newCast->typeName, pair.oldCast->typeName))
                continue;
            return makeEvidence({static_cast<int>(i)},
                                "widens the cast from " + pair.oldCast->typeName +
                                    " to supertype " + pair.newCast->typeName,
                                {pair.newSpan});
        }
    }
    return std::nullopt;
}

std::optional<Evidence> ruleUseCorrectCaster(const ChangeScript& s, const DetectionContext&) {
    for (std::size_t i = 0; i < s.ops.size(); ++i) {
        const EditOp& op = s.ops[i];
        if (op.kind != EditKind::Update) continue;
        for (const auto& pair : castPairs(op)) {
            if (pair.oldCast->typeName == pair.newCast->typeName) continue;
            if (render_expr(stripParen(pair.oldCast->operand)) !=
                render_expr(stripParen(pair.newCast->operand))) {
                continue;
            }
            return makeEvidence({static_cast<int>(i)},
                                "changes the cast type from " + pair.oldCast->typeName + " to " +
                                    pair.newCast->typeName,
                                {pair.newSpan});
        }
    }
    return std::nullopt;
}

std::optional<Evidence> ruleUseCorrectCastee(const ChangeScript& s, const DetectionContext&) {
    for (std::size_t i = 0; i < s.ops.size(); ++i) {
        const EditOp& op = s.ops[i];
        if (op.kind != EditKind::Update) continue;
        for (const auto& pair : castPairs(op)) {
            if (pair.oldCast->typeName != pair.newCast->typeName) continue;
            std::string oldOperand = render_expr(stripParen(pair.oldCast->operand));
            std::string newOperand = render_expr(stripParen(pair.newCast->operand));
            if (oldOperand == newOperand) continue;
            return makeEvidence({static_cast<int>(i)},
                                "changes the cast operand from " + oldOperand + " to " + newOperand,
                                {pair.newSpan});
        }
    }
    return std::nullopt;
}

std::optional<Evidence> ruleTypeChecking(const ChangeScript& s, const DetectionContext&) {
    for (const auto& g : guardOps(s, StmtKind::If, false)) {
        ExprPtr cond = ifCond(g.stmt);
        bool found = false;
        visit_exprs(cond, [&](const ExprPtr& e) {
            if (found) return;
            if (const auto* m = e->as<MethodCallExpr>(); m && m->name == "getClass") {
                found = true;
                return;
            }
            const auto* b = e->as<BinaryExpr>();
            if (!b || (b->op != "==" && b->op != "!=")) return;
            auto hasClassField = [](const ExprPtr& side) {
                bool hit = false;
                visit_exprs(side, [&](const ExprPtr& sub) {
                    const auto* f = sub->as<FieldAccessExpr>();
                    if (f && f->field == "class") hit = true;
                });
                return hit;
            };
            if (hasClassField(b->lhs) || hasClassField(b->rhs)) found = true;
        });
        if (found) {
            return makeEvidence({g.opIndex}, "guards with a runtime type check", {cond->span});
        }
    }
    return std::nullopt;
}

std::vector<CatalogEntry> buildCatalog() {
    auto entry = [](std::string id, CrashCategory cat, std::string name, int priority,
                    std::string ref, Rule rule) {
        CatalogEntry e;
        e.label = {std::move(id), cat, std::move(name)};
        e.priority = priority;
        e.exampleRef = std::move(ref);
        e.rule = std::move(rule);
        return e;
    };
    std::vector<CatalogEntry> entries;
    entries.push_back(entry("null_checker", CrashCategory::NPE, "Null Checker", 1, "A.1.1",
                            ruleNullChecker));
    entries.push_back(entry("change_sequence", CrashCategory::NPE, "Change Sequence", 2, "A.1.2",
                            ruleChangeSequence));
    entries.push_back(entry("initialize_object", CrashCategory::NPE, "Initialize Object", 3,
                            "A.1.3, A.1.5", ruleInitializeObject));
    entries.push_back(entry("use_is_empty", CrashCategory::NPE, "Use isEmpty()", 4, "A.1.4",
                            ruleUseIsEmpty));
    entries.push_back(entry("use_clear", CrashCategory::NPE, "Use clear()", 5, "A.1.6",
                            ruleUseClear));
    entries.push_back(entry("check_range", CrashCategory::OOBE, "Check Range", 1, "A.2.2",
                            ruleCheckRange));
    entries.push_back(entry("check_array_length", CrashCategory::OOBE, "Check Array Length", 2,
                            "A.2.1", ruleCheckArrayLength));
    entries.push_back(entry("fix_off_by_one", CrashCategory::OOBE, "Fix Off-by-one Error", 3,
                            "A.2.3", ruleFixOffByOne));
    entries.push_back(entry("use_correct_increment", CrashCategory::OOBE, "Use Correct Increment",
                            4, "A.2.5", ruleUseCorrectIncrement));
    entries.push_back(entry("add_try_catch", CrashCategory::OOBE, "Add Try-Catch Block", 5,
                            "A.2.4", ruleAddTryCatch));
    entries.push_back(entry("set_lower_bound", CrashCategory::OOBE, "Set Lower Bound", 6, "A.2.6",
                            ruleSetLowerBound));
    entries.push_back(entry("use_correct_argument", CrashCategory::OOBE, "Use Correct Argument", 7,
                            "A.2.7", ruleUseCorrectArgument));
    entries.push_back(entry("set_upper_bound", CrashCategory::OOBE, "Set Upper Bound", 8, "A.2.8",
                            ruleSetUpperBound));
    entries.push_back(entry("lazy_cast", CrashCategory::CCE, "Lazy Cast", 1, "A.3.2",
                            ruleLazyCast));
    entries.push_back(entry("use_instance_checker", CrashCategory::CCE, "Use Instance Checker", 2,
                            "A.3.1", ruleUseInstanceChecker));
    entries.push_back(entry("use_super_type", CrashCategory::CCE, "Use Super Type", 3, "-",
                            ruleUseSuperType));
    entries.push_back(entry("use_correct_caster", CrashCategory::CCE, "Use Correct Caster", 4,
                            "A.3.4", ruleUseCorrectCaster));
    entries.push_back(entry("use_correct_castee", CrashCategory::CCE, "Use Correct Castee", 5,
                            "A.3.3", ruleUseCorrectCastee));
    entries.push_back(entry("type_checking", CrashCategory::CCE, "Type Checking", 6, "-",
                            ruleTypeChecking));
    return entries;
}

} // namespace

const std::vector<CatalogEntry>& full_catalog() {
    static const std::vector<CatalogEntry> catalog = buildCatalog();
    return catalog;
}

std::vector<const CatalogEntry*> catalog_for(CrashCategory category) {
    std::vector<const CatalogEntry*> out;
    for (const auto& entry : full_catalog()) {
        if (entry.label.category == category) out.push_back(&entry);
    }
    std::sort(out.begin(), out.end(), [](const CatalogEntry* a, const CatalogEntry* b) {
        return a->priority < b->priority;
    });
    return out;
}

const CatalogEntry* catalog_entry(std::string_view id) {
    for (const auto& entry : full_catalog()) {
        if (entry.label.id == id) return &entry;
    }
    return nullptr;
}

std::optional<Evidence> detect(const CatalogEntry& entry, const ChangeScript& script,
                               const DetectionContext& ctx) {
    return entry.rule(script, ctx);
}

} // namespace crashfix
