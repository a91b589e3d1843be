#include "crashfix/suggest.hpp"

#include <cctype>
#include <sstream>

#include "crashfix/ast.hpp"
#include "crashfix/classifier.hpp"

namespace crashfix {

namespace {

bool isIdentLike(const std::string& tok) {
    if (tok.empty()) return false;
    char c = tok[0];
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
           std::isdigit(static_cast<unsigned char>(c)) || c == '"';
}

// Natural spacing for canonical (single-space-separated) expression text.
std::string compactJoin(const std::string& rendered) {
    std::istringstream in(rendered);
    std::string tok;
    std::string out;
    std::string prev;
    while (in >> tok) {
        bool sep = !out.empty();
        if (tok == "." || tok == "," || tok == ")" || tok == "]" || tok == ";") sep = false;
        else if (prev == "." || prev == "(" || prev == "[" || prev == "!") sep = false;
        else if ((tok == "(" || tok == "[") && prev != "new" &&
                 (isIdentLike(prev) || prev == ")" || prev == "]"))
            sep = false;
        if (sep) out += ' ';
        out += tok;
        prev = tok;
    }
    return out;
}

struct FocusInfo {
    SourceUnit unit;
    ExprPtr focus;
    StmtPtr stmt; // top-level statement containing the focus
};

FocusInfo locateFocus(const CrashSite& site) {
    FocusInfo info;
    info.unit = parse_statements(site.snippet);
    std::size_t begin = site.focusBegin;
    std::size_t end = std::min(site.focusEnd, site.snippet.size());
    while (begin < end && std::isspace(static_cast<unsigned char>(site.snippet[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(site.snippet[end - 1]))) --end;
    if (begin >= end) throw InapplicableSiteError("inapplicable site: empty focus span");
    for (const auto& stmt : info.unit.statements) {
        if (stmt->span.begin > begin || stmt->span.end < end) continue;
        visit_exprs(stmt, [&](const ExprPtr& expr) {
            if (!info.focus && expr->span.begin == begin && expr->span.end == end) {
                info.focus = expr;
            }
        });
        if (info.focus) {
            info.stmt = stmt;
            break;
        }
    }
    if (!info.focus) {
        throw InapplicableSiteError(
            "inapplicable site: focus span does not match a parsed expression");
    }
    return info;
}

bool hasGuardCondition(const SourceUnit& unit, const std::string& canonicalCond) {
    bool found = false;
    for (const auto& top : unit.statements) {
        visit_statements(top, [&](const StmtPtr& stmt) {
            if (const auto* node = stmt->as<IfNode>()) {
                if (render_expr(node->cond) == canonicalCond) found = true;
            }
        });
    }
    return found;
}

std::string epilogueText(GuardEpilogue epilogue) {
    switch (epilogue) {
    case GuardEpilogue::Continue: return "continue;";
    case GuardEpilogue::ReturnNull: return "return null;";
    default: return "return;";
    }
}

std::string insertBefore(const CrashSite& site, const Statement& stmt,
                         const std::string& guardLine) {
    const std::string& text = site.snippet;
    std::size_t lineStart = stmt.span.begin;
    while (lineStart > 0 && text[lineStart - 1] != '\n') --lineStart;
    std::size_t indentEnd = lineStart;
    while (indentEnd < stmt.span.begin &&
           (text[indentEnd] == ' ' || text[indentEnd] == '\t'))
        ++indentEnd;
    std::string indent = text.substr(lineStart, indentEnd - lineStart);
    return text.substr(0, lineStart) + indent + guardLine + "\n" + text.substr(lineStart);
}

std::string wrapWith(const CrashSite& site, const Statement& stmt, const std::string& head,
                     const std::string& tail) {
    const std::string& text = site.snippet;
    std::string slice = text.substr(stmt.span.begin, stmt.span.end - stmt.span.begin);
    return text.substr(0, stmt.span.begin) + head + " { " + slice + " }" + tail +
           text.substr(stmt.span.end);
}

bool isLiteralExpr(const ExprPtr& expr) {
    ExprPtr e = expr;
    while (const auto* paren = e->as<ParenExpr>()) e = paren->inner;
    return e->kind() == ExprKind::Literal;
}

void addVerified(std::vector<Suggestion>& out, const CrashSite& site, CrashCategory crash,
                 const std::string& labelId, const std::string& patched,
                 const std::string& rationale) {
    Classification result = classify(site.snippet, patched, crash);
    if (result.verdict != VerdictKind::Matched || result.topLabelId != labelId) return;
    const CatalogEntry* entry = catalog_entry(labelId);
    if (!entry) return;
    out.push_back({entry->label, patched, rationale});
}

} // namespace

std::vector<Suggestion> suggest(const CrashSite& site, CrashCategory crash,
                                GuardEpilogue epilogue) {
    FocusInfo info = locateFocus(site);
    const Expr& focus = *info.focus;
    std::vector<Suggestion> out;

    if (crash == CrashCategory::NPE) {
        ExprPtr target;
        if (const auto* call = focus.as<MethodCallExpr>()) target = call->receiver;
        else if (const auto* field = focus.as<FieldAccessExpr>()) target = field->receiver;
        else if (const auto* access = focus.as<ArrayAccessExpr>()) target = access->array;
        if (!target) {
            throw InapplicableSiteError(
                "inapplicable site: focus is not a dereference of a receiver");
        }
        std::string canonical = render_expr(target) + " == null";
        if (!hasGuardCondition(info.unit, canonical)) {
            std::string x = compactJoin(render_expr(target));
            std::string guard = "if (" + x + " == null) " + epilogueText(epilogue);
            addVerified(out, site, crash, "null_checker", insertBefore(site, *info.stmt, guard),
                        "guard " + x + " against null before the dereference");
        }
        return out;
    }

    if (crash == CrashCategory::OOBE) {
        const auto* access = focus.as<ArrayAccessExpr>();
        if (!access) {
            throw InapplicableSiteError("inapplicable site: focus is not an array access");
        }
        std::string arrayR = render_expr(access->array);
        std::string indexR = render_expr(access->index);
        std::string arrayC = compactJoin(arrayR);
        std::string indexC = compactJoin(indexR);
        bool literalIndex = isLiteralExpr(access->index);

        std::string rangeCond = "0 <= " + indexR + " && " + indexR + " < " + arrayR + " . length";
        if (!literalIndex && !hasGuardCondition(info.unit, rangeCond)) {
            std::string head = "if (0 <= " + indexC + " && " + indexC + " < " + arrayC + ".length)";
            addVerified(out, site, crash, "check_range", wrapWith(site, *info.stmt, head, ""),
                        "range-check " + indexC + " before indexing " + arrayC);
        }
        std::string lengthCond = indexR + " < " + arrayR + " . length";
        if (!hasGuardCondition(info.unit, lengthCond)) {
            std::string head = "if (" + indexC + " < " + arrayC + ".length)";
            addVerified(out, site, crash, "check_array_length",
                        wrapWith(site, *info.stmt, head, ""),
                        "compare " + indexC + " with " + arrayC + ".length before indexing");
        }
        if (info.stmt->kind() != StmtKind::TryCatch) {
            addVerified(out, site, crash, "add_try_catch",
                        wrapWith(site, *info.stmt, "try",
                                 " catch (ArrayIndexOutOfBoundsException e) { }"),
                        "catch the out-of-bounds access around the statement");
        }
        std::string lowerCond = indexR + " >= 0";
        if (!literalIndex && !hasGuardCondition(info.unit, lowerCond)) {
            std::string head = "if (" + indexC + " >= 0)";
            addVerified(out, site, crash, "set_lower_bound", wrapWith(site, *info.stmt, head, ""),
                        "reject negative " + indexC + " before indexing");
        }
        return out;
    }

    const auto* cast = focus.as<CastExpr>();
    if (!cast) {
        throw InapplicableSiteError("inapplicable site: focus is not a cast");
    }
    std::string operandR = render_expr(cast->operand);
    std::string cond = operandR + " instanceof " + cast->typeName;
    if (!hasGuardCondition(info.unit, cond)) {
        std::string operandC = compactJoin(operandR);
        std::string head = "if (" + operandC + " instanceof " + cast->typeName + ")";
        addVerified(out, site, crash, "use_instance_checker", wrapWith(site, *info.stmt, head, ""),
                    "check " + operandC + " instanceof " + cast->typeName + " before the cast");
    }
    return out;
}

} // namespace crashfix
