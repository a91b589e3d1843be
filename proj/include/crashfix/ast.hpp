#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "crashfix/token.hpp"

namespace crashfix {

struct Expr;
struct Statement;
using ExprPtr = std::shared_ptr<const Expr>;
using StmtPtr = std::shared_ptr<const Statement>;

enum class ExprKind {
    Name,
    FieldAccess,
    MethodCall,
    ArrayAccess,
    Cast,
    InstanceOf,
    Binary,
    Unary,
    New,
    Literal,
    Assign,
    Paren,
};

enum class LiteralKind { Null, Int, String, Bool };

struct NameExpr {
    std::string id;
};
struct FieldAccessExpr {
    ExprPtr receiver;
    std::string field;
};
struct MethodCallExpr {
    ExprPtr receiver; // null for bare calls like checkParent(node)
    std::string name;
    std::vector<ExprPtr> args;
};
struct ArrayAccessExpr {
    ExprPtr array;
    ExprPtr index;
};
struct CastExpr {
    std::string typeName;
    ExprPtr operand;
};
struct InstanceOfExpr {
    ExprPtr operand;
    std::string typeName;
};
struct BinaryExpr {
    std::string op;
    ExprPtr lhs;
    ExprPtr rhs;
};
struct UnaryExpr {
    std::string op;
    ExprPtr operand;
};
struct NewExpr {
    std::string typeName;
    std::vector<ExprPtr> args;
};
struct LiteralExpr {
    LiteralKind kind;
    std::string text;
};
struct AssignExpr {
    ExprPtr target;
    ExprPtr value;
};
struct ParenExpr {
    ExprPtr inner;
};

struct Expr {
    Span span;
    std::variant<NameExpr, FieldAccessExpr, MethodCallExpr, ArrayAccessExpr,
                 CastExpr, InstanceOfExpr, BinaryExpr, UnaryExpr, NewExpr,
                 LiteralExpr, AssignExpr, ParenExpr>
        node;

    ExprKind kind() const { return static_cast<ExprKind>(node.index()); }

    template <typename T>
    const T* as() const {
        return std::get_if<T>(&node);
    }
};

enum class StmtKind {
    ExprStmt,
    VarDecl,
    Return,
    If,
    For,
    While,
    TryCatch,
    Break,
    Continue,
    Block,
    Opaque,
};

struct ExprStmtNode {
    ExprPtr expr;
};
struct VarDeclNode {
    std::string typeName;
    std::string name;
    ExprPtr init; // null when absent
};
struct ReturnNode {
    ExprPtr value; // null when absent
};
struct IfNode {
    ExprPtr cond;
    StmtPtr thenBranch;
    StmtPtr elseBranch; // null when absent
};
struct ForNode {
    StmtPtr init;   // VarDecl or ExprStmt, null when absent
    ExprPtr cond;   // null when absent
    ExprPtr update; // null when absent
    StmtPtr body;
};
struct WhileNode {
    ExprPtr cond;
    StmtPtr body;
};
struct TryCatchNode {
    StmtPtr body;
    std::string catchType;
    std::string catchVar; // may be empty
    StmtPtr catchBody;
};
struct BreakNode {};
struct ContinueNode {};
struct BlockNode {
    std::vector<StmtPtr> stmts;
};
struct OpaqueNode {
    std::string normalizedText;
};

struct Statement {
    Span span;
    std::string fingerprint;
    std::string normalizedText;
    std::variant<ExprStmtNode, VarDeclNode, ReturnNode, IfNode, ForNode,
                 WhileNode, TryCatchNode, BreakNode, ContinueNode, BlockNode,
                 OpaqueNode>
        node;

    StmtKind kind() const { return static_cast<StmtKind>(node.index()); }

    template <typename T>
    const T* as() const {
        return std::get_if<T>(&node);
    }
};

struct SourceUnit {
    std::string sourceText;
    std::vector<StmtPtr> statements;
};

/// Statement-list parse with an Opaque fallback; never fails. Statements the
/// grammar cannot handle are kept verbatim as Opaque nodes keyed by their
/// normalized text.
SourceUnit parse_statements(std::string_view source);

std::string fingerprint(const Statement& stmt);

/// Immediate child statements of a guard body: Block children, or the single
/// non-block body statement.
std::vector<StmtPtr> block_children(const StmtPtr& stmt);

/// Body of an If (then branch) or TryCatch (try body); empty otherwise.
std::vector<StmtPtr> guard_body_children(const Statement& guard);

void visit_exprs(const ExprPtr& root, const std::function<void(const ExprPtr&)>& fn);
void visit_exprs(const StmtPtr& stmt, const std::function<void(const ExprPtr&)>& fn);
void visit_statements(const StmtPtr& root, const std::function<void(const StmtPtr&)>& fn);

/// All expressions anywhere in the unit, including nested statements.
void visit_exprs(const SourceUnit& unit, const std::function<void(const ExprPtr&)>& fn);

const char* stmt_kind_name(StmtKind kind);

/// Canonical single-space-separated text of an expression, rebuilt from the
/// tree (so desugared forms print in their desugared shape). Two expressions
/// render equal iff they are structurally the same.
std::string render_expr(const ExprPtr& expr);

} // namespace crashfix
