#include "crashfix/ast.hpp"

#include <cassert>
#include <stdexcept>

namespace crashfix {

namespace {

// Internal parse failure; always caught at a statement boundary, where the
// failed range degrades to an Opaque statement.
struct ParseFail : std::exception {};

class Parser {
public:
    explicit Parser(std::string_view source)
        : source_(source), tokens_(tokenize(source)) {}

    std::vector<StmtPtr> parseAll() {
        std::vector<StmtPtr> stmts;
        while (!atEnd()) {
            stmts.push_back(parseStatementOrOpaque(/*insideBlock=*/false));
        }
        return stmts;
    }

private:
    std::string_view source_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;

    bool atEnd() const { return pos_ >= tokens_.size(); }

    const Token& peek(std::size_t ahead = 0) const {
        static const Token eof{TokenKind::Punctuation, "", Span{0, 0}};
        return pos_ + ahead < tokens_.size() ? tokens_[pos_ + ahead] : eof;
    }

    bool peekIs(std::string_view text, std::size_t ahead = 0) const {
        return pos_ + ahead < tokens_.size() && tokens_[pos_ + ahead].text == text;
    }

    bool peekKind(TokenKind kind, std::size_t ahead = 0) const {
        return pos_ + ahead < tokens_.size() && tokens_[pos_ + ahead].kind == kind;
    }

    const Token& advance() {
        if (atEnd()) throw ParseFail{};
        return tokens_[pos_++];
    }

    const Token& expect(std::string_view text) {
        if (!peekIs(text)) throw ParseFail{};
        return tokens_[pos_++];
    }

    Span spanFromTokens(std::size_t firstTok, std::size_t endTok) const {
        if (firstTok >= endTok) return Span{0, 0};
        return Span{tokens_[firstTok].span.begin, tokens_[endTok - 1].span.end};
    }

    template <typename Node>
    StmtPtr makeStmt(Node node, std::size_t firstTok, std::size_t endTok) const {
        auto stmt = std::make_shared<Statement>();
        stmt->span = spanFromTokens(firstTok, endTok);
        std::string normalized;
        for (std::size_t i = firstTok; i < endTok; ++i) {
            if (i > firstTok) normalized += ' ';
            normalized += tokens_[i].text;
        }
        stmt->normalizedText = std::move(normalized);
        stmt->fingerprint = fingerprint_text(stmt->normalizedText);
        stmt->node = std::move(node);
        return stmt;
    }

    template <typename Node>
    ExprPtr makeExpr(Node node, Span span) const {
        auto expr = std::make_shared<Expr>();
        expr->span = span;
        expr->node = std::move(node);
        return expr;
    }

    Span spanBetween(const ExprPtr& a, const ExprPtr& b) const {
        return Span{a->span.begin, b->span.end};
    }

    // ---- statements ----

    StmtPtr parseStatementOrOpaque(bool insideBlock) {
        std::size_t start = pos_;
        try {
            return parseStatement();
        } catch (const ParseFail&) {
            pos_ = start;
            return skimOpaque(insideBlock);
        }
    }

    // Consumes a best-effort statement extent and wraps it verbatim.
    StmtPtr skimOpaque(bool insideBlock) {
        std::size_t start = pos_;
        int braceDepth = 0;
        while (!atEnd()) {
            const Token& tok = peek();
            if (tok.text == "}" && braceDepth == 0) {
                // Belongs to the enclosing block.
                if (insideBlock) break;
                advance();
                break;
            }
            advance();
            if (tok.text == ";" && braceDepth == 0) break;
            if (tok.text == "{") ++braceDepth;
            if (tok.text == "}" && braceDepth > 0) {
                --braceDepth;
                if (braceDepth == 0 && !(peekIs("else") || peekIs("catch") || peekIs("finally"))) {
                    break;
                }
            }
        }
        if (pos_ == start) advance(); // guarantee progress
        std::size_t end = pos_;
        std::string normalized;
        for (std::size_t i = start; i < end; ++i) {
            if (i > start) normalized += ' ';
            normalized += tokens_[i].text;
        }
        return makeStmt(OpaqueNode{normalized}, start, end);
    }

    StmtPtr parseStatement() {
        std::size_t start = pos_;
        if (atEnd()) throw ParseFail{};
        const Token& tok = peek();

        if (tok.text == "{") return parseBlock();
        if (tok.text == "if") return parseIf();
        if (tok.text == "for") return parseFor();
        if (tok.text == "while") return parseWhile();
        if (tok.text == "try") return parseTryCatch();
        if (tok.text == "return") {
            advance();
            ExprPtr value;
            if (!peekIs(";")) value = parseExpression();
            expect(";");
            return makeStmt(ReturnNode{value}, start, pos_);
        }
        if (tok.text == "break") {
            advance();
            expect(";");
            return makeStmt(BreakNode{}, start, pos_);
        }
        if (tok.text == "continue") {
            advance();
            expect(";");
            return makeStmt(ContinueNode{}, start, pos_);
        }
        if (tok.kind == TokenKind::Keyword && tok.text != "new") throw ParseFail{};

        // Var declaration: Type name [= init] ;
        if (peekKind(TokenKind::Identifier, 0) && peekKind(TokenKind::Identifier, 1) &&
            (peekIs("=", 2) || peekIs(";", 2))) {
            auto decl = parseVarDeclHead();
            expect(";");
            return makeStmt(std::move(decl), start, pos_);
        }

        ExprPtr expr = parseExpression();
        expect(";");
        return makeStmt(ExprStmtNode{expr}, start, pos_);
    }

    VarDeclNode parseVarDeclHead() {
        const Token& type = advance();
        const Token& name = advance();
        if (type.kind != TokenKind::Identifier || name.kind != TokenKind::Identifier)
            throw ParseFail{};
        ExprPtr init;
        if (peekIs("=")) {
            advance();
            init = parseExpression();
        }
        return VarDeclNode{type.text, name.text, init};
    }

    StmtPtr parseBlock() {
        std::size_t start = pos_;
        expect("{");
        std::vector<StmtPtr> stmts;
        while (!peekIs("}")) {
            if (atEnd()) throw ParseFail{};
            stmts.push_back(parseStatementOrOpaque(/*insideBlock=*/true));
        }
        expect("}");
        return makeStmt(BlockNode{std::move(stmts)}, start, pos_);
    }

    StmtPtr parseIf() {
        std::size_t start = pos_;
        expect("if");
        expect("(");
        ExprPtr cond = parseExpression();
        expect(")");
        StmtPtr thenBranch = parseStatement();
        StmtPtr elseBranch;
        if (peekIs("else")) {
            advance();
            elseBranch = parseStatement();
        }
        return makeStmt(IfNode{cond, thenBranch, elseBranch}, start, pos_);
    }

    StmtPtr parseFor() {
        std::size_t start = pos_;
        expect("for");
        expect("(");
        StmtPtr init;
        if (!peekIs(";")) {
            std::size_t initStart = pos_;
            if (peekKind(TokenKind::Identifier, 0) && peekKind(TokenKind::Identifier, 1)) {
                auto decl = parseVarDeclHead();
                init = makeStmt(std::move(decl), initStart, pos_);
            } else {
                ExprPtr expr = parseExpression();
                init = makeStmt(ExprStmtNode{expr}, initStart, pos_);
            }
        }
        expect(";");
        ExprPtr cond;
        if (!peekIs(";")) cond = parseExpression();
        expect(";");
        ExprPtr update;
        if (!peekIs(")")) update = parseExpression();
        expect(")");
        StmtPtr body = parseStatement();
        return makeStmt(ForNode{init, cond, update, body}, start, pos_);
    }

    StmtPtr parseWhile() {
        std::size_t start = pos_;
        expect("while");
        expect("(");
        ExprPtr cond = parseExpression();
        expect(")");
        StmtPtr body = parseStatement();
        return makeStmt(WhileNode{cond, body}, start, pos_);
    }

    StmtPtr parseTryCatch() {
        std::size_t start = pos_;
        expect("try");
        StmtPtr body = parseBlock();
        expect("catch");
        expect("(");
        const Token& type = advance();
        if (type.kind != TokenKind::Identifier) throw ParseFail{};
        std::string catchVar;
        if (peekKind(TokenKind::Identifier)) catchVar = advance().text;
        expect(")");
        StmtPtr catchBody = parseBlock();
        if (peekIs("finally")) throw ParseFail{}; // outside the subset
        return makeStmt(TryCatchNode{body, type.text, catchVar, catchBody}, start, pos_);
    }

    // ---- expressions ----

    ExprPtr parseExpression() { return parseAssign(); }

    ExprPtr parseAssign() {
        ExprPtr lhs = parseOr();
        if (peekIs("=")) {
            ExprKind k = lhs->kind();
            if (k != ExprKind::Name && k != ExprKind::FieldAccess &&
                k != ExprKind::ArrayAccess) {
                throw ParseFail{};
            }
            advance();
            ExprPtr value = parseAssign();
            return makeExpr(AssignExpr{lhs, value}, spanBetween(lhs, value));
        }
        return lhs;
    }

    ExprPtr parseOr() {
        ExprPtr lhs = parseAnd();
        while (peekIs("||")) {
            advance();
            ExprPtr rhs = parseAnd();
            lhs = makeExpr(BinaryExpr{"||", lhs, rhs}, spanBetween(lhs, rhs));
        }
        return lhs;
    }

    ExprPtr parseAnd() {
        ExprPtr lhs = parseEquality();
        while (peekIs("&&")) {
            advance();
            ExprPtr rhs = parseEquality();
            lhs = makeExpr(BinaryExpr{"&&", lhs, rhs}, spanBetween(lhs, rhs));
        }
        return lhs;
    }

    ExprPtr parseEquality() {
        ExprPtr lhs = parseRelational();
        while (peekIs("==") || peekIs("!=")) {
            std::string op = advance().text;
            ExprPtr rhs = parseRelational();
            lhs = makeExpr(BinaryExpr{op, lhs, rhs}, spanBetween(lhs, rhs));
        }
        return lhs;
    }

    ExprPtr parseRelational() {
        ExprPtr lhs = parseAdditive();
        for (;;) {
            if (peekIs("<") || peekIs("<=") || peekIs(">") || peekIs(">=")) {
                std::string op = advance().text;
                ExprPtr rhs = parseAdditive();
                lhs = makeExpr(BinaryExpr{op, lhs, rhs}, spanBetween(lhs, rhs));
                continue;
            }
            if (peekIs("instanceof")) {
                advance();
                const Token& type = advance();
                if (type.kind != TokenKind::Identifier) throw ParseFail{};
                lhs = makeExpr(InstanceOfExpr{lhs, type.text},
                               Span{lhs->span.begin, type.span.end});
                continue;
            }
            return lhs;
        }
    }

    ExprPtr parseAdditive() {
        ExprPtr lhs = parseMultiplicative();
        while (peekIs("+") || peekIs("-")) {
            std::string op = advance().text;
            ExprPtr rhs = parseMultiplicative();
            lhs = makeExpr(BinaryExpr{op, lhs, rhs}, spanBetween(lhs, rhs));
        }
        return lhs;
    }

    ExprPtr parseMultiplicative() {
        ExprPtr lhs = parseUnary();
        while (peekIs("*") || peekIs("/")) {
            std::string op = advance().text;
            ExprPtr rhs = parseUnary();
            lhs = makeExpr(BinaryExpr{op, lhs, rhs}, spanBetween(lhs, rhs));
        }
        return lhs;
    }

    // i++ / ++i carry no separate AST shape; both desugar to i = i +/- 1 so
    // downstream matching sees one assignment form.
    ExprPtr desugarIncrement(const ExprPtr& target, const Token& opTok) {
        ExprKind k = target->kind();
        if (k != ExprKind::Name && k != ExprKind::FieldAccess &&
            k != ExprKind::ArrayAccess) {
            throw ParseFail{};
        }
        Span span{std::min(target->span.begin, opTok.span.begin),
                  std::max(target->span.end, opTok.span.end)};
        auto one = makeExpr(LiteralExpr{LiteralKind::Int, "1"}, opTok.span);
        std::string op = opTok.text == "++" ? "+" : "-";
        auto sum = makeExpr(BinaryExpr{op, target, one}, span);
        return makeExpr(AssignExpr{target, sum}, span);
    }

    bool looksLikeCast() const {
        // ( Identifier ) <start of unary expression>
        if (!peekIs("(") || !peekKind(TokenKind::Identifier, 1) || !peekIs(")", 2))
            return false;
        const Token& next = peek(3);
        if (next.kind == TokenKind::Identifier || next.kind == TokenKind::Literal)
            return true;
        if (next.text == "(" || next.text == "!" || next.text == "new" ||
            next.text == "null" || next.text == "true" || next.text == "false") {
            return true;
        }
        return false;
    }

    ExprPtr parseUnary() {
        if (peekIs("!") || peekIs("-")) {
            const Token& opTok = advance();
            ExprPtr operand = parseUnary();
            return makeExpr(UnaryExpr{opTok.text, operand},
                            Span{opTok.span.begin, operand->span.end});
        }
        if (peekIs("++") || peekIs("--")) {
            const Token& opTok = advance();
            ExprPtr operand = parseUnary();
            return desugarIncrement(operand, opTok);
        }
        if (looksLikeCast()) {
            const Token& open = advance();
            const Token& type = advance();
            advance(); // ')'
            ExprPtr operand = parseUnary();
            return makeExpr(CastExpr{type.text, operand},
                            Span{open.span.begin, operand->span.end});
        }
        return parsePostfix(parsePrimary());
    }

    std::vector<ExprPtr> parseArgs() {
        expect("(");
        std::vector<ExprPtr> args;
        if (!peekIs(")")) {
            args.push_back(parseExpression());
            while (peekIs(",")) {
                advance();
                args.push_back(parseExpression());
            }
        }
        expect(")");
        return args;
    }

    ExprPtr parsePostfix(ExprPtr expr) {
        for (;;) {
            if (peekIs(".")) {
                advance();
                const Token& name = advance();
                if (name.kind != TokenKind::Identifier) throw ParseFail{};
                if (peekIs("(")) {
                    std::vector<ExprPtr> args = parseArgs();
                    Span span{expr->span.begin,
                              tokens_[pos_ - 1].span.end};
                    expr = makeExpr(MethodCallExpr{expr, name.text, std::move(args)}, span);
                } else {
                    expr = makeExpr(FieldAccessExpr{expr, name.text},
                                    Span{expr->span.begin, name.span.end});
                }
                continue;
            }
            if (peekIs("[")) {
                advance();
                ExprPtr index = parseExpression();
                const Token& close = expect("]");
                expr = makeExpr(ArrayAccessExpr{expr, index},
                                Span{expr->span.begin, close.span.end});
                continue;
            }
            if (peekIs("(") && expr->kind() == ExprKind::Name) {
                std::string name = expr->as<NameExpr>()->id;
                std::vector<ExprPtr> args = parseArgs();
                Span span{expr->span.begin, tokens_[pos_ - 1].span.end};
                expr = makeExpr(MethodCallExpr{nullptr, name, std::move(args)}, span);
                continue;
            }
            if (peekIs("++") || peekIs("--")) {
                const Token& opTok = advance();
                expr = desugarIncrement(expr, opTok);
                continue;
            }
            return expr;
        }
    }

    ExprPtr parsePrimary() {
        if (atEnd()) throw ParseFail{};
        const Token& tok = peek();
        if (tok.text == "new") {
            std::size_t start = pos_;
            advance();
            const Token& type = advance();
            if (type.kind != TokenKind::Identifier) throw ParseFail{};
            std::vector<ExprPtr> args = parseArgs();
            return makeExpr(NewExpr{type.text, std::move(args)},
                            spanFromTokens(start, pos_));
        }
        if (tok.text == "null") {
            advance();
            return makeExpr(LiteralExpr{LiteralKind::Null, "null"}, tok.span);
        }
        if (tok.text == "true" || tok.text == "false") {
            advance();
            return makeExpr(LiteralExpr{LiteralKind::Bool, tok.text}, tok.span);
        }
        if (tok.kind == TokenKind::Literal) {
            advance();
            LiteralKind kind = tok.text.front() == '"' ? LiteralKind::String : LiteralKind::Int;
            return makeExpr(LiteralExpr{kind, tok.text}, tok.span);
        }
        if (tok.kind == TokenKind::Identifier) {
            advance();
            return makeExpr(NameExpr{tok.text}, tok.span);
        }
        if (tok.text == "(") {
            const Token& open = advance();
            ExprPtr inner = parseExpression();
            const Token& close = expect(")");
            return makeExpr(ParenExpr{inner}, Span{open.span.begin, close.span.end});
        }
        throw ParseFail{};
    }
};

} // namespace

SourceUnit parse_statements(std::string_view source) {
    Parser parser(source);
    SourceUnit unit;
    unit.sourceText = std::string(source);
    unit.statements = parser.parseAll();
    return unit;
}

std::string fingerprint(const Statement& stmt) { return stmt.fingerprint; }

std::vector<StmtPtr> block_children(const StmtPtr& stmt) {
    if (!stmt) return {};
    if (const auto* block = stmt->as<BlockNode>()) return block->stmts;
    return {stmt};
}

std::vector<StmtPtr> guard_body_children(const Statement& guard) {
    if (const auto* ifNode = guard.as<IfNode>()) return block_children(ifNode->thenBranch);
    if (const auto* tryNode = guard.as<TryCatchNode>()) return block_children(tryNode->body);
    return {};
}

namespace {

void visitExprTree(const ExprPtr& expr, const std::function<void(const ExprPtr&)>& fn) {
    if (!expr) return;
    fn(expr);
    std::visit(
        [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, FieldAccessExpr>) {
                visitExprTree(node.receiver, fn);
            } else if constexpr (std::is_same_v<T, MethodCallExpr>) {
                visitExprTree(node.receiver, fn);
                for (const auto& arg : node.args) visitExprTree(arg, fn);
            } else if constexpr (std::is_same_v<T, ArrayAccessExpr>) {
                visitExprTree(node.array, fn);
                visitExprTree(node.index, fn);
            } else if constexpr (std::is_same_v<T, CastExpr>) {
                visitExprTree(node.operand, fn);
            } else if constexpr (std::is_same_v<T, InstanceOfExpr>) {
                visitExprTree(node.operand, fn);
            } else if constexpr (std::is_same_v<T, BinaryExpr>) {
                visitExprTree(node.lhs, fn);
                visitExprTree(node.rhs, fn);
            } else if constexpr (std::is_same_v<T, UnaryExpr>) {
                visitExprTree(node.operand, fn);
            } else if constexpr (std::is_same_v<T, NewExpr>) {
                for (const auto& arg : node.args) visitExprTree(arg, fn);
            } else if constexpr (std::is_same_v<T, AssignExpr>) {
                visitExprTree(node.target, fn);
                visitExprTree(node.value, fn);
            } else if constexpr (std::is_same_v<T, ParenExpr>) {
                visitExprTree(node.inner, fn);
            }
        },
        expr->node);
}

} // namespace

void visit_exprs(const ExprPtr& root, const std::function<void(const ExprPtr&)>& fn) {
    visitExprTree(root, fn);
}

void visit_statements(const StmtPtr& root, const std::function<void(const StmtPtr&)>& fn) {
    if (!root) return;
    fn(root);
    std::visit(
        [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, IfNode>) {
                visit_statements(node.thenBranch, fn);
                visit_statements(node.elseBranch, fn);
            } else if constexpr (std::is_same_v<T, ForNode>) {
                visit_statements(node.init, fn);
                visit_statements(node.body, fn);
            } else if constexpr (std::is_same_v<T, WhileNode>) {
                visit_statements(node.body, fn);
            } else if constexpr (std::is_same_v<T, TryCatchNode>) {
                visit_statements(node.body, fn);
                visit_statements(node.catchBody, fn);
            } else if constexpr (std::is_same_v<T, BlockNode>) {
                for (const auto& child : node.stmts) visit_statements(child, fn);
            }
        },
        root->node);
}

void visit_exprs(const StmtPtr& stmt, const std::function<void(const ExprPtr&)>& fn) {
    visit_statements(stmt, [&](const StmtPtr& s) {
        std::visit(
            [&](const auto& node) {
                using T = std::decay_t<decltype(node)>;
                if constexpr (std::is_same_v<T, ExprStmtNode>) {
                    visitExprTree(node.expr, fn);
                } else if constexpr (std::is_same_v<T, VarDeclNode>) {
                    visitExprTree(node.init, fn);
                } else if constexpr (std::is_same_v<T, ReturnNode>) {
                    visitExprTree(node.value, fn);
                } else if constexpr (std::is_same_v<T, IfNode>) {
                    visitExprTree(node.cond, fn);
                } else if constexpr (std::is_same_v<T, ForNode>) {
                    visitExprTree(node.cond, fn);
                    visitExprTree(node.update, fn);
                } else if constexpr (std::is_same_v<T, WhileNode>) {
                    visitExprTree(node.cond, fn);
                }
            },
            s->node);
    });
}

void visit_exprs(const SourceUnit& unit, const std::function<void(const ExprPtr&)>& fn) {
    for (const auto& stmt : unit.statements) visit_exprs(stmt, fn);
}

std::string render_expr(const ExprPtr& expr) {
    if (!expr) return "";
    return std::visit(
        [&](const auto& node) -> std::string {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, NameExpr>) {
                return node.id;
            } else if constexpr (std::is_same_v<T, FieldAccessExpr>) {
                return render_expr(node.receiver) + " . " + node.field;
            } else if constexpr (std::is_same_v<T, MethodCallExpr>) {
                std::string out;
                if (node.receiver) out = render_expr(node.receiver) + " . ";
                out += node.name;
                if (node.args.empty()) return out + " ( )";
                out += " (";
                for (std::size_t i = 0; i < node.args.size(); ++i) {
                    out += i ? " , " : " ";
                    out += render_expr(node.args[i]);
                }
                return out + " )";
            } else if constexpr (std::is_same_v<T, ArrayAccessExpr>) {
                return render_expr(node.array) + " [ " + render_expr(node.index) + " ]";
            } else if constexpr (std::is_same_v<T, CastExpr>) {
                return "( " + node.typeName + " ) " + render_expr(node.operand);
            } else if constexpr (std::is_same_v<T, InstanceOfExpr>) {
                return render_expr(node.operand) + " instanceof " + node.typeName;
            } else if constexpr (std::is_same_v<T, BinaryExpr>) {
                return render_expr(node.lhs) + " " + node.op + " " + render_expr(node.rhs);
            } else if constexpr (std::is_same_v<T, UnaryExpr>) {
                return node.op + " " + render_expr(node.operand);
            } else if constexpr (std::is_same_v<T, NewExpr>) {
                std::string out = "new " + node.typeName;
                if (node.args.empty()) return out + " ( )";
                out += " (";
                for (std::size_t i = 0; i < node.args.size(); ++i) {
                    out += i ? " , " : " ";
                    out += render_expr(node.args[i]);
                }
                return out + " )";
            } else if constexpr (std::is_same_v<T, LiteralExpr>) {
                return node.text;
            } else if constexpr (std::is_same_v<T, AssignExpr>) {
                return render_expr(node.target) + " = " + render_expr(node.value);
            } else {
                static_assert(std::is_same_v<T, ParenExpr>);
                return "( " + render_expr(node.inner) + " )";
            }
        },
        expr->node);
}

const char* stmt_kind_name(StmtKind kind) {
    switch (kind) {
        case StmtKind::ExprStmt: return "expr";
        case StmtKind::VarDecl: return "var-decl";
        case StmtKind::Return: return "return";
        case StmtKind::If: return "if";
        case StmtKind::For: return "for";
        case StmtKind::While: return "while";
        case StmtKind::TryCatch: return "try-catch";
        case StmtKind::Break: return "break";
        case StmtKind::Continue: return "continue";
        case StmtKind::Block: return "block";
        case StmtKind::Opaque: return "opaque";
    }
    return "?";
}

} // namespace crashfix
