#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>

#include "crashfix/ast.hpp"
#include "crashfix/token.hpp"
#include "support.hpp"

using namespace crashfix;

TEST_CASE("tokenize basics") {
    CHECK(tokenize("").empty());

    auto toks = tokenize("if (x == null)");
    REQUIRE(toks.size() == 6);
    CHECK(toks[0].kind == TokenKind::Keyword);
    CHECK(toks[0].text == "if");
    CHECK(toks[1].kind == TokenKind::Punctuation);
    CHECK(toks[1].text == "(");
    CHECK(toks[2].kind == TokenKind::Identifier);
    CHECK(toks[2].text == "x");
    CHECK(toks[3].kind == TokenKind::Operator);
    CHECK(toks[3].text == "==");
    CHECK(toks[4].kind == TokenKind::Keyword);
    CHECK(toks[4].text == "null");
    CHECK(toks[5].kind == TokenKind::Punctuation);
    CHECK(toks[5].text == ")");

    auto clearToks = tokenize("fTree.clear(index, true);");
    REQUIRE(clearToks.size() == 9);
    CHECK(clearToks.back().kind == TokenKind::Punctuation);
    CHECK(clearToks.back().text == ";");
}

TEST_CASE("token spans are exact and strictly increasing") {
    std::string src = "for (int i=0; i< contentTypes.length; i++) { // loop\n    use(a[i]);\n}";
    auto toks = tokenize(src);
    std::size_t last = 0;
    for (const auto& tok : toks) {
        CHECK(tok.span.begin >= last);
        CHECK(tok.span.end > tok.span.begin);
        CHECK(src.substr(tok.span.begin, tok.span.length()) == tok.text);
        last = tok.span.end;
    }
}

TEST_CASE("tokenize is total on garbage") {
    auto toks = tokenize("@ # `weird` \x01");
    for (const auto& tok : toks) {
        if (tok.kind == TokenKind::Punctuation) CHECK(tok.text.size() >= 1);
    }
    CHECK(!toks.empty());
}

TEST_CASE("comments and whitespace vanish from normalization") {
    CHECK(normalize("x = 1; // note") == "x = 1 ;");
    CHECK(normalize("x /* mid */ = 1;") == "x = 1 ;");
    CHECK(normalize("x  =\t 1 ;") == "x = 1 ;");
    CHECK(normalize("/* unterminated swallows the rest") == "");
}

TEST_CASE("fingerprints ignore trivia and see every token") {
    auto fp = [](std::string_view src) {
        auto unit = parse_statements(src);
        REQUIRE(unit.statements.size() == 1);
        return unit.statements[0]->fingerprint;
    };
    CHECK(fp("x = 1;") == fp("x  =  1 ; // note"));
    CHECK(fp("error = error.getChildren()[1];") != fp("error = error.getChildren()[0];"));
}

TEST_CASE("parse shapes for the supported subset") {
    SUBCASE("return with receiver chain") {
        auto unit = parse_statements("return fTextHoverManager.getCurrentTextHover();");
        REQUIRE(unit.statements.size() == 1);
        const auto* ret = unit.statements[0]->as<ReturnNode>();
        REQUIRE(ret);
        const auto* call = ret->value->as<MethodCallExpr>();
        REQUIRE(call);
        CHECK(call->name == "getCurrentTextHover");
        CHECK(call->args.empty());
        const auto* recv = call->receiver->as<NameExpr>();
        REQUIRE(recv);
        CHECK(recv->id == "fTextHoverManager");
    }
    SUBCASE("assignment of null") {
        auto unit = parse_statements("stringToFont= null;");
        REQUIRE(unit.statements.size() == 1);
        const auto* es = unit.statements[0]->as<ExprStmtNode>();
        REQUIRE(es);
        const auto* assign = es->expr->as<AssignExpr>();
        REQUIRE(assign);
        CHECK(assign->target->kind() == ExprKind::Name);
        const auto* lit = assign->value->as<LiteralExpr>();
        REQUIRE(lit);
        CHECK(lit->kind == LiteralKind::Null);
    }
    SUBCASE("var decl with cast initializer") {
        auto unit = parse_statements("IAdaptable element = (IAdaptable)obj;");
        REQUIRE(unit.statements.size() == 1);
        const auto* decl = unit.statements[0]->as<VarDeclNode>();
        REQUIRE(decl);
        CHECK(decl->typeName == "IAdaptable");
        CHECK(decl->name == "element");
        const auto* cast = decl->init->as<CastExpr>();
        REQUIRE(cast);
        CHECK(cast->typeName == "IAdaptable");
    }
    SUBCASE("parenthesized expression is not a cast") {
        auto unit = parse_statements("x = (a) + b;");
        const auto* es = unit.statements[0]->as<ExprStmtNode>();
        REQUIRE(es);
        const auto* assign = es->expr->as<AssignExpr>();
        REQUIRE(assign);
        const auto* bin = assign->value->as<BinaryExpr>();
        REQUIRE(bin);
        CHECK(bin->op == "+");
        CHECK(bin->lhs->kind() == ExprKind::Paren);
    }
    SUBCASE("if/else, for, while, try/catch") {
        auto unit = parse_statements(
            "if (a < b) { x(); } else { y(); }\n"
            "for (int i = 0; i < n; i++) { visit(i); }\n"
            "while (it.hasNext()) it.advance();\n"
            "try { parse(); } catch (CoreException e) { log(e); }\n"
            "break;\n"
            "continue;\n");
        REQUIRE(unit.statements.size() == 6);
        CHECK(unit.statements[0]->kind() == StmtKind::If);
        CHECK(unit.statements[0]->as<IfNode>()->elseBranch != nullptr);
        CHECK(unit.statements[1]->kind() == StmtKind::For);
        CHECK(unit.statements[2]->kind() == StmtKind::While);
        const auto* tc = unit.statements[3]->as<TryCatchNode>();
        REQUIRE(tc);
        CHECK(tc->catchType == "CoreException");
        CHECK(tc->catchVar == "e");
        CHECK(unit.statements[4]->kind() == StmtKind::Break);
        CHECK(unit.statements[5]->kind() == StmtKind::Continue);
    }
    SUBCASE("catch clause without a variable") {
        auto unit = parse_statements("try { go(); } catch (ArrayIndexOutOfBoundsException) { }");
        const auto* tc = unit.statements[0]->as<TryCatchNode>();
        REQUIRE(tc);
        CHECK(tc->catchType == "ArrayIndexOutOfBoundsException");
        CHECK(tc->catchVar.empty());
    }
    SUBCASE("increment desugars to an assignment") {
        auto unit = parse_statements("i++;");
        const auto* es = unit.statements[0]->as<ExprStmtNode>();
        REQUIRE(es);
        const auto* assign = es->expr->as<AssignExpr>();
        REQUIRE(assign);
        const auto* sum = assign->value->as<BinaryExpr>();
        REQUIRE(sum);
        CHECK(sum->op == "+");
        CHECK(render_expr(es->expr) == "i = i + 1");
    }
    SUBCASE("instanceof binds below equality") {
        auto unit = parse_statements("if (data instanceof IndexedVariablePartition) { return; }");
        const auto* node = unit.statements[0]->as<IfNode>();
        REQUIRE(node);
        const auto* inst = node->cond->as<InstanceOfExpr>();
        REQUIRE(inst);
        CHECK(inst->typeName == "IndexedVariablePartition");
    }
}

TEST_CASE("statements outside the subset become Opaque, never a failure") {
    auto unit = parse_statements("synchronized (lock) { x(); }");
    REQUIRE(unit.statements.size() == 1);
    const auto* opaque = unit.statements[0]->as<OpaqueNode>();
    REQUIRE(opaque);
    CHECK(opaque->normalizedText == normalize("synchronized (lock) { x(); }"));

    // Followed by normal statements, the fallback must resynchronize.
    auto mixed = parse_statements("switch (kind) { case 1: break; }\nx = 1;\ndo { y(); } while (p);\nz();");
    REQUIRE(mixed.statements.size() >= 3);
    CHECK(mixed.statements[0]->kind() == StmtKind::Opaque);
    bool sawAssign = false;
    for (const auto& stmt : mixed.statements) {
        if (stmt->normalizedText == "x = 1 ;") sawAssign = true;
    }
    CHECK(sawAssign);
}

TEST_CASE("child spans stay inside parent spans") {
    std::string src = testsupport::goldenBefore(testsupport::goldenPairs()[5]); // a wrap-heavy file
    auto unit = parse_statements(src);
    for (const auto& top : unit.statements) {
        visit_statements(top, [&](const StmtPtr& stmt) {
            CHECK(top->span.contains(stmt->span));
            visit_exprs(stmt, [&](const ExprPtr& expr) {
                CHECK(stmt->span.contains(expr->span));
            });
        });
    }
}

TEST_CASE("parsing is deterministic") {
    std::string src = testsupport::goldenAfter(testsupport::goldenPairs()[1]);
    auto a = parse_statements(src);
    auto b = parse_statements(src);
    REQUIRE(a.statements.size() == b.statements.size());
    for (std::size_t i = 0; i < a.statements.size(); ++i) {
        CHECK(a.statements[i]->fingerprint == b.statements[i]->fingerprint);
        CHECK(a.statements[i]->span == b.statements[i]->span);
    }
}

TEST_CASE("every bundled fixture parses without Opaque statements") {
    namespace fs = std::filesystem;
    int files = 0;
    for (const auto& entry :
         fs::recursive_directory_iterator(testsupport::dataDir() + "/golden/commits")) {
        if (!entry.is_regular_file() || entry.path().extension() != ".java") continue;
        ++files;
        auto unit = parse_statements(testsupport::readFile(entry.path().string()));
        CHECK(!unit.statements.empty());
        for (const auto& top : unit.statements) {
            visit_statements(top, [&](const StmtPtr& stmt) {
                INFO(entry.path().string(), ": ", stmt->normalizedText);
                CHECK(stmt->kind() != StmtKind::Opaque);
            });
        }
    }
    CHECK(files == 34);
}

TEST_CASE("render_expr is canonical over structure") {
    auto render1 = [](std::string_view src) {
        auto unit = parse_statements(src);
        REQUIRE(unit.statements.size() == 1);
        const auto* es = unit.statements[0]->as<ExprStmtNode>();
        REQUIRE(es);
        return render_expr(es->expr);
    };
    CHECK(render1("a.b(c);") == render1("a . b( c );"));
    CHECK(render1("x=(IResource)y;") == "x = ( IResource ) y");
    CHECK(render1("a[i+1]=0;") == "a [ i + 1 ] = 0");
    CHECK(render1("f(a,b);") != render1("f(b,a);"));
}
