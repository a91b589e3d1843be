#include "crashfix/token.hpp"

#include <array>
#include <cctype>

namespace crashfix {

namespace {

constexpr std::array<std::string_view, 14> kKeywords = {
    "if",   "else",  "for",      "while", "try",        "catch", "return",
    "break", "continue", "new",  "instanceof", "null",  "true",  "false",
};

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool is_ident_part(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

// Multi-char operators first so maximal munch wins.
constexpr std::array<std::string_view, 10> kLongOperators = {
    "==", "!=", "<=", ">=", "&&", "||", "++", "--", "->", "::",
};

constexpr std::string_view kShortOperators = "+-*/<>!=";

} // namespace

bool is_keyword(std::string_view word) {
    for (auto kw : kKeywords) {
        if (kw == word) return true;
    }
    return false;
}

const char* token_kind_name(TokenKind kind) {
    switch (kind) {
        case TokenKind::Identifier: return "identifier";
        case TokenKind::Keyword: return "keyword";
        case TokenKind::Literal: return "literal";
        case TokenKind::Operator: return "operator";
        case TokenKind::Punctuation: return "punctuation";
    }
    return "?";
}

std::vector<Token> tokenize(std::string_view source) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    const std::size_t n = source.size();

    auto push = [&](TokenKind kind, std::size_t begin, std::size_t end) {
        tokens.push_back(Token{kind, std::string(source.substr(begin, end - begin)),
                               Span{begin, end}});
    };

    while (i < n) {
        char c = source[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        // Line comment.
        if (c == '/' && i + 1 < n && source[i + 1] == '/') {
            while (i < n && source[i] != '\n') ++i;
            continue;
        }
        // Block comment. An unterminated one swallows the rest of the input.
        if (c == '/' && i + 1 < n && source[i + 1] == '*') {
            i += 2;
            while (i + 1 < n && !(source[i] == '*' && source[i + 1] == '/')) ++i;
            i = (i + 1 < n) ? i + 2 : n;
            continue;
        }
        if (is_ident_start(c)) {
            std::size_t begin = i;
            while (i < n && is_ident_part(source[i])) ++i;
            std::string_view word = source.substr(begin, i - begin);
            TokenKind kind = is_keyword(word) ? TokenKind::Keyword : TokenKind::Identifier;
            push(kind, begin, i);
            continue;
        }
        if (is_digit(c)) {
            std::size_t begin = i;
            while (i < n && is_digit(source[i])) ++i;
            push(TokenKind::Literal, begin, i);
            continue;
        }
        if (c == '"') {
            std::size_t begin = i;
            ++i;
            while (i < n && source[i] != '"') {
                if (source[i] == '\\' && i + 1 < n) ++i;
                ++i;
            }
            if (i < n) ++i; // closing quote
            push(TokenKind::Literal, begin, i);
            continue;
        }
        bool matched = false;
        for (auto op : kLongOperators) {
            if (source.substr(i, op.size()) == op) {
                push(TokenKind::Operator, i, i + op.size());
                i += op.size();
                matched = true;
                break;
            }
        }
        if (matched) continue;
        if (kShortOperators.find(c) != std::string_view::npos && c != '\0') {
            push(TokenKind::Operator, i, i + 1);
            ++i;
            continue;
        }
        // Everything else, including bytes outside the lexicon, is a
        // single-character punctuation token.
        push(TokenKind::Punctuation, i, i + 1);
        ++i;
    }
    return tokens;
}

std::string normalized_join(const std::vector<Token>& tokens) {
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i > 0) out += ' ';
        out += tokens[i].text;
    }
    return out;
}

std::string normalize(std::string_view source) {
    return normalized_join(tokenize(source));
}

std::string fingerprint_text(std::string_view normalizedText) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (char c : normalizedText) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 0x100000001b3ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[hash & 0xf];
        hash >>= 4;
    }
    return out;
}

} // namespace crashfix
