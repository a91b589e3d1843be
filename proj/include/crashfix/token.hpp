#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace crashfix {

// Half-open byte range [begin, end) into a source buffer.
struct Span {
    std::size_t begin = 0;
    std::size_t end = 0;

    std::size_t length() const { return end - begin; }
    bool contains(const Span& other) const {
        return begin <= other.begin && other.end <= end;
    }
    bool contains(std::size_t offset) const {
        return begin <= offset && offset < end;
    }
    friend bool operator==(const Span&, const Span&) = default;
};

enum class TokenKind {
    Identifier,
    Keyword,
    Literal,
    Operator,
    Punctuation,
};

struct Token {
    TokenKind kind;
    std::string text;
    Span span;
};

/// Splits source into tokens, skipping whitespace and // and /* */ comments.
/// Total: any byte that fits no lexical rule becomes a one-byte punctuation
/// token. Token spans are strictly increasing and text always equals the
/// source substring at the span.
std::vector<Token> tokenize(std::string_view source);

/// Token texts joined by single spaces. Whitespace- and comment-insensitive
/// by construction.
std::string normalize(std::string_view source);

std::string normalized_join(const std::vector<Token>& tokens);

/// FNV-1a 64-bit over the normalized text, as 16 lowercase hex digits.
std::string fingerprint_text(std::string_view normalizedText);

bool is_keyword(std::string_view word);

const char* token_kind_name(TokenKind kind);

} // namespace crashfix
