#pragma once

// Tokeniser shared by the tensor and vec3 DSL parsers.

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "birdtrack/error.hpp"

namespace birdtrack::detail {

struct Token {
    enum Kind { Ident, Number, Punct, End } kind;
    std::string text;
    std::size_t pos;
};

inline std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const unsigned char c = static_cast<unsigned char>(s[i]);
        if (std::isspace(c)) {
            ++i;
        } else if (std::isalpha(c) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            out.push_back({Token::Ident, std::string(s.substr(i, j - i)), i});
            i = j;
        } else if (std::isdigit(c)) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Number, std::string(s.substr(i, j - i)), i});
            i = j;
        } else if (std::string_view("()[],;:+-*/^").find(static_cast<char>(c)) != std::string_view::npos) {
            out.push_back({Token::Punct, std::string(1, static_cast<char>(c)), i});
            ++i;
        } else {
            throw ParseError("unexpected character '" + std::string(1, static_cast<char>(c)) + "' at offset " +
                             std::to_string(i));
        }
    }
    out.push_back({Token::End, "", s.size()});
    return out;
}

class TokenStream {
public:
    explicit TokenStream(std::string_view s) : toks_(tokenize(s)) {}

    const Token& peek(std::size_t ahead = 0) const {
        return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
    }
    Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    bool at_end() const { return peek().kind == Token::End; }
    bool accept(std::string_view punct) {
        if (peek().kind == Token::Punct && peek().text == punct) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(std::string_view punct) {
        if (!accept(punct)) fail("expected '" + std::string(punct) + "'");
    }
    std::string ident() {
        if (peek().kind != Token::Ident) fail("expected an index name");
        return next().text;
    }
    [[noreturn]] void fail(const std::string& what) const {
        const Token& t = peek();
        throw ParseError(what + " at offset " + std::to_string(t.pos) +
                         (t.kind == Token::End ? " (end of input)" : " near '" + t.text + "'"));
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace birdtrack::detail
