#include "lexer.hpp"

#include <cctype>
#include <map>

namespace mogi {

namespace {

const std::map<std::string, Tok> kKeywords = {
    {"fn", Tok::KwFn},         {"var", Tok::KwVar},
    {"if", Tok::KwIf},         {"else", Tok::KwElse},
    {"while", Tok::KwWhile},   {"for", Tok::KwFor},
    {"return", Tok::KwReturn}, {"assert", Tok::KwAssert},
    {"true", Tok::KwTrue},     {"false", Tok::KwFalse},
    {"null", Tok::KwNull},     {"int", Tok::KwInt},
    {"bool", Tok::KwBool},     {"string", Tok::KwString},
    {"array", Tok::KwArray},   {"optional", Tok::KwOptional},
};

struct Cursor {
    const std::string &src;
    size_t pos = 0;
    int line = 1;
    int col = 1;

    bool done() const { return pos >= src.size(); }
    char peek(size_t ahead = 0) const {
        return pos + ahead < src.size() ? src[pos + ahead] : '\0';
    }
    char take() {
        char c = src[pos++];
        if (c == '\n') {
            line++;
            col = 1;
        } else {
            col++;
        }
        return c;
    }
    SourceLoc loc() const { return {line, col}; }
};

}  // namespace

std::vector<Token> lex(const std::string &source) {
    Cursor c{source};
    std::vector<Token> out;

    auto push = [&](Tok k, std::string text, SourceLoc loc) {
        out.push_back({k, std::move(text), 0, loc});
    };

    while (!c.done()) {
        char ch = c.peek();
        if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') {
            c.take();
            continue;
        }
        if (ch == '/' && c.peek(1) == '/') {
            while (!c.done() && c.peek() != '\n') c.take();
            continue;
        }
        SourceLoc loc = c.loc();
        if (std::isdigit((unsigned char)ch)) {
            std::string num;
            while (!c.done() && std::isdigit((unsigned char)c.peek())) num += c.take();
            Token t{Tok::Int, num, 0, loc};
            t.ival = std::stoll(num);
            out.push_back(t);
            continue;
        }
        if (std::isalpha((unsigned char)ch) || ch == '_') {
            std::string id;
            while (!c.done() && (std::isalnum((unsigned char)c.peek()) || c.peek() == '_'))
                id += c.take();
            auto kw = kKeywords.find(id);
            push(kw != kKeywords.end() ? kw->second : Tok::Ident, id, loc);
            continue;
        }
        if (ch == '"') {
            c.take();
            std::string s;
            while (true) {
                if (c.done()) throw LexError{"unterminated string literal", loc};
                char d = c.take();
                if (d == '"') break;
                if (d == '\\') {
                    if (c.done()) throw LexError{"unterminated escape", c.loc()};
                    char e = c.take();
                    switch (e) {
                        case 'n': s += '\n'; break;
                        case 't': s += '\t'; break;
                        case '\\': s += '\\'; break;
                        case '"': s += '"'; break;
                        default: throw LexError{std::string("bad escape \\") + e, c.loc()};
                    }
                } else {
                    s += d;
                }
            }
            out.push_back({Tok::Str, s, 0, loc});
            continue;
        }
        c.take();
        auto two = [&](char second, Tok pair, Tok single) {
            if (c.peek() == second) {
                c.take();
                push(pair, std::string(1, ch) + second, loc);
            } else {
                push(single, std::string(1, ch), loc);
            }
        };
        switch (ch) {
            case '(': push(Tok::LParen, "(", loc); break;
            case ')': push(Tok::RParen, ")", loc); break;
            case '{': push(Tok::LBrace, "{", loc); break;
            case '}': push(Tok::RBrace, "}", loc); break;
            case '[': push(Tok::LBracket, "[", loc); break;
            case ']': push(Tok::RBracket, "]", loc); break;
            case ',': push(Tok::Comma, ",", loc); break;
            case ';': push(Tok::Semi, ";", loc); break;
            case ':': push(Tok::Colon, ":", loc); break;
            case '+': push(Tok::Plus, "+", loc); break;
            case '*': push(Tok::Star, "*", loc); break;
            case '/': push(Tok::Slash, "/", loc); break;
            case '%': push(Tok::Percent, "%", loc); break;
            case '-': two('>', Tok::Arrow, Tok::Minus); break;
            case '=': two('=', Tok::Eq, Tok::Assign); break;
            case '!': two('=', Tok::Ne, Tok::Bang); break;
            case '<': two('=', Tok::Le, Tok::Lt); break;
            case '>': two('=', Tok::Ge, Tok::Gt); break;
            case '&':
                if (c.peek() == '&') {
                    c.take();
                    push(Tok::AndAnd, "&&", loc);
                } else {
                    throw LexError{"stray '&'", loc};
                }
                break;
            case '|':
                if (c.peek() == '|') {
                    c.take();
                    push(Tok::OrOr, "||", loc);
                } else {
                    throw LexError{"stray '|'", loc};
                }
                break;
            default:
                throw LexError{std::string("unexpected character '") + ch + "'", loc};
        }
    }
    out.push_back({Tok::End, "", 0, c.loc()});
    return out;
}

}  // namespace mogi
