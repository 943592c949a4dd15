#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mogi/ast.hpp"

namespace mogi {

enum class Tok {
    End, Ident, Int, Str,
    // keywords
    KwFn, KwVar, KwIf, KwElse, KwWhile, KwFor, KwReturn, KwAssert,
    KwTrue, KwFalse, KwNull, KwInt, KwBool, KwString, KwArray, KwOptional,
    // punctuation / operators
    LParen, RParen, LBrace, RBrace, LBracket, RBracket,
    Comma, Semi, Colon, Arrow,
    Assign, Plus, Minus, Star, Slash, Percent,
    Eq, Ne, Lt, Le, Gt, Ge, AndAnd, OrOr, Bang,
};

struct Token {
    Tok kind;
    std::string text;
    std::int64_t ival = 0;
    SourceLoc loc;
};

// Throws LexError on malformed input.
struct LexError {
    std::string message;
    SourceLoc loc;
};

std::vector<Token> lex(const std::string &source);

}  // namespace mogi
