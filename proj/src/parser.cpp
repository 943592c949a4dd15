#include <stdexcept>

#include "lexer.hpp"
#include "mogi/minilang.hpp"

namespace mogi {

namespace {

struct ParseError {
    Diag diag;
};

[[noreturn]] void fail(const std::string &msg, SourceLoc loc) {
    throw ParseError{Diag{msg, loc}};
}

struct Parser {
    std::vector<Token> toks;
    size_t pos = 0;

    const Token &peek(size_t ahead = 0) const {
        size_t i = pos + ahead;
        return i < toks.size() ? toks[i] : toks.back();
    }
    const Token &take() {
        const Token &t = peek();
        if (t.kind != Tok::End) pos++;
        return t;
    }
    bool at(Tok k) const { return peek().kind == k; }
    bool eat(Tok k) {
        if (!at(k)) return false;
        take();
        return true;
    }
    const Token &expect(Tok k, const char *what) {
        if (!at(k)) fail(std::string("expected ") + what, peek().loc);
        return take();
    }

    Type parse_type() {
        const Token &t = take();
        switch (t.kind) {
            case Tok::KwInt: return Type::intt();
            case Tok::KwBool: return Type::boolt();
            case Tok::KwString: return Type::stringt();
            case Tok::KwArray: {
                expect(Tok::Lt, "'<'");
                Type elem = parse_type();
                expect(Tok::Gt, "'>'");
                return Type::array(elem);
            }
            case Tok::KwOptional: {
                expect(Tok::Lt, "'<'");
                Type inner = parse_type();
                if (inner.kind == TypeKind::Optional)
                    fail("optional of optional is not a type", t.loc);
                expect(Tok::Gt, "'>'");
                return Type::optional(inner);
            }
            default: fail("expected a type", t.loc);
        }
    }

    ExprPtr mk(ExprKind k, SourceLoc loc) {
        auto e = std::make_unique<Expr>();
        e->kind = k;
        e->loc = loc;
        return e;
    }

    ExprPtr parse_primary() {
        const Token &t = peek();
        switch (t.kind) {
            case Tok::Int: {
                take();
                auto e = mk(ExprKind::IntLit, t.loc);
                e->ival = t.ival;
                return e;
            }
            case Tok::Str: {
                take();
                auto e = mk(ExprKind::StrLit, t.loc);
                e->sval = t.text;
                return e;
            }
            case Tok::KwTrue:
            case Tok::KwFalse: {
                take();
                auto e = mk(ExprKind::BoolLit, t.loc);
                e->bval = t.kind == Tok::KwTrue;
                return e;
            }
            case Tok::KwNull: {
                take();
                return mk(ExprKind::NullLit, t.loc);
            }
            case Tok::LBracket: {
                take();
                auto e = mk(ExprKind::ArrayLit, t.loc);
                if (!at(Tok::RBracket)) {
                    e->kids.push_back(parse_expr());
                    while (eat(Tok::Comma)) e->kids.push_back(parse_expr());
                }
                expect(Tok::RBracket, "']'");
                return e;
            }
            case Tok::LParen: {
                take();
                ExprPtr e = parse_expr();
                expect(Tok::RParen, "')'");
                return e;
            }
            case Tok::Ident: {
                take();
                if (at(Tok::LParen)) {
                    take();
                    auto e = mk(ExprKind::Call, t.loc);
                    e->name = t.text;
                    if (!at(Tok::RParen)) {
                        e->kids.push_back(parse_expr());
                        while (eat(Tok::Comma)) e->kids.push_back(parse_expr());
                    }
                    expect(Tok::RParen, "')'");
                    return e;
                }
                auto e = mk(ExprKind::Ident, t.loc);
                e->name = t.text;
                return e;
            }
            default: fail("expected an expression", t.loc);
        }
    }

    ExprPtr parse_postfix() {
        ExprPtr e = parse_primary();
        while (at(Tok::LBracket)) {
            SourceLoc loc = take().loc;
            auto idx = mk(ExprKind::Index, loc);
            idx->kids.push_back(std::move(e));
            idx->kids.push_back(parse_expr());
            expect(Tok::RBracket, "']'");
            e = std::move(idx);
        }
        return e;
    }

    ExprPtr parse_unary() {
        if (at(Tok::Bang) || at(Tok::Minus)) {
            const Token &t = take();
            auto e = mk(ExprKind::Unary, t.loc);
            e->name = t.kind == Tok::Bang ? "!" : "-";
            e->kids.push_back(parse_unary());
            return e;
        }
        return parse_postfix();
    }

    ExprPtr parse_binary_level(int level) {
        // levels, loosest first: 0 ||, 1 &&, 2 == !=, 3 < <= > >=, 4 + -, 5 * / %
        if (level > 5) return parse_unary();
        ExprPtr lhs = parse_binary_level(level + 1);
        while (true) {
            const char *op = nullptr;
            switch (peek().kind) {
                case Tok::OrOr: op = level == 0 ? "||" : nullptr; break;
                case Tok::AndAnd: op = level == 1 ? "&&" : nullptr; break;
                case Tok::Eq: op = level == 2 ? "==" : nullptr; break;
                case Tok::Ne: op = level == 2 ? "!=" : nullptr; break;
                case Tok::Lt: op = level == 3 ? "<" : nullptr; break;
                case Tok::Le: op = level == 3 ? "<=" : nullptr; break;
                case Tok::Gt: op = level == 3 ? ">" : nullptr; break;
                case Tok::Ge: op = level == 3 ? ">=" : nullptr; break;
                case Tok::Plus: op = level == 4 ? "+" : nullptr; break;
                case Tok::Minus: op = level == 4 ? "-" : nullptr; break;
                case Tok::Star: op = level == 5 ? "*" : nullptr; break;
                case Tok::Slash: op = level == 5 ? "/" : nullptr; break;
                case Tok::Percent: op = level == 5 ? "%" : nullptr; break;
                default: break;
            }
            if (!op) return lhs;
            SourceLoc loc = take().loc;
            auto e = mk(ExprKind::Binary, loc);
            e->name = op;
            e->kids.push_back(std::move(lhs));
            e->kids.push_back(parse_binary_level(level + 1));
            lhs = std::move(e);
        }
    }

    ExprPtr parse_expr() { return parse_binary_level(0); }

    StmtPtr mk_stmt(StmtKind k, SourceLoc loc) {
        auto s = std::make_unique<Stmt>();
        s->kind = k;
        s->loc = loc;
        return s;
    }

    // Var declarations and assignments double as for-loop init/update clauses,
    // where they appear without a trailing semicolon.
    StmtPtr parse_simple_stmt() {
        if (at(Tok::KwVar)) {
            SourceLoc loc = take().loc;
            auto s = mk_stmt(StmtKind::VarDecl, loc);
            s->name = expect(Tok::Ident, "variable name").text;
            expect(Tok::Colon, "':'");
            s->decl_type = parse_type();
            if (eat(Tok::Assign)) s->value = parse_expr();
            return s;
        }
        ExprPtr e = parse_expr();
        if (eat(Tok::Assign)) {
            if (e->kind != ExprKind::Ident && e->kind != ExprKind::Index)
                fail("assignment target must be a variable or index", e->loc);
            auto s = mk_stmt(StmtKind::Assign, e->loc);
            s->lvalue = std::move(e);
            s->value = parse_expr();
            return s;
        }
        if (e->kind != ExprKind::Call)
            fail("expression statement must be a call", e->loc);
        auto s = mk_stmt(StmtKind::ExprStmt, e->loc);
        s->value = std::move(e);
        return s;
    }

    StmtPtr parse_stmt() {
        const Token &t = peek();
        switch (t.kind) {
            case Tok::KwIf: {
                take();
                auto s = mk_stmt(StmtKind::If, t.loc);
                expect(Tok::LParen, "'('");
                s->value = parse_expr();
                expect(Tok::RParen, "')'");
                s->body = parse_block();
                if (eat(Tok::KwElse)) {
                    s->has_else = true;
                    s->else_body = parse_block();
                }
                return s;
            }
            case Tok::KwWhile: {
                take();
                auto s = mk_stmt(StmtKind::While, t.loc);
                expect(Tok::LParen, "'('");
                s->value = parse_expr();
                expect(Tok::RParen, "')'");
                s->body = parse_block();
                return s;
            }
            case Tok::KwFor: {
                take();
                auto s = mk_stmt(StmtKind::For, t.loc);
                expect(Tok::LParen, "'('");
                if (!at(Tok::Semi)) s->for_init = parse_simple_stmt();
                expect(Tok::Semi, "';'");
                s->value = parse_expr();
                expect(Tok::Semi, "';'");
                if (!at(Tok::RParen)) s->for_update = parse_simple_stmt();
                expect(Tok::RParen, "')'");
                s->body = parse_block();
                return s;
            }
            case Tok::KwReturn: {
                take();
                auto s = mk_stmt(StmtKind::Return, t.loc);
                if (!at(Tok::Semi)) s->value = parse_expr();
                expect(Tok::Semi, "';'");
                return s;
            }
            case Tok::KwAssert: {
                take();
                auto s = mk_stmt(StmtKind::Assert, t.loc);
                s->value = parse_expr();
                expect(Tok::Semi, "';'");
                return s;
            }
            default: {
                StmtPtr s = parse_simple_stmt();
                expect(Tok::Semi, "';'");
                return s;
            }
        }
    }

    Block parse_block() {
        Block b;
        expect(Tok::LBrace, "'{'");
        while (!at(Tok::RBrace) && !at(Tok::End)) b.stmts.push_back(parse_stmt());
        expect(Tok::RBrace, "'}'");
        return b;
    }

    Program parse_program_toks() {
        Program p;
        while (!at(Tok::End)) {
            const Token &t = peek();
            if (t.kind == Tok::KwVar) {
                take();
                FieldDecl f;
                f.loc = t.loc;
                f.name = expect(Tok::Ident, "field name").text;
                expect(Tok::Colon, "':'");
                f.type = parse_type();
                if (eat(Tok::Assign)) f.init = parse_expr();
                expect(Tok::Semi, "';'");
                p.fields.push_back(std::move(f));
            } else if (t.kind == Tok::KwFn) {
                take();
                Function fn;
                fn.loc = t.loc;
                fn.name = expect(Tok::Ident, "function name").text;
                expect(Tok::LParen, "'('");
                if (!at(Tok::RParen)) {
                    do {
                        Param prm;
                        prm.name = expect(Tok::Ident, "parameter name").text;
                        expect(Tok::Colon, "':'");
                        prm.type = parse_type();
                        fn.params.push_back(std::move(prm));
                    } while (eat(Tok::Comma));
                }
                expect(Tok::RParen, "')'");
                fn.ret = eat(Tok::Arrow) ? parse_type() : Type::voidt();
                fn.body = parse_block();
                p.functions.push_back(std::move(fn));
            } else {
                fail("expected 'var' or 'fn' at top level", t.loc);
            }
        }
        return p;
    }
};

}  // namespace

ParseResult parse_program(const std::string &source) {
    ParseResult r;
    try {
        Parser parser{lex(source)};
        r.program = parser.parse_program_toks();
        assign_ids(*r.program);
    } catch (const LexError &e) {
        r.error = Diag{e.message, e.loc};
    } catch (const ParseError &e) {
        r.error = e.diag;
    }
    return r;
}

}  // namespace mogi
