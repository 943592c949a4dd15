#include <map>
#include <set>

#include "mogi/minilang.hpp"

namespace mogi {

namespace {

bool is_builtin(const std::string &n) {
    return n == "fetch" || n == "alloc" || n == "len" || n == "str";
}

struct Checker {
    Program &p;
    std::vector<Diag> diags;
    std::map<std::string, const Function *> fns;
    std::vector<std::map<std::string, Type>> scopes;
    const Function *cur = nullptr;

    explicit Checker(Program &prog) : p(prog) {}

    void error(SourceLoc loc, const std::string &msg) { diags.push_back({msg, loc}); }

    void push() { scopes.emplace_back(); }
    void pop() { scopes.pop_back(); }

    bool declare(const std::string &name, const Type &t, SourceLoc loc) {
        auto &top = scopes.back();
        if (top.count(name)) {
            error(loc, "redeclaration of '" + name + "' in the same scope");
            return false;
        }
        top[name] = t;
        return true;
    }

    const Type *lookup(const std::string &name) const {
        for (auto it = scopes.rbegin(); it != scopes.rend(); ++it) {
            auto f = it->find(name);
            if (f != it->end()) return &f->second;
        }
        return nullptr;
    }

    // Strip one optional layer: optionals unwrap implicitly wherever the
    // inner type is required.
    static const Type &base(const Type &t) {
        return t.kind == TypeKind::Optional ? t.elem() : t;
    }

    static bool assignable(const Type &dst, const Type &src) {
        if (dst == src) return true;
        if (dst.kind == TypeKind::Optional &&
            (src == dst.elem() || src.kind == TypeKind::Null))
            return true;
        if (src.kind == TypeKind::Optional && dst == src.elem()) return true;
        return false;
    }

    static bool eq_comparable(const Type &a, const Type &b) {
        if (a == b)
            return a.kind == TypeKind::Int || a.kind == TypeKind::Bool ||
                   a.kind == TypeKind::String || a.kind == TypeKind::Optional ||
                   a.kind == TypeKind::Null;
        if (a.kind == TypeKind::Null) return b.kind == TypeKind::Optional;
        if (b.kind == TypeKind::Null) return a.kind == TypeKind::Optional;
        if (a.kind == TypeKind::Optional && a.elem() == b) return true;
        if (b.kind == TypeKind::Optional && b.elem() == a) return true;
        return false;
    }

    Type expr(Expr &e) {
        Type t = expr_inner(e);
        e.type = t;
        return t;
    }

    Type expr_inner(Expr &e) {
        switch (e.kind) {
            case ExprKind::IntLit: return Type::intt();
            case ExprKind::BoolLit: return Type::boolt();
            case ExprKind::StrLit: return Type::stringt();
            case ExprKind::NullLit: return Type::nullt();
            case ExprKind::ArrayLit: {
                if (e.kids.empty()) {
                    error(e.loc, "cannot infer the element type of an empty array literal");
                    return Type::array(Type::intt());
                }
                Type t0 = expr(*e.kids[0]);
                for (size_t i = 1; i < e.kids.size(); ++i) {
                    Type ti = expr(*e.kids[i]);
                    if (!(ti == t0))
                        error(e.kids[i]->loc, "array literal elements must share one type");
                }
                return Type::array(t0);
            }
            case ExprKind::Ident: {
                const Type *t = lookup(e.name);
                if (!t) {
                    error(e.loc, "use of undeclared variable '" + e.name + "'");
                    return Type::intt();
                }
                return *t;
            }
            case ExprKind::Index: {
                Type bt = expr(*e.kids[0]);
                Type it = expr(*e.kids[1]);
                if (base(bt).kind != TypeKind::Array) {
                    error(e.loc, "indexing a non-array value");
                    return Type::intt();
                }
                if (base(it).kind != TypeKind::Int)
                    error(e.kids[1]->loc, "array index must be an int");
                return base(bt).elem();
            }
            case ExprKind::Call: return call(e);
            case ExprKind::Unary: {
                Type t = expr(*e.kids[0]);
                if (e.name == "-") {
                    if (base(t).kind != TypeKind::Int)
                        error(e.loc, "unary '-' needs an int");
                    return Type::intt();
                }
                if (base(t).kind != TypeKind::Bool) error(e.loc, "'!' needs a bool");
                return Type::boolt();
            }
            case ExprKind::Binary: return binary(e);
        }
        return Type::voidt();
    }

    Type call(Expr &e) {
        std::vector<Type> args;
        for (auto &k : e.kids) args.push_back(expr(*k));
        const std::string &n = e.name;
        auto arity = [&](size_t want) {
            if (args.size() == want) return true;
            error(e.loc, "'" + n + "' takes " + std::to_string(want) + " argument(s)");
            return false;
        };
        if (n == "fetch") {
            if (arity(1) && base(args[0]).kind != TypeKind::String)
                error(e.loc, "fetch takes a string url");
            return Type::stringt();
        }
        if (n == "alloc") {
            if (!arity(2)) return Type::array(Type::intt());
            if (base(args[0]).kind != TypeKind::Int)
                error(e.loc, "alloc count must be an int");
            if (args[1].kind == TypeKind::Null || args[1].kind == TypeKind::Void) {
                error(e.loc, "alloc fill value must have a concrete type");
                return Type::array(Type::intt());
            }
            return Type::array(args[1]);
        }
        if (n == "len") {
            if (arity(1)) {
                TypeKind k = base(args[0]).kind;
                if (k != TypeKind::String && k != TypeKind::Array)
                    error(e.loc, "len takes a string or an array");
            }
            return Type::intt();
        }
        if (n == "str") {
            if (arity(1) && base(args[0]).kind != TypeKind::Int)
                error(e.loc, "str takes an int");
            return Type::stringt();
        }
        auto it = fns.find(n);
        if (it == fns.end()) {
            error(e.loc, "call to unknown function '" + n + "'");
            return Type::intt();
        }
        const Function *f = it->second;
        if (args.size() != f->params.size()) {
            error(e.loc, "'" + n + "' takes " + std::to_string(f->params.size()) +
                             " argument(s)");
        } else {
            for (size_t i = 0; i < args.size(); ++i)
                if (!assignable(f->params[i].type, args[i]))
                    error(e.kids[i]->loc, "argument " + std::to_string(i + 1) + " of '" +
                                              n + "' expects " +
                                              type_name(f->params[i].type));
        }
        return f->ret;
    }

    Type binary(Expr &e) {
        Type l = expr(*e.kids[0]);
        Type r = expr(*e.kids[1]);
        const std::string &op = e.name;
        if (op == "+") {
            if (base(l).kind == TypeKind::Int && base(r).kind == TypeKind::Int)
                return Type::intt();
            if (base(l).kind == TypeKind::String && base(r).kind == TypeKind::String)
                return Type::stringt();
            error(e.loc, "'+' needs two ints or two strings");
            return Type::intt();
        }
        if (op == "-" || op == "*" || op == "/" || op == "%") {
            if (base(l).kind != TypeKind::Int || base(r).kind != TypeKind::Int)
                error(e.loc, "'" + op + "' needs two ints");
            return Type::intt();
        }
        if (op == "<" || op == "<=" || op == ">" || op == ">=") {
            if (base(l).kind != TypeKind::Int || base(r).kind != TypeKind::Int)
                error(e.loc, "'" + op + "' compares ints");
            return Type::boolt();
        }
        if (op == "==" || op == "!=") {
            if (!eq_comparable(l, r))
                error(e.loc, "'" + op + "' operands are not comparable");
            return Type::boolt();
        }
        if (base(l).kind != TypeKind::Bool || base(r).kind != TypeKind::Bool)
            error(e.loc, "'" + op + "' needs two bools");
        return Type::boolt();
    }

    void condition(Expr &c, const char *what) {
        Type t = expr(c);
        if (base(t).kind != TypeKind::Bool)
            error(c.loc, std::string(what) + " condition must be a bool");
    }

    void stmt(Stmt &s) {
        switch (s.kind) {
            case StmtKind::VarDecl: {
                if (s.decl_type.kind == TypeKind::Void || s.decl_type.kind == TypeKind::Null) {
                    error(s.loc, "variable '" + s.name + "' needs a value type");
                    break;
                }
                if (s.value) {
                    Type vt = expr(*s.value);
                    if (!assignable(s.decl_type, vt))
                        error(s.loc, "cannot initialize " + type_name(s.decl_type) +
                                         " '" + s.name + "' from " + type_name(vt));
                }
                declare(s.name, s.decl_type, s.loc);
                break;
            }
            case StmtKind::Assign: {
                Type lt = expr(*s.lvalue);
                if (s.lvalue->kind == ExprKind::Ident && !lookup(s.lvalue->name))
                    break;  // undeclared already reported
                Type vt = expr(*s.value);
                if (!assignable(lt, vt))
                    error(s.loc, "cannot assign " + type_name(vt) + " to " + type_name(lt));
                break;
            }
            case StmtKind::If:
                condition(*s.value, "if");
                push();
                block(s.body);
                pop();
                if (s.has_else) {
                    push();
                    block(s.else_body);
                    pop();
                }
                break;
            case StmtKind::While:
                condition(*s.value, "while");
                push();
                block(s.body);
                pop();
                break;
            case StmtKind::For:
                push();
                if (s.for_init) stmt(*s.for_init);
                condition(*s.value, "for");
                if (s.for_update) stmt(*s.for_update);
                push();
                block(s.body);
                pop();
                pop();
                break;
            case StmtKind::Return: {
                if (cur->ret.kind == TypeKind::Void) {
                    if (s.value) error(s.loc, "'" + cur->name + "' returns nothing");
                } else if (!s.value) {
                    error(s.loc, "'" + cur->name + "' must return " + type_name(cur->ret));
                } else {
                    Type vt = expr(*s.value);
                    if (!assignable(cur->ret, vt))
                        error(s.loc, "cannot return " + type_name(vt) + " from '" +
                                         cur->name + "'");
                }
                break;
            }
            case StmtKind::Assert: {
                Type t = expr(*s.value);
                if (base(t).kind != TypeKind::Bool)
                    error(s.loc, "assert takes a bool");
                break;
            }
            case StmtKind::ExprStmt:
                expr(*s.value);
                break;
        }
    }

    void block(Block &b) {
        for (auto &s : b.stmts) stmt(*s);
    }

    void run() {
        for (auto &f : p.functions) {
            if (is_builtin(f.name)) {
                error(f.loc, "'" + f.name + "' is a builtin name");
                continue;
            }
            if (fns.count(f.name))
                error(f.loc, "duplicate function '" + f.name + "'");
            else
                fns[f.name] = &f;
            if (f.is_test()) {
                if (!f.params.empty())
                    error(f.loc, "test functions take no parameters");
                if (f.ret.kind != TypeKind::Void)
                    error(f.loc, "test functions return nothing");
            }
        }

        push();  // field scope
        for (auto &f : p.fields) {
            if (f.type.kind == TypeKind::Void || f.type.kind == TypeKind::Null) {
                error(f.loc, "field '" + f.name + "' needs a value type");
                continue;
            }
            if (f.init) {
                Type it = expr(*f.init);
                if (!assignable(f.type, it))
                    error(f.loc, "cannot initialize " + type_name(f.type) + " '" +
                                     f.name + "' from " + type_name(it));
            }
            declare(f.name, f.type, f.loc);
        }

        for (auto &f : p.functions) {
            cur = &f;
            push();  // parameter scope
            for (auto &prm : f.params) declare(prm.name, prm.type, f.loc);
            push();  // body scope (may shadow parameters)
            block(f.body);
            pop();
            pop();
            cur = nullptr;
        }
        pop();
    }
};

}  // namespace

std::vector<Diag> typecheck(Program &p) {
    Checker c(p);
    c.run();
    return c.diags;
}

}  // namespace mogi
