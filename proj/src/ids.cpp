#include <functional>

#include "mogi/minilang.hpp"

namespace mogi {

namespace {

// One traversal defines the id order for every use below: fields first (their
// initializer expressions), then functions in program order. Statement first,
// then its syntactic components left to right; a call before its arguments.
struct Walk {
    std::function<void(Stmt &, Block &, size_t)> stmt_fn;
    std::function<void(Expr &, Stmt *, Function *, FieldDecl *)> call_fn;
    Function *cur_fn = nullptr;
    FieldDecl *cur_field = nullptr;

    void expr(Expr *e, Stmt *enclosing) {
        if (!e) return;
        if (e->kind == ExprKind::Call && call_fn)
            call_fn(*e, enclosing, cur_fn, cur_field);
        for (auto &k : e->kids) expr(k.get(), enclosing);
    }

    // for-init / for-update: not statements themselves, but their
    // expressions belong to the enclosing for.
    void header(Stmt *s, Stmt *enclosing) {
        if (!s) return;
        expr(s->lvalue.get(), enclosing);
        expr(s->value.get(), enclosing);
    }

    void stmt(Stmt &s, Block &owner, size_t idx) {
        if (stmt_fn) stmt_fn(s, owner, idx);
        switch (s.kind) {
            case StmtKind::VarDecl:
            case StmtKind::Return:
            case StmtKind::Assert:
            case StmtKind::ExprStmt:
                expr(s.value.get(), &s);
                break;
            case StmtKind::Assign:
                expr(s.lvalue.get(), &s);
                expr(s.value.get(), &s);
                break;
            case StmtKind::If:
                expr(s.value.get(), &s);
                block(s.body);
                block(s.else_body);
                break;
            case StmtKind::While:
                expr(s.value.get(), &s);
                block(s.body);
                break;
            case StmtKind::For:
                header(s.for_init.get(), &s);
                expr(s.value.get(), &s);
                header(s.for_update.get(), &s);
                block(s.body);
                break;
        }
    }

    void block(Block &b) {
        for (size_t i = 0; i < b.stmts.size(); ++i) stmt(*b.stmts[i], b, i);
    }

    void program(Program &p) {
        for (auto &f : p.fields) {
            cur_field = &f;
            expr(f.init.get(), nullptr);
            cur_field = nullptr;
        }
        for (auto &fn : p.functions) {
            cur_fn = &fn;
            block(fn.body);
            cur_fn = nullptr;
        }
    }
};

}  // namespace

int assign_ids(Program &p) {
    NodeId next = 0;
    Walk w;
    w.stmt_fn = [&](Stmt &s, Block &, size_t) { s.id = next++; };
    w.call_fn = [&](Expr &e, Stmt *, Function *, FieldDecl *) { e.call_id = next++; };
    w.program(p);
    return next;
}

IdIndex build_id_index(const Program &p) {
    IdIndex idx;
    Walk w;
    w.stmt_fn = [&](Stmt &s, Block &, size_t) {
        IdEntry e;
        e.kind = NodeKindTag::Statement;
        e.function = w.cur_fn ? w.cur_fn->name : "";
        idx.entries.push_back(e);
        (void)s;
    };
    w.call_fn = [&](Expr &, Stmt *, Function *fn, FieldDecl *fld) {
        IdEntry e;
        e.kind = NodeKindTag::CallExpr;
        e.function = fn ? fn->name : "";
        e.in_field_init = fld != nullptr;
        idx.entries.push_back(e);
    };
    w.program(const_cast<Program &>(p));
    return idx;
}

StmtRef find_stmt(Program &p, NodeId id) {
    StmtRef ref;
    if (id == kNoId) return ref;
    Walk w;
    w.stmt_fn = [&](Stmt &s, Block &b, size_t i) {
        if (s.id == id) ref = {&b, i, &s};
    };
    w.program(p);
    return ref;
}

CallRef find_call(Program &p, NodeId id) {
    CallRef ref;
    if (id == kNoId) return ref;
    Walk w;
    w.call_fn = [&](Expr &e, Stmt *enclosing, Function *fn, FieldDecl *fld) {
        if (e.call_id == id) ref = {&e, enclosing, fn, fld};
    };
    w.program(p);
    return ref;
}

void walk_calls(Program &p,
                const std::function<void(Expr &, Stmt *, Function *, FieldDecl *)> &fn) {
    Walk w;
    w.call_fn = fn;
    w.program(p);
}

void walk_stmts(Program &p, const std::function<void(Stmt &, Block &, size_t)> &fn) {
    Walk w;
    w.stmt_fn = fn;
    w.program(p);
}

StmtRef find_stmt_ptr(Program &p, const Stmt *s) {
    StmtRef ref;
    if (!s) return ref;
    Walk w;
    w.stmt_fn = [&](Stmt &cand, Block &b, size_t i) {
        if (&cand == s) ref = {&b, i, &cand};
    };
    w.program(p);
    return ref;
}

ExprPtr clone_expr(const Expr &e, bool keep_ids) {
    auto c = std::make_unique<Expr>();
    c->kind = e.kind;
    c->loc = e.loc;
    c->ival = e.ival;
    c->bval = e.bval;
    c->sval = e.sval;
    c->name = e.name;
    c->call_id = keep_ids ? e.call_id : kNoId;
    c->type = e.type;
    c->kids.reserve(e.kids.size());
    for (auto &k : e.kids) c->kids.push_back(clone_expr(*k, keep_ids));
    return c;
}

StmtPtr clone_stmt(const Stmt &s, bool keep_ids) {
    auto c = std::make_unique<Stmt>();
    c->kind = s.kind;
    c->id = keep_ids ? s.id : kNoId;
    c->loc = s.loc;
    c->name = s.name;
    c->decl_type = s.decl_type;
    if (s.lvalue) c->lvalue = clone_expr(*s.lvalue, keep_ids);
    if (s.value) c->value = clone_expr(*s.value, keep_ids);
    c->body = clone_block(s.body, keep_ids);
    c->else_body = clone_block(s.else_body, keep_ids);
    c->has_else = s.has_else;
    if (s.for_init) c->for_init = clone_stmt(*s.for_init, keep_ids);
    if (s.for_update) c->for_update = clone_stmt(*s.for_update, keep_ids);
    return c;
}

Block clone_block(const Block &b, bool keep_ids) {
    Block c;
    c.stmts.reserve(b.stmts.size());
    for (auto &s : b.stmts) c.stmts.push_back(clone_stmt(*s, keep_ids));
    return c;
}

Program clone_program(const Program &p, bool keep_ids) {
    Program c;
    c.fields.reserve(p.fields.size());
    for (auto &f : p.fields) {
        FieldDecl fd;
        fd.name = f.name;
        fd.type = f.type;
        if (f.init) fd.init = clone_expr(*f.init, keep_ids);
        fd.loc = f.loc;
        c.fields.push_back(std::move(fd));
    }
    c.functions.reserve(p.functions.size());
    for (auto &fn : p.functions) {
        Function g;
        g.name = fn.name;
        g.params = fn.params;
        g.ret = fn.ret;
        g.body = clone_block(fn.body, keep_ids);
        g.loc = fn.loc;
        c.functions.push_back(std::move(g));
    }
    return c;
}

}  // namespace mogi
