#include <map>

#include "mogi/operators.hpp"

namespace mogi {

namespace {

struct Site {
    Expr *call;
    Stmt *enclosing;
    Function *fn;
};

// token-identical call sites in walk order; field initializers and test
// functions are invisible to the cache operators
std::vector<Site> matching_sites(Program &p, const std::string &key,
                                 const Function *only_fn) {
    std::vector<Site> out;
    walk_calls(p, [&](Expr &e, Stmt *enc, Function *fn, FieldDecl *fld) {
        if (fld || !fn || fn->is_test()) return;
        if (only_fn && fn != only_fn) return;
        if (expr_text(e) == key) out.push_back({&e, enc, fn});
    });
    return out;
}

std::string fresh_cached_name(Program &p) {
    int max_k = 0;
    auto consider = [&](const std::string &n) {
        if (n.rfind("cachedVar", 0) != 0) return;
        std::string tail = n.substr(9);
        if (tail.empty()) return;
        for (char c : tail)
            if (!isdigit((unsigned char)c)) return;
        int k = std::stoi(tail);
        if (k > max_k) max_k = k;
    };
    for (auto &f : p.fields) consider(f.name);
    for (auto &fn : p.functions)
        for (auto &prm : fn.params) consider(prm.name);
    walk_stmts(p, [&](Stmt &s, Block &, size_t) {
        if (s.kind == StmtKind::VarDecl) consider(s.name);
        if (s.for_init && s.for_init->kind == StmtKind::VarDecl)
            consider(s.for_init->name);
    });
    return "cachedVar" + std::to_string(max_k + 1);
}

void rewrite_to_ident(Expr &e, const std::string &name) {
    e.kind = ExprKind::Ident;
    e.name = name;
    e.kids.clear();
    e.call_id = kNoId;
    e.ival = 0;
    e.bval = false;
    e.sval.clear();
    e.type = Type();
}

ExprPtr make_ident(const std::string &name) {
    auto e = std::make_unique<Expr>();
    e->kind = ExprKind::Ident;
    e->name = name;
    return e;
}

ExprPtr make_null() {
    auto e = std::make_unique<Expr>();
    e->kind = ExprKind::NullLit;
    return e;
}

}  // namespace

std::vector<CacheTarget> method_cache_targets(const Program &p) {
    std::vector<CacheTarget> out;
    std::map<std::pair<const Function *, std::string>, size_t> groups;
    std::vector<CacheTarget> raw;
    walk_calls(const_cast<Program &>(p),
               [&](Expr &e, Stmt *, Function *fn, FieldDecl *fld) {
                   if (fld || !fn || fn->is_test()) return;
                   std::string key = expr_text(e);
                   auto [it, fresh] = groups.emplace(std::make_pair(fn, key), raw.size());
                   if (fresh) {
                       CacheTarget t;
                       t.call = e.call_id;
                       t.enclosing_function = fn->name;
                       t.scope = CacheTarget::Scope::Method;
                       t.callee = e.name;
                       t.key = key;
                       raw.push_back(std::move(t));
                   }
                   raw[it->second].occurrence_ids.push_back(e.call_id);
               });
    for (auto &t : raw)
        if (t.occurrence_ids.size() >= 2) out.push_back(std::move(t));
    return out;
}

std::vector<CacheTarget> class_cache_targets(const Program &p) {
    std::vector<CacheTarget> out;
    std::map<std::string, size_t> groups;
    walk_calls(const_cast<Program &>(p),
               [&](Expr &e, Stmt *, Function *fn, FieldDecl *fld) {
                   if (fld || !fn || fn->is_test()) return;
                   std::string key = expr_text(e);
                   auto [it, fresh] = groups.emplace(key, out.size());
                   if (fresh) {
                       CacheTarget t;
                       t.call = e.call_id;
                       t.enclosing_function = fn->name;
                       t.scope = CacheTarget::Scope::Class;
                       t.callee = e.name;
                       t.key = key;
                       out.push_back(std::move(t));
                   }
                   out[it->second].occurrence_ids.push_back(e.call_id);
               });
    return out;
}

bool apply_method_cache(Program &p, NodeId call) {
    CallRef ref = find_call(p, call);
    if (!ref.call || !ref.function || ref.field) return false;
    if (ref.function->is_test()) return false;
    Type ret = ref.call->type;
    if (ret.kind == TypeKind::Void) return false;

    std::string key = expr_text(*ref.call);
    std::vector<Site> occs = matching_sites(p, key, ref.function);
    if (occs.size() < 2) return false;

    StmtRef at = find_stmt_ptr(p, occs[0].enclosing);
    if (!at.stmt) return false;

    std::string name = fresh_cached_name(p);
    auto decl = std::make_unique<Stmt>();
    decl->kind = StmtKind::VarDecl;
    decl->loc = occs[0].enclosing->loc;
    decl->name = name;
    decl->decl_type = ret;
    decl->value = clone_expr(*ref.call, /*keep_ids=*/false);

    for (auto &site : occs) rewrite_to_ident(*site.call, name);
    at.block->stmts.insert(at.block->stmts.begin() + (long)at.index, std::move(decl));
    return true;
}

bool apply_class_cache(Program &p, NodeId call) {
    CallRef ref = find_call(p, call);
    if (!ref.call || !ref.function || ref.field) return false;
    if (ref.function->is_test()) return false;
    Type ret = ref.call->type;
    // optional<optional<T>> is not a type, so an optional-returning callee
    // has no null-distinguishable cache slot
    if (ret.kind == TypeKind::Void || ret.kind == TypeKind::Optional) return false;

    std::string key = expr_text(*ref.call);
    std::vector<Site> occs = matching_sites(p, key, nullptr);
    if (occs.empty()) return false;

    std::string name = fresh_cached_name(p);
    ExprPtr call_copy = clone_expr(*ref.call, /*keep_ids=*/false);

    FieldDecl field;
    field.name = name;
    field.type = Type::optional(ret);
    field.init = make_null();
    p.fields.push_back(std::move(field));

    for (auto &site : occs) rewrite_to_ident(*site.call, name);

    // one null guard per distinct enclosing statement, in walk order
    std::vector<Stmt *> guarded;
    for (auto &site : occs) {
        bool seen = false;
        for (Stmt *g : guarded) seen = seen || g == site.enclosing;
        if (seen) continue;
        guarded.push_back(site.enclosing);

        StmtRef at = find_stmt_ptr(p, site.enclosing);
        if (!at.stmt) continue;
        auto assign = std::make_unique<Stmt>();
        assign->kind = StmtKind::Assign;
        assign->lvalue = make_ident(name);
        assign->value = clone_expr(*call_copy, false);
        auto guard = std::make_unique<Stmt>();
        guard->kind = StmtKind::If;
        guard->loc = site.enclosing->loc;
        guard->value = std::make_unique<Expr>();
        guard->value->kind = ExprKind::Binary;
        guard->value->name = "==";
        guard->value->kids.push_back(make_ident(name));
        guard->value->kids.push_back(make_null());
        guard->body.stmts.push_back(std::move(assign));
        at.block->stmts.insert(at.block->stmts.begin() + (long)at.index,
                               std::move(guard));
    }
    return true;
}

}  // namespace mogi
