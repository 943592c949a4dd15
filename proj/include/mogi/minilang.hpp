#pragma once

// Front end for the mini language: parse, type check, pretty-print, and the
// dense NodeId numbering used by patches.
//
// ID contract: one pre-order walk over the program assigns consecutive ids
// starting at 0 to every statement and every call expression (field
// initializers included for calls). Within a statement the statement itself
// is numbered first, then its syntactic components left to right. Dense:
// ids cover 0..N-1 with N = statement count + call count.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mogi/ast.hpp"

namespace mogi {

struct Diag {
    std::string message;
    SourceLoc loc;
    std::string render() const;
};

struct ParseResult {
    std::optional<Program> program;
    std::optional<Diag> error;
    bool ok() const { return program.has_value(); }
};

// Parse source text. On success the program already carries NodeIds.
ParseResult parse_program(const std::string &source);

// Type check a program in place (annotates Expr::type). Returns all errors;
// empty means well typed. Checks: declaration before use within a scope
// chain, no same-scope redeclaration (shadowing in nested scopes is fine),
// operator/call/assignment typing, bool conditions, assert takes bool,
// test_* functions take no parameters and return nothing.
std::vector<Diag> typecheck(Program &p);

// Canonical source form. parse(print(p)) reproduces the same tree and the
// same NodeIds.
std::string print_program(const Program &p);

// Re-assign NodeIds (pre-order, dense). Returns the number of ids assigned.
int assign_ids(Program &p);

enum class NodeKindTag { Statement, CallExpr, Absent };

struct IdEntry {
    NodeKindTag kind = NodeKindTag::Absent;
    std::string function;     // enclosing function; empty for field-init calls
    bool in_field_init = false;
};

struct IdIndex {
    std::vector<IdEntry> entries;
    NodeKindTag kind_of(NodeId id) const {
        if (id < 0 || id >= (NodeId)entries.size()) return NodeKindTag::Absent;
        return entries[(size_t)id].kind;
    }
    int total() const { return (int)entries.size(); }
};

IdIndex build_id_index(const Program &p);

// Statement lookup by original id in a (possibly patched) tree. Returns the
// owning block and position, or nullptr when the id is gone.
struct StmtRef {
    Block *block = nullptr;
    size_t index = 0;
    Stmt *stmt = nullptr;
};
StmtRef find_stmt(Program &p, NodeId id);

// Call-expression lookup by original id. `enclosing` is the innermost
// statement containing the call, null when the call sits in a field
// initializer (`field` then names it).
struct CallRef {
    Expr *call = nullptr;
    Stmt *enclosing = nullptr;
    Function *function = nullptr;
    FieldDecl *field = nullptr;
};
CallRef find_call(Program &p, NodeId id);

// Visits every call expression (id-stripped ones included) in walk order.
void walk_calls(Program &p,
                const std::function<void(Expr &, Stmt *, Function *, FieldDecl *)> &fn);

// Visits every statement (id-stripped ones included) in walk order.
void walk_stmts(Program &p, const std::function<void(Stmt &, Block &, size_t)> &fn);

// Locates a statement by identity rather than id (inserted material has none).
StmtRef find_stmt_ptr(Program &p, const Stmt *s);

// Canonical one-line text of an expression; two calls are cachable-equal
// exactly when their texts match.
std::string expr_text(const Expr &e);

}  // namespace mogi
