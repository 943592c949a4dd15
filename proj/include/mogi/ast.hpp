#pragma once

// AST for the mini imperative language the workbench improves.
// Statements and call expressions carry NodeIds assigned by a single
// pre-order walk of the whole program (see ids.cpp); everything else is
// plain tree data with value-semantic clone helpers.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mogi {

using NodeId = std::int32_t;
constexpr NodeId kNoId = -1;

struct SourceLoc {
    int line = 0;
    int col = 0;
};

// ---------------------------------------------------------------- types

enum class TypeKind { Void, Int, Bool, String, Array, Optional, Null };

struct Type {
    TypeKind kind = TypeKind::Void;
    std::vector<Type> args;  // element type for Array/Optional

    static Type voidt() { return {TypeKind::Void, {}}; }
    static Type intt() { return {TypeKind::Int, {}}; }
    static Type boolt() { return {TypeKind::Bool, {}}; }
    static Type stringt() { return {TypeKind::String, {}}; }
    static Type nullt() { return {TypeKind::Null, {}}; }
    static Type array(Type elem) { return {TypeKind::Array, {std::move(elem)}}; }
    static Type optional(Type elem) { return {TypeKind::Optional, {std::move(elem)}}; }

    const Type &elem() const { return args.at(0); }
    bool operator==(const Type &o) const {
        return kind == o.kind && args == o.args;
    }
};

std::string type_name(const Type &t);

// ---------------------------------------------------------------- expressions

enum class ExprKind { IntLit, BoolLit, StrLit, NullLit, ArrayLit, Ident, Index, Call, Unary, Binary };

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Expr {
    ExprKind kind;
    SourceLoc loc;

    std::int64_t ival = 0;   // IntLit
    bool bval = false;       // BoolLit
    std::string sval;        // StrLit (unescaped)
    std::string name;        // Ident name, Call callee, Unary/Binary operator text

    // Children. ArrayLit: elements; Index: [base, index]; Call: arguments;
    // Unary: [operand]; Binary: [lhs, rhs].
    std::vector<ExprPtr> kids;

    NodeId call_id = kNoId;  // set on Call nodes only

    // Filled in by the type checker.
    Type type;
};

// ---------------------------------------------------------------- statements

enum class StmtKind { VarDecl, Assign, If, While, For, Return, Assert, ExprStmt };

struct Stmt;
using StmtPtr = std::unique_ptr<Stmt>;

struct Block {
    std::vector<StmtPtr> stmts;
};

struct Stmt {
    StmtKind kind;
    NodeId id = kNoId;
    SourceLoc loc;

    // VarDecl: name/decl_type/init(optional)
    // Assign: lvalue (Ident or Index expr), value
    std::string name;
    Type decl_type;
    ExprPtr lvalue;
    ExprPtr value;  // VarDecl init, Assign rhs, Return value, Assert cond, ExprStmt expr, If/While/For cond

    Block body;       // If then-block, While/For body
    Block else_body;  // If else-block
    bool has_else = false;

    // For loops only. init/update reuse Stmt but never carry NodeIds and are
    // not addressable as statements; calls inside them are still call nodes.
    StmtPtr for_init;    // VarDecl or Assign, may be null
    StmtPtr for_update;  // Assign or ExprStmt, may be null
};

// ---------------------------------------------------------------- program

struct Param {
    std::string name;
    Type type;
};

struct FieldDecl {
    std::string name;
    Type type;
    ExprPtr init;  // may be null (type default)
    SourceLoc loc;
};

struct Function {
    std::string name;
    std::vector<Param> params;
    Type ret;
    Block body;
    SourceLoc loc;
    bool is_test() const { return name.rfind("test_", 0) == 0; }
};

struct Program {
    std::vector<FieldDecl> fields;
    std::vector<Function> functions;

    const Function *find_function(const std::string &n) const {
        for (auto &f : functions)
            if (f.name == n) return &f;
        return nullptr;
    }
};

// ---------------------------------------------------------------- clone

// keep_ids=true preserves NodeIds (working copies during patch application);
// keep_ids=false strips them (material inserted by Copy/Replace is not
// addressable by later edits).
ExprPtr clone_expr(const Expr &e, bool keep_ids);
StmtPtr clone_stmt(const Stmt &s, bool keep_ids);
Block clone_block(const Block &b, bool keep_ids);
Program clone_program(const Program &p, bool keep_ids);

}  // namespace mogi
