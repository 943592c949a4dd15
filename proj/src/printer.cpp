#include <sstream>

#include "mogi/minilang.hpp"

namespace mogi {

std::string Diag::render() const {
    std::ostringstream os;
    os << loc.line << ":" << loc.col << ": " << message;
    return os.str();
}

std::string type_name(const Type &t) {
    switch (t.kind) {
        case TypeKind::Void: return "void";
        case TypeKind::Int: return "int";
        case TypeKind::Bool: return "bool";
        case TypeKind::String: return "string";
        case TypeKind::Null: return "null";
        case TypeKind::Array: return "array<" + type_name(t.elem()) + ">";
        case TypeKind::Optional: return "optional<" + type_name(t.elem()) + ">";
    }
    return "?";
}

namespace {

int prec_of(const Expr &e) {
    if (e.kind == ExprKind::Unary) return 6;
    if (e.kind != ExprKind::Binary) return 7;
    const std::string &op = e.name;
    if (op == "||") return 0;
    if (op == "&&") return 1;
    if (op == "==" || op == "!=") return 2;
    if (op == "<" || op == "<=" || op == ">" || op == ">=") return 3;
    if (op == "+" || op == "-") return 4;
    return 5;  // * / %
}

std::string escape(const std::string &s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '\\': out += "\\\\"; break;
            case '"': out += "\\\""; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

struct Printer {
    std::ostringstream os;

    void expr(const Expr &e) {
        switch (e.kind) {
            case ExprKind::IntLit: os << e.ival; break;
            case ExprKind::BoolLit: os << (e.bval ? "true" : "false"); break;
            case ExprKind::StrLit: os << '"' << escape(e.sval) << '"'; break;
            case ExprKind::NullLit: os << "null"; break;
            case ExprKind::ArrayLit: {
                os << "[";
                for (size_t i = 0; i < e.kids.size(); ++i) {
                    if (i) os << ", ";
                    expr(*e.kids[i]);
                }
                os << "]";
                break;
            }
            case ExprKind::Ident: os << e.name; break;
            case ExprKind::Index: {
                child(*e.kids[0], 7);
                os << "[";
                expr(*e.kids[1]);
                os << "]";
                break;
            }
            case ExprKind::Call: {
                os << e.name << "(";
                for (size_t i = 0; i < e.kids.size(); ++i) {
                    if (i) os << ", ";
                    expr(*e.kids[i]);
                }
                os << ")";
                break;
            }
            case ExprKind::Unary: {
                os << e.name;
                child(*e.kids[0], 6);
                break;
            }
            case ExprKind::Binary: {
                int p = prec_of(e);
                child(*e.kids[0], p);       // left child may share the level
                os << " " << e.name << " ";
                child(*e.kids[1], p + 1);   // right child must bind tighter
                break;
            }
        }
    }

    void child(const Expr &e, int min_prec) {
        if (prec_of(e) < min_prec) {
            os << "(";
            expr(e);
            os << ")";
        } else {
            expr(e);
        }
    }

    void indent(int depth) {
        for (int i = 0; i < depth; ++i) os << "    ";
    }

    // for-loop init/update clause: a statement without its semicolon
    void simple(const Stmt &s) {
        if (s.kind == StmtKind::VarDecl) {
            os << "var " << s.name << ": " << type_name(s.decl_type);
            if (s.value) {
                os << " = ";
                expr(*s.value);
            }
        } else if (s.kind == StmtKind::Assign) {
            expr(*s.lvalue);
            os << " = ";
            expr(*s.value);
        } else {
            expr(*s.value);  // ExprStmt
        }
    }

    void stmt(const Stmt &s, int depth) {
        indent(depth);
        switch (s.kind) {
            case StmtKind::VarDecl:
            case StmtKind::Assign:
            case StmtKind::ExprStmt:
                simple(s);
                os << ";\n";
                break;
            case StmtKind::If:
                os << "if (";
                expr(*s.value);
                os << ") {\n";
                block(s.body, depth + 1);
                indent(depth);
                if (s.has_else) {
                    os << "} else {\n";
                    block(s.else_body, depth + 1);
                    indent(depth);
                }
                os << "}\n";
                break;
            case StmtKind::While:
                os << "while (";
                expr(*s.value);
                os << ") {\n";
                block(s.body, depth + 1);
                indent(depth);
                os << "}\n";
                break;
            case StmtKind::For:
                os << "for (";
                if (s.for_init) simple(*s.for_init);
                os << "; ";
                expr(*s.value);
                os << "; ";
                if (s.for_update) simple(*s.for_update);
                os << ") {\n";
                block(s.body, depth + 1);
                indent(depth);
                os << "}\n";
                break;
            case StmtKind::Return:
                os << "return";
                if (s.value) {
                    os << " ";
                    expr(*s.value);
                }
                os << ";\n";
                break;
            case StmtKind::Assert:
                os << "assert ";
                expr(*s.value);
                os << ";\n";
                break;
        }
    }

    void block(const Block &b, int depth) {
        for (auto &s : b.stmts) stmt(*s, depth);
    }

    void program(const Program &p) {
        for (auto &f : p.fields) {
            os << "var " << f.name << ": " << type_name(f.type);
            if (f.init) {
                os << " = ";
                expr(*f.init);
            }
            os << ";\n";
        }
        for (size_t i = 0; i < p.functions.size(); ++i) {
            if (i > 0 || !p.fields.empty()) os << "\n";
            const Function &fn = p.functions[i];
            os << "fn " << fn.name << "(";
            for (size_t j = 0; j < fn.params.size(); ++j) {
                if (j) os << ", ";
                os << fn.params[j].name << ": " << type_name(fn.params[j].type);
            }
            os << ")";
            if (fn.ret.kind != TypeKind::Void) os << " -> " << type_name(fn.ret);
            os << " {\n";
            block(fn.body, 1);
            os << "}\n";
        }
    }
};

}  // namespace

std::string print_program(const Program &p) {
    Printer pr;
    pr.program(p);
    return pr.os.str();
}

std::string expr_text(const Expr &e) {
    Printer pr;
    pr.expr(e);
    return pr.os.str();
}

}  // namespace mogi
