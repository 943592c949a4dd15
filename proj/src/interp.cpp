#include <cstdint>
#include <stdexcept>

#include "mogi/interp.hpp"

namespace mogi {

namespace {

constexpr int kMaxCallDepth = 512;
constexpr std::int64_t kMaxAllocElems = 1'000'000;

struct Value {
    enum class K { Int, Bool, Str, Array, Null };
    K k = K::Int;
    std::int64_t i = 0;
    bool b = false;
    std::string s;
    std::vector<Value> elems;

    long long bytes() const {
        switch (k) {
            case K::Int: return 8;
            case K::Bool: return 1;
            case K::Str: return 16 + (long long)s.size();
            case K::Null: return 8;
            case K::Array: {
                long long t = 16;
                for (auto &e : elems) t += e.bytes();
                return t;
            }
        }
        return 0;
    }

    static Value of_int(std::int64_t v) {
        Value x;
        x.k = K::Int;
        x.i = v;
        return x;
    }
    static Value of_bool(bool v) {
        Value x;
        x.k = K::Bool;
        x.b = v;
        return x;
    }
    static Value of_str(std::string v) {
        Value x;
        x.k = K::Str;
        x.s = std::move(v);
        return x;
    }
    static Value of_null() {
        Value x;
        x.k = K::Null;
        return x;
    }
};

struct Binding {
    Value v;
    bool opt_slot = false;  // declared optional: +8 bytes for the wrapper
    long long bytes() const { return (opt_slot ? 8 : 0) + v.bytes(); }
};

struct RuntimeErr {
    std::string msg;
};
struct AssertFailSig {
    std::string msg;
};
struct BudgetExceeded {};
struct ReturnSig {
    Value v;
    bool has = false;
};

using Scope = std::map<std::string, Binding>;
using Frame = std::vector<Scope>;

struct Interp {
    const Program &p;
    const Fixtures &fx;
    long long budget;
    std::set<NodeId> *coverage;

    // per-test counters
    long long steps = 0;
    long long live = 0;
    long long peak = 0;
    long long net = 0;
    int depth = 0;

    std::map<std::string, Binding> fields;
    std::vector<Frame> frames;

    Interp(const Program &prog, const Fixtures &fixtures, long long step_budget,
           std::set<NodeId> *cov)
        : p(prog), fx(fixtures), budget(step_budget), coverage(cov) {}

    void step(long long n = 1) {
        steps += n;
        if (steps > budget) throw BudgetExceeded{};
    }

    void add_live(long long delta) {
        live += delta;
        if (live > peak) peak = live;
    }

    // ---------------------------------------------------------- environment

    Binding *lookup(const std::string &name) {
        if (!frames.empty()) {
            Frame &f = frames.back();
            for (auto it = f.rbegin(); it != f.rend(); ++it) {
                auto b = it->find(name);
                if (b != it->end()) return &b->second;
            }
        }
        auto b = fields.find(name);
        return b != fields.end() ? &b->second : nullptr;
    }

    void push_scope() { frames.back().emplace_back(); }

    void pop_scope() {
        for (auto &[n, b] : frames.back().back()) live -= b.bytes();
        frames.back().pop_back();
    }

    static Value default_of(const Type &t) {
        switch (t.kind) {
            case TypeKind::Int: return Value::of_int(0);
            case TypeKind::Bool: return Value::of_bool(false);
            case TypeKind::String: return Value::of_str("");
            case TypeKind::Optional: return Value::of_null();
            case TypeKind::Array: {
                Value v;
                v.k = Value::K::Array;
                return v;
            }
            default: throw RuntimeErr{"no default value for " + type_name(t)};
        }
    }

    // Store `v` under a slot of declared type `t`; a null may only land in
    // an optional slot (the implicit unwrap's runtime half).
    static void check_slot(const Value &v, bool optional_slot, const std::string &what) {
        if (v.k == Value::K::Null && !optional_slot)
            throw RuntimeErr{"null value stored into non-optional " + what};
    }

    void bind(const std::string &name, Value v, const Type &declared) {
        bool opt = declared.kind == TypeKind::Optional;
        check_slot(v, opt, "'" + name + "'");
        Binding b{std::move(v), opt};
        add_live(b.bytes());
        auto [it, fresh] = frames.back().back().emplace(name, std::move(b));
        if (!fresh) throw RuntimeErr{"duplicate binding '" + name + "'"};
    }

    // ---------------------------------------------------------- value checks

    static std::int64_t need_int(const Value &v) {
        if (v.k == Value::K::Int) return v.i;
        if (v.k == Value::K::Null) throw RuntimeErr{"unwrapped a null optional"};
        throw RuntimeErr{"expected an int value"};
    }
    static bool need_bool(const Value &v) {
        if (v.k == Value::K::Bool) return v.b;
        if (v.k == Value::K::Null) throw RuntimeErr{"unwrapped a null optional"};
        throw RuntimeErr{"expected a bool value"};
    }
    static const std::string &need_str(const Value &v) {
        if (v.k == Value::K::Str) return v.s;
        if (v.k == Value::K::Null) throw RuntimeErr{"unwrapped a null optional"};
        throw RuntimeErr{"expected a string value"};
    }
    static void need_array(const Value &v) {
        if (v.k == Value::K::Array) return;
        if (v.k == Value::K::Null) throw RuntimeErr{"unwrapped a null optional"};
        throw RuntimeErr{"expected an array value"};
    }

    static bool values_equal(const Value &a, const Value &b) {
        if (a.k == Value::K::Null || b.k == Value::K::Null)
            return a.k == b.k;
        if (a.k != b.k) throw RuntimeErr{"comparing incompatible values"};
        switch (a.k) {
            case Value::K::Int: return a.i == b.i;
            case Value::K::Bool: return a.b == b.b;
            case Value::K::Str: return a.s == b.s;
            default: throw RuntimeErr{"arrays are not comparable"};
        }
    }

    // wrapping 64-bit arithmetic; overflow is defined, not undefined
    static std::int64_t wrap_add(std::int64_t a, std::int64_t b) {
        return (std::int64_t)((std::uint64_t)a + (std::uint64_t)b);
    }
    static std::int64_t wrap_sub(std::int64_t a, std::int64_t b) {
        return (std::int64_t)((std::uint64_t)a - (std::uint64_t)b);
    }
    static std::int64_t wrap_mul(std::int64_t a, std::int64_t b) {
        return (std::int64_t)((std::uint64_t)a * (std::uint64_t)b);
    }
    static std::int64_t wrap_neg(std::int64_t a) {
        return (std::int64_t)(0 - (std::uint64_t)a);
    }

    // ---------------------------------------------------------- expressions

    Value eval(const Expr &e) {
        switch (e.kind) {
            case ExprKind::IntLit:
                step();
                return Value::of_int(e.ival);
            case ExprKind::BoolLit:
                step();
                return Value::of_bool(e.bval);
            case ExprKind::StrLit:
                step();
                return Value::of_str(e.sval);
            case ExprKind::NullLit:
                step();
                return Value::of_null();
            case ExprKind::ArrayLit: {
                step();
                Value v;
                v.k = Value::K::Array;
                v.elems.reserve(e.kids.size());
                for (auto &k : e.kids) v.elems.push_back(eval(*k));
                return v;
            }
            case ExprKind::Ident: {
                step();
                Binding *b = lookup(e.name);
                if (!b) throw RuntimeErr{"unbound variable '" + e.name + "'"};
                return b->v;
            }
            case ExprKind::Index: {
                step();
                Value base = eval(*e.kids[0]);
                Value idx = eval(*e.kids[1]);
                need_array(base);
                std::int64_t i = need_int(idx);
                if (i < 0 || (size_t)i >= base.elems.size())
                    throw RuntimeErr{"index " + std::to_string(i) + " out of bounds (size " +
                                     std::to_string(base.elems.size()) + ")"};
                return base.elems[(size_t)i];
            }
            case ExprKind::Call: return eval_call(e);
            case ExprKind::Unary: {
                step();
                Value v = eval(*e.kids[0]);
                if (e.name == "-") return Value::of_int(wrap_neg(need_int(v)));
                return Value::of_bool(!need_bool(v));
            }
            case ExprKind::Binary: return eval_binary(e);
        }
        throw RuntimeErr{"unreachable expression kind"};
    }

    Value eval_binary(const Expr &e) {
        step();
        const std::string &op = e.name;
        if (op == "&&") {
            if (!need_bool(eval(*e.kids[0]))) return Value::of_bool(false);
            return Value::of_bool(need_bool(eval(*e.kids[1])));
        }
        if (op == "||") {
            if (need_bool(eval(*e.kids[0]))) return Value::of_bool(true);
            return Value::of_bool(need_bool(eval(*e.kids[1])));
        }
        Value l = eval(*e.kids[0]);
        Value r = eval(*e.kids[1]);
        if (op == "+") {
            if (l.k == Value::K::Str || r.k == Value::K::Str)
                return Value::of_str(need_str(l) + need_str(r));
            return Value::of_int(wrap_add(need_int(l), need_int(r)));
        }
        if (op == "-") return Value::of_int(wrap_sub(need_int(l), need_int(r)));
        if (op == "*") return Value::of_int(wrap_mul(need_int(l), need_int(r)));
        if (op == "/") {
            std::int64_t d = need_int(r);
            if (d == 0) throw RuntimeErr{"division by zero"};
            std::int64_t n = need_int(l);
            if (n == INT64_MIN && d == -1) return Value::of_int(INT64_MIN);
            return Value::of_int(n / d);
        }
        if (op == "%") {
            std::int64_t d = need_int(r);
            if (d == 0) throw RuntimeErr{"modulo by zero"};
            std::int64_t n = need_int(l);
            if (n == INT64_MIN && d == -1) return Value::of_int(0);
            return Value::of_int(n % d);
        }
        if (op == "<") return Value::of_bool(need_int(l) < need_int(r));
        if (op == "<=") return Value::of_bool(need_int(l) <= need_int(r));
        if (op == ">") return Value::of_bool(need_int(l) > need_int(r));
        if (op == ">=") return Value::of_bool(need_int(l) >= need_int(r));
        if (op == "==") return Value::of_bool(values_equal(l, r));
        if (op == "!=") return Value::of_bool(!values_equal(l, r));
        throw RuntimeErr{"unreachable operator " + op};
    }

    Value eval_call(const Expr &e) {
        const std::string &n = e.name;
        if (n == "fetch") {
            step(fx.cost_of("fetch"));
            const std::string &url = need_str(eval(*e.kids[0]));
            auto it = fx.responses.find(url);
            if (it == fx.responses.end())
                throw RuntimeErr{"fetch of unmapped url '" + url + "'"};
            net += (long long)url.size() + (long long)it->second.size();
            return Value::of_str(it->second);
        }
        if (n == "alloc") {
            step(fx.cost_of("alloc"));
            std::int64_t count = need_int(eval(*e.kids[0]));
            Value fill = eval(*e.kids[1]);
            if (count < 0) throw RuntimeErr{"negative allocation"};
            if (count > kMaxAllocElems) throw RuntimeErr{"allocation too large"};
            Value v;
            v.k = Value::K::Array;
            v.elems.assign((size_t)count, fill);
            return v;
        }
        if (n == "len") {
            step(fx.cost_of("len"));
            Value v = eval(*e.kids[0]);
            if (v.k == Value::K::Str) return Value::of_int((std::int64_t)v.s.size());
            need_array(v);
            return Value::of_int((std::int64_t)v.elems.size());
        }
        if (n == "str") {
            step(fx.cost_of("str"));
            return Value::of_str(std::to_string(need_int(eval(*e.kids[0]))));
        }
        step();
        const Function *fn = p.find_function(n);
        if (!fn) throw RuntimeErr{"call to unknown function '" + n + "'"};
        std::vector<Value> args;
        args.reserve(e.kids.size());
        for (auto &k : e.kids) args.push_back(eval(*k));
        if (args.size() != fn->params.size())
            throw RuntimeErr{"wrong argument count for '" + n + "'"};
        return call_function(*fn, std::move(args));
    }

    Value call_function(const Function &fn, std::vector<Value> args) {
        if (depth >= kMaxCallDepth) throw RuntimeErr{"call depth exceeded"};
        depth++;
        frames.emplace_back();
        push_scope();
        for (size_t i = 0; i < args.size(); ++i)
            bind(fn.params[i].name, std::move(args[i]), fn.params[i].type);

        Value result;
        bool returned = false;
        try {
            exec_block(fn.body);
        } catch (ReturnSig &r) {
            returned = true;
            if (r.has) result = std::move(r.v);
        }

        for (auto &scope : frames.back())
            for (auto &[name, b] : scope) live -= b.bytes();
        frames.pop_back();
        depth--;

        if (fn.ret.kind != TypeKind::Void && !returned)
            throw RuntimeErr{"'" + fn.name + "' fell off the end without returning"};
        check_slot(result, fn.ret.kind == TypeKind::Optional || fn.ret.kind == TypeKind::Void,
                   "return value of '" + fn.name + "'");
        return result;
    }

    // ---------------------------------------------------------- lvalues

    // Resolves the storage slot an assignment writes, counting each node on
    // the path. `owner` is the binding whose byte total the write changes.
    Value *lvalue_slot(const Expr &lv, Binding **owner) {
        step();
        if (lv.kind == ExprKind::Ident) {
            Binding *b = lookup(lv.name);
            if (!b) throw RuntimeErr{"unbound variable '" + lv.name + "'"};
            *owner = b;
            return &b->v;
        }
        if (lv.kind != ExprKind::Index) throw RuntimeErr{"bad assignment target"};
        Value *base = lvalue_slot(*lv.kids[0], owner);
        Value idx = eval(*lv.kids[1]);
        need_array(*base);
        std::int64_t i = need_int(idx);
        if (i < 0 || (size_t)i >= base->elems.size())
            throw RuntimeErr{"index " + std::to_string(i) + " out of bounds (size " +
                             std::to_string(base->elems.size()) + ")"};
        return &base->elems[(size_t)i];
    }

    // ---------------------------------------------------------- statements

    void exec(const Stmt &s) {
        step();
        if (coverage && s.id != kNoId) coverage->insert(s.id);
        exec_core(s);
    }

    // for-init and for-update run through here directly: they are not
    // statements, so no statement step and no coverage mark.
    void exec_core(const Stmt &s) {
        switch (s.kind) {
            case StmtKind::VarDecl: {
                Value v = s.value ? eval(*s.value) : default_of(s.decl_type);
                bind(s.name, std::move(v), s.decl_type);
                break;
            }
            case StmtKind::Assign: {
                Value v = eval(*s.value);
                Binding *owner = nullptr;
                Value *slot = lvalue_slot(*s.lvalue, &owner);
                bool opt = slot == &owner->v ? owner->opt_slot
                                             : s.lvalue->type.kind == TypeKind::Optional;
                check_slot(v, opt, "assignment target");
                long long before = owner->bytes();
                *slot = std::move(v);
                add_live(owner->bytes() - before);
                break;
            }
            case StmtKind::If: {
                if (need_bool(eval(*s.value)))
                    exec_block(s.body);
                else if (s.has_else)
                    exec_block(s.else_body);
                break;
            }
            case StmtKind::While: {
                while (need_bool(eval(*s.value))) exec_block(s.body);
                break;
            }
            case StmtKind::For: {
                push_scope();
                try {
                    if (s.for_init) exec_core(*s.for_init);
                    while (need_bool(eval(*s.value))) {
                        exec_block(s.body);
                        if (s.for_update) exec_core(*s.for_update);
                    }
                } catch (...) {
                    pop_scope();
                    throw;
                }
                pop_scope();
                break;
            }
            case StmtKind::Return: {
                ReturnSig r;
                if (s.value) {
                    r.v = eval(*s.value);
                    r.has = true;
                }
                throw r;
            }
            case StmtKind::Assert: {
                if (!need_bool(eval(*s.value)))
                    throw AssertFailSig{"assert failed at line " + std::to_string(s.loc.line)};
                break;
            }
            case StmtKind::ExprStmt:
                eval(*s.value);
                break;
        }
    }

    void exec_block(const Block &b) {
        push_scope();
        try {
            for (auto &s : b.stmts) exec(*s);
        } catch (...) {
            pop_scope();
            throw;
        }
        pop_scope();
    }

    // ---------------------------------------------------------- harness

    void init_fields() {
        for (auto &f : p.fields) {
            Value v = f.init ? eval(*f.init) : default_of(f.type);
            bool opt = f.type.kind == TypeKind::Optional;
            check_slot(v, opt, "field '" + f.name + "'");
            Binding b{std::move(v), opt};
            add_live(b.bytes());
            fields[f.name] = std::move(b);
        }
    }

    TestResult run_one(const Function &fn) {
        steps = 0;
        live = 0;
        peak = 0;
        net = 0;
        depth = 0;
        fields.clear();
        frames.clear();
        TestResult r;
        r.name = fn.name;
        try {
            step();  // test invocation overhead
            init_fields();
            call_function(fn, {});
        } catch (AssertFailSig &a) {
            r.outcome = TestOutcome::AssertFail;
            r.detail = a.msg;
        } catch (RuntimeErr &e) {
            r.outcome = TestOutcome::RuntimeError;
            r.detail = e.msg;
        } catch (BudgetExceeded &) {
            r.outcome = TestOutcome::StepBudgetExceeded;
            r.detail = "step budget exceeded";
        }
        return r;
    }
};

}  // namespace

SuiteRun run_suite(const Program &p, const Fixtures &fx, long long step_budget,
                   std::set<NodeId> *coverage) {
    Interp in(p, fx, step_budget, coverage);
    SuiteRun out;
    for (auto &fn : p.functions) {
        if (!fn.is_test()) continue;
        out.report.tests.push_back(in.run_one(fn));
        out.fitness.steps += in.steps;
        if (in.peak > out.fitness.peak_bytes) out.fitness.peak_bytes = in.peak;
        out.fitness.net_bytes += in.net;
    }
    out.fitness.valid = out.report.all_passed();
    return out;
}

TestReport run_tests(const Program &p, const Fixtures &fx, long long step_budget) {
    return run_suite(p, fx, step_budget).report;
}

std::vector<FitnessVector> measure(const Program &p, const Fixtures &fx, int repeats,
                                   const NoiseModel &noise, std::uint64_t seed,
                                   long long step_budget) {
    std::vector<FitnessVector> out;
    out.reserve((size_t)repeats);
    for (int i = 0; i < repeats; ++i) {
        FitnessVector raw = run_suite(p, fx, step_budget).fitness;
        out.push_back(apply_noise(raw, noise, seed, i));
    }
    return out;
}

}  // namespace mogi
