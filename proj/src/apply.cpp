#include "mogi/operators.hpp"
#include "mogi/patch.hpp"

namespace mogi {

namespace {

bool apply_one(Program &work, const Edit &e) {
    switch (e.kind) {
        case EditKind::Delete: {
            StmtRef r = find_stmt(work, e.a);
            if (!r.stmt) return false;
            r.block->stmts.erase(r.block->stmts.begin() + (long)r.index);
            return true;
        }
        case EditKind::Copy: {
            StmtRef src = find_stmt(work, e.a);
            if (!src.stmt) return false;
            StmtPtr copy = clone_stmt(*src.stmt, /*keep_ids=*/false);
            // the destination id names a statement; the copy lands in the
            // block that currently contains it
            StmtRef dest = find_stmt(work, e.b);
            if (!dest.stmt) return false;
            size_t idx = e.index < 0 ? 0 : (size_t)e.index;
            if (idx > dest.block->stmts.size()) idx = dest.block->stmts.size();
            dest.block->stmts.insert(dest.block->stmts.begin() + (long)idx,
                                     std::move(copy));
            return true;
        }
        case EditKind::Replace: {
            StmtRef src = find_stmt(work, e.a);
            if (!src.stmt) return false;
            StmtPtr copy = clone_stmt(*src.stmt, /*keep_ids=*/false);
            StmtRef tgt = find_stmt(work, e.b);
            if (!tgt.stmt) return false;
            tgt.block->stmts[tgt.index] = std::move(copy);
            return true;
        }
        case EditKind::CacheMethod: return apply_method_cache(work, e.a);
        case EditKind::CacheClass: return apply_class_cache(work, e.a);
    }
    return false;
}

}  // namespace

ApplyReport apply(const Patch &patch, const Program &original) {
    ApplyReport rep;
    Program work = clone_program(original, /*keep_ids=*/true);
    for (size_t i = 0; i < patch.edits.size(); ++i)
        if (!apply_one(work, patch.edits[i])) rep.noop_edits.push_back(i);
    rep.stage = ValidityStage::Parsed;
    auto diags = typecheck(work);
    if (!diags.empty()) {
        rep.stage = ValidityStage::Failed;
        rep.type_errors = std::move(diags);
        return rep;
    }
    rep.stage = ValidityStage::Typechecked;
    rep.result = std::move(work);
    return rep;
}

}  // namespace mogi
