#include "mogi/operators.hpp"

namespace mogi {

std::size_t draw_uniform(std::mt19937_64 &rng, std::size_t n) {
    if (n <= 1) return 0;
    std::uint64_t threshold = (0 - (std::uint64_t)n) % (std::uint64_t)n;
    for (;;) {
        std::uint64_t r = rng();
        if (r >= threshold) return (std::size_t)(r % (std::uint64_t)n);
    }
}

EditSpace build_edit_space(const Program &p) {
    EditSpace space;
    Program &mp = const_cast<Program &>(p);
    IdIndex idx = build_id_index(p);
    for (NodeId id = 0; id < (NodeId)idx.entries.size(); ++id) {
        const IdEntry &e = idx.entries[(size_t)id];
        if (e.kind != NodeKindTag::Statement) continue;
        if (e.function.rfind("test_", 0) == 0) continue;
        space.stmt_ids.push_back(id);
        StmtRef r = find_stmt(mp, id);
        space.dest_block_len.push_back(r.block ? (int)r.block->stmts.size() : 0);
    }
    for (auto &t : method_cache_targets(p)) {
        CallRef ref = find_call(mp, t.call);
        if (!ref.call || ref.call->type.kind == TypeKind::Void) continue;
        space.method_targets.push_back(t);
    }
    for (auto &t : class_cache_targets(p)) {
        CallRef ref = find_call(mp, t.call);
        if (!ref.call) continue;
        TypeKind k = ref.call->type.kind;
        if (k == TypeKind::Void || k == TypeKind::Optional) continue;
        space.class_targets.push_back(t);
    }
    return space;
}

Edit random_edit(const EditSpace &space, std::mt19937_64 &rng) {
    std::vector<EditKind> kinds;
    if (!space.stmt_ids.empty()) {
        kinds.push_back(EditKind::Delete);
        kinds.push_back(EditKind::Copy);
        kinds.push_back(EditKind::Replace);
    }
    if (!space.method_targets.empty()) kinds.push_back(EditKind::CacheMethod);
    if (!space.class_targets.empty()) kinds.push_back(EditKind::CacheClass);

    EditKind kind = kinds.at(draw_uniform(rng, kinds.size()));
    switch (kind) {
        case EditKind::Delete:
            return Edit::del(space.stmt_ids[draw_uniform(rng, space.stmt_ids.size())]);
        case EditKind::Copy: {
            NodeId src = space.stmt_ids[draw_uniform(rng, space.stmt_ids.size())];
            size_t di = draw_uniform(rng, space.stmt_ids.size());
            int index = (int)draw_uniform(rng, (size_t)space.dest_block_len[di] + 1);
            return Edit::copy(src, space.stmt_ids[di], index);
        }
        case EditKind::Replace: {
            NodeId src = space.stmt_ids[draw_uniform(rng, space.stmt_ids.size())];
            NodeId tgt = space.stmt_ids[draw_uniform(rng, space.stmt_ids.size())];
            return Edit::replace(src, tgt);
        }
        case EditKind::CacheMethod:
            return Edit::cache_method(
                space.method_targets[draw_uniform(rng, space.method_targets.size())].call);
        case EditKind::CacheClass:
            return Edit::cache_class(
                space.class_targets[draw_uniform(rng, space.class_targets.size())].call);
    }
    return Edit::del(kNoId);
}

Edit random_edit(const Program &p, std::mt19937_64 &rng) {
    EditSpace space = build_edit_space(p);
    return random_edit(space, rng);
}

Patch mutate(const Patch &patch, const EditSpace &space, std::mt19937_64 &rng) {
    Patch out = patch;
    if (out.edits.empty() || draw_uniform(rng, 2) == 0) {
        out.edits.push_back(random_edit(space, rng));
    } else {
        size_t i = draw_uniform(rng, out.edits.size());
        out.edits.erase(out.edits.begin() + (long)i);
    }
    return out;
}

Patch crossover(const Patch &a, const Patch &b) {
    Patch out = a;
    out.edits.insert(out.edits.end(), b.edits.begin(), b.edits.end());
    return out;
}

}  // namespace mogi
