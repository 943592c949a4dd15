#pragma once

// Variation operators: the two caching transforms with their target finders,
// plus random-edit generation, patch mutation, and crossover. Test functions
// (test_*) are never edit targets: the suite is the correctness oracle and
// must stay fixed while the search runs.

#include <random>

#include "mogi/patch.hpp"

namespace mogi {

struct CacheTarget {
    NodeId call = kNoId;  // representative: first occurrence in walk order
    std::string enclosing_function;
    std::vector<NodeId> occurrence_ids;
    enum class Scope { Method, Class };
    Scope scope = Scope::Method;
    std::string callee;
    std::string key;  // canonical call text; occurrences are token-identical
};

// Per non-test function: call expressions walked in order with a `seen` set;
// a repeat of an identical callee+arguments expression makes the group
// cachable. Only groups with >= 2 occurrences are returned.
std::vector<CacheTarget> method_cache_targets(const Program &p);

// Every call expression in every non-test function is a candidate, grouped
// program-wide by identical callee+arguments; single occurrences included.
std::vector<CacheTarget> class_cache_targets(const Program &p);

// Edit-level transforms used by apply(): re-derive the occurrence group
// around `call` in the current working copy, then rewrite in place.
// Return false (the edit no-ops) when the call id is gone, the callee
// yields no value, the group does not satisfy the operator's precondition,
// or a guard/declaration cannot be placed.
bool apply_method_cache(Program &p, NodeId call);
bool apply_class_cache(Program &p, NodeId call);

// Precomputed target spaces for uniform edit drawing; built once per
// benchmark from the original program.
struct EditSpace {
    std::vector<NodeId> stmt_ids;             // non-test statements
    std::vector<int> dest_block_len;          // original block length per stmt id above
    std::vector<CacheTarget> method_targets;  // applicable (non-void) only
    std::vector<CacheTarget> class_targets;   // applicable only
};
EditSpace build_edit_space(const Program &p);

// Uniform over edit kinds that have at least one valid target, then uniform
// over that kind's targets.
Edit random_edit(const EditSpace &space, std::mt19937_64 &rng);
Edit random_edit(const Program &p, std::mt19937_64 &rng);

// Coin flip: add one random edit at the end, or remove one uniformly chosen
// edit. An empty patch always receives an add.
Patch mutate(const Patch &patch, const EditSpace &space, std::mt19937_64 &rng);

Patch crossover(const Patch &a, const Patch &b);

// uniform integer in [0, n), by rejection; pinned across platforms
std::size_t draw_uniform(std::mt19937_64 &rng, std::size_t n);

}  // namespace mogi
