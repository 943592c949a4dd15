#pragma once

// Patches: ordered edit lists over a program, their textual form, and
// sequential application. Every NodeId in an edit refers to the ORIGINAL
// program's id space; material inserted by an earlier edit is id-stripped
// and therefore unaddressable by later edits.

#include <optional>
#include <string>
#include <vector>

#include "mogi/minilang.hpp"

namespace mogi {

enum class EditKind { Delete, Copy, Replace, CacheMethod, CacheClass };

struct Edit {
    EditKind kind = EditKind::Delete;
    NodeId a = kNoId;  // Delete target, Copy/Replace source, cache call id
    NodeId b = kNoId;  // Copy destination statement, Replace target
    int index = 0;     // Copy insertion index, clamped at apply time

    static Edit del(NodeId target) { return {EditKind::Delete, target, kNoId, 0}; }
    // dest names a statement; the copy lands in the block containing that
    // statement, at `index` clamped to [0, block length]
    static Edit copy(NodeId src, NodeId dest, int index) {
        return {EditKind::Copy, src, dest, index};
    }
    static Edit replace(NodeId src, NodeId target) {
        return {EditKind::Replace, src, target, 0};
    }
    static Edit cache_method(NodeId call) {
        return {EditKind::CacheMethod, call, kNoId, 0};
    }
    static Edit cache_class(NodeId call) {
        return {EditKind::CacheClass, call, kNoId, 0};
    }

    bool operator==(const Edit &o) const {
        return kind == o.kind && a == o.a && b == o.b && index == o.index;
    }
};

struct Patch {
    std::vector<Edit> edits;
    bool operator==(const Patch &o) const { return edits == o.edits; }
};

// File label used for every single-file benchmark program; patches written
// by the tools and the search all carry it.
inline constexpr char kProgramFileName[] = "program.mini";

// One edit per line:
//   DELETE <file>:<id>
//   COPY <file>:<src> -> <file>:<block>:<index>
//   REPLACE <file>:<src> -> <file>:<target>
//   CACHE_METHOD <file>:<call>
//   CACHE_CLASS <file>:<call>
std::string serialize(const Patch &patch, const std::string &file);

struct PatchParseResult {
    std::optional<Patch> patch;
    std::string file;   // empty for an empty patch
    std::string error;  // includes the offending line number
    bool ok() const { return patch.has_value(); }
};
PatchParseResult parse_patch(const std::string &text);

enum class ValidityStage { Parsed, Typechecked, Failed };

struct ApplyReport {
    std::optional<Program> result;  // absent when the final program fails to type-check
    std::vector<size_t> noop_edits;
    ValidityStage stage = ValidityStage::Parsed;
    std::vector<Diag> type_errors;
    bool ok() const { return result.has_value(); }
};

// Edits applied in list order against a working copy of `original`; an edit
// whose referenced node no longer exists is recorded as a no-op. The final
// program is re-type-checked (annotations refreshed for the interpreter).
ApplyReport apply(const Patch &patch, const Program &original);

}  // namespace mogi
