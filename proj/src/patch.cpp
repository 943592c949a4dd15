#include <sstream>

#include "mogi/patch.hpp"

namespace mogi {

std::string serialize(const Patch &patch, const std::string &file) {
    std::ostringstream os;
    for (const Edit &e : patch.edits) {
        switch (e.kind) {
            case EditKind::Delete:
                os << "DELETE " << file << ":" << e.a << "\n";
                break;
            case EditKind::Copy:
                os << "COPY " << file << ":" << e.a << " -> " << file << ":" << e.b
                   << ":" << e.index << "\n";
                break;
            case EditKind::Replace:
                os << "REPLACE " << file << ":" << e.a << " -> " << file << ":" << e.b
                   << "\n";
                break;
            case EditKind::CacheMethod:
                os << "CACHE_METHOD " << file << ":" << e.a << "\n";
                break;
            case EditKind::CacheClass:
                os << "CACHE_CLASS " << file << ":" << e.a << "\n";
                break;
        }
    }
    return os.str();
}

namespace {

// file:123 — the file part may not itself contain ':'
bool split_ref(const std::string &tok, std::string &file, NodeId &id) {
    size_t c = tok.find(':');
    if (c == std::string::npos || c == 0 || c + 1 >= tok.size()) return false;
    std::string num = tok.substr(c + 1);
    if (num.find(':') != std::string::npos) return false;
    for (char ch : num)
        if (!isdigit((unsigned char)ch)) return false;
    file = tok.substr(0, c);
    id = (NodeId)std::stol(num);
    return true;
}

// file:123:4
bool split_ref2(const std::string &tok, std::string &file, NodeId &id, int &index) {
    size_t last = tok.rfind(':');
    if (last == std::string::npos) return false;
    std::string idx = tok.substr(last + 1);
    if (idx.empty()) return false;
    for (char ch : idx)
        if (!isdigit((unsigned char)ch)) return false;
    index = std::stoi(idx);
    return split_ref(tok.substr(0, last), file, id);
}

}  // namespace

PatchParseResult parse_patch(const std::string &text) {
    PatchParseResult out;
    Patch patch;
    std::string file;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    auto fail = [&](const std::string &msg) {
        out.error = "line " + std::to_string(lineno) + ": " + msg;
        return out;
    };
    auto use_file = [&](const std::string &f) {
        if (file.empty()) file = f;
        return file == f;
    };

    while (std::getline(in, line)) {
        lineno++;
        if (line.empty()) return fail("blank line");
        std::istringstream ls(line);
        std::string op, t1, arrow, t2, extra;
        ls >> op >> t1;
        std::string f1, f2;
        NodeId a = kNoId, b = kNoId;
        int index = 0;
        if (op == "DELETE" || op == "CACHE_METHOD" || op == "CACHE_CLASS") {
            if (t1.empty() || (ls >> extra)) return fail("expected one target after " + op);
            if (!split_ref(t1, f1, a)) return fail("bad node reference '" + t1 + "'");
            if (!use_file(f1)) return fail("file mismatch '" + f1 + "'");
            if (op == "DELETE") patch.edits.push_back(Edit::del(a));
            if (op == "CACHE_METHOD") patch.edits.push_back(Edit::cache_method(a));
            if (op == "CACHE_CLASS") patch.edits.push_back(Edit::cache_class(a));
        } else if (op == "COPY" || op == "REPLACE") {
            ls >> arrow >> t2;
            if (t2.empty() || arrow != "->" || (ls >> extra))
                return fail("expected '<src> -> <dest>' after " + op);
            if (!split_ref(t1, f1, a)) return fail("bad node reference '" + t1 + "'");
            if (op == "COPY") {
                if (!split_ref2(t2, f2, b, index))
                    return fail("bad copy destination '" + t2 + "'");
            } else if (!split_ref(t2, f2, b)) {
                return fail("bad node reference '" + t2 + "'");
            }
            if (!use_file(f1) || !use_file(f2)) return fail("file mismatch");
            patch.edits.push_back(op == "COPY" ? Edit::copy(a, b, index)
                                               : Edit::replace(a, b));
        } else {
            return fail("unknown edit '" + op + "'");
        }
    }
    out.patch = std::move(patch);
    out.file = std::move(file);
    return out;
}

}  // namespace mogi
