#include <string>
#include <vector>

#include "egt/cli.hpp"

namespace egt {

namespace {

struct BuiltinEntry {
    const char* name;
    const char* graph6;
};

// Canonical graph6 strings produced at build time from the graph
// constructors; see tools/gen_builtins.cpp.
const BuiltinEntry kBuiltins[] = {
#include "builtin_graphs.inc"
};

} // namespace

const char* builtin_graph6(const std::string& name) {
    for (const BuiltinEntry& e : kBuiltins)
        if (name == e.name)
            return e.graph6;
    return nullptr;
}

std::vector<std::string> builtin_names() {
    std::vector<std::string> names;
    for (const BuiltinEntry& e : kBuiltins)
        names.emplace_back(e.name);
    return names;
}

} // namespace egt
