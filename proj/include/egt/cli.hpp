#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "egt/graph.hpp"

// Command implementations behind the `egt` binary.  Each command reads graphs
// (stdin graph6 lines, a builtin name, or an enumerated class), emits one
// JSONL verdict record per graph plus a final summary record, and returns the
// process exit code: 0 when no record failed, 1 when any record has status
// "fail" or "error".  Usage problems (unknown builtin, unsupported extremal
// order) return 2.  Record order is deterministic and independent of the
// worker count; timings are the only nondeterministic field.

namespace egt {

// Built-in graphs: "g13" (the 4-regular triangle-free circulant on 13
// vertices with offsets {1,5,8,12}), "c5", "petersen".  Stored as canonical
// graph6 constants generated at build time.
const char* builtin_graph6(const std::string& name);
std::vector<std::string> builtin_names();

struct EnumerateOptions {
    bool enabled = false;
    int max_n = 0; // sweep orders 1..max_n
    bool triangle_free = false;
    bool connected = false;
    std::optional<int> max_degree;
    std::optional<int> regular;
};

struct InputOptions {
    std::string builtin;         // when nonempty: a single builtin graph
    EnumerateOptions enumerate;  // when enabled: generated graphs
    // otherwise: newline-delimited graph6 on stdin
};

struct CommonOptions {
    int workers = 0; // <= 0 selects the hardware thread count
};

enum class VerifyTarget { Bound1, Bound2, Both, Corollary };

int cmd_invariants(const InputOptions& in, const CommonOptions& common,
                   std::istream& input, std::ostream& out);

int cmd_verify(VerifyTarget target, const InputOptions& in, const CommonOptions& common,
               std::istream& input, std::ostream& out);

int cmd_decompose(const InputOptions& in, const CommonOptions& common,
                  std::istream& input, std::ostream& out);

struct ExtremalOptions {
    int n = 13;          // the only supported order
    int samples = 10000; // random low-degree graphs for the alpha >= 5 spot check
};

int cmd_extremal(const ExtremalOptions& opts, const CommonOptions& common,
                 std::ostream& out);

} // namespace egt
