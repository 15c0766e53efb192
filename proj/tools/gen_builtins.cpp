// Build-time generator for the CLI's builtin graphs: constructs each graph,
// canonically labels it, and writes the canonical graph6 strings as a C++
// initializer include (name/graph6 pairs).
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "egt/enumeration.hpp"
#include "egt/graph.hpp"

using namespace egt;

namespace {

Graph petersen() {
    EdgeList edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});             // outer 5-cycle
        edges.push_back({5 + i, 5 + (i + 2) % 5});     // inner pentagram
        edges.push_back({i, 5 + i});                   // spokes
    }
    return Graph(10, edges);
}

std::string escaped(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '\\' || c == '"')
            out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: gen_builtins <output-file>\n";
        return 2;
    }
    std::vector<std::pair<std::string, Graph>> graphs;
    graphs.emplace_back("g13", Graph::circulant(13, {1, 5, 8, 12}));
    graphs.emplace_back("c5", Graph::circulant(5, {1}));
    graphs.emplace_back("petersen", petersen());

    std::ofstream out(argv[1]);
    if (!out) {
        std::cerr << "gen_builtins: cannot write " << argv[1] << "\n";
        return 1;
    }
    for (const auto& [name, g] : graphs)
        out << "{\"" << name << "\", \"" << escaped(canonical_form(g)) << "\"},\n";
    return out.good() ? 0 : 1;
}
