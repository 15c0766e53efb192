// Command-line entry point: argument parsing only; the command logic lives in
// the library so tests can drive it directly.
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "egt/cli.hpp"

namespace {

void add_input_flags(CLI::App* cmd, egt::InputOptions& input) {
    cmd->add_option("--builtin", input.builtin,
                    "verify a builtin graph (g13, c5, petersen) instead of stdin");
    cmd->add_flag("--enumerate", input.enumerate.enabled,
                  "generate the graph class selected by the flags below");
    cmd->add_option("--max-n", input.enumerate.max_n,
                    "enumerate every order from 1 up to this bound");
    cmd->add_flag("--triangle-free", input.enumerate.triangle_free,
                  "restrict enumeration to triangle-free graphs");
    cmd->add_flag("--connected", input.enumerate.connected,
                  "restrict enumeration to connected graphs");
    cmd->add_option("--max-degree", input.enumerate.max_degree,
                    "restrict enumeration to graphs with this maximum degree");
    cmd->add_option("--regular", input.enumerate.regular,
                    "restrict enumeration to regular graphs of this degree");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact verification of independence/matching bounds on triangle-free "
        "graphs with maximum degree 4.  Graphs are read as graph6 lines from "
        "stdin unless --builtin or --enumerate is given; results are JSONL, "
        "one verdict record per graph plus a summary line."};
    app.require_subcommand(1);

    egt::CommonOptions common;
    app.add_option("--workers", common.workers,
                   "worker threads (default: hardware concurrency); output is "
                   "identical for every value");
    // Let `--workers` be written after the subcommand name as well as before it.
    app.fallthrough();

    egt::InputOptions inv_input;
    CLI::App* inv = app.add_subcommand(
        "invariants", "independence, matching, clique, and coloring numbers with witnesses");
    add_input_flags(inv, inv_input);

    egt::InputOptions verify_input;
    std::string theorem = "both";
    CLI::App* verify = app.add_subcommand(
        "verify",
        "check 7/4*alpha+beta >= n (bound 1), alpha+3/2*beta >= n (bound 2), their "
        "equality characterizations, or the chromatic corollary on complements");
    verify->add_option("--theorem", theorem, "which bound to check: 1, 2, both, or corollary")
        ->check(CLI::IsMember({"1", "2", "both", "corollary"}));
    add_input_flags(verify, verify_input);

    egt::InputOptions dec_input;
    CLI::App* dec = app.add_subcommand(
        "decompose", "Gallai-Edmonds decomposition, its verification, and the inequality ledger");
    add_input_flags(dec, dec_input);

    egt::ExtremalOptions ext;
    CLI::App* extremal = app.add_subcommand(
        "extremal", "order-13 4-regular triangle-free sweep plus low-degree sampling");
    extremal->add_option("--n", ext.n, "extremal order (only 13 is supported)");
    extremal->add_option("--samples", ext.samples,
                         "random low-degree graphs for the alpha >= 5 spot check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (inv->parsed())
        return egt::cmd_invariants(inv_input, common, std::cin, std::cout);
    if (verify->parsed()) {
        egt::VerifyTarget target = egt::VerifyTarget::Both;
        if (theorem == "1")
            target = egt::VerifyTarget::Bound1;
        else if (theorem == "2")
            target = egt::VerifyTarget::Bound2;
        else if (theorem == "corollary")
            target = egt::VerifyTarget::Corollary;
        return egt::cmd_verify(target, verify_input, common, std::cin, std::cout);
    }
    if (dec->parsed())
        return egt::cmd_decompose(dec_input, common, std::cin, std::cout);
    if (extremal->parsed())
        return egt::cmd_extremal(ext, common, std::cout);
    return 2;
}
