#include "egt/cli.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <iostream>
#include <istream>
#include <ostream>
#include <random>
#include <stdexcept>
#include <thread>

#include "egt/enumeration.hpp"
#include "egt/graph6.hpp"
#include "egt/report.hpp"

namespace egt {

namespace {

struct WorkItem {
    std::string graph6; // encoded graph, or the raw offending line
    std::optional<Graph> graph;
    std::string error; // decode failure
    int line_no = 0;   // 1-based for stdin input, 0 otherwise
};

struct GatheredInput {
    std::vector<WorkItem> items;
    std::string usage_error; // nonempty => exit code 2, nothing emitted
};

ClassConstraints constraints_for(const EnumerateOptions& opts, int order) {
    ClassConstraints c;
    c.max_order = order;
    c.triangle_free = opts.triangle_free;
    c.connected = opts.connected;
    c.max_degree = opts.max_degree;
    c.regular_degree = opts.regular;
    return c;
}

// Collects the graphs a command will process.  With `complement_graphs` the
// records are about the complements of the gathered graphs (the chromatic
// corollary verifies complements of triangle-free low-degree graphs).
GatheredInput gather_inputs(const InputOptions& in, std::istream& input,
                            bool complement_graphs) {
    GatheredInput out;
    if (!in.builtin.empty() && in.enumerate.enabled) {
        out.usage_error = "--builtin and --enumerate are mutually exclusive";
        return out;
    }
    if (!in.builtin.empty()) {
        const char* encoded = builtin_graph6(in.builtin);
        if (encoded == nullptr) {
            out.usage_error = "unknown builtin graph: " + in.builtin;
            return out;
        }
        WorkItem item;
        item.graph = from_graph6(encoded);
        item.graph6 = encoded;
        out.items.push_back(std::move(item));
    } else if (in.enumerate.enabled) {
        if (in.enumerate.max_n < 1) {
            out.usage_error = "--enumerate requires --max-n >= 1";
            return out;
        }
        try {
            for (int order = 1; order <= in.enumerate.max_n; ++order) {
                ClassConstraints c = constraints_for(in.enumerate, order);
                c.validate();
                enumerate(c, [&out](const Graph& g) {
                    WorkItem item;
                    item.graph = g;
                    item.graph6 = to_graph6(g);
                    out.items.push_back(std::move(item));
                    return true;
                });
            }
        } catch (const std::invalid_argument& ex) {
            out.usage_error = ex.what();
            out.items.clear();
            return out;
        }
    } else {
        ingest_graph6(input, [&out](const IngestItem& item) {
            WorkItem w;
            w.graph6 = item.line;
            w.line_no = item.line_no;
            if (item.graph)
                w.graph = *item.graph;
            else
                w.error = item.error;
            out.items.push_back(std::move(w));
        });
    }
    if (complement_graphs) {
        for (WorkItem& item : out.items) {
            if (!item.graph)
                continue;
            item.graph = complement(*item.graph);
            item.graph6 = to_graph6(*item.graph);
        }
    }
    return out;
}

// Runs `process` over the items on up to `workers` threads; the result order
// matches the input order no matter how the work is scheduled.
template <typename F>
std::vector<VerdictRecord> parallel_map(const std::vector<WorkItem>& items, int workers,
                                        F process) {
    std::vector<VerdictRecord> out(items.size());
    if (workers <= 0) {
        unsigned hw = std::thread::hardware_concurrency();
        workers = hw == 0 ? 1 : static_cast<int>(hw);
    }
    workers = std::min<long long>(workers, static_cast<long long>(items.size()));
    std::atomic<size_t> next{0};
    auto run = [&]() {
        for (size_t i; (i = next.fetch_add(1)) < items.size();)
            out[i] = process(items[i]);
    };
    if (workers <= 1) {
        run();
        return out;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers) - 1);
    for (int w = 1; w < workers; ++w)
        pool.emplace_back(run);
    run();
    for (std::thread& t : pool)
        t.join();
    return out;
}

// Wraps per-graph verdict computation with decode-error handling and timing.
template <typename F>
VerdictRecord timed_record(const WorkItem& item, const std::string& command, F fill) {
    VerdictRecord rec;
    rec.command = command;
    rec.graph6 = item.graph6;
    if (!item.error.empty()) {
        rec.status = "error";
        rec.data["error"] = item.error;
        rec.data["line"] = item.line_no;
        return rec;
    }
    auto t0 = std::chrono::steady_clock::now();
    try {
        fill(*item.graph, rec);
    } catch (const std::invalid_argument& ex) {
        rec.status = "error";
        rec.data["error"] = ex.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    rec.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return rec;
}

int emit_and_exit_code(const std::vector<VerdictRecord>& records, std::ostream& out) {
    bool bad = false;
    for (const VerdictRecord& rec : records) {
        out << rec.to_line() << '\n';
        if (rec.status == "fail" || rec.status == "error")
            bad = true;
    }
    return bad ? 1 : 0;
}

Json status_counts(const std::vector<VerdictRecord>& records) {
    int pass = 0, fail = 0, error = 0, inapplicable = 0;
    for (const VerdictRecord& rec : records) {
        if (rec.status == "pass")
            ++pass;
        else if (rec.status == "fail")
            ++fail;
        else if (rec.status == "inapplicable")
            ++inapplicable;
        else
            ++error;
    }
    Json j;
    j["records"] = records.size();
    j["pass"] = pass;
    j["fail"] = fail;
    j["inapplicable"] = inapplicable;
    j["error"] = error;
    return j;
}

Json degree_block(const Graph& g) {
    DegreeStats ds = degree_stats(g);
    Json j;
    j["n"] = g.order();
    j["m"] = g.size();
    j["min_degree"] = ds.min_degree;
    j["max_degree"] = ds.max_degree;
    return j;
}

} // namespace

int cmd_invariants(const InputOptions& in, const CommonOptions& common,
                   std::istream& input, std::ostream& out) {
    GatheredInput gathered = gather_inputs(in, input, false);
    if (!gathered.usage_error.empty()) {
        std::cerr << gathered.usage_error << '\n';
        return 2;
    }
    std::vector<VerdictRecord> records =
        parallel_map(gathered.items, common.workers, [](const WorkItem& item) {
            return timed_record(item, "invariants", [](const Graph& g, VerdictRecord& rec) {
                SolveWitness indep = independence_number(g);
                SolveWitness matching = max_matching(g);
                SolveWitness clique = clique_number(g);
                bool ok = indep.validates(g) && matching.validates(g) && clique.validates(g);

                rec.invariants = degree_block(g);
                rec.invariants["triangle_free"] = is_triangle_free(g);
                rec.invariants["connected"] = is_connected(g);
                rec.invariants["alpha"] = indep.value;
                rec.invariants["beta"] = matching.value;
                rec.invariants["omega"] = clique.value;

                rec.data["independent_set"] = to_json(indep);
                rec.data["matching"] = to_json(matching);
                rec.data["clique"] = to_json(clique);
                if (g.order() <= 20) {
                    SolveWitness coloring = chromatic_number(g);
                    ok = ok && coloring.validates(g);
                    rec.invariants["chi"] = coloring.value;
                    rec.data["coloring"] = to_json(coloring);
                } else {
                    rec.invariants["chi"] = nullptr;
                    rec.data["chi_skipped"] = "exact coloring is limited to 20 vertices";
                }
                rec.status = ok ? "pass" : "fail";
            });
        });
    int code = emit_and_exit_code(records, out);
    VerdictRecord summary;
    summary.command = "invariants";
    summary.status = "summary";
    summary.data = status_counts(records);
    out << summary.to_line() << '\n';
    return code;
}

namespace {

void fill_bound_verdict(const Graph& g, VerdictRecord& rec, bool do1, bool do2) {
    rec.invariants = degree_block(g);
    rec.invariants["triangle_free"] = is_triangle_free(g);
    bool ok = true;
    int alpha = -1, beta = -1;
    auto run_one = [&](const char* key, const BoundSpec& spec) {
        BoundReport report = check_bound(g, spec);
        EqualityClassification cls = classify_equality(g, spec);
        Json j;
        j["report"] = to_json(report);
        j["classification"] = to_json(cls);
        rec.data[key] = std::move(j);
        ok = ok && report.slack >= 0 && cls.consistent;
        alpha = report.alpha;
        beta = report.beta;
    };
    if (do1)
        run_one("bound1", BoundSpec::bound1());
    if (do2)
        run_one("bound2", BoundSpec::bound2());
    rec.invariants["alpha"] = alpha;
    rec.invariants["beta"] = beta;
    rec.status = ok ? "pass" : "fail";
}

Json bound_summary(const std::vector<VerdictRecord>& records, const char* key) {
    Json j;
    long long equality = 0, strict = 0;
    bool have_min = false;
    long long min_slack = 0;
    std::string min_graph;
    for (const VerdictRecord& rec : records) {
        if (!rec.data.contains(key))
            continue;
        const Json& report = rec.data[key]["report"];
        long long slack = report["slack"].get<long long>();
        if (slack == 0)
            ++equality;
        else
            ++strict;
        if (!have_min || slack < min_slack) {
            have_min = true;
            min_slack = slack;
            min_graph = rec.graph6;
        }
    }
    j["equality"] = equality;
    j["strict"] = strict;
    if (have_min) {
        j["min_slack"] = min_slack;
        j["min_slack_graph6"] = min_graph;
    }
    return j;
}

} // namespace

int cmd_verify(VerifyTarget target, const InputOptions& in, const CommonOptions& common,
               std::istream& input, std::ostream& out) {
    bool corollary = target == VerifyTarget::Corollary;
    GatheredInput gathered = gather_inputs(in, input, corollary && in.enumerate.enabled);
    if (!gathered.usage_error.empty()) {
        std::cerr << gathered.usage_error << '\n';
        return 2;
    }
    bool do1 = target == VerifyTarget::Bound1 || target == VerifyTarget::Both;
    bool do2 = target == VerifyTarget::Bound2 || target == VerifyTarget::Both;

    std::vector<VerdictRecord> records =
        parallel_map(gathered.items, common.workers, [&](const WorkItem& item) {
            return timed_record(item, "verify", [&](const Graph& g, VerdictRecord& rec) {
                if (!corollary) {
                    fill_bound_verdict(g, rec, do1, do2);
                    return;
                }
                ChiBindingVerdict v = chi_binding_check(g);
                rec.invariants["n"] = v.n;
                rec.invariants["m"] = g.size();
                rec.data["corollary"] = to_json(v);
                if (!v.pre_ok)
                    rec.status = "inapplicable";
                else if (v.complement_ok && v.identity_ok && v.bound_ok) {
                    rec.invariants["chi"] = v.chi;
                    rec.invariants["omega"] = v.omega;
                    rec.status = "pass";
                } else {
                    rec.invariants["chi"] = v.chi;
                    rec.invariants["omega"] = v.omega;
                    rec.status = "fail";
                }
            });
        });
    int code = emit_and_exit_code(records, out);

    VerdictRecord summary;
    summary.command = "verify";
    summary.status = "summary";
    summary.data = status_counts(records);
    if (do1)
        summary.data["bound1"] = bound_summary(records, "bound1");
    if (do2)
        summary.data["bound2"] = bound_summary(records, "bound2");
    if (corollary) {
        long long tight = 0;
        for (const VerdictRecord& rec : records)
            if (rec.data.contains("corollary") &&
                rec.data["corollary"]["tight"].get<bool>())
                ++tight;
        summary.data["tight"] = tight;
    }
    out << summary.to_line() << '\n';
    return code;
}

int cmd_decompose(const InputOptions& in, const CommonOptions& common, std::istream& input,
                  std::ostream& out) {
    GatheredInput gathered = gather_inputs(in, input, false);
    if (!gathered.usage_error.empty()) {
        std::cerr << gathered.usage_error << '\n';
        return 2;
    }
    std::vector<VerdictRecord> records =
        parallel_map(gathered.items, common.workers, [](const WorkItem& item) {
            return timed_record(item, "decompose", [](const Graph& g, VerdictRecord& rec) {
                GallaiEdmonds ge = gallai_edmonds(g);
                GeVerification ver = verify_ge(g, ge);
                rec.invariants = degree_block(g);
                rec.invariants["beta"] = max_matching(g).value;
                rec.invariants["deficiency"] = ge.deficiency;
                rec.data["decomposition"] = to_json(ge);
                rec.data["verification"] = to_json(ver);
                bool ledger_ok = true;
                if (is_triangle_free(g) && degree_stats(g).max_degree <= 4) {
                    LedgerReport ledger = inequality_ledger(g);
                    rec.data["ledger"] = to_json(ledger);
                    ledger_ok = ledger.unconditional_ok && ledger.conditional_ok;
                } else {
                    rec.data["ledger"] = nullptr;
                    rec.data["ledger_skipped"] =
                        "inequality ledger applies to triangle-free graphs with max degree 4";
                }
                rec.status = ver.ok() && ledger_ok ? "pass" : "fail";
            });
        });
    int code = emit_and_exit_code(records, out);
    VerdictRecord summary;
    summary.command = "decompose";
    summary.status = "summary";
    summary.data = status_counts(records);
    out << summary.to_line() << '\n';
    return code;
}

namespace {

// Random triangle-free max-degree-4 graph on 13 vertices containing a vertex
// of degree at most 3.  Greedy maximal construction over a shuffled pair
// order; if it lands 4-regular, one random edge is removed.  Deterministic
// per sample index.
Graph sample_low_degree_graph(unsigned long long index) {
    std::mt19937_64 rng(0x20260819ULL ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
    const int n = 13;
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<size_t>(n * (n - 1) / 2));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    std::shuffle(pairs.begin(), pairs.end(), rng);

    std::array<VertexSet, 13> adj{};
    std::array<int, 13> deg{};
    EdgeList edges;
    for (auto [u, v] : pairs) {
        if (deg[static_cast<size_t>(u)] >= 4 || deg[static_cast<size_t>(v)] >= 4)
            continue;
        if (adj[static_cast<size_t>(u)] & adj[static_cast<size_t>(v)])
            continue; // common neighbor would close a triangle
        adj[static_cast<size_t>(u)] |= vertex_bit(v);
        adj[static_cast<size_t>(v)] |= vertex_bit(u);
        ++deg[static_cast<size_t>(u)];
        ++deg[static_cast<size_t>(v)];
        edges.push_back({u, v});
    }
    if (*std::min_element(deg.begin(), deg.end()) >= 4) {
        std::uniform_int_distribution<size_t> pick(0, edges.size() - 1);
        edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(pick(rng)));
    }
    return Graph(n, edges);
}

} // namespace

int cmd_extremal(const ExtremalOptions& opts, const CommonOptions& common,
                 std::ostream& out) {
    if (opts.n != 13) {
        std::cerr << "only the order-13 extremal sweep is supported" << '\n';
        return 2;
    }
    if (opts.samples < 0) {
        std::cerr << "--samples must be nonnegative" << '\n';
        return 2;
    }

    const std::string g13_label = canonical_form(from_graph6(builtin_graph6("g13")));

    ClassConstraints c;
    c.max_order = 13;
    c.triangle_free = true;
    c.connected = true;
    c.regular_degree = 4;
    std::vector<WorkItem> items;
    enumerate(c, [&items](const Graph& g) {
        WorkItem item;
        item.graph = g;
        item.graph6 = canonical_form(g);
        items.push_back(std::move(item));
        return true;
    });

    bool g13_found = false;
    int alpha4 = 0;
    bool all_alpha4_tight = true;
    std::vector<VerdictRecord> records =
        parallel_map(items, common.workers, [&g13_label](const WorkItem& item) {
            return timed_record(item, "extremal", [&](const Graph& g, VerdictRecord& rec) {
                DegreeStats ds = degree_stats(g);
                BoundReport b1 = check_bound(g, BoundSpec::bound1());
                BoundReport b2 = check_bound(g, BoundSpec::bound2());
                rec.invariants = degree_block(g);
                rec.invariants["triangle_free"] = is_triangle_free(g);
                rec.invariants["alpha"] = b1.alpha;
                rec.invariants["beta"] = b1.beta;
                rec.data["phase"] = "enumeration";
                rec.data["is_g13"] = rec.graph6 == g13_label;
                rec.data["bound1"] = to_json(b1);
                rec.data["bound2"] = to_json(b2);
                bool shape_ok = ds.min_degree == 4 && ds.max_degree == 4 &&
                                is_triangle_free(g) && b1.beta == 6;
                bool tight_ok = b1.alpha != 4 || (b1.equality && b2.equality);
                rec.data["alpha4_tight"] = b1.alpha == 4 && b1.equality && b2.equality;
                rec.status = shape_ok && tight_ok && b1.slack >= 0 && b2.slack >= 0
                                 ? "pass"
                                 : "fail";
            });
        });
    for (const VerdictRecord& rec : records) {
        if (rec.data.contains("is_g13") && rec.data["is_g13"].get<bool>())
            g13_found = true;
        if (rec.invariants.contains("alpha") && rec.invariants["alpha"].get<int>() == 4) {
            ++alpha4;
            if (!rec.data["alpha4_tight"].get<bool>())
                all_alpha4_tight = false;
        }
    }
    int code = emit_and_exit_code(records, out);

    // Spot check: a triangle-free order-13 graph with a vertex of degree at
    // most 3 has independence number at least 5.
    std::vector<WorkItem> sample_indices(static_cast<size_t>(opts.samples));
    for (size_t i = 0; i < sample_indices.size(); ++i)
        sample_indices[i].line_no = static_cast<int>(i);
    std::atomic<int> min_alpha{100};
    std::atomic<long long> violations{0};
    std::vector<VerdictRecord> sampled =
        parallel_map(sample_indices, common.workers, [&](const WorkItem& item) {
            Graph g = sample_low_degree_graph(static_cast<unsigned long long>(item.line_no));
            int alpha = independence_number(g).value;
            int seen = min_alpha.load();
            while (alpha < seen && !min_alpha.compare_exchange_weak(seen, alpha)) {
            }
            if (alpha < 5)
                ++violations;
            VerdictRecord rec; // folded into the sampling summary below
            rec.status = alpha >= 5 ? "pass" : "fail";
            rec.graph6 = to_graph6(g);
            return rec;
        });
    VerdictRecord sampling;
    sampling.command = "extremal";
    sampling.status = opts.samples == 0 || violations == 0 ? "pass" : "fail";
    sampling.data["phase"] = "low_degree_sampling";
    sampling.data["samples"] = opts.samples;
    sampling.data["all_alpha_ge5"] = violations == 0;
    sampling.data["min_alpha"] = opts.samples == 0 ? nullptr : Json(min_alpha.load());
    for (const VerdictRecord& rec : sampled)
        if (rec.status == "fail") {
            sampling.data["counterexample_graph6"] = rec.graph6;
            break;
        }
    out << sampling.to_line() << '\n';
    if (sampling.status == "fail")
        code = 1;

    VerdictRecord summary;
    summary.command = "extremal";
    summary.status = "summary";
    summary.data = status_counts(records);
    summary.data["phase"] = "summary";
    summary.data["graphs"] = records.size();
    summary.data["alpha4"] = alpha4;
    summary.data["all_alpha4_tight"] = all_alpha4_tight;
    summary.data["g13_found"] = g13_found;
    summary.data["g13_canonical_graph6"] = g13_label;
    summary.data["sampling_ok"] = sampling.status == "pass";
    out << summary.to_line() << '\n';
    if (!g13_found || !all_alpha4_tight)
        code = 1;
    return code;
}

} // namespace egt
