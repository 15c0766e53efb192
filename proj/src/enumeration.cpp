#include "egt/enumeration.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <future>
#include <istream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "egt/graph6.hpp"

namespace egt {

namespace {

using Row = std::uint16_t;

int first(Row x) { return std::countr_zero(x); }
Row row_bit(int v) { return static_cast<Row>(1u << v); }

// Adjacency on at most 16 vertices, one 16-bit row per vertex.
struct SmallGraph {
    int n = 0;
    std::array<Row, kMaxEnumerationOrder> adj{};

    Row full() const { return static_cast<Row>((1u << n) - 1); }
    int degree(int v) const { return std::popcount(adj[static_cast<size_t>(v)]); }
    int edge_count() const {
        int total = 0;
        for (int v = 0; v < n; ++v)
            total += degree(v);
        return total / 2;
    }
};

SmallGraph to_small(const Graph& g) {
    SmallGraph s;
    s.n = g.order();
    for (int v = 0; v < s.n; ++v)
        s.adj[static_cast<size_t>(v)] = static_cast<Row>(g.neighbors(v));
    return s;
}

Graph to_graph(const SmallGraph& s) {
    EdgeList edges;
    for (int u = 0; u < s.n; ++u) {
        Row higher = static_cast<Row>(s.adj[static_cast<size_t>(u)] >> (u + 1));
        while (higher) {
            edges.push_back({u, u + 1 + first(higher)});
            higher &= static_cast<Row>(higher - 1);
        }
    }
    return Graph(s.n, edges);
}

using Perm = std::array<std::uint8_t, kMaxEnumerationOrder>;

// Lexicographically minimal adjacency bit string over all orderings, found by
// level-wise branch and bound: at each position only vertices whose column of
// adjacency bits toward the placed prefix is minimal can continue, twins are
// explored once, and prefixes that exceed the incumbent are cut.  Orderings
// that tie with the incumbent witness automorphisms; a capped sample of them
// (plus twin transpositions) is collected as generators.
struct CanonSearch {
    const SmallGraph& g;
    std::array<Row, kMaxEnumerationOrder> best_col{};
    Perm best_ord{};
    std::array<Row, kMaxEnumerationOrder> col{};   // accumulated column per vertex
    std::array<Row, kMaxEnumerationOrder> cur_col{};
    Perm ord{};
    std::uint64_t generation = 0; // bumped on every incumbent improvement
    std::vector<Perm>* gens = nullptr;

    static constexpr size_t kMaxGens = 24;
    static constexpr Row kUnset = 0xFFFF;

    explicit CanonSearch(const SmallGraph& graph) : g(graph) { best_col.fill(kUnset); }

    void record_gen(const Perm& p) {
        if (!gens || gens->size() >= kMaxGens)
            return;
        bool identity = true;
        for (int i = 0; i < g.n; ++i)
            if (p[static_cast<size_t>(i)] != i)
                identity = false;
        if (identity)
            return;
        for (const Perm& q : *gens)
            if (std::equal(q.begin(), q.begin() + g.n, p.begin()))
                return;
        gens->push_back(p);
    }

    void record_transposition(int u, int v) {
        if (!gens || gens->size() >= kMaxGens)
            return;
        Perm p{};
        for (int i = 0; i < g.n; ++i)
            p[static_cast<size_t>(i)] = static_cast<std::uint8_t>(i);
        std::swap(p[static_cast<size_t>(u)], p[static_cast<size_t>(v)]);
        record_gen(p);
    }

    void dfs(int level, Row placed, bool tight) {
        if (level == g.n) {
            if (!tight) {
                best_col = cur_col;
                best_ord = ord;
                ++generation;
            } else if (gens) {
                Perm inv{}; // position of v in the incumbent ordering
                for (int i = 0; i < g.n; ++i)
                    inv[best_ord[static_cast<size_t>(i)]] = static_cast<std::uint8_t>(i);
                Perm p{}; // incumbent vertex -> this ordering's vertex at the same position
                for (int v = 0; v < g.n; ++v)
                    p[static_cast<size_t>(v)] = ord[inv[static_cast<size_t>(v)]];
                record_gen(p);
            }
            return;
        }
        Row cands = static_cast<Row>(g.full() & ~placed);
        Row mincol = kUnset;
        for (Row it = cands; it; it &= static_cast<Row>(it - 1)) {
            Row c = col[static_cast<size_t>(first(it))];
            if (c < mincol)
                mincol = c;
        }
        if (tight) {
            if (mincol > best_col[static_cast<size_t>(level)])
                return;
            tight = mincol == best_col[static_cast<size_t>(level)];
        }

        std::array<std::uint8_t, kMaxEnumerationOrder> chosen{};
        int n_chosen = 0;
        for (Row it = cands; it; it &= static_cast<Row>(it - 1)) {
            int v = first(it);
            if (col[static_cast<size_t>(v)] != mincol)
                continue;
            bool twin = false;
            for (int i = 0; i < n_chosen; ++i) {
                int u = chosen[static_cast<size_t>(i)];
                Row mask = static_cast<Row>(~(row_bit(u) | row_bit(v)));
                if (((g.adj[static_cast<size_t>(u)] ^ g.adj[static_cast<size_t>(v)]) & mask) == 0) {
                    twin = true;
                    record_transposition(u, v);
                    break;
                }
            }
            if (!twin)
                chosen[static_cast<size_t>(n_chosen++)] = static_cast<std::uint8_t>(v);
        }

        for (int i = 0; i < n_chosen; ++i) {
            int v = chosen[static_cast<size_t>(i)];
            cur_col[static_cast<size_t>(level)] = mincol;
            ord[static_cast<size_t>(level)] = static_cast<std::uint8_t>(v);
            std::array<Row, kMaxEnumerationOrder> saved = col;
            for (Row it = static_cast<Row>(cands & ~row_bit(v)); it;
                 it &= static_cast<Row>(it - 1)) {
                int u = first(it);
                col[static_cast<size_t>(u)] = static_cast<Row>(
                    (col[static_cast<size_t>(u)] << 1) |
                    ((g.adj[static_cast<size_t>(u)] >> v) & 1));
            }
            std::uint64_t before = generation;
            dfs(level + 1, static_cast<Row>(placed | row_bit(v)), tight);
            col = saved;
            if (generation != before)
                tight = true; // the incumbent now shares this node's prefix
        }
    }

    void run(std::vector<Perm>* generators) {
        gens = generators;
        dfs(0, 0, true);
    }
};

std::string encode_permuted(const SmallGraph& g, const Perm& ord) {
    std::string out;
    out.push_back(static_cast<char>(g.n + 63));
    int acc = 0, filled = 0;
    for (int j = 1; j < g.n; ++j) {
        for (int i = 0; i < j; ++i) {
            int bit = (g.adj[ord[static_cast<size_t>(i)]] >> ord[static_cast<size_t>(j)]) & 1;
            acc = (acc << 1) | bit;
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

struct CanonResult {
    std::string label;
    Perm order{};
};

CanonResult canonical_label_small(const SmallGraph& g, std::vector<Perm>* gens = nullptr) {
    CanonSearch search(g);
    search.run(gens);
    return {encode_permuted(g, search.best_ord), search.best_ord};
}

// ------------------------------------------------------------- enumeration

struct EffectiveConstraints {
    int target = 1;
    bool triangle_free = false;
    bool connected = false;
    int degree_cap = kMaxEnumerationOrder; // max degree any vertex may reach
    int required_degree = -1;              // exact final degree (regular), -1 if free
    int required_min_degree = 0;           // final minimum degree
};

EffectiveConstraints make_effective(const ClassConstraints& c) {
    c.validate();
    EffectiveConstraints e;
    e.target = c.max_order;
    e.triangle_free = c.triangle_free;
    e.connected = c.connected;
    if (c.max_degree)
        e.degree_cap = *c.max_degree;
    if (c.regular_degree) {
        e.required_degree = *c.regular_degree;
        e.degree_cap = std::min(e.degree_cap, *c.regular_degree);
        e.required_min_degree = *c.regular_degree;
    }
    if (c.min_degree)
        e.required_min_degree = std::max(e.required_min_degree, *c.min_degree);
    return e;
}

// Necessary conditions for a partial graph to extend to the target: every
// future vertex can raise each current degree by at most one and contributes
// at most degree_cap endpoints in total.
bool extendable(const SmallGraph& g, const EffectiveConstraints& e) {
    int remaining = e.target - g.n;
    if (e.required_min_degree <= 0)
        return true;
    long long total_deficiency = 0;
    for (int v = 0; v < g.n; ++v) {
        int def = e.required_min_degree - g.degree(v);
        if (e.required_degree >= 0 && g.degree(v) > e.required_degree)
            return false;
        if (def > remaining)
            return false;
        if (def > 0)
            total_deficiency += def;
    }
    return total_deficiency <= static_cast<long long>(e.degree_cap) * remaining;
}

bool final_ok(const SmallGraph& g, const EffectiveConstraints& e) {
    for (int v = 0; v < g.n; ++v) {
        int d = g.degree(v);
        if (e.required_degree >= 0 && d != e.required_degree)
            return false;
        if (d < e.required_min_degree)
            return false;
    }
    return true;
}

// Cut vertices via DFS low-link.
Row cut_vertices(const SmallGraph& g) {
    std::array<int, kMaxEnumerationOrder> disc{}, low{};
    disc.fill(-1);
    Row cuts = 0;
    int timer = 0;
    struct Dfs {
        const SmallGraph& g;
        std::array<int, kMaxEnumerationOrder>& disc;
        std::array<int, kMaxEnumerationOrder>& low;
        Row& cuts;
        int& timer;
        void run(int v, int parent) {
            disc[static_cast<size_t>(v)] = low[static_cast<size_t>(v)] = timer++;
            int children = 0;
            bool skipped_parent = false;
            for (Row it = g.adj[static_cast<size_t>(v)]; it; it &= static_cast<Row>(it - 1)) {
                int to = first(it);
                if (to == parent && !skipped_parent) {
                    skipped_parent = true;
                    continue;
                }
                if (disc[static_cast<size_t>(to)] >= 0) {
                    low[static_cast<size_t>(v)] =
                        std::min(low[static_cast<size_t>(v)], disc[static_cast<size_t>(to)]);
                } else {
                    ++children;
                    run(to, v);
                    low[static_cast<size_t>(v)] =
                        std::min(low[static_cast<size_t>(v)], low[static_cast<size_t>(to)]);
                    if (parent >= 0 && low[static_cast<size_t>(to)] >= disc[static_cast<size_t>(v)])
                        cuts |= row_bit(v);
                }
            }
            if (parent < 0 && children > 1)
                cuts |= row_bit(v);
        }
    } dfs{g, disc, low, cuts, timer};
    for (int v = 0; v < g.n; ++v)
        if (disc[static_cast<size_t>(v)] < 0)
            dfs.run(v, -1);
    return cuts;
}

SmallGraph delete_small_vertex(const SmallGraph& g, int m) {
    SmallGraph out;
    out.n = g.n - 1;
    for (int v = 0; v < g.n; ++v) {
        if (v == m)
            continue;
        Row row = g.adj[static_cast<size_t>(v)];
        Row low = static_cast<Row>(row & (row_bit(m) - 1));
        Row high = static_cast<Row>((row >> (m + 1)) << m);
        int nv = v < m ? v : v - 1;
        out.adj[static_cast<size_t>(nv)] = static_cast<Row>(low | high);
    }
    return out;
}

struct Enumerator {
    EffectiveConstraints e;
    const std::function<bool(const Graph&)>& emit;
    bool stopped = false;

    // Apply an automorphism of the parent to a candidate neighborhood.
    static Row apply_perm(Row mask, const Perm& p) {
        Row out = 0;
        while (mask) {
            int v = first(mask);
            mask &= static_cast<Row>(mask - 1);
            out |= row_bit(p[static_cast<size_t>(v)]);
        }
        return out;
    }

    void candidate_subsets(const SmallGraph& g, std::vector<Row>& out) const {
        out.clear();
        Row eligible = 0;
        for (int v = 0; v < g.n; ++v)
            if (g.degree(v) < e.degree_cap)
                eligible |= row_bit(v);
        int remaining_after = e.target - (g.n + 1);
        int size_min = e.connected && g.n > 0 ? 1 : 0;
        if (e.required_min_degree > 0)
            size_min = std::max(size_min, e.required_min_degree - remaining_after);
        int size_max = std::min(e.degree_cap, g.n);
        if (size_min > size_max)
            return;
        struct Gen {
            const SmallGraph& g;
            bool triangle_free;
            int size_min, size_max;
            std::vector<Row>& out;
            void run(Row cur, int size, Row avail) {
                if (size >= size_min)
                    out.push_back(cur);
                if (size == size_max)
                    return;
                Row it = avail;
                while (it) {
                    int v = first(it);
                    it &= static_cast<Row>(it - 1);
                    Row next = it; // only vertices after v keep the order lexicographic
                    if (triangle_free)
                        next &= static_cast<Row>(~g.adj[static_cast<size_t>(v)]);
                    run(static_cast<Row>(cur | row_bit(v)), size + 1, next);
                }
            }
        } gen{g, e.triangle_free, size_min, size_max, out};
        gen.run(0, 0, eligible);
    }

    // True iff deleting the canonical-deletion vertex of h reproduces the
    // parent: this makes every class reachable exactly once.
    bool parent_check(const SmallGraph& h, const CanonResult& canon,
                      const std::string& parent_label) const {
        int added = h.n - 1;
        int m = -1;
        if (e.connected) {
            Row cuts = cut_vertices(h);
            std::array<int, kMaxEnumerationOrder> pos{};
            for (int i = 0; i < h.n; ++i)
                pos[canon.order[static_cast<size_t>(i)]] = i;
            int best_pos = -1;
            for (int v = 0; v < h.n; ++v)
                if (!(cuts & row_bit(v)) && pos[static_cast<size_t>(v)] > best_pos) {
                    best_pos = pos[static_cast<size_t>(v)];
                    m = v;
                }
        } else {
            m = canon.order[static_cast<size_t>(h.n - 1)];
        }
        if (m == added)
            return true;
        SmallGraph reduced = delete_small_vertex(h, m);
        return canonical_label_small(reduced).label == parent_label;
    }

    void grow(const SmallGraph& g, const std::string& label, const std::vector<Perm>& gens) {
        if (stopped)
            return;
        if (g.n == e.target) {
            if (final_ok(g, e) && !emit(to_graph(g)))
                stopped = true;
            return;
        }
        std::vector<Row> subsets;
        candidate_subsets(g, subsets);

        std::unordered_set<Row> orbit_seen;
        std::unordered_set<std::string> child_seen;
        for (Row s : subsets) {
            if (stopped)
                return;
            if (!gens.empty()) { // one candidate per orbit under Aut(parent)
                if (orbit_seen.count(s))
                    continue;
                std::vector<Row> frontier{s};
                orbit_seen.insert(s);
                while (!frontier.empty()) {
                    Row cur = frontier.back();
                    frontier.pop_back();
                    for (const Perm& p : gens) {
                        Row img = apply_perm(cur, p);
                        if (orbit_seen.insert(img).second)
                            frontier.push_back(img);
                    }
                }
            }
            SmallGraph h = g;
            h.adj[static_cast<size_t>(h.n)] = s;
            for (Row it = s; it; it &= static_cast<Row>(it - 1))
                h.adj[static_cast<size_t>(first(it))] |= row_bit(h.n);
            ++h.n;
            if (!extendable(h, e))
                continue;
            std::vector<Perm> child_gens;
            CanonResult canon = canonical_label_small(h, &child_gens);
            if (!child_seen.insert(canon.label).second)
                continue;
            if (parent_check(h, canon, label))
                grow(h, canon.label, child_gens);
        }
    }

    void run() {
        SmallGraph root;
        root.n = 1;
        if (!extendable(root, e))
            return;
        std::vector<Perm> gens;
        CanonResult canon = canonical_label_small(root, &gens);
        grow(root, canon.label, gens);
    }
};

} // namespace

void ClassConstraints::validate() const {
    if (max_order < 1 || max_order > kMaxEnumerationOrder)
        throw std::invalid_argument("enumeration order must be in 1.." +
                                    std::to_string(kMaxEnumerationOrder));
    if (max_degree && (*max_degree < 0 || *max_degree >= kMaxEnumerationOrder))
        throw std::invalid_argument("max_degree out of range");
    if (min_degree && (*min_degree < 0 || *min_degree >= kMaxEnumerationOrder))
        throw std::invalid_argument("min_degree out of range");
    if (regular_degree && (*regular_degree < 0 || *regular_degree >= kMaxEnumerationOrder))
        throw std::invalid_argument("regular_degree out of range");
    if (triangle_free && regular_degree && *regular_degree == 4 && max_order > 13)
        throw std::invalid_argument(
            "the 4-regular triangle-free subclass is supported up to order 13");
}

CanonicalLabeling canonical_labeling(const Graph& g) {
    if (g.order() > kMaxEnumerationOrder)
        throw std::invalid_argument("canonical labeling supports orders up to " +
                                    std::to_string(kMaxEnumerationOrder));
    CanonResult r = canonical_label_small(to_small(g));
    CanonicalLabeling out;
    out.label = r.label;
    out.order.assign(r.order.begin(), r.order.begin() + g.order());
    return out;
}

std::string canonical_form(const Graph& g) { return canonical_labeling(g).label; }

void enumerate(const ClassConstraints& c, const std::function<bool(const Graph&)>& emit) {
    Enumerator en{make_effective(c), emit};
    en.run();
}

void enumerate_parallel(const ClassConstraints& c, int workers,
                        const std::function<void(const Graph&)>& emit) {
    EffectiveConstraints e = make_effective(c);
    int seed_order = std::max(1, e.target - 3);
    if (workers <= 1 || seed_order >= e.target) {
        enumerate(c, [&emit](const Graph& g) {
            emit(g);
            return true;
        });
        return;
    }

    // Units are the enumeration subtrees rooted at the seed level.
    struct Seed {
        SmallGraph g;
        std::string label;
        std::vector<Perm> gens;
    };
    std::vector<Seed> seeds;
    {
        // Prefixes of class members satisfy the hereditary constraints only;
        // final-degree requirements apply at the target order alone, and
        // extendability toward the real target is hereditary, so filtering
        // the seed stream by it keeps exactly the sequential tree's level.
        ClassConstraints seed_c = c;
        seed_c.max_order = seed_order;
        seed_c.regular_degree.reset();
        seed_c.min_degree.reset();
        if (e.degree_cap < kMaxEnumerationOrder)
            seed_c.max_degree = e.degree_cap;
        enumerate(seed_c, [&](const Graph& g) {
            Seed s;
            s.g = to_small(g);
            CanonResult r = canonical_label_small(s.g, &s.gens);
            s.label = r.label;
            if (extendable(s.g, e))
                seeds.push_back(std::move(s));
            return true;
        });
    }

    std::vector<std::future<std::vector<Graph>>> futures(seeds.size());
    size_t next_launch = 0;
    size_t max_in_flight = static_cast<size_t>(workers) + 2;
    auto launch_some = [&](size_t flushed) {
        while (next_launch < seeds.size() && next_launch < flushed + max_in_flight) {
            size_t idx = next_launch++;
            futures[idx] = std::async(std::launch::async, [&e, &seeds, idx]() {
                std::vector<Graph> out;
                std::function<bool(const Graph&)> collect = [&out](const Graph& g) {
                    out.push_back(g);
                    return true;
                };
                Enumerator en{e, collect};
                en.grow(seeds[idx].g, seeds[idx].label, seeds[idx].gens);
                return out;
            });
        }
    };
    for (size_t i = 0; i < seeds.size(); ++i) {
        launch_some(i);
        for (const Graph& g : futures[i].get())
            emit(g);
    }
}

void ingest_graph6(std::istream& in, const std::function<void(const IngestItem&)>& cb) {
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        IngestItem item;
        item.line_no = line_no;
        item.line = line;
        if (line.empty()) {
            item.error = "empty line";
        } else {
            try {
                item.graph = from_graph6(line);
            } catch (const std::invalid_argument& ex) {
                item.error = ex.what();
            }
        }
        cb(item);
    }
}

} // namespace egt
