#include "rigidity/treedecomp.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace rigidity {

std::string to_string(RefusalReason r) {
    switch (r) {
        case RefusalReason::EdgeCount: return "edge-count";
        case RefusalReason::Disconnected: return "disconnected";
        case RefusalReason::Infeasible: return "infeasible";
    }
    return "?";
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

// Edge path between u and v inside the forest given by per-vertex adjacency
// (edge id, neighbor); empty when u and v are disconnected.
std::vector<int> forest_path(const std::vector<std::vector<std::pair<int, int>>>& adj, int u,
                             int v) {
    if (u == v) return {};
    std::vector<int> via_edge(adj.size(), -1), prev(adj.size(), -1);
    std::deque<int> queue{u};
    std::vector<bool> seen(adj.size(), false);
    seen[u] = true;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        if (x == v) break;
        for (const auto& [id, w] : adj[x]) {
            if (seen[w]) continue;
            seen[w] = true;
            via_edge[w] = id;
            prev[w] = x;
            queue.push_back(w);
        }
    }
    if (!seen[v]) return {};
    std::vector<int> path;
    for (int x = v; x != u; x = prev[x]) path.push_back(via_edge[x]);
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace

DecomposeResult decompose_into_spanning_trees(const Multigraph& g, int k) {
    if (k < 1) throw std::invalid_argument("decompose_into_spanning_trees: k must be >= 1");
    DecomposeResult res;
    if (!g.is_connected()) {
        res.refusal = RefusalReason::Disconnected;
        return res;
    }
    const int n = g.n;
    const int m = g.edge_count();
    if (m != k * std::max(0, n - 1)) {
        res.refusal = RefusalReason::EdgeCount;
        return res;
    }

    // assignment[e] = forest owning edge e, or -1.
    std::vector<int> assignment(m, -1);
    // Forest adjacency per copy: forest_adj[f][v] = list of (edge id, neighbor).
    std::vector<std::vector<std::vector<std::pair<int, int>>>> forest_adj(
        k, std::vector<std::vector<std::pair<int, int>>>(n));

    auto attach = [&](int f, int e) {
        assignment[e] = f;
        forest_adj[f][g.edges[e].u].push_back({e, g.edges[e].v});
        forest_adj[f][g.edges[e].v].push_back({e, g.edges[e].u});
    };
    auto detach = [&](int f, int e) {
        assignment[e] = -1;
        auto scrub = [&](int v) {
            auto& lst = forest_adj[f][v];
            lst.erase(std::find_if(lst.begin(), lst.end(),
                                   [&](const auto& p) { return p.first == e; }));
        };
        scrub(g.edges[e].u);
        scrub(g.edges[e].v);
    };
    auto joins_components = [&](int f, int e) {
        Dsu dsu(n);
        for (int id = 0; id < m; ++id)
            if (assignment[id] == f) dsu.unite(g.edges[id].u, g.edges[id].v);
        return dsu.find(g.edges[e].u) != dsu.find(g.edges[e].v);
    };

    for (int e0 = 0; e0 < m; ++e0) {
        // Breadth-first search over exchange moves, first-label wins.
        std::vector<int> pred(m, -2), pred_forest(m, -1);
        pred[e0] = -1;
        std::deque<int> queue{e0};
        int sink_edge = -1, sink_forest = -1;
        while (!queue.empty() && sink_edge < 0) {
            int f = queue.front();
            queue.pop_front();
            for (int i = 0; i < k && sink_edge < 0; ++i) {
                if (assignment[f] == i) continue;
                if (joins_components(i, f)) {
                    sink_edge = f;
                    sink_forest = i;
                    break;
                }
                for (int c : forest_path(forest_adj[i], g.edges[f].u, g.edges[f].v)) {
                    if (pred[c] != -2) continue;
                    pred[c] = f;
                    pred_forest[c] = i;
                    queue.push_back(c);
                }
            }
        }
        if (sink_edge < 0) {
            // Every labeled edge lies in the span of the labeled part of
            // each forest; the vertices they touch form an overloaded set.
            std::vector<bool> in_block(n, false);
            in_block[g.edges[e0].u] = in_block[g.edges[e0].v] = true;
            for (int id = 0; id < m; ++id) {
                if (pred[id] != -2) {
                    in_block[g.edges[id].u] = true;
                    in_block[g.edges[id].v] = true;
                }
            }
            PartitionWitness w;
            std::vector<int> block;
            for (int v = 0; v < n; ++v) {
                if (in_block[v])
                    block.push_back(v);
                else
                    w.blocks.push_back({v});
            }
            w.blocks.insert(w.blocks.begin(), block);
            for (int id = 0; id < m; ++id)
                if (!(in_block[g.edges[id].u] && in_block[g.edges[id].v])) ++w.cross_edges;
            w.required = k * (static_cast<int>(w.blocks.size()) - 1);
            res.refusal = RefusalReason::Infeasible;
            res.witness = std::move(w);
            return res;
        }
        // Apply the exchange chain back to e0.
        int cur = sink_edge, into = sink_forest;
        while (true) {
            int from = assignment[cur];
            if (from >= 0) detach(from, cur);
            attach(into, cur);
            if (cur == e0) break;
            cur = pred[cur];
            into = from;
        }
    }

    TreeDecomposition dec;
    dec.k = k;
    dec.graph = g;
    dec.trees.assign(k, {});
    for (int id = 0; id < m; ++id) dec.trees[assignment[id]].push_back(id);
    if (!verify_decomposition(dec))
        throw std::logic_error("decompose_into_spanning_trees: exchange bookkeeping broke a forest");
    res.decomposition = std::move(dec);
    return res;
}

bool verify_decomposition(const TreeDecomposition& dec) {
    const Multigraph& g = dec.graph;
    const int n = g.n;
    const int m = g.edge_count();
    if (dec.k < 1 || static_cast<int>(dec.trees.size()) != dec.k) return false;
    std::vector<int> owner(m, -1);
    for (int t = 0; t < dec.k; ++t) {
        for (int id : dec.trees[t]) {
            if (id < 0 || id >= m || owner[id] != -1) return false;
            owner[id] = t;
        }
    }
    for (int id = 0; id < m; ++id)
        if (owner[id] == -1) return false;
    for (const auto& tree : dec.trees) {
        if (static_cast<int>(tree.size()) != std::max(0, n - 1)) return false;
        Dsu dsu(n);
        int components = n;
        for (int id : tree) {
            if (!dsu.unite(g.edges[id].u, g.edges[id].v)) return false; // cycle
            --components;
        }
        if (n > 0 && components != 1) return false; // not spanning
    }
    return true;
}

} // namespace rigidity
