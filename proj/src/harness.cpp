#include "rigidity/harness.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace rigidity {

std::vector<Multigraph> enumerate_graphs(int n, int m) {
    if (n < 1 || n > 8) throw std::invalid_argument("enumerate_graphs: n must be in 1..8");
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::vector<Multigraph> out;
    if (m < 0 || m > static_cast<int>(pairs.size())) return out;

    std::unordered_set<std::string> seen;
    std::vector<int> pick(m);
    auto choose = [&](auto&& self, int next, int depth) -> void {
        if (depth == m) {
            Multigraph g(n);
            for (int i = 0; i < m; ++i) g.add_edge(pairs[pick[i]].first, pairs[pick[i]].second);
            if (!g.is_connected()) return;
            if (seen.insert(canonical_form(g)).second) out.push_back(std::move(g));
            return;
        }
        for (int i = next; i <= static_cast<int>(pairs.size()) - (m - depth); ++i) {
            pick[depth] = i;
            self(self, i + 1, depth + 1);
        }
    };
    choose(choose, 0, 0);
    return out;
}

bool laman_check(const Multigraph& g) {
    if (!g.is_simple()) throw std::invalid_argument("laman_check: parallel edges not allowed");
    if (g.n < 2 || g.n > 10) throw std::invalid_argument("laman_check: n must be in 2..10");
    if (g.edge_count() != 2 * g.n - 3) return false;
    for (unsigned mask = 1; mask < (1u << g.n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size < 2) continue;
        int induced = 0;
        for (const Edge& e : g.edges)
            if ((mask >> e.u & 1) && (mask >> e.v & 1)) ++induced;
        if (induced > 2 * size - 3) return false;
    }
    return true;
}

Multigraph double_banana() {
    Multigraph g(8);
    auto clique_minus_hinge = [&](const std::vector<int>& verts) {
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j) {
                int a = verts[i], b = verts[j];
                if ((a == 0 && b == 1) || (a == 1 && b == 0)) continue;
                g.add_edge(a, b);
            }
    };
    clique_minus_hinge({0, 1, 2, 3, 4});
    clique_minus_hinge({0, 1, 5, 6, 7});
    return g;
}

ScanReport scan_corpus(const std::vector<Multigraph>& graphs, int d, int trials, uint64_t seed,
                       const std::string& corpus_desc, int jobs, const TheoremOptions& opts) {
    if (jobs < 1) jobs = 1;
    ScanReport rep;
    rep.corpus = corpus_desc;
    rep.d = d;
    rep.trials = trials;
    rep.seed = seed;
    rep.size = static_cast<int>(graphs.size());

    std::vector<std::optional<ComparisonResult>> results(graphs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= graphs.size()) return;
            if (graphs[i].n < d + 1) continue; // tallied afterwards
            results[i] = compare_with_rank(graphs[i], d, trials, seed, opts);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (!results[i]) {
            ++rep.not_applicable;
            continue;
        }
        rep.stats.paths_checked += results[i]->theorem.paths_checked;
        for (const PathResult& pr : results[i]->theorem.path_results)
            if (pr.decomposable) ++rep.stats.decompositions_succeeded;
        if (results[i]->discrepant)
            rep.discrepancies.push_back(std::move(*results[i]));
        else
            ++rep.agreements;
    }
    return rep;
}

} // namespace rigidity
