#include "rigidity/theorem.hpp"

#include <stdexcept>

namespace rigidity {

std::string to_string(TheoremClaim c) {
    switch (c) {
        case TheoremClaim::MinimallyRigid: return "claims-minimally-rigid";
        case TheoremClaim::NotRigid: return "claims-not-rigid";
        case TheoremClaim::NotApplicable: return "not-applicable";
    }
    return "?";
}

TheoremClaim decide_claim(int n, int d, bool edge_count_ok, int paths_checked,
                          bool all_decomposable) {
    if (n < d + 1) return TheoremClaim::NotApplicable;
    if (!edge_count_ok) return TheoremClaim::NotRigid;
    // A graph with no path on d distinct vertices cannot be pronounced rigid
    // by a universally quantified test over an empty set.
    if (paths_checked == 0) return TheoremClaim::NotRigid;
    return all_decomposable ? TheoremClaim::MinimallyRigid : TheoremClaim::NotRigid;
}

TheoremReport decomposition_test(const Multigraph& g, int d, const TheoremOptions& opts) {
    if (d < 2) throw std::invalid_argument("decomposition_test: d must be >= 2");
    if (d > opts.dim_cap)
        throw std::invalid_argument("decomposition_test: d exceeds the configured cap of " +
                                    std::to_string(opts.dim_cap));
    TheoremReport rep;
    rep.graph = g;
    rep.d = d;
    rep.target_edges = rigid_rank_target(g.n, d);
    rep.edge_count_ok = (g.edge_count() == rep.target_edges);

    if (g.n < d + 1) {
        rep.claim = TheoremClaim::NotApplicable;
        rep.note = "fewer than d+1 vertices";
        return rep;
    }
    if (!rep.edge_count_ok) {
        rep.claim = TheoremClaim::NotRigid;
        rep.note = "edge count " + std::to_string(g.edge_count()) + " != " +
                   std::to_string(rep.target_edges);
        return rep;
    }

    auto paths = enumerate_paths(g, d);
    if (paths.empty()) {
        rep.claim = TheoremClaim::NotRigid;
        rep.note = "no path on d distinct vertices; cannot certify rigidity vacuously";
        return rep;
    }

    bool all_ok = true;
    for (const OrderedPath& p : paths) {
        Augmentation aug = augment(g, p, d);
        DecomposeResult dr = decompose_into_spanning_trees(aug.result, d);
        PathResult pr;
        pr.path = p;
        pr.decomposable = dr.ok();
        if (dr.ok()) {
            pr.decomposition = std::move(dr.decomposition);
        } else {
            pr.refusal = dr.refusal;
            pr.witness = std::move(dr.witness);
            all_ok = false;
        }
        rep.path_results.push_back(std::move(pr));
        ++rep.paths_checked;
        if (!all_ok && opts.fast) break;
    }
    rep.claim = decide_claim(g.n, d, rep.edge_count_ok, rep.paths_checked, all_ok);
    return rep;
}

ComparisonResult compare_with_rank(const Multigraph& g, int d, int trials, uint64_t seed,
                                   const TheoremOptions& opts) {
    if (g.n < d + 1)
        throw std::invalid_argument("compare_with_rank: needs n >= d+1");
    ComparisonResult cmp;
    cmp.graph = g;
    cmp.d = d;
    cmp.theorem = decomposition_test(g, d, opts);
    cmp.rank = rigidity_verdict(g, d, trials, seed);
    bool theorem_rigid = cmp.theorem.claim == TheoremClaim::MinimallyRigid;
    bool rank_rigid = cmp.rank.verdict == RigidityClass::MinimallyRigid;
    cmp.discrepant = (theorem_rigid != rank_rigid);
    return cmp;
}

PathBudget path_budget(const Multigraph& g) {
    if (!g.is_simple()) throw std::invalid_argument("path_budget: graph must be simple");
    PathBudget b;
    b.paths = static_cast<long long>(enumerate_paths(g, 3).size());
    long long m = g.edge_count();
    b.bound = m * (m - 1);
    b.within = b.paths < b.bound;
    return b;
}

bool path_budget_check(const Multigraph& g) { return path_budget(g).within; }

} // namespace rigidity
