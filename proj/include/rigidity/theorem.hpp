#ifndef RIGIDITY_THEOREM_HPP
#define RIGIDITY_THEOREM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rigidity/multigraph.hpp"
#include "rigidity/rank_test.hpp"
#include "rigidity/treedecomp.hpp"

namespace rigidity {

enum class TheoremClaim { MinimallyRigid, NotRigid, NotApplicable };

std::string to_string(TheoremClaim c);

struct PathResult {
    OrderedPath path;
    bool decomposable = false;
    std::optional<TreeDecomposition> decomposition;
    std::optional<PartitionWitness> witness;
    std::optional<RefusalReason> refusal;
};

struct TheoremReport {
    Multigraph graph;
    int d = 0;
    int target_edges = 0; // d*n - C(d+1,2)
    bool edge_count_ok = false;
    TheoremClaim claim = TheoremClaim::NotApplicable;
    int paths_checked = 0;
    std::vector<PathResult> path_results;
    std::string note;
};

struct TheoremOptions {
    bool fast = false; // stop at the first non-decomposable path
    int dim_cap = 6;
};

// Decision procedure: enumerate all directed paths on d distinct vertices,
// apply the multiplication rule to each, and ask for a partition into d
// edge-disjoint spanning trees. Rigidity is claimed only when the edge
// count matches, at least one path exists, and every augmentation
// decomposes.
TheoremReport decomposition_test(const Multigraph& g, int d, const TheoremOptions& opts = {});

// Claim assembly, exposed so the vacuous-path branch is testable on its own.
TheoremClaim decide_claim(int n, int d, bool edge_count_ok, int paths_checked,
                          bool all_decomposable);

struct ComparisonResult {
    Multigraph graph;
    int d = 0;
    TheoremReport theorem;
    RigidityVerdict rank;
    bool discrepant = false;
};

// Runs both deciders; a discrepancy is one method claiming minimal rigidity
// while the other denies it. Requires n >= d+1.
ComparisonResult compare_with_rank(const Multigraph& g, int d, int trials, uint64_t seed,
                                   const TheoremOptions& opts = {});

struct PathBudget {
    long long paths = 0;
    long long bound = 0; // m*(m-1)
    bool within = false; // paths < bound
};

// Path-count bound for d = 3 on simple graphs. Boundary cases (paths ==
// bound, e.g. the triangle) report within = false and are meant to be
// flagged by callers, not asserted on.
PathBudget path_budget(const Multigraph& g);
bool path_budget_check(const Multigraph& g);

} // namespace rigidity

#endif
