#ifndef RIGIDITY_TREEDECOMP_HPP
#define RIGIDITY_TREEDECOMP_HPP

#include <optional>
#include <string>
#include <vector>

#include "rigidity/multigraph.hpp"

namespace rigidity {

// A partition of all edges of `graph` into k edge-disjoint spanning trees.
struct TreeDecomposition {
    int k = 0;
    std::vector<std::vector<int>> trees; // edge ids, ascending within each tree
    Multigraph graph;
};

enum class RefusalReason { EdgeCount, Disconnected, Infeasible };

std::string to_string(RefusalReason r);

// Vertex partition with cross_edges < required = k*(|blocks|-1); certifies
// non-decomposability by the partition condition for tree packing.
struct PartitionWitness {
    std::vector<std::vector<int>> blocks;
    int cross_edges = 0;
    int required = 0;
};

struct DecomposeResult {
    std::optional<TreeDecomposition> decomposition;
    std::optional<RefusalReason> refusal;
    std::optional<PartitionWitness> witness; // present for Infeasible refusals

    bool ok() const { return decomposition.has_value(); }
};

// Constructive matroid union over k copies of the graphic matroid
// (augmenting-path exchanges, edges processed in ascending id). Full
// partition semantics: m must equal k*(n-1).
DecomposeResult decompose_into_spanning_trees(const Multigraph& g, int k);

// From-scratch certificate check of every TreeDecomposition invariant.
bool verify_decomposition(const TreeDecomposition& dec);

} // namespace rigidity

#endif
