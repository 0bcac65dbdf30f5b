#ifndef RIGIDITY_PINNING_HPP
#define RIGIDITY_PINNING_HPP

#include <string>
#include <utility>
#include <vector>

#include "rigidity/framework.hpp"
#include "rigidity/multigraph.hpp"

namespace rigidity {

// The four-stage pinned equilibrium system built along an ordered path
// (v_0..v_{d-1}):
//   stage_a: rigidity matrix plus C(d+1,2) unit support rows, one per
//            (path position j, direction k) with k in j+1..d;
//   stage_b: support rows of v_j (j >= 1) rewritten as +1/-1 differences
//            against v_{j-1}'s support in the same direction;
//   stage_c: stage_b without v_0's support rows;
//   stage_d: stage_c without v_0's coordinate columns. Square of side
//            d*(n-1) exactly when m = d*n - C(d+1,2).
// Exact rationals throughout.
struct PinnedSystem {
    Framework<Rational> framework;
    OrderedPath path;
    Augmentation augmentation; // retained support rows pair off with its new edges
    Matrix<Rational> stage_a, stage_b, stage_c, stage_d;
    std::vector<std::pair<int, int>> support_labels; // (path position, direction), stage_a order
    std::vector<int> d_row_edge;                     // stage_d row -> augmented edge id
    std::vector<std::pair<int, int>> d_col_label;    // stage_d col -> (vertex, direction)

    int dim() const { return framework.d; }
};

PinnedSystem build_pinned_system(const Framework<Rational>& fw, const OrderedPath& path);

// True iff stage_d is square with nonzero determinant.
bool pinned_invertible(const PinnedSystem& sys);

enum class PivotRule { DirectionMajor, VertexMajor };

struct PivotStep {
    int column_edge = 0; // augmented edge id owning the column
    int row_direction = 0;
    int row_vertex = 0;
};

// Column partition of stage_d^T induced by Gaussian elimination: column j
// joins set S_i when its pivot lands in a direction-i equilibrium row. Each
// block T_i (direction-i rows x S_i columns) is then read back, after
// unscaling, as a reduced incidence matrix; success means every block spells
// out a spanning tree of the augmented graph.
struct EliminationPartition {
    bool success = false;
    std::vector<std::vector<int>> column_sets; // S_i as augmented edge ids
    std::vector<Matrix<Rational>> blocks;      // T_i
    std::vector<std::vector<int>> trees;       // interpreted trees; empty on failure
    std::string failure;                       // which block failed and how
    std::vector<PivotStep> pivot_trace;
};

EliminationPartition extract_tree_partition(const PinnedSystem& sys,
                                            PivotRule rule = PivotRule::DirectionMajor);

} // namespace rigidity

#endif
