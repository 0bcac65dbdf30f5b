#include "rigidity/pinning.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rigidity {

PinnedSystem build_pinned_system(const Framework<Rational>& fw, const OrderedPath& path) {
    const int d = fw.d;
    if (d < 2) throw std::invalid_argument("build_pinned_system: d must be >= 2");

    PinnedSystem sys;
    sys.framework = fw;
    sys.path = path;
    sys.augmentation = augment(fw.graph, path, d); // also validates the path

    const Multigraph& g = fw.graph;
    const int n = g.n;
    const int m = g.edge_count();
    const int supports = (d + 1) * d / 2;
    const std::size_t cols = static_cast<std::size_t>(d) * n;

    Matrix<Rational> r = build_rigidity_matrix(fw);

    sys.stage_a = Matrix<Rational>(m + supports, cols);
    sys.stage_b = Matrix<Rational>(m + supports, cols);
    for (int e = 0; e < m; ++e)
        for (std::size_t c = 0; c < cols; ++c) {
            sys.stage_a.at(e, c) = r.at(e, c);
            sys.stage_b.at(e, c) = r.at(e, c);
        }
    for (int j = 0; j < d; ++j) {
        for (int k = j + 1; k <= d; ++k) {
            std::size_t row = m + sys.support_labels.size();
            sys.support_labels.emplace_back(j, k);
            std::size_t col = static_cast<std::size_t>(path.vertices[j]) * d + (k - 1);
            sys.stage_a.at(row, col) = Rational(1);
            sys.stage_b.at(row, col) = Rational(1);
            if (j >= 1) {
                std::size_t prev = static_cast<std::size_t>(path.vertices[j - 1]) * d + (k - 1);
                sys.stage_b.at(row, prev) = Rational(-1);
            }
        }
    }

    // Drop v_0's d support rows (the first d of the support block).
    const int retained = supports - d;
    sys.stage_c = Matrix<Rational>(m + retained, cols);
    for (int e = 0; e < m; ++e)
        for (std::size_t c = 0; c < cols; ++c) sys.stage_c.at(e, c) = sys.stage_b.at(e, c);
    for (int y = 0; y < retained; ++y)
        for (std::size_t c = 0; c < cols; ++c)
            sys.stage_c.at(m + y, c) = sys.stage_b.at(m + d + y, c);

    // Drop v_0's coordinate columns.
    const int v0 = path.vertices[0];
    sys.stage_d = Matrix<Rational>(m + retained, static_cast<std::size_t>(d) * (n - 1));
    for (int v = 0; v < n; ++v) {
        if (v == v0) continue;
        for (int k = 1; k <= d; ++k) sys.d_col_label.emplace_back(v, k);
    }
    for (std::size_t row = 0; row < sys.stage_d.rows(); ++row) {
        std::size_t out = 0;
        for (int v = 0; v < n; ++v) {
            if (v == v0) continue;
            for (int k = 0; k < d; ++k, ++out)
                sys.stage_d.at(row, out) = sys.stage_c.at(row, static_cast<std::size_t>(v) * d + k);
        }
    }

    // Retained support rows correspond, in order, to the augmentation's new
    // edges: position j of the path in direction k pairs with copy k-j-1 of
    // path edge j.
    sys.d_row_edge.resize(sys.stage_d.rows());
    std::iota(sys.d_row_edge.begin(), sys.d_row_edge.end(), 0);
    return sys;
}

bool pinned_invertible(const PinnedSystem& sys) {
    if (sys.stage_d.rows() != sys.stage_d.cols()) return false;
    return !(determinant(sys.stage_d) == Rational(0));
}

namespace {

bool is_spanning_tree(const Multigraph& g, const std::vector<int>& edge_ids) {
    if (static_cast<int>(edge_ids.size()) != std::max(0, g.n - 1)) return false;
    std::vector<int> parent(g.n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int components = g.n;
    for (int id : edge_ids) {
        int a = find(g.edges[id].u), b = find(g.edges[id].v);
        if (a == b) return false;
        parent[a] = b;
        --components;
    }
    return g.n == 0 || components == 1;
}

} // namespace

EliminationPartition extract_tree_partition(const PinnedSystem& sys, PivotRule rule) {
    const int d = sys.dim();
    if (sys.stage_d.rows() != sys.stage_d.cols())
        throw std::invalid_argument("extract_tree_partition: stage D is not square");

    Matrix<Rational> dt = sys.stage_d.transposed();
    const std::size_t side = dt.rows();

    // Row order under the chosen pivot rule; labels are (vertex, direction).
    std::vector<std::size_t> order(side);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        auto [va, ka] = sys.d_col_label[a];
        auto [vb, kb] = sys.d_col_label[b];
        if (rule == PivotRule::DirectionMajor)
            return std::tie(ka, va) < std::tie(kb, vb);
        return std::tie(va, ka) < std::tie(vb, kb);
    });
    Matrix<Rational> work = dt.select_rows(order);
    auto pivots = reduce_rref(work);

    EliminationPartition part;
    part.column_sets.assign(d, {});
    for (std::size_t c = 0; c < side; ++c) {
        if (!pivots[c])
            throw std::invalid_argument("extract_tree_partition: stage D is singular");
        auto [v, k] = sys.d_col_label[order[*pivots[c]]];
        int edge = sys.d_row_edge[c];
        part.column_sets[k - 1].push_back(edge);
        part.pivot_trace.push_back({edge, k, v});
    }

    // Direction-i equilibrium rows of the untouched stage_d^T, in vertex
    // order; one block per column set.
    const Multigraph& aug = sys.augmentation.result;
    const int v0 = sys.path.vertices[0];
    part.success = true;
    std::vector<std::vector<int>> trees;
    for (int dir = 1; dir <= d && part.success; ++dir) {
        std::vector<std::size_t> rows;
        for (std::size_t i = 0; i < side; ++i)
            if (sys.d_col_label[i].second == dir) rows.push_back(i);
        const auto& edge_set = part.column_sets[dir - 1];

        Matrix<Rational> block(rows.size(), edge_set.size());
        for (std::size_t rr = 0; rr < rows.size(); ++rr)
            for (std::size_t cc = 0; cc < edge_set.size(); ++cc)
                block.at(rr, cc) = dt.at(rows[rr], edge_set[cc]);
        part.blocks.push_back(block);

        std::string label = "T_" + std::to_string(dir);
        for (std::size_t cc = 0; cc < edge_set.size() && part.success; ++cc) {
            const Edge& e = aug.edges[edge_set[cc]];
            std::vector<int> hit;
            Rational sum(0);
            for (std::size_t rr = 0; rr < rows.size(); ++rr) {
                const Rational& x = block.at(rr, cc);
                if (!(x == Rational(0))) {
                    hit.push_back(sys.d_col_label[rows[rr]].first);
                    sum += x;
                }
            }
            std::vector<int> expect;
            if (e.u != v0) expect.push_back(e.u);
            if (e.v != v0) expect.push_back(e.v);
            std::sort(expect.begin(), expect.end());
            std::sort(hit.begin(), hit.end());
            if (hit.empty()) {
                part.failure = label + ": column of edge " + std::to_string(edge_set[cc]) +
                               " is zero in direction " + std::to_string(dir);
                part.success = false;
            } else if (hit != expect) {
                part.failure = label + ": nonzero pattern of edge " +
                               std::to_string(edge_set[cc]) + " does not match its endpoints";
                part.success = false;
            } else if (hit.size() == 2 && !(sum == Rational(0))) {
                part.failure = label + ": entries of edge " + std::to_string(edge_set[cc]) +
                               " do not cancel after unscaling";
                part.success = false;
            }
        }
        if (part.success && !is_spanning_tree(aug, edge_set)) {
            part.failure = label + ": edge set is not a spanning tree of the augmented graph";
            part.success = false;
        }
        if (part.success) trees.push_back(edge_set);
    }
    if (part.success) part.trees = std::move(trees);
    return part;
}

} // namespace rigidity
