#ifndef RIGIDITY_MULTIGRAPH_HPP
#define RIGIDITY_MULTIGRAPH_HPP

#include <string>
#include <utility>
#include <vector>

namespace rigidity {

// Endpoints of one edge; the edge id is its index in Multigraph::edges.
struct Edge {
    int u = 0;
    int v = 0;
    friend bool operator==(const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }
};

// Undirected multigraph on vertices 0..n-1. Parallel edges are allowed,
// self-loops are not. Edge ids are dense and stable: 0..m-1 in insertion
// order.
struct Multigraph {
    int n = 0;
    std::vector<Edge> edges;

    Multigraph() = default;
    explicit Multigraph(int vertex_count) : n(vertex_count) {}

    int edge_count() const { return static_cast<int>(edges.size()); }

    // Validates endpoints and appends; throws std::invalid_argument on
    // self-loops or out-of-range vertices.
    int add_edge(int u, int v);

    std::vector<int> degrees() const;
    bool is_simple() const;
    bool is_connected() const;

    // Per vertex: (neighbor, lowest edge id to that neighbor), sorted by
    // neighbor. Parallel edges collapse to one entry.
    std::vector<std::vector<std::pair<int, int>>> neighbor_map() const;

    friend bool operator==(const Multigraph& a, const Multigraph& b) {
        return a.n == b.n && a.edges == b.edges;
    }
};

// Directed simple path on d distinct vertices, realized by d-1 edges of the
// host graph.
struct OrderedPath {
    std::vector<int> vertices;
    std::vector<int> edge_ids;

    int length() const { return static_cast<int>(edge_ids.size()); }
    OrderedPath reversed() const;
    friend bool operator==(const OrderedPath& a, const OrderedPath& b) {
        return a.vertices == b.vertices && a.edge_ids == b.edge_ids;
    }
};

// Result of the path-multiplication rule: the i-th path edge (1-indexed)
// is added d-i more times, so the result carries C(d,2) new edges appended
// after the base graph's.
struct Augmentation {
    Multigraph base;
    OrderedPath path;
    Multigraph result;
    int added_count = 0;
};

// graph6 decoder for simple graphs (n <= 2^18). Edge ids are assigned in
// row-major upper-triangle order. Throws std::runtime_error naming the
// offending byte offset on malformed input.
Multigraph parse_graph6(const std::string& text);

// JSON document {"n": int, "edges": [[u,v],...]}; duplicate pairs are kept
// as parallel edges in listed order.
Multigraph parse_edge_list(const std::string& json_text);

// Inverse of parse_edge_list (same JSON shape, edge order preserved).
std::string serialize_edge_list(const Multigraph& g);

// All directed simple paths on exactly d distinct vertices whose
// consecutive pairs are edges of g. Both orientations appear. When parallel
// edges join a consecutive pair only one path per vertex sequence is
// emitted, carrying the lowest edge id.
std::vector<OrderedPath> enumerate_paths(const Multigraph& g, int d);

// Adds d-i copies of the i-th path edge (i = 1..d-1); new edge ids are
// appended after existing ones. Throws on a path/dimension mismatch.
Augmentation augment(const Multigraph& g, const OrderedPath& path, int d);

// Minimum over all vertex permutations of the sorted edge-multiset
// encoding; equal strings iff the multigraphs are isomorphic. Exhaustive
// permutation search, so n <= 9.
std::string canonical_form(const Multigraph& g);

} // namespace rigidity

#endif
