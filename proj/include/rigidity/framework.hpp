#ifndef RIGIDITY_FRAMEWORK_HPP
#define RIGIDITY_FRAMEWORK_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rigidity/fp61.hpp"
#include "rigidity/linalg.hpp"
#include "rigidity/multigraph.hpp"
#include "rigidity/rational.hpp"

namespace rigidity {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// A multigraph together with a placement of its vertices in d-space over an
// exact coordinate domain (Fp61 or Rational).
template <typename T>
struct Framework {
    Multigraph graph;
    int d = 0;
    std::vector<std::vector<T>> placement; // one length-d vector per vertex
    uint64_t seed = 0;
};

// Uniform placement over Z_p, deterministic in the seed. Placements with two
// coinciding vertices are redrawn.
Framework<Fp61> random_generic_placement(const Multigraph& g, int d, uint64_t seed);

// Integer coordinates in [0, 2^30) embedded as exact rationals; same
// redraw-on-collision rule. This is the exact-arithmetic path used when the
// field computation needs independent confirmation.
Framework<Rational> random_rational_placement(const Multigraph& g, int d, uint64_t seed);

// Framework from explicit integer coordinates (tests, fixtures).
Framework<Rational> make_rational_framework(const Multigraph& g, int d,
                                            const std::vector<std::vector<long long>>& coords);

// m x (d*n) matrix; the row of edge {u,v} holds p_u - p_v in u's column
// block and p_v - p_u in v's, zeros elsewhere.
template <typename T>
Matrix<T> build_rigidity_matrix(const Framework<T>& fw) {
    const Multigraph& g = fw.graph;
    if (static_cast<int>(fw.placement.size()) != g.n)
        throw std::invalid_argument("build_rigidity_matrix: placement size mismatch");
    Matrix<T> r(g.edge_count(), static_cast<std::size_t>(fw.d) * g.n);
    for (int id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edges[id];
        for (int k = 0; k < fw.d; ++k) {
            T diff = fw.placement[e.u][k] - fw.placement[e.v][k];
            r.at(id, static_cast<std::size_t>(e.u) * fw.d + k) = diff;
            r.at(id, static_cast<std::size_t>(e.v) * fw.d + k) = -diff;
        }
    }
    return r;
}

} // namespace rigidity

#endif
