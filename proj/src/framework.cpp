#include "rigidity/framework.hpp"

#include <random>

namespace rigidity {

namespace {

template <typename T, typename Draw>
Framework<T> sample_placement(const Multigraph& g, int d, uint64_t seed, Draw draw) {
    if (d < 1) throw std::invalid_argument("placement: d must be >= 1");
    Framework<T> fw;
    fw.graph = g;
    fw.d = d;
    fw.seed = seed;
    std::mt19937_64 rng(splitmix64(seed));
    while (true) {
        fw.placement.assign(g.n, {});
        for (int v = 0; v < g.n; ++v) {
            fw.placement[v].reserve(d);
            for (int k = 0; k < d; ++k) fw.placement[v].push_back(draw(rng));
        }
        bool collision = false;
        for (int a = 0; a < g.n && !collision; ++a)
            for (int b = a + 1; b < g.n && !collision; ++b)
                if (fw.placement[a] == fw.placement[b]) collision = true;
        if (!collision) return fw;
    }
}

} // namespace

Framework<Fp61> random_generic_placement(const Multigraph& g, int d, uint64_t seed) {
    return sample_placement<Fp61>(g, d, seed, [](std::mt19937_64& rng) {
        uint64_t x;
        do {
            x = rng() & Fp61::P;
        } while (x == Fp61::P);
        return Fp61(x);
    });
}

Framework<Rational> random_rational_placement(const Multigraph& g, int d, uint64_t seed) {
    return sample_placement<Rational>(g, d, seed, [](std::mt19937_64& rng) {
        return Rational(static_cast<long long>(rng() >> 34));
    });
}

Framework<Rational> make_rational_framework(const Multigraph& g, int d,
                                            const std::vector<std::vector<long long>>& coords) {
    if (static_cast<int>(coords.size()) != g.n)
        throw std::invalid_argument("make_rational_framework: coordinate row count != n");
    Framework<Rational> fw;
    fw.graph = g;
    fw.d = d;
    for (const auto& row : coords) {
        if (static_cast<int>(row.size()) != d)
            throw std::invalid_argument("make_rational_framework: coordinate row length != d");
        std::vector<Rational> r;
        r.reserve(d);
        for (long long x : row) r.emplace_back(x);
        fw.placement.push_back(std::move(r));
    }
    return fw;
}

} // namespace rigidity
