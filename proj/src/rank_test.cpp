#include "rigidity/rank_test.hpp"

#include <algorithm>
#include <stdexcept>

namespace rigidity {

std::string to_string(RigidityClass c) {
    switch (c) {
        case RigidityClass::MinimallyRigid: return "minimally-rigid";
        case RigidityClass::RigidWithRedundancy: return "rigid-with-redundancy";
        case RigidityClass::Flexible: return "flexible";
        case RigidityClass::NotApplicable: return "not-applicable";
    }
    return "?";
}

namespace {

uint64_t trial_seed(uint64_t seed, int trial) {
    return splitmix64(seed ^ (0xA5A5A5A5A5A5A5A5ULL + static_cast<uint64_t>(trial)));
}

} // namespace

int generic_rank(const Multigraph& g, int d, int trials, uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("generic_rank: trials must be >= 1");
    int best = 0;
    for (int t = 0; t < trials; ++t) {
        auto fw = random_generic_placement(g, d, trial_seed(seed, t));
        best = std::max(best, static_cast<int>(matrix_rank(build_rigidity_matrix(fw))));
    }
    return best;
}

int generic_rank_rational(const Multigraph& g, int d, uint64_t seed) {
    auto fw = random_rational_placement(g, d, seed);
    return static_cast<int>(matrix_rank(build_rigidity_matrix(fw)));
}

RigidityVerdict rigidity_verdict(const Multigraph& g, int d, int trials, uint64_t seed) {
    RigidityVerdict v;
    v.d = d;
    v.m = g.edge_count();
    v.target = rigid_rank_target(g.n, d);
    v.edge_count_ok = (v.m == v.target);
    v.rank = generic_rank(g, d, trials, seed);
    v.flex_dim = v.target - v.rank;
    v.seed = seed;
    v.trials = trials;
    if (g.n < d + 1) {
        v.verdict = RigidityClass::NotApplicable;
    } else if (v.rank == v.target) {
        v.verdict = v.edge_count_ok ? RigidityClass::MinimallyRigid
                                    : RigidityClass::RigidWithRedundancy;
    } else {
        v.verdict = RigidityClass::Flexible;
    }
    return v;
}

std::optional<std::vector<int>> find_stress_circuit(const Multigraph& g, int d, uint64_t seed) {
    auto fw = random_generic_placement(g, d, seed);
    Matrix<Fp61> r = build_rigidity_matrix(fw);

    auto dependent = [&](const std::vector<int>& ids) {
        std::vector<std::size_t> rows(ids.begin(), ids.end());
        return matrix_rank(r.select_rows(rows)) < rows.size();
    };

    std::vector<int> all(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) all[i] = i;
    if (!dependent(all)) return std::nullopt;

    // One pass suffices: an edge whose removal was refused earlier stays
    // necessary as the set shrinks.
    std::vector<int> cur = all;
    for (int e = 0; e < g.edge_count(); ++e) {
        std::vector<int> without;
        without.reserve(cur.size());
        for (int x : cur)
            if (x != e) without.push_back(x);
        if (without.size() == cur.size()) continue;
        if (dependent(without)) cur = std::move(without);
    }
    return cur;
}

} // namespace rigidity
