#ifndef RIGIDITY_HARNESS_HPP
#define RIGIDITY_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rigidity/multigraph.hpp"
#include "rigidity/theorem.hpp"

namespace rigidity {

// All connected simple graphs with n vertices and m edges, one per
// isomorphism class (labeled generation + canonical-form dedup, so n <= 8).
std::vector<Multigraph> enumerate_graphs(int n, int m);

// Planar counting condition: m = 2n-3 and every vertex subset with at least
// two vertices induces at most 2|V'|-3 edges. Exhaustive subset check,
// simple graphs with 2 <= n <= 10 only.
bool laman_check(const Multigraph& g);

// Two complete graphs on five vertices, each missing the same edge, glued
// along the two endpoints of that edge: 8 vertices, 18 = 3*8-6 edges, and a
// one-dimensional flex about the hinge pair {0,1}.
Multigraph double_banana();

// Deterministic work counters (no wall-clock state, so reports serialize
// byte-identically across runs).
struct ScanStats {
    long long paths_checked = 0;
    long long decompositions_succeeded = 0;
};

struct ScanReport {
    std::string corpus;
    int d = 0;
    int trials = 0;
    uint64_t seed = 0;
    int size = 0;
    int agreements = 0;
    int not_applicable = 0;
    std::vector<ComparisonResult> discrepancies;
    ScanStats stats;
};

// compare_with_rank over every graph; graphs with n < d+1 are tallied as
// not-applicable. Report order follows corpus order regardless of jobs.
ScanReport scan_corpus(const std::vector<Multigraph>& graphs, int d, int trials, uint64_t seed,
                       const std::string& corpus_desc = "", int jobs = 1,
                       const TheoremOptions& opts = {});

} // namespace rigidity

#endif
