#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclepack/graph.hpp"

namespace cyclepack::oracle {

// Work limits for the brute-force routines.  Exhaustion raises CapExceeded;
// none of them ever return a wrong answer.
struct OracleBudget {
    int max_vertices = 16;
    long long max_cycles = 200000;
    long long max_steps = 20000000;
};

// Every simple cycle of the alive subgraph, each once, in canonical form,
// sorted (by length, then lexicographically).
std::vector<Cycle> enumerate_cycles(const Graph& g, const OracleBudget& budget);
std::vector<Cycle> enumerate_cycles(const Graph& g, const VertexMask& alive,
                                    const OracleBudget& budget);

// Smallest X (minimum size, then lexicographically first) whose closed
// radius-r ball meets every cycle: G - ball(X, r) is a forest.  r = 0 is the
// ordinary feedback vertex set.
VertexSet min_ball_fvs_bruteforce(const Graph& g, int r, const OracleBudget& budget);

// Exhaustive search for k pairwise vertex-disjoint cycles with no edges
// between distinct cycles.  Absent iff no such family exists.
std::optional<std::vector<Cycle>> max_induced_packing_bruteforce(const Graph& g, int k,
                                                                 const OracleBudget& budget);

// Exhaustive search for k pairwise vertex-disjoint cycles (edges between
// cycles allowed).
std::optional<std::vector<Cycle>> disjoint_cycles_bruteforce(const Graph& g, int k,
                                                             const OracleBudget& budget);

// Two cycles at graph distance > d, if any pair exists.
std::optional<std::pair<Cycle, Cycle>> distance_packing_exists_bruteforce(
    const Graph& g, int d, const OracleBudget& budget);

// True iff no vertex has t pairwise non-adjacent neighbours (no induced K_1,t).
bool is_k1t_free(const Graph& g, int t, const OracleBudget& budget);

// Exact independence number of the subgraph induced by `verts`; branch and
// bound, raises CapExceeded past the step budget.
int exact_independence_number(const Graph& g, const VertexSet& verts,
                              const OracleBudget& budget);

// --- certificate checks ------------------------------------------------------
// These recompute everything from graph-core primitives; they share no code
// with the certificate producers.

struct VerifyResult {
    bool ok = true;
    std::string reason;
};

VerifyResult verify_packing(const Graph& g, const std::vector<Cycle>& cycles, int k);
VerifyResult verify_hitting(const Graph& g, const VertexSet& x, int radius, double bound);
VerifyResult verify_distance_cycles(const Graph& g, const Cycle& c1, const Cycle& c2, int d);
VerifyResult verify_distance_hitting(const Graph& g, const VertexSet& x1, const VertexSet& x2,
                                     int d);

struct TreeDecompositionView {
    const std::vector<VertexSet>& bags;
    const std::vector<std::pair<int, int>>& tree_edges;
};

VerifyResult verify_tree_decomposition(const Graph& g, const std::vector<VertexSet>& bags,
                                       const std::vector<std::pair<int, int>>& tree_edges);

} // namespace cyclepack::oracle
