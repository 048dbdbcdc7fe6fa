#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclepack/errors.hpp"

namespace cyclepack {

// A set of vertex ids, kept sorted and duplicate-free by every producer.
using VertexSet = std::vector<int>;

// A walk v0, v1, ..., vk with consecutive vertices adjacent and all vertices
// distinct.
using Path = std::vector<int>;

// A cycle as its vertex sequence; consecutive vertices (cyclically) are
// adjacent, all vertices distinct, length >= 3 in a simple graph.  Canonical
// form: smallest vertex first, then the lexicographically smaller direction.
using Cycle = std::vector<int>;

// Per-vertex alive flag; algorithms that work on a vertex-deleted subgraph
// take one of these instead of materialising the subgraph.
using VertexMask = std::vector<char>;

// Simple undirected graph, immutable after construction, adjacency sorted.
class Graph {
public:
    Graph() = default;

    int n() const { return n_; }
    long long m() const { return m_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;

    // All edges as (u, v) with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const;

    friend Graph build_graph(int n, const std::vector<std::pair<int, int>>& edge_list);

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<std::vector<int>> adj_;
};

// Validates 0 <= u,v < n and u != v, drops duplicate edges, sorts adjacency.
// Throws InvalidInput on loops or out-of-range endpoints.
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edge_list);

// --- masks -----------------------------------------------------------------

VertexMask full_mask(int n);
VertexMask mask_without(const Graph& g, const VertexSet& removed);
VertexMask mask_from_set(int n, const VertexSet& s);
VertexSet set_from_mask(const VertexMask& mask);

// --- basic searches ----------------------------------------------------------

// BFS distances from all vertices of `sources` (restricted to alive vertices);
// unreachable/dead vertices get -1.
std::vector<int> bfs_distances(const Graph& g, const VertexSet& sources,
                               const VertexMask& alive);

// Closed ball of radius r around S, intersected with the alive set.
VertexSet ball(const Graph& g, const VertexSet& s, int r);
VertexSet ball(const Graph& g, const VertexSet& s, int r, const VertexMask& alive);

// Shortest cycle (girth witness) of the alive subgraph, in canonical form;
// absent on forests.  Deterministic: ties between shortest cycles are broken
// by a fixed BFS candidate order, so equal inputs give equal witnesses.
std::optional<Cycle> girth_cycle(const Graph& g);
std::optional<Cycle> girth_cycle(const Graph& g, const VertexMask& alive);

// Shortest cycle through vertex v in the alive subgraph; absent if none.
std::optional<Cycle> shortest_cycle_through(const Graph& g, int v, const VertexMask& alive);

// True iff deleting `removed` (a vertex set) leaves an acyclic graph.
bool is_forest_after_removal(const Graph& g, const VertexSet& removed);
bool is_forest(const Graph& g, const VertexMask& alive);

// Maximal subgraph of minimum degree >= 2: repeatedly peel vertices of degree
// <= 1.  Returns the surviving vertex set.
VertexSet two_core(const Graph& g);
VertexSet two_core(const Graph& g, const VertexMask& alive);

// --- bridges -----------------------------------------------------------------

// Partition of the alive vertices into bridgeless classes (components after
// removing all bridges), plus the forest those classes form.  Class ids are
// ordered by smallest contained vertex.
struct BridgeForest {
    int class_count = 0;
    std::vector<int> class_of;                      // per vertex; -1 if not alive
    std::vector<VertexSet> classes;                 // sorted members per class
    std::vector<std::pair<int, int>> bridges;       // original endpoints (u < v)
    std::vector<std::pair<int, int>> forest_edges;  // class pairs, aligned with bridges
    std::vector<int> class_degree;                  // degree in the class forest
};

BridgeForest bridge_components(const Graph& g, const VertexMask& alive);

// --- suppression -------------------------------------------------------------

// Multigraph produced by suppressing degree-2 vertices; loops and parallel
// edges allowed.  A loop contributes 2 to its endpoint's degree.
struct Multigraph {
    struct Edge {
        int u, v;  // u <= v; loop iff u == v
    };
    int n = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> inc;  // incident edge ids (a loop listed once)

    int degree(int v) const;
    bool is_loop(int e) const { return edges[e].u == edges[e].v; }
};

// Maps the suppressed multigraph back to the host graph.
struct ExpansionMap {
    std::vector<int> vertex_orig;             // multigraph vertex -> host vertex
    std::vector<std::vector<int>> edge_path;  // edge id -> host vertex sequence.
    // Non-loop edge: path orig(u)..orig(v) inclusive.  Loop edge: the full host
    // cycle sequence starting at orig(u), no repeated endpoint.
};

// Cycle in a multigraph: verts[i] --eids[i]--> verts[i+1 (mod size)].
// A loop is verts={v}, eids={loop id}; a parallel pair is verts={u,v}, two ids.
struct MCycle {
    std::vector<int> verts;
    std::vector<int> eids;
};

// Suppress all degree-2 vertices of the subgraph of `host` induced by S.
// Multigraph vertices are the induced-degree >= 3 vertices of S; a component
// that is a bare cycle is represented by its smallest vertex carrying a loop.
// Requires min induced degree >= 2 on S (else InvalidInput).
std::pair<Multigraph, ExpansionMap> suppress_degree_two(const Graph& host, const VertexSet& s);

// Expand a multigraph cycle back into a host-graph cycle.  Validates the
// result is a simple cycle of the host; inconsistent maps raise InternalError.
Cycle lift_cycle(const Graph& host, const ExpansionMap& map, const MCycle& mc);

// --- forests -----------------------------------------------------------------

// Maximum independent set of a forest by leaf-to-root DP, deterministic
// (ties prefer taking the vertex).  Throws InvalidInput if the alive subgraph
// has a cycle.
VertexSet forest_max_independent_set(const Graph& f);
VertexSet forest_max_independent_set(const Graph& f, const VertexMask& alive);

// --- cycle/path utilities ------------------------------------------------------

// Canonical form: rotate so the smallest vertex is first, then choose the
// direction with the lexicographically smaller sequence.
Cycle canonical_cycle(const Cycle& c);

bool is_valid_cycle(const Graph& g, const Cycle& c, std::string* why = nullptr);
bool is_valid_path(const Graph& g, const Path& p, std::string* why = nullptr);

// Sorted union / difference / intersection helpers for VertexSet.
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet sorted_unique(VertexSet v);

} // namespace cyclepack
