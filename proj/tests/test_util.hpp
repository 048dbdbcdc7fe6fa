#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "cyclepack/graph.hpp"

namespace testutil {

inline cyclepack::Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    return cyclepack::build_graph(n, edges);
}

// Outer 5-cycle 0..4, inner 5-cycle (as a pentagram) 5..9, spokes i -- i+5.
inline cyclepack::Graph petersen() {
    return make_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                           {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                           {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

inline cyclepack::Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return make_graph(n, e);
}

inline cyclepack::Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return make_graph(n, e);
}

inline cyclepack::Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j});
    return make_graph(n, e);
}

// Counts simple cycles by enumerating the cycle space over GF(2): a non-empty
// edge subset is a simple cycle iff it is connected with all degrees two.
// Completely independent of the library's cycle search; needs m <= 64 and
// cycle-space dimension <= ~24.
inline long long cycle_space_cycle_count(const cyclepack::Graph& g) {
    auto edges = g.edges();
    int m = static_cast<int>(edges.size());
    if (m > 64) return -1;
    // Spanning forest via DFS; collect fundamental cycle masks for non-tree edges.
    int n = g.n();
    std::vector<int> parent(n, -1), parent_edge(n, -1), depth(n, 0);
    std::vector<char> seen(n, 0);
    std::vector<int> order;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        seen[s] = 1;
        order.push_back(s);
        for (size_t qi = order.size() - 1; qi < order.size(); ++qi) {
            int v = order[qi];
            for (int w : g.neighbors(v)) {
                if (seen[w]) continue;
                seen[w] = 1;
                parent[w] = v;
                depth[w] = depth[v] + 1;
                order.push_back(w);
            }
        }
    }
    auto edge_id = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        for (int i = 0; i < m; ++i)
            if (edges[i].first == u && edges[i].second == v) return i;
        return -1;
    };
    for (int v = 0; v < n; ++v)
        if (parent[v] >= 0) parent_edge[v] = edge_id(parent[v], v);
    std::vector<char> is_tree(m, 0);
    for (int v = 0; v < n; ++v)
        if (parent_edge[v] >= 0) is_tree[parent_edge[v]] = 1;
    std::vector<std::uint64_t> fundamental;
    for (int i = 0; i < m; ++i) {
        if (is_tree[i]) continue;
        std::uint64_t mask = 1ull << i;
        int a = edges[i].first, b = edges[i].second;
        while (a != b) {
            if (depth[a] < depth[b]) std::swap(a, b);
            mask ^= 1ull << parent_edge[a];
            a = parent[a];
        }
        fundamental.push_back(mask);
    }
    int d = static_cast<int>(fundamental.size());
    if (d > 24) return -1;
    long long count = 0;
    for (std::uint64_t sub = 1; sub < (1ull << d); ++sub) {
        std::uint64_t mask = 0;
        for (int i = 0; i < d; ++i)
            if (sub & (1ull << i)) mask ^= fundamental[i];
        // All degrees 0 or 2, and the support connected.
        std::vector<int> deg(n, 0);
        for (int i = 0; i < m; ++i)
            if (mask & (1ull << i)) {
                ++deg[edges[i].first];
                ++deg[edges[i].second];
            }
        bool ok = true;
        for (int v = 0; v < n; ++v)
            if (deg[v] != 0 && deg[v] != 2) ok = false;
        if (!ok) continue;
        int start = -1;
        for (int v = 0; v < n && start < 0; ++v)
            if (deg[v] == 2) start = v;
        if (start < 0) continue;
        std::vector<char> vis(n, 0);
        std::vector<int> stack{start};
        vis[start] = 1;
        int reached = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++reached;
            for (int i = 0; i < m; ++i) {
                if (!(mask & (1ull << i))) continue;
                int w = -1;
                if (edges[i].first == v) w = edges[i].second;
                if (edges[i].second == v) w = edges[i].first;
                if (w >= 0 && !vis[w]) {
                    vis[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        int support = 0;
        for (int v = 0; v < n; ++v)
            if (deg[v] == 2) ++support;
        if (reached == support) ++count;
    }
    return count;
}

} // namespace testutil
