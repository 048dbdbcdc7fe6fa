#include "cyclepack/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <queue>
#include <set>

namespace cyclepack {

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edge_list) {
    if (n < 0) throw InvalidInput("vertex count must be non-negative");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InvalidInput("edge endpoint out of range: (" + std::to_string(u) + "," +
                               std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v) throw InvalidInput("loop edge not allowed: " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) continue;  // drop duplicates
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& a : g.adj_) std::sort(a.begin(), a.end());
    g.m_ = static_cast<long long>(seen.size());
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.push_back({u, v});
    return out;
}

VertexMask full_mask(int n) { return VertexMask(n, 1); }

VertexMask mask_without(const Graph& g, const VertexSet& removed) {
    VertexMask m = full_mask(g.n());
    for (int v : removed)
        if (v >= 0 && v < g.n()) m[v] = 0;
    return m;
}

VertexMask mask_from_set(int n, const VertexSet& s) {
    VertexMask m(n, 0);
    for (int v : s)
        if (v >= 0 && v < n) m[v] = 1;
    return m;
}

VertexSet set_from_mask(const VertexMask& mask) {
    VertexSet out;
    for (int v = 0; v < static_cast<int>(mask.size()); ++v)
        if (mask[v]) out.push_back(v);
    return out;
}

std::vector<int> bfs_distances(const Graph& g, const VertexSet& sources,
                               const VertexMask& alive) {
    std::vector<int> dist(g.n(), -1);
    std::deque<int> q;
    for (int s : sources) {
        if (s < 0 || s >= g.n() || !alive[s]) continue;
        if (dist[s] == 0) continue;
        dist[s] = 0;
        q.push_back(s);
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : g.neighbors(v)) {
            if (!alive[w] || dist[w] >= 0) continue;
            dist[w] = dist[v] + 1;
            q.push_back(w);
        }
    }
    return dist;
}

VertexSet ball(const Graph& g, const VertexSet& s, int r) {
    return ball(g, s, r, full_mask(g.n()));
}

VertexSet ball(const Graph& g, const VertexSet& s, int r, const VertexMask& alive) {
    if (r < 0) throw InvalidInput("ball radius must be >= 0");
    auto dist = bfs_distances(g, s, alive);
    VertexSet out;
    for (int v = 0; v < g.n(); ++v)
        if (dist[v] >= 0 && dist[v] <= r) out.push_back(v);
    return out;
}

Cycle canonical_cycle(const Cycle& c) {
    if (c.empty()) return c;
    int k = static_cast<int>(c.size());
    int pos = static_cast<int>(std::min_element(c.begin(), c.end()) - c.begin());
    Cycle fwd(k), bwd(k);
    for (int i = 0; i < k; ++i) fwd[i] = c[(pos + i) % k];
    for (int i = 0; i < k; ++i) bwd[i] = c[(pos - i + k) % k];
    return std::min(fwd, bwd);
}

bool is_valid_path(const Graph& g, const Path& p, std::string* why) {
    auto fail = [&](const std::string& s) {
        if (why) *why = s;
        return false;
    };
    if (p.empty()) return fail("empty path");
    std::set<int> seen;
    for (int v : p) {
        if (v < 0 || v >= g.n()) return fail("path vertex out of range");
        if (!seen.insert(v).second) return fail("repeated path vertex " + std::to_string(v));
    }
    for (size_t i = 0; i + 1 < p.size(); ++i)
        if (!g.has_edge(p[i], p[i + 1]))
            return fail("missing edge (" + std::to_string(p[i]) + "," + std::to_string(p[i + 1]) + ")");
    return true;
}

bool is_valid_cycle(const Graph& g, const Cycle& c, std::string* why) {
    auto fail = [&](const std::string& s) {
        if (why) *why = s;
        return false;
    };
    if (c.size() < 3) return fail("cycle shorter than 3");
    if (!is_valid_path(g, c, why)) return false;
    if (!g.has_edge(c.back(), c.front()))
        return fail("missing closing edge (" + std::to_string(c.back()) + "," +
                    std::to_string(c.front()) + ")");
    return true;
}

namespace {

// BFS from `src` storing levels and parents, alive-restricted.
void bfs_tree(const Graph& g, int src, const VertexMask& alive, std::vector<int>& dist,
              std::vector<int>& parent) {
    dist.assign(g.n(), -1);
    parent.assign(g.n(), -1);
    std::deque<int> q;
    dist[src] = 0;
    q.push_back(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : g.neighbors(v)) {
            if (!alive[w] || dist[w] >= 0) continue;
            dist[w] = dist[v] + 1;
            parent[w] = v;
            q.push_back(w);
        }
    }
}

// Walk parent pointers from v up to the BFS root; returns root..v order.
std::vector<int> path_to_root(const std::vector<int>& parent, int v) {
    std::vector<int> p;
    for (int x = v; x != -1; x = parent[x]) p.push_back(x);
    std::reverse(p.begin(), p.end());
    return p;
}

// Try to realise the closed walk (root..x) + edge (x,y) + (y..root) as a
// simple cycle; returns nullopt if the two root paths share interior vertices.
std::optional<Cycle> realize_cycle(const std::vector<int>& parent, int x, int y) {
    auto px = path_to_root(parent, x);
    auto py = path_to_root(parent, y);
    // Drop the common prefix (shared ancestors); keep the last common vertex.
    size_t i = 0;
    while (i < px.size() && i < py.size() && px[i] == py[i]) ++i;
    if (i == 0) return std::nullopt;
    std::vector<int> cyc;
    cyc.push_back(px[i - 1]);
    for (size_t j = i; j < px.size(); ++j) cyc.push_back(px[j]);
    for (size_t j = py.size(); j-- > i;) cyc.push_back(py[j]);
    std::set<int> uniq(cyc.begin(), cyc.end());
    if (uniq.size() != cyc.size()) return std::nullopt;
    if (cyc.size() < 3) return std::nullopt;
    return canonical_cycle(cyc);
}

} // namespace

std::optional<Cycle> girth_cycle(const Graph& g) { return girth_cycle(g, full_mask(g.n())); }

std::optional<Cycle> girth_cycle(const Graph& g, const VertexMask& alive) {
    std::optional<Cycle> best;
    size_t best_len = static_cast<size_t>(-1);
    std::vector<int> dist, parent;
    for (int s = 0; s < g.n(); ++s) {
        if (!alive[s]) continue;
        bfs_tree(g, s, alive, dist, parent);
        for (int x = 0; x < g.n(); ++x) {
            if (!alive[x] || dist[x] < 0) continue;
            for (int y : g.neighbors(x)) {
                if (y < x || !alive[y] || dist[y] < 0) continue;
                if (parent[x] == y || parent[y] == x) continue;  // tree edge
                size_t cand = static_cast<size_t>(dist[x] + dist[y] + 1);
                if (cand > best_len) continue;
                auto cyc = realize_cycle(parent, x, y);
                if (!cyc) continue;
                if (cyc->size() < best_len || (cyc->size() == best_len && (!best || *cyc < *best))) {
                    best_len = cyc->size();
                    best = std::move(cyc);
                }
            }
        }
    }
    return best;
}

std::optional<Cycle> shortest_cycle_through(const Graph& g, int v, const VertexMask& alive) {
    if (v < 0 || v >= g.n()) throw InvalidInput("shortest_cycle_through: vertex out of range");
    if (!alive[v]) return std::nullopt;
    std::optional<Cycle> best;
    std::vector<int> dist(g.n()), parent(g.n());
    for (int x : g.neighbors(v)) {
        if (!alive[x]) continue;
        // BFS from v with edge (v,x) removed.
        dist.assign(g.n(), -1);
        parent.assign(g.n(), -1);
        std::deque<int> q;
        dist[v] = 0;
        q.push_back(v);
        while (!q.empty()) {
            int a = q.front();
            q.pop_front();
            for (int b : g.neighbors(a)) {
                if (!alive[b] || dist[b] >= 0) continue;
                if (a == v && b == x) continue;
                dist[b] = dist[a] + 1;
                parent[b] = a;
                q.push_back(b);
            }
        }
        if (dist[x] < 0) continue;
        Cycle cyc = path_to_root(parent, x);  // v .. x
        if (cyc.size() < 3) continue;
        Cycle canon = canonical_cycle(cyc);
        if (!best || canon.size() < best->size() || (canon.size() == best->size() && canon < *best))
            best = std::move(canon);
    }
    return best;
}

bool is_forest(const Graph& g, const VertexMask& alive) {
    std::vector<int> comp(g.n());
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (comp[x] != x) {
            comp[x] = comp[comp[x]];
            x = comp[x];
        }
        return x;
    };
    for (int u = 0; u < g.n(); ++u) {
        if (!alive[u]) continue;
        for (int v : g.neighbors(u)) {
            if (v < u || !alive[v]) continue;
            int a = find(u), b = find(v);
            if (a == b) return false;
            comp[a] = b;
        }
    }
    return true;
}

bool is_forest_after_removal(const Graph& g, const VertexSet& removed) {
    return is_forest(g, mask_without(g, removed));
}

VertexSet two_core(const Graph& g) { return two_core(g, full_mask(g.n())); }

VertexSet two_core(const Graph& g, const VertexMask& alive) {
    std::vector<int> deg(g.n(), 0);
    VertexMask live = alive;
    std::deque<int> q;
    for (int v = 0; v < g.n(); ++v) {
        if (!live[v]) continue;
        for (int w : g.neighbors(v))
            if (live[w]) ++deg[v];
        if (deg[v] <= 1) {
            live[v] = 0;
            q.push_back(v);
        }
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : g.neighbors(v)) {
            if (!live[w]) continue;
            if (--deg[w] <= 1) {
                live[w] = 0;
                q.push_back(w);
            }
        }
    }
    return set_from_mask(live);
}

BridgeForest bridge_components(const Graph& g, const VertexMask& alive) {
    BridgeForest bf;
    bf.class_of.assign(g.n(), -1);
    // Iterative DFS low-link bridge finding.
    std::vector<int> disc(g.n(), -1), low(g.n(), 0), parent_edge(g.n(), -1);
    std::set<std::pair<int, int>> bridge_set;
    int timer = 0;
    for (int root = 0; root < g.n(); ++root) {
        if (!alive[root] || disc[root] >= 0) continue;
        // stack entries: (vertex, neighbor index)
        std::vector<std::pair<int, size_t>> st;
        disc[root] = low[root] = timer++;
        st.push_back({root, 0});
        while (!st.empty()) {
            auto& [v, idx] = st.back();
            if (idx < g.neighbors(v).size()) {
                int w = g.neighbors(v)[idx++];
                if (!alive[w]) continue;
                if (disc[w] < 0) {
                    parent_edge[w] = v;
                    disc[w] = low[w] = timer++;
                    st.push_back({w, 0});
                } else if (w != parent_edge[v]) {
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                st.pop_back();
                int p = parent_edge[v];
                if (p != -1) {
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] > disc[p])
                        bridge_set.insert({std::min(p, v), std::max(p, v)});
                }
            }
        }
    }
    // Classes: components after removing bridges, labelled by smallest vertex.
    int next_class = 0;
    for (int s = 0; s < g.n(); ++s) {
        if (!alive[s] || bf.class_of[s] >= 0) continue;
        int cid = next_class++;
        std::deque<int> q{s};
        bf.class_of[s] = cid;
        bf.classes.push_back({});
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            bf.classes[cid].push_back(v);
            for (int w : g.neighbors(v)) {
                if (!alive[w] || bf.class_of[w] >= 0) continue;
                if (bridge_set.count({std::min(v, w), std::max(v, w)})) continue;
                bf.class_of[w] = cid;
                q.push_back(w);
            }
        }
        std::sort(bf.classes[cid].begin(), bf.classes[cid].end());
    }
    bf.class_count = next_class;
    bf.class_degree.assign(next_class, 0);
    for (auto [u, v] : bridge_set) {
        bf.bridges.push_back({u, v});
        bf.forest_edges.push_back({bf.class_of[u], bf.class_of[v]});
        ++bf.class_degree[bf.class_of[u]];
        ++bf.class_degree[bf.class_of[v]];
    }
    return bf;
}

int Multigraph::degree(int v) const {
    int d = 0;
    for (int e : inc[v]) d += is_loop(e) ? 2 : 1;
    return d;
}

std::pair<Multigraph, ExpansionMap> suppress_degree_two(const Graph& host, const VertexSet& s) {
    VertexMask in_s = mask_from_set(host.n(), s);
    std::vector<int> deg(host.n(), 0);
    for (int v : s)
        for (int w : host.neighbors(v))
            if (in_s[w]) ++deg[v];
    for (int v : s)
        if (deg[v] < 2)
            throw InvalidInput("suppress_degree_two: vertex " + std::to_string(v) +
                               " has induced degree " + std::to_string(deg[v]) + " < 2");

    Multigraph mg;
    ExpansionMap map;
    std::vector<int> mg_id(host.n(), -1);
    for (int v : s) {
        if (deg[v] >= 3) {
            mg_id[v] = mg.n++;
            map.vertex_orig.push_back(v);
        }
    }

    // edge_used[v] marks host edges consumed, keyed by (v, neighbor index).
    std::vector<std::vector<char>> edge_used(host.n());
    for (int v = 0; v < host.n(); ++v) edge_used[v].assign(host.neighbors(v).size(), 0);
    auto nbr_index = [&](int v, int w) {
        const auto& a = host.neighbors(v);
        return static_cast<int>(std::lower_bound(a.begin(), a.end(), w) - a.begin());
    };
    auto mark_used = [&](int v, int w) {
        edge_used[v][nbr_index(v, w)] = 1;
        edge_used[w][nbr_index(w, v)] = 1;
    };

    auto add_edge = [&](int mu, int mv, std::vector<int> path) {
        int id = static_cast<int>(mg.edges.size());
        mg.edges.push_back({std::min(mu, mv), std::max(mu, mv)});
        if (mu == mv && path.size() > 1 && path.front() == path.back())
            path.pop_back();  // loops store the cycle sequence without repeat
        if (mg.edges.back().u != mu) std::reverse(path.begin(), path.end());
        mg.inc.resize(mg.n);
        mg.inc[mu].push_back(id);
        if (mv != mu) mg.inc[mv].push_back(id);
        map.edge_path.push_back(std::move(path));
    };

    mg.inc.resize(mg.n);
    // Walk chains out of every branch vertex.
    for (int bi = 0; bi < mg.n; ++bi) {
        int v = map.vertex_orig[bi];
        for (int w0 : host.neighbors(v)) {
            if (!in_s[w0] || edge_used[v][nbr_index(v, w0)]) continue;
            std::vector<int> path{v};
            int prev = v, cur = w0;
            mark_used(prev, cur);
            while (deg[cur] == 2) {
                path.push_back(cur);
                int nxt = -1;
                for (int x : host.neighbors(cur)) {
                    if (!in_s[x]) continue;
                    if (!edge_used[cur][nbr_index(cur, x)]) {
                        nxt = x;
                        break;
                    }
                }
                if (nxt == -1)
                    throw InternalError("suppress_degree_two: chain walk stuck at " +
                                        std::to_string(cur));
                mark_used(cur, nxt);
                prev = cur;
                cur = nxt;
            }
            path.push_back(cur);
            if (mg_id[cur] < 0)
                throw InternalError("suppress_degree_two: chain ended at non-branch vertex " +
                                    std::to_string(cur));
            add_edge(bi, mg_id[cur], std::move(path));
        }
    }
    // Remaining components are bare cycles: represent by smallest vertex + loop.
    for (int v : s) {
        if (deg[v] != 2) continue;
        bool used_all = true;
        for (size_t i = 0; i < host.neighbors(v).size(); ++i)
            if (in_s[host.neighbors(v)[i]] && !edge_used[v][i]) used_all = false;
        if (used_all) continue;
        // v is on an untouched bare cycle; find that cycle's smallest vertex.
        std::vector<int> cyc{v};
        int cur = -1;
        for (int x : host.neighbors(v))
            if (in_s[x] && !edge_used[v][nbr_index(v, x)]) {
                cur = x;
                break;
            }
        mark_used(v, cur);
        while (cur != v) {
            cyc.push_back(cur);
            int nxt = -1;
            for (int x : host.neighbors(cur))
                if (in_s[x] && !edge_used[cur][nbr_index(cur, x)]) {
                    nxt = x;
                    break;
                }
            if (nxt == -1) throw InternalError("suppress_degree_two: broken bare cycle walk");
            mark_used(cur, nxt);
            cur = nxt;
        }
        // Rotate so the smallest vertex leads.
        size_t pos = std::min_element(cyc.begin(), cyc.end()) - cyc.begin();
        std::rotate(cyc.begin(), cyc.begin() + pos, cyc.end());
        int rep = cyc[0];
        mg_id[rep] = mg.n++;
        map.vertex_orig.push_back(rep);
        mg.inc.resize(mg.n);
        add_edge(mg_id[rep], mg_id[rep], std::move(cyc));
    }
    return {mg, map};
}

Cycle lift_cycle(const Graph& host, const ExpansionMap& map, const MCycle& mc) {
    if (mc.verts.empty() || mc.verts.size() != mc.eids.size())
        throw InvalidInput("lift_cycle: malformed multigraph cycle");
    Cycle out;
    int k = static_cast<int>(mc.verts.size());
    for (int i = 0; i < k; ++i) {
        int e = mc.eids[i];
        if (e < 0 || e >= static_cast<int>(map.edge_path.size()))
            throw InternalError("lift_cycle: edge id out of range");
        std::vector<int> seg = map.edge_path[e];
        int from = map.vertex_orig[mc.verts[i]];
        int to = map.vertex_orig[mc.verts[(i + 1) % k]];
        if (k == 1) {
            // Loop: the stored sequence is the whole cycle starting at `from`.
            if (seg.empty() || seg.front() != from)
                throw InternalError("lift_cycle: loop path does not start at its vertex");
            out = seg;
            break;
        }
        if (seg.front() == from && seg.back() == to) {
            // keep orientation
        } else if (seg.front() == to && seg.back() == from) {
            std::reverse(seg.begin(), seg.end());
        } else {
            throw InternalError("lift_cycle: expansion path endpoints do not match");
        }
        out.insert(out.end(), seg.begin(), seg.end() - 1);
    }
    std::string why;
    if (!is_valid_cycle(host, out, &why)) throw InternalError("lift_cycle: lifted walk invalid: " + why);
    return canonical_cycle(out);
}

VertexSet forest_max_independent_set(const Graph& f) {
    return forest_max_independent_set(f, full_mask(f.n()));
}

VertexSet forest_max_independent_set(const Graph& f, const VertexMask& alive) {
    if (!is_forest(f, alive)) throw InvalidInput("forest_max_independent_set: input has a cycle");
    VertexSet result;
    std::vector<int> take(f.n(), 0), skip(f.n(), 0), parent(f.n(), -2), order;
    for (int root = 0; root < f.n(); ++root) {
        if (!alive[root] || parent[root] != -2) continue;
        parent[root] = -1;
        order.clear();
        order.push_back(root);
        for (size_t i = 0; i < order.size(); ++i) {
            int v = order[i];
            for (int w : f.neighbors(v)) {
                if (!alive[w] || parent[w] != -2) continue;
                parent[w] = v;
                order.push_back(w);
            }
        }
        for (size_t i = order.size(); i-- > 0;) {
            int v = order[i];
            take[v] = 1;
            skip[v] = 0;
            for (int w : f.neighbors(v)) {
                if (!alive[w] || parent[w] != v) continue;
                take[v] += skip[w];
                skip[v] += std::max(take[w], skip[w]);
            }
        }
        // Reconstruct top-down; ties prefer taking.
        std::vector<char> take_v(f.n(), 0);
        for (int v : order) {
            bool parent_taken = parent[v] >= 0 && take_v[parent[v]];
            bool t = !parent_taken && take[v] >= skip[v];
            take_v[v] = t;
            if (t) result.push_back(v);
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

VertexSet sorted_unique(VertexSet v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

} // namespace cyclepack
