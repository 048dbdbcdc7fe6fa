#include "cyclepack/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace cyclepack::oracle {

namespace {

struct StepCounter {
    long long left;
    void spend(long long k = 1) {
        left -= k;
        if (left < 0) throw CapExceeded("oracle step budget exhausted");
    }
};

bool cycle_len_lex_less(const Cycle& a, const Cycle& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

} // namespace

std::vector<Cycle> enumerate_cycles(const Graph& g, const OracleBudget& budget) {
    return enumerate_cycles(g, full_mask(g.n()), budget);
}

// Each cycle is generated exactly once: anchored at its smallest vertex s,
// walking only vertices > s, and emitted only in the direction where the
// second vertex is smaller than the last.
std::vector<Cycle> enumerate_cycles(const Graph& g, const VertexMask& alive,
                                    const OracleBudget& budget) {
    if (g.n() > budget.max_vertices)
        throw CapExceeded("enumerate_cycles: graph larger than budget.max_vertices");
    std::vector<Cycle> out;
    StepCounter steps{budget.max_steps};
    std::vector<int> path;
    std::vector<char> on_path(g.n(), 0);

    std::function<void(int, int)> extend = [&](int s, int v) {
        steps.spend();
        for (int w : g.neighbors(v)) {
            if (!alive[w]) continue;
            if (w == s && path.size() >= 3 && path[1] < path.back()) {
                out.push_back(canonical_cycle(path));
                if (static_cast<long long>(out.size()) > budget.max_cycles)
                    throw CapExceeded("enumerate_cycles: cycle budget exhausted");
                continue;
            }
            if (w <= s || on_path[w]) continue;
            path.push_back(w);
            on_path[w] = 1;
            extend(s, w);
            on_path[w] = 0;
            path.pop_back();
        }
    };

    for (int s = 0; s < g.n(); ++s) {
        if (!alive[s]) continue;
        path.assign(1, s);
        on_path[s] = 1;
        extend(s, s);
        on_path[s] = 0;
    }
    std::sort(out.begin(), out.end(), cycle_len_lex_less);
    return out;
}

VertexSet min_ball_fvs_bruteforce(const Graph& g, int r, const OracleBudget& budget) {
    const int n = g.n();
    StepCounter steps{budget.max_steps};
    if (is_forest_after_removal(g, {})) return {};
    for (int size = 1; size <= n; ++size) {
        // lexicographically ordered combinations
        std::vector<int> idx(size);
        for (int i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            steps.spend(size + 1);
            VertexSet x(idx.begin(), idx.end());
            if (is_forest_after_removal(g, ball(g, x, r))) return x;
            int i = size - 1;
            while (i >= 0 && idx[i] == n - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    throw InternalError("min_ball_fvs_bruteforce: no hitting set found (impossible)");
}

namespace {

// Backtracking over candidate cycles: pick k with no conflicts.
std::optional<std::vector<Cycle>> pick_compatible(const std::vector<Cycle>& cycles, int k,
                                                  const std::vector<std::vector<char>>& conflict,
                                                  StepCounter& steps) {
    std::vector<int> chosen;
    std::function<bool(size_t)> rec = [&](size_t from) {
        if (static_cast<int>(chosen.size()) == k) return true;
        for (size_t i = from; i < cycles.size(); ++i) {
            steps.spend();
            bool ok = true;
            for (int j : chosen)
                if (conflict[j][i]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(static_cast<int>(i));
            if (rec(i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    std::vector<Cycle> out;
    for (int i : chosen) out.push_back(cycles[i]);
    return out;
}

std::vector<std::vector<char>> conflict_matrix(const Graph& g, const std::vector<Cycle>& cycles,
                                               bool edges_conflict, StepCounter& steps) {
    size_t c = cycles.size();
    std::vector<std::vector<char>> conflict(c, std::vector<char>(c, 0));
    std::vector<std::vector<char>> member(c, std::vector<char>(g.n(), 0));
    for (size_t i = 0; i < c; ++i)
        for (int v : cycles[i]) member[i][v] = 1;
    for (size_t i = 0; i < c; ++i) {
        for (size_t j = i + 1; j < c; ++j) {
            steps.spend();
            bool bad = false;
            for (int v : cycles[j])
                if (member[i][v]) {
                    bad = true;
                    break;
                }
            if (!bad && edges_conflict) {
                for (int v : cycles[j]) {
                    for (int w : g.neighbors(v))
                        if (member[i][w]) {
                            bad = true;
                            break;
                        }
                    if (bad) break;
                }
            }
            conflict[i][j] = conflict[j][i] = bad;
        }
    }
    return conflict;
}

} // namespace

std::optional<std::vector<Cycle>> max_induced_packing_bruteforce(const Graph& g, int k,
                                                                 const OracleBudget& budget) {
    if (k <= 0) throw InvalidInput("packing size must be positive");
    auto cycles = enumerate_cycles(g, budget);
    if (static_cast<int>(cycles.size()) < k) return std::nullopt;
    StepCounter steps{budget.max_steps};
    auto conflict = conflict_matrix(g, cycles, /*edges_conflict=*/true, steps);
    return pick_compatible(cycles, k, conflict, steps);
}

std::optional<std::vector<Cycle>> disjoint_cycles_bruteforce(const Graph& g, int k,
                                                             const OracleBudget& budget) {
    if (k <= 0) throw InvalidInput("packing size must be positive");
    auto cycles = enumerate_cycles(g, budget);
    if (static_cast<int>(cycles.size()) < k) return std::nullopt;
    StepCounter steps{budget.max_steps};
    auto conflict = conflict_matrix(g, cycles, /*edges_conflict=*/false, steps);
    return pick_compatible(cycles, k, conflict, steps);
}

std::optional<std::pair<Cycle, Cycle>> distance_packing_exists_bruteforce(
    const Graph& g, int d, const OracleBudget& budget) {
    if (d < 1) throw InvalidInput("distance parameter must be >= 1");
    auto cycles = enumerate_cycles(g, budget);
    StepCounter steps{budget.max_steps};
    auto alive = full_mask(g.n());
    for (size_t i = 0; i < cycles.size(); ++i) {
        auto dist = bfs_distances(g, cycles[i], alive);
        for (size_t j = i + 1; j < cycles.size(); ++j) {
            steps.spend();
            bool far = true;  // vertices in other components are at infinite distance
            for (int v : cycles[j])
                if (dist[v] >= 0 && dist[v] <= d) far = false;
            if (far) return std::make_pair(cycles[i], cycles[j]);
        }
    }
    return std::nullopt;
}

namespace {

// Branch and bound for max independent set on an induced subgraph, with an
// optional early-success threshold.
int mis_recurse(const Graph& g, std::vector<int>& verts, int current, int target,
                StepCounter& steps) {
    steps.spend();
    if (verts.empty()) return current;
    if (target > 0 && current >= target) return current;
    // Pick the first vertex; branch on excluding / including it.
    int v = verts[0];
    std::vector<int> without(verts.begin() + 1, verts.end());
    // Include v: drop v's neighbours too.
    std::vector<int> incl;
    for (size_t i = 1; i < verts.size(); ++i)
        if (!g.has_edge(v, verts[i])) incl.push_back(verts[i]);
    int best = mis_recurse(g, incl, current + 1, target, steps);
    if (target > 0 && best >= target) return best;
    // Quick bound: even taking all remaining can't beat best.
    if (current + static_cast<int>(without.size()) > best) {
        int alt = mis_recurse(g, without, current, target, steps);
        best = std::max(best, alt);
    }
    return best;
}

} // namespace

int exact_independence_number(const Graph& g, const VertexSet& verts,
                              const OracleBudget& budget) {
    StepCounter steps{budget.max_steps};
    std::vector<int> vs(verts.begin(), verts.end());
    return mis_recurse(g, vs, 0, /*target=*/0, steps);
}

bool is_k1t_free(const Graph& g, int t, const OracleBudget& budget) {
    if (t < 1) throw InvalidInput("is_k1t_free: t must be >= 1");
    StepCounter steps{budget.max_steps};
    for (int v = 0; v < g.n(); ++v) {
        std::vector<int> nb(g.neighbors(v).begin(), g.neighbors(v).end());
        if (static_cast<int>(nb.size()) < t) continue;
        if (mis_recurse(g, nb, 0, t, steps) >= t) return false;
    }
    return true;
}

// --- certificate checks ------------------------------------------------------

VerifyResult verify_packing(const Graph& g, const std::vector<Cycle>& cycles, int k) {
    VerifyResult r;
    auto fail = [&](const std::string& why) {
        r.ok = false;
        r.reason = why;
        return r;
    };
    if (static_cast<int>(cycles.size()) != k)
        return fail("expected " + std::to_string(k) + " cycles, got " +
                    std::to_string(cycles.size()));
    std::vector<int> owner(g.n(), -1);
    for (size_t i = 0; i < cycles.size(); ++i) {
        std::string why;
        if (!is_valid_cycle(g, cycles[i], &why))
            return fail("cycle " + std::to_string(i) + " invalid: " + why);
        for (int v : cycles[i]) {
            if (owner[v] >= 0)
                return fail("vertex " + std::to_string(v) + " shared by cycles " +
                            std::to_string(owner[v]) + " and " + std::to_string(i));
            owner[v] = static_cast<int>(i);
        }
    }
    for (size_t i = 0; i < cycles.size(); ++i)
        for (int v : cycles[i])
            for (int w : g.neighbors(v))
                if (owner[w] >= 0 && owner[w] != static_cast<int>(i))
                    return fail("edge between cycle " + std::to_string(i) + " and cycle " +
                                std::to_string(owner[w]) + " at (" + std::to_string(v) + "," +
                                std::to_string(w) + ")");
    return r;
}

VerifyResult verify_hitting(const Graph& g, const VertexSet& x, int radius, double bound) {
    VerifyResult r;
    auto fail = [&](const std::string& why) {
        r.ok = false;
        r.reason = why;
        return r;
    };
    for (int v : x)
        if (v < 0 || v >= g.n()) return fail("hitting vertex out of range: " + std::to_string(v));
    VertexSet xs = sorted_unique(x);
    if (xs.size() != x.size()) return fail("hitting set has duplicates");
    if (static_cast<double>(x.size()) > bound)
        return fail("hitting set size " + std::to_string(x.size()) + " exceeds bound " +
                    std::to_string(bound));
    if (!is_forest_after_removal(g, ball(g, xs, radius)))
        return fail("graph minus radius-" + std::to_string(radius) + " ball is not a forest");
    return r;
}

VerifyResult verify_distance_cycles(const Graph& g, const Cycle& c1, const Cycle& c2, int d) {
    VerifyResult r;
    auto fail = [&](const std::string& why) {
        r.ok = false;
        r.reason = why;
        return r;
    };
    std::string why;
    if (!is_valid_cycle(g, c1, &why)) return fail("first cycle invalid: " + why);
    if (!is_valid_cycle(g, c2, &why)) return fail("second cycle invalid: " + why);
    auto dist = bfs_distances(g, c1, full_mask(g.n()));
    for (int v : c2)
        if (dist[v] >= 0 && dist[v] <= d)
            return fail("cycles at distance " + std::to_string(dist[v]) + " <= d at vertex " +
                        std::to_string(v));
    return r;
}

VerifyResult verify_distance_hitting(const Graph& g, const VertexSet& x1, const VertexSet& x2,
                                     int d) {
    VerifyResult r;
    auto fail = [&](const std::string& why) {
        r.ok = false;
        r.reason = why;
        return r;
    };
    if (static_cast<int>(x1.size()) > 12 * (d + 1))
        return fail("X1 size " + std::to_string(x1.size()) + " exceeds 12(d+1)");
    if (static_cast<int>(x2.size()) > 12)
        return fail("X2 size " + std::to_string(x2.size()) + " exceeds 12");
    for (int v : set_union(sorted_unique(x1), sorted_unique(x2)))
        if (v < 0 || v >= g.n()) return fail("vertex out of range: " + std::to_string(v));
    if (!is_forest_after_removal(g, ball(g, sorted_unique(x1), 2 * d)))
        return fail("graph minus ball(X1, 2d) is not a forest");
    if (!is_forest_after_removal(g, ball(g, sorted_unique(x2), 3 * d)))
        return fail("graph minus ball(X2, 3d) is not a forest");
    return r;
}

VerifyResult verify_tree_decomposition(const Graph& g, const std::vector<VertexSet>& bags,
                                       const std::vector<std::pair<int, int>>& tree_edges) {
    VerifyResult r;
    auto fail = [&](const std::string& why) {
        r.ok = false;
        r.reason = why;
        return r;
    };
    int b = static_cast<int>(bags.size());
    if (b == 0) {
        if (g.n() == 0 && tree_edges.empty()) return r;
        return fail("no bags for a non-empty graph");
    }
    // The tree must really be a tree on the bag nodes.
    std::vector<std::vector<int>> tadj(b);
    for (auto [x, y] : tree_edges) {
        if (x < 0 || x >= b || y < 0 || y >= b || x == y)
            return fail("tree edge out of range");
        tadj[x].push_back(y);
        tadj[y].push_back(x);
    }
    if (static_cast<int>(tree_edges.size()) != b - 1) return fail("tree edge count != bags - 1");
    {
        std::vector<char> seen(b, 0);
        std::deque<int> q{0};
        seen[0] = 1;
        int cnt = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            ++cnt;
            for (int w : tadj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push_back(w);
                }
        }
        if (cnt != b) return fail("decomposition tree is disconnected");
    }
    // Vertex coverage and connected occurrence sets.
    std::vector<VertexSet> sorted_bags(bags);
    for (auto& bag : sorted_bags) std::sort(bag.begin(), bag.end());
    std::vector<std::vector<int>> where(g.n());
    for (int i = 0; i < b; ++i)
        for (int v : sorted_bags[i]) {
            if (v < 0 || v >= g.n()) return fail("bag vertex out of range");
            where[v].push_back(i);
        }
    for (int v = 0; v < g.n(); ++v) {
        if (where[v].empty()) return fail("vertex " + std::to_string(v) + " in no bag");
        std::set<int> occ(where[v].begin(), where[v].end());
        std::deque<int> q{*occ.begin()};
        std::set<int> seen{*occ.begin()};
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (int y : tadj[x])
                if (occ.count(y) && !seen.count(y)) {
                    seen.insert(y);
                    q.push_back(y);
                }
        }
        if (seen.size() != occ.size())
            return fail("occurrence set of vertex " + std::to_string(v) + " not connected");
    }
    // Edge coverage.
    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (int i : where[u]) {
            if (std::binary_search(sorted_bags[i].begin(), sorted_bags[i].end(), v)) {
                covered = true;
                break;
            }
        }
        if (!covered)
            return fail("edge (" + std::to_string(u) + "," + std::to_string(v) + ") in no bag");
    }
    return r;
}

} // namespace cyclepack::oracle
