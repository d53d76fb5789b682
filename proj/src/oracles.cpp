#include "domset/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>

#include "domset/union_find.hpp"

namespace domset {

namespace {

using Mask = std::uint32_t;
constexpr int kFar = std::numeric_limits<int>::max() / 4;

void check_vertices(const Graph& g, const OracleBudget& budget) {
    if (g.num_vertices() > budget.max_vertices) {
        throw BudgetExceeded("oracle budget: " + std::to_string(g.num_vertices()) + " vertices exceed the limit of " +
                             std::to_string(budget.max_vertices));
    }
    if (budget.max_vertices > 31) throw InputError("oracle budget above 31 vertices is not supported");
}

// Floyd-Warshall, deliberately independent of the library's BFS.
std::vector<std::vector<int>> distance_matrix(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.num_vertices());
    std::vector<std::vector<int>> d(n, std::vector<int>(n, kFar));
    for (std::size_t v = 0; v < n; ++v) {
        d[v][v] = 0;
        for (Vertex w : g.neighbors(static_cast<Vertex>(v))) d[v][w] = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
        }
    }
    return d;
}

std::vector<Mask> balls(const std::vector<std::vector<int>>& d, std::span<const int> radii) {
    std::vector<Mask> out(d.size(), 0);
    for (std::size_t v = 0; v < d.size(); ++v) {
        for (std::size_t w = 0; w < d.size(); ++w) {
            if (d[v][w] <= radii[v]) out[v] |= Mask{1} << w;
        }
    }
    return out;
}

std::vector<Mask> adjacency_masks(const Graph& g) {
    std::vector<Mask> adj(static_cast<std::size_t>(g.num_vertices()), 0);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        for (Vertex w : g.neighbors(v)) adj[v] |= Mask{1} << w;
    }
    return adj;
}

bool covers(const std::vector<Mask>& ball, Mask set) {
    for (Mask b : ball) {
        if ((b & set) == 0) return false;
    }
    return true;
}

bool connected_by_union_find(const Graph& g, Mask set) {
    if (set == 0) return false;
    UnionFind uf(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (!(set >> v & 1)) continue;
        for (Vertex w : g.neighbors(v)) {
            if (set >> w & 1) uf.unite(v, w);
        }
    }
    int root = -1;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (!(set >> v & 1)) continue;
        int rv = uf.find(v);
        if (root < 0) root = rv;
        else if (rv != root) return false;
    }
    return true;
}

std::vector<Vertex> members(Mask set) {
    std::vector<Vertex> out;
    for (Vertex v = 0; set != 0; ++v, set >>= 1) {
        if (set & 1) out.push_back(v);
    }
    return out;
}

// Calls visit(mask) for every k-subset of [0, n) in lexicographic order of
// the sorted member lists until visit returns true.
bool for_each_combination(int n, int k, const std::function<bool(Mask)>& visit) {
    if (k > n) return false;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        Mask m = 0;
        for (int i : idx) m |= Mask{1} << i;
        if (visit(m)) return true;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

int eccentricity_of(const std::vector<std::vector<int>>& d, Mask set) {
    int ecc = 0;
    for (std::size_t v = 0; v < d.size(); ++v) {
        int best = kFar;
        for (Mask s = set; s != 0; s &= s - 1) best = std::min(best, d[v][std::countr_zero(s)]);
        ecc = std::max(ecc, best);
    }
    return ecc;
}

// Connected sets whose smallest member is `s`, grown by include/exclude
// decisions on the frontier; each such set is visited exactly once.
void grow_connected(const std::vector<Mask>& adj, int s, Mask set, Mask frontier, Mask excluded,
                    const std::function<bool(Mask)>& visit) {
    if (!visit(set)) return;
    Mask open = frontier & ~excluded;
    Mask blocked = excluded;
    while (open != 0) {
        int x = std::countr_zero(open);
        Mask bit = Mask{1} << x;
        Mask above = ~((Mask{1} << (s + 1)) - 1);
        Mask next_frontier = (frontier | adj[x]) & ~(set | bit) & above;
        grow_connected(adj, s, set | bit, next_frontier, blocked, visit);
        blocked |= bit;
        open &= ~bit;
    }
}

// Minimum connected node set of a rooted tree hitting every ball, grown
// from each possible topmost node.
std::vector<int> min_connected_cover_growth(const RootedTree& t, const std::vector<Mask>& ball) {
    const int k = t.size();
    int best_size = k + 1;
    std::vector<int> best;
    for (int top = 0; top < k; ++top) {
        std::function<void(Mask, Mask, Mask)> rec = [&](Mask set, Mask frontier, Mask excluded) {
            int size = std::popcount(set);
            if (size > best_size) return;
            if (covers(ball, set)) {
                auto nodes = members(set);
                std::vector<int> as_int(nodes.begin(), nodes.end());
                if (size < best_size || as_int < best) {
                    best_size = size;
                    best = std::move(as_int);
                }
                return; // supersets are larger
            }
            if (size + 1 > best_size) return;
            Mask open = frontier & ~excluded;
            Mask blocked = excluded;
            while (open != 0) {
                int x = std::countr_zero(open);
                Mask bit = Mask{1} << x;
                Mask kids = 0;
                for (int c : t.children(x)) kids |= Mask{1} << c;
                rec(set | bit, (frontier | kids) & ~bit, blocked);
                blocked |= bit;
                open &= ~bit;
            }
        };
        Mask kids = 0;
        for (int c : t.children(top)) kids |= Mask{1} << c;
        rec(Mask{1} << top, kids, 0);
    }
    return best;
}

std::vector<int> min_connected_cover_bitmask(const RootedTree& t, const std::vector<Mask>& ball) {
    const int k = t.size();
    int best_size = k + 1;
    std::vector<int> best;
    for (Mask m = 1; m < (Mask{1} << k); ++m) {
        int size = std::popcount(m);
        if (size > best_size) continue;
        int inner_edges = 0;
        for (Mask s = m; s != 0; s &= s - 1) {
            int v = std::countr_zero(s);
            if (t.parent(v) >= 0 && (m >> t.parent(v) & 1)) ++inner_edges;
        }
        if (inner_edges != size - 1 || !covers(ball, m)) continue;
        auto nodes = members(m);
        std::vector<int> as_int(nodes.begin(), nodes.end());
        if (size < best_size || as_int < best) {
            best_size = size;
            best = std::move(as_int);
        }
    }
    return best;
}

void check_tree_budget(int nodes, const OracleBudget& budget) {
    if (nodes > budget.max_bags) {
        throw BudgetExceeded("oracle budget: " + std::to_string(nodes) + " tree nodes exceed the limit of " +
                             std::to_string(budget.max_bags));
    }
    if (nodes > 31) throw InputError("oracle trees above 31 nodes are not supported");
}

std::vector<Mask> tree_balls(const RootedTree& t, std::span<const int> radii) {
    if (static_cast<int>(radii.size()) != t.size()) throw InputError("expected one radius per tree node");
    std::vector<Mask> ball(static_cast<std::size_t>(t.size()), 0);
    for (int v = 0; v < t.size(); ++v) {
        auto d = t.distances_from(v);
        for (int w = 0; w < t.size(); ++w) {
            if (d[w] <= radii[v]) ball[v] |= Mask{1} << w;
        }
    }
    return ball;
}

std::vector<Mask> td_balls(const Graph& g, const TreeDecomposition& td, std::span<const int> radii) {
    if (g.num_vertices() > 512) throw BudgetExceeded("oracle budget: graph too large for the td oracle");
    if (radii.size() != static_cast<std::size_t>(g.num_vertices())) throw InputError("expected one radius per vertex");
    auto d = distance_matrix(g);
    std::vector<Mask> ball(static_cast<std::size_t>(g.num_vertices()), 0);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        for (int b = 0; b < td.num_bags(); ++b) {
            int best = kFar;
            for (Vertex u : td.bags[b]) best = std::min(best, d[v][u]);
            if (best <= radii[v]) ball[v] |= Mask{1} << b;
        }
    }
    return ball;
}

} // namespace

std::vector<Vertex> exact_rdom(const Graph& g, const RadiusFunction& r, bool connected, const OracleBudget& budget) {
    check_vertices(g, budget);
    const int n = g.num_vertices();
    auto ball = balls(distance_matrix(g), r.values());
    Mask found = 0;
    for (int k = 1; k <= n; ++k) {
        bool hit = for_each_combination(n, k, [&](Mask m) {
            if (!covers(ball, m)) return false;
            if (connected && !connected_by_union_find(g, m)) return false;
            found = m;
            return true;
        });
        if (hit) return members(found);
    }
    throw InvariantViolation("no dominating set found; the whole vertex set always qualifies");
}

std::vector<Vertex> exact_rdom_bnb(const Graph& g, const RadiusFunction& r, bool connected,
                                   const OracleBudget& budget) {
    check_vertices(g, budget);
    const int n = g.num_vertices();
    auto ball = balls(distance_matrix(g), r.values());
    int best_size = n + 1;
    Mask best = 0;

    if (!connected) {
        std::function<void(Mask)> branch = [&](Mask set) {
            int size = std::popcount(set);
            int open = -1;
            for (int v = 0; v < n; ++v) {
                if ((ball[v] & set) == 0) {
                    open = v;
                    break;
                }
            }
            if (open < 0) {
                if (size < best_size) {
                    best_size = size;
                    best = set;
                }
                return;
            }
            if (size + 1 >= best_size) return;
            for (Mask cand = ball[open]; cand != 0; cand &= cand - 1) branch(set | (Mask{1} << std::countr_zero(cand)));
        };
        branch(0);
    } else {
        auto adj = adjacency_masks(g);
        for (int s = 0; s < n; ++s) {
            Mask above = ~((Mask{1} << (s + 1)) - 1);
            grow_connected(adj, s, Mask{1} << s, adj[s] & above, 0, [&](Mask set) {
                int size = std::popcount(set);
                if (size >= best_size) return false;
                if (covers(ball, set)) {
                    best_size = size;
                    best = set;
                    return false;
                }
                return size + 1 < best_size;
            });
        }
    }
    ensure(best != 0, "branch and bound found no dominating set");
    return members(best);
}

ExactCenter exact_pcenter(const Graph& g, int p, bool connected, const OracleBudget& budget) {
    check_vertices(g, budget);
    const int n = g.num_vertices();
    if (p < 1 || p > n) throw InputError("p must be in [1, n]");
    auto d = distance_matrix(g);
    ExactCenter best;
    best.eccentricity = kFar;
    Mask best_mask = 0;
    for (int k = 1; k <= p; ++k) {
        for_each_combination(n, k, [&](Mask m) {
            if (connected && !connected_by_union_find(g, m)) return false;
            int ecc = eccentricity_of(d, m);
            if (ecc < best.eccentricity) {
                best.eccentricity = ecc;
                best_mask = m;
            }
            return false;
        });
    }
    best.centers = members(best_mask);
    return best;
}

ExactCenter exact_pcenter_bnb(const Graph& g, int p, bool connected, const OracleBudget& budget) {
    check_vertices(g, budget);
    const int n = g.num_vertices();
    if (p < 1 || p > n) throw InputError("p must be in [1, n]");
    auto d = distance_matrix(g);
    for (int e = 0; e <= n; ++e) {
        auto set = exact_rdom_bnb(g, RadiusFunction::uniform(g, e), connected, budget);
        if (static_cast<int>(set.size()) <= p) {
            Mask m = 0;
            for (Vertex v : set) m |= Mask{1} << v;
            return {set, eccentricity_of(d, m)};
        }
    }
    throw InvariantViolation("no uniform radius up to n admits a p-center");
}

std::vector<int> exact_min_covering_subtree(const RootedTree& t, std::span<const int> radii, const OracleBudget& budget) {
    check_tree_budget(t.size(), budget);
    return min_connected_cover_growth(t, tree_balls(t, radii));
}

std::vector<int> exact_min_covering_subtree_bitmask(const RootedTree& t, std::span<const int> radii,
                                                    const OracleBudget& budget) {
    check_tree_budget(t.size(), budget);
    return min_connected_cover_bitmask(t, tree_balls(t, radii));
}

std::vector<int> exact_min_covering_subtree_td(const Graph& g, const TreeDecomposition& td, std::span<const int> radii,
                                               const OracleBudget& budget) {
    check_tree_budget(td.num_bags(), budget);
    return min_connected_cover_growth(td.rooted_at(0), td_balls(g, td, radii));
}

std::vector<int> exact_min_covering_subtree_td_bitmask(const Graph& g, const TreeDecomposition& td,
                                                       std::span<const int> radii, const OracleBudget& budget) {
    check_tree_budget(td.num_bags(), budget);
    return min_connected_cover_bitmask(td.rooted_at(0), td_balls(g, td, radii));
}

} // namespace domset
