#include "domset/td_domination.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

#include "domset/bfs.hpp"

namespace domset {

bool CoveringSubtreeTD::contains(int bag) const { return std::binary_search(bags.begin(), bags.end(), bag); }

namespace {

void check_radii(const Graph& g, std::span<const int> radii) {
    if (radii.size() != static_cast<std::size_t>(g.num_vertices())) {
        throw InputError("expected one radius per vertex");
    }
    for (int r : radii) {
        if (r < 0) throw InputError("radii must be non-negative");
    }
}

// Shortest path from the sources to the closest target (smallest id among
// the closest), listed source first.
std::vector<Vertex> shortest_path(const Graph& g, std::span<const Vertex> sources, std::span<const Vertex> targets) {
    auto dm = bfs(g, sources);
    Vertex best = kNoVertex;
    for (Vertex t : targets) {
        if (best == kNoVertex || dm.dist[t] < dm.dist[best] || (dm.dist[t] == dm.dist[best] && t < best)) best = t;
    }
    auto path = dm.path_to_source(best);
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<Vertex> intersect(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

} // namespace

CoveringSubtreeTD covering_subtree_from_bag(const Graph& g, const TreeDecomposition& td, std::span<const int> radii,
                                            int start) {
    check_radii(g, radii);
    if (start < 0 || start >= td.num_bags()) throw InputError("start bag out of range");
    const Vertex n = g.num_vertices();
    const auto nb = static_cast<std::size_t>(td.num_bags());

    CoveringSubtreeTD out;
    out.root = start;
    out.tree = td.rooted_at(start);
    const auto& tree = out.tree;

    // B(v): the bag holding v that is closest to the start bag.
    std::vector<int> home(static_cast<std::size_t>(n), -1);
    for (Vertex v = 0; v < n; ++v) {
        for (int b : td.bags_of[v]) {
            int h = home[v];
            if (h < 0 || tree.depth(b) < tree.depth(h) || (tree.depth(b) == tree.depth(h) && b < h)) home[v] = b;
        }
    }

    out.beta.assign(static_cast<std::size_t>(n), -1);
    out.sigma.assign(nb, 0);
    BfsScratch scratch(n);
    for (Vertex u = 0; u < n; ++u) {
        std::tuple<int, int, Vertex> best{std::numeric_limits<int>::max(), 0, 0};
        int limit = std::min<int>(radii[u], n);
        scratch.run(g, std::span<const Vertex>(&u, 1), limit, [&](Vertex v, int) {
            std::tuple<int, int, Vertex> key{tree.depth(home[v]), home[v], v};
            if (key < best) best = key;
            return true;
        });
        int b = std::get<1>(best);
        out.beta[u] = b;
        ++out.sigma[b];
    }

    std::vector<char> in(nb, 0);
    in[start] = 1;
    for (Vertex u = 0; u < n; ++u) {
        for (int x = out.beta[u]; !in[x]; x = tree.parent(x)) in[x] = 1;
    }
    for (std::size_t b = 0; b < nb; ++b) {
        if (in[b]) out.bags.push_back(static_cast<int>(b));
    }
    return out;
}

CoveringSubtreeTD min_covering_subtree_td(const Graph& g, const TreeDecomposition& td, std::span<const int> radii) {
    auto first = covering_subtree_from_bag(g, td, radii, 0);
    if (first.size() == 1) return first;
    for (int b : first.bags) {
        if (b == first.root) continue;
        int degree = 0;
        for (int x : td.adjacency[b]) degree += first.contains(x) ? 1 : 0;
        if (degree == 1) return covering_subtree_from_bag(g, td, radii, b);
    }
    throw InvariantViolation("covering subtree with two or more bags has no leaf besides its root");
}

DominationResult rdom_td(const Graph& g, const TreeDecomposition& td, const RadiusFunction& r) {
    if (!td.centers) throw InputError("rdom_td needs bag centers");
    check_radii(g, r.values());
    const Vertex n = g.num_vertices();
    auto t_r = min_covering_subtree_td(g, td, r.values());

    std::vector<int> order;
    for (int b : t_r.tree.bfs_order()) {
        if (t_r.contains(b)) order.push_back(b);
    }
    std::reverse(order.begin(), order.end());

    int max_r = 0;
    for (int x : r.values()) max_r = std::max(max_r, x);
    auto sigma = t_r.sigma;
    std::vector<char> dominated(static_cast<std::size_t>(n), 0);
    Vertex remaining = n;
    std::vector<Vertex> chosen;
    BfsScratch scratch(n);
    for (int b : order) {
        if (sigma[b] <= 0) continue;
        chosen.push_back((*td.centers)[b]);
        scratch.run(g, td.bags[b], max_r, [&](Vertex u, int d) {
            if (!dominated[u] && d <= r[u]) {
                dominated[u] = 1;
                --sigma[t_r.beta[u]];
                --remaining;
            }
            return true;
        });
    }
    ensure(remaining == 0, "some vertex was never dominated by a processed bag");

    std::sort(chosen.begin(), chosen.end());
    chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
    DominationResult out;
    out.algorithm = "rdom-td";
    out.vertices = std::move(chosen);
    out.slack = td.rho;
    TdDiagnostics diag;
    diag.rho = td.rho;
    diag.lambda = td.lambda;
    diag.subtree_bags = static_cast<int>(t_r.size());
    diag.coverage_bound = td.rho;
    diag.stated_bound = td.rho;
    diag.centers_computed = td.centers_computed;
    out.td = diag;
    return out;
}

const char* to_string(TdVariant v) { return v == TdVariant::Heart ? "heart" : "diamond"; }

TdVariant parse_td_variant(const std::string& name) {
    if (name == "heart") return TdVariant::Heart;
    if (name == "diamond") return TdVariant::Diamond;
    throw InputError("unknown variant '" + name + "' (expected heart or diamond)");
}

ConnectedTdResult connected_rdom_td_detailed(const Graph& g, const TreeDecomposition& td, const RadiusFunction& r,
                                             TdVariant variant) {
    check_radii(g, r.values());
    ConnectedTdResult res;
    auto& report = res.report;
    TdDiagnostics diag;
    diag.lambda = td.lambda;

    std::vector<Vertex> centers;
    if (td.centers) {
        centers = *td.centers;
        diag.rho = td.rho;
        diag.centers_computed = td.centers_computed;
    } else if (variant == TdVariant::Heart) {
        auto computed = compute_centers(g, td);
        centers = std::move(computed.centers);
        diag.rho = computed.rho;
        diag.centers_computed = true;
    } else {
        diag.rho = -1;
    }
    diag.phi = variant == TdVariant::Heart ? 3 * diag.rho : 2 * td.lambda;
    diag.coverage_bound = diag.phi + td.lambda;
    diag.stated_bound = variant == TdVariant::Heart ? 5 * diag.rho : 3 * td.lambda;

    std::vector<int> shifted(r.values().begin(), r.values().end());
    for (int& x : shifted) x += diag.phi;
    auto t_phi = min_covering_subtree_td(g, td, shifted);
    diag.subtree_bags = static_cast<int>(t_phi.size());

    std::vector<Vertex> added;
    if (t_phi.size() == 1) {
        added.push_back(td.bags[t_phi.bags[0]].front());
    } else if (t_phi.size() == 2) {
        auto common = intersect(td.bags[t_phi.bags[0]], td.bags[t_phi.bags[1]]);
        ensure(!common.empty(), "adjacent bags with empty intersection");
        added.push_back(common.front());
    } else {
        const auto nb = static_cast<std::size_t>(td.num_bags());
        std::vector<int> degree(nb, 0);
        for (int b : t_phi.bags) {
            for (int x : td.adjacency[b]) degree[b] += t_phi.contains(x) ? 1 : 0;
        }
        int root = -1;
        for (int b : t_phi.bags) {
            if (degree[b] == 1) {
                root = b;
                break;
            }
        }
        ensure(root >= 0, "covering subtree has no leaf");
        auto tree = td.rooted_at(root);
        auto kids = [&](int b) {
            std::vector<int> out;
            for (int c : tree.children(b)) {
                if (t_phi.contains(c)) out.push_back(c);
            }
            return out;
        };
        // Separator between a non-root bag and its parent, keyed by the child.
        auto separator = [&](int child) {
            auto s = intersect(td.bags[child], td.bags[tree.parent(child)]);
            ensure(!s.empty(), "empty separator between adjacent bags");
            return s;
        };
        std::vector<Vertex> nu(nb, kNoVertex);
        auto nu_or_smallest = [&](int child) {
            if (nu[child] == kNoVertex) nu[child] = separator(child).front();
            return nu[child];
        };
        auto add_path = [&](const std::vector<Vertex>& path) { added.insert(added.end(), path.begin(), path.end()); };

        for (int b : t_phi.bags) {
            if (degree[b] == 1) report.leaves.push_back(b);
            if (degree[b] >= 3) report.branching.push_back(b);
        }

        // Path segments, each found from its top bag.
        for (int top : t_phi.bags) {
            if (degree[top] != 2 || degree[tree.parent(top)] == 2) continue;
            std::vector<int> segment;
            int x = top;
            while (degree[x] == 2) {
                segment.push_back(x);
                x = kids(x).front();
            }
            const int below = x;
            auto up = separator(top);
            auto down = separator(below);
            auto from = nu[top] != kNoVertex ? std::vector<Vertex>{nu[top]} : up;
            auto to = nu[below] != kNoVertex ? std::vector<Vertex>{nu[below]} : down;
            auto q = shortest_path(g, from, to);
            nu[top] = q.front();
            nu[below] = q.back();
            add_path(q);
            auto free_path = shortest_path(g, up, down);
            report.segments.push_back(std::move(segment));
            report.segment_added.push_back(static_cast<int>(q.size()) - 1);
            report.segment_distance.push_back(static_cast<int>(free_path.size()) - 1);
        }

        for (int b : report.branching) {
            const Vertex u = nu_or_smallest(b);
            add_path({u});
            for (int c : kids(b)) {
                const Vertex s = nu_or_smallest(c);
                if (variant == TdVariant::Heart) {
                    const Vertex center = centers[b];
                    for (Vertex from : {u, s}) {
                        auto q = shortest_path(g, std::span<const Vertex>(&from, 1), std::span<const Vertex>(&center, 1));
                        report.hop_lengths.push_back(static_cast<int>(q.size()) - 1);
                        ensure(report.hop_lengths.back() <= diag.rho, "hop to bag center longer than the breadth");
                        add_path(q);
                    }
                } else {
                    auto q = shortest_path(g, std::span<const Vertex>(&s, 1), std::span<const Vertex>(&u, 1));
                    report.hop_lengths.push_back(static_cast<int>(q.size()) - 1);
                    ensure(report.hop_lengths.back() <= td.lambda, "hop inside a bag longer than the length");
                    add_path(q);
                }
            }
        }
        diag.path_segments = static_cast<int>(report.segments.size());
        diag.branching_bags = static_cast<int>(report.branching.size());
    }

    std::sort(added.begin(), added.end());
    added.erase(std::unique(added.begin(), added.end()), added.end());
    ensure(induces_connected(g, added), "connected td construction produced a disconnected set");

    auto& out = res.result;
    out.algorithm = variant == TdVariant::Heart ? "crdom-td-heart" : "crdom-td-diamond";
    out.connected = true;
    out.vertices = std::move(added);
    out.slack = diag.coverage_bound;
    out.td = diag;
    return res;
}

DominationResult connected_rdom_td(const Graph& g, const TreeDecomposition& td, const RadiusFunction& r,
                                   TdVariant variant) {
    return connected_rdom_td_detailed(g, td, r, variant).result;
}

} // namespace domset
