#include "domset/tree_decomposition.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "domset/bfs.hpp"
#include "text_util.hpp"

namespace domset {

const char* to_string(TdErrorKind kind) {
    switch (kind) {
    case TdErrorKind::Malformed: return "Malformed";
    case TdErrorKind::NotATree: return "NotATree";
    case TdErrorKind::VertexUncovered: return "VertexUncovered";
    case TdErrorKind::EdgeUncovered: return "EdgeUncovered";
    case TdErrorKind::DisconnectedVertexBags: return "DisconnectedVertexBags";
    case TdErrorKind::BadCenter: return "BadCenter";
    }
    return "?";
}

std::int64_t TreeDecomposition::total_size() const noexcept {
    std::int64_t m = 0;
    for (const auto& b : bags) m += static_cast<std::int64_t>(b.size());
    return m;
}

std::size_t TreeDecomposition::max_bag_size() const noexcept {
    std::size_t k = 0;
    for (const auto& b : bags) k = std::max(k, b.size());
    return k;
}

bool TreeDecomposition::contains(int bag, Vertex v) const {
    const auto& b = bags[static_cast<std::size_t>(bag)];
    return std::binary_search(b.begin(), b.end(), v);
}

RootedTree TreeDecomposition::rooted_at(int root) const {
    return RootedTree::from_edges(num_bags(), edges, root);
}

TdFile parse_td_file(std::string_view text) {
    TdFile file;
    bool header = false;
    std::vector<char> seen;
    auto fail = [](std::size_t line, const std::string& msg) {
        return TdError(TdErrorKind::Malformed, "line " + std::to_string(line) + ": " + msg);
    };
    auto integer = [&](std::string_view tok, std::size_t line, const char* what) {
        std::int64_t value = 0;
        if (!detail::try_parse_int(tok, value)) throw fail(line, std::string("expected integer ") + what);
        if (value < 0 || value > (1ll << 30)) throw fail(line, std::string(what) + " out of range");
        return static_cast<int>(value);
    };
    for (const auto& line : detail::tokenize_lines(text)) {
        const auto& tok = line.tokens;
        if (tok[0] == "c") continue;
        if (tok[0] == "s") {
            if (header) throw fail(line.number, "second header line");
            if (tok.size() != 5 || tok[1] != "td") throw fail(line.number, "header must be 's td <bags> <max_bag> <n>'");
            file.declared_bags = integer(tok[2], line.number, "bag count");
            file.declared_max_bag = integer(tok[3], line.number, "max bag size");
            file.declared_n = integer(tok[4], line.number, "vertex count");
            file.bags.assign(static_cast<std::size_t>(file.declared_bags), {});
            seen.assign(file.bags.size(), 0);
            header = true;
            continue;
        }
        if (!header) throw fail(line.number, "content before 's td' header");
        auto bag_id = [&](std::string_view t) {
            int b = integer(t, line.number, "bag id");
            if (b < 1 || b > file.declared_bags) throw fail(line.number, "bag id out of range");
            return b - 1;
        };
        auto vertex = [&](std::string_view t) {
            int v = integer(t, line.number, "vertex");
            if (v < 1 || v > file.declared_n) throw fail(line.number, "vertex id out of range");
            return static_cast<Vertex>(v - 1);
        };
        if (tok[0] == "b") {
            if (tok.size() < 2) throw fail(line.number, "bag line must be 'b <id> <v>...'");
            int b = bag_id(tok[1]);
            if (seen[b]) throw fail(line.number, "bag " + std::string(tok[1]) + " listed twice");
            seen[b] = 1;
            auto& bag = file.bags[b];
            for (std::size_t i = 2; i < tok.size(); ++i) bag.push_back(vertex(tok[i]));
            std::sort(bag.begin(), bag.end());
            if (std::adjacent_find(bag.begin(), bag.end()) != bag.end()) throw fail(line.number, "repeated vertex in bag");
            continue;
        }
        if (tok[0] == "x") {
            if (tok.size() != 4 || tok[1] != "c") throw fail(line.number, "center line must be 'x c <bag> <vertex>'");
            file.centers.emplace_back(bag_id(tok[2]), vertex(tok[3]));
            continue;
        }
        if (tok.size() != 2) throw fail(line.number, "unrecognized line");
        file.edges.emplace_back(bag_id(tok[0]), bag_id(tok[1]));
    }
    if (!header) throw TdError(TdErrorKind::Malformed, "missing 's td' header");
    for (std::size_t b = 0; b < seen.size(); ++b) {
        if (!seen[b]) throw TdError(TdErrorKind::Malformed, "bag " + std::to_string(b + 1) + " has no 'b' line");
    }
    std::size_t max_bag = 0;
    for (const auto& b : file.bags) max_bag = std::max(max_bag, b.size());
    if (static_cast<int>(max_bag) != file.declared_max_bag) {
        throw TdError(TdErrorKind::Malformed, "header declares max bag size " + std::to_string(file.declared_max_bag) +
                                                  ", actual " + std::to_string(max_bag));
    }
    return file;
}

namespace {

void check_tree(int nb, const std::vector<std::pair<int, int>>& edges) {
    if (nb == 0) throw TdError(TdErrorKind::NotATree, "decomposition has no bags");
    if (static_cast<int>(edges.size()) != nb - 1) {
        throw TdError(TdErrorKind::NotATree, "bag tree on " + std::to_string(nb) + " bags needs " + std::to_string(nb - 1) +
                                                 " edges, got " + std::to_string(edges.size()));
    }
    for (auto [a, b] : edges) {
        if (a < 0 || a >= nb || b < 0 || b >= nb || a == b) {
            throw TdError(TdErrorKind::NotATree, "bad bag-tree edge", kNoVertex, kNoVertex, std::max(a, b));
        }
    }
    try {
        (void)RootedTree::from_edges(nb, edges, 0);
    } catch (const InputError&) {
        throw TdError(TdErrorKind::NotATree, "bag-tree edges do not form a tree");
    }
}

std::vector<std::vector<int>> bags_of_vertices(Vertex n, const std::vector<std::vector<Vertex>>& bags) {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
    for (std::size_t b = 0; b < bags.size(); ++b) {
        for (Vertex v : bags[b]) out[v].push_back(static_cast<int>(b));
    }
    return out;
}

void check_properties(const Graph& g, const std::vector<std::vector<Vertex>>& bags,
                      const std::vector<std::pair<int, int>>& edges) {
    const Vertex n = g.num_vertices();
    auto bags_of = bags_of_vertices(n, bags);
    for (auto [u, v] : g.edges()) {
        const auto& a = bags_of[u];
        const auto& b = bags_of[v];
        std::size_t i = 0;
        std::size_t j = 0;
        bool shared = false;
        while (i < a.size() && j < b.size() && !shared) {
            if (a[i] == b[j]) shared = true;
            else if (a[i] < b[j]) ++i;
            else ++j;
        }
        if (!shared) {
            throw TdError(TdErrorKind::EdgeUncovered,
                          "edge (" + std::to_string(u + 1) + "," + std::to_string(v + 1) + ") is in no bag", u, v);
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        if (bags_of[v].empty()) {
            throw TdError(TdErrorKind::VertexUncovered, "vertex " + std::to_string(v + 1) + " is in no bag", v);
        }
    }
    // The bags holding v form a subtree iff they span |bags_of(v)| - 1 tree edges.
    std::vector<int> inner_edges(static_cast<std::size_t>(n), 0);
    for (auto [a, b] : edges) {
        const auto& x = bags[a];
        const auto& y = bags[b];
        std::size_t i = 0;
        std::size_t j = 0;
        while (i < x.size() && j < y.size()) {
            if (x[i] == y[j]) {
                ++inner_edges[x[i]];
                ++i;
                ++j;
            } else if (x[i] < y[j]) {
                ++i;
            } else {
                ++j;
            }
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        if (inner_edges[v] != static_cast<int>(bags_of[v].size()) - 1) {
            throw TdError(TdErrorKind::DisconnectedVertexBags,
                          "bags containing vertex " + std::to_string(v + 1) + " are not connected in the bag tree", v);
        }
    }
}

// Contracts every bag that is a subset of a tree neighbor into that
// neighbor. Equal neighbors keep the smaller id.
void normalize(std::vector<std::vector<Vertex>>& bags, std::vector<std::pair<int, int>>& edges,
               std::vector<Vertex>* centers, std::vector<int>& original_ids) {
    const int nb = static_cast<int>(bags.size());
    std::vector<std::set<int>> adj(static_cast<std::size_t>(nb));
    for (auto [a, b] : edges) {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    std::vector<char> alive(static_cast<std::size_t>(nb), 1);
    std::vector<std::pair<int, int>> work(edges.begin(), edges.end());
    auto subset = [&](int a, int b) { return std::includes(bags[b].begin(), bags[b].end(), bags[a].begin(), bags[a].end()); };
    while (!work.empty()) {
        auto [a, b] = work.back();
        work.pop_back();
        if (!alive[a] || !alive[b] || !adj[a].count(b)) continue;
        int gone = -1;
        int keep = -1;
        bool ab = subset(a, b);
        bool ba = subset(b, a);
        if (ab && ba) {
            gone = std::max(a, b);
            keep = std::min(a, b);
        } else if (ab) {
            gone = a;
            keep = b;
        } else if (ba) {
            gone = b;
            keep = a;
        } else {
            continue;
        }
        alive[gone] = 0;
        adj[keep].erase(gone);
        for (int x : adj[gone]) {
            if (x == keep) continue;
            adj[x].erase(gone);
            adj[x].insert(keep);
            adj[keep].insert(x);
            work.emplace_back(keep, x);
        }
        adj[gone].clear();
    }
    std::vector<int> new_id(static_cast<std::size_t>(nb), -1);
    std::vector<std::vector<Vertex>> kept;
    std::vector<Vertex> kept_centers;
    std::vector<int> kept_original;
    for (int b = 0; b < nb; ++b) {
        if (!alive[b]) continue;
        new_id[b] = static_cast<int>(kept.size());
        kept.push_back(std::move(bags[b]));
        kept_original.push_back(original_ids[b]);
        if (centers) kept_centers.push_back((*centers)[b]);
    }
    std::vector<std::pair<int, int>> kept_edges;
    for (int b = 0; b < nb; ++b) {
        if (!alive[b]) continue;
        for (int x : adj[b]) {
            if (b < x) kept_edges.emplace_back(new_id[b], new_id[x]);
        }
    }
    for (auto& e : kept_edges) {
        if (e.first > e.second) std::swap(e.first, e.second);
    }
    std::sort(kept_edges.begin(), kept_edges.end());
    bags = std::move(kept);
    edges = std::move(kept_edges);
    original_ids = std::move(kept_original);
    if (centers) *centers = std::move(kept_centers);
}

} // namespace

int td_length(const Graph& g, const std::vector<std::vector<Vertex>>& bags) {
    const Vertex n = g.num_vertices();
    auto bags_of = bags_of_vertices(n, bags);
    BfsScratch scratch(n);
    int lambda = 0;
    for (Vertex u = 0; u < n; ++u) {
        // Only bags with a member larger than u matter from this side.
        std::size_t need = 0;
        for (int b : bags_of[u]) need += bags[b].size();
        if (need <= bags_of[u].size()) continue;
        scratch.run(g, std::span<const Vertex>(&u, 1), std::numeric_limits<int>::max(), [](Vertex, int) { return true; });
        for (int b : bags_of[u]) {
            for (Vertex w : bags[b]) {
                if (w > u) lambda = std::max(lambda, scratch.dist(w));
            }
        }
    }
    return lambda;
}

int td_breadth(const Graph& g, const std::vector<std::vector<Vertex>>& bags, const std::vector<Vertex>& centers) {
    if (centers.size() != bags.size()) throw InputError("one center per bag required");
    const Vertex n = g.num_vertices();
    BfsScratch scratch(n);
    int rho = 0;
    // Group bags by center to run one BFS per distinct center.
    std::vector<std::vector<int>> by_center(static_cast<std::size_t>(n));
    for (std::size_t b = 0; b < bags.size(); ++b) by_center[centers[b]].push_back(static_cast<int>(b));
    for (Vertex c = 0; c < n; ++c) {
        if (by_center[c].empty()) continue;
        scratch.run(g, std::span<const Vertex>(&c, 1), std::numeric_limits<int>::max(), [](Vertex, int) { return true; });
        for (int b : by_center[c]) {
            for (Vertex w : bags[b]) rho = std::max(rho, scratch.dist(w));
        }
    }
    return rho;
}

TreeDecomposition validate_td(const Graph& g, const TdFile& file) {
    const Vertex n = g.num_vertices();
    if (file.declared_n != n) {
        throw TdError(TdErrorKind::Malformed, "decomposition is for " + std::to_string(file.declared_n) +
                                                  " vertices, graph has " + std::to_string(n));
    }
    std::optional<std::vector<Vertex>> centers;
    if (!file.centers.empty()) {
        centers.emplace(file.bags.size(), kNoVertex);
        for (auto [b, v] : file.centers) {
            if ((*centers)[b] != kNoVertex) {
                throw TdError(TdErrorKind::BadCenter, "bag " + std::to_string(b + 1) + " has two centers", v, kNoVertex, b);
            }
            (*centers)[b] = v;
        }
        for (std::size_t b = 0; b < centers->size(); ++b) {
            if ((*centers)[b] == kNoVertex) {
                throw TdError(TdErrorKind::BadCenter, "bag " + std::to_string(b + 1) + " has no center while others do",
                              kNoVertex, kNoVertex, static_cast<int>(b));
            }
        }
    }
    return make_td(g, file.bags, file.edges, std::move(centers));
}

TreeDecomposition make_td(const Graph& g, std::vector<std::vector<Vertex>> bags, std::vector<std::pair<int, int>> edges,
                          std::optional<std::vector<Vertex>> centers) {
    const Vertex n = g.num_vertices();
    const int nb = static_cast<int>(bags.size());
    for (auto& bag : bags) {
        std::sort(bag.begin(), bag.end());
        if (std::adjacent_find(bag.begin(), bag.end()) != bag.end()) throw TdError(TdErrorKind::Malformed, "repeated vertex in bag");
        for (Vertex v : bag) {
            if (!g.valid(v)) throw TdError(TdErrorKind::Malformed, "bag vertex out of range");
        }
    }
    if (centers) {
        if (static_cast<int>(centers->size()) != nb) throw TdError(TdErrorKind::BadCenter, "one center per bag required");
        for (int b = 0; b < nb; ++b) {
            if (!g.valid((*centers)[b])) {
                throw TdError(TdErrorKind::BadCenter, "center of bag " + std::to_string(b + 1) + " out of range",
                              kNoVertex, kNoVertex, b);
            }
        }
    }
    for (auto& e : edges) {
        if (e.first > e.second) std::swap(e.first, e.second);
    }
    check_tree(nb, edges);
    check_properties(g, bags, edges);

    TreeDecomposition td;
    td.original_ids.resize(static_cast<std::size_t>(nb));
    for (int b = 0; b < nb; ++b) td.original_ids[b] = b;
    normalize(bags, edges, centers ? &*centers : nullptr, td.original_ids);
    check_tree(static_cast<int>(bags.size()), edges);
    check_properties(g, bags, edges);
    ensure(static_cast<Vertex>(bags.size()) <= n, "minimal decomposition has more bags than vertices");

    td.bags = std::move(bags);
    td.edges = std::move(edges);
    td.adjacency.assign(td.bags.size(), {});
    for (auto [a, b] : td.edges) {
        td.adjacency[a].push_back(b);
        td.adjacency[b].push_back(a);
    }
    for (auto& a : td.adjacency) std::sort(a.begin(), a.end());
    td.bags_of = bags_of_vertices(n, td.bags);
    for (auto [a, b] : td.edges) {
        std::vector<Vertex> common;
        std::set_intersection(td.bags[a].begin(), td.bags[a].end(), td.bags[b].begin(), td.bags[b].end(),
                              std::back_inserter(common));
        ensure(!common.empty(), "adjacent bags with empty intersection in a decomposition of a connected graph");
    }
    td.lambda = td_length(g, td.bags);
    if (centers) {
        td.centers = std::move(centers);
        td.rho = td_breadth(g, td.bags, *td.centers);
    }
    return td;
}

TreeDecomposition parse_and_validate_td(const Graph& g, std::string_view text) {
    return validate_td(g, parse_td_file(text));
}

TreeDecomposition read_td_file(const Graph& g, const std::string& path) {
    return parse_and_validate_td(g, detail::read_file(path));
}

CenterAssignment compute_centers(const Graph& g, const TreeDecomposition& td) {
    const Vertex n = g.num_vertices();
    const auto nb = static_cast<std::size_t>(td.num_bags());
    CenterAssignment out;
    out.centers.assign(nb, kNoVertex);
    std::vector<int> best(nb, std::numeric_limits<int>::max());
    std::vector<int> dist(static_cast<std::size_t>(n));
    BfsScratch scratch(n);
    for (Vertex x = 0; x < n; ++x) {
        scratch.run(g, std::span<const Vertex>(&x, 1), std::numeric_limits<int>::max(), [&](Vertex v, int d) {
            dist[v] = d;
            return true;
        });
        for (std::size_t b = 0; b < nb; ++b) {
            int ecc = 0;
            for (Vertex u : td.bags[b]) {
                ecc = std::max(ecc, dist[u]);
                if (ecc >= best[b]) break;
            }
            if (ecc < best[b]) {
                best[b] = ecc;
                out.centers[b] = x;
            }
        }
    }
    for (int r : best) out.rho = std::max(out.rho, r);
    return out;
}

void ensure_centers(const Graph& g, TreeDecomposition& td) {
    if (td.centers) return;
    auto c = compute_centers(g, td);
    td.centers = std::move(c.centers);
    td.rho = c.rho;
    td.centers_computed = true;
}

std::string write_td(const TreeDecomposition& td, Vertex n) {
    std::ostringstream out;
    out << "s td " << td.num_bags() << ' ' << td.max_bag_size() << ' ' << n << '\n';
    for (int b = 0; b < td.num_bags(); ++b) {
        out << "b " << (b + 1);
        for (Vertex v : td.bags[b]) out << ' ' << (v + 1);
        out << '\n';
    }
    for (auto [a, b] : td.edges) out << (a + 1) << ' ' << (b + 1) << '\n';
    if (td.centers) {
        for (int b = 0; b < td.num_bags(); ++b) out << "x c " << (b + 1) << ' ' << ((*td.centers)[b] + 1) << '\n';
    }
    return out.str();
}

} // namespace domset
