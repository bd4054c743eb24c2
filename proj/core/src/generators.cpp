#include "matchdecay/generators.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace matchdecay {

Graph make_path(int n) {
    if (n < 1) throw std::invalid_argument("path: need n >= 1");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph::from_edges(n, edges);
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    edges.push_back({n - 1, 0});
    return Graph::from_edges(n, edges);
}

Graph make_complete(int n) {
    if (n < 1) throw std::invalid_argument("complete: need n >= 1");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return Graph::from_edges(n, edges);
}

Graph make_random_regular(int n, int d, Rng& rng) {
    if (d < 1 || d >= n) throw std::invalid_argument("random_regular: need 1 <= d < n");
    if ((static_cast<long long>(n) * d) % 2 != 0)
        throw std::invalid_argument("random_regular: n*d must be even");
    const int max_attempts = 2000;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<int> stubs;
        stubs.reserve(n * d);
        for (int v = 0; v < n; ++v)
            for (int k = 0; k < d; ++k) stubs.push_back(v);
        // Fisher-Yates
        for (int i = static_cast<int>(stubs.size()) - 1; i > 0; --i)
            std::swap(stubs[i], stubs[rng.next_int(0, i)]);
        std::set<std::pair<int, int>> seen;
        std::vector<std::pair<VertexId, VertexId>> edges;
        bool ok = true;
        for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int a = stubs[i], b = stubs[i + 1];
            if (a == b || !seen.insert(std::minmax(a, b)).second) {
                ok = false;
                break;
            }
            edges.push_back({a, b});
        }
        if (!ok) continue;
        Graph g = Graph::from_edges(n, edges);
        if (is_connected(SubgraphView(g))) return g;
    }
    throw std::runtime_error("random_regular: pairing model failed to produce a simple connected graph");
}

Graph make_erdos_renyi_lcc(int n, double p, Rng& rng) {
    if (n < 1) throw std::invalid_argument("erdos_renyi: need n >= 1");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("erdos_renyi: p outside [0,1]");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.next_bool(p)) edges.push_back({i, j});
    Graph g = Graph::from_edges(n, edges);

    // largest connected component, relabeled in increasing original order
    std::vector<int> comp(n, -1);
    int n_comp = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::deque<int> queue{s};
        comp[s] = n_comp;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (const AdjEntry& a : g.neighbors(x))
                if (comp[a.to] < 0) {
                    comp[a.to] = n_comp;
                    queue.push_back(a.to);
                }
        }
        ++n_comp;
    }
    std::vector<int> size(n_comp, 0);
    for (int v = 0; v < n; ++v) ++size[comp[v]];
    int best = static_cast<int>(std::max_element(size.begin(), size.end()) - size.begin());
    std::vector<int> relabel(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (comp[v] == best) relabel[v] = next++;
    std::vector<std::pair<VertexId, VertexId>> kept;
    for (const Edge& e : g.edges())
        if (comp[e.u] == best && comp[e.v] == best) kept.push_back({relabel[e.u], relabel[e.v]});
    return Graph::from_edges(next, kept);
}

namespace {

struct HexSite {
    int q, r, s;  // s in {0,1}: the two triangular sublattices
    auto operator<=>(const HexSite&) const = default;
};

std::vector<HexSite> hex_neighbors(const HexSite& h) {
    if (h.s == 0) return {{h.q, h.r, 1}, {h.q - 1, h.r, 1}, {h.q, h.r - 1, 1}};
    return {{h.q, h.r, 0}, {h.q + 1, h.r, 0}, {h.q, h.r + 1, 0}};
}

}  // namespace

Graph make_hex_patch(int radius) {
    if (radius < 0) throw std::invalid_argument("hex_patch: negative radius");
    // BFS on the infinite lattice from the origin site of sublattice 0
    std::map<HexSite, int> id;
    std::vector<HexSite> order;
    std::deque<std::pair<HexSite, int>> queue;
    const HexSite origin{0, 0, 0};
    id[origin] = 0;
    order.push_back(origin);
    queue.push_back({origin, 0});
    while (!queue.empty()) {
        auto [site, dist] = queue.front();
        queue.pop_front();
        if (dist == radius) continue;
        for (const HexSite& nb : hex_neighbors(site)) {
            if (id.count(nb)) continue;
            id[nb] = static_cast<int>(order.size());
            order.push_back(nb);
            queue.push_back({nb, dist + 1});
        }
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (size_t i = 0; i < order.size(); ++i)
        for (const HexSite& nb : hex_neighbors(order[i])) {
            auto it = id.find(nb);
            if (it != id.end() && it->second > static_cast<int>(i))
                edges.push_back({static_cast<int>(i), it->second});
        }
    return Graph::from_edges(static_cast<int>(order.size()), edges);
}

Graph make_rooted_depth_tree(int depth, int min_children, int max_children, Rng& rng) {
    if (depth < 1) throw std::invalid_argument("rooted tree: need depth >= 1");
    if (min_children < 0 || max_children < std::max(min_children, 1))
        throw std::invalid_argument("rooted tree: bad child-count range");
    std::vector<std::pair<VertexId, VertexId>> edges;
    int next_id = 1;
    edges.push_back({0, 1});  // root edge: o-dagger (0) -- o (1)
    // frontier of (vertex, on_spine) pairs at the current level
    std::vector<std::pair<int, bool>> level{{1, true}};
    for (int d = 1; d < depth; ++d) {
        std::vector<std::pair<int, bool>> next_level;
        for (auto [v, spine] : level) {
            int c = rng.next_int(min_children, max_children);
            if (spine && c < 1) c = 1;
            int spine_child = spine ? rng.next_int(0, c - 1) : -1;
            for (int k = 0; k < c; ++k) {
                int child = ++next_id;
                edges.push_back({v, child});
                next_level.push_back({child, k == spine_child});
            }
        }
        level = std::move(next_level);
    }
    return Graph::from_edges(next_id + 1, edges);
}

Graph make_random_attachment_tree(int n, int max_degree, Rng& rng) {
    if (n < 1) throw std::invalid_argument("attachment tree: need n >= 1");
    if (max_degree < 2 && n > 2) throw std::invalid_argument("attachment tree: max_degree too small");
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<int> degree(n, 0);
    std::vector<int> eligible{0};  // vertices with remaining capacity
    for (int v = 1; v < n; ++v) {
        int idx = rng.next_int(0, static_cast<int>(eligible.size()) - 1);
        int parent = eligible[idx];
        edges.push_back({parent, v});
        if (++degree[parent] >= max_degree) {
            eligible[idx] = eligible.back();
            eligible.pop_back();
        }
        degree[v] = 1;
        if (degree[v] < max_degree) eligible.push_back(v);
    }
    return Graph::from_edges(n, edges);
}

Graph make_double_tree(int depth, int max_children, Rng& rng) {
    Graph a = make_rooted_depth_tree(depth, 1, max_children, rng);
    Graph b = make_rooted_depth_tree(depth, 1, max_children, rng);
    // vertex 1 of each part is the working root (vertex 0 is the dangling
    // o-dagger, dropped here); the joining edge comes first so it has id 0
    auto strip = [](const Graph& t) {
        std::vector<std::pair<VertexId, VertexId>> es;
        for (const Edge& e : t.edges())
            if (e.u != 0 && e.v != 0) es.push_back({e.u - 1, e.v - 1});
        return es;
    };
    std::vector<std::pair<VertexId, VertexId>> ea = strip(a), eb = strip(b);
    int na = a.n_vertices() - 1;
    int nb = b.n_vertices() - 1;
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.push_back({0, na});
    for (auto& e : ea) edges.push_back(e);
    for (auto& e : eb) edges.push_back({e.first + na, e.second + na});
    return Graph::from_edges(na + nb, edges);
}

Graph make_regular_tree(int degree, int depth) {
    if (degree < 1) throw std::invalid_argument("regular tree: need degree >= 1");
    if (depth < 0) throw std::invalid_argument("regular tree: negative depth");
    std::vector<std::pair<VertexId, VertexId>> edges;
    int next_id = 0;
    std::vector<int> level{0};
    for (int d = 0; d < depth; ++d) {
        std::vector<int> next_level;
        for (int v : level) {
            int c = d == 0 ? degree : degree - 1;
            for (int k = 0; k < c; ++k) {
                int child = ++next_id;
                edges.push_back({v, child});
                next_level.push_back(child);
            }
        }
        level = std::move(next_level);
    }
    return Graph::from_edges(next_id + 1, edges);
}

Graph generate(const FamilySpec& spec, std::uint64_t seed) {
    Rng rng(seed);
    if (spec.family == "path") return make_path(spec.n);
    if (spec.family == "cycle") return make_cycle(spec.n);
    if (spec.family == "complete") return make_complete(spec.n);
    if (spec.family == "tree") return make_rooted_depth_tree(spec.depth, spec.min_children, spec.max_children, rng);
    if (spec.family == "random_regular") return make_random_regular(spec.n, spec.d, rng);
    if (spec.family == "erdos_renyi") return make_erdos_renyi_lcc(spec.n, spec.p, rng);
    if (spec.family == "hex_patch") return make_hex_patch(spec.radius);
    throw std::invalid_argument("generate: unknown family '" + spec.family + "'");
}

}  // namespace matchdecay
