#include "matchdecay/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>

namespace matchdecay {

Graph Graph::from_edges(int n_vertices, const std::vector<std::pair<VertexId, VertexId>>& edges) {
    if (n_vertices < 0) throw std::invalid_argument("graph: negative vertex count");
    Graph g;
    g.n_ = n_vertices;
    g.adj_.resize(n_vertices);
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const auto& [a, b] : edges) {
        if (a < 0 || a >= n_vertices || b < 0 || b >= n_vertices)
            throw std::invalid_argument("graph: edge endpoint out of range: (" + std::to_string(a) + "," + std::to_string(b) + ")");
        if (a == b) throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(a));
        auto key = std::minmax(a, b);
        if (!seen.insert(key).second)
            throw std::invalid_argument("graph: duplicate edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
        EdgeId id = static_cast<EdgeId>(g.edges_.size());
        g.edges_.push_back({a, b});
        g.adj_[a].push_back({b, id});
        g.adj_[b].push_back({a, id});
    }
    return g;
}

Graph Graph::from_edges(const std::vector<std::pair<VertexId, VertexId>>& edges) {
    int n = 0;
    for (const auto& [a, b] : edges) n = std::max({n, a + 1, b + 1});
    return from_edges(n, edges);
}

EdgeId Graph::find_edge(VertexId u, VertexId v) const {
    if (!valid_vertex(u) || !valid_vertex(v)) return -1;
    for (const AdjEntry& a : adj_[u])
        if (a.to == v) return a.via;
    return -1;
}

SubgraphView SubgraphView::without_vertices(const std::vector<VertexId>& vs) const {
    SubgraphView out = *this;
    for (VertexId v : vs) {
        if (!base_->valid_vertex(v)) throw std::invalid_argument("view: invalid vertex id " + std::to_string(v));
        out.vdel_[v] = true;
    }
    return out;
}

SubgraphView SubgraphView::without_edges(const std::vector<EdgeId>& es) const {
    SubgraphView out = *this;
    for (EdgeId e : es) {
        if (!base_->valid_edge(e)) throw std::invalid_argument("view: invalid edge id " + std::to_string(e));
        out.edel_[e] = true;
    }
    return out;
}

SubgraphView SubgraphView::without(const std::vector<VertexId>& vs, const std::vector<EdgeId>& es) const {
    return without_vertices(vs).without_edges(es);
}

SubgraphView SubgraphView::restricted_to_vertices(const std::vector<char>& keep) const {
    SubgraphView out = *this;
    for (VertexId v = 0; v < base_->n_vertices(); ++v)
        if (!keep[v]) out.vdel_[v] = true;
    return out;
}

int SubgraphView::effective_degree(VertexId v) const {
    if (!has_vertex(v)) return 0;
    int d = 0;
    for_each_neighbor(v, [&](VertexId, EdgeId) { ++d; });
    return d;
}

std::vector<VertexId> SubgraphView::vertices() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < base_->n_vertices(); ++v)
        if (!vdel_[v]) out.push_back(v);
    return out;
}

std::vector<EdgeId> SubgraphView::edges() const {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < base_->n_edges(); ++e)
        if (has_edge(e)) out.push_back(e);
    return out;
}

int SubgraphView::n_effective_vertices() const {
    int c = 0;
    for (VertexId v = 0; v < base_->n_vertices(); ++v)
        if (!vdel_[v]) ++c;
    return c;
}

int SubgraphView::n_effective_edges() const {
    int c = 0;
    for (EdgeId e = 0; e < base_->n_edges(); ++e)
        if (has_edge(e)) ++c;
    return c;
}

std::vector<int> bfs_distances(const SubgraphView& g, const std::vector<VertexId>& sources) {
    std::vector<int> dist(g.base().n_vertices(), -1);
    std::deque<VertexId> queue;
    for (VertexId s : sources) {
        if (!g.has_vertex(s)) throw std::invalid_argument("bfs: source not in view");
        dist[s] = 0;
        queue.push_back(s);
    }
    while (!queue.empty()) {
        VertexId x = queue.front();
        queue.pop_front();
        g.for_each_neighbor(x, [&](VertexId y, EdgeId) {
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        });
    }
    return dist;
}

SubgraphView ball(const SubgraphView& g, EdgeId e, int r) {
    if (!g.has_edge(e)) throw std::invalid_argument("ball: edge not present in view");
    if (r < 0) throw std::invalid_argument("ball: negative radius");
    const Edge& ed = g.base().edge(e);
    std::vector<int> dist = bfs_distances(g, {ed.u, ed.v});
    std::vector<char> keep(g.base().n_vertices(), 0);
    for (VertexId v = 0; v < g.base().n_vertices(); ++v)
        if (dist[v] >= 0 && dist[v] <= r) keep[v] = 1;
    return g.restricted_to_vertices(keep);
}

SubgraphView ball(const Graph& g, EdgeId e, int r) { return ball(SubgraphView(g), e, r); }

SubgraphView vertex_ball(const SubgraphView& g, VertexId u, int r) {
    if (!g.has_vertex(u)) throw std::invalid_argument("vertex_ball: vertex not present in view");
    if (r < 0) throw std::invalid_argument("vertex_ball: negative radius");
    std::vector<int> dist = bfs_distances(g, {u});
    std::vector<char> keep(g.base().n_vertices(), 0);
    for (VertexId v = 0; v < g.base().n_vertices(); ++v)
        if (dist[v] >= 0 && dist[v] <= r) keep[v] = 1;
    return g.restricted_to_vertices(keep);
}

std::vector<VertexId> boundary(const SubgraphView& ambient, const SubgraphView& inner) {
    if (&ambient.base() != &inner.base())
        throw std::invalid_argument("boundary: views over different base graphs");
    std::vector<VertexId> out;
    for (VertexId v = 0; v < inner.base().n_vertices(); ++v) {
        if (!inner.has_vertex(v) || !ambient.has_vertex(v)) continue;
        bool on_boundary = false;
        ambient.for_each_neighbor(v, [&](VertexId y, EdgeId) {
            if (!inner.has_vertex(y)) on_boundary = true;
        });
        if (on_boundary) out.push_back(v);
    }
    return out;
}

std::vector<VertexId> boundary(const Graph& ambient, const SubgraphView& inner) {
    return boundary(SubgraphView(ambient), inner);
}

namespace {

// component count + effective edge count in one sweep
std::pair<int, int> component_and_edge_count(const SubgraphView& g) {
    const int n = g.base().n_vertices();
    std::vector<char> seen(n, 0);
    int components = 0;
    for (VertexId s = 0; s < n; ++s) {
        if (!g.has_vertex(s) || seen[s]) continue;
        ++components;
        std::deque<VertexId> queue{s};
        seen[s] = 1;
        while (!queue.empty()) {
            VertexId x = queue.front();
            queue.pop_front();
            g.for_each_neighbor(x, [&](VertexId y, EdgeId) {
                if (!seen[y]) {
                    seen[y] = 1;
                    queue.push_back(y);
                }
            });
        }
    }
    return {components, g.n_effective_edges()};
}

}  // namespace

bool is_forest(const SubgraphView& g) {
    auto [components, m] = component_and_edge_count(g);
    return m == g.n_effective_vertices() - components;
}

bool is_connected(const SubgraphView& g) {
    auto [components, m] = component_and_edge_count(g);
    (void)m;
    return components <= 1;
}

}  // namespace matchdecay
