#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace matchdecay {

using VertexId = int;
using EdgeId = int;

struct Edge {
    VertexId u;
    VertexId v;

    VertexId other(VertexId x) const { return x == u ? v : u; }
};

struct AdjEntry {
    VertexId to;
    EdgeId via;
};

/// Immutable simple undirected graph. Vertex ids are 0..n-1, edge ids are
/// 0..m-1 in construction order and stay stable under read-only views.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an explicit vertex count and edge list.
    /// Rejects self-loops, duplicate edges (either orientation) and
    /// out-of-range endpoints.
    static Graph from_edges(int n_vertices, const std::vector<std::pair<VertexId, VertexId>>& edges);

    /// Convenience: vertex count inferred as max endpoint + 1.
    static Graph from_edges(const std::vector<std::pair<VertexId, VertexId>>& edges);

    int n_vertices() const { return n_; }
    int n_edges() const { return static_cast<int>(edges_.size()); }

    const Edge& edge(EdgeId e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const { return edges_; }

    std::span<const AdjEntry> neighbors(VertexId v) const { return adj_[v]; }
    int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }

    bool valid_vertex(VertexId v) const { return v >= 0 && v < n_; }
    bool valid_edge(EdgeId e) const { return e >= 0 && e < n_edges(); }

    /// Edge id joining u and v, or -1 if absent.
    EdgeId find_edge(VertexId u, VertexId v) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<AdjEntry>> adj_;
};

/// Read-only overlay over a Graph with some vertices and edges deleted.
/// The effective edge set is: edges with both endpoints present and not
/// themselves deleted (induced-subgraph rule). Views compose: deleting A
/// then B equals deleting A ∪ B, and deletion is idempotent.
class SubgraphView {
public:
    SubgraphView() = default;
    explicit SubgraphView(const Graph& g)
        : base_(&g), vdel_(g.n_vertices(), false), edel_(g.n_edges(), false) {}

    const Graph& base() const { return *base_; }

    bool has_vertex(VertexId v) const { return base_->valid_vertex(v) && !vdel_[v]; }
    bool has_edge(EdgeId e) const {
        if (!base_->valid_edge(e) || edel_[e]) return false;
        const Edge& ed = base_->edge(e);
        return !vdel_[ed.u] && !vdel_[ed.v];
    }

    SubgraphView without_vertices(const std::vector<VertexId>& vs) const;
    SubgraphView without_edges(const std::vector<EdgeId>& es) const;
    SubgraphView without(const std::vector<VertexId>& vs, const std::vector<EdgeId>& es) const;

    /// Keeps exactly the given vertices (of those currently present).
    SubgraphView restricted_to_vertices(const std::vector<char>& keep) const;

    int effective_degree(VertexId v) const;
    std::vector<VertexId> vertices() const;
    std::vector<EdgeId> edges() const;
    int n_effective_vertices() const;
    int n_effective_edges() const;

    template <typename F>
    void for_each_neighbor(VertexId v, F&& f) const {
        for (const AdjEntry& a : base_->neighbors(v)) {
            if (!edel_[a.via] && !vdel_[a.to]) f(a.to, a.via);
        }
    }

private:
    const Graph* base_ = nullptr;
    std::vector<char> vdel_;
    std::vector<char> edel_;
};

/// BFS distances inside a view from a set of sources; -1 for unreachable.
std::vector<int> bfs_distances(const SubgraphView& g, const std::vector<VertexId>& sources);

/// Ball around an edge: induced subgraph on vertices at distance <= r from
/// either endpoint of e, as a view over the same base graph.
SubgraphView ball(const SubgraphView& g, EdgeId e, int r);
SubgraphView ball(const Graph& g, EdgeId e, int r);

/// Ball around a vertex: induced subgraph on vertices at distance <= r from u.
SubgraphView vertex_ball(const SubgraphView& g, VertexId u, int r);

/// Vertices of the inner view adjacent (through ambient edges) to an
/// ambient vertex outside the inner view. Both views must share a base.
std::vector<VertexId> boundary(const SubgraphView& ambient, const SubgraphView& inner);
std::vector<VertexId> boundary(const Graph& ambient, const SubgraphView& inner);

/// True if the effective graph is acyclic (|E| == |V| - #components).
bool is_forest(const SubgraphView& g);

/// True if all effective vertices are in one connected component.
bool is_connected(const SubgraphView& g);

}  // namespace matchdecay
