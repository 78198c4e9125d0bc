#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vgr/error.hpp"
#include "vgr/vertex_set.hpp"

namespace vgr {

/// Undirected edge with first < second.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on at most kMaxOrder vertices, stored as adjacency bit rows.
///
/// Loops and repeated edges are rejected at construction; every operation may therefore
/// assume a symmetric adjacency relation with empty diagonal.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order);

    /// Builds a graph from an edge list. Throws GraphError on loops, repeated edges,
    /// or endpoints outside [0, order).
    static Graph from_edges(int order, std::span<const Edge> edges);
    static Graph from_edges(int order, std::initializer_list<std::pair<int, int>> edges);

    int order() const { return order_; }
    bool has_edge(int u, int v) const { return rows_[u].contains(v); }
    const VertexSet& neighbors(int u) const { return rows_[u]; }
    int degree(int u) const { return rows_[u].size(); }
    int edge_count() const;

    /// Throws GraphError when u == v or the edge already exists.
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    /// Adds without validation; the caller guarantees u != v and the edge is absent.
    void add_edge_unchecked(int u, int v) {
        rows_[u].insert(v);
        rows_[v].insert(u);
    }

    std::vector<Edge> edges() const;
    std::vector<int> degrees() const;

    /// Degree if all vertices share it, else -1. Returns 0 for the empty graph on n vertices.
    int regular_degree() const;

    /// Graph with vertex u of this graph relabelled to perm[u].
    Graph relabeled(std::span<const int> perm) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.order_ == b.order_ && a.rows_ == b.rows_;
    }

private:
    void check_vertex(int u) const;

    int order_ = 0;
    std::vector<VertexSet> rows_;
};

} // namespace vgr
