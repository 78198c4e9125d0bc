#include "vgr/graph.hpp"

#include <string>

namespace vgr {

Graph::Graph(int order) : order_(order) {
    if (order < 0 || order > kMaxOrder)
        throw GraphError("graph order " + std::to_string(order) + " outside [0, " +
                         std::to_string(kMaxOrder) + "]");
    rows_.resize(static_cast<std::size_t>(order));
}

Graph Graph::from_edges(int order, std::span<const Edge> edges) {
    Graph g(order);
    for (const auto& e : edges) g.add_edge(e.u, e.v);
    return g;
}

Graph Graph::from_edges(int order, std::initializer_list<std::pair<int, int>> edges) {
    Graph g(order);
    for (const auto& [a, b] : edges) g.add_edge(a, b);
    return g;
}

void Graph::check_vertex(int u) const {
    if (u < 0 || u >= order_)
        throw GraphError("vertex " + std::to_string(u) + " out of range for order " +
                         std::to_string(order_));
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
    if (has_edge(u, v))
        throw GraphError("repeated edge " + std::to_string(u) + "-" + std::to_string(v));
    add_edge_unchecked(u, v);
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    rows_[u].erase(v);
    rows_[v].erase(u);
}

int Graph::edge_count() const {
    int twice = 0;
    for (const auto& r : rows_) twice += r.size();
    return twice / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < order_; ++u)
        for (int v = rows_[u].next(u); v != -1; v = rows_[u].next(v)) out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(static_cast<std::size_t>(order_));
    for (int u = 0; u < order_; ++u) d[u] = degree(u);
    return d;
}

int Graph::regular_degree() const {
    if (order_ == 0) return 0;
    const int k = degree(0);
    for (int u = 1; u < order_; ++u)
        if (degree(u) != k) return -1;
    return k;
}

Graph Graph::relabeled(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != order_)
        throw GraphError("permutation size does not match graph order");
    VertexSet seen;
    for (int p : perm) {
        if (p < 0 || p >= order_ || seen.contains(p)) throw GraphError("not a permutation");
        seen.insert(p);
    }
    Graph h(order_);
    for (int u = 0; u < order_; ++u)
        rows_[u].for_each([&](int v) {
            if (u < v) h.add_edge_unchecked(perm[u], perm[v]);
        });
    return h;
}

} // namespace vgr
