#include "vgr/cycles.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace vgr {

namespace {

VertexSet neighborhood(const Graph& g, const VertexSet& s) {
    VertexSet out;
    s.for_each([&](int x) { out |= g.neighbors(x); });
    return out;
}

// BFS layers 0..depth from root, never entering any vertex of `blocked`.
std::vector<VertexSet> layers_from(const Graph& g, int root, int depth, VertexSet blocked) {
    std::vector<VertexSet> layers;
    layers.reserve(static_cast<std::size_t>(depth) + 1);
    VertexSet seen = blocked;
    VertexSet cur;
    cur.insert(root);
    seen.insert(root);
    layers.push_back(cur);
    for (int d = 1; d <= depth; ++d) {
        cur = neighborhood(g, cur) - seen;
        seen |= cur;
        layers.push_back(cur);
    }
    return layers;
}

} // namespace

std::optional<int> girth(const Graph& g) {
    const int n = g.order();
    int best = n + 1;
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::vector<int> queue(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        parent[s] = -1;
        int head = 0, tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            const int x = queue[head++];
            // Any cycle closed from here on is at least 2*dist[x] long.
            if (2 * dist[x] >= best) break;
            g.neighbors(x).for_each([&](int y) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue[tail++] = y;
                } else if (y != parent[x]) {
                    best = std::min(best, dist[x] + dist[y] + 1);
                }
            });
        }
    }
    if (best > n) return std::nullopt;
    return best;
}

std::int64_t count_girth_cycles_vertex(const Graph& g, int u, int length) {
    if (length < 3) return 0;
    const int h = length / 2;
    auto layers = layers_from(g, u, h, VertexSet{});
    const VertexSet& rim = layers[static_cast<std::size_t>(h)];
    std::int64_t count = 0;
    if (length % 2 == 1) {
        // Horizontal edges inside the rim, each seen from both ends.
        rim.for_each([&](int x) { count += g.neighbors(x).intersection_size(rim); });
        return count / 2;
    }
    const VertexSet& inner = layers[static_cast<std::size_t>(h - 1)];
    rim.for_each([&](int w) {
        const std::int64_t p = g.neighbors(w).intersection_size(inner);
        count += p * (p - 1) / 2;
    });
    return count;
}

std::int64_t count_girth_cycles_edge(const Graph& g, Edge e, int length) {
    if (length < 3 || !g.has_edge(e.u, e.v)) return 0;
    VertexSet block_v, block_u;
    block_v.insert(e.v);
    block_u.insert(e.u);
    if (length % 2 == 1) {
        const int h = length / 2;
        auto a = layers_from(g, e.u, h, block_v);
        auto b = layers_from(g, e.v, h, block_u);
        return a[static_cast<std::size_t>(h)].intersection_size(b[static_cast<std::size_t>(h)]);
    }
    const int h = length / 2 - 1;
    auto a = layers_from(g, e.u, h, block_v);
    auto b = layers_from(g, e.v, h, block_u);
    const VertexSet& far_b = b[static_cast<std::size_t>(h)];
    std::int64_t count = 0;
    a[static_cast<std::size_t>(h)].for_each(
        [&](int x) { count += g.neighbors(x).intersection_size(far_b); });
    return count;
}

std::int64_t Signature::sum() const {
    std::int64_t s = 0;
    for (auto a : entries) s += a;
    return s;
}

Signature vertex_signature(const Graph& g, int u, int length) {
    Signature sig;
    g.neighbors(u).for_each(
        [&](int w) { sig.entries.push_back(count_girth_cycles_edge(g, Edge(u, w), length)); });
    std::sort(sig.entries.begin(), sig.entries.end(), std::greater<>());
    return sig;
}

std::vector<std::int64_t> vertex_cycle_counts(const Graph& g, int length) {
    std::vector<std::int64_t> out(static_cast<std::size_t>(g.order()));
    for (int u = 0; u < g.order(); ++u) out[u] = count_girth_cycles_vertex(g, u, length);
    return out;
}

std::int64_t total_girth_cycles(const Graph& g, int length) {
    if (length < 3) return 0;
    std::int64_t s = 0;
    for (int u = 0; u < g.order(); ++u) s += count_girth_cycles_vertex(g, u, length);
    return s / length;
}

} // namespace vgr
