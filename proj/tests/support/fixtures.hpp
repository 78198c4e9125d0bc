#pragma once

#include <vgr/constructions.hpp>
#include <vgr/graph.hpp>

namespace fixture {

inline vgr::Graph petersen() {
    vgr::Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

inline vgr::Graph heawood() {
    vgr::Graph g(14);
    for (int i = 0; i < 14; ++i) g.add_edge(i, (i + 1) % 14);
    for (int i = 0; i < 14; i += 2) g.add_edge(i, (i + 5) % 14);
    return g;
}

inline vgr::Graph complete_bipartite(int a, int b) {
    vgr::Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

inline vgr::Graph path(int n) {
    vgr::Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline vgr::Graph cube() {
    vgr::Graph g(8);
    for (int i = 0; i < 8; ++i)
        for (int b = 1; b < 8; b <<= 1)
            if ((i ^ b) > i) g.add_edge(i, i ^ b);
    return g;
}

inline vgr::Graph octahedron() {
    vgr::Graph g = vgr::complete_graph(6);
    for (int i = 0; i < 3; ++i) g.remove_edge(i, i + 3);
    return g;
}

/// Cayley graph on Z4 x Z4 with connection set +-(1,0), +-(0,1), +-(1,1). Strongly regular
/// with the same parameters as K4 x K4 but not isomorphic to it.
inline vgr::Graph shrikhande() {
    vgr::Graph g(16);
    auto id = [](int a, int b) { return ((a + 4) % 4) * 4 + (b + 4) % 4; };
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (auto [da, db] : {std::pair{1, 0}, {0, 1}, {1, 1}}) g.add_edge(id(a, b), id(a + da, b + db));
    return g;
}

/// Two diamonds (K4 minus an edge) joined at their degree-2 vertices: cubic, girth 3,
/// with vertices on one or two triangles.
inline vgr::Graph two_diamonds() {
    return vgr::Graph::from_edges(8, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                                      {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7},
                                      {0, 4}, {1, 5}});
}

inline vgr::Graph disjoint_union(const vgr::Graph& a, const vgr::Graph& b) {
    vgr::Graph g(a.order() + b.order());
    for (const auto& e : a.edges()) g.add_edge(e.u, e.v);
    for (const auto& e : b.edges()) g.add_edge(a.order() + e.u, a.order() + e.v);
    return g;
}

} // namespace fixture
