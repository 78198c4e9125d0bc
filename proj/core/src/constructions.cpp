#include "vgr/constructions.hpp"

#include <algorithm>
#include <random>
#include <vector>

#include "vgr/classify.hpp"
#include "vgr/cycles.hpp"

namespace vgr {

namespace {

void expect_profile(const Graph& g, int v, int k, int girth_len, std::int64_t lambda, const char* what) {
    const auto p = vgr_profile(g);
    if (!p || p->v != v || p->k != k || p->g != girth_len || p->lambda != lambda)
        throw Error(std::string(what) + ": result does not have the expected profile");
}

} // namespace

Graph cycle_graph(int g) {
    if (g < 3) throw PreconditionViolated("cycle_graph requires g >= 3");
    Graph c(g);
    for (int i = 0; i < g; ++i) c.add_edge(i, (i + 1) % g);
    return c;
}

Graph complete_graph(int n) {
    Graph c(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) c.add_edge(i, j);
    return c;
}

Graph double_complete(int k) {
    if (k < 3) throw PreconditionViolated("double_complete requires k >= 3");
    Graph d(2 * k);
    for (int side = 0; side < 2; ++side)
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) d.add_edge(side * k + i, side * k + j);
    for (int i = 0; i < k; ++i) d.add_edge(i, k + i);
    expect_profile(d, 2 * k, k, 3, static_cast<std::int64_t>(k) * (k - 1) / 2 - (k - 1), "double_complete");
    return d;
}

Graph generalized_truncation(const Graph& inner, const Graph& outer, std::optional<std::uint64_t> seed) {
    const auto profile = vgr_profile(inner);
    if (!profile) throw PreconditionViolated("generalized_truncation: inner graph is not vgr");
    const int v = inner.order();
    if (outer.order() == 0 || outer.regular_degree() != v)
        throw PreconditionViolated("generalized_truncation: outer graph must be regular of degree |V(inner)|");
    if (!is_connected(outer)) throw PreconditionViolated("generalized_truncation: outer graph is disconnected");
    const auto outer_girth = girth(outer);
    if (outer_girth && 2 * *outer_girth <= profile->g)
        throw PreconditionViolated("generalized_truncation: outer girth must exceed g/2");

    const int n = outer.order();
    Graph t(n * v);
    for (int x = 0; x < n; ++x)
        for (const auto& e : inner.edges()) t.add_edge(x * v + e.u, x * v + e.v);

    // slot[x][y] = index of the inner vertex of copy x that receives the edge xy.
    std::vector<std::vector<int>> slot(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
    std::mt19937_64 rng(seed.value_or(0));
    for (int x = 0; x < n; ++x) {
        std::vector<int> nbrs;
        outer.neighbors(x).for_each([&](int y) { nbrs.push_back(y); });
        if (seed) std::shuffle(nbrs.begin(), nbrs.end(), rng);
        for (int i = 0; i < v; ++i) slot[x][nbrs[i]] = i;
    }
    for (const auto& e : outer.edges()) t.add_edge(e.u * v + slot[e.u][e.v], e.v * v + slot[e.v][e.u]);

    expect_profile(t, n * v, profile->k + 1, profile->g, profile->lambda, "generalized_truncation");
    return t;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    const int n1 = g.order();
    const int n2 = h.order();
    Graph p(n1 * n2);
    for (int a = 0; a < n1; ++a)
        for (const auto& e : h.edges()) p.add_edge(a * n2 + e.u, a * n2 + e.v);
    for (int b = 0; b < n2; ++b)
        for (const auto& e : g.edges()) p.add_edge(e.u * n2 + b, e.v * n2 + b);
    return p;
}

std::int64_t egr_to_vgr_lambda(int k, std::int64_t lambda_e) {
    if ((static_cast<std::int64_t>(k) * lambda_e) % 2 != 0)
        throw NonInteger("k * lambda_e is odd");
    return static_cast<std::int64_t>(k) * lambda_e / 2;
}

} // namespace vgr
