#include "vgr/classify.hpp"

#include <vector>

#include "vgr/cycles.hpp"

namespace vgr {

bool is_connected(const Graph& g) {
    const int n = g.order();
    if (n == 0) return true;
    VertexSet seen, frontier;
    seen.insert(0);
    frontier.insert(0);
    while (!frontier.empty()) {
        VertexSet next;
        frontier.for_each([&](int x) { next |= g.neighbors(x); });
        next -= seen;
        seen |= next;
        frontier = next;
    }
    return seen.size() == n;
}

bool is_bipartite(const Graph& g) {
    const int n = g.order();
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            bool ok = true;
            g.neighbors(x).for_each([&](int y) {
                if (side[y] < 0) {
                    side[y] = 1 - side[x];
                    stack.push_back(y);
                } else if (side[y] == side[x]) {
                    ok = false;
                }
            });
            if (!ok) return false;
        }
    }
    return true;
}

Classification classify(const Graph& g) {
    if (g.order() == 0) throw PreconditionViolated("classify requires at least one vertex");
    if (!is_connected(g)) throw DisconnectedGraph();
    const int n = g.order();
    const int k = g.degree(0);
    for (int u = 1; u < n; ++u)
        if (g.degree(u) != k) return NotVgr{NotVgr::Reason::Irregular, 0, u};

    const auto gi = girth(g);
    if (!gi) return NotVgr{NotVgr::Reason::Acyclic, 0, -1};
    const int len = *gi;

    const auto counts = vertex_cycle_counts(g, len);
    for (int u = 1; u < n; ++u)
        if (counts[u] != counts[0]) return NotVgr{NotVgr::Reason::UnequalCounts, 0, u};

    VgrProfile p;
    p.v = n;
    p.k = k;
    p.g = len;
    p.lambda = counts[0];
    p.is_bipartite = is_bipartite(g);
    std::optional<std::int64_t> edge_count;
    bool egr = true;
    for (const auto& e : g.edges()) {
        const auto c = count_girth_cycles_edge(g, e, len);
        if (!edge_count) {
            edge_count = c;
        } else if (*edge_count != c) {
            egr = false;
            break;
        }
    }
    p.is_egr = egr;
    if (egr) p.edge_lambda = edge_count;
    return p;
}

std::optional<VgrProfile> vgr_profile(const Graph& g) {
    if (g.order() == 0 || !is_connected(g)) return std::nullopt;
    auto c = classify(g);
    if (auto* p = std::get_if<VgrProfile>(&c)) return *p;
    return std::nullopt;
}

std::string NotVgr::describe() const {
    switch (reason) {
    case Reason::Irregular:
        return "not regular (vertices " + std::to_string(witness_a) + " and " +
               std::to_string(witness_b) + " differ in degree)";
    case Reason::Acyclic:
        return "acyclic";
    case Reason::UnequalCounts:
        return "girth-cycle counts differ at vertices " + std::to_string(witness_a) + " and " +
               std::to_string(witness_b);
    }
    return "unknown";
}

std::string to_string(const VgrProfile& p) {
    std::string s = "vgr(" + std::to_string(p.v) + "," + std::to_string(p.k) + "," +
                    std::to_string(p.g) + "," + std::to_string(p.lambda) + ")";
    if (p.is_egr) s += " egr(lambda=" + std::to_string(*p.edge_lambda) + ")";
    if (p.is_bipartite) s += " bipartite";
    return s;
}

} // namespace vgr
