#include "vgr/search_state.hpp"

#include <algorithm>
#include <limits>

#include "vgr/bounds.hpp"
#include "vgr/cycles.hpp"

namespace vgr {

namespace {

// Distances (capped) and shortest-path counts between all vertex pairs.
class PathTable {
public:
    PathTable(const Graph& g, int cap) : n_(g.order()), cap_(cap) {
        const auto n = static_cast<std::size_t>(n_);
        dist_.assign(n * n, static_cast<std::uint8_t>(cap + 1));
        paths_.assign(n * n, 0);
        std::vector<int> queue(n);
        for (int s = 0; s < n_; ++s) {
            auto* d = &dist_[static_cast<std::size_t>(s) * n];
            auto* p = &paths_[static_cast<std::size_t>(s) * n];
            d[s] = 0;
            p[s] = 1;
            int head = 0, tail = 0;
            queue[tail++] = s;
            while (head < tail) {
                const int x = queue[head++];
                if (d[x] >= cap_) continue;
                g.neighbors(x).for_each([&](int y) {
                    if (d[y] > cap_) {
                        d[y] = static_cast<std::uint8_t>(d[x] + 1);
                        p[y] = p[x];
                        queue[tail++] = y;
                    } else if (d[y] == d[x] + 1) {
                        p[y] += p[x];
                    }
                });
            }
        }
    }

    int dist(int a, int b) const { return dist_[index(a, b)]; }
    std::int64_t paths(int a, int b) const { return paths_[index(a, b)]; }

private:
    std::size_t index(int a, int b) const {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b);
    }

    int n_;
    int cap_;
    std::vector<std::uint8_t> dist_;
    std::vector<std::int64_t> paths_;
};

bool candidate_ok(const SearchParams& p, const Graph& g, const std::vector<std::int64_t>& cycles,
                  const PathTable& t, int x, int y) {
    if (g.degree(x) >= p.k || g.degree(y) >= p.k) return false;
    const int d = t.dist(x, y);
    if (d < p.g - 1) return false;
    if (d > p.g - 1) return true;
    // Every shortest x-y path closes a new g-cycle.
    const std::int64_t fresh = t.paths(x, y);
    if (cycles[x] + fresh > p.lambda || cycles[y] + fresh > p.lambda) return false;
    for (int w = 0; w < g.order(); ++w) {
        if (w == x || w == y) continue;
        if (t.dist(x, w) + t.dist(w, y) != p.g - 1) continue;
        if (cycles[w] + t.paths(x, w) * t.paths(w, y) > p.lambda) return false;
    }
    return true;
}

} // namespace

Graph moore_tree(int k, int g) {
    if (k < 2 || g < 3) throw PreconditionViolated("moore_tree requires k >= 2 and g >= 3");
    const auto order = moore_bound(k, g);
    if (order > kMaxOrder) throw GraphError("Moore tree exceeds the order cap");
    Graph t(static_cast<int>(order));
    int next = 0;
    std::vector<int> level;
    int depth = 0;
    if (g % 2 == 1) {
        level.push_back(next++);
        depth = (g - 1) / 2;
    } else {
        t.add_edge(0, 1);
        level = {0, 1};
        next = 2;
        depth = g / 2 - 1;
    }
    for (int d = 0; d < depth; ++d) {
        std::vector<int> children;
        for (int u : level) {
            const int want = (g % 2 == 1 && d == 0) ? k : k - 1;
            for (int i = 0; i < want; ++i) {
                t.add_edge(u, next);
                children.push_back(next++);
            }
        }
        level = std::move(children);
    }
    return t;
}

SearchState SearchState::from_graph(const SearchParams& p, Graph g) {
    if (g.order() != p.v) throw PreconditionViolated("search state order does not match v");
    SearchState s;
    s.params = p;
    s.cycles = vertex_cycle_counts(g, p.g);
    s.edge_count = g.edge_count();
    s.valid = Graph(p.v);
    s.declined = Graph(p.v);
    const PathTable t(g, p.g - 1);
    for (int x = 0; x < p.v; ++x)
        for (int y = x + 1; y < p.v; ++y)
            if (!g.has_edge(x, y) && candidate_ok(p, g, s.cycles, t, x, y))
                s.valid.add_edge_unchecked(x, y);
    s.graph = std::move(g);
    return s;
}

SearchState SearchState::initial(const SearchParams& p) {
    const Graph tree = moore_tree(p.k, p.g);
    if (p.v < tree.order()) throw PreconditionViolated("v is below the Moore bound");
    Graph g(p.v);
    for (const auto& e : tree.edges()) g.add_edge_unchecked(e.u, e.v);
    return from_graph(p, std::move(g));
}

SearchState candidate_update(const SearchState& s, Edge e) {
    if (!s.valid.has_edge(e.u, e.v)) throw PreconditionViolated("edge is not a valid candidate");
    const SearchParams& p = s.params;
    SearchState out = s;

    {
        // New g-cycles are the shortest a-b paths of length g-1 in the old graph.
        const PathTable before(s.graph, p.g - 1);
        if (before.dist(e.u, e.v) == p.g - 1) {
            const std::int64_t fresh = before.paths(e.u, e.v);
            out.cycles[e.u] += fresh;
            out.cycles[e.v] += fresh;
            for (int w = 0; w < p.v; ++w) {
                if (w == e.u || w == e.v) continue;
                if (before.dist(e.u, w) + before.dist(w, e.v) == p.g - 1)
                    out.cycles[w] += before.paths(e.u, w) * before.paths(w, e.v);
            }
        }
    }

    out.graph.add_edge_unchecked(e.u, e.v);
    out.valid.remove_edge(e.u, e.v);
    ++out.edge_count;

    const PathTable after(out.graph, p.g - 1);
    for (const auto& c : out.valid.edges())
        if (!candidate_ok(p, out.graph, out.cycles, after, c.u, c.v)) out.valid.remove_edge(c.u, c.v);
    return out;
}

SearchState decline(const SearchState& s, Edge e) {
    if (!s.valid.has_edge(e.u, e.v)) throw PreconditionViolated("edge is not a valid candidate");
    SearchState out = s;
    out.valid.remove_edge(e.u, e.v);
    out.declined.add_edge_unchecked(e.u, e.v);
    return out;
}

std::optional<Edge> select_branch(const SearchState& s) {
    int best = -1;
    int best_score = std::numeric_limits<int>::max();
    for (int u = 0; u < s.params.v; ++u) {
        if (s.deficit(u) <= 0) continue;
        const int score = s.candidate_degree(u) - s.deficit(u);
        if (score < best_score) {
            best_score = score;
            best = u;
        }
    }
    if (best < 0) throw PreconditionViolated("select_branch: every vertex has full degree");
    const int other = s.valid.neighbors(best).first();
    if (other < 0) return std::nullopt;
    return Edge(best, other);
}

bool prune_degree_deficit(const SearchState& s) {
    for (int u = 0; u < s.params.v; ++u)
        if (s.deficit(u) > 0 && s.candidate_degree(u) < s.deficit(u)) return true;
    return false;
}

bool prune_cycle_balance(const SearchState& s) {
    const auto& p = s.params;
    for (int u = 0; u < p.v; ++u) {
        if (s.graph.degree(u) != p.k) continue;
        std::int64_t sum = 0;
        std::int64_t mx = 0;
        s.graph.neighbors(u).for_each([&](int w) {
            sum += s.cycles[w];
            mx = std::max(mx, s.cycles[w]);
        });
        const std::int64_t slack = static_cast<std::int64_t>(p.k - 2) * p.lambda;
        if (slack + 2 * s.cycles[u] - sum < 0) return true;
        if (-slack + sum - 2 * mx >= 0 && slack + s.cycles[u] - sum + mx < 0) return true;
    }
    return false;
}

bool SeenStore::insert(const SearchState& s) {
    const Graph* layers[] = {&s.graph, &s.valid};
    return keys_.insert(canonical_form(layers)).second;
}

bool prune_isomorphic(const SearchState& s, SeenStore& seen) { return !seen.insert(s); }

bool cache_consistent(const SearchState& s) {
    return vertex_cycle_counts(s.graph, s.params.g) == s.cycles;
}

} // namespace vgr
