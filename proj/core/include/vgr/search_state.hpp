#pragma once

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "vgr/canon.hpp"
#include "vgr/graph.hpp"

namespace vgr {

struct SearchParams {
    int v = 0;
    int k = 0;
    int g = 0;
    std::int64_t lambda = 0;
};

/// Moore tree of a (k,g)-graph: vertex-rooted for odd g, edge-rooted (vertices 0 and 1)
/// for even g. Vertices are numbered in BFS order; order is moore_bound(k,g).
Graph moore_tree(int k, int g);

/// Working state of the generator along one branch of the search.
///
/// `valid` holds the candidate edges that may still be added without creating a cycle
/// shorter than g, a degree above k, or a vertex on more than lambda g-cycles.
/// `declined` holds candidates refused on this branch. `cycles[u]` is the number of
/// g-cycles through u in `graph`.
struct SearchState {
    SearchParams params;
    Graph graph;
    Graph valid;
    Graph declined;
    std::vector<std::int64_t> cycles;
    int edge_count = 0;

    /// Moore tree plus isolated vertices up to order v, with its candidate set.
    static SearchState initial(const SearchParams& p);

    /// State for an arbitrary partial graph (girth >= g, degrees <= k); candidates are
    /// computed from scratch and nothing is declined.
    static SearchState from_graph(const SearchParams& p, Graph g);

    int deficit(int u) const { return params.k - graph.degree(u); }
    int candidate_degree(int u) const { return valid.degree(u); }
    bool complete() const { return 2 * edge_count == params.v * params.k; }
};

/// Adds `e` (which must be a valid candidate) and removes every candidate invalidated by it.
SearchState candidate_update(const SearchState& s, Edge e);

/// Removes `e` from the candidates and records it as declined.
SearchState decline(const SearchState& s, Edge e);

/// Branching edge: a candidate at the vertex minimising (candidates - deficit), ties to the
/// lowest vertex, then the lowest-index other endpoint. nullopt when that vertex has no
/// candidate. Throws PreconditionViolated when every vertex already has degree k.
std::optional<Edge> select_branch(const SearchState& s);

/// True when some vertex can no longer reach degree k.
bool prune_degree_deficit(const SearchState& s);

/// True when a full-degree vertex violates the cycle-balance inequalities.
bool prune_cycle_balance(const SearchState& s);

/// Canonical keys of (graph, candidate set) pairs already explored.
class SeenStore {
public:
    /// Inserts the key of s; returns false when it was already present.
    bool insert(const SearchState& s);
    std::size_t size() const { return keys_.size(); }

private:
    std::unordered_set<CanonicalForm> keys_;
};

/// True when an isomorphic (graph, candidates) state was seen before; otherwise records it.
bool prune_isomorphic(const SearchState& s, SeenStore& seen);

/// Recomputes every vertex g-cycle count from scratch and compares with the cache.
bool cache_consistent(const SearchState& s);

} // namespace vgr
