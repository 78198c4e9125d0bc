#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vgr/graph.hpp"

namespace vgr {

/// Length of a shortest cycle, or nullopt for a forest.
std::optional<int> girth(const Graph& g);

/// Number of g-cycles through vertex u.
///
/// Counts by midpoint decomposition of the radius-floor(g/2) ball around u, so the
/// result is exact only when the graph has no cycle shorter than g. Partial graphs
/// (vertices below full degree) are fine.
std::int64_t count_girth_cycles_vertex(const Graph& g, int u, int length);

/// Number of g-cycles through the edge e. Same precondition as the vertex count.
std::int64_t count_girth_cycles_edge(const Graph& g, Edge e, int length);

/// Per-edge girth-cycle counts at one vertex, sorted non-increasing.
struct Signature {
    std::vector<std::int64_t> entries;

    std::int64_t sum() const;
    friend bool operator==(const Signature&, const Signature&) = default;
};

Signature vertex_signature(const Graph& g, int u, int length);

/// Total number of g-cycles in the graph.
std::int64_t total_girth_cycles(const Graph& g, int length);

/// Convenience: counts for all vertices.
std::vector<std::int64_t> vertex_cycle_counts(const Graph& g, int length);

} // namespace vgr
