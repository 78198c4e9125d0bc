#pragma once

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "vgr/graph.hpp"

namespace vgr {

/// Byte string that is equal for two (colored, layered) graphs iff they are isomorphic.
struct CanonicalForm {
    std::string bytes;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend std::strong_ordering operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
        return a.bytes.compare(b.bytes) <=> 0;
    }
};

struct CanonicalLabeling {
    /// order[i] is the vertex placed at canonical position i.
    std::vector<int> order;
    CanonicalForm form;
};

/// Canonical labeling of a graph given as one or more edge layers on a common vertex set,
/// with an optional vertex coloring (isomorphisms must map each layer to itself and
/// preserve colors).
///
/// Equitable refinement on per-layer neighbour counts, individualization of the first
/// smallest non-singleton cell, and a backtracking search for the lexicographically
/// smallest relabelled adjacency string. Automorphisms found between equivalent leaves
/// prune sibling orbits and redundant subtrees.
CanonicalLabeling canonical_labeling(std::span<const Graph* const> layers,
                                     std::span<const int> colors = {});

CanonicalForm canonical_form(const Graph& g, std::span<const int> colors = {});
CanonicalForm canonical_form(std::span<const Graph* const> layers, std::span<const int> colors = {});

/// Graph relabelled into canonical order.
Graph canonical_graph(const Graph& g);

/// Fast rejects on order, degree sequence and girth before comparing canonical forms.
bool are_isomorphic(const Graph& a, const Graph& b);

} // namespace vgr

template <>
struct std::hash<vgr::CanonicalForm> {
    std::size_t operator()(const vgr::CanonicalForm& f) const noexcept {
        return std::hash<std::string>{}(f.bytes);
    }
};
