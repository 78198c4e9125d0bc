#pragma once

#include <cstdint>
#include <optional>

#include "vgr/error.hpp"
#include "vgr/graph.hpp"

namespace vgr {

class NonInteger : public Error {
public:
    using Error::Error;
};

/// C_g, a vgr(g,2,g,1)-graph. Requires g >= 3.
Graph cycle_graph(int g);

/// K_n.
Graph complete_graph(int n);

/// Two copies of K_k joined by a perfect matching (vertex i to vertex k+i): a
/// vgr(2k, k, 3, C(k,2) - (k-1))-graph. Requires k >= 3.
Graph double_complete(int k);

/// Replaces every vertex x of `outer` by a copy of `inner` (vertices x*v .. x*v+v-1) and
/// attaches the i-th edge at x to the i-th vertex of that copy. Edges at x are taken in
/// ascending order of the other endpoint, or in a random order when a seed is given.
///
/// Requires `inner` to be a vgr(v,k,g,lambda)-graph and `outer` connected, v-regular with
/// girth > g/2. The result is checked to be a vgr(n*v, k+1, g, lambda)-graph.
Graph generalized_truncation(const Graph& inner, const Graph& outer,
                             std::optional<std::uint64_t> seed = {});

/// Cartesian product; vertex (a,b) is a*|V(h)| + b.
Graph cartesian_product(const Graph& g, const Graph& h);

/// Per-vertex girth-cycle count k*lambda_e/2 of an egr graph with per-edge count lambda_e. Throws NonInteger
/// when k*lambda_e is odd.
std::int64_t egr_to_vgr_lambda(int k, std::int64_t lambda_e);

} // namespace vgr
