#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "vgr/graph.hpp"

namespace vgr {

/// Certificate that a graph is a vgr(v,k,g,lambda)-graph.
struct VgrProfile {
    int v = 0;
    int k = 0;
    int g = 0;
    std::int64_t lambda = 0;
    bool is_egr = false;
    bool is_bipartite = false;
    /// Per-edge girth-cycle count when is_egr.
    std::optional<std::int64_t> edge_lambda;

    friend bool operator==(const VgrProfile&, const VgrProfile&) = default;
};

/// Why a connected graph is not vertex-girth-regular, with the first witness found.
struct NotVgr {
    enum class Reason { Irregular, Acyclic, UnequalCounts };
    Reason reason = Reason::Irregular;
    int witness_a = -1;
    int witness_b = -1;

    std::string describe() const;
    friend bool operator==(const NotVgr&, const NotVgr&) = default;
};

using Classification = std::variant<VgrProfile, NotVgr>;

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

/// Classifies a connected graph. Throws DisconnectedGraph otherwise.
Classification classify(const Graph& g);

/// The profile if the graph is vgr, else nullopt. Never throws on disconnected input.
std::optional<VgrProfile> vgr_profile(const Graph& g);

std::string to_string(const VgrProfile& p);

} // namespace vgr
