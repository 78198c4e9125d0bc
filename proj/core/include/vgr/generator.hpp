#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vgr/error.hpp"
#include "vgr/graph.hpp"
#include "vgr/search_state.hpp"

namespace vgr {

/// The requested parameters are ruled out by a closed-form non-existence rule.
class ParameterImpossible : public Error {
public:
    explicit ParameterImpossible(std::string rule)
        : Error("parameters impossible by rule " + rule), rule_(std::move(rule)) {}
    const std::string& rule() const { return rule_; }

private:
    std::string rule_;
};

struct GenerateOptions {
    bool prune_degree_deficit = true;
    bool prune_cycle_balance = true;
    bool prune_isomorphic = true;
    /// Isomorphism pruning is applied while at most this many edges have been added on
    /// top of the Moore tree; negative means always.
    int iso_max_added_edges = -1;
    /// Short-circuit with ParameterImpossible when a closed-form rule excludes the
    /// parameters. Disable only to cross-check those rules.
    bool check_nonexistence = true;
    /// Recount every cached cycle count at each node (slow; for debugging).
    bool verify_cache = false;
    int threads = 1;
    /// Search-tree depth at which work is split into independent subtasks when threads > 1.
    /// Negative selects 2k.
    int split_depth = -1;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct GenerateStats {
    std::uint64_t nodes = 0;
    std::uint64_t pruned_degree_deficit = 0;
    std::uint64_t pruned_cycle_balance = 0;
    std::uint64_t pruned_isomorphic = 0;
    std::uint64_t no_candidate = 0;
    std::uint64_t complete_graphs = 0;
    std::uint64_t emitted = 0;
    std::uint64_t duplicates = 0;

    GenerateStats& operator+=(const GenerateStats& o);
};

struct GenerateResult {
    /// Pairwise non-isomorphic, canonically labelled, sorted by canonical form.
    std::vector<Graph> graphs;
    GenerateStats stats;
    /// False when the deadline stopped the search early.
    bool complete = true;
};

/// Streams every connected vgr(v,k,g,lambda)-graph exactly once up to isomorphism.
/// Each graph is canonically labelled. The sink may be called from worker threads, but
/// never concurrently. Returns false when the deadline interrupted the search.
bool generate(const SearchParams& p, const GenerateOptions& opt,
              const std::function<void(const Graph&)>& sink, GenerateStats* stats = nullptr);

/// Collects the output of generate(). Empty when v is below the Moore bound.
GenerateResult generate_all(int v, int k, int g, std::int64_t lambda,
                            const GenerateOptions& opt = {});

struct ExtremalResult {
    enum class Status { Found, NoneUpTo, Impossible, BudgetExceeded };
    Status status = Status::NoneUpTo;
    /// Found: n(k,g,lambda). NoneUpTo: the v_max searched. BudgetExceeded: the verified
    /// lower bound (every smaller admissible order was exhausted).
    std::int64_t order = 0;
    std::vector<Graph> graphs;
    std::string rule;
};

/// Searches orders upward from the best closed-form lower bound, skipping orders that fail
/// the divisibility conditions, until the first order with at least one graph.
ExtremalResult find_extremal(int k, int g, std::int64_t lambda, std::int64_t v_max,
                             std::optional<std::chrono::steady_clock::duration> budget = {},
                             GenerateOptions opt = {});

} // namespace vgr
