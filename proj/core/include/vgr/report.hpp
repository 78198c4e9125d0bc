#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "vgr/bounds.hpp"
#include "vgr/classify.hpp"
#include "vgr/graph.hpp"

namespace vgr {

struct VgrConstraints {
    std::optional<int> k;
    std::optional<int> g;
    std::optional<std::int64_t> lambda;
};

/// Profile of g when it is a connected vgr graph matching every given constraint.
std::optional<VgrProfile> match_vgr(const Graph& g, const VgrConstraints& c = {});

std::vector<std::pair<Graph, VgrProfile>> filter_vgr(const std::vector<Graph>& graphs,
                                                     const VgrConstraints& c = {});

/// JSON text {k, g, lambda, moore, lambda_max, rules: [{name, value}], best_lb, status}.
/// Verdict rules carry "impossible" or "no-info"; bound rules carry their integer value.
std::string to_json(const BoundReport& r, int indent = -1);
BoundReport bound_report_from_json(const std::string& text);

struct TableRow {
    int k = 0;
    int g = 0;
    std::int64_t lambda = 0;
    /// nullopt means infinite.
    std::optional<std::int64_t> lb;
    std::optional<std::int64_t> ub;
    std::string status; // exact, bounded or impossible
};

struct TableOptions {
    /// Time allowed to find_extremal per row; zero skips the search.
    std::chrono::steady_clock::duration budget = std::chrono::seconds(10);
    int threads = 1;
};

/// Smallest order of a graph obtained from the explicit constructions, if any.
std::optional<std::int64_t> construction_upper_bound(int k, int g, std::int64_t lambda);

TableRow table_row(int k, int g, std::int64_t lambda, const TableOptions& opt = {});

/// Rows for every lambda in [1, lambda_max(k,g)] and g in [g_min, g_max]. The callback,
/// when given, sees each row as soon as it is computed.
std::vector<TableRow> build_table(int k, int g_min, int g_max, const TableOptions& opt = {},
                                  const std::function<void(const TableRow&)>& on_row = {});

/// CSV header line "k,g,lambda,lb,ub,status".
void write_table_header(std::ostream& out);
void write_table_row(std::ostream& out, const TableRow& row);

} // namespace vgr
