#include "vgr/report.hpp"

#include <algorithm>
#include <json.hpp>

#include "vgr/generator.hpp"

namespace vgr {

std::optional<VgrProfile> match_vgr(const Graph& g, const VgrConstraints& c) {
    auto p = vgr_profile(g);
    if (!p) return std::nullopt;
    if (c.k && p->k != *c.k) return std::nullopt;
    if (c.g && p->g != *c.g) return std::nullopt;
    if (c.lambda && p->lambda != *c.lambda) return std::nullopt;
    return p;
}

std::vector<std::pair<Graph, VgrProfile>> filter_vgr(const std::vector<Graph>& graphs,
                                                     const VgrConstraints& c) {
    std::vector<std::pair<Graph, VgrProfile>> out;
    for (const auto& g : graphs)
        if (auto p = match_vgr(g, c)) out.emplace_back(g, *p);
    return out;
}

std::string to_json(const BoundReport& r, int indent) {
    nlohmann::json rules = nlohmann::json::array();
    for (const auto& v : r.verdicts)
        rules.push_back({{"name", v.rule}, {"value", v.impossible ? "impossible" : "no-info"}});
    for (const auto& b : r.lbs) rules.push_back({{"name", b.rule}, {"value", b.value}});
    nlohmann::json j = {
        {"k", r.k},
        {"g", r.g},
        {"lambda", r.lambda},
        {"moore", r.moore},
        {"lambda_max", r.lambda_cap},
        {"rules", rules},
        {"best_lb", r.best_lb ? nlohmann::json(*r.best_lb) : nlohmann::json(nullptr)},
        {"status", r.impossible ? "impossible" : "bounded"},
    };
    return j.dump(indent);
}

BoundReport bound_report_from_json(const std::string& text) {
    BoundReport r;
    try {
        const auto j = nlohmann::json::parse(text);
        r.k = j.at("k").get<int>();
        r.g = j.at("g").get<int>();
        r.lambda = j.at("lambda").get<std::int64_t>();
        r.moore = j.at("moore").get<std::int64_t>();
        r.lambda_cap = j.at("lambda_max").get<std::int64_t>();
        r.requires_moore_graph = r.lambda == r.lambda_cap;
        for (const auto& rule : j.at("rules")) {
            const auto& value = rule.at("value");
            if (value.is_string())
                r.verdicts.push_back({rule.at("name").get<std::string>(), value.get<std::string>() == "impossible"});
            else
                r.lbs.push_back({rule.at("name").get<std::string>(), value.get<std::int64_t>()});
        }
        if (!j.at("best_lb").is_null()) r.best_lb = j.at("best_lb").get<std::int64_t>();
        r.impossible = j.at("status").get<std::string>() == "impossible";
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed bound report: ") + e.what());
    }
    return r;
}

std::optional<std::int64_t> construction_upper_bound(int k, int g, std::int64_t lambda) {
    std::optional<std::int64_t> best;
    auto offer = [&](std::int64_t n) {
        if (!best || n < *best) best = n;
    };
    const std::int64_t pairs = static_cast<std::int64_t>(k) * (k - 1) / 2;
    if (g == 3 && lambda == pairs) offer(k + 1);                // K_{k+1}
    if (g == 3 && lambda == pairs - (k - 1)) offer(2 * k);      // double_complete(k)
    if (g == 4 && lambda == lambda_max(k, 4)) offer(2 * k);     // K_{k,k}
    if (lambda == 1 && g <= 7) {
        // Repeated truncation starting from C_g, with complete (g <= 5) or complete
        // bipartite (g <= 7) outer graphs.
        std::int64_t n = g;
        for (int d = 2; d < k; ++d) {
            if (n > (std::int64_t{1} << 30)) return best;
            n = g <= 5 ? n * (n + 1) : 2 * n * n;
        }
        offer(n);
    }
    return best;
}

TableRow table_row(int k, int g, std::int64_t lambda, const TableOptions& opt) {
    TableRow row{k, g, lambda, std::nullopt, std::nullopt, "impossible"};
    const BoundReport report = best_lower_bound(k, g, lambda);
    if (report.impossible) return row;
    row.lb = report.best_lb;
    row.ub = construction_upper_bound(k, g, lambda);

    if (opt.budget > std::chrono::steady_clock::duration::zero()) {
        GenerateOptions gen;
        gen.threads = opt.threads;
        const std::int64_t v_max = row.ub ? *row.ub : kMaxOrder;
        const auto found = find_extremal(k, g, lambda, v_max, opt.budget, gen);
        switch (found.status) {
        case ExtremalResult::Status::Found:
            row.lb = row.ub = found.order;
            break;
        case ExtremalResult::Status::BudgetExceeded:
            row.lb = std::max(*row.lb, found.order);
            break;
        case ExtremalResult::Status::NoneUpTo:
            if (!row.ub) row.lb = std::max<std::int64_t>(*row.lb, found.order + 1);
            break;
        case ExtremalResult::Status::Impossible:
            row.lb = row.ub = std::nullopt;
            return row;
        }
    }
    row.status = row.ub && *row.ub == *row.lb ? "exact" : "bounded";
    return row;
}

std::vector<TableRow> build_table(int k, int g_min, int g_max, const TableOptions& opt,
                                  const std::function<void(const TableRow&)>& on_row) {
    std::vector<TableRow> rows;
    for (int g = g_min; g <= g_max; ++g) {
        const std::int64_t cap = lambda_max(k, g);
        for (std::int64_t lambda = 1; lambda <= cap; ++lambda) {
            rows.push_back(table_row(k, g, lambda, opt));
            if (on_row) on_row(rows.back());
        }
    }
    return rows;
}

void write_table_header(std::ostream& out) { out << "k,g,lambda,lb,ub,status\n"; }

void write_table_row(std::ostream& out, const TableRow& row) {
    auto field = [](const std::optional<std::int64_t>& x) { return x ? std::to_string(*x) : std::string("inf"); };
    out << row.k << ',' << row.g << ',' << row.lambda << ',' << field(row.lb) << ',' << field(row.ub) << ','
        << row.status << '\n';
}

} // namespace vgr
