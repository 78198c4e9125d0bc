// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <vgr/bounds.hpp>
#include <vgr/canon.hpp>
#include <vgr/classify.hpp>
#include <vgr/constructions.hpp>
#include <vgr/cycles.hpp>
#include <vgr/generator.hpp>
#include <vgr/graph6.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace vgr;
using Clock = std::chrono::steady_clock;

namespace {

// Every comparison below is exact; budgets are wall-clock limits.
constexpr std::int64_t kTolerance = 0;
constexpr auto kTableBudget = std::chrono::minutes(10);
constexpr auto kCountBudget = std::chrono::hours(2);
constexpr auto kOracleBudget = std::chrono::hours(1);
constexpr int kRandomCountingGraphs = 500;
constexpr int kMaxCountingOrder = 12;
constexpr int kRoundTripGraphsPerOrder = 2000;

bool same(std::int64_t a, std::int64_t b) { return (a > b ? a - b : b - a) <= kTolerance; }

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail.clear();
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
};

std::string tuple_str(std::initializer_list<std::int64_t> xs) {
    std::string s = "(";
    for (auto x : xs) s += (s.size() > 1 ? "," : "") + std::to_string(x);
    return s + ")";
}

std::vector<CanonicalForm> forms(const std::vector<Graph>& graphs) {
    std::vector<CanonicalForm> out;
    for (const auto& g : graphs) out.push_back(canonical_form(g));
    return out;
}

Outcome table_exact() {
    Outcome o;
    struct Row {
        int k, g;
        std::int64_t lambda, n;
    };
    const Row rows[] = {{3, 3, 1, 6}, {3, 3, 3, 4}, {3, 4, 2, 8},  {3, 4, 3, 8},  {3, 4, 6, 6}, {3, 5, 6, 10},
                        {4, 3, 1, 9}, {4, 3, 3, 7}, {4, 3, 4, 6},  {4, 3, 6, 5},  {4, 4, 5, 12}, {4, 4, 10, 10}};
    for (const auto& r : rows) {
        const auto start = Clock::now();
        const auto res = find_extremal(r.k, r.g, r.lambda, 64, kTableBudget);
        const auto secs = std::chrono::duration<double>(Clock::now() - start).count();
        if (res.status != ExtremalResult::Status::Found || !same(res.order, r.n))
            o.fail("n" + tuple_str({r.k, r.g, r.lambda}) + " = " + std::to_string(res.order) + ", expected " +
                   std::to_string(r.n));
        else if (o.pass)
            o.detail += (o.detail.empty() ? "" : " ") + std::to_string(r.n) + "(" + std::to_string(secs).substr(0, 4) + "s)";
    }
    return o;
}

Outcome extremal_count() {
    Outcome o;
    GenerateOptions opt;
    opt.deadline = Clock::now() + kCountBudget;
    const auto start = Clock::now();
    const auto r = generate_all(20, 4, 4, 1, opt);
    const auto secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (!r.complete) o.fail("budget exceeded");
    const auto fs = forms(r.graphs);
    if (std::set<CanonicalForm>(fs.begin(), fs.end()).size() != fs.size()) o.fail("isomorphic pair in output");
    for (const auto& g : r.graphs) {
        const auto p = vgr_profile(g);
        if (!p || p->v != 20 || p->k != 4 || p->g != 4 || p->lambda != 1) o.fail("graph with a wrong profile");
    }
    if (!same(static_cast<std::int64_t>(r.graphs.size()), 25)) o.fail(std::to_string(r.graphs.size()) + " graphs, expected 25");
    if (o.pass) o.detail = "25 graphs in " + std::to_string(static_cast<int>(secs)) + "s";
    return o;
}

Outcome nonexistence_rows() {
    Outcome o;
    const std::int64_t rows[][3] = {{3, 3, 2}, {3, 4, 5}, {3, 6, 11}, {3, 7, 11}, {3, 8, 23}, {4, 3, 5},
                                    {4, 4, 16}, {4, 4, 17}, {4, 5, 18}, {4, 6, 52}, {4, 6, 53}};
    for (const auto& r : rows) {
        const auto v = nonexistence_verdict(static_cast<int>(r[0]), static_cast<int>(r[1]), r[2]);
        if (!v.impossible) o.fail(tuple_str({r[0], r[1], r[2]}) + " not decided");
        else if (o.pass) o.detail += (o.detail.empty() ? "" : " ") + v.rule;
    }
    return o;
}

Outcome spectral_tight() {
    Outcome o;
    const auto lb = lb_spectral(3, 6, 12);
    if (!lb || !same(*lb, 14)) o.fail("lb_spectral(3,6,12) = " + (lb ? std::to_string(*lb) : std::string("none")));
    const auto n = find_extremal(3, 6, 12, 64, kTableBudget);
    if (n.status != ExtremalResult::Status::Found || !same(n.order, 14)) o.fail("n(3,6,12) = " + std::to_string(n.order));
    if (o.pass) o.detail = "lb = n = 14";
    return o;
}

Outcome closed_walk_polynomials() {
    Outcome o;
    int checked = 0;
    for (std::int64_t k = 3; k <= 10; ++k) {
        const std::int64_t expected[] = {k, 2 * k * k - k, 5 * k * k * k - 6 * k * k + 2 * k,
                                         14 * k * k * k * k - 28 * k * k * k + 20 * k * k - 5 * k};
        for (int i = 0; i < 4; ++i) {
            const int len = 2 * (i + 1);
            const auto got = cyclefree_closed_walks(len, static_cast<int>(k));
            if (!same(got, expected[i])) o.fail("c(" + std::to_string(len) + "," + std::to_string(k) + ") = " + std::to_string(got));
            ++checked;
        }
    }
    if (o.pass) o.detail = std::to_string(checked) + " values";
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    const auto start = Clock::now();
    int runs = 0, graphs = 0;
    struct Scope {
        int k, v_max;
    };
    for (const auto& scope : {Scope{3, 14}, Scope{4, 11}}) {
        const int k = scope.k;
        for (int v = k + 1; v <= scope.v_max; ++v) {
            if ((v * k) % 2 != 0) continue;
            const auto all = oracle::connected_regular_graphs(v, k);
            for (int g = 3; moore_bound(k, g) <= v; ++g) {
                const auto by_lambda = oracle::vgr_by_lambda(all, g);
                for (std::int64_t l = 1; l <= lambda_max(k, g); ++l) {
                    const auto it = by_lambda.find(l);
                    const std::set<CanonicalForm> expected = it == by_lambda.end() ? std::set<CanonicalForm>{} : it->second;
                    std::set<CanonicalForm> got;
                    try {
                        const auto r = generate_all(v, k, g, l);
                        const auto fs = forms(r.graphs);
                        got.insert(fs.begin(), fs.end());
                        if (got.size() != fs.size()) o.fail("duplicate output at " + tuple_str({v, k, g, l}));
                    } catch (const ParameterImpossible&) {
                    }
                    if (got != expected)
                        o.fail(tuple_str({v, k, g, l}) + ": " + std::to_string(got.size()) + " vs oracle " +
                               std::to_string(expected.size()));
                    ++runs;
                    graphs += static_cast<int>(expected.size());
                }
            }
        }
    }
    const auto elapsed = Clock::now() - start;
    if (elapsed > kOracleBudget) o.fail("exceeded the time budget");
    if (o.pass)
        o.detail = std::to_string(runs) + " parameter sets, " + std::to_string(graphs) + " graphs, " +
                   std::to_string(std::chrono::duration_cast<std::chrono::seconds>(elapsed).count()) + "s";
    return o;
}

Outcome pruning_soundness() {
    Outcome o;
    const std::int64_t tuples[][4] = {{12, 3, 4, 2}, {12, 3, 4, 1}, {10, 4, 3, 3}, {9, 4, 3, 2}, {11, 4, 4, 8}, {10, 4, 4, 10}};
    const std::function<void(GenerateOptions&)> toggles[] = {
        [](GenerateOptions& g) { g.prune_degree_deficit = false; },
        [](GenerateOptions& g) { g.prune_cycle_balance = false; },
        [](GenerateOptions& g) { g.prune_isomorphic = false; },
    };
    int nonempty = 0;
    for (const auto& t : tuples) {
        const int v = static_cast<int>(t[0]), k = static_cast<int>(t[1]), g = static_cast<int>(t[2]);
        const auto base = forms(generate_all(v, k, g, t[3]).graphs);
        nonempty += !base.empty();
        for (const auto& toggle : toggles) {
            GenerateOptions opt;
            toggle(opt);
            if (forms(generate_all(v, k, g, t[3], opt).graphs) != base) o.fail("output changed at " + tuple_str({t[0], t[1], t[2], t[3]}));
        }
    }
    if (nonempty < 5) o.fail("fewer than 5 non-empty tuples");
    if (o.pass) o.detail = std::to_string(std::size(tuples)) + " tuples x 3 rules";
    return o;
}

Outcome constructions() {
    Outcome o;
    auto expect = [&](const Graph& g, int v, int k, int girth_len, std::int64_t lambda, const std::string& name) {
        const auto c = classify(g);
        const auto* p = std::get_if<VgrProfile>(&c);
        if (!p || p->v != v || p->k != k || p->g != girth_len || p->lambda != lambda) o.fail(name + " has the wrong profile");
    };
    expect(generalized_truncation(cycle_graph(5), complete_graph(6)), 30, 3, 5, 1, "truncation(C5,K6)");
    const Graph prism = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
    if (!are_isomorphic(double_complete(3), prism)) o.fail("double_complete(3) is not the prism");
    expect(double_complete(3), 6, 3, 3, 1, "double_complete(3)");
    expect(cartesian_product(complete_graph(4), complete_graph(4)), 16, 6, 3, 6, "K4 x K4");
    if (o.pass) o.detail = "vgr(30,3,5,1), prism, vgr(16,6,3,6)";
    return o;
}

Outcome counting_oracle() {
    Outcome o;
    std::mt19937_64 rng(500);
    int tested = 0;
    while (tested < kRandomCountingGraphs) {
        const int n = 3 + static_cast<int>(rng() % (kMaxCountingOrder - 2));
        const Graph g = oracle::random_connected(n, 0.05 + 0.3 * static_cast<double>(rng() % 100) / 100.0, rng);
        const auto gl = girth(g);
        if (!gl) continue;
        ++tested;
        const auto ref = oracle::enumerate_cycles(g, *gl);
        bool ok = total_girth_cycles(g, *gl) == ref.total;
        for (int u = 0; u < n; ++u) ok = ok && count_girth_cycles_vertex(g, u, *gl) == ref.per_vertex[u];
        for (const auto& e : g.edges()) {
            const auto it = ref.per_edge.find({e.u, e.v});
            ok = ok && count_girth_cycles_edge(g, e, *gl) == (it == ref.per_edge.end() ? 0 : it->second);
        }
        if (!ok) o.fail("mismatch on " + to_graph6(g));
    }
    if (o.pass) o.detail = std::to_string(tested) + " graphs";
    return o;
}

Outcome graph6_round_trip() {
    Outcome o;
    std::mt19937_64 rng(6263);
    int tested = 0;
    for (int n : {1, 2, 5, 30, 62, 63, 64, 100, 200}) {
        for (int t = 0; t < kRoundTripGraphsPerOrder; ++t) {
            const Graph g = oracle::random_graph(n, static_cast<double>(rng() % 101) / 100.0, rng);
            const auto line = to_graph6(g);
            if (from_graph6(line) != g || to_graph6(from_graph6(line)) != line) o.fail("round trip failed at order " + std::to_string(n));
            ++tested;
        }
    }
    std::ostringstream text;
    std::vector<Graph> batch;
    for (int n : {62, 63}) batch.push_back(oracle::random_graph(n, 0.5, rng));
    for (const auto& g : batch) text << to_graph6(g) << '\n';
    std::istringstream in(text.str());
    if (read_graph6(in) != batch) o.fail("stream round trip failed");
    if (o.pass) o.detail = std::to_string(tested) + " graphs";
    return o;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {1, "table-exact-values", table_exact},
        {2, "extremal-count-20-4-4-1", extremal_count},
        {3, "nonexistence-rows", nonexistence_rows},
        {4, "spectral-bound-tight", spectral_tight},
        {5, "closed-walk-polynomials", closed_walk_polynomials},
        {6, "oracle-equivalence", oracle_equivalence},
        {7, "pruning-soundness", pruning_soundness},
        {8, "constructions", constructions},
        {9, "counting-oracle", counting_oracle},
        {10, "graph6-round-trip", graph6_round_trip},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::printf("[%s] %2d %-26s %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
        std::fflush(stdout);
        failed += !o.pass;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
    return failed == 0 ? 0 : 1;
}
