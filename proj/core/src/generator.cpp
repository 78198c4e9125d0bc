#include "vgr/generator.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "vgr/bounds.hpp"
#include "vgr/canon.hpp"
#include "vgr/classify.hpp"

namespace vgr {

GenerateStats& GenerateStats::operator+=(const GenerateStats& o) {
    nodes += o.nodes;
    pruned_degree_deficit += o.pruned_degree_deficit;
    pruned_cycle_balance += o.pruned_cycle_balance;
    pruned_isomorphic += o.pruned_isomorphic;
    no_candidate += o.no_candidate;
    complete_graphs += o.complete_graphs;
    emitted += o.emitted;
    duplicates += o.duplicates;
    return *this;
}

namespace {

// Deduplicates complete graphs across branches and subtasks.
class Collector {
public:
    explicit Collector(const std::function<void(const Graph&)>& sink) : sink_(sink) {}

    void offer(const Graph& g, GenerateStats& stats) {
        const Graph c = canonical_graph(g);
        CanonicalForm key = canonical_form(c);
        std::lock_guard lock(mutex_);
        if (!seen_.insert(std::move(key)).second) {
            ++stats.duplicates;
            return;
        }
        ++stats.emitted;
        sink_(c);
    }

private:
    const std::function<void(const Graph&)>& sink_;
    std::mutex mutex_;
    std::unordered_set<CanonicalForm> seen_;
};

class Search {
public:
    Search(const SearchParams& p, const GenerateOptions& opt, Collector& out, int tree_edges)
        : p_(p), opt_(opt), out_(out), tree_edges_(tree_edges) {}

    // Explores the subtree of s. Nodes at depth split_at are handed to `frontier` instead
    // of being expanded (split_at < 0 disables this).
    void run(const SearchState& s, int depth, int split_at = -1,
             std::vector<std::pair<SearchState, int>>* frontier = nullptr) {
        if (stopped()) return;
        ++stats.nodes;
        if (opt_.verify_cache && !cache_consistent(s))
            throw Error("generator: cached cycle counts diverged from a full recount");
        if (opt_.prune_degree_deficit && prune_degree_deficit(s)) {
            ++stats.pruned_degree_deficit;
            return;
        }
        if (opt_.prune_cycle_balance && prune_cycle_balance(s)) {
            ++stats.pruned_cycle_balance;
            return;
        }
        if (s.complete()) {
            accept(s);
            return;
        }
        const bool iso_here = opt_.prune_isomorphic &&
                              (opt_.iso_max_added_edges < 0 ||
                               s.edge_count - tree_edges_ <= opt_.iso_max_added_edges);
        if (iso_here && prune_isomorphic(s, seen)) {
            ++stats.pruned_isomorphic;
            return;
        }
        if (frontier && depth == split_at) {
            frontier->emplace_back(s, depth);
            return;
        }
        const auto e = select_branch(s);
        if (!e) {
            ++stats.no_candidate;
            return;
        }
        run(candidate_update(s, *e), depth + 1, split_at, frontier);
        run(decline(s, *e), depth + 1, split_at, frontier);
    }

    bool interrupted() const { return stopped_; }

    SeenStore seen;
    GenerateStats stats;

private:
    bool stopped() {
        if (stopped_) return true;
        if (opt_.deadline && (stats.nodes & 0xFF) == 0 &&
            std::chrono::steady_clock::now() >= *opt_.deadline)
            stopped_ = true;
        return stopped_;
    }

    void accept(const SearchState& s) {
        ++stats.complete_graphs;
        // Final check from scratch, independent of the cached counts.
        const auto profile = vgr_profile(s.graph);
        if (!profile || profile->k != p_.k || profile->g != p_.g || profile->lambda != p_.lambda)
            return;
        out_.offer(s.graph, stats);
    }

    SearchParams p_;
    const GenerateOptions& opt_;
    Collector& out_;
    int tree_edges_;
    bool stopped_ = false;
};

void check_params(const SearchParams& p) {
    if (p.k < 3 || p.g < 3 || p.lambda < 1)
        throw PreconditionViolated("generator requires k >= 3, g >= 3 and lambda >= 1");
    if (p.v < 0 || p.v > kMaxOrder) throw PreconditionViolated("generator order out of range");
}

} // namespace

bool generate(const SearchParams& p, const GenerateOptions& opt,
              const std::function<void(const Graph&)>& sink, GenerateStats* stats) {
    check_params(p);
    if (opt.check_nonexistence) {
        const auto verdict = nonexistence_verdict(p.k, p.g, p.lambda);
        if (verdict.impossible) throw ParameterImpossible(verdict.rule);
    }
    if (p.v < moore_bound(p.k, p.g) || (p.v * p.k) % 2 != 0) return true;

    Collector out(sink);
    const SearchState root = SearchState::initial(p);
    const int tree_edges = root.edge_count;

    if (opt.threads <= 1) {
        Search search(p, opt, out, tree_edges);
        search.run(root, 0);
        if (stats) *stats += search.stats;
        return !search.interrupted();
    }

    // Expand the top of the tree single-threaded, then hand the frontier to workers.
    const int split = opt.split_depth >= 0 ? opt.split_depth : 2 * p.k;
    std::vector<std::pair<SearchState, int>> frontier;
    Search top(p, opt, out, tree_edges);
    top.run(root, 0, split, &frontier);
    GenerateStats total = top.stats;
    bool complete = !top.interrupted();

    std::atomic<std::size_t> next{0};
    std::mutex merge;
    {
        std::vector<std::jthread> workers;
        for (int t = 0; t < opt.threads; ++t) {
            workers.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= frontier.size()) break;
                    Search sub(p, opt, out, tree_edges);
                    // The frontier node itself already passed the prune checks above.
                    sub.run(frontier[i].first, frontier[i].second);
                    std::lock_guard lock(merge);
                    total += sub.stats;
                    if (sub.interrupted()) complete = false;
                }
            });
        }
    }
    if (stats) *stats += total;
    return complete;
}

GenerateResult generate_all(int v, int k, int g, std::int64_t lambda, const GenerateOptions& opt) {
    GenerateResult result;
    std::map<CanonicalForm, Graph> sorted;
    result.complete = generate({v, k, g, lambda}, opt,
                               [&](const Graph& c) { sorted.emplace(canonical_form(c), c); },
                               &result.stats);
    for (auto& [key, graph] : sorted) result.graphs.push_back(std::move(graph));
    return result;
}

ExtremalResult find_extremal(int k, int g, std::int64_t lambda, std::int64_t v_max,
                             std::optional<std::chrono::steady_clock::duration> budget,
                             GenerateOptions opt) {
    ExtremalResult r;
    const BoundReport report = best_lower_bound(k, g, lambda);
    if (report.impossible) {
        r.status = ExtremalResult::Status::Impossible;
        for (const auto& v : report.verdicts)
            if (v.impossible) r.rule = v.rule;
        return r;
    }
    if (budget) opt.deadline = std::chrono::steady_clock::now() + *budget;
    opt.check_nonexistence = false;
    const std::int64_t top = std::min<std::int64_t>(v_max, kMaxOrder);
    for (std::int64_t v = *report.best_lb; v <= top; ++v) {
        if (divisibility_refine(k, g, lambda, v) != v) continue;
        auto found = generate_all(static_cast<int>(v), k, g, lambda, opt);
        if (!found.complete) {
            r.status = ExtremalResult::Status::BudgetExceeded;
            r.order = v;
            return r;
        }
        if (!found.graphs.empty()) {
            r.status = ExtremalResult::Status::Found;
            r.order = v;
            r.graphs = std::move(found.graphs);
            return r;
        }
    }
    r.status = ExtremalResult::Status::NoneUpTo;
    r.order = v_max;
    return r;
}

} // namespace vgr
