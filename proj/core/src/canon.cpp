#include "vgr/canon.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>

#include "vgr/cycles.hpp"

namespace vgr {

namespace {

// Ordered partition of the vertex set. Cells are contiguous runs of `lab`, identified by
// their start position.
struct Partition {
    std::vector<int> lab;
    std::vector<int> cell_of;   // vertex -> start of its cell
    std::vector<int> cell_size; // start -> size (valid only at cell starts)

    int n() const { return static_cast<int>(lab.size()); }
    bool discrete() const {
        for (int s = 0; s < n(); s += cell_size[s])
            if (cell_size[s] > 1) return false;
        return true;
    }
};

struct Automorphism {
    std::vector<int> image;
};

class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<int> parent_;
};

class CanonSearch {
public:
    CanonSearch(std::span<const Graph* const> layers, std::span<const int> colors)
        : layers_(layers.begin(), layers.end()),
          n_(layers.empty() ? 0 : layers.front()->order()),
          colors_(colors.begin(), colors.end()) {
        for (const auto* g : layers_)
            if (g->order() != n_) throw GraphError("canonical form: layer orders differ");
        if (!colors_.empty() && static_cast<int>(colors_.size()) != n_)
            throw GraphError("canonical form: color vector size does not match order");
        if (colors_.empty()) colors_.assign(static_cast<std::size_t>(n_), 0);
    }

    CanonicalLabeling run() {
        Partition p = initial_partition();
        std::vector<int> queue;
        for (int s = 0; s < n_; s += p.cell_size[s]) queue.push_back(s);
        refine(p, queue);
        search(p, 0);
        CanonicalLabeling out;
        out.order = best_lab_;
        out.form.bytes = header() + best_code_;
        if (n_ == 0) out.form.bytes = header();
        return out;
    }

private:
    Partition initial_partition() const {
        Partition p;
        p.lab.resize(static_cast<std::size_t>(n_));
        std::iota(p.lab.begin(), p.lab.end(), 0);
        std::stable_sort(p.lab.begin(), p.lab.end(),
                         [&](int a, int b) { return colors_[a] < colors_[b]; });
        p.cell_of.assign(static_cast<std::size_t>(n_), 0);
        p.cell_size.assign(static_cast<std::size_t>(n_), 0);
        int start = 0;
        for (int i = 0; i < n_; ++i) {
            if (i > 0 && colors_[p.lab[i]] != colors_[p.lab[i - 1]]) start = i;
            p.cell_of[p.lab[i]] = start;
            ++p.cell_size[start];
        }
        return p;
    }

    std::string header() const {
        std::string h;
        auto put32 = [&](std::uint32_t x) {
            for (int b = 0; b < 4; ++b) h.push_back(static_cast<char>((x >> (8 * b)) & 0xFF));
        };
        put32(static_cast<std::uint32_t>(n_));
        put32(static_cast<std::uint32_t>(layers_.size()));
        std::vector<int> sorted = colors_;
        std::sort(sorted.begin(), sorted.end());
        for (int c : sorted) put32(static_cast<std::uint32_t>(c));
        return h;
    }

    // Refines to the coarsest equitable partition finer than p, starting from the given
    // splitter cells.
    void refine(Partition& p, std::vector<int> queue) const {
        std::vector<char> queued(static_cast<std::size_t>(n_), 0);
        for (int s : queue) queued[s] = 1;
        std::vector<std::pair<std::int64_t, int>> keyed;
        std::size_t head = 0;
        while (head < queue.size()) {
            const int w = queue[head++];
            queued[w] = 0;
            VertexSet splitter;
            for (int i = w; i < w + p.cell_size[w]; ++i) splitter.insert(p.lab[i]);
            for (int s = 0; s < n_;) {
                const int size = p.cell_size[s];
                const int next = s + size;
                if (size > 1) {
                    keyed.clear();
                    bool uniform = true;
                    for (int i = s; i < next; ++i) {
                        const int x = p.lab[i];
                        std::int64_t key = 0;
                        for (const auto* g : layers_)
                            key = key * (n_ + 1) + g->neighbors(x).intersection_size(splitter);
                        if (!keyed.empty() && key != keyed.front().first) uniform = false;
                        keyed.emplace_back(key, x);
                    }
                    if (!uniform) {
                        std::sort(keyed.begin(), keyed.end());
                        int frag = s;
                        for (int i = 0; i < size; ++i) {
                            if (i > 0 && keyed[i].first != keyed[i - 1].first) frag = s + i;
                            p.lab[s + i] = keyed[i].second;
                            p.cell_of[keyed[i].second] = frag;
                        }
                        for (int i = s; i < next; ++i) p.cell_size[i] = 0;
                        for (int i = s; i < next; ++i) ++p.cell_size[p.cell_of[p.lab[i]]];
                        for (int f = s; f < next; f += p.cell_size[f]) {
                            if (!queued[f]) {
                                queued[f] = 1;
                                queue.push_back(f);
                            }
                        }
                    }
                }
                s = next;
            }
        }
    }

    int target_cell(const Partition& p) const {
        int best = -1;
        for (int s = 0; s < n_; s += p.cell_size[s])
            if (p.cell_size[s] > 1 && (best < 0 || p.cell_size[s] < p.cell_size[best])) best = s;
        return best;
    }

    Partition individualize(const Partition& p, int v) const {
        Partition q = p;
        const int s = q.cell_of[v];
        const int size = q.cell_size[s];
        const int pos = static_cast<int>(std::find(q.lab.begin() + s, q.lab.begin() + s + size, v) -
                                         q.lab.begin());
        std::swap(q.lab[s], q.lab[pos]);
        q.cell_size[s] = 1;
        q.cell_size[s + 1] = size - 1;
        for (int i = s + 1; i < s + size; ++i) q.cell_of[q.lab[i]] = s + 1;
        refine(q, {s});
        return q;
    }

    std::string leaf_code(const std::vector<int>& lab) const {
        std::string code;
        std::uint8_t acc = 0;
        int nbits = 0;
        for (const auto* g : layers_) {
            for (int i = 0; i < n_; ++i) {
                const VertexSet& row = g->neighbors(lab[i]);
                for (int j = i + 1; j < n_; ++j) {
                    acc = static_cast<std::uint8_t>((acc << 1) | (row.contains(lab[j]) ? 1 : 0));
                    if (++nbits == 8) {
                        code.push_back(static_cast<char>(acc));
                        acc = 0;
                        nbits = 0;
                    }
                }
            }
        }
        if (nbits > 0) code.push_back(static_cast<char>(acc << (8 - nbits)));
        return code;
    }

    static int divergence(const std::vector<int>& a, const std::vector<int>& b) {
        int d = 0;
        while (d < static_cast<int>(a.size()) && d < static_cast<int>(b.size()) && a[d] == b[d]) ++d;
        return d;
    }

    void record_automorphism(const std::vector<int>& from, const std::vector<int>& to) {
        Automorphism a;
        a.image.assign(static_cast<std::size_t>(n_), 0);
        for (int i = 0; i < n_; ++i) a.image[from[i]] = to[i];
        if (automorphisms_.size() < kMaxStoredAutomorphisms) automorphisms_.push_back(std::move(a));
    }

    // Returns the level whose child loop should continue.
    int handle_leaf(const Partition& p, int level) {
        std::string code = leaf_code(p.lab);
        if (!have_first_) {
            have_first_ = true;
            first_lab_ = best_lab_ = p.lab;
            first_code_ = best_code_ = code;
            first_path_ = best_path_ = path_;
            first_trace_ = best_trace_ = trace_;
            return level - 1;
        }
        if (code == first_code_) {
            record_automorphism(first_lab_, p.lab);
            if (trace_ == first_trace_) return divergence(path_, first_path_);
            return level - 1;
        }
        if (code == best_code_) {
            record_automorphism(best_lab_, p.lab);
            if (trace_ == best_trace_) return divergence(path_, best_path_);
            return level - 1;
        }
        if (code < best_code_) {
            best_code_ = std::move(code);
            best_lab_ = p.lab;
            best_path_ = path_;
            best_trace_ = trace_;
        }
        return level - 1;
    }

    bool fixes_path(const Automorphism& a) const {
        for (int v : path_)
            if (a.image[v] != v) return false;
        return true;
    }

    int search(const Partition& p, int level) {
        const int cell = target_cell(p);
        if (cell < 0) return handle_leaf(p, level);

        std::vector<int> children(p.lab.begin() + cell, p.lab.begin() + cell + p.cell_size[cell]);
        std::sort(children.begin(), children.end());

        DisjointSets orbits(n_);
        std::size_t applied = 0;
        auto absorb = [&] {
            for (; applied < automorphisms_.size(); ++applied) {
                const auto& a = automorphisms_[applied];
                if (!fixes_path(a)) continue;
                for (int v = 0; v < n_; ++v) orbits.unite(v, a.image[v]);
            }
        };
        absorb();

        std::vector<int> explored;
        for (int w : children) {
            bool redundant = false;
            for (int e : explored)
                if (orbits.find(e) == orbits.find(w)) {
                    redundant = true;
                    break;
                }
            if (redundant) continue;

            path_.push_back(w);
            trace_.push_back(cell);
            const int resume = search(individualize(p, w), level + 1);
            path_.pop_back();
            trace_.pop_back();
            explored.push_back(w);
            if (resume < level) return resume;
            absorb();
        }
        return level - 1;
    }

    static constexpr std::size_t kMaxStoredAutomorphisms = 256;

    std::vector<const Graph*> layers_;
    int n_;
    std::vector<int> colors_;

    std::vector<int> path_;
    std::vector<int> trace_;
    std::vector<Automorphism> automorphisms_;

    bool have_first_ = false;
    std::vector<int> first_lab_, best_lab_;
    std::string first_code_, best_code_;
    std::vector<int> first_path_, best_path_;
    std::vector<int> first_trace_, best_trace_;
};

} // namespace

CanonicalLabeling canonical_labeling(std::span<const Graph* const> layers,
                                     std::span<const int> colors) {
    return CanonSearch(layers, colors).run();
}

CanonicalForm canonical_form(std::span<const Graph* const> layers, std::span<const int> colors) {
    return canonical_labeling(layers, colors).form;
}

CanonicalForm canonical_form(const Graph& g, std::span<const int> colors) {
    const Graph* layer = &g;
    return canonical_form(std::span<const Graph* const>(&layer, 1), colors);
}

Graph canonical_graph(const Graph& g) {
    const Graph* layer = &g;
    const auto lab = canonical_labeling(std::span<const Graph* const>(&layer, 1)).order;
    std::vector<int> perm(lab.size());
    for (std::size_t i = 0; i < lab.size(); ++i) perm[lab[i]] = static_cast<int>(i);
    return g.relabeled(perm);
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    auto da = a.degrees(), db = b.degrees();
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    if (girth(a) != girth(b)) return false;
    return canonical_form(a) == canonical_form(b);
}

} // namespace vgr
