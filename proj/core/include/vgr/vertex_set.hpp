#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>

namespace vgr {

inline constexpr int kMaxOrder = 512;

/// Fixed-capacity set of vertex indices in [0, kMaxOrder), stored as 64-bit words.
class VertexSet {
public:
    static constexpr int kWords = kMaxOrder / 64;

    constexpr VertexSet() = default;

    static VertexSet prefix(int n) {
        VertexSet s;
        for (int w = 0; w < kWords && n > 0; ++w, n -= 64) {
            s.words_[w] = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
        }
        return s;
    }

    bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
    void insert(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    void clear() { words_.fill(0); }

    int size() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (auto w : words_)
            if (w != 0) return false;
        return true;
    }

    /// Smallest element, or -1 when empty.
    int first() const {
        for (int w = 0; w < kWords; ++w)
            if (words_[w] != 0) return w * 64 + std::countr_zero(words_[w]);
        return -1;
    }

    /// Smallest element strictly greater than v, or -1.
    int next(int v) const {
        ++v;
        if (v >= kMaxOrder) return -1;
        int w = v >> 6;
        std::uint64_t word = words_[w] & (~std::uint64_t{0} << (v & 63));
        while (true) {
            if (word != 0) return w * 64 + std::countr_zero(word);
            if (++w == kWords) return -1;
            word = words_[w];
        }
    }

    template <class F>
    void for_each(F&& f) const {
        for (int w = 0; w < kWords; ++w) {
            std::uint64_t word = words_[w];
            while (word != 0) {
                f(w * 64 + std::countr_zero(word));
                word &= word - 1;
            }
        }
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (int w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (int w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        for (int w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
        return *this;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    int intersection_size(const VertexSet& o) const {
        int c = 0;
        for (int w = 0; w < kWords; ++w) c += std::popcount(words_[w] & o.words_[w]);
        return c;
    }
    bool intersects(const VertexSet& o) const {
        for (int w = 0; w < kWords; ++w)
            if ((words_[w] & o.words_[w]) != 0) return true;
        return false;
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    std::uint64_t word(int w) const { return words_[w]; }

private:
    std::array<std::uint64_t, kWords> words_{};
};

} // namespace vgr
