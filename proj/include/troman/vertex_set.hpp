#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace troman {

using Vertex = int;

/// Fixed-capacity bitset over vertex ids 0..kCapacity-1.
///
/// Two machine words; every solver in the toolkit is exponential, so graphs
/// beyond this size are out of reach anyway.
class VertexSet {
public:
    static constexpr int kWords = 2;
    static constexpr int kCapacity = 64 * kWords;

    constexpr VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> vs)
    {
        for (Vertex v : vs)
            insert(v);
    }

    /// {0, 1, ..., n-1}
    static VertexSet range(int n)
    {
        VertexSet s;
        for (int w = 0; w < kWords && n > 0; ++w, n -= 64)
            s.words_[w] = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
        return s;
    }

    static VertexSet from_word(std::uint64_t low)
    {
        VertexSet s;
        s.words_[0] = low;
        return s;
    }

    bool contains(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
    void insert(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    int size() const
    {
        int c = 0;
        for (auto w : words_)
            c += std::popcount(w);
        return c;
    }

    bool empty() const
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    /// Smallest member, or -1 when empty.
    Vertex first() const
    {
        for (int w = 0; w < kWords; ++w)
            if (words_[w])
                return 64 * w + std::countr_zero(words_[w]);
        return -1;
    }

    /// Smallest member strictly greater than v, or -1.
    Vertex next(Vertex v) const
    {
        ++v;
        if (v >= kCapacity)
            return -1;
        int w = v >> 6;
        std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (v & 63));
        while (true) {
            if (cur)
                return 64 * w + std::countr_zero(cur);
            if (++w >= kWords)
                return -1;
            cur = words_[w];
        }
    }

    std::uint64_t word(int i) const { return words_[i]; }

    bool is_subset_of(const VertexSet& o) const
    {
        for (int w = 0; w < kWords; ++w)
            if (words_[w] & ~o.words_[w])
                return false;
        return true;
    }

    bool intersects(const VertexSet& o) const
    {
        for (int w = 0; w < kWords; ++w)
            if (words_[w] & o.words_[w])
                return true;
        return false;
    }

    std::vector<Vertex> to_vector() const
    {
        std::vector<Vertex> out;
        out.reserve(size());
        for (Vertex v : *this)
            out.push_back(v);
        return out;
    }

    VertexSet& operator|=(const VertexSet& o)
    {
        for (int w = 0; w < kWords; ++w)
            words_[w] |= o.words_[w];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o)
    {
        for (int w = 0; w < kWords; ++w)
            words_[w] &= o.words_[w];
        return *this;
    }
    VertexSet& operator^=(const VertexSet& o)
    {
        for (int w = 0; w < kWords; ++w)
            words_[w] ^= o.words_[w];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o)
    {
        for (int w = 0; w < kWords; ++w)
            words_[w] &= ~o.words_[w];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        iterator() = default;
        iterator(const VertexSet* s, Vertex v) : set_(s), v_(v) {}
        Vertex operator*() const { return v_; }
        iterator& operator++()
        {
            v_ = set_->next(v_);
            return *this;
        }
        iterator operator++(int)
        {
            auto t = *this;
            ++*this;
            return t;
        }
        friend bool operator==(const iterator& a, const iterator& b) { return a.v_ == b.v_; }

    private:
        const VertexSet* set_ = nullptr;
        Vertex v_ = -1;
    };

    iterator begin() const { return {this, first()}; }
    iterator end() const { return {this, -1}; }

    std::size_t hash() const
    {
        std::size_t h = 0;
        for (auto w : words_)
            h = h * 0x9E3779B97F4A7C15ULL + std::hash<std::uint64_t>{}(w);
        return h;
    }

private:
    std::array<std::uint64_t, kWords> words_{};
};

} // namespace troman
