#pragma once

// Single-word adjacency for one connected piece of at most 64 vertices.
// The exponential solvers run on this representation.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <string>

#include "troman/graph.hpp"

namespace troman::detail {

using Mask = std::uint64_t;

inline constexpr Mask bit(int v) { return Mask{1} << v; }

struct Dense {
    int n = 0;
    Mask all = 0;
    std::array<Mask, 64> open{};
    std::array<Mask, 64> closed{};

    explicit Dense(const Graph& g)
    {
        if (g.order() > 64)
            throw Error("exact solver: component of order " + std::to_string(g.order()) +
                        " exceeds 64 vertices");
        n = g.order();
        all = n == 64 ? ~Mask{0} : (bit(n) - 1);
        for (int v = 0; v < n; ++v) {
            open[v] = g.neighbors(v).word(0);
            closed[v] = open[v] | bit(v);
        }
    }
};

template <class F>
inline void for_each_bit(Mask m, F&& f)
{
    while (m) {
        int v = std::countr_zero(m);
        m &= m - 1;
        f(v);
    }
}

/// True when (ones_a, twos_a) is lexicographically smaller than
/// (ones_b, twos_b) as a value vector indexed by vertex.
inline bool labeling_less(Mask ones_a, Mask twos_a, Mask ones_b, Mask twos_b)
{
    Mask diff = (ones_a ^ ones_b) | (twos_a ^ twos_b);
    if (!diff)
        return false;
    int v = std::countr_zero(diff);
    int a = ((ones_a >> v) & 1) + 2 * ((twos_a >> v) & 1);
    int b = ((ones_b >> v) & 1) + 2 * ((twos_b >> v) & 1);
    return a < b;
}

/// Indicator-vector order on sets: smaller when the first differing vertex
/// is absent from a.
inline bool set_less(Mask a, Mask b)
{
    Mask diff = a ^ b;
    return diff && !(a & diff & (~diff + 1));
}

/// Hitting-set search over a symmetric relation: candidate c covers rel[c],
/// and target t is covered by the candidates in rel[t].
class CoverSearch {
public:
    explicit CoverSearch(const std::array<Mask, 64>& rel) : rel_(rel) {}

    /// Smallest s <= max_size with a cover, or -1.
    int min_size(Mask targets, Mask cands, int max_size) const
    {
        for (int s = lower_bound(targets, cands); s <= max_size; ++s)
            if (exists(targets, cands, s))
                return s;
        return -1;
    }

    bool exists(Mask targets, Mask cands, int s) const
    {
        if (!targets)
            return true;
        if (s <= 0)
            return false;
        // Branch on the target with the fewest covering candidates.
        int best_t = -1, best_c = 65;
        int max_gain = 0;
        for_each_bit(targets, [&](int t) {
            int c = std::popcount(rel_[t] & cands);
            if (c < best_c) {
                best_c = c;
                best_t = t;
            }
        });
        if (best_c == 0)
            return false;
        for_each_bit(cands, [&](int c) {
            max_gain = std::max(max_gain, std::popcount(rel_[c] & targets));
        });
        if (std::popcount(targets) > s * max_gain)
            return false;
        Mask options = rel_[best_t] & cands;
        while (options) {
            int c = std::countr_zero(options);
            options &= options - 1;
            if (exists(targets & ~rel_[c], cands & ~bit(c), s - 1))
                return true;
            cands &= ~bit(c);
        }
        return false;
    }

    /// Among covers of size exactly s (assumed to exist and be minimum), the
    /// one with lexicographically smallest indicator vector.
    Mask lex_min(Mask targets, Mask cands, int s) const
    {
        Mask chosen = 0;
        Mask pool = cands;
        while (targets) {
            Mask useful = 0;
            for_each_bit(targets, [&](int t) { useful |= rel_[t] & pool; });
            int c = std::countr_zero(useful);
            Mask without = pool & ~bit(c);
            if (exists(targets, without, s)) {
                pool = without;
            } else {
                chosen |= bit(c);
                targets &= ~rel_[c];
                pool = without;
                --s;
            }
        }
        return chosen;
    }

private:
    int lower_bound(Mask targets, Mask cands) const
    {
        if (!targets)
            return 0;
        int max_gain = 0;
        for_each_bit(cands, [&](int c) {
            max_gain = std::max(max_gain, std::popcount(rel_[c] & targets));
        });
        if (max_gain == 0)
            return 65;
        int t = std::popcount(targets);
        return (t + max_gain - 1) / max_gain;
    }

    const std::array<Mask, 64>& rel_;
};

} // namespace troman::detail
