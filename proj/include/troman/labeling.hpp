#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "troman/vertex_set.hpp"

namespace troman {

/// A function V -> {0,1,2}. Weight is |V_1| + 2|V_2|.
class VertexLabeling {
public:
    VertexLabeling() = default;
    explicit VertexLabeling(int n) : values_(static_cast<std::size_t>(n), 0) {}
    /// Throws on values outside {0,1,2}.
    explicit VertexLabeling(std::vector<std::uint8_t> values);
    /// Builds the labeling 2 on twos, 1 on ones (disjoint), 0 elsewhere.
    static VertexLabeling from_sets(int n, const VertexSet& ones, const VertexSet& twos);

    int order() const { return static_cast<int>(values_.size()); }
    int operator[](Vertex v) const { return values_[v]; }
    void set(Vertex v, int value);
    const std::vector<std::uint8_t>& values() const { return values_; }

    int weight() const;
    VertexSet with_value(int value) const;
    VertexSet positive() const { return with_value(1) | with_value(2); }

    /// Lexicographic on the value vector.
    friend auto operator<=>(const VertexLabeling&, const VertexLabeling&) = default;

private:
    std::vector<std::uint8_t> values_;
};

} // namespace troman
