#include "troman/labeling.hpp"

#include <string>

#include "troman/error.hpp"

namespace troman {

VertexLabeling::VertexLabeling(std::vector<std::uint8_t> values) : values_(std::move(values))
{
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (values_[i] > 2)
            throw Error("labeling value " + std::to_string(values_[i]) + " at vertex " +
                        std::to_string(i) + " is not in {0,1,2}");
}

VertexLabeling VertexLabeling::from_sets(int n, const VertexSet& ones, const VertexSet& twos)
{
    if (ones.intersects(twos))
        throw Error("labeling: V_1 and V_2 overlap");
    VertexLabeling f(n);
    for (Vertex v : ones)
        f.set(v, 1);
    for (Vertex v : twos)
        f.set(v, 2);
    return f;
}

void VertexLabeling::set(Vertex v, int value)
{
    if (v < 0 || v >= order())
        throw Error("labeling: vertex " + std::to_string(v) + " out of range");
    if (value < 0 || value > 2)
        throw Error("labeling value " + std::to_string(value) + " is not in {0,1,2}");
    values_[v] = static_cast<std::uint8_t>(value);
}

int VertexLabeling::weight() const
{
    int w = 0;
    for (auto x : values_)
        w += x;
    return w;
}

VertexSet VertexLabeling::with_value(int value) const
{
    VertexSet s;
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (values_[i] == value)
            s.insert(static_cast<Vertex>(i));
    return s;
}

} // namespace troman
