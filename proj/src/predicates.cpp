#include <string>

#include "troman/invariants.hpp"

namespace troman {

namespace {

void check_length(const Graph& g, const VertexLabeling& f)
{
    if (f.order() != g.order())
        throw Error("labeling has length " + std::to_string(f.order()) + " but graph has order " +
                    std::to_string(g.order()));
}

bool zeros_see_a_two(const Graph& g, const VertexLabeling& f, const VertexSet& twos)
{
    for (Vertex v = 0; v < g.order(); ++v)
        if (f[v] == 0 && !g.neighbors(v).intersects(twos))
            return false;
    return true;
}

} // namespace

bool is_rdf(const Graph& g, const VertexLabeling& f)
{
    check_length(g, f);
    return zeros_see_a_two(g, f, f.with_value(2));
}

bool is_qtrdf(const Graph& g, const VertexLabeling& f)
{
    check_length(g, f);
    const VertexSet twos = f.with_value(2);
    if (!zeros_see_a_two(g, f, twos))
        return false;
    const VertexSet pos = f.positive();
    for (Vertex v : twos)
        if (!g.neighbors(v).intersects(pos))
            return false;
    return true;
}

bool is_trdf(const Graph& g, const VertexLabeling& f)
{
    check_length(g, f);
    if (!zeros_see_a_two(g, f, f.with_value(2)))
        return false;
    const VertexSet pos = f.positive();
    for (Vertex v : pos)
        if (!g.neighbors(v).intersects(pos))
            return false;
    return true;
}

bool is_dominating_set(const Graph& g, const VertexSet& s)
{
    for (Vertex v = 0; v < g.order(); ++v)
        if (!s.contains(v) && !g.neighbors(v).intersects(s))
            return false;
    return true;
}

bool is_total_dominating_set(const Graph& g, const VertexSet& s)
{
    for (Vertex v = 0; v < g.order(); ++v)
        if (!g.neighbors(v).intersects(s))
            return false;
    return true;
}

bool is_vertex_cover(const Graph& g, const VertexSet& s)
{
    for (const Edge& e : g.edges())
        if (!s.contains(e.u) && !s.contains(e.v))
            return false;
    return true;
}

} // namespace troman
