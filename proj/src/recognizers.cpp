#include <algorithm>

#include "troman/families.hpp"

namespace troman {

namespace {

void require_connected(const Graph& g, const char* what)
{
    if (!is_connected(g) || g.order() == 0)
        throw Error(std::string(what) + ": input graph must be connected");
}

/// Vertices left after repeatedly deleting leaves.
VertexSet two_core(const Graph& g)
{
    VertexSet alive = g.vertices();
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex v : alive) {
            if ((g.neighbors(v) & alive).size() <= 1) {
                alive.erase(v);
                changed = true;
            }
        }
    }
    return alive;
}

/// u is a degree-2 vertex whose neighbour other than `from` is a leaf.
bool is_leg(const Graph& g, Vertex from, Vertex u)
{
    if (g.degree(u) != 2)
        return false;
    Vertex other = (g.neighbors(u) - VertexSet{from}).first();
    return g.degree(other) == 1;
}

} // namespace

std::string_view family_class_name(FamilyClass c)
{
    switch (c) {
    case FamilyClass::PathOrCycle:
        return "PathOrCycle";
    case FamilyClass::Path:
        return "Path";
    case FamilyClass::Cycle:
        return "Cycle";
    case FamilyClass::Star:
        return "Star";
    case FamilyClass::SubdividedStar:
        return "SubdividedStar";
    case FamilyClass::HealthySpider:
        return "HealthySpider";
    case FamilyClass::WoundedSpiderOneFoot:
        return "WoundedSpiderOneFoot";
    case FamilyClass::Corona:
        return "Corona";
    case FamilyClass::FamilyG:
        return "FamilyG";
    case FamilyClass::FamilyH:
        return "FamilyH";
    }
    return "?";
}

bool is_path_graph(const Graph& g)
{
    return g.order() >= 1 && is_tree(g) && max_degree(g) <= 2;
}

bool is_cycle_graph(const Graph& g)
{
    return g.order() >= 3 && is_connected(g) && min_degree(g) == 2 && max_degree(g) == 2;
}

std::optional<int> match_star(const Graph& g)
{
    const int n = g.order();
    if (n < 3 || !is_tree(g))
        return std::nullopt;
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) == n - 1)
            return n - 1;
    return std::nullopt;
}

std::optional<Spider> match_spider(const Graph& g, int want_k)
{
    const int n = g.order();
    if (n < 3 || !is_tree(g))
        return std::nullopt;
    std::optional<Spider> found;
    for (Vertex h = 0; h < n; ++h) {
        const int t = g.degree(h);
        if (t < 2)
            continue;
        int k = 0;
        bool ok = true;
        for (Vertex u : g.neighbors(h)) {
            if (g.degree(u) == 1)
                ++k;
            else if (!is_leg(g, h, u))
                ok = false;
        }
        if (!ok || n != 1 + k + 2 * (t - k))
            continue;
        if (want_k >= 0 && k != want_k)
            continue;
        // Prefer the head with fewest wounded feet (P_5 is S(0,2), not S(1,2)).
        if (!found || k < found->k)
            found = Spider{k, t};
    }
    return found;
}

std::optional<Graph> match_corona(const Graph& g)
{
    const int n = g.order();
    if (n == 2 && g.size() == 1)
        return Graph(1);
    if (n < 4 || n % 2)
        return std::nullopt;
    VertexSet ls = leaves(g);
    VertexSet base = g.vertices() - ls;
    if (ls.size() != base.size())
        return std::nullopt;
    for (Vertex v : base)
        if ((g.neighbors(v) & ls).size() != 1)
            return std::nullopt;
    auto sub = induced_subgraph(g, base);
    if (!is_connected(sub.graph))
        return std::nullopt;
    return sub.graph;
}

std::optional<FamilyG> match_family_g(const Graph& g)
{
    const int n = g.order();
    if (n < 4 || (n - 4) % 2 || g.size() != n || !is_connected(g))
        return std::nullopt;
    VertexSet core = two_core(g);
    if (core.size() != 4)
        return std::nullopt;
    for (Vertex v : core)
        if ((g.neighbors(v) & core).size() != 2)
            return std::nullopt;
    std::vector<std::pair<Vertex, int>> attached;
    for (Vertex v : core) {
        VertexSet outside = g.neighbors(v) - core;
        for (Vertex u : outside)
            if (!is_leg(g, v, u))
                return std::nullopt;
        if (!outside.empty())
            attached.push_back({v, outside.size()});
    }
    if (attached.size() > 2)
        return std::nullopt;
    if (attached.size() == 2 && !g.adjacent(attached[0].first, attached[1].first))
        return std::nullopt;
    int k1 = attached.size() > 0 ? attached[0].second : 0;
    int k2 = attached.size() > 1 ? attached[1].second : 0;
    return FamilyG{k1, k2};
}

std::optional<FamilyH> match_family_h(const Graph& g)
{
    if (g.order() < 6 || !is_tree(g))
        return std::nullopt;
    VertexSet ls = leaves(g);
    VertexSet mids;
    for (Vertex l : ls) {
        Vertex x = g.neighbors(l).first();
        if (g.degree(x) != 2 || (g.neighbors(x) & ls).size() != 1)
            return std::nullopt;
        mids.insert(x);
    }
    VertexSet spine = g.vertices() - ls - mids;
    auto sub = induced_subgraph(g, spine);
    if (spine.size() < 2 || !is_path_graph(sub.graph))
        return std::nullopt;
    std::vector<Vertex> ends;
    for (int i = 0; i < sub.graph.order(); ++i)
        if (sub.graph.degree(i) == 1)
            ends.push_back(sub.to_parent[i]);
    int a = 0, b = 0;
    for (Vertex x : mids) {
        Vertex c = (g.neighbors(x) - ls).first();
        if (c == ends[0])
            ++a;
        else if (c == ends[1])
            ++b;
        else
            return std::nullopt;
    }
    if (a == 0 || b == 0)
        return std::nullopt;
    return FamilyH{spine.size() - 2, a, b};
}

std::optional<ClassMatch> recognize_gamma_tR_equals_n(const Graph& g)
{
    require_connected(g, "recognize_gamma_tR_equals_n");
    if (is_path_graph(g) || is_cycle_graph(g))
        return ClassMatch{FamilyClass::PathOrCycle, {}, std::nullopt};
    if (auto base = match_corona(g))
        return ClassMatch{FamilyClass::Corona, {}, std::move(base)};
    if (auto s = match_spider(g, 0))
        return ClassMatch{FamilyClass::SubdividedStar, {s->k, s->t}, std::nullopt};
    if (auto f = match_family_g(g))
        return ClassMatch{FamilyClass::FamilyG, {f->k1, f->k2}, std::nullopt};
    if (auto h = match_family_h(g))
        return ClassMatch{FamilyClass::FamilyH, {h->r, h->a, h->b}, std::nullopt};
    return std::nullopt;
}

std::optional<ClassMatch> recognize_btR_infinite_class(const Graph& g)
{
    require_connected(g, "recognize_btR_infinite_class");
    if (auto t = match_star(g))
        return ClassMatch{FamilyClass::Star, {*t}, std::nullopt};
    if (auto s = match_spider(g, 0))
        return ClassMatch{FamilyClass::HealthySpider, {s->k, s->t}, std::nullopt};
    if (auto s = match_spider(g, 1))
        return ClassMatch{FamilyClass::WoundedSpiderOneFoot, {s->k, s->t}, std::nullopt};
    if (is_path_graph(g))
        return ClassMatch{FamilyClass::Path, {g.order()}, std::nullopt};
    if (is_cycle_graph(g))
        return ClassMatch{FamilyClass::Cycle, {g.order()}, std::nullopt};
    if (auto base = match_corona(g))
        return ClassMatch{FamilyClass::Corona, {}, std::move(base)};
    if (auto f = match_family_g(g))
        return ClassMatch{FamilyClass::FamilyG, {f->k1, f->k2}, std::nullopt};
    if (auto h = match_family_h(g))
        return ClassMatch{FamilyClass::FamilyH, {h->r, h->a, h->b}, std::nullopt};
    return std::nullopt;
}

} // namespace troman
