#include "troman/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace troman {

EdgeSet::EdgeSet(std::vector<Edge> edges) : edges_(std::move(edges))
{
    for (auto& e : edges_) {
        if (e.u == e.v)
            throw Error("edge set contains a loop at vertex " + std::to_string(e.u));
        e = Edge(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool EdgeSet::contains(const Edge& e) const
{
    return std::binary_search(edges_.begin(), edges_.end(), Edge(e.u, e.v));
}

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n))
{
    if (n < 0 || n > kMaxOrder)
        throw Error("graph order " + std::to_string(n) + " outside supported range 0.." +
                    std::to_string(kMaxOrder));
}

Graph Graph::from_edge_list(int n, std::span<const Edge> edges)
{
    Graph g(n);
    for (const auto& e : edges) {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
            throw Error("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                        ") has an endpoint out of range for n=" + std::to_string(n));
        if (e.u == e.v)
            throw Error("loop at vertex " + std::to_string(e.u));
        if (!g.adj_[e.u].contains(e.v)) {
            g.adj_[e.u].insert(e.v);
            g.adj_[e.v].insert(e.u);
            ++g.m_;
        }
    }
    return g;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = adj_[u].next(u); v != -1; v = adj_[u].next(v))
            out.emplace_back(u, v);
    return out;
}

Graph Graph::remove_edges(const EdgeSet& es) const
{
    Graph g = *this;
    for (const auto& e : es) {
        if (e.u >= n_ || e.v >= n_ || !g.adj_[e.u].contains(e.v))
            throw Error("cannot remove non-edge (" + std::to_string(e.u) + "," +
                        std::to_string(e.v) + ")");
        g.adj_[e.u].erase(e.v);
        g.adj_[e.v].erase(e.u);
        --g.m_;
    }
    return g;
}

Graph Graph::add_edge(Vertex u, Vertex v) const
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw Error("cannot add loop at vertex " + std::to_string(u));
    if (adj_[u].contains(v))
        throw Error("edge (" + std::to_string(u) + "," + std::to_string(v) + ") already present");
    Graph g = *this;
    g.adj_[u].insert(v);
    g.adj_[v].insert(u);
    ++g.m_;
    return g;
}

bool Graph::is_consistent() const
{
    if (static_cast<int>(adj_.size()) != n_)
        return false;
    int degree_sum = 0;
    const auto all = vertices();
    for (Vertex v = 0; v < n_; ++v) {
        if (adj_[v].contains(v) || !adj_[v].is_subset_of(all))
            return false;
        for (Vertex u : adj_[v])
            if (!adj_[u].contains(v))
                return false;
        degree_sum += adj_[v].size();
    }
    return degree_sum == 2 * m_;
}

std::size_t Graph::hash() const
{
    std::size_t h = static_cast<std::size_t>(n_) * 0x100000001B3ULL;
    for (const auto& s : adj_)
        h = (h ^ s.hash()) * 0x100000001B3ULL + 0x9E3779B9;
    return h;
}

int min_degree(const Graph& g)
{
    int d = std::numeric_limits<int>::max();
    for (Vertex v = 0; v < g.order(); ++v)
        d = std::min(d, g.degree(v));
    return g.order() == 0 ? 0 : d;
}

int max_degree(const Graph& g)
{
    int d = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        d = std::max(d, g.degree(v));
    return d;
}

std::vector<VertexSet> components(const Graph& g)
{
    std::vector<VertexSet> out;
    VertexSet unseen = g.vertices();
    while (!unseen.empty()) {
        VertexSet comp;
        VertexSet frontier;
        frontier.insert(unseen.first());
        while (!frontier.empty()) {
            comp |= frontier;
            VertexSet next;
            for (Vertex v : frontier)
                next |= g.neighbors(v);
            frontier = next - comp;
        }
        unseen -= comp;
        out.push_back(comp);
    }
    return out;
}

bool is_connected(const Graph& g)
{
    return components(g).size() <= 1;
}

bool has_isolated_vertex(const Graph& g)
{
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.neighbors(v).empty())
            return true;
    return false;
}

bool is_forest(const Graph& g)
{
    return g.size() == g.order() - static_cast<int>(components(g).size());
}

bool is_tree(const Graph& g)
{
    return g.order() > 0 && is_connected(g) && g.size() == g.order() - 1;
}

VertexSet leaves(const Graph& g)
{
    VertexSet out;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1)
            out.insert(v);
    return out;
}

VertexSet leaf_neighbors(const Graph& g, Vertex v)
{
    return g.neighbors(v) & leaves(g);
}

VertexSet support_vertices(const Graph& g)
{
    VertexSet out;
    for (Vertex l : leaves(g))
        out |= g.neighbors(l);
    return out;
}

VertexSet strong_support_vertices(const Graph& g)
{
    const auto ls = leaves(g);
    VertexSet out;
    for (Vertex v = 0; v < g.order(); ++v)
        if ((g.neighbors(v) & ls).size() >= 2)
            out.insert(v);
    return out;
}

VertexSet epn(const Graph& g, Vertex v, const VertexSet& s)
{
    g.check_vertex(v);
    if (!s.contains(v))
        throw Error("epn: vertex " + std::to_string(v) + " is not in S");
    VertexSet out;
    for (Vertex w : g.neighbors(v)) {
        if (s.contains(w))
            continue;
        auto hit = g.neighbors(w) & s;
        if (hit.size() == 1)
            out.insert(w);
    }
    return out;
}

std::vector<int> distances_from(const Graph& g, Vertex src)
{
    g.check_vertex(src);
    std::vector<int> dist(g.order(), -1);
    std::deque<Vertex> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

std::optional<int> girth(const Graph& g)
{
    // BFS from every vertex; a non-tree edge (x,y) closes a walk of length
    // d(x)+d(y)+1 which bounds the shortest cycle through src from above and
    // equals it for the minimising source.
    std::optional<int> best;
    for (Vertex src = 0; src < g.order(); ++src) {
        std::vector<int> dist(g.order(), -1), parent(g.order(), -1);
        std::deque<Vertex> queue{src};
        dist[src] = 0;
        while (!queue.empty()) {
            Vertex x = queue.front();
            queue.pop_front();
            for (Vertex y : g.neighbors(x)) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if (parent[x] != y) {
                    int len = dist[x] + dist[y] + 1;
                    if (!best || len < *best)
                        best = len;
                }
            }
        }
    }
    return best;
}

std::optional<int> diameter(const Graph& g)
{
    if (g.order() == 0)
        return std::nullopt;
    if (!is_connected(g))
        throw Error("diameter undefined for a disconnected graph");
    int d = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        for (int x : distances_from(g, v))
            d = std::max(d, x);
    return d;
}

Graph disjoint_union(const Graph& g, const Graph& h)
{
    std::vector<Edge> es = g.edges();
    for (const auto& e : h.edges())
        es.emplace_back(e.u + g.order(), e.v + g.order());
    return Graph::from_edge_list(g.order() + h.order(), es);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s)
{
    InducedSubgraph out;
    std::vector<int> index(g.order(), -1);
    for (Vertex v : s) {
        g.check_vertex(v);
        index[v] = static_cast<int>(out.to_parent.size());
        out.to_parent.push_back(v);
    }
    std::vector<Edge> es;
    for (Vertex v : s)
        for (Vertex w : g.neighbors(v) & s)
            if (v < w)
                es.emplace_back(index[v], index[w]);
    out.graph = Graph::from_edge_list(static_cast<int>(out.to_parent.size()), es);
    return out;
}

} // namespace troman
