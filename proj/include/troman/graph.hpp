#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "troman/error.hpp"
#include "troman/vertex_set.hpp"

namespace troman {

/// Unordered vertex pair stored canonically as (min, max).
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free list of canonical edges.
class EdgeSet {
public:
    EdgeSet() = default;
    EdgeSet(std::vector<Edge> edges);
    EdgeSet(std::initializer_list<Edge> edges) : EdgeSet(std::vector<Edge>(edges)) {}

    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }
    auto begin() const { return edges_.begin(); }
    auto end() const { return edges_.end(); }
    const Edge& operator[](std::size_t i) const { return edges_[i]; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool contains(const Edge& e) const;

    friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

private:
    std::vector<Edge> edges_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is kept as one VertexSet per vertex. Every "mutation" returns a
/// new value. Isolated vertices are legal here; the domination solvers reject
/// them where their definitions require it.
class Graph {
public:
    static constexpr int kMaxOrder = VertexSet::kCapacity;

    Graph() = default;
    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    /// Duplicate edges are collapsed; loops and out-of-range endpoints throw.
    static Graph from_edge_list(int n, std::span<const Edge> edges);
    static Graph from_edge_list(int n, std::initializer_list<Edge> edges)
    {
        return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    int order() const { return n_; }
    int size() const { return m_; }

    const VertexSet& neighbors(Vertex v) const
    {
        check_vertex(v);
        return adj_[v];
    }
    VertexSet closed_neighborhood(Vertex v) const
    {
        auto s = neighbors(v);
        s.insert(v);
        return s;
    }
    int degree(Vertex v) const { return neighbors(v).size(); }
    bool adjacent(Vertex u, Vertex v) const { return neighbors(u).contains(v); }
    VertexSet vertices() const { return VertexSet::range(n_); }

    /// Canonical edge list, lexicographic.
    std::vector<Edge> edges() const;

    /// Throws if some edge is not present.
    Graph remove_edges(const EdgeSet& es) const;
    Graph remove_edge(Edge e) const { return remove_edges(EdgeSet{e}); }
    /// Throws on loops or existing edges.
    Graph add_edge(Vertex u, Vertex v) const;

    /// Symmetric, loop-free and m consistent with the degree sum.
    bool is_consistent() const;

    void check_vertex(Vertex v) const
    {
        if (v < 0 || v >= n_)
            throw Error("vertex " + std::to_string(v) + " out of range for graph of order " +
                        std::to_string(n_));
    }

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

    std::size_t hash() const;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
};

struct GraphHash {
    std::size_t operator()(const Graph& g) const { return g.hash(); }
};

int min_degree(const Graph& g);
int max_degree(const Graph& g);

/// Connected components ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);
bool has_isolated_vertex(const Graph& g);
/// Acyclic (every component a tree).
bool is_forest(const Graph& g);
bool is_tree(const Graph& g);

VertexSet leaves(const Graph& g);
VertexSet support_vertices(const Graph& g);
VertexSet strong_support_vertices(const Graph& g);
/// L(v): leaf neighbors of v.
VertexSet leaf_neighbors(const Graph& g, Vertex v);

/// S-external private neighbors of v: {w not in S : N(w) ∩ S = {v}}.
/// Requires v ∈ S.
VertexSet epn(const Graph& g, Vertex v, const VertexSet& s);

/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);
/// Throws on disconnected input.
std::optional<int> diameter(const Graph& g);
/// BFS distances from src; -1 for unreachable vertices.
std::vector<int> distances_from(const Graph& g, Vertex src);

/// Vertex ids of h are shifted by g.order().
Graph disjoint_union(const Graph& g, const Graph& h);

struct InducedSubgraph {
    Graph graph;
    /// to_parent[i] is the vertex of the parent graph mapped to i.
    std::vector<Vertex> to_parent;
};

/// Vertices keep their relative order.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// G minus a set of vertices (and incident edges), relabelled.
inline InducedSubgraph delete_vertices(const Graph& g, const VertexSet& s)
{
    return induced_subgraph(g, g.vertices() - s);
}

} // namespace troman

template <>
struct std::hash<troman::Graph> {
    std::size_t operator()(const troman::Graph& g) const { return g.hash(); }
};
