// The theorem registry. Every check evaluates its hypothesis first and
// returns Vacuous when it does not apply.

#include <algorithm>
#include <string>

#include "troman/harness.hpp"

namespace troman {

namespace {

using V = Verdict;
using K = BondageKind;

std::string str(const BondageResult& r)
{
    return r.is_finite() ? std::to_string(r.value()) : std::string("inf");
}

std::string str(int x) { return std::to_string(x); }

bool le(const BondageResult& a, const BondageResult& b) { return a <= b; }

bool le(const BondageResult& a, int bound) { return a.is_finite() && a.value() <= bound; }

int gtR(EvalContext& c, const Graph& g) { return c.value(Invariant::GammaTR, g); }

int count_universal(const Graph& g)
{
    int t = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        t += g.degree(v) == g.order() - 1;
    return t;
}

bool has_dominating_edge(const Graph& g)
{
    const VertexSet all = g.vertices();
    for (const Edge& e : g.edges())
        if ((g.closed_neighborhood(e.u) | g.closed_neighborhood(e.v)) == all)
            return true;
    return false;
}

bool in_triangle(const Graph& g, Vertex v)
{
    for (Vertex u : g.neighbors(v))
        if (g.neighbors(u).intersects(g.neighbors(v)))
            return true;
    return false;
}

bool is_complete(const Graph& g)
{
    return g.size() == g.order() * (g.order() - 1) / 2;
}

/// Hub is universal and the rest induces a cycle of length >= 4.
bool is_wheel(const Graph& g)
{
    const int n = g.order();
    if (n < 5)
        return false;
    for (Vertex h = 0; h < n; ++h) {
        if (g.degree(h) != n - 1)
            continue;
        auto rest = delete_vertices(g, VertexSet{h});
        return is_cycle_graph(rest.graph);
    }
    return false;
}

/// Sides (p, q) with p <= q when g is complete bipartite.
std::optional<std::pair<int, int>> match_complete_bipartite(const Graph& g)
{
    if (!is_connected(g) || g.order() < 2)
        return std::nullopt;
    auto dist = distances_from(g, 0);
    VertexSet a, b;
    for (Vertex v = 0; v < g.order(); ++v)
        (dist[v] % 2 == 0 ? a : b).insert(v);
    if (g.size() != a.size() * b.size())
        return std::nullopt;
    for (Vertex v : a)
        if (g.neighbors(v) != b)
            return std::nullopt;
    int p = a.size(), q = b.size();
    return std::make_pair(std::min(p, q), std::max(p, q));
}

/// Path with >= 2 pendants at one end: a tree with one vertex of degree >= 3,
/// all but one of whose neighbours are leaves, the remaining branch being a
/// path of length >= 2.
bool is_broom(const Graph& g)
{
    if (!is_tree(g) || g.order() < 5)
        return false;
    Vertex w = -1;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) >= 3) {
            if (w >= 0)
                return false;
            w = v;
        }
    }
    if (w < 0)
        return false;
    const int d = leaf_neighbors(g, w).size();
    return d == g.degree(w) - 1 && g.order() - d >= 3;
}

/// Removing the leaves leaves a path on >= 3 vertices whose two ends each
/// carry >= 2 leaves and whose interior carries none.
bool is_double_broom(const Graph& g)
{
    if (!is_tree(g))
        return false;
    auto core = delete_vertices(g, leaves(g));
    if (core.graph.order() < 3 || !is_path_graph(core.graph))
        return false;
    for (Vertex i = 0; i < core.graph.order(); ++i) {
        Vertex v = core.to_parent[i];
        int l = leaf_neighbors(g, v).size();
        bool end = core.graph.degree(i) == 1;
        if (end ? l < 2 : l != 0)
            return false;
    }
    return true;
}

/// Vertex sets of all cycles of the given length.
std::vector<VertexSet> cycles_of_length(const Graph& g, int len)
{
    std::vector<VertexSet> out;
    std::vector<Vertex> path;
    auto rec = [&](auto&& self, Vertex s, Vertex cur, VertexSet used) -> void {
        if (static_cast<int>(path.size()) == len) {
            if (g.adjacent(cur, s) && path[1] < path.back())
                out.push_back(used);
            return;
        }
        for (Vertex w : g.neighbors(cur)) {
            if (w <= s || used.contains(w))
                continue;
            path.push_back(w);
            VertexSet next = used;
            next.insert(w);
            self(self, s, w, next);
            path.pop_back();
        }
    };
    for (Vertex s = 0; s < g.order(); ++s) {
        path = {s};
        rec(rec, s, s, VertexSet{s});
    }
    std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
        return a.to_vector() < b.to_vector();
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Smallest number of edges between S and V \ S over bipartitions where
/// G[S] is connected with minimum degree >= 2 and G[V \ S] is connected and
/// isolate-free.
std::optional<int> min_admissible_cut(const Graph& g)
{
    const int n = g.order();
    if (n > 16)
        throw Error("edge cut search: order exceeds 16");
    std::optional<int> best;
    const VertexSet all = g.vertices();
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
        VertexSet s = VertexSet::from_word(mask);
        VertexSet t = all - s;
        if (s.size() < 3 || t.size() < 2)
            continue;
        auto gs = induced_subgraph(g, s).graph;
        auto gt = induced_subgraph(g, t).graph;
        if (min_degree(gs) < 2 || min_degree(gt) < 1 || !is_connected(gs) || !is_connected(gt))
            continue;
        int k = 0;
        for (Vertex v : s)
            k += (g.neighbors(v) & t).size();
        if (!best || k < *best)
            best = k;
    }
    return best;
}

Graph remove(const Graph& g, std::initializer_list<Edge> es) { return g.remove_edges(EdgeSet(es)); }

// ---------------------------------------------------------------------------

V chains(const Graph& g, EvalContext& c)
{
    InvariantReport r;
    r.n = g.order();
    r.gamma = c.value(Invariant::Gamma, g);
    r.gamma_t = c.value(Invariant::GammaT, g);
    r.gamma_R = c.value(Invariant::GammaR, g);
    r.gamma_qtR = c.value(Invariant::GammaQtR, g);
    r.gamma_tR = c.value(Invariant::GammaTR, g);
    r.beta = c.value(Invariant::Beta, g);
    auto bad = chain_violation(r);
    return bad.empty() ? V::pass() : V::fail(bad);
}

V plus_one(const Graph& g, EvalContext& c)
{
    if (!is_connected(g) || g.order() < 3)
        return V::vacuous();
    bool lhs = gtR(c, g) == c.value(Invariant::GammaT, g) + 1;
    bool rhs = max_degree(g) == g.order() - 1;
    return lhs == rhs ? V::pass() : V::fail("gamma_tR = gamma_t + 1 is " + str(lhs) +
                                            ", universal vertex is " + str(rhs));
}

V equal_total(const Graph& g, EvalContext& c)
{
    bool lhs = gtR(c, g) == c.value(Invariant::GammaT, g);
    bool rhs = max_degree(g) == 1;
    return lhs == rhs ? V::pass() : V::fail("gamma_tR = gamma_t is " + str(lhs));
}

V order_recognizer(const Graph& g, EvalContext& c)
{
    if (!is_connected(g))
        return V::vacuous();
    bool lhs = recognize_gamma_tR_equals_n(g).has_value();
    bool rhs = gtR(c, g) == g.order();
    return lhs == rhs ? V::pass()
                      : V::fail("recognizer " + str(lhs) + ", gamma_tR = " + str(gtR(c, g)));
}

V infinity_recognizer(const Graph& g, EvalContext& c)
{
    if (g.size() > 12)
        return V::skipped("more than 12 edges");
    bool lhs = is_btR_infinite_structural(g).has_value();
    bool rhs = btR_infinite_by_exhaustion(g, 12, &c.invariants());
    return lhs == rhs ? V::pass() : V::fail("recognizer " + str(lhs) + ", exhaustion " + str(rhs));
}

V edge_addition(const Graph& g, EvalContext& c)
{
    const int base = gtR(c, g);
    bool any = false;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v) {
            if (g.adjacent(u, v))
                continue;
            any = true;
            int after = gtR(c, g.add_edge(u, v));
            if (after < base - 2 || after > base)
                return V::fail("adding " + str(u) + "-" + str(v) + " gives " + str(after));
        }
    return any ? V::pass() : V::vacuous();
}

V supports_positive(const Graph& g, EvalContext&)
{
    VertexSet sup = support_vertices(g);
    if (sup.empty())
        return V::vacuous();
    for (const auto& f : all_gamma_tR_functions(g, 14))
        for (Vertex v : sup)
            if (f[v] == 0)
                return V::fail("support vertex " + str(v) + " labelled 0");
    return V::pass();
}

V weight_three(const Graph& g, EvalContext& c)
{
    if (g.order() < 3)
        return V::vacuous();
    bool lhs = gtR(c, g) == 3;
    bool rhs = max_degree(g) == g.order() - 1;
    return lhs == rhs ? V::pass() : V::fail("gamma_tR = " + str(gtR(c, g)));
}

V universal_count(const Graph& g, EvalContext& c)
{
    int t = count_universal(g);
    if (g.order() < 3 || t < 1)
        return V::vacuous();
    const auto& b = c.btR(g);
    bool ok = b.is_finite() && b.value() == (t + 1) / 2;
    return ok ? V::pass() : V::fail("t = " + str(t) + ", b_tR = " + str(b));
}

V total_two(const Graph& g, EvalContext& c)
{
    bool lhs = c.value(Invariant::GammaT, g) == 2;
    bool rhs = has_dominating_edge(g);
    return lhs == rhs ? V::pass() : V::fail("gamma_t = " + str(c.value(Invariant::GammaT, g)));
}

V weight_four(const Graph& g, EvalContext& c)
{
    if (g.order() < 3)
        return V::vacuous();
    bool two_k2 = g.order() == 4 && g.size() == 2 && max_degree(g) == 1;
    bool rhs = two_k2 || (max_degree(g) <= g.order() - 2 && has_dominating_edge(g));
    bool lhs = gtR(c, g) == 4;
    return lhs == rhs ? V::pass() : V::fail("gamma_tR = " + str(gtR(c, g)));
}

V conditional_bondage(const Graph& g, EvalContext& c)
{
    const int ga = c.value(Invariant::Gamma, g);
    const int gt = c.value(Invariant::GammaT, g);
    const int gr = c.value(Invariant::GammaR, g);
    const int gq = c.value(Invariant::GammaQtR, g);
    const int gtr = c.value(Invariant::GammaTR, g);
    auto B = [&](K k) -> const BondageResult& { return c.bondage(k, g); };
    bool applied = false;
    auto part = [&](int id, bool hyp, auto&& concl) -> std::optional<V> {
        if (!hyp)
            return std::nullopt;
        applied = true;
        if (concl())
            return std::nullopt;
        return V::fail("part " + str(id) + ": b=" + str(B(K::Plain)) + " b_t=" + str(B(K::Total)) +
                       " b_R=" + str(B(K::Roman)) + " b_qtR=" + str(B(K::QuasiTotal)) +
                       " b_tR=" + str(B(K::TotalRoman)));
    };
    std::optional<V> bad;
    auto run = [&](std::optional<V> v) {
        if (!bad && v)
            bad = v;
    };
    run(part(1, ga == gt, [&] { return le(B(K::Total), B(K::Plain)); }));
    run(part(2, gr == gq, [&] { return le(B(K::QuasiTotal), B(K::Roman)); }));
    run(part(3, gq == gtr, [&] { return le(B(K::TotalRoman), B(K::QuasiTotal)); }));
    run(part(4, gr == gtr, [&] {
        return le(B(K::TotalRoman), B(K::QuasiTotal)) && le(B(K::QuasiTotal), B(K::Roman));
    }));
    run(part(5, gt == gtr, [&] { return le(B(K::TotalRoman), B(K::Total)); }));
    run(part(6, gtr == 2 * gt, [&] { return le(B(K::Total), B(K::TotalRoman)); }));
    run(part(7, 2 * ga == gtr, [&] { return le(B(K::TotalRoman), B(K::Plain)); }));
    run(part(8, gtr == 3 * ga, [&] { return le(B(K::Plain), B(K::TotalRoman)); }));
    run(part(9, ga == gr, [&] { return le(B(K::Roman), B(K::Plain)); }));
    run(part(10, gr == 2 * ga, [&] { return le(B(K::Plain), B(K::Roman)); }));
    if (bad)
        return *bad;
    return applied ? V::pass() : V::vacuous();
}

// From here on every statement assumes finite b_tR.

V set_sandwich(const Graph& g, EvalContext& c)
{
    if (!c.btR_finite(g))
        return V::vacuous();
    for (const auto& set : all_btR_sets(g, &c.invariants())) {
        auto r = sandwich_check(g, set, &c.invariants());
        if (!r.holds)
            return V::fail("gamma_tR(G - B) = " + str(r.after));
    }
    return V::pass();
}

V total_plus_two(const Graph& g, EvalContext& c)
{
    if (gtR(c, g) != c.value(Invariant::GammaT, g) + 2 || !c.btR_finite(g))
        return V::vacuous();
    const auto& a = c.btR(g);
    const auto& b = c.bondage(K::Total, g);
    return le(a, b) ? V::pass() : V::fail("b_tR = " + str(a) + ", b_t = " + str(b));
}

V four_equal(const Graph& g, EvalContext& c)
{
    if (gtR(c, g) != 4 || !c.btR_finite(g))
        return V::vacuous();
    const auto& a = c.btR(g);
    const auto& b = c.bondage(K::Total, g);
    return a == b ? V::pass() : V::fail("b_tR = " + str(a) + ", b_t = " + str(b));
}

V cover_lower(const Graph& g, EvalContext& c)
{
    if (gtR(c, g) != 3 * c.value(Invariant::Beta, g))
        return V::vacuous();
    const auto& a = c.btR(g);
    const auto& b = c.bondage(K::Plain, g);
    bool ok = !le(a, min_degree(g) - 1) && le(b, a);
    return ok ? V::pass() : V::fail("b_tR = " + str(a) + ", b = " + str(b));
}

V four_order(const Graph& g, EvalContext& c)
{
    if (gtR(c, g) != 4 || !c.btR_finite(g))
        return V::vacuous();
    const auto& a = c.btR(g);
    return a.value() <= g.order() - 1 ? V::pass() : V::fail("b_tR = " + str(a));
}

V spanning_subgraphs(const Graph& g, EvalContext& c)
{
    if (!c.btR_finite(g))
        return V::vacuous();
    const BondageResult bg = c.btR(g);
    const int base = gtR(c, g);
    const auto edges = g.edges();
    bool applied = false;
    auto test = [&](const Graph& h, int k) -> std::optional<V> {
        if (has_isolated_vertex(h) || gtR(c, h) != base)
            return std::nullopt;
        const BondageResult bh = c.btR(h);
        if (bh.is_infinite())
            return std::nullopt;
        applied = true;
        if (bh.value() <= bg.value() && bg.value() <= bh.value() + k)
            return std::nullopt;
        return V::fail("b_tR(G) = " + str(bg) + ", b_tR(H) = " + str(bh) + ", k = " + str(k));
    };
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (auto v = test(remove(g, {edges[i]}), 1))
            return *v;
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if (auto v = test(remove(g, {edges[i], edges[j]}), 2))
                return *v;
    }
    return applied ? V::pass() : V::vacuous();
}

V adjacent_supports(const Graph& g, EvalContext& c)
{
    const VertexSet sup = support_vertices(g);
    bool applied = false;
    for (Vertex v : sup) {
        int r = leaf_neighbors(g, v).size();
        if (r < 2 || !g.neighbors(v).intersects(sup))
            continue;
        if (!c.btR_finite(g))
            return V::vacuous();
        applied = true;
        if (!le(c.btR(g), g.degree(v) - r))
            return V::fail("v = " + str(v) + ", b_tR = " + str(c.btR(g)));
    }
    return applied ? V::pass() : V::vacuous();
}

V trees(const Graph& g, EvalContext& c)
{
    if (!is_tree(g) || !c.btR_finite(g))
        return V::vacuous();
    const auto& b = c.btR(g);
    const VertexSet lv = leaves(g);
    bool applied = false;
    for (Vertex x = 0; x < g.order(); ++x) {
        if (lv.contains(x))
            continue;
        VertexSet inner = g.neighbors(x) - lv;
        if (inner.size() != 1)
            continue;
        Vertex v = inner.first();
        int r = leaf_neighbors(g, x).size();
        int k = leaf_neighbors(g, v).size();
        if (k >= 1 && r >= 2) {
            applied = true;
            if (!(b.value() == 1))
                return V::fail("part 1 at x = " + str(x) + ", b_tR = " + str(b));
        }
        if (k >= 2 && r == 1) {
            applied = true;
            if (b.value() > g.degree(v) - k)
                return V::fail("part 2 at x = " + str(x) + ", b_tR = " + str(b));
        }
    }
    if (auto s = match_spider(g); s && s->t >= 3 && s->k >= 2 && s->k <= s->t - 1) {
        applied = true;
        if (b.value() != s->t - s->k)
            return V::fail("spider S(" + str(s->k) + "," + str(s->t) + "), b_tR = " + str(b));
    }
    return applied ? V::pass() : V::vacuous();
}

V single_edge(const Graph& g, EvalContext& c)
{
    bool lhs = btR_equals_one_characterization(g, 14).holds;
    const auto& b = c.btR(g);
    bool rhs = b.is_finite() && b.value() == 1;
    return lhs == rhs ? V::pass() : V::fail("characterization " + str(lhs) + ", b_tR = " + str(b));
}

V unique_function(const Graph& g, EvalContext& c)
{
    if (min_degree(g) < 2 || !c.btR_finite(g))
        return V::vacuous();
    if (all_gamma_tR_functions(g, 14).size() != 1)
        return V::vacuous();
    return c.btR(g).value() == 1 ? V::pass() : V::fail("b_tR = " + str(c.btR(g)));
}

V four_clique(const Graph& g, EvalContext& c)
{
    const int n = g.order();
    bool applied = false;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b : g.neighbors(a)) {
            if (b <= a)
                continue;
            VertexSet common = g.neighbors(a) & g.neighbors(b);
            for (Vertex x : common) {
                if (x <= b)
                    continue;
                for (Vertex y : common & g.neighbors(x)) {
                    if (y <= x)
                        continue;
                    auto rest = delete_vertices(g, VertexSet{a, b, x, y});
                    if (has_isolated_vertex(rest.graph))
                        continue;
                    if (!c.btR_finite(g))
                        return V::vacuous();
                    applied = true;
                    int bound = g.degree(a) + g.degree(b) + g.degree(x) + g.degree(y) - 10;
                    if (!le(c.btR(g), bound))
                        return V::fail("clique bound " + str(bound) + ", b_tR = " + str(c.btR(g)));
                }
            }
        }
    return applied ? V::pass() : V::vacuous();
}

bool triangle_free_neighbour_of_strong_support(const Graph& g)
{
    const VertexSet lv = leaves(g);
    for (Vertex v : strong_support_vertices(g))
        for (Vertex a : g.neighbors(v) - lv) {
            // N(a) avoids N(v) and N(b) for every b in N(a); b = v is included.
            bool ok = true;
            for (Vertex b : g.neighbors(a))
                if (g.neighbors(a).intersects(g.neighbors(v) | g.neighbors(b)))
                    ok = false;
            if (ok)
                return true;
        }
    return false;
}

V strong_support_literal(const Graph& g, EvalContext& c)
{
    if (g.order() < 5 || !triangle_free_neighbour_of_strong_support(g) || !c.btR_finite(g))
        return V::vacuous();
    return le(c.btR(g), g.order() - 4) ? V::pass() : V::fail("b_tR = " + str(c.btR(g)));
}

V strong_support_variants(const Graph& g, EvalContext& c)
{
    if (g.order() < 5 || strong_support_vertices(g).empty())
        return V::vacuous();
    bool hyp = is_tree(g);
    auto gi = girth(g);
    hyp = hyp || !gi || *gi >= 4;
    const VertexSet lv = leaves(g);
    for (Vertex v : strong_support_vertices(g))
        for (Vertex a : g.neighbors(v) - lv)
            hyp = hyp || !in_triangle(g, a);
    if (!hyp || !c.btR_finite(g))
        return V::vacuous();
    return le(c.btR(g), g.order() - 4) ? V::pass() : V::fail("b_tR = " + str(c.btR(g)));
}

V girth_cycle(const Graph& g, EvalContext& c)
{
    auto gi = girth(g);
    if (!is_connected(g) || !gi || *gi < 5)
        return V::vacuous();
    bool hyp = false;
    for (const auto& cyc : cycles_of_length(g, *gi))
        if (!has_isolated_vertex(delete_vertices(g, cyc).graph))
            hyp = true;
    if (!hyp || !c.btR_finite(g))
        return V::vacuous();
    int bound = g.order() - *gi - 1;
    return le(c.btR(g), bound) ? V::pass()
                               : V::fail("bound " + str(bound) + ", b_tR = " + str(c.btR(g)));
}

V edge_cut(const Graph& g, EvalContext& c)
{
    if (!is_connected(g))
        return V::vacuous();
    auto k = min_admissible_cut(g);
    if (!k || !c.btR_finite(g))
        return V::vacuous();
    int bound = 3 * max_degree(g) + *k - 4;
    return le(c.btR(g), bound) ? V::pass()
                               : V::fail("k = " + str(*k) + ", b_tR = " + str(c.btR(g)));
}

V named_cliques_wheels(const Graph& g, EvalContext& c)
{
    const int n = g.order();
    if (n >= 3 && is_complete(g)) {
        const auto& b = c.btR(g);
        return b.is_finite() && b.value() == (n + 1) / 2 ? V::pass() : V::fail("b_tR = " + str(b));
    }
    if (is_wheel(g))
        return le(c.btR(g), 1) ? V::pass() : V::fail("b_tR = " + str(c.btR(g)));
    return V::vacuous();
}

V named_bipartite(const Graph& g, EvalContext& c)
{
    auto pq = match_complete_bipartite(g);
    if (!pq || !c.btR_finite(g))
        return V::vacuous();
    const auto& b = c.btR(g);
    return b.value() == pq->first ? V::pass() : V::fail("b_tR = " + str(b));
}

V named_brooms(const Graph& g, EvalContext& c)
{
    if (!is_broom(g) && !is_double_broom(g))
        return V::vacuous();
    const auto& b = c.btR(g);
    return b.is_finite() && b.value() == 1 ? V::pass() : V::fail("b_tR = " + str(b));
}

std::vector<Theorem> build()
{
    return {
        {"T1", "inequality chains among gamma, gamma_t, gamma_R, gamma_qtR, gamma_tR, beta", chains},
        {"T2", "connected, n >= 3: gamma_tR = gamma_t + 1 iff Delta = n - 1", plus_one},
        {"T3", "gamma_tR = gamma_t iff every component is K_2", equal_total},
        {"T4", "connected: structural recognizer iff gamma_tR = n", order_recognizer},
        {"T5", "infinite-class recognizer iff no edge set raises gamma_tR (m <= 12)",
         infinity_recognizer},
        {"T6", "gamma_tR(G) - 2 <= gamma_tR(G + uv) <= gamma_tR(G) for every non-edge",
         edge_addition},
        {"T7", "support vertices are positive in every optimal TRDF (n <= 14)", supports_positive},
        {"T8", "n >= 3: gamma_tR = 3 iff Delta = n - 1", weight_three},
        {"T9", "n >= 3, t >= 1 universal vertices: b_tR = ceil(t/2)", universal_count},
        {"T10", "gamma_t = 2 iff some edge uv has N[u] + N[v] = V", total_two},
        {"T11", "n >= 3: gamma_tR = 4 iff G = 2K_2 or (Delta <= n - 2 and a dominating edge exists)",
         weight_four},
        {"T12", "parameter equalities imply the ten bondage comparisons", conditional_bondage},
        {"T13", "every b_tR-set B has gamma_tR + 1 <= gamma_tR(G - B) <= gamma_tR + 2",
         set_sandwich},
        {"T14", "gamma_tR = gamma_t + 2 implies b_tR <= b_t", total_plus_two},
        {"T15", "gamma_tR = 4 implies b_tR = b_t", four_equal},
        {"T16", "gamma_tR = 3 beta implies b_tR >= max(delta, b)", cover_lower},
        {"T17", "gamma_tR = 4 implies b_tR <= n - 1", four_order},
        {"T18", "H = G minus k <= 2 edges, same gamma_tR, isolate-free: b_tR(H) <= b_tR(G) <= b_tR(H) + k",
         spanning_subgraphs},
        {"T19", "adjacent supports u, v with r >= 2 leaves at v: b_tR <= deg(v) - r",
         adjacent_supports},
        {"T20", "trees: height-one vertex bounds and b_tR(S(k,t)) = t - k", trees},
        {"T21", "b_tR = 1 iff the single-edge condition over all optimal TRDFs holds (n <= 14)",
         single_edge},
        {"T22", "delta >= 2 and a unique optimal TRDF imply b_tR = 1 (n <= 14)", unique_function},
        {"T23", "4-clique with isolate-free remainder: b_tR <= sum of degrees - 10", four_clique},
        {"T24", "n >= 5, strong support v, non-leaf neighbour a with N(a) disjoint from N(v) and from N(b) for b in N(a): b_tR <= n - 4",
         strong_support_literal},
        {"T25", "n >= 5, strong support and (triangle-free non-leaf neighbour, girth >= 4 or tree): b_tR <= n - 4",
         strong_support_variants},
        {"T26", "connected, girth g >= 5, a g-cycle with isolate-free remainder: b_tR <= n - g - 1",
         girth_cycle},
        {"T27", "minimum admissible edge cut k: b_tR <= 3 Delta + k - 4 (n <= 16)", edge_cut},
        {"T28", "b_tR(K_n) = ceil(n/2) for n >= 3 and b_tR(wheel) = 1", named_cliques_wheels},
        {"T29", "b_tR(K_{p,q}) = p for p <= q", named_bipartite},
        {"T30", "brooms and double brooms have b_tR = 1", named_brooms},
    };
}

} // namespace

const std::vector<Theorem>& theorem_registry()
{
    static const std::vector<Theorem> registry = build();
    return registry;
}

} // namespace troman
