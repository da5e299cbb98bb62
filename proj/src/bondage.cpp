#include "troman/bondage.hpp"

#include <string>

#include "troman/graph_io.hpp"

namespace troman {

namespace {

int cached_value(Invariant inv, const Graph& g, InvariantCache* cache)
{
    return cache ? cache->value(inv, g) : invariant_value(inv, g);
}

/// Walks the k-subsets of `edges` in lexicographic order of index tuples.
/// Subsets that would isolate a vertex are cut when `isolate_free` is set.
/// `visit` returns true to stop.
class EdgeSubsetWalker {
public:
    EdgeSubsetWalker(const Graph& g, bool isolate_free)
        : g_(g), edges_(g.edges()), isolate_free_(isolate_free), degree_(g.order())
    {
        for (Vertex v = 0; v < g.order(); ++v)
            degree_[v] = g.degree(v);
    }

    int edge_count() const { return static_cast<int>(edges_.size()); }

    template <class Visit>
    bool walk(int k, Visit&& visit)
    {
        chosen_.clear();
        return rec(0, k, visit);
    }

private:
    template <class Visit>
    bool rec(int from, int left, Visit& visit)
    {
        if (left == 0)
            return visit(EdgeSet(chosen_));
        for (int i = from; i + left <= edge_count(); ++i) {
            const Edge& e = edges_[i];
            if (isolate_free_ && (degree_[e.u] == 1 || degree_[e.v] == 1))
                continue;
            --degree_[e.u];
            --degree_[e.v];
            chosen_.push_back(e);
            bool stop = rec(i + 1, left - 1, visit);
            chosen_.pop_back();
            ++degree_[e.u];
            ++degree_[e.v];
            if (stop)
                return true;
        }
        return false;
    }

    const Graph& g_;
    std::vector<Edge> edges_;
    bool isolate_free_;
    std::vector<int> degree_;
    std::vector<Edge> chosen_;
};

void require_isolate_free(const Graph& g, BondageKind kind)
{
    if (keeps_isolate_free(kind) && has_isolated_vertex(g))
        throw Error(std::string(bondage_name(kind)) + " undefined: graph has an isolated vertex");
}

} // namespace

int BondageResult::value() const
{
    if (!finite_)
        throw Error("bondage value requested for an infinite result");
    return value_;
}

std::string_view bondage_name(BondageKind kind)
{
    switch (kind) {
    case BondageKind::Plain:
        return "b";
    case BondageKind::Total:
        return "b_t";
    case BondageKind::Roman:
        return "b_R";
    case BondageKind::QuasiTotal:
        return "b_qtR";
    case BondageKind::TotalRoman:
        return "b_tR";
    }
    return "?";
}

Invariant bondage_invariant(BondageKind kind)
{
    switch (kind) {
    case BondageKind::Plain:
        return Invariant::Gamma;
    case BondageKind::Total:
        return Invariant::GammaT;
    case BondageKind::Roman:
        return Invariant::GammaR;
    case BondageKind::QuasiTotal:
        return Invariant::GammaQtR;
    case BondageKind::TotalRoman:
        return Invariant::GammaTR;
    }
    throw Error("unknown bondage kind");
}

bool keeps_isolate_free(BondageKind kind)
{
    return kind == BondageKind::Total || kind == BondageKind::QuasiTotal ||
           kind == BondageKind::TotalRoman;
}

std::optional<InfinityCertificate> is_btR_infinite_structural(const Graph& g)
{
    if (has_isolated_vertex(g))
        throw Error("b_tR undefined: graph has an isolated vertex");
    InfinityCertificate cert;
    auto comps = components(g);
    for (std::size_t i = 0; i < comps.size(); ++i) {
        auto sub = induced_subgraph(g, comps[i]);
        auto match = recognize_btR_infinite_class(sub.graph);
        if (!match)
            return std::nullopt;
        cert.push_back({static_cast<int>(i), std::move(*match)});
    }
    return cert;
}

BondageResult bondage(const Graph& g, BondageKind kind, InvariantCache* cache)
{
    require_isolate_free(g, kind);
    if (kind == BondageKind::TotalRoman)
        if (auto cert = is_btR_infinite_structural(g))
            return BondageResult::infinite(std::move(*cert));

    const Invariant inv = bondage_invariant(kind);
    const int base = cached_value(inv, g, cache);
    EdgeSubsetWalker walker(g, keeps_isolate_free(kind));
    std::optional<EdgeSet> found;
    for (int k = 1; k <= walker.edge_count() && !found; ++k) {
        walker.walk(k, [&](const EdgeSet& es) {
            if (cached_value(inv, g.remove_edges(es), cache) > base) {
                found = es;
                return true;
            }
            return false;
        });
    }
    if (found) {
        int k = found->size();
        return BondageResult::finite(k, std::move(*found));
    }
    if (kind == BondageKind::TotalRoman)
        throw InconsistencyError("b_tR: structural recognizer says finite but no edge set "
                                 "raises gamma_tR",
                                 emit_graph6(g));
    return BondageResult::infinite();
}

bool btR_infinite_by_exhaustion(const Graph& g, int max_edges, InvariantCache* cache)
{
    if (has_isolated_vertex(g))
        throw Error("b_tR undefined: graph has an isolated vertex");
    if (g.size() > max_edges)
        throw Error("btR_infinite_by_exhaustion: " + std::to_string(g.size()) +
                    " edges exceed cap " + std::to_string(max_edges));
    const int base = cached_value(Invariant::GammaTR, g, cache);
    const auto edges = g.edges();
    const std::uint32_t total = std::uint32_t{1} << edges.size();
    for (std::uint32_t mask = 1; mask < total; ++mask) {
        std::vector<Edge> chosen;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (mask >> i & 1)
                chosen.push_back(edges[i]);
        Graph h = g.remove_edges(EdgeSet(chosen));
        if (has_isolated_vertex(h))
            continue;
        if (cached_value(Invariant::GammaTR, h, cache) > base)
            return false;
    }
    return true;
}

std::vector<EdgeSet> all_btR_sets(const Graph& g, InvariantCache* cache)
{
    auto r = b_tR(g, cache);
    std::vector<EdgeSet> out;
    if (r.is_infinite())
        return out;
    const int base = cached_value(Invariant::GammaTR, g, cache);
    EdgeSubsetWalker walker(g, true);
    walker.walk(r.value(), [&](const EdgeSet& es) {
        if (cached_value(Invariant::GammaTR, g.remove_edges(es), cache) > base)
            out.push_back(es);
        return false;
    });
    return out;
}

SandwichReport sandwich_check(const Graph& g, const EdgeSet& btR_set, InvariantCache* cache)
{
    SandwichReport s;
    s.gamma_tR = cached_value(Invariant::GammaTR, g, cache);
    s.after = cached_value(Invariant::GammaTR, g.remove_edges(btR_set), cache);
    s.holds = s.gamma_tR + 1 <= s.after && s.after <= s.gamma_tR + 2;
    s.lower_tight = s.after == s.gamma_tR + 1;
    s.upper_tight = s.after == s.gamma_tR + 2;
    return s;
}

SandwichReport sandwich_check(const Graph& g, InvariantCache* cache)
{
    auto r = b_tR(g, cache);
    if (r.is_infinite())
        throw Error("sandwich_check: b_tR is infinite");
    return sandwich_check(g, r.witness(), cache);
}

EdgeCharacterization btR_equals_one_characterization(const Graph& g, int cap)
{
    const auto functions = all_gamma_tR_functions(g, cap);
    for (const Edge& e : g.edges()) {
        if (g.degree(e.u) == 1 || g.degree(e.v) == 1)
            continue;
        bool every = true;
        for (const auto& f : functions) {
            const VertexSet pos = f.positive();
            const VertexSet twos = f.with_value(2);
            bool isolates = false;
            if (pos.contains(e.u) && pos.contains(e.v)) {
                isolates = (g.neighbors(e.u) & pos).size() == 1 ||
                           (g.neighbors(e.v) & pos).size() == 1;
            }
            auto private_zero = [&](Vertex x, Vertex y) {
                return f[x] == 2 && f[y] == 0 && (g.neighbors(y) & twos) == VertexSet{x};
            };
            if (!isolates && !private_zero(e.u, e.v) && !private_zero(e.v, e.u)) {
                every = false;
                break;
            }
        }
        if (every)
            return {true, e};
    }
    return {false, std::nullopt};
}

} // namespace troman
