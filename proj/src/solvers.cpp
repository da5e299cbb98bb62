// Exact solvers for the six domination-type parameters.

#include <string>

#include "dense.hpp"
#include "troman/invariants.hpp"

namespace troman {

using detail::bit;
using detail::CoverSearch;
using detail::Dense;
using detail::for_each_bit;
using detail::Mask;

namespace {

enum class Totality {
    None,     // Roman domination
    TwosOnly, // quasi-total
    All,      // total
};

struct RomanResult {
    int weight = 0;
    Mask ones = 0;
    Mask twos = 0;
};

/// Searches V_2 by increasing cardinality. For a fixed V_2 the cheapest
/// completion is forced: V \ N[V_2] must be positive, and the positive
/// vertices still lacking a positive neighbor (as required by the totality
/// rule) need a minimum cover drawn from N(V_2) \ V_2.
class RomanSearch {
public:
    RomanSearch(const Dense& d, Totality tot, bool witness)
        : d_(d), cover_(d.open), tot_(tot), witness_(witness)
    {
    }

    RomanResult run()
    {
        // The all-ones labeling is valid for every variant on an isolate-free
        // piece, and for plain Roman domination on anything.
        best_ = {d_.n, d_.all, 0};
        for (int k = 1; k <= d_.n; ++k) {
            if (witness_ ? 2 * k > best_.weight : 2 * k >= best_.weight)
                break;
            k_ = k;
            choose(0, k, 0, 0);
        }
        return best_;
    }

private:
    void choose(int from, int left, Mask twos, Mask dominated)
    {
        if (left == 0) {
            evaluate(twos, dominated);
            return;
        }
        for (int v = from; v <= d_.n - left; ++v)
            choose(v + 1, left - 1, twos | bit(v), dominated | d_.closed[v]);
    }

    void evaluate(Mask twos, Mask dominated)
    {
        const Mask forced = d_.all & ~dominated;
        const int base = 2 * k_ + std::popcount(forced);
        if (witness_ ? base > best_.weight : base >= best_.weight)
            return;
        const Mask positive = twos | forced;
        Mask targets = 0;
        if (tot_ != Totality::None) {
            Mask pool = tot_ == Totality::All ? positive : twos;
            for_each_bit(pool, [&](int x) {
                if (!(d_.open[x] & positive))
                    targets |= bit(x);
            });
        }
        const Mask cands = d_.all & ~positive;
        const int slack = best_.weight - base - (witness_ ? 0 : 1);
        const int s = cover_.min_size(targets, cands, slack);
        if (s < 0)
            return;
        const int w = base + s;
        if (!witness_) {
            best_ = {w, 0, 0};
            return;
        }
        const Mask ones = forced | (s ? cover_.lex_min(targets, cands, s) : 0);
        if (w < best_.weight || detail::labeling_less(ones, twos, best_.ones, best_.twos))
            best_ = {w, ones, twos};
    }

    const Dense& d_;
    CoverSearch cover_;
    Totality tot_;
    bool witness_;
    int k_ = 0;
    RomanResult best_;
};

/// Minimum vertex cover by branching on a maximum-degree vertex: either it
/// joins the cover or all its neighbours do.
class VertexCoverSearch {
public:
    explicit VertexCoverSearch(const Dense& d) : d_(d) {}

    bool exists(Mask alive, int s) const
    {
        int best_v = -1, best_deg = 0;
        for_each_bit(alive, [&](int v) {
            int deg = std::popcount(d_.open[v] & alive);
            if (deg > best_deg) {
                best_deg = deg;
                best_v = v;
            }
        });
        if (best_deg == 0)
            return true;
        if (s <= 0)
            return false;
        // Each cover vertex removes at most best_deg edges.
        int edges = 0;
        for_each_bit(alive, [&](int v) { edges += std::popcount(d_.open[v] & alive); });
        edges /= 2;
        if (edges > s * best_deg)
            return false;
        if (exists(alive & ~bit(best_v), s - 1))
            return true;
        Mask nb = d_.open[best_v] & alive;
        int need = std::popcount(nb);
        return need <= s && exists(alive & ~nb & ~bit(best_v), s - need);
    }

    SetSolution solve_component(bool witness) const
    {
        int s = 0;
        while (!exists(d_.all, s))
            ++s;
        SetSolution out;
        out.size = s;
        if (!witness)
            return out;
        // Greedy lexicographic minimisation: keep each vertex out if the
        // remaining budget still admits a cover.
        Mask cover = 0, out_set = 0, undecided = d_.all;
        int budget = s;
        for (int v = 0; v < d_.n; ++v) {
            if (!(undecided & bit(v)))
                continue;
            bool can_exclude = !(d_.open[v] & out_set);
            if (can_exclude) {
                Mask forced = d_.open[v] & undecided;
                int need = std::popcount(forced);
                Mask rest = undecided & ~forced & ~bit(v);
                if (need <= budget && exists(rest, budget - need)) {
                    cover |= forced;
                    out_set |= bit(v);
                    undecided = rest;
                    budget -= need;
                    continue;
                }
            }
            cover |= bit(v);
            undecided &= ~bit(v);
            --budget;
        }
        out.witness = VertexSet::from_word(cover);
        return out;
    }

private:
    const Dense& d_;
};

/// Runs `solve` on every component (relabelled to 0..k-1) and stitches the
/// witnesses back together.
template <class Solve>
LabelingSolution per_component_labeling(const Graph& g, Solve&& solve)
{
    LabelingSolution out;
    out.witness = VertexLabeling(g.order());
    for (const auto& comp : components(g)) {
        auto sub = induced_subgraph(g, comp);
        Dense d(sub.graph);
        RomanResult r = solve(d);
        out.weight += r.weight;
        for_each_bit(r.ones, [&](int v) { out.witness.set(sub.to_parent[v], 1); });
        for_each_bit(r.twos, [&](int v) { out.witness.set(sub.to_parent[v], 2); });
    }
    return out;
}

template <class Solve>
SetSolution per_component_set(const Graph& g, Solve&& solve)
{
    SetSolution out;
    for (const auto& comp : components(g)) {
        auto sub = induced_subgraph(g, comp);
        Dense d(sub.graph);
        SetSolution r = solve(d);
        out.size += r.size;
        for (Vertex v : r.witness)
            out.witness.insert(sub.to_parent[v]);
    }
    return out;
}

void require_isolate_free(const Graph& g, std::string_view what)
{
    if (has_isolated_vertex(g))
        throw Error(std::string(what) + " undefined: graph has an isolated vertex");
}

LabelingSolution roman_family(const Graph& g, Totality tot, bool witness)
{
    return per_component_labeling(g, [&](const Dense& d) {
        return RomanSearch(d, tot, witness).run();
    });
}

SetSolution hitting_set(const Graph& g, bool total, bool witness)
{
    return per_component_set(g, [&](const Dense& d) {
        CoverSearch cs(total ? d.open : d.closed);
        SetSolution r;
        r.size = cs.min_size(d.all, d.all, d.n);
        if (witness)
            r.witness = VertexSet::from_word(cs.lex_min(d.all, d.all, r.size));
        return r;
    });
}

SetSolution vertex_cover(const Graph& g, bool witness)
{
    return per_component_set(g, [&](const Dense& d) {
        return VertexCoverSearch(d).solve_component(witness);
    });
}

} // namespace

std::string_view invariant_name(Invariant inv)
{
    switch (inv) {
    case Invariant::Gamma:
        return "gamma";
    case Invariant::GammaT:
        return "gamma_t";
    case Invariant::GammaR:
        return "gamma_R";
    case Invariant::GammaQtR:
        return "gamma_qtR";
    case Invariant::GammaTR:
        return "gamma_tR";
    case Invariant::Beta:
        return "beta";
    }
    return "?";
}

bool requires_isolate_free(Invariant inv)
{
    return inv == Invariant::GammaT || inv == Invariant::GammaQtR || inv == Invariant::GammaTR;
}

LabelingSolution gamma_tR(const Graph& g)
{
    require_isolate_free(g, "gamma_tR");
    return roman_family(g, Totality::All, true);
}

LabelingSolution gamma_qtR(const Graph& g)
{
    require_isolate_free(g, "gamma_qtR");
    return roman_family(g, Totality::TwosOnly, true);
}

LabelingSolution gamma_R(const Graph& g)
{
    return roman_family(g, Totality::None, true);
}

SetSolution gamma(const Graph& g)
{
    return hitting_set(g, false, true);
}

SetSolution gamma_t(const Graph& g)
{
    require_isolate_free(g, "gamma_t");
    return hitting_set(g, true, true);
}

SetSolution beta(const Graph& g)
{
    return vertex_cover(g, true);
}

int invariant_value(Invariant inv, const Graph& g)
{
    if (requires_isolate_free(inv))
        require_isolate_free(g, invariant_name(inv));
    switch (inv) {
    case Invariant::Gamma:
        return hitting_set(g, false, false).size;
    case Invariant::GammaT:
        return hitting_set(g, true, false).size;
    case Invariant::GammaR:
        return roman_family(g, Totality::None, false).weight;
    case Invariant::GammaQtR:
        return roman_family(g, Totality::TwosOnly, false).weight;
    case Invariant::GammaTR:
        return roman_family(g, Totality::All, false).weight;
    case Invariant::Beta:
        return vertex_cover(g, false).size;
    }
    throw Error("unknown invariant");
}

std::vector<VertexLabeling> all_gamma_tR_functions(const Graph& g, int cap)
{
    if (g.order() > cap)
        throw Error("all_gamma_tR_functions: order " + std::to_string(g.order()) +
                    " exceeds cap " + std::to_string(cap));
    require_isolate_free(g, "gamma_tR");
    const int target = invariant_value(Invariant::GammaTR, g);
    const Dense d(g);
    std::vector<VertexLabeling> out;

    auto emit = [&](Mask ones, Mask twos) {
        out.push_back(VertexLabeling::from_sets(d.n, VertexSet::from_word(ones),
                                                VertexSet::from_word(twos)));
    };
    auto is_total = [&](Mask positive) {
        Mask bad = 0;
        for_each_bit(positive, [&](int x) {
            if (!(d.open[x] & positive))
                bad |= bit(x);
        });
        return bad == 0;
    };

    // For each V_2 (weight budget permitting), extend the forced ones by
    // every subset of N(V_2) \ V_2 of exactly the remaining weight.
    auto extend = [&](Mask twos, Mask dominated, int k) {
        const Mask forced = d.all & ~dominated;
        const int left = target - 2 * k - std::popcount(forced);
        if (left < 0)
            return;
        const Mask cands = d.all & ~(twos | forced);
        std::vector<int> pool;
        for_each_bit(cands, [&](int v) { pool.push_back(v); });
        auto rec = [&](auto&& self, std::size_t i, int need, Mask extra) -> void {
            if (need == 0) {
                if (is_total(twos | forced | extra))
                    emit(forced | extra, twos);
                return;
            }
            for (std::size_t j = i; j + need <= pool.size(); ++j)
                self(self, j + 1, need - 1, extra | bit(pool[j]));
        };
        rec(rec, 0, left, 0);
    };
    auto choose = [&](auto&& self, int from, int left, int k, Mask twos, Mask dom) -> void {
        if (left == 0) {
            extend(twos, dom, k);
            return;
        }
        for (int v = from; v <= d.n - left; ++v)
            self(self, v + 1, left - 1, k, twos | bit(v), dom | d.closed[v]);
    };
    for (int k = 0; 2 * k <= target; ++k)
        choose(choose, 0, k, k, 0, 0);

    std::sort(out.begin(), out.end());
    return out;
}

} // namespace troman
