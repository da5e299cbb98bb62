// Brute-force reference values. Deliberately naive.

#include <limits>
#include <string>

#include "troman/invariants.hpp"

namespace troman {

namespace {

void check_cap(const Graph& g, int cap, const char* what)
{
    if (g.order() > cap)
        throw Error(std::string(what) + ": order " + std::to_string(g.order()) +
                    " exceeds oracle cap " + std::to_string(cap));
}

void check_isolate_free(const Graph& g, const char* what)
{
    if (has_isolated_vertex(g))
        throw Error(std::string(what) + " undefined: graph has an isolated vertex");
}

template <class Pred>
int min_labeling_weight(const Graph& g, Pred&& accept)
{
    const int n = g.order();
    VertexLabeling f(n);
    int best = std::numeric_limits<int>::max();
    // Odometer over {0,1,2}^n.
    while (true) {
        if (f.weight() < best && accept(g, f))
            best = f.weight();
        int i = 0;
        while (i < n && f[i] == 2)
            f.set(i++, 0);
        if (i == n)
            break;
        f.set(i, f[i] + 1);
    }
    return best;
}

template <class Pred>
int min_subset_size(const Graph& g, Pred&& accept)
{
    const int n = g.order();
    int best = std::numeric_limits<int>::max();
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        VertexSet s;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1)
                s.insert(v);
        if (s.size() < best && accept(g, s))
            best = s.size();
    }
    return best;
}

} // namespace

int gamma_tR_oracle(const Graph& g)
{
    check_cap(g, kLabelingOracleCap, "gamma_tR_oracle");
    check_isolate_free(g, "gamma_tR");
    return min_labeling_weight(g, is_trdf);
}

int gamma_qtR_oracle(const Graph& g)
{
    check_cap(g, kLabelingOracleCap, "gamma_qtR_oracle");
    check_isolate_free(g, "gamma_qtR");
    return min_labeling_weight(g, is_qtrdf);
}

int gamma_R_oracle(const Graph& g)
{
    check_cap(g, kLabelingOracleCap, "gamma_R_oracle");
    return min_labeling_weight(g, is_rdf);
}

int gamma_oracle(const Graph& g)
{
    check_cap(g, kSubsetOracleCap, "gamma_oracle");
    return min_subset_size(g, is_dominating_set);
}

int gamma_t_oracle(const Graph& g)
{
    check_cap(g, kSubsetOracleCap, "gamma_t_oracle");
    check_isolate_free(g, "gamma_t");
    return min_subset_size(g, is_total_dominating_set);
}

int beta_oracle(const Graph& g)
{
    check_cap(g, kSubsetOracleCap, "beta_oracle");
    return min_subset_size(g, is_vertex_cover);
}

} // namespace troman
