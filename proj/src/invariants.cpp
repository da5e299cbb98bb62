#include <sstream>

#include "troman/graph_io.hpp"
#include "troman/invariants.hpp"

namespace troman {

std::string chain_violation(const InvariantReport& r)
{
    std::ostringstream out;
    auto need = [&](bool ok, const char* text) {
        if (!ok && out.tellp() == 0)
            out << text;
    };
    need(r.gamma <= r.beta, "gamma <= beta");
    need(r.gamma <= r.gamma_t, "gamma <= gamma_t");
    need(r.gamma_R <= r.gamma_qtR, "gamma_R <= gamma_qtR");
    need(r.gamma_qtR <= r.gamma_tR, "gamma_qtR <= gamma_tR");
    need(r.gamma_t <= r.gamma_tR, "gamma_t <= gamma_tR");
    need(r.gamma_tR <= 2 * r.gamma_t, "gamma_tR <= 2 gamma_t");
    need(2 * r.gamma <= r.gamma_tR, "2 gamma <= gamma_tR");
    need(r.gamma_tR <= 3 * r.gamma, "gamma_tR <= 3 gamma");
    need(r.gamma <= r.gamma_R, "gamma <= gamma_R");
    need(r.gamma_R <= 2 * r.gamma, "gamma_R <= 2 gamma");
    return out.str();
}

InvariantReport invariant_report(const Graph& g)
{
    InvariantReport r;
    r.n = g.order();
    auto d = gamma(g);
    auto t = gamma_t(g);
    auto c = beta(g);
    auto rd = gamma_R(g);
    auto q = gamma_qtR(g);
    auto tr = gamma_tR(g);
    r.gamma = d.size;
    r.gamma_t = t.size;
    r.beta = c.size;
    r.gamma_R = rd.weight;
    r.gamma_qtR = q.weight;
    r.gamma_tR = tr.weight;
    r.dominating_set = d.witness;
    r.total_dominating_set = t.witness;
    r.vertex_cover = c.witness;
    r.rdf = rd.witness;
    r.qtrdf = q.witness;
    r.trdf = tr.witness;
    if (auto bad = chain_violation(r); !bad.empty())
        throw InconsistencyError("inequality chain violated: " + bad, emit_graph6(g));
    return r;
}

int InvariantCache::value(Invariant inv, const Graph& g)
{
    auto [it, fresh] = table_.try_emplace(g);
    if (fresh)
        it->second.fill(kUnknown);
    auto& slot = it->second[static_cast<std::size_t>(inv)];
    if (slot == kUnknown) {
        if (requires_isolate_free(inv) && has_isolated_vertex(g))
            slot = kUndefined;
        else
            slot = static_cast<std::int16_t>(invariant_value(inv, g));
    }
    if (slot == kUndefined)
        throw Error(std::string(invariant_name(inv)) +
                    " undefined: graph has an isolated vertex");
    return slot;
}

} // namespace troman
