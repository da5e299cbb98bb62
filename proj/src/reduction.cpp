#include "troman/reduction.hpp"

#include <sstream>

#include "troman/graph_io.hpp"
#include "troman/invariants.hpp"

namespace troman {

namespace {

constexpr int kGadgetSize = 7;

int gadget_offset(RoleKind k)
{
    switch (k) {
    case RoleKind::U:
        return 0;
    case RoleKind::T:
        return 1;
    case RoleKind::UBar:
        return 2;
    case RoleKind::A:
        return 3;
    case RoleKind::S:
        return 4;
    case RoleKind::B:
        return 5;
    case RoleKind::D:
        return 6;
    default:
        throw Error("not a gadget role");
    }
}

} // namespace

void validate(const CnfFormula& f)
{
    if (f.num_vars < 0)
        throw Error("cnf: negative variable count");
    for (std::size_t j = 0; j < f.clauses.size(); ++j) {
        const auto& c = f.clauses[j];
        for (int i = 0; i < 3; ++i) {
            if (c[i].var < 0 || c[i].var >= f.num_vars)
                throw Error("cnf: clause " + std::to_string(j + 1) + " uses variable " +
                            std::to_string(c[i].var + 1) + " outside 1.." +
                            std::to_string(f.num_vars));
            for (int k = 0; k < i; ++k)
                if (c[k].var == c[i].var)
                    throw Error("cnf: clause " + std::to_string(j + 1) + " repeats variable " +
                                std::to_string(c[i].var + 1));
        }
    }
}

CnfFormula parse_dimacs(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    CnfFormula f;
    int declared = -1;
    std::vector<Literal> pending;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first[0] == 'c' || first[0] == '%')
            continue;
        if (first == "p") {
            std::string fmt;
            if (declared >= 0 || !(ls >> fmt >> f.num_vars >> declared) || fmt != "cnf" ||
                f.num_vars < 0 || declared < 0)
                throw Error("dimacs: malformed header '" + line + "'");
            continue;
        }
        if (declared < 0)
            throw Error("dimacs: clause before 'p cnf' header");
        std::istringstream tokens(line);
        std::string tok;
        while (tokens >> tok) {
            long lit = 0;
            try {
                std::size_t used = 0;
                lit = std::stol(tok, &used);
                if (used != tok.size())
                    throw Error("");
            } catch (...) {
                throw Error("dimacs: bad literal '" + tok + "'");
            }
            if (lit == 0) {
                if (pending.size() != 3)
                    throw Error("dimacs: clause " + std::to_string(f.clauses.size() + 1) +
                                " has width " + std::to_string(pending.size()) + ", expected 3");
                f.clauses.push_back({pending[0], pending[1], pending[2]});
                pending.clear();
                continue;
            }
            long var = lit < 0 ? -lit : lit;
            if (var > f.num_vars)
                throw Error("dimacs: variable " + std::to_string(var) + " exceeds declared " +
                            std::to_string(f.num_vars));
            pending.push_back({static_cast<int>(var - 1), lit > 0});
        }
    }
    if (declared < 0)
        throw Error("dimacs: missing 'p cnf' header");
    if (!pending.empty())
        throw Error("dimacs: last clause is not terminated by 0");
    if (static_cast<int>(f.clauses.size()) != declared)
        throw Error("dimacs: header declares " + std::to_string(declared) + " clauses, found " +
                    std::to_string(f.clauses.size()));
    validate(f);
    return f;
}

bool sat_brute_force(const CnfFormula& f)
{
    validate(f);
    if (f.num_vars > 24)
        throw Error("sat_brute_force: " + std::to_string(f.num_vars) + " variables exceed 24");
    for (std::uint32_t a = 0; a < (std::uint32_t{1} << f.num_vars); ++a) {
        bool all = true;
        for (const auto& c : f.clauses) {
            bool any = false;
            for (const auto& l : c)
                any = any || (((a >> l.var) & 1) == (l.positive ? 1u : 0u));
            if (!any) {
                all = false;
                break;
            }
        }
        if (all)
            return true;
    }
    return false;
}

Vertex ReductionArtifact::gadget(int i, RoleKind k) const
{
    return kGadgetSize * i + gadget_offset(k);
}

Vertex ReductionArtifact::special(RoleKind k) const
{
    const int base = kGadgetSize * n_vars + m_clauses;
    switch (k) {
    case RoleKind::O:
        return base;
    case RoleKind::P:
        return base + 1;
    case RoleKind::Q:
        return base + 2;
    case RoleKind::R:
        return base + 3;
    default:
        throw Error("not a special role");
    }
}

std::string ReductionArtifact::role_name(Vertex v) const
{
    const Role& r = roles.at(v);
    static const char* names[] = {"u", "t", "ubar", "a", "s", "b", "d", "c", "o", "p", "q", "r"};
    std::string s = names[static_cast<int>(r.kind)];
    if (r.kind < RoleKind::O)
        s += std::to_string(r.index + 1);
    return s;
}

ReductionArtifact build(const CnfFormula& f)
{
    validate(f);
    ReductionArtifact art;
    art.n_vars = f.num_vars;
    art.m_clauses = static_cast<int>(f.clauses.size());
    const int order = kGadgetSize * art.n_vars + art.m_clauses + 4;
    if (order > Graph::kMaxOrder)
        throw Error("reduction graph of order " + std::to_string(order) + " exceeds vertex cap " +
                    std::to_string(Graph::kMaxOrder));

    std::vector<Edge> es;
    for (int i = 0; i < art.n_vars; ++i) {
        for (RoleKind k : {RoleKind::U, RoleKind::T, RoleKind::UBar, RoleKind::A, RoleKind::S,
                           RoleKind::B, RoleKind::D})
            art.roles.push_back({k, i});
        auto v = [&](RoleKind k) { return art.gadget(i, k); };
        using K = RoleKind;
        es.insert(es.end(), {{v(K::U), v(K::T)},    {v(K::T), v(K::UBar)}, {v(K::U), v(K::A)},
                             {v(K::U), v(K::B)},    {v(K::UBar), v(K::A)}, {v(K::UBar), v(K::B)},
                             {v(K::A), v(K::S)},    {v(K::S), v(K::B)},    {v(K::A), v(K::D)},
                             {v(K::B), v(K::D)}});
    }
    for (int j = 0; j < art.m_clauses; ++j)
        art.roles.push_back({RoleKind::Clause, j});
    for (RoleKind k : {RoleKind::O, RoleKind::P, RoleKind::Q, RoleKind::R})
        art.roles.push_back({k, 0});

    const Vertex o = art.special(RoleKind::O), p = art.special(RoleKind::P),
                 q = art.special(RoleKind::Q), r = art.special(RoleKind::R);
    es.insert(es.end(), {{p, q}, {p, o}, {o, q}, {q, r}, {r, p}});
    for (int j = 0; j < art.m_clauses; ++j) {
        for (const auto& l : f.clauses[j])
            es.push_back({art.clause(j), art.gadget(l.var, l.positive ? RoleKind::U : RoleKind::UBar)});
        es.push_back({art.clause(j), r});
    }
    art.graph = Graph::from_edge_list(order, es);
    return art;
}

ClaimReport verify_claims(const CnfFormula& f)
{
    const ReductionArtifact art = build(f);
    const Graph& g = art.graph;
    ClaimReport rep;
    rep.n_vars = art.n_vars;
    rep.m_clauses = art.m_clauses;
    rep.order = g.order();
    rep.size = g.size();
    const int n = art.n_vars, m = art.m_clauses;
    rep.order_size_ok = rep.order == 7 * n + m + 4 && rep.size == 10 * n + 4 * m + 5;
    if (!rep.order_size_ok)
        rep.problems.push_back("order/size differ from 7n+m+4 / 10n+4m+5");

    rep.gamma_tR = invariant_value(Invariant::GammaTR, g);
    rep.sat = sat_brute_force(f);
    const int low = 4 * n + 3;
    rep.in_range = rep.gamma_tR == low || rep.gamma_tR == low + 1;
    if (!rep.in_range)
        rep.problems.push_back("gamma_tR = " + std::to_string(rep.gamma_tR) + " outside {4n+3, 4n+4}");
    rep.claim1 = (rep.gamma_tR == low) == rep.sat;
    if (!rep.claim1)
        rep.problems.push_back("gamma_tR = 4n+3 does not match satisfiability");

    rep.claim2 = true;
    const Edge pq{art.special(RoleKind::P), art.special(RoleKind::Q)};
    for (const Edge& e : g.edges()) {
        Graph h = g.remove_edge(e);
        if (has_isolated_vertex(h)) {
            rep.claim2 = false;
            rep.problems.push_back("removing " + art.role_name(e.u) + art.role_name(e.v) +
                                   " isolates a vertex");
            continue;
        }
        const int after = invariant_value(Invariant::GammaTR, h);
        if (after > low + 1) {
            rep.claim2 = false;
            rep.problems.push_back("gamma_tR(G - " + art.role_name(e.u) + art.role_name(e.v) +
                                   ") = " + std::to_string(after) + " exceeds 4n+4");
        }
        if (after > rep.gamma_tR && !rep.btR_witness) {
            rep.btR_is_one = true;
            rep.btR_witness = e;
        }
        if (e == pq)
            rep.pq_shortcut = after > rep.gamma_tR;
    }
    rep.claim3 = (rep.gamma_tR == low) == rep.btR_is_one;
    if (rep.gamma_tR == low && !rep.pq_shortcut) {
        rep.claim3 = false;
        rep.problems.push_back("gamma_tR(G - pq) does not exceed gamma_tR(G)");
    }
    if (!rep.claim3)
        rep.problems.push_back("gamma_tR = 4n+3 does not match b_tR = 1 [graph6: " +
                               emit_graph6(g) + "]");
    return rep;
}

} // namespace troman
