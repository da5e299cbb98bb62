#include "troman/serialize.hpp"

namespace troman {

namespace {

Json set_json(const VertexSet& s)
{
    Json a = Json::array();
    for (Vertex v : s)
        a.push_back(v);
    return a;
}

Json labeling_json(const VertexLabeling& f)
{
    Json a = Json::array();
    for (auto x : f.values())
        a.push_back(static_cast<int>(x));
    return a;
}

} // namespace

Json to_json(const InvariantReport& r)
{
    Json j;
    j["n"] = r.n;
    j["gamma"] = r.gamma;
    j["gamma_t"] = r.gamma_t;
    j["gamma_R"] = r.gamma_R;
    j["gamma_qtR"] = r.gamma_qtR;
    j["gamma_tR"] = r.gamma_tR;
    j["beta"] = r.beta;
    j["witnesses"] = {{"gamma", set_json(r.dominating_set)},
                      {"gamma_t", set_json(r.total_dominating_set)},
                      {"gamma_R", labeling_json(r.rdf)},
                      {"gamma_qtR", labeling_json(r.qtrdf)},
                      {"gamma_tR", labeling_json(r.trdf)},
                      {"beta", set_json(r.vertex_cover)}};
    return j;
}

Json to_json(const BondageResult& r)
{
    Json j;
    if (r.is_finite()) {
        j["kind"] = "finite";
        j["value"] = r.value();
        Json w = Json::array();
        for (const Edge& e : r.witness())
            w.push_back({e.u, e.v});
        j["witness"] = std::move(w);
        return j;
    }
    j["kind"] = "infinite";
    Json cert = Json::array();
    for (const auto& tag : r.certificate()) {
        Json t;
        t["component"] = tag.component;
        t["class"] = family_class_name(tag.match.cls);
        if (!tag.match.params.empty())
            t["params"] = tag.match.params;
        cert.push_back(std::move(t));
    }
    j["certificate"] = std::move(cert);
    return j;
}

Json to_json(const ClaimReport& r)
{
    Json j;
    j["n_vars"] = r.n_vars;
    j["m_clauses"] = r.m_clauses;
    j["order"] = r.order;
    j["size"] = r.size;
    j["order_size_ok"] = r.order_size_ok;
    j["gamma_tR"] = r.gamma_tR;
    j["sat"] = r.sat;
    j["in_range"] = r.in_range;
    j["claim1"] = r.claim1;
    j["claim2"] = r.claim2;
    j["claim3"] = r.claim3;
    j["pq_shortcut"] = r.pq_shortcut;
    j["b_tR"] = r.btR_is_one ? Json(1) : Json(">1");
    j["b_tR_witness"] = r.btR_witness ? Json::array({r.btR_witness->u, r.btR_witness->v}) : Json();
    j["problems"] = r.problems;
    return j;
}

} // namespace troman
