#include <doctest.h>

#include <climits>

#include "small_graphs.hpp"
#include "troman/bondage.hpp"
#include "troman/graph_io.hpp"

using namespace troman;

namespace {

/// Minimum bondage by subset enumeration with the brute-force oracles.
/// INT_MAX stands for infinity.
int bondage_oracle(const Graph& g, BondageKind kind)
{
    auto value = [&](const Graph& h) {
        switch (kind) {
        case BondageKind::Plain:
            return gamma_oracle(h);
        case BondageKind::Total:
            return gamma_t_oracle(h);
        case BondageKind::Roman:
            return gamma_R_oracle(h);
        case BondageKind::QuasiTotal:
            return gamma_qtR_oracle(h);
        case BondageKind::TotalRoman:
            return gamma_tR_oracle(h);
        }
        return 0;
    };
    const int base = value(g);
    const auto edges = g.edges();
    int best = INT_MAX;
    for (unsigned mask = 1; mask < (1u << edges.size()); ++mask) {
        std::vector<Edge> es;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (mask >> i & 1)
                es.push_back(edges[i]);
        if (static_cast<int>(es.size()) >= best)
            continue;
        Graph h = g.remove_edges(EdgeSet(es));
        if (keeps_isolate_free(kind) && has_isolated_vertex(h))
            continue;
        if (value(h) > base)
            best = static_cast<int>(es.size());
    }
    return best;
}

} // namespace

TEST_CASE("infinite compares above finite")
{
    auto inf = BondageResult::infinite();
    auto one = BondageResult::finite(1, EdgeSet{{0, 1}});
    auto two = BondageResult::finite(2, EdgeSet{{0, 1}, {1, 2}});
    CHECK(one < two);
    CHECK(two < inf);
    CHECK(inf <= inf);
    CHECK(inf == BondageResult::infinite());
    CHECK_FALSE(inf < inf);
    CHECK_THROWS_AS(inf.value(), Error);
}

TEST_CASE("total Roman bondage of named graphs")
{
    CHECK(b_tR(generate_graph(Complete{4})).value() == 2);
    CHECK(b_tR(generate_graph(Wheel{5})).value() == 1);
    CHECK(b_tR(generate_graph(CompleteBipartite{2, 3})).value() == 2);
    auto p7 = b_tR(generate_graph(Path{7}));
    REQUIRE(p7.is_infinite());
    REQUIRE(p7.certificate().size() == 1);
    CHECK(p7.certificate()[0].match.cls == FamilyClass::Path);
    CHECK(b_tR(generate_graph(Spider{2, 4})).value() == 2);
    CHECK(b_tR(generate_graph(Broom{4, 3})).value() == 1);
}

TEST_CASE("witnesses")
{
    auto k4 = generate_graph(Complete{4});
    auto r = b_tR(k4);
    // First success in lexicographic order over canonical edges.
    CHECK(r.witness() == EdgeSet{{0, 1}, {2, 3}});
    auto h = k4.remove_edges(r.witness());
    CHECK_FALSE(has_isolated_vertex(h));
    CHECK(gamma_tR(h).weight > gamma_tR(k4).weight);
}

TEST_CASE("other bondage variants")
{
    CHECK(b_t(generate_graph(CompleteBipartite{2, 3})).value() == 2);
    auto k2 = generate_graph(Complete{2});
    CHECK(b(k2).value() == 1);
    CHECK(b_R(k2).is_infinite()); // gamma_R stays 2
    CHECK(b_t(k2).is_infinite());
    auto c4 = generate_graph(Cycle{4});
    CHECK(b_t(c4) == BondageResult::finite(bondage_oracle(c4, BondageKind::Total), {}));
    CHECK(b(Graph(3)).is_infinite());
    auto iso = Graph::from_edge_list(3, {{0, 1}});
    CHECK_THROWS_AS(b_tR(iso), Error);
    CHECK_THROWS_AS(b_t(iso), Error);
    CHECK(b(iso).value() == 1);
}

TEST_CASE("structural infinity certificates")
{
    auto c9 = is_btR_infinite_structural(generate_graph(Cycle{9}));
    REQUIRE(c9.has_value());
    CHECK((*c9)[0].match.cls == FamilyClass::Cycle);
    auto cor = is_btR_infinite_structural(generate_graph(Corona{testing_graphs::complete(3)}));
    REQUIRE(cor.has_value());
    CHECK((*cor)[0].match.cls == FamilyClass::Corona);
    CHECK_FALSE(is_btR_infinite_structural(generate_graph(Complete{4})).has_value());
    // Two components, each certified separately.
    auto two = disjoint_union(generate_graph(Star{3}), generate_graph(Cycle{5}));
    auto cert = is_btR_infinite_structural(two);
    REQUIRE(cert.has_value());
    REQUIRE(cert->size() == 2);
    CHECK((*cert)[0].match.cls == FamilyClass::Star);
    CHECK((*cert)[1].component == 1);
    CHECK((*cert)[1].match.cls == FamilyClass::Cycle);
    CHECK_FALSE(is_btR_infinite_structural(
                    disjoint_union(generate_graph(Star{3}), generate_graph(Complete{4})))
                    .has_value());
}

TEST_CASE("single-edge characterization")
{
    for (auto spec : {FamilySpec{Broom{3, 2}}, FamilySpec{Broom{4, 3}},
                      FamilySpec{DoubleBroom{3, 2, 2}}, FamilySpec{DoubleBroom{4, 2, 3}}}) {
        auto c = btR_equals_one_characterization(generate_graph(spec));
        CHECK(c.holds);
        CHECK(c.edge.has_value());
    }
    auto k4 = btR_equals_one_characterization(generate_graph(Complete{4}));
    CHECK_FALSE(k4.holds);
    CHECK_FALSE(k4.edge.has_value());
}

TEST_CASE("sandwich sharpness")
{
    auto upper = sandwich_check(generate_graph(Bistar{2, 3}));
    CHECK(upper.holds);
    CHECK(upper.upper_tight);
    auto lower = sandwich_check(generate_graph(Bistar{1, 4}));
    CHECK(lower.holds);
    CHECK(lower.lower_tight);
    auto k4 = generate_graph(Complete{4});
    auto sets = all_btR_sets(k4);
    CHECK(sets.size() == 3);
    for (const auto& s : sets) {
        CHECK(s.size() == 2);
        CHECK(sandwich_check(k4, s).holds);
    }
    CHECK_THROWS_AS(sandwich_check(generate_graph(Cycle{5})), Error);
}

TEST_CASE("bondage agrees with subset oracles on connected graphs up to five vertices")
{
    InvariantCache cache;
    for (int n = 2; n <= 5; ++n)
        testing_graphs::for_each_connected_graph(n, [&](const Graph& g) {
            INFO(emit_graph6(g));
            for (auto kind : {BondageKind::Plain, BondageKind::Total, BondageKind::Roman,
                              BondageKind::QuasiTotal, BondageKind::TotalRoman}) {
                auto r = bondage(g, kind, &cache);
                int expect = bondage_oracle(g, kind);
                if (expect == INT_MAX) {
                    CHECK(r.is_infinite());
                } else {
                    REQUIRE(r.is_finite());
                    CHECK(r.value() == expect);
                    CHECK(r.witness().size() == expect);
                }
            }
            bool exhaust = btR_infinite_by_exhaustion(g, 16, &cache);
            CHECK(exhaust == is_btR_infinite_structural(g).has_value());
        });
}
