#include <doctest.h>

#include <algorithm>

#include "small_graphs.hpp"
#include "troman/invariants.hpp"

using namespace troman;
using namespace testing_graphs;

namespace {

VertexLabeling lab(std::initializer_list<int> v)
{
    std::vector<std::uint8_t> out(v.begin(), v.end());
    return VertexLabeling(out);
}

/// Every minimum-weight TRDF, by plain enumeration.
std::vector<VertexLabeling> brute_force_functions(const Graph& g)
{
    const int n = g.order();
    std::vector<VertexLabeling> all;
    int best = 3 * n;
    std::vector<std::uint8_t> v(n, 0);
    while (true) {
        VertexLabeling f(v);
        if (is_trdf(g, f)) {
            if (f.weight() < best) {
                best = f.weight();
                all.clear();
            }
            if (f.weight() == best)
                all.push_back(f);
        }
        int i = 0;
        while (i < n && v[i] == 2)
            v[i++] = 0;
        if (i == n)
            break;
        ++v[i];
    }
    std::sort(all.begin(), all.end());
    return all;
}

} // namespace

TEST_CASE("labelings")
{
    CHECK(lab({2, 1, 0}).weight() == 3);
    CHECK_THROWS_AS(lab({3}), Error);
    CHECK_THROWS_AS(VertexLabeling::from_sets(3, VertexSet{0}, VertexSet{0}), Error);
    CHECK(lab({0, 2}) < lab({1, 0}));
}

TEST_CASE("labeling predicates")
{
    auto c4 = cycle(4);
    CHECK_FALSE(is_trdf(c4, lab({2, 1, 0, 0}))); // vertex 2 sees no 2
    CHECK(is_trdf(c4, lab({2, 2, 0, 0})));
    CHECK_FALSE(is_trdf(complete(2), lab({2, 0})));
    CHECK(is_trdf(cycle(5), lab({1, 1, 1, 1, 1})));
    auto s3 = star(3);
    auto centre = lab({2, 0, 0, 0});
    CHECK(is_rdf(s3, centre));
    CHECK_FALSE(is_qtrdf(s3, centre));
    CHECK_FALSE(is_trdf(s3, centre));
    CHECK(is_qtrdf(path(3), lab({1, 2, 0})));
    CHECK_FALSE(is_rdf(path(3), lab({0, 1, 0})));
    CHECK_THROWS_AS(is_trdf(c4, lab({1, 1})), Error);
}

TEST_CASE("set predicates")
{
    auto p4 = path(4);
    CHECK(is_dominating_set(p4, VertexSet{1, 2}));
    CHECK_FALSE(is_dominating_set(p4, VertexSet{1}));
    CHECK(is_total_dominating_set(p4, VertexSet{1, 2}));
    CHECK_FALSE(is_total_dominating_set(p4, VertexSet{0, 3}));
    CHECK(is_vertex_cover(p4, VertexSet{1, 2}));
    CHECK_FALSE(is_vertex_cover(p4, VertexSet{0, 3}));
}

TEST_CASE("gamma_tR on named graphs")
{
    CHECK(gamma_tR(complete(5)).weight == 3);
    CHECK(gamma_tR(path(6)).weight == 6);
    CHECK(gamma_tR(cycle(7)).weight == 7);
    // Healthy spider with three legs: head 0, middles 1..3, feet 4..6.
    auto spider = Graph::from_edge_list(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}});
    CHECK(gamma_tR(spider).weight == 7);
    auto two_k2 = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
    CHECK(gamma_tR(two_k2).weight == 4);
    CHECK(gamma_tR_oracle(path(4)) == 4);
    auto k23 = Graph::from_edge_list(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    CHECK(gamma_tR_oracle(k23) == 4);
    CHECK(gamma_tR(k23).weight == 4);
}

TEST_CASE("isolated vertices")
{
    auto g = Graph::from_edge_list(3, {{0, 1}});
    CHECK_THROWS_WITH_AS(gamma_tR(g), doctest::Contains("gamma_tR undefined"), Error);
    CHECK_THROWS_AS(gamma_t(g), Error);
    CHECK_THROWS_AS(gamma_qtR(g), Error);
    CHECK_THROWS_AS(gamma_tR_oracle(g), Error);
    CHECK(gamma(g).size == 2);
    CHECK(gamma_R(g).weight == 3);
    CHECK(beta(g).size == 1);
}

TEST_CASE("other invariants on named graphs")
{
    for (int n = 2; n <= 8; ++n) {
        CHECK(gamma(complete(n)).size == 1);
        CHECK(beta(complete(n)).size == n - 1);
    }
    CHECK(gamma_t(cycle(6)).size == gamma_t_oracle(cycle(6)));
    CHECK(gamma_t(cycle(6)).size == 4);
    CHECK(gamma_R(path(4)).weight == 3);
    // Adjacent u,v with N[u] ∪ N[v] = V.
    auto g = Graph::from_edge_list(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 3}});
    CHECK(gamma_t(g).size == 2);
}

TEST_CASE("all optimal functions")
{
    auto k2 = all_gamma_tR_functions(complete(2));
    REQUIRE(k2.size() == 1);
    CHECK(k2[0] == lab({1, 1}));
    // Six arrangements of (2,1,0) plus the all-ones labeling.
    CHECK(all_gamma_tR_functions(cycle(3)).size() == 7);
    auto p4 = all_gamma_tR_functions(path(4));
    CHECK(std::find(p4.begin(), p4.end(), lab({0, 2, 2, 0})) != p4.end());
    CHECK(p4 == brute_force_functions(path(4)));
    CHECK(all_gamma_tR_functions(cycle(4)).size() == 13);
    CHECK_THROWS_AS(all_gamma_tR_functions(path(15)), Error);
}

TEST_CASE("solvers agree with oracles on every graph up to five vertices")
{
    for (int n = 1; n <= 5; ++n) {
        for_each_graph(n, [&](const Graph& g) {
            CHECK(gamma(g).size == gamma_oracle(g));
            CHECK(beta(g).size == beta_oracle(g));
            CHECK(gamma_R(g).weight == gamma_R_oracle(g));
            CHECK(is_dominating_set(g, gamma(g).witness));
            CHECK(is_vertex_cover(g, beta(g).witness));
            CHECK(is_rdf(g, gamma_R(g).witness));
            if (has_isolated_vertex(g))
                return;
            auto tr = gamma_tR(g);
            CHECK(tr.weight == gamma_tR_oracle(g));
            CHECK(tr.witness.weight() == tr.weight);
            CHECK(is_trdf(g, tr.witness));
            CHECK(gamma_qtR(g).weight == gamma_qtR_oracle(g));
            CHECK(is_qtrdf(g, gamma_qtR(g).witness));
            CHECK(gamma_t(g).size == gamma_t_oracle(g));
            CHECK(is_total_dominating_set(g, gamma_t(g).witness));
            for (auto inv : kAllInvariants)
                CHECK(invariant_value(inv, g) >= 0);
            auto fs = all_gamma_tR_functions(g);
            CHECK(fs == brute_force_functions(g));
            // The solver's witness is the lexicographically smallest optimum.
            CHECK(tr.witness == fs.front());
        });
    }
}

TEST_CASE("lexicographic set witnesses")
{
    for_each_connected_graph(5, [&](const Graph& g) {
        // Smallest indicator vector: scan subsets in that order.
        auto first_min = [&](auto pred, int size) {
            for (int rank = 0; rank < 32; ++rank) {
                // Indicator order: vertex 0 is the most significant position.
                int mask = 0;
                for (int v = 0; v < 5; ++v)
                    if (rank >> (4 - v) & 1)
                        mask |= 1 << v;
                VertexSet s;
                for (int v = 0; v < 5; ++v)
                    if (mask >> v & 1)
                        s.insert(v);
                if (s.size() == size && pred(g, s))
                    return s;
            }
            return VertexSet{};
        };
        auto d = gamma(g);
        CHECK(d.witness == first_min(is_dominating_set, d.size));
        auto t = gamma_t(g);
        CHECK(t.witness == first_min(is_total_dominating_set, t.size));
        auto c = beta(g);
        CHECK(c.witness == first_min(is_vertex_cover, c.size));
    });
}

TEST_CASE("per component sums")
{
    auto g = Graph::from_edge_list(9, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 4}, {7, 8}});
    CHECK(gamma_tR(g).weight == 4 + 3 + 2);
    CHECK(is_trdf(g, gamma_tR(g).witness));
}

TEST_CASE("report and cache")
{
    auto r = invariant_report(cycle(6));
    CHECK(r.gamma == 2);
    CHECK(r.gamma_tR == 6);
    CHECK(chain_violation(r).empty());
    r.gamma = 5;
    CHECK_FALSE(chain_violation(r).empty());

    InvariantCache cache;
    CHECK(cache.value(Invariant::GammaTR, cycle(5)) == 5);
    CHECK(cache.value(Invariant::GammaTR, cycle(5)) == 5);
    CHECK(cache.size() == 1);
    auto iso = Graph::from_edge_list(3, {{0, 1}});
    CHECK_THROWS_AS(cache.value(Invariant::GammaTR, iso), Error);
    CHECK_THROWS_AS(cache.value(Invariant::GammaTR, iso), Error);
    CHECK(cache.value(Invariant::Gamma, iso) == 2);
}
