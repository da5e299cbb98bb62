#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>
#include <unordered_set>

#include "troman/graph_io.hpp"
#include "troman/harness.hpp"

using namespace troman;

namespace {

const TheoremResult& find(const std::vector<TheoremResult>& rs, const std::string& id)
{
    for (const auto& r : rs)
        if (r.id == id)
            return r;
    throw std::runtime_error("no result " + id);
}

Verdict check_one(const std::string& id, const Graph& g)
{
    EvalContext ctx;
    return select_theorems(id).at(0).check(g, ctx);
}

} // namespace

TEST_CASE("splitmix64 reference stream")
{
    SplitMix64 r(1234567);
    CHECK(r.next() == 6457827717110365317ULL);
    CHECK(r.next() == 3203168211198807973ULL);
    CHECK(r.next() == 9817491932198370423ULL);
    SplitMix64 z(0);
    double u = z.next_double();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
}

TEST_CASE("corpus spec parsing")
{
    auto a = parse_corpus_spec("all:5");
    CHECK(a.mode == CorpusSpec::Mode::AllConnected);
    CHECK(a.max_n == 5);
    auto r = parse_corpus_spec("random:10,7,0.35,99");
    CHECK(r.mode == CorpusSpec::Mode::Random);
    CHECK(r.count == 10);
    CHECK(r.n == 7);
    CHECK(r.edge_prob == doctest::Approx(0.35));
    CHECK(r.seed == 99);
    auto f = parse_corpus_spec("families:complete:4;spider:2,4");
    CHECK(f.families.size() == 2);
    CHECK(parse_corpus_spec("file:/tmp/x").path == "/tmp/x");

    for (const char* bad : {"all", "all:1", "all:x", "random:1,2,3", "random:1,5,0,1",
                            "random:1,5,1.5,1", "families:", "families:nope:3", "file:",
                            "foo:3"})
        CHECK_THROWS_AS(parse_corpus_spec(bad), Error);
}

TEST_CASE("exhaustive corpus counts labelled connected graphs")
{
    // 1, 4, 38, 728, 26704 connected labelled graphs on 2..6 vertices.
    CHECK(generate_corpus(parse_corpus_spec("all:4")).size() == 43);
    auto six = generate_corpus(parse_corpus_spec("all:6"));
    CHECK(six.size() == 27475);
    std::unordered_set<Graph, GraphHash> seen(six.begin(), six.end());
    CHECK(seen.size() == six.size());
    for (const auto& g : six)
        REQUIRE(is_connected(g));
}

TEST_CASE("random corpus matches an independent reimplementation")
{
    // graph6 strings produced by a separate Python implementation of the
    // documented sampling procedure.
    auto a = generate_corpus(parse_corpus_spec("random:3,6,0.5,42"));
    REQUIRE(a.size() == 3);
    CHECK(emit_graph6(a[0]) == "EUj_");
    CHECK(emit_graph6(a[1]) == "E~PG");
    CHECK(emit_graph6(a[2]) == "E\\O_");
    auto b = generate_corpus(parse_corpus_spec("random:2,8,0.3,7"));
    REQUIRE(b.size() == 2);
    CHECK(emit_graph6(b[0]) == "GA`fGS");
    CHECK(emit_graph6(b[1]) == "GSDLpO");

    CHECK(generate_corpus(parse_corpus_spec("random:5,9,0.3,1")) ==
          generate_corpus(parse_corpus_spec("random:5,9,0.3,1")));
    CHECK(generate_corpus(parse_corpus_spec("random:5,9,0.3,1")) !=
          generate_corpus(parse_corpus_spec("random:5,9,0.3,2")));
}

TEST_CASE("family and file corpora")
{
    auto f = generate_corpus(parse_corpus_spec("families:complete:4;path:5;star:3"));
    REQUIRE(f.size() == 3);
    CHECK(f[0].order() == 4);
    CHECK(f[1].size() == 4);

    const char* path = "troman_test_corpus.g6";
    {
        std::ofstream out(path);
        out << "# comment\nA_\n\nCl\nB?\n"; // B? has isolated vertices
    }
    auto g = generate_corpus(parse_corpus_spec(std::string("file:") + path));
    std::remove(path);
    REQUIRE(g.size() == 2);
    CHECK(emit_graph6(g[1]) == "Cl");
    CHECK_THROWS_AS(generate_corpus(parse_corpus_spec("file:/nonexistent/x.g6")), Error);
}

TEST_CASE("theorem selection")
{
    CHECK(select_theorems("all").size() == theorem_registry().size());
    auto s = select_theorems("T5,T1");
    REQUIRE(s.size() == 2);
    CHECK(s[0].id == "T5");
    CHECK_THROWS_AS(select_theorems("T1,T999"), Error);
}

TEST_CASE("registry ids match the documentation table")
{
    std::ifstream in(TROMAN_SOURCE_DIR "/docs/theorems.md");
    REQUIRE(in);
    std::set<std::string> documented;
    std::regex row(R"(^\|\s*(T\d+)\s*\|)");
    std::string line;
    while (std::getline(in, line)) {
        std::smatch m;
        if (std::regex_search(line, m, row)) {
            CHECK_MESSAGE(documented.insert(m[1]).second, "duplicate row " << m[1]);
        }
    }
    std::set<std::string> registered;
    for (const auto& t : theorem_registry()) {
        CHECK_MESSAGE(registered.insert(t.id).second, "duplicate id " << t.id);
        CHECK(!t.statement.empty());
    }
    CHECK(documented == registered);
}

TEST_CASE("suite examples")
{
    auto five = generate_corpus(parse_corpus_spec("all:5"));
    auto r1 = run_suite(five, select_theorems("T1"), 1);
    CHECK(r1[0].status == TheoremStatus::Pass);
    CHECK(r1[0].pass == 771);
    CHECK(r1[0].fail == 0);

    auto six = generate_corpus(parse_corpus_spec("all:6"));
    auto r5 = run_suite(six, select_theorems("T5"), 1);
    CHECK(r5[0].status == TheoremStatus::Pass);
    CHECK(r5[0].fail == 0);

    auto k = generate_corpus(
        parse_corpus_spec("families:complete:4;complete:5;complete:6;complete:7;complete:8"));
    auto r28 = run_suite(k, select_theorems("T28"), 1);
    CHECK(r28[0].status == TheoremStatus::Pass);
    CHECK(r28[0].pass == 5);
}

TEST_CASE("reports are deterministic across thread counts")
{
    auto spec = parse_corpus_spec("random:40,7,0.4,11");
    auto graphs = generate_corpus(spec);
    auto theorems = select_theorems("T1,T6,T12,T13,T21");
    auto a = suite_report_json(spec, graphs.size(), run_suite(graphs, theorems, 1));
    auto b = suite_report_json(spec, graphs.size(), run_suite(graphs, theorems, 3));
    CHECK(a == b);
    CHECK(a.find("\"seed\": 11") != std::string::npos);
    CHECK(a.find("\"splitmix64\"") != std::string::npos);
}

TEST_CASE("injected failures carry a replayable counterexample")
{
    // Claims every graph with a vertex of degree 3 fails.
    Theorem bogus{"X1", "no vertex of degree 3", [](const Graph& g, EvalContext&) {
                      for (Vertex v = 0; v < g.order(); ++v)
                          if (g.degree(v) == 3)
                              return Verdict::fail("degree 3 at " + std::to_string(v));
                      return Verdict::pass();
                  }};
    Theorem throws_error{"X2", "throws", [](const Graph&, EvalContext&) -> Verdict {
                             throw Error("cap");
                         }};
    Theorem throws_inconsistency{"X3", "inconsistent", [](const Graph& g, EvalContext&) -> Verdict {
                                     throw InconsistencyError("boom", emit_graph6(g));
                                 }};
    auto graphs = generate_corpus(parse_corpus_spec("all:5"));
    auto rs = run_suite(graphs, {bogus, throws_error, throws_inconsistency}, 2);

    const auto& r = rs[0];
    CHECK(r.status == TheoremStatus::Fail);
    REQUIRE(r.counterexample);
    // First failing graph in corpus order.
    std::size_t first = 0;
    while (max_degree(graphs[first]) < 3)
        ++first;
    CHECK(*r.counterexample == emit_graph6(graphs[first]));
    EvalContext ctx;
    CHECK(bogus.check(parse_graph6(*r.counterexample), ctx).kind == Verdict::Kind::Fail);
    CHECK(r.pass + r.fail == static_cast<long>(graphs.size()));

    CHECK(rs[1].status == TheoremStatus::Skipped);
    CHECK(rs[1].skipped == static_cast<long>(graphs.size()));
    CHECK(rs[2].status == TheoremStatus::Fail);
    CHECK(rs[2].detail.find("boom") != std::string::npos);

    auto json = suite_report_json(parse_corpus_spec("all:5"), graphs.size(), rs);
    CHECK(json.find("\"all_passed\": false") != std::string::npos);
    CHECK(json.find("\"seed\": null") != std::string::npos);
}

TEST_CASE("individual theorems on named graphs")
{
    const Graph petersen = parse_graph6("IheA@GUAo");
    CHECK(check_one("T26", petersen).kind == Verdict::Kind::Pass);
    // C_5 with a hanging P_2 (remainder K_2) and with one pendant (remainder K_1).
    CHECK(check_one("T26", parse_graph6("Fhe?G")).kind == Verdict::Kind::Pass);
    CHECK(check_one("T26", parse_graph6("Ehe?")).kind == Verdict::Kind::Vacuous);
    CHECK(check_one("T29", generate_graph(CompleteBipartite{2, 3})).kind == Verdict::Kind::Pass);
    CHECK(check_one("T29", generate_graph(CompleteBipartite{2, 2})).kind == Verdict::Kind::Vacuous);
    CHECK(check_one("T30", generate_graph(Broom{4, 3})).kind == Verdict::Kind::Pass);
    CHECK(check_one("T30", generate_graph(DoubleBroom{4, 2, 3})).kind == Verdict::Kind::Pass);
    CHECK(check_one("T30", generate_graph(Spider{1, 3})).kind == Verdict::Kind::Vacuous);
    CHECK(check_one("T20", generate_graph(Spider{2, 4})).kind == Verdict::Kind::Pass);
    CHECK(check_one("T28", generate_graph(Wheel{5})).kind == Verdict::Kind::Pass);
}

TEST_CASE("literal statements with counterexamples")
{
    // Checked independently by brute force in Python.
    // Universal-vertex formula: every star has b_tR infinite.
    CHECK(check_one("T9", generate_graph(Star{3})).kind == Verdict::Kind::Fail);
    CHECK(check_one("T28", generate_graph(Complete{3})).kind == Verdict::Kind::Fail);
    // b = 1 by deleting the pendant edge 04, which isolates 4; b_t = 2.
    CHECK(check_one("T12", parse_graph6("Eza?")).kind == Verdict::Kind::Fail);
    // H = G - 14 keeps gamma_tR = 4 but b_tR(H) = 2 > b_tR(G) = 1.
    CHECK(check_one("T18", parse_graph6("E^q?")).kind == Verdict::Kind::Fail);
    // gamma_t = 3, gamma_tR = 5, b_t = 1 (edge 04), b_tR = 2.
    CHECK(check_one("T14", parse_graph6("FJ|s?")).kind == Verdict::Kind::Fail);
}
