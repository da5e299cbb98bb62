// Acceptance criteria 1-6. Prints one PASS/FAIL line per criterion followed
// by indented details; exits 1 if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "troman/bondage.hpp"
#include "troman/families.hpp"
#include "troman/graph_io.hpp"
#include "troman/harness.hpp"
#include "troman/invariants.hpp"
#include "troman/reduction.hpp"

using namespace troman;

namespace {

struct Criterion {
    Criterion(int n, std::string t) : number(n), title(std::move(t)) {}

    int number;
    std::string title;
    long checked = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what)
    {
        ++checked;
        if (!ok)
            failures.push_back(what);
    }
};

std::string show(const BondageResult& r)
{
    return r.is_finite() ? std::to_string(r.value()) : std::string("inf");
}

std::string label(const FamilySpec& f) { return format_family_spec(f); }

void report(const Criterion& c, double seconds)
{
    std::cout << "criterion " << c.number << ": " << (c.failures.empty() ? "PASS" : "FAIL") << "  "
              << c.title << "  (" << c.checked << " checks, " << c.failures.size() << " failed, "
              << seconds << " s)\n";
    for (const auto& f : c.failures)
        std::cout << "    FAIL " << f << "\n";
    for (const auto& n : c.notes)
        std::cout << "    note " << n << "\n";
}

template <class F>
bool timed(Criterion c, F&& body)
{
    auto t0 = std::chrono::steady_clock::now();
    body(c);
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(c, s);
    return c.failures.empty();
}

// ---------------------------------------------------------------------------

void family_values(Criterion& c)
{
    auto finite = [&](const FamilySpec& f, int want) {
        auto r = b_tR(generate_graph(f));
        c.expect(r.is_finite() && r.value() == want,
                 label(f) + ": b_tR = " + show(r) + ", expected " + std::to_string(want));
    };
    for (int n = 3; n <= 8; ++n)
        finite(Complete{n}, (n + 1) / 2);
    for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {2, 4}, {3, 3}})
        finite(CompleteBipartite{p, q}, p);
    for (int len = 4; len <= 7; ++len)
        finite(Wheel{len}, 1);
    for (auto [k, t] : std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {3, 4}, {2, 5}})
        finite(Spider{k, t}, t - k);
    finite(Broom{3, 2}, 1);
    finite(Broom{4, 3}, 1);
    finite(DoubleBroom{3, 2, 2}, 1);
    finite(DoubleBroom{4, 2, 3}, 1);

    // Infinite members: the certificate must tag the single component with a
    // class the graph belongs to, and exhaustive search must agree.
    using FC = FamilyClass;
    auto infinite = [&](const FamilySpec& f, std::set<FC> allowed) {
        Graph g = generate_graph(f);
        auto r = b_tR(g);
        bool ok = r.is_infinite() && r.certificate().size() == 1 &&
                  r.certificate()[0].component == 0 &&
                  allowed.count(r.certificate()[0].match.cls) == 1;
        std::string cls = r.is_infinite() && !r.certificate().empty()
                              ? std::string(family_class_name(r.certificate()[0].match.cls))
                              : std::string("none");
        c.expect(ok, label(f) + ": b_tR = " + show(r) + ", certificate class " + cls);
        if (g.size() <= 16)
            c.expect(btR_infinite_by_exhaustion(g, 16),
                     label(f) + ": exhaustive search found an increasing edge set");
    };
    infinite(Path{5}, {FC::Path, FC::HealthySpider});
    for (int n = 6; n <= 8; ++n)
        infinite(Path{n}, {FC::Path});
    for (int n = 4; n <= 8; ++n)
        infinite(Cycle{n}, {FC::Cycle});
    for (int t = 2; t <= 5; ++t)
        infinite(Star{t}, {FC::Star});
    for (int t = 2; t <= 4; ++t)
        infinite(Spider{0, t}, t == 2 ? std::set<FC>{FC::HealthySpider, FC::Path}
                                      : std::set<FC>{FC::HealthySpider});
    infinite(Spider{1, 3}, {FC::WoundedSpiderOneFoot});
    infinite(Corona{generate_graph(Complete{3})}, {FC::Corona});
    infinite(Corona{generate_graph(Path{3})}, {FC::Corona, FC::WoundedSpiderOneFoot});
    infinite(FamilyG{1, 1}, {FC::FamilyG});
    infinite(FamilyH{0, 2, 3}, {FC::FamilyH});
}

void closed_forms(Criterion& c)
{
    auto expect = [&](const FamilySpec& f, int want) {
        int got = gamma_tR(generate_graph(f)).weight;
        c.expect(got == want, label(f) + ": gamma_tR = " + std::to_string(got) + ", expected " +
                                  std::to_string(want));
    };
    for (int n = 3; n <= 9; ++n) {
        expect(Path{n}, n);
        expect(Cycle{n}, n);
    }
    for (int r = 2; r <= 4; ++r)
        expect(Spider{0, r}, 2 * r + 1);
    for (int n = 3; n <= 12; ++n)
        expect(Complete{n}, 3);
    for (const FamilySpec& base : {FamilySpec{Complete{2}}, FamilySpec{Path{3}}, FamilySpec{Cycle{4}}}) {
        Graph h = generate_graph(base);
        expect(Corona{h}, 2 * h.order());
    }
}

void oracle_equivalence(Criterion& c)
{
    auto compare = [&](const Graph& g) {
        int fast = invariant_value(Invariant::GammaTR, g);
        auto sol = gamma_tR(g);
        int slow = gamma_tR_oracle(g);
        c.expect(fast == slow && sol.weight == slow && is_trdf(g, sol.witness) &&
                     sol.witness.weight() == slow,
                 emit_graph6(g) + ": solver " + std::to_string(fast) + ", oracle " +
                     std::to_string(slow));
    };
    for (const auto& g : generate_corpus(parse_corpus_spec("all:6")))
        compare(g);
    for (int n = 7; n <= 10; ++n) {
        std::string spec = "random:50," + std::to_string(n) + ",0.4," + std::to_string(n);
        for (const auto& g : generate_corpus(parse_corpus_spec(spec)))
            compare(g);
        c.notes.push_back("random corpus " + spec);
    }
}

void suite_criterion(Criterion& c, const std::vector<TheoremResult>& results,
                     const std::vector<std::pair<std::string, std::string>>& wanted)
{
    for (const auto& [id, name] : wanted) {
        for (const auto& r : results) {
            if (r.id != id)
                continue;
            ++c.checked;
            std::ostringstream line;
            line << id << " " << name << ": " << status_name(r.status) << " (pass " << r.pass
                 << ", vacuous " << r.vacuous << ", skipped " << r.skipped << ", fail " << r.fail
                 << ")";
            if (r.status == TheoremStatus::Fail) {
                line << " counterexample " << *r.counterexample << " [" << r.detail << "]";
                c.failures.push_back(line.str());
            } else {
                c.notes.push_back(line.str());
            }
        }
    }
}

const std::vector<std::pair<std::string, std::string>> kCharacterizations = {
    {"T4", "gamma_tR = n recognizer"},
    {"T5", "b_tR = inf recognizer vs exhaustion (m <= 12)"},
    {"T21", "b_tR = 1 characterization"},
    {"T11", "gamma_tR = 4 characterization"},
    {"T8", "gamma_tR = 3 iff Delta = n - 1"},
    {"T9", "b_tR = ceil(t/2) for t universal vertices"},
};

const std::vector<std::pair<std::string, std::string>> kBounds = {
    {"T1", "inequality chains"},
    {"T6", "edge-addition sandwich"},
    {"T13", "b_tR-set sandwich"},
    {"T12", "conditional bondage comparisons (10 parts)"},
    {"T14", "gamma_tR = gamma_t + 2 => b_tR <= b_t"},
    {"T15", "gamma_tR = 4 => b_tR = b_t"},
    {"T16", "gamma_tR = 3 beta => b_tR >= max(delta, b)"},
    {"T17", "gamma_tR = 4 => b_tR <= n - 1"},
    {"T18", "spanning subgraphs with 1 or 2 edges removed"},
    {"T19", "adjacent supports"},
    {"T23", "4-clique bound"},
    {"T25", "strong support bound n - 4"},
    {"T26", "girth-cycle bound"},
    {"T7", "support vertices positive in every optimal function"},
    {"T22", "unique optimal function"},
    {"T27", "edge-cut bound 3 Delta + k - 4"},
};

std::vector<Theorem> ids_of(const std::vector<std::pair<std::string, std::string>>& list)
{
    std::string ids;
    for (const auto& [id, name] : list)
        ids += (ids.empty() ? "" : ",") + id;
    return select_theorems(ids);
}

void characterizations(Criterion& c, const std::vector<Graph>& corpus)
{
    suite_criterion(c, run_suite(corpus, ids_of(kCharacterizations)), kCharacterizations);
}

void bounds(Criterion& c, const std::vector<Graph>& corpus)
{
    suite_criterion(c, run_suite(corpus, ids_of(kBounds)), kBounds);

    // Sharpness of the b_tR-set sandwich.
    auto tight = [&](const FamilySpec& f, bool upper) {
        Graph g = generate_graph(f);
        bool seen = false;
        for (const auto& set : all_btR_sets(g)) {
            auto r = sandwich_check(g, set);
            seen = seen || (upper ? r.upper_tight : r.lower_tight);
        }
        c.expect(seen, label(f) + ": no b_tR-set attains the " +
                           std::string(upper ? "upper (+2)" : "lower (+1)") + " bound");
    };
    tight(Bistar{2, 3}, true);
    tight(Bistar{1, 4}, false);

    // The girth bound never applies on six vertices; exercise it on a few
    // larger graphs where its hypothesis holds.
    std::vector<Graph> extra = {parse_graph6("IheA@GUAo"), parse_graph6("Fhe?G")};
    for (int n = 8; n <= 10; ++n)
        for (const auto& g : generate_corpus(
                 parse_corpus_spec("random:60," + std::to_string(n) + ",0.25," + std::to_string(n))))
            extra.push_back(g);
    auto r = run_suite(extra, select_theorems("T26"));
    ++c.checked;
    std::ostringstream line;
    line << "T26 on supplementary girth corpus (Petersen, C_5 with hanging P_2, random:60,n,0.25,n "
            "for n = 8..10): "
         << status_name(r[0].status) << " (pass " << r[0].pass << ", fail " << r[0].fail << ")";
    if (r[0].status == TheoremStatus::Fail)
        c.failures.push_back(line.str() + " counterexample " + *r[0].counterexample);
    else
        c.notes.push_back(line.str());
}

CnfFormula clause_pattern(int signs)
{
    CnfFormula f;
    f.num_vars = 3;
    f.clauses.push_back({Literal{0, (signs & 1) != 0}, Literal{1, (signs & 2) != 0},
                         Literal{2, (signs & 4) != 0}});
    return f;
}

void reduction(Criterion& c, bool slow)
{
    auto t0 = std::chrono::steady_clock::now();
    auto verify = [&](const std::string& name, const CnfFormula& f) {
        ClaimReport r = verify_claims(f);
        const int n = f.num_vars, m = static_cast<int>(f.clauses.size());
        c.expect(r.order == 7 * n + m + 4 && r.size == 10 * n + 4 * m + 5,
                 name + ": order " + std::to_string(r.order) + ", size " + std::to_string(r.size));
        c.expect(r.gamma_tR == 4 * n + 3 || r.gamma_tR == 4 * n + 4,
                 name + ": gamma_tR = " + std::to_string(r.gamma_tR) + " outside {4n+3, 4n+4}");
        c.expect(r.claim1, name + ": claim 1");
        c.expect(r.claim2, name + ": claim 2");
        c.expect(r.claim3, name + ": claim 3");
        for (const auto& p : r.problems)
            c.notes.push_back(name + ": " + p);
        return r;
    };
    for (int s = 0; s < 8; ++s)
        verify("single clause pattern " + std::to_string(s), clause_pattern(s));

    // Each clause on three distinct variables excludes one of the eight
    // assignments, so two clauses never make an unsatisfiable formula.
    int satisfiable = 0;
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            CnfFormula f = clause_pattern(a);
            f.clauses.push_back(clause_pattern(b).clauses[0]);
            satisfiable += sat_brute_force(f);
        }
    c.expect(satisfiable == 64, "two-clause formulas on 3 variables: expected all 64 satisfiable");
    c.notes.push_back("no unsatisfiable 2-clause instance on 3 variables exists (" +
                      std::to_string(satisfiable) +
                      "/64 satisfiable); the unsatisfiable instance used is all 8 sign patterns");
    CnfFormula unsat;
    unsat.num_vars = 3;
    for (int s = 0; s < 8; ++s)
        unsat.clauses.push_back(clause_pattern(s).clauses[0]);
    auto r = verify("all eight patterns (unsatisfiable)", unsat);
    c.expect(!r.sat && r.gamma_tR == 16, "unsatisfiable instance: gamma_tR = " +
                                             std::to_string(r.gamma_tR) + ", expected 16");

    double fast = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.expect(fast < 300.0, "fast tier took " + std::to_string(fast) + " s (limit 300 s)");

    if (slow) {
        auto f = parse_dimacs("p cnf 4 2\n1 2 -3 0\n2 -3 -4 0\n");
        auto s = verify("four-variable instance (n = 4, m = 2)", f);
        c.expect(s.sat && s.gamma_tR == 19, "four-variable instance: gamma_tR = " +
                                                std::to_string(s.gamma_tR) + ", expected 19");
    } else {
        c.notes.push_back("slow tier (four-variable instance, n = 4, m = 2) not run; pass --slow");
    }
}

} // namespace

int main(int argc, char** argv)
{
    bool slow = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--slow") == 0) {
            slow = true;
        } else {
            std::cerr << "usage: acceptance [--slow]\n";
            return 2;
        }
    }
    std::cout.setf(std::ios::fixed);
    std::cout.precision(2);

    const auto corpus = generate_corpus(parse_corpus_spec("all:6"));
    bool ok = true;
    ok &= timed(Criterion(1, "family value table"), family_values);
    ok &= timed(Criterion(2, "gamma_tR closed forms"), closed_forms);
    ok &= timed(Criterion(3, "decomposition solver equals 3^n oracle"), oracle_equivalence);
    ok &= timed(Criterion(4, "characterization equivalences on all connected graphs, n <= 6"),
                [&](Criterion& c) { characterizations(c, corpus); });
    ok &= timed(Criterion(5, "bound suite on all connected graphs, n <= 6"),
                [&](Criterion& c) { bounds(c, corpus); });
    ok &= timed(Criterion(6, std::string("reduction verification") + (slow ? " (with slow tier)" : "")),
                [&](Criterion& c) { reduction(c, slow); });
    if (slow) {
        // Beyond the criteria: the same theorem ids on every connected graph
        // with 7 vertices. Printed for information only.
        auto t0 = std::chrono::steady_clock::now();
        auto seven = generate_corpus(parse_corpus_spec("all:7"));
        seven.erase(std::remove_if(seven.begin(), seven.end(),
                                   [](const Graph& g) { return g.order() < 7; }),
                    seven.end());
        auto list = kCharacterizations;
        list.insert(list.end(), kBounds.begin(), kBounds.end());
        auto results = run_suite(seven, ids_of(list));
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << "extra: criteria 4 and 5 theorems on all " << seven.size()
                  << " connected graphs with n = 7 (" << s << " s), not part of any verdict\n";
        for (const auto& r : results) {
            std::cout << "    " << r.id << " " << status_name(r.status) << " (pass " << r.pass
                      << ", vacuous " << r.vacuous << ", skipped " << r.skipped << ", fail "
                      << r.fail << ")";
            if (r.counterexample)
                std::cout << " counterexample " << *r.counterexample << " [" << r.detail << "]";
            std::cout << "\n";
        }
    }
    std::cout << (ok ? "all criteria passed\n" : "some criteria failed\n");
    return ok ? 0 : 1;
}
