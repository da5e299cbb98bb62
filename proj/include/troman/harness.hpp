#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "troman/bondage.hpp"
#include "troman/families.hpp"
#include "troman/graph.hpp"
#include "troman/invariants.hpp"

namespace troman {

// ---------------------------------------------------------------------------
// Corpora

/// SplitMix64 (Steele, Lea, Flood 2014). Stream for seed s starts from
/// state s; each call adds 0x9e3779b97f4a7c15 and mixes.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    /// Uniform in [0, 1) from the top 53 bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

struct CorpusSpec {
    enum class Mode { AllConnected, Random, Families, FromFile };
    Mode mode = Mode::AllConnected;
    int max_n = 0;              ///< AllConnected
    int count = 0;              ///< Random
    int n = 0;                  ///< Random
    double edge_prob = 0.0;     ///< Random
    std::uint64_t seed = 0;     ///< Random
    std::vector<FamilySpec> families;
    std::string path;           ///< FromFile
    std::string text;           ///< the spec as written
};

/// "all:N" | "random:count,n,p,seed" | "families:spec;spec;..." | "file:path".
CorpusSpec parse_corpus_spec(std::string_view text);

/// AllConnected: every labelled connected graph on 2..N vertices, by
/// increasing n and then increasing edge mask over lexicographic pairs.
/// Random: each graph draws one uniform per pair (i<j, lexicographic) and
/// keeps the edge when the draw is below p; disconnected draws are discarded
/// and redrawn from the same stream. Families and files keep their order;
/// graphs with isolated vertices are dropped.
std::vector<Graph> generate_corpus(const CorpusSpec& spec);

// ---------------------------------------------------------------------------
// Theorems

/// Per-worker memo of invariant and bondage values.
class EvalContext {
public:
    int value(Invariant inv, const Graph& g) { return invariants_.value(inv, g); }
    const BondageResult& bondage(BondageKind kind, const Graph& g);
    const BondageResult& btR(const Graph& g) { return bondage(BondageKind::TotalRoman, g); }
    bool btR_finite(const Graph& g) { return btR(g).is_finite(); }
    InvariantCache& invariants() { return invariants_; }

private:
    InvariantCache invariants_;
    std::unordered_map<Graph, std::array<std::optional<BondageResult>, 5>, GraphHash> bondage_;
};

struct Verdict {
    enum class Kind { Pass, Vacuous, Skipped, Fail };
    Kind kind = Kind::Pass;
    std::string detail;

    static Verdict pass() { return {Kind::Pass, {}}; }
    static Verdict vacuous() { return {Kind::Vacuous, {}}; }
    static Verdict skipped(std::string why) { return {Kind::Skipped, std::move(why)}; }
    static Verdict fail(std::string why) { return {Kind::Fail, std::move(why)}; }
};

struct Theorem {
    std::string id;
    std::string statement;
    std::function<Verdict(const Graph&, EvalContext&)> check;
};

/// T1..T31; see docs/theorems.md.
const std::vector<Theorem>& theorem_registry();
/// "all" or a comma list of ids. Throws Error on an unknown id.
std::vector<Theorem> select_theorems(std::string_view ids);

enum class TheoremStatus { Pass, Vacuous, Skipped, Fail };
std::string_view status_name(TheoremStatus s);

struct TheoremResult {
    std::string id;
    std::string statement;
    TheoremStatus status = TheoremStatus::Skipped;
    long pass = 0;
    long vacuous = 0;
    long skipped = 0;
    long fail = 0;
    /// First failing graph in corpus order.
    std::optional<std::string> counterexample;
    std::string detail;
};

/// Worker count from TROMAN_THREADS, else the hardware concurrency.
int default_thread_count();

/// Evaluates every theorem on every graph. Errors thrown by a check count as
/// Skipped for that graph; InconsistencyError counts as Fail. Results are
/// merged in corpus order, so the report does not depend on `threads`.
std::vector<TheoremResult> run_suite(const std::vector<Graph>& graphs,
                                     const std::vector<Theorem>& theorems, int threads = 0);

/// JSON text of a suite run (stable key order, two-space indent).
std::string suite_report_json(const CorpusSpec& corpus, std::size_t graph_count,
                              const std::vector<TheoremResult>& results);

bool all_passed(const std::vector<TheoremResult>& results);

} // namespace troman
