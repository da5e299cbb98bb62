#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "troman/graph.hpp"
#include "troman/labeling.hpp"

namespace troman {

/// The six domination-type parameters the toolkit computes exactly.
enum class Invariant : std::uint8_t {
    Gamma,    ///< domination number
    GammaT,   ///< total domination number
    GammaR,   ///< Roman domination number
    GammaQtR, ///< quasi-total Roman domination number
    GammaTR,  ///< total Roman domination number
    Beta,     ///< vertex cover number
};

inline constexpr std::array<Invariant, 6> kAllInvariants = {
    Invariant::Gamma, Invariant::GammaT, Invariant::GammaR,
    Invariant::GammaQtR, Invariant::GammaTR, Invariant::Beta};

std::string_view invariant_name(Invariant inv);
/// gamma_t and gamma_qtR and gamma_tR need an isolate-free graph.
bool requires_isolate_free(Invariant inv);

// ---------------------------------------------------------------------------
// Predicates. Each throws if the labeling length differs from the order.

/// Every 0 has a neighbor labelled 2.
bool is_rdf(const Graph& g, const VertexLabeling& f);
/// RDF in which every vertex labelled 2 has a positive neighbor.
bool is_qtrdf(const Graph& g, const VertexLabeling& f);
/// RDF whose positive vertices induce a subgraph without isolated vertices.
bool is_trdf(const Graph& g, const VertexLabeling& f);

bool is_dominating_set(const Graph& g, const VertexSet& s);
bool is_total_dominating_set(const Graph& g, const VertexSet& s);
bool is_vertex_cover(const Graph& g, const VertexSet& s);

// ---------------------------------------------------------------------------
// Exact solvers. Witnesses are the lexicographically smallest optimal
// labeling (or set indicator vector). Disconnected inputs are solved per
// component and summed.

struct LabelingSolution {
    int weight = 0;
    VertexLabeling witness;
};

struct SetSolution {
    int size = 0;
    VertexSet witness;
};

/// Minimum TRDF weight. The search enumerates candidate V_2 sets by
/// increasing size, forces V \ N[V_2] to 1, and completes totality with a
/// minimum cover of the positive vertices left isolated.
LabelingSolution gamma_tR(const Graph& g);
LabelingSolution gamma_qtR(const Graph& g);
LabelingSolution gamma_R(const Graph& g);
SetSolution gamma(const Graph& g);
SetSolution gamma_t(const Graph& g);
SetSolution beta(const Graph& g);

/// Value-only variant; skips witness tie-breaking.
int invariant_value(Invariant inv, const Graph& g);

/// Every minimum-weight TRDF, sorted lexicographically. Refuses graphs with
/// more than `cap` vertices.
std::vector<VertexLabeling> all_gamma_tR_functions(const Graph& g, int cap = 14);

// ---------------------------------------------------------------------------
// Brute-force oracles. These share nothing with the solvers above except the
// public predicates, and exist to cross-check them.

/// 3^n enumeration filtered by is_trdf; n <= 12.
int gamma_tR_oracle(const Graph& g);
int gamma_qtR_oracle(const Graph& g);
int gamma_R_oracle(const Graph& g);
/// 2^n subset enumeration; n <= 20.
int gamma_oracle(const Graph& g);
int gamma_t_oracle(const Graph& g);
int beta_oracle(const Graph& g);

inline constexpr int kLabelingOracleCap = 12;
inline constexpr int kSubsetOracleCap = 20;

// ---------------------------------------------------------------------------

/// All six parameters of an isolate-free graph plus one optimal witness each.
/// Construction checks the inequality chains
///   γ ≤ β, γ ≤ γ_t, γ_R ≤ γ_qtR ≤ γ_tR, γ_t ≤ γ_tR ≤ 2γ_t,
///   2γ ≤ γ_tR ≤ 3γ, γ ≤ γ_R ≤ 2γ
/// and throws InconsistencyError if one fails.
struct InvariantReport {
    int n = 0;
    int gamma = 0;
    int gamma_t = 0;
    int gamma_R = 0;
    int gamma_qtR = 0;
    int gamma_tR = 0;
    int beta = 0;

    VertexSet dominating_set;
    VertexSet total_dominating_set;
    VertexSet vertex_cover;
    VertexLabeling rdf;
    VertexLabeling qtrdf;
    VertexLabeling trdf;
};

InvariantReport invariant_report(const Graph& g);
/// Chain check used by invariant_report; empty string when all hold.
std::string chain_violation(const InvariantReport& r);

/// Memoised invariant values keyed by the labelled graph. Not thread-safe;
/// give every worker its own instance.
class InvariantCache {
public:
    /// Throws Error when the invariant is undefined on g.
    int value(Invariant inv, const Graph& g);

    std::size_t size() const { return table_.size(); }
    void clear() { table_.clear(); }

private:
    static constexpr std::int16_t kUnknown = -1;
    static constexpr std::int16_t kUndefined = -2;
    using Row = std::array<std::int16_t, kAllInvariants.size()>;
    std::unordered_map<Graph, Row, GraphHash> table_;
};

} // namespace troman
