#pragma once

#include <compare>
#include <optional>
#include <string_view>
#include <vector>

#include "troman/families.hpp"
#include "troman/graph.hpp"
#include "troman/invariants.hpp"

namespace troman {

/// One component of an infinite-bondage certificate.
struct ComponentTag {
    int component; ///< index into components(g)
    ClassMatch match;
};

using InfinityCertificate = std::vector<ComponentTag>;

/// Finite(value, witness) or Infinite(certificate).
class BondageResult {
public:
    static BondageResult finite(int value, EdgeSet witness)
    {
        BondageResult r;
        r.finite_ = true;
        r.value_ = value;
        r.witness_ = std::move(witness);
        return r;
    }
    static BondageResult infinite(InfinityCertificate cert = {})
    {
        BondageResult r;
        r.certificate_ = std::move(cert);
        return r;
    }

    bool is_finite() const { return finite_; }
    bool is_infinite() const { return !finite_; }
    /// Throws on Infinite.
    int value() const;
    const EdgeSet& witness() const { return witness_; }
    /// Empty when infinity was established by exhaustion.
    const InfinityCertificate& certificate() const { return certificate_; }

    /// Infinite compares above every Finite and equal to Infinite.
    friend std::strong_ordering operator<=>(const BondageResult& a, const BondageResult& b)
    {
        if (a.finite_ != b.finite_)
            return a.finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
        if (!a.finite_)
            return std::strong_ordering::equal;
        return a.value_ <=> b.value_;
    }
    friend bool operator==(const BondageResult& a, const BondageResult& b)
    {
        return (a <=> b) == std::strong_ordering::equal;
    }

private:
    bool finite_ = false;
    int value_ = 0;
    EdgeSet witness_;
    InfinityCertificate certificate_;
};

enum class BondageKind {
    Plain,     ///< b: domination number
    Total,     ///< b_t
    Roman,     ///< b_R
    QuasiTotal,///< b_qtR
    TotalRoman,///< b_tR
};

std::string_view bondage_name(BondageKind kind);
Invariant bondage_invariant(BondageKind kind);
/// b_t, b_qtR and b_tR keep G - E' free of isolated vertices.
bool keeps_isolate_free(BondageKind kind);

/// Minimum |E'| with gamma(G - E') > gamma(G), searched layer by layer over
/// k-subsets of E in lexicographic order; the first success is the witness.
/// For b_tR, membership in the infinite classes is decided structurally
/// first. Pass a cache to share invariant values across calls.
BondageResult bondage(const Graph& g, BondageKind kind, InvariantCache* cache = nullptr);

inline BondageResult b(const Graph& g, InvariantCache* c = nullptr)
{
    return bondage(g, BondageKind::Plain, c);
}
inline BondageResult b_t(const Graph& g, InvariantCache* c = nullptr)
{
    return bondage(g, BondageKind::Total, c);
}
inline BondageResult b_R(const Graph& g, InvariantCache* c = nullptr)
{
    return bondage(g, BondageKind::Roman, c);
}
inline BondageResult b_qtR(const Graph& g, InvariantCache* c = nullptr)
{
    return bondage(g, BondageKind::QuasiTotal, c);
}
inline BondageResult b_tR(const Graph& g, InvariantCache* c = nullptr)
{
    return bondage(g, BondageKind::TotalRoman, c);
}

/// Certificate when every component lies in one of the infinite classes.
std::optional<InfinityCertificate> is_btR_infinite_structural(const Graph& g);

/// Test oracle: tries every E' ⊆ E with G - E' isolate-free. True when none
/// raises gamma_tR. Refuses graphs with more than `max_edges` edges.
bool btR_infinite_by_exhaustion(const Graph& g, int max_edges = 16,
                                InvariantCache* cache = nullptr);

/// Every minimum edge set realising b_tR (empty when b_tR is infinite).
std::vector<EdgeSet> all_btR_sets(const Graph& g, InvariantCache* cache = nullptr);

struct SandwichReport {
    int gamma_tR = 0;
    int after = 0; ///< gamma_tR(G - B)
    bool holds = false;
    bool lower_tight = false; ///< after == gamma_tR + 1
    bool upper_tight = false; ///< after == gamma_tR + 2
};

/// Bounds gamma_tR(G - B) for a given b_tR-set B.
SandwichReport sandwich_check(const Graph& g, const EdgeSet& btR_set,
                              InvariantCache* cache = nullptr);
/// Same, using the witness returned by b_tR. Throws when b_tR is infinite.
SandwichReport sandwich_check(const Graph& g, InvariantCache* cache = nullptr);

struct EdgeCharacterization {
    bool holds = false;
    std::optional<Edge> edge;
};

/// Decides b_tR = 1 from the set of all optimal TRDFs: some edge uv keeps
/// G - uv isolate-free and every optimal f either leaves an isolated vertex
/// in G[V_1 ∪ V_2] - uv or has one endpoint in V_2 and the other in
/// epn(endpoint, V_2) ∩ V_0.
EdgeCharacterization btR_equals_one_characterization(const Graph& g, int cap = 14);

} // namespace troman
