#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "troman/graph.hpp"

namespace troman {

// ---------------------------------------------------------------------------
// Family descriptors. Vertex numbering is fixed per family (see generate()).

struct Complete { int n; };
struct Path { int n; };
struct Cycle { int n; };
/// Hub plus a cycle of the given length.
struct Wheel { int cycle_len; };
struct CompleteBipartite { int p, q; };
/// K_{1,t}.
struct Star { int t; };
/// Two adjacent centres with r and s leaves.
struct Bistar { int r, s; };
/// Star S_t with t-k edges subdivided once (k wounded feet).
struct Spider { int k, t; };
/// Path x_1..x_t with d pendants at x_t.
struct Broom { int t, d; };
/// Path x_1..x_t with d pendants at x_1 and d2 at x_t.
struct DoubleBroom { int t, d, d2; };
struct Corona { Graph base; };

/// How a copy of P_3 is attached to a cycle vertex v.
enum class P3Attachment {
    Identify, ///< v is one end of the P_3 (two new vertices)
    Pendant,  ///< new path a-b-c plus the edge v-a (three new vertices)
};

/// C_4 = (v1,v2,v3,v4) with k1 copies of P_3 at v1 and k2 at v2.
struct FamilyG {
    int k1, k2;
    P3Attachment attachment = P3Attachment::Identify;
};

/// Bistar with a and b leaves, pendant edges subdivided once and the central
/// edge subdivided r times.
struct FamilyH { int r, a, b; };

using FamilySpec = std::variant<Complete, Path, Cycle, Wheel, CompleteBipartite, Star, Bistar,
                                Spider, Broom, DoubleBroom, Corona, FamilyG, FamilyH>;

/// Throws Error when a parameter is out of range.
void validate(const FamilySpec& spec);

struct GeneratedGraph {
    Graph graph;
    /// roles[v] names the part vertex v plays ("head", "hub", "x3", ...).
    std::vector<std::string> roles;
};

/// Numbering: defining vertices first (head, hub, centres, path x_1..x_t,
/// cycle v1..v4), then peripherals in definition order.
GeneratedGraph generate(const FamilySpec& spec);
inline Graph generate_graph(const FamilySpec& spec) { return generate(spec).graph; }

// ---------------------------------------------------------------------------

struct ExpectedBondage {
    enum class Kind { Unknown, Finite, Infinite };
    Kind kind = Kind::Unknown;
    int value = 0;

    static ExpectedBondage unknown() { return {}; }
    static ExpectedBondage finite(int v) { return {Kind::Finite, v}; }
    static ExpectedBondage infinite() { return {Kind::Infinite, 0}; }
};

struct ExpectedValue {
    std::optional<int> gamma_tR; ///< nullopt: no closed form
    ExpectedBondage b_tR;
    std::string provenance;
};

ExpectedValue expected(const FamilySpec& spec);

// ---------------------------------------------------------------------------
// Text form used by the CLI: "spider:2,4", "corona:<graph6>", ...

FamilySpec parse_family_spec(std::string_view text);
std::string format_family_spec(const FamilySpec& spec);

// ---------------------------------------------------------------------------
// Structural recognizers. All take a connected graph and throw otherwise.

enum class FamilyClass {
    PathOrCycle,
    Path,
    Cycle,
    Star,
    SubdividedStar,
    HealthySpider,
    WoundedSpiderOneFoot,
    Corona,
    FamilyG,
    FamilyH,
};

std::string_view family_class_name(FamilyClass c);

struct ClassMatch {
    FamilyClass cls;
    /// Spider: {k, t}. FamilyG: {k1, k2}. FamilyH: {r, a, b}. Star: {t}.
    std::vector<int> params;
    /// Corona only: the base graph.
    std::optional<Graph> base;
};

bool is_path_graph(const Graph& g);
bool is_cycle_graph(const Graph& g);
/// K_{1,t} with t >= 2.
std::optional<int> match_star(const Graph& g);
/// Spider S(k,t) with t >= 2. want_k < 0 accepts any k.
std::optional<Spider> match_spider(const Graph& g, int want_k = -1);
std::optional<Graph> match_corona(const Graph& g);
/// Members of the unicyclic family under the Identify attachment.
std::optional<FamilyG> match_family_g(const Graph& g);
std::optional<FamilyH> match_family_h(const Graph& g);

/// Connected graphs whose total Roman domination number equals the order.
/// Tags tried in the order PathOrCycle, Corona, SubdividedStar, FamilyG,
/// FamilyH.
std::optional<ClassMatch> recognize_gamma_tR_equals_n(const Graph& g);

/// Connected graphs in the infinite-bondage list. Tags tried in the order
/// Star, HealthySpider, WoundedSpiderOneFoot, Path, Cycle, Corona, FamilyG,
/// FamilyH.
std::optional<ClassMatch> recognize_btR_infinite_class(const Graph& g);

} // namespace troman
