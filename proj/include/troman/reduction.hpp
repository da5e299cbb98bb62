#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "troman/graph.hpp"

namespace troman {

struct Literal {
    int var;       ///< 0-based
    bool positive; ///< false for the negated literal
    friend bool operator==(const Literal&, const Literal&) = default;
};

/// 3-CNF: every clause has exactly three literals over distinct variables.
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::array<Literal, 3>> clauses;
};

/// Throws Error on a wrong clause width, a bad variable index, a repeated
/// variable inside a clause, or a malformed header.
CnfFormula parse_dimacs(std::string_view text);
/// Same checks for formulas built in code.
void validate(const CnfFormula& f);

/// Exhaustive over 2^n assignments; n <= 24.
bool sat_brute_force(const CnfFormula& f);

enum class RoleKind { U, T, UBar, A, S, B, D, Clause, O, P, Q, R };

struct Role {
    RoleKind kind;
    int index; ///< variable or clause index (0-based); 0 for o, p, q, r
};

/// Graph of the 3-SAT transformation. Gadget i occupies 7i..7i+6 in the
/// order u, t, ū, a, s, b, d; then the clause vertices; then o, p, q, r.
struct ReductionArtifact {
    Graph graph;
    std::vector<Role> roles;
    int n_vars = 0;
    int m_clauses = 0;

    Vertex gadget(int i, RoleKind k) const;
    Vertex clause(int j) const { return 7 * n_vars + j; }
    Vertex special(RoleKind k) const;
    std::string role_name(Vertex v) const;
};

ReductionArtifact build(const CnfFormula& f);

struct ClaimReport {
    int n_vars = 0;
    int m_clauses = 0;
    int order = 0;
    int size = 0;
    bool order_size_ok = false;

    int gamma_tR = 0;
    bool sat = false;
    bool in_range = false;       ///< gamma_tR in {4n+3, 4n+4}
    bool claim1 = false;         ///< gamma_tR = 4n+3 iff satisfiable
    bool claim2 = false;         ///< every G - e isolate-free with gamma_tR <= 4n+4
    bool btR_is_one = false;     ///< some single edge raises gamma_tR
    bool claim3 = false;         ///< gamma_tR = 4n+3 iff b_tR = 1
    bool pq_shortcut = false;    ///< gamma_tR(G - pq) > gamma_tR(G) when gamma_tR = 4n+3
    std::optional<Edge> btR_witness;
    std::vector<std::string> problems; ///< human-readable violations

    bool all_hold() const { return order_size_ok && in_range && claim1 && claim2 && claim3; }
};

/// Computes gamma_tR(G) and gamma_tR(G - e) for every edge e and checks the
/// three claims. b_tR is only decided up to "1" versus "more than 1".
ClaimReport verify_claims(const CnfFormula& f);

} // namespace troman
