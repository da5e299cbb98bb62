#include "troman/families.hpp"

#include <charconv>
#include <sstream>

#include "troman/graph_io.hpp"

namespace troman {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw Error("invalid family parameters: " + what);
}

/// Accumulates vertices, roles and edges.
class Builder {
public:
    Vertex add(std::string role)
    {
        roles_.push_back(std::move(role));
        return static_cast<Vertex>(roles_.size()) - 1;
    }
    void join(Vertex u, Vertex v) { edges_.push_back({u, v}); }

    GeneratedGraph finish()
    {
        int n = static_cast<int>(roles_.size());
        if (n > Graph::kMaxOrder)
            throw Error("family graph of order " + std::to_string(n) + " exceeds vertex cap");
        return {Graph::from_edge_list(n, edges_), std::move(roles_)};
    }

private:
    std::vector<std::string> roles_;
    std::vector<Edge> edges_;
};

std::string indexed(const char* stem, int i)
{
    return stem + std::to_string(i);
}

/// Path x_1..x_t; returns the vertex ids.
std::vector<Vertex> add_path(Builder& b, int t, const char* stem)
{
    std::vector<Vertex> xs;
    for (int i = 1; i <= t; ++i) {
        xs.push_back(b.add(indexed(stem, i)));
        if (i > 1)
            b.join(xs[i - 2], xs[i - 1]);
    }
    return xs;
}

void attach_p3(Builder& b, Vertex v, P3Attachment how, int copy)
{
    std::string tag = "@v" + std::to_string(copy);
    if (how == P3Attachment::Identify) {
        Vertex x = b.add("mid" + tag);
        Vertex y = b.add("end" + tag);
        b.join(v, x);
        b.join(x, y);
    } else {
        Vertex a = b.add("a" + tag);
        Vertex m = b.add("b" + tag);
        Vertex c = b.add("c" + tag);
        b.join(v, a);
        b.join(a, m);
        b.join(m, c);
    }
}

int ceil_half(int x)
{
    return (x + 1) / 2;
}

int universal_vertices(const Graph& g)
{
    int t = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == g.order() - 1)
            ++t;
    return t;
}

} // namespace

void validate(const FamilySpec& spec)
{
    std::visit(overloaded{
                   [](const Complete& s) { require(s.n >= 1, "complete needs n >= 1"); },
                   [](const Path& s) { require(s.n >= 1, "path needs n >= 1"); },
                   [](const Cycle& s) { require(s.n >= 3, "cycle needs n >= 3"); },
                   [](const Wheel& s) { require(s.cycle_len >= 3, "wheel needs cycle length >= 3"); },
                   [](const CompleteBipartite& s) {
                       require(s.p >= 1 && s.q >= 1, "complete bipartite needs p, q >= 1");
                   },
                   [](const Star& s) { require(s.t >= 2, "star needs t >= 2"); },
                   [](const Bistar& s) { require(s.r >= 1 && s.s >= 1, "bistar needs r, s >= 1"); },
                   [](const Spider& s) {
                       require(s.t >= 2 && s.k >= 0 && s.k <= s.t, "spider needs t >= 2, 0 <= k <= t");
                   },
                   [](const Broom& s) { require(s.t >= 3 && s.d >= 2, "broom needs t >= 3, d >= 2"); },
                   [](const DoubleBroom& s) {
                       require(s.t >= 3 && s.d >= 2 && s.d2 >= 2,
                               "double broom needs t >= 3, d, d' >= 2");
                   },
                   [](const Corona& s) { require(s.base.order() >= 1, "corona needs a nonempty base"); },
                   [](const FamilyG& s) { require(s.k1 >= 0 && s.k2 >= 0, "familyG needs k1, k2 >= 0"); },
                   [](const FamilyH& s) {
                       require(s.r >= 0 && s.a >= 1 && s.b >= 1, "familyH needs r >= 0, a, b >= 1");
                   },
               },
               spec);
}

GeneratedGraph generate(const FamilySpec& spec)
{
    validate(spec);
    Builder b;
    std::visit(overloaded{
                   [&](const Complete& s) {
                       for (int i = 0; i < s.n; ++i) {
                           b.add(indexed("k", i + 1));
                           for (int j = 0; j < i; ++j)
                               b.join(j, i);
                       }
                   },
                   [&](const Path& s) { add_path(b, s.n, "x"); },
                   [&](const Cycle& s) {
                       auto xs = add_path(b, s.n, "v");
                       b.join(xs.front(), xs.back());
                   },
                   [&](const Wheel& s) {
                       Vertex hub = b.add("hub");
                       auto xs = add_path(b, s.cycle_len, "v");
                       b.join(xs.front(), xs.back());
                       for (Vertex x : xs)
                           b.join(hub, x);
                   },
                   [&](const CompleteBipartite& s) {
                       for (int i = 0; i < s.p; ++i)
                           b.add(indexed("x", i + 1));
                       for (int j = 0; j < s.q; ++j) {
                           Vertex y = b.add(indexed("y", j + 1));
                           for (int i = 0; i < s.p; ++i)
                               b.join(i, y);
                       }
                   },
                   [&](const Star& s) {
                       Vertex c = b.add("center");
                       for (int i = 0; i < s.t; ++i)
                           b.join(c, b.add(indexed("leaf", i + 1)));
                   },
                   [&](const Bistar& s) {
                       Vertex c1 = b.add("center1");
                       Vertex c2 = b.add("center2");
                       b.join(c1, c2);
                       for (int i = 0; i < s.r; ++i)
                           b.join(c1, b.add(indexed("leaf1_", i + 1)));
                       for (int i = 0; i < s.s; ++i)
                           b.join(c2, b.add(indexed("leaf2_", i + 1)));
                   },
                   [&](const Spider& s) {
                       Vertex head = b.add("head");
                       for (int i = 0; i < s.k; ++i)
                           b.join(head, b.add(indexed("wounded", i + 1)));
                       for (int i = 0; i < s.t - s.k; ++i) {
                           Vertex m = b.add(indexed("middle", i + 1));
                           Vertex f = b.add(indexed("foot", i + 1));
                           b.join(head, m);
                           b.join(m, f);
                       }
                   },
                   [&](const Broom& s) {
                       auto xs = add_path(b, s.t, "x");
                       for (int i = 0; i < s.d; ++i)
                           b.join(xs.back(), b.add(indexed("pendant", i + 1)));
                   },
                   [&](const DoubleBroom& s) {
                       auto xs = add_path(b, s.t, "x");
                       for (int i = 0; i < s.d; ++i)
                           b.join(xs.front(), b.add(indexed("pendant1_", i + 1)));
                       for (int i = 0; i < s.d2; ++i)
                           b.join(xs.back(), b.add(indexed("pendant2_", i + 1)));
                   },
                   [&](const Corona& s) {
                       const int k = s.base.order();
                       for (int i = 0; i < k; ++i)
                           b.add(indexed("base", i));
                       for (const Edge& e : s.base.edges())
                           b.join(e.u, e.v);
                       for (int i = 0; i < k; ++i)
                           b.join(i, b.add(indexed("pendant", i)));
                   },
                   [&](const FamilyG& s) {
                       auto vs = add_path(b, 4, "v");
                       b.join(vs[0], vs[3]);
                       for (int i = 0; i < s.k1; ++i)
                           attach_p3(b, vs[0], s.attachment, 1);
                       for (int i = 0; i < s.k2; ++i)
                           attach_p3(b, vs[1], s.attachment, 2);
                   },
                   [&](const FamilyH& s) {
                       Vertex c1 = b.add("center1");
                       Vertex c2 = b.add("center2");
                       Vertex prev = c1;
                       for (int i = 0; i < s.r; ++i) {
                           Vertex w = b.add(indexed("sub", i + 1));
                           b.join(prev, w);
                           prev = w;
                       }
                       b.join(prev, c2);
                       auto legs = [&](Vertex c, int count, const char* stem) {
                           for (int i = 0; i < count; ++i) {
                               Vertex m = b.add(std::string(stem) + "mid" + std::to_string(i + 1));
                               Vertex f = b.add(std::string(stem) + "end" + std::to_string(i + 1));
                               b.join(c, m);
                               b.join(m, f);
                           }
                       };
                       legs(c1, s.a, "1");
                       legs(c2, s.b, "2");
                   },
               },
               spec);
    return b.finish();
}

ExpectedValue expected(const FamilySpec& spec)
{
    validate(spec);
    using B = ExpectedBondage;
    return std::visit(
        overloaded{
            [](const Complete& s) -> ExpectedValue {
                if (s.n == 1)
                    return {std::nullopt, B::unknown(), "K_1 has an isolated vertex"};
                if (s.n == 2)
                    return {2, B::infinite(), "K_2 is a path"};
                if (s.n == 3)
                    return {3, B::infinite(), "K_3 is the cycle C_3"};
                return {3, B::finite(ceil_half(s.n)), "K_n, n >= 4: gamma_tR = 3, b_tR = ceil(n/2)"};
            },
            [](const Path& s) -> ExpectedValue {
                if (s.n == 1)
                    return {std::nullopt, B::unknown(), "P_1 has an isolated vertex"};
                return {s.n, B::infinite(), "paths: gamma_tR = n, b_tR infinite"};
            },
            [](const Cycle& s) -> ExpectedValue {
                return {s.n, B::infinite(), "cycles: gamma_tR = n, b_tR infinite"};
            },
            [&](const Wheel&) -> ExpectedValue {
                int t = universal_vertices(generate_graph(spec));
                return {3, B::finite(ceil_half(t)),
                        "universal vertex: gamma_tR = 3, b_tR = ceil(t/2) with t = " +
                            std::to_string(t)};
            },
            [](const CompleteBipartite& s) -> ExpectedValue {
                int p = std::min(s.p, s.q), q = std::max(s.p, s.q);
                if (p == 1 && q == 1)
                    return {2, B::infinite(), "K_{1,1} is a path"};
                if (p == 1)
                    return {3, B::infinite(), "K_{1,q} is a star"};
                if (p == 2 && q == 2)
                    return {4, B::infinite(), "K_{2,2} is the cycle C_4"};
                return {4, B::finite(p), "K_{p,q}, 2 <= p <= q, q >= 3: gamma_tR = 4, b_tR = p"};
            },
            [](const Star&) -> ExpectedValue {
                return {3, B::infinite(), "stars: gamma_tR = 3, every edge removal isolates a leaf"};
            },
            [](const Bistar&) -> ExpectedValue {
                return {4, B::unknown(), "bistars: gamma_tR = 4 via a dominating edge"};
            },
            [](const Spider& s) -> ExpectedValue {
                if (s.k == 0)
                    return {2 * s.t + 1, B::infinite(), "healthy spider: gamma_tR = 2t+1, b_tR infinite"};
                if (s.k == s.t)
                    return {3, B::infinite(), "S(t,t) is a star"};
                if (s.k == 1)
                    return {std::nullopt, B::infinite(), "one wounded foot: b_tR infinite"};
                return {std::nullopt, B::finite(s.t - s.k), "wounded spider: b_tR = t - k"};
            },
            [](const Broom&) -> ExpectedValue {
                return {std::nullopt, B::finite(1), "brooms: b_tR = 1"};
            },
            [](const DoubleBroom&) -> ExpectedValue {
                return {std::nullopt, B::finite(1), "double brooms: b_tR = 1"};
            },
            [](const Corona& s) -> ExpectedValue {
                return {2 * s.base.order(), B::infinite(), "coronas: gamma_tR = n, b_tR infinite"};
            },
            [](const FamilyG& s) -> ExpectedValue {
                if (s.attachment != P3Attachment::Identify)
                    return {std::nullopt, B::unknown(), "pendant reading: no closed form"};
                return {4 + 2 * (s.k1 + s.k2), B::infinite(), "unicyclic family: gamma_tR = n"};
            },
            [](const FamilyH& s) -> ExpectedValue {
                return {2 + s.r + 2 * (s.a + s.b), B::infinite(), "subdivided bistars: gamma_tR = n"};
            },
        },
        spec);
}

// ---------------------------------------------------------------------------

namespace {

std::vector<int> parse_ints(std::string_view text, std::size_t count, std::string_view tag)
{
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos)
            comma = text.size();
        auto piece = text.substr(pos, comma - pos);
        int value = 0;
        auto [end, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (piece.empty() || ec != std::errc{} || end != piece.data() + piece.size())
            throw Error("family spec '" + std::string(tag) + "': bad integer '" +
                        std::string(piece) + "'");
        out.push_back(value);
        pos = comma + 1;
    }
    if (out.size() != count)
        throw Error("family spec '" + std::string(tag) + "' expects " + std::to_string(count) +
                    " parameter(s), got " + std::to_string(out.size()));
    return out;
}

} // namespace

FamilySpec parse_family_spec(std::string_view text)
{
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw Error("family spec '" + std::string(text) + "' lacks ':'");
    auto tag = text.substr(0, colon);
    auto args = text.substr(colon + 1);
    FamilySpec spec = [&]() -> FamilySpec {
        if (tag == "corona")
            return Corona{parse_graph6(args)};
        if (tag == "complete") {
            auto v = parse_ints(args, 1, tag);
            return Complete{v[0]};
        }
        if (tag == "path") {
            auto v = parse_ints(args, 1, tag);
            return Path{v[0]};
        }
        if (tag == "cycle") {
            auto v = parse_ints(args, 1, tag);
            return Cycle{v[0]};
        }
        if (tag == "wheel") {
            auto v = parse_ints(args, 1, tag);
            return Wheel{v[0]};
        }
        if (tag == "star") {
            auto v = parse_ints(args, 1, tag);
            return Star{v[0]};
        }
        if (tag == "kpq") {
            auto v = parse_ints(args, 2, tag);
            return CompleteBipartite{v[0], v[1]};
        }
        if (tag == "bistar") {
            auto v = parse_ints(args, 2, tag);
            return Bistar{v[0], v[1]};
        }
        if (tag == "spider") {
            auto v = parse_ints(args, 2, tag);
            return Spider{v[0], v[1]};
        }
        if (tag == "broom") {
            auto v = parse_ints(args, 2, tag);
            return Broom{v[0], v[1]};
        }
        if (tag == "doublebroom") {
            auto v = parse_ints(args, 3, tag);
            return DoubleBroom{v[0], v[1], v[2]};
        }
        if (tag == "familyG") {
            auto v = parse_ints(args, 2, tag);
            return FamilyG{v[0], v[1]};
        }
        if (tag == "familyH") {
            auto v = parse_ints(args, 3, tag);
            return FamilyH{v[0], v[1], v[2]};
        }
        throw Error("unknown family '" + std::string(tag) + "'");
    }();
    validate(spec);
    return spec;
}

std::string format_family_spec(const FamilySpec& spec)
{
    std::ostringstream o;
    std::visit(overloaded{
                   [&](const Complete& s) { o << "complete:" << s.n; },
                   [&](const Path& s) { o << "path:" << s.n; },
                   [&](const Cycle& s) { o << "cycle:" << s.n; },
                   [&](const Wheel& s) { o << "wheel:" << s.cycle_len; },
                   [&](const CompleteBipartite& s) { o << "kpq:" << s.p << ',' << s.q; },
                   [&](const Star& s) { o << "star:" << s.t; },
                   [&](const Bistar& s) { o << "bistar:" << s.r << ',' << s.s; },
                   [&](const Spider& s) { o << "spider:" << s.k << ',' << s.t; },
                   [&](const Broom& s) { o << "broom:" << s.t << ',' << s.d; },
                   [&](const DoubleBroom& s) {
                       o << "doublebroom:" << s.t << ',' << s.d << ',' << s.d2;
                   },
                   [&](const Corona& s) { o << "corona:" << emit_graph6(s.base); },
                   [&](const FamilyG& s) { o << "familyG:" << s.k1 << ',' << s.k2; },
                   [&](const FamilyH& s) { o << "familyH:" << s.r << ',' << s.a << ',' << s.b; },
               },
               spec);
    return o.str();
}

} // namespace troman
