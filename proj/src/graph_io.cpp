#include "troman/graph_io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace troman {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

int sextet(char c)
{
    int x = static_cast<unsigned char>(c) - 63;
    if (x < 0 || x > 63)
        throw Error(std::string("graph6: invalid character '") + c + "'");
    return x;
}

} // namespace

Graph parse_graph6(std::string_view text)
{
    text = trim(text);
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header)
        text.remove_prefix(header.size());
    if (text.empty())
        throw Error("graph6: empty input");

    std::size_t pos = 0;
    long n = 0;
    if (text[0] == '~') {
        if (text.size() >= 2 && text[1] == '~')
            throw Error("graph6: 36-bit size form is not supported");
        if (text.size() < 4)
            throw Error("graph6: truncated size header");
        n = (sextet(text[1]) << 12) | (sextet(text[2]) << 6) | sextet(text[3]);
        pos = 4;
    } else {
        n = sextet(text[0]);
        pos = 1;
    }
    if (n > Graph::kMaxOrder)
        throw Error("graph6: order " + std::to_string(n) + " exceeds supported maximum " +
                    std::to_string(Graph::kMaxOrder));

    const long bits = n * (n - 1) / 2;
    const long expected = (bits + 5) / 6;
    const long have = static_cast<long>(text.size() - pos);
    if (have < expected)
        throw Error("graph6: truncated bit stream (expected " + std::to_string(expected) +
                    " bytes, got " + std::to_string(have) + ")");
    if (have > expected)
        throw Error("graph6: trailing data after bit stream");

    std::vector<Edge> es;
    long k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            int byte = sextet(text[pos + k / 6]);
            if ((byte >> (5 - k % 6)) & 1)
                es.emplace_back(i, j);
        }
    if (bits % 6 != 0) {
        int last = sextet(text[pos + expected - 1]);
        int pad = 6 - static_cast<int>(bits % 6);
        if (last & ((1 << pad) - 1))
            throw Error("graph6: nonzero padding bits");
    }
    return Graph::from_edge_list(static_cast<int>(n), es);
}

std::string emit_graph6(const Graph& g)
{
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = nbits = 0;
            }
        }
    if (nbits > 0)
        out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph parse_edge_list(std::string_view text)
{
    std::istringstream in{std::string(text)};
    long n = 0, m = 0;
    if (!(in >> n >> m) || n < 0 || m < 0)
        throw Error("edge list: malformed header, expected \"n m\"");
    if (n > Graph::kMaxOrder)
        throw Error("edge list: order " + std::to_string(n) + " exceeds supported maximum");
    std::vector<Edge> es;
    for (long i = 0; i < m; ++i) {
        long u = 0, v = 0;
        if (!(in >> u >> v))
            throw Error("edge list: expected " + std::to_string(m) + " edges, got " +
                        std::to_string(i));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error("edge list: endpoint out of range in edge " + std::to_string(i));
        es.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    std::string rest;
    if (in >> rest)
        throw Error("edge list: trailing data \"" + rest + "\"");
    return Graph::from_edge_list(static_cast<int>(n), es);
}

std::string emit_edge_list(const Graph& g)
{
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto& e : g.edges())
        out << e.u << ' ' << e.v << '\n';
    return out.str();
}

Graph parse_graph_text(std::string_view text)
{
    auto body = trim(text);
    auto first_line = body.substr(0, body.find('\n'));
    std::istringstream probe{std::string(first_line)};
    long a = 0, b = 0;
    std::string extra;
    if (probe >> a >> b && !(probe >> extra))
        return parse_edge_list(body);
    return parse_graph6(body);
}

} // namespace troman
