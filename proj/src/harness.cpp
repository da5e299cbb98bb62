#include "troman/harness.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "troman/graph_io.hpp"

namespace troman {

std::uint64_t SplitMix64::next()
{
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos)
            return out;
        start = pos + 1;
    }
}

template <class T>
T parse_number(std::string_view s, std::string_view what)
{
    T value{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw Error("corpus: bad " + std::string(what) + " '" + std::string(s) + "'");
    return value;
}

double parse_probability(std::string_view s)
{
    try {
        std::size_t used = 0;
        std::string str(s);
        double p = std::stod(str, &used);
        if (used != str.size())
            throw Error("");
        return p;
    } catch (const std::exception&) {
        throw Error("corpus: bad edge probability '" + std::string(s) + "'");
    }
}

std::vector<std::pair<int, int>> pairs_of(int n)
{
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            out.emplace_back(i, j);
    return out;
}

void append_all_connected(int n, std::vector<Graph>& out)
{
    auto pairs = pairs_of(n);
    const std::uint64_t limit = std::uint64_t{1} << pairs.size();
    std::vector<Edge> edges;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        if (std::popcount(mask) < n - 1)
            continue;
        edges.clear();
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if ((mask >> i) & 1U)
                edges.emplace_back(pairs[i].first, pairs[i].second);
        Graph g = Graph::from_edge_list(n, edges);
        if (is_connected(g))
            out.push_back(std::move(g));
    }
}

} // namespace

CorpusSpec parse_corpus_spec(std::string_view text)
{
    CorpusSpec spec;
    spec.text = std::string(text);
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw Error("corpus: expected <mode>:<args>, got '" + spec.text + "'");
    std::string_view mode = text.substr(0, colon);
    std::string_view args = text.substr(colon + 1);

    if (mode == "all") {
        spec.mode = CorpusSpec::Mode::AllConnected;
        spec.max_n = parse_number<int>(args, "max order");
        if (spec.max_n < 2 || spec.max_n > 8)
            throw Error("corpus: all:N needs 2 <= N <= 8");
    } else if (mode == "random") {
        auto parts = split(args, ',');
        if (parts.size() != 4)
            throw Error("corpus: random needs count,n,p,seed");
        spec.mode = CorpusSpec::Mode::Random;
        spec.count = parse_number<int>(parts[0], "count");
        spec.n = parse_number<int>(parts[1], "order");
        spec.edge_prob = parse_probability(parts[2]);
        spec.seed = parse_number<std::uint64_t>(parts[3], "seed");
        if (spec.count < 0 || spec.n < 2 || spec.n > 64)
            throw Error("corpus: random needs count >= 0 and 2 <= n <= 64");
        if (!(spec.edge_prob > 0.0 && spec.edge_prob <= 1.0))
            throw Error("corpus: edge probability must lie in (0, 1]");
    } else if (mode == "families") {
        spec.mode = CorpusSpec::Mode::Families;
        for (auto part : split(args, ';'))
            if (!part.empty())
                spec.families.push_back(parse_family_spec(part));
        if (spec.families.empty())
            throw Error("corpus: families list is empty");
    } else if (mode == "file") {
        spec.mode = CorpusSpec::Mode::FromFile;
        spec.path = std::string(args);
        if (spec.path.empty())
            throw Error("corpus: file path is empty");
    } else {
        throw Error("corpus: unknown mode '" + std::string(mode) + "'");
    }
    return spec;
}

std::vector<Graph> generate_corpus(const CorpusSpec& spec)
{
    std::vector<Graph> out;
    switch (spec.mode) {
    case CorpusSpec::Mode::AllConnected:
        for (int n = 2; n <= spec.max_n; ++n)
            append_all_connected(n, out);
        break;
    case CorpusSpec::Mode::Random: {
        SplitMix64 rng(spec.seed);
        auto pairs = pairs_of(spec.n);
        std::vector<Edge> edges;
        while (static_cast<int>(out.size()) < spec.count) {
            edges.clear();
            for (auto [i, j] : pairs)
                if (rng.next_double() < spec.edge_prob)
                    edges.emplace_back(i, j);
            Graph g = Graph::from_edge_list(spec.n, edges);
            if (is_connected(g))
                out.push_back(std::move(g));
        }
        break;
    }
    case CorpusSpec::Mode::Families:
        for (const auto& f : spec.families) {
            Graph g = generate_graph(f);
            if (!has_isolated_vertex(g))
                out.push_back(std::move(g));
        }
        break;
    case CorpusSpec::Mode::FromFile: {
        std::ifstream in(spec.path);
        if (!in)
            throw Error("corpus: cannot open '" + spec.path + "'");
        std::string line;
        while (std::getline(in, line)) {
            auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#')
                continue;
            Graph g = parse_graph6(line);
            if (!has_isolated_vertex(g))
                out.push_back(std::move(g));
        }
        break;
    }
    }
    return out;
}

const BondageResult& EvalContext::bondage(BondageKind kind, const Graph& g)
{
    auto& row = bondage_[g];
    auto& slot = row[static_cast<std::size_t>(kind)];
    if (!slot)
        slot = troman::bondage(g, kind, &invariants_);
    return *slot;
}

std::vector<Theorem> select_theorems(std::string_view ids)
{
    const auto& all = theorem_registry();
    if (ids == "all")
        return all;
    std::vector<Theorem> out;
    for (auto id : split(ids, ',')) {
        auto it = std::find_if(all.begin(), all.end(), [&](const Theorem& t) { return t.id == id; });
        if (it == all.end())
            throw Error("unknown theorem id '" + std::string(id) + "'");
        out.push_back(*it);
    }
    return out;
}

std::string_view status_name(TheoremStatus s)
{
    switch (s) {
    case TheoremStatus::Pass:
        return "pass";
    case TheoremStatus::Vacuous:
        return "vacuous";
    case TheoremStatus::Skipped:
        return "skipped";
    case TheoremStatus::Fail:
        return "fail";
    }
    return "?";
}

int default_thread_count()
{
    if (const char* env = std::getenv("TROMAN_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1)
            return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

std::vector<TheoremResult> run_suite(const std::vector<Graph>& graphs,
                                     const std::vector<Theorem>& theorems, int threads)
{
    if (threads <= 0)
        threads = default_thread_count();
    threads = std::max(1, std::min<int>(threads, static_cast<int>(graphs.size())));
    const std::size_t nt = theorems.size();
    std::vector<Verdict> verdicts(graphs.size() * nt);

    auto work = [&](int worker) {
        EvalContext ctx;
        for (std::size_t gi = worker; gi < graphs.size(); gi += threads) {
            for (std::size_t ti = 0; ti < nt; ++ti) {
                Verdict& v = verdicts[gi * nt + ti];
                try {
                    v = theorems[ti].check(graphs[gi], ctx);
                } catch (const InconsistencyError& e) {
                    v = Verdict::fail(e.what());
                } catch (const Error& e) {
                    v = Verdict::skipped(e.what());
                }
            }
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w)
            pool.emplace_back(work, w);
        for (auto& t : pool)
            t.join();
    }

    std::vector<TheoremResult> out;
    for (std::size_t ti = 0; ti < nt; ++ti) {
        TheoremResult r;
        r.id = theorems[ti].id;
        r.statement = theorems[ti].statement;
        std::string first_skip;
        for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
            const Verdict& v = verdicts[gi * nt + ti];
            switch (v.kind) {
            case Verdict::Kind::Pass:
                ++r.pass;
                break;
            case Verdict::Kind::Vacuous:
                ++r.vacuous;
                break;
            case Verdict::Kind::Skipped:
                if (!r.skipped)
                    first_skip = v.detail;
                ++r.skipped;
                break;
            case Verdict::Kind::Fail:
                if (!r.fail) {
                    r.counterexample = emit_graph6(graphs[gi]);
                    r.detail = v.detail;
                }
                ++r.fail;
                break;
            }
        }
        if (r.fail)
            r.status = TheoremStatus::Fail;
        else if (r.pass)
            r.status = TheoremStatus::Pass;
        else if (r.vacuous)
            r.status = TheoremStatus::Vacuous;
        else
            r.status = TheoremStatus::Skipped;
        if (!r.fail && r.skipped)
            r.detail = "first skip: " + first_skip;
        out.push_back(std::move(r));
    }
    return out;
}

bool all_passed(const std::vector<TheoremResult>& results)
{
    for (const auto& r : results)
        if (r.status == TheoremStatus::Fail)
            return false;
    return true;
}

std::string suite_report_json(const CorpusSpec& corpus, std::size_t graph_count,
                              const std::vector<TheoremResult>& results)
{
    using nlohmann::ordered_json;
    ordered_json suite;
    suite["corpus"] = corpus.text;
    if (corpus.mode == CorpusSpec::Mode::Random)
        suite["seed"] = corpus.seed;
    else
        suite["seed"] = nullptr;
    suite["prng"] = "splitmix64";
    suite["graphs"] = graph_count;
    suite["caps"] = {{"order", 64},
                     {"exhaustive_infinity_edges", 12},
                     {"optimal_function_order", 14},
                     {"edge_cut_order", 16}};

    ordered_json list = ordered_json::array();
    for (const auto& r : results) {
        ordered_json t;
        t["id"] = r.id;
        t["statement"] = r.statement;
        t["status"] = status_name(r.status);
        t["counts"] = {{"pass", r.pass}, {"vacuous", r.vacuous}, {"skipped", r.skipped},
                       {"fail", r.fail}};
        t["counterexample"] = r.counterexample ? ordered_json(*r.counterexample) : ordered_json();
        if (!r.detail.empty())
            t["detail"] = r.detail;
        list.push_back(std::move(t));
    }
    ordered_json doc;
    doc["suite"] = std::move(suite);
    doc["theorems"] = std::move(list);
    doc["all_passed"] = all_passed(results);
    return doc.dump(2) + "\n";
}

} // namespace troman
