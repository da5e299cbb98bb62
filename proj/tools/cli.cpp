#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "troman/bondage.hpp"
#include "troman/families.hpp"
#include "troman/graph_io.hpp"
#include "troman/harness.hpp"
#include "troman/reduction.hpp"
#include "troman/serialize.hpp"

namespace troman::cli {

namespace {

std::string slurp(std::istream& in)
{
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string read_file(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw Error("cannot open '" + path + "'");
    return slurp(f);
}

/// "-" reads stdin, an existing path is read as a file, anything else is
/// taken as graph6 text.
Graph load_graph(const std::string& arg, std::istream& in)
{
    if (arg == "-")
        return parse_graph_text(slurp(in));
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec))
        return parse_graph_text(read_file(arg));
    return parse_graph6(arg);
}

BondageKind parse_kind(const std::string& which)
{
    if (which == "tr")
        return BondageKind::TotalRoman;
    if (which == "t")
        return BondageKind::Total;
    if (which == "r")
        return BondageKind::Roman;
    if (which == "qtr")
        return BondageKind::QuasiTotal;
    if (which == "plain")
        return BondageKind::Plain;
    throw Error("unknown bondage kind '" + which + "'");
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err)
{
    CLI::App app{"Exact total Roman domination and bondage toolkit"};
    app.require_subcommand(1);

    std::string family, format = "graph6";
    auto* gen = app.add_subcommand("gen", "generate a family member");
    gen->add_option("family", family, "family spec, e.g. spider:2,4")->required();
    gen->add_option("--format", format, "graph6 or edgelist")
        ->check(CLI::IsMember({"graph6", "edgelist"}));

    std::string graph_arg;
    auto* inv = app.add_subcommand("invariants", "all six parameters with witnesses");
    inv->add_option("graph", graph_arg, "graph6 string, file, or - for stdin")->required();

    std::string which = "tr";
    bool value_only = false;
    auto* bond = app.add_subcommand("bondage", "bondage number with witness or certificate");
    bond->add_option("graph", graph_arg, "graph6 string, file, or - for stdin")->required();
    bond->add_option("--which", which, "tr, t, r, qtr or plain")
        ->check(CLI::IsMember({"tr", "t", "r", "qtr", "plain"}));
    bond->add_flag("--value", value_only, "print only the value (or inf)");

    std::string corpus_text, theorem_ids = "all", out_path;
    int threads = 0;
    bool slow = false;
    auto* check = app.add_subcommand("check", "run the theorem suite on a corpus");
    check->add_option("--corpus", corpus_text, "all:N, random:count,n,p,seed, families:..., file:path")
        ->required();
    check->add_option("--theorems", theorem_ids, "comma list of ids or all");
    check->add_option("--threads", threads, "worker count (default TROMAN_THREADS)");
    check->add_option("--out", out_path, "write the JSON report here instead of stdout");
    check->add_flag("--slow", slow, "allow exhaustive corpora above 6 vertices");

    std::string cnf_path;
    bool verify = false, emit = false;
    auto* reduce = app.add_subcommand("reduce", "build the 3-SAT reduction graph");
    reduce->add_option("cnf", cnf_path, "DIMACS CNF file")->required();
    reduce->add_flag("--verify", verify, "check the construction claims");
    reduce->add_flag("--emit-graph6", emit, "print the graph in graph6");

    std::vector<std::string> rev(args.rbegin(), args.rend() - 1);
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (gen->parsed()) {
            Graph g = generate_graph(parse_family_spec(family));
            out << (format == "graph6" ? emit_graph6(g) + "\n" : emit_edge_list(g));
            return 0;
        }
        if (inv->parsed()) {
            out << to_json(invariant_report(load_graph(graph_arg, in))).dump(2) << "\n";
            return 0;
        }
        if (bond->parsed()) {
            auto r = bondage(load_graph(graph_arg, in), parse_kind(which));
            if (value_only)
                out << (r.is_finite() ? std::to_string(r.value()) : std::string("inf")) << "\n";
            else
                out << to_json(r).dump(2) << "\n";
            return 0;
        }
        if (check->parsed()) {
            CorpusSpec spec = parse_corpus_spec(corpus_text);
            if (spec.mode == CorpusSpec::Mode::AllConnected && spec.max_n > 6 && !slow)
                throw Error("all:N with N > 6 needs --slow");
            auto theorems = select_theorems(theorem_ids);
            auto graphs = generate_corpus(spec);
            auto results = run_suite(graphs, theorems, threads);
            auto text = suite_report_json(spec, graphs.size(), results);
            if (out_path.empty()) {
                out << text;
            } else {
                std::ofstream f(out_path);
                if (!f)
                    throw Error("cannot write '" + out_path + "'");
                f << text;
            }
            return all_passed(results) ? 0 : 1;
        }
        if (reduce->parsed()) {
            CnfFormula f = parse_dimacs(read_file(cnf_path));
            if (emit)
                out << emit_graph6(build(f).graph) << "\n";
            if (verify) {
                ClaimReport r = verify_claims(f);
                out << to_json(r).dump(2) << "\n";
                return r.all_hold() ? 0 : 1;
            }
            if (!emit) {
                auto a = build(f);
                Json j;
                j["n_vars"] = a.n_vars;
                j["m_clauses"] = a.m_clauses;
                j["order"] = a.graph.order();
                j["size"] = a.graph.size();
                out << j.dump(2) << "\n";
            }
            return 0;
        }
    } catch (const InconsistencyError& e) {
        err << "inconsistency: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace troman::cli
