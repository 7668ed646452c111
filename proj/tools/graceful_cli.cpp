// Command-line front end. Results go to stdout as JSON (or plain text with
// --format text), diagnostics to stderr.
//
// Exit codes: 0 decided, 1 input or usage error, 2 budget exhausted,
// 3 internal defect.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <unistd.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "graceful/graceful.hpp"

namespace {

using nlohmann::ordered_json;
using namespace graceful;

constexpr int kExitDecided = 0;
constexpr int kExitInput = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitDefect = 3;

struct RunConfig {
    std::string input = "-";
    std::string output;
    std::string coloring_path;
    std::string external;
    std::string format = "json";
    int k = 0;
    int limit = kDefaultApLimit;
    std::uint64_t budget = kDefaultBudget;
    std::uint64_t seed = 1;
    int jobs = 1;
    bool strict_sets = false;
};

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

void print_text(const ordered_json& j, const std::string& prefix = "") {
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.key() == "schema") continue;
        if (it->is_object()) {
            print_text(*it, prefix + it.key() + ".");
        } else if (it->is_string()) {
            std::cout << prefix << it.key() << ": " << it->get<std::string>() << "\n";
        } else {
            std::cout << prefix << it.key() << ": " << it->dump() << "\n";
        }
    }
}

class Cli {
public:
    explicit Cli(RunConfig cfg) : cfg_(std::move(cfg)) {}

    int emit(ordered_json body, int code) const {
        ordered_json j{{"schema", 1}};
        j.update(body);
        if (cfg_.format == "text") print_text(j);
        else std::cout << j.dump() << "\n";
        return code;
    }

    Graph graph() const { return parse_graph_auto(read_input(cfg_.input)); }
    SearchBudget budget() const { return {cfg_.budget}; }

    int an(int n) const {
        const auto r = a_of_n(n, cfg_.limit);
        return emit({{"command", "an"}, {"n", n}, {"a", r.value}, {"witness", r.witness.elements}}, kExitDecided);
    }

    int decide() const {
        const Graph g = graph();
        const auto d = graceful_k_colorable(g, cfg_.k, budget(), cfg_.jobs);
        return decision("decide", d);
    }

    int chig() const { return chromatic("chig", graceful_chromatic_number(graph(), budget())); }
    int chi2() const { return chromatic("chi2", distance_two_chromatic_number(graph(), budget())); }

    int verify() const {
        const Graph g = graph();
        const auto parsed = nlohmann::json::parse(read_input(cfg_.coloring_path));
        if (!parsed.is_array()) throw Error("coloring file must hold a JSON array of integers");
        std::vector<int> colors;
        for (const auto& x : parsed) {
            if (!x.is_number_integer()) throw Error("coloring file must hold a JSON array of integers");
            colors.push_back(x.get<int>());
        }
        if (colors.size() != static_cast<std::size_t>(g.order()))
            throw Error("coloring has " + std::to_string(colors.size()) + " entries, graph has " +
                        std::to_string(g.order()) + " vertices");
        for (int c : colors)
            if (c < 1 || (cfg_.k > 0 && c > cfg_.k)) throw Error("color " + std::to_string(c) + " outside the palette");
        const auto graceful = is_graceful_coloring(g, colors);
        const auto d2 = is_distance_two_coloring(g, colors);
        ordered_json j{{"command", "verify"}, {"answer", graceful ? "yes" : "no"}, {"graceful", graceful.ok()},
                       {"distance_two", d2.ok()}, {"max_color", VertexColoring::tight(colors).max_color()}};
        if (!graceful) j["violation"] = graceful.violation->describe();
        return emit(j, kExitDecided);
    }

    int bounds_cmd() const {
        const Graph g = graph();
        const auto b = bounds(g, budget());
        if (!b.decided) return emit({{"command", "bounds"}, {"answer", "unknown"}, {"nodes_searched", b.nodes_searched}}, kExitUnknown);
        return emit({{"command", "bounds"},
                     {"answer", "optimal"},
                     {"lower", b.lower},
                     {"upper", b.upper},
                     {"witness", b.lifted.colors()},
                     {"distance_two_witness", b.distance_two.colors()},
                     {"nodes_searched", b.nodes_searched}},
                    kExitDecided);
    }

    int gen(const std::vector<std::string>& args) const {
        if (args.empty()) throw Error("gen needs a graph kind");
        const std::string& kind = args[0];
        auto arg = [&](std::size_t i) -> int {
            if (i >= args.size()) throw Error("gen " + kind + ": missing parameter");
            return std::stoi(args[i]);
        };
        Graph g;
        if (kind == "complete") g = complete_graph(arg(1));
        else if (kind == "path") g = path_graph(arg(1));
        else if (kind == "cycle") g = cycle_graph(arg(1));
        else if (kind == "star") g = star_graph(arg(1));
        else if (kind == "gnp") {
            if (args.size() < 3) throw Error("gen gnp: expected n p");
            g = gnp_graph(arg(1), std::stod(args[2]), cfg_.seed);
        } else if (kind == "cubic") g = random_cubic_graph(arg(1), cfg_.seed);
        else if (kind == "petersen") g = petersen_graph();
        else if (kind == "hypercube") g = hypercube(arg(1));
        else if (kind == "prism") g = prism_graph(arg(1));
        else if (kind == "bipartite") g = complete_bipartite(arg(1), arg(2));
        else throw Error("unknown graph kind \"" + kind + "\"");
        return emit({{"command", "gen"}, {"kind", kind}, {"n", g.order()}, {"m", g.size()}, {"graph6", write_graph6(g)}},
                    kExitDecided);
    }

    int reduce_construction1() const {
        const Graph g = graph();
        const Graph out = construction1(g, cfg_.k);
        nlohmann::ordered_json prov = nlohmann::ordered_json::array();
        for (int v = 0; v < out.order(); ++v) {
            if (v < g.order()) prov.push_back({{"vertex", v}, {"role", "original"}, {"source", v}});
            else prov.push_back({{"vertex", v}, {"role", "leaf"}, {"source", (v - g.order()) / (cfg_.k - 5)}});
        }
        return reduction_result("reduce construction1", out, {{"provenance", prov}});
    }

    int reduce_nae() const {
        const auto phi = parse_nae(read_input(cfg_.input), cfg_.strict_sets);
        const auto out = nae_reduce(phi);
        ordered_json prov = ordered_json::array();
        for (std::size_t v = 0; v < out.provenance.size(); ++v) {
            const auto& p = out.provenance[v];
            prov.push_back({{"vertex", v},
                            {"element", p.element == Provenance::Element::variable ? "variable" : "clause"},
                            {"index", p.index + 1},
                            {"role", p.role}});
        }
        ordered_json edges = ordered_json::array();
        for (const auto& e : out.port_edges)
            edges.push_back({{"variable", e.variable + 1}, {"occurrence", e.occurrence + 1}, {"clause", e.clause + 1},
                             {"position", e.position + 1}, {"edge", {e.edge.first, e.edge.second}}});
        return reduction_result("reduce nae", out.graph, {{"provenance", prov}, {"port_edges", edges}});
    }

    int gadget_verify(const std::string& which) const {
        GadgetSpec spec;
        if (which == "variable") spec = variable_gadget();
        else if (which == "clause") spec = clause_gadget();
        else throw Error("unknown gadget \"" + which + "\"");
        const auto rep = verify_gadget(spec, budget());
        ordered_json rows = ordered_json::array();
        for (const auto& r : rep.rows) {
            ordered_json row{{"description", r.description}, {"passed", r.passed}};
            if (r.example) row["example"] = *r.example;
            rows.push_back(row);
        }
        return emit({{"command", "gadget verify"},
                     {"gadget", rep.gadget},
                     {"answer", rep.certified() ? "yes" : "no"},
                     {"graph6", write_graph6(spec.graph)},
                     {"colorings", rep.colorings},
                     {"max_degree", rep.max_degree},
                     {"degeneracy", rep.degeneracy},
                     {"rows", rows},
                     {"nodes_searched", rep.nodes_searched}},
                    kExitDecided);
    }

    int check_nae() const {
        const auto phi = parse_nae(read_input(cfg_.input), cfg_.strict_sets);
        const auto r = check_nae_reduction(phi, budget());
        ordered_json j{{"command", "check nae"},
                       {"answer", to_string(r.status)},
                       {"formula_satisfiable", r.formula_satisfiable},
                       {"graph_colorable", to_string(r.graph_colorable)}};
        if (r.assignment) j["assignment"] = *r.assignment;
        if (!r.details.empty()) j["details"] = r.details;
        j["nodes_searched"] = r.nodes_searched;
        return emit(j, status_code(r.status));
    }

    int check_construction1() const {
        const auto r = check_construction1_guarantee(graph(), cfg_.k, budget());
        ordered_json j{{"command", "check construction1"},
                       {"answer", to_string(r.status)},
                       {"distance_two_4", to_string(r.distance_two_4)},
                       {"graceful_k", to_string(r.graceful_k)}};
        if (r.extension) j["witness"] = r.extension->colors();
        if (!r.details.empty()) j["details"] = r.details;
        j["nodes_searched"] = r.nodes_searched;
        return emit(j, status_code(r.status));
    }

    int encode() const {
        const auto enc = encode_graceful(graph(), cfg_.k);
        const std::string text = write_dimacs(enc.cnf);
        if (cfg_.output.empty()) {
            std::cout << text;
            return kExitDecided;
        }
        write_file(cfg_.output, text);
        return emit({{"command", "encode"}, {"file", cfg_.output}, {"variables", enc.cnf.num_vars},
                     {"clauses", enc.cnf.clauses.size()}},
                    kExitDecided);
    }

    int solve() const {
        const auto enc = encode_graceful(graph(), cfg_.k);
        SatResult r;
        if (cfg_.external.empty()) {
            r = internal_sat(enc.cnf, budget());
        } else {
            r = run_external(enc.cnf);
        }
        Decision d;
        d.answer = r.answer;
        d.nodes_searched = r.nodes_searched;
        if (r.answer == Answer::yes) d.witness = decode_model(enc, r.model);
        return decision("solve", d);
    }

private:
    int decision(const char* command, const Decision& d) const {
        ordered_json j{{"command", command}, {"answer", to_string(d.answer)}, {"k", cfg_.k}};
        if (d.witness) j["witness"] = d.witness->colors();
        j["nodes_searched"] = d.nodes_searched;
        return emit(j, d.answer == Answer::unknown ? kExitUnknown : kExitDecided);
    }

    int chromatic(const char* command, const ChromaticResult& r) const {
        if (!r.decided) return emit({{"command", command}, {"answer", "unknown"}, {"nodes_searched", r.nodes_searched}}, kExitUnknown);
        return emit({{"command", command},
                     {"answer", "optimal"},
                     {"value", r.value},
                     {"witness", r.witness.colors()},
                     {"nodes_searched", r.nodes_searched}},
                    kExitDecided);
    }

    int reduction_result(const char* command, const Graph& out, ordered_json extra) const {
        const auto sr = structural_report(out);
        const std::string g6 = write_graph6(out);
        ordered_json j{{"command", command},
                       {"n", out.order()},
                       {"m", out.size()},
                       {"max_degree", sr.max_degree},
                       {"degeneracy", sr.degeneracy},
                       {"bipartite", sr.is_bipartite}};
        if (!cfg_.output.empty()) {
            write_file(cfg_.output, g6 + "\n");
            write_file(cfg_.output + ".json", extra.dump(2) + "\n");
            j["graph6_file"] = cfg_.output;
            j["sidecar_file"] = cfg_.output + ".json";
        } else {
            j["graph6"] = g6;
            j.update(extra);
        }
        return emit(j, kExitDecided);
    }

    static int status_code(CheckStatus s) {
        switch (s) {
            case CheckStatus::consistent: return kExitDecided;
            case CheckStatus::unknown: return kExitUnknown;
            case CheckStatus::counterexample: return kExitDefect;
        }
        return kExitDefect;
    }

    // Writes DIMACS to a temporary file and runs `<external> <file>`.
    SatResult run_external(const CnfFormula& cnf) const {
        char name[] = "/tmp/graceful-XXXXXX";
        const int fd = mkstemp(name);
        if (fd < 0) throw Error("cannot create temporary file");
        close(fd);
        write_file(name, write_dimacs(cnf));
        const std::string command = cfg_.external + " " + name;
        FILE* pipe = popen(command.c_str(), "r");
        if (!pipe) {
            std::remove(name);
            throw Error("cannot run " + command);
        }
        std::string output;
        char buf[4096];
        while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) output.append(buf, got);
        pclose(pipe);
        std::remove(name);
        return parse_solver_output(output);
    }

    RunConfig cfg_;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solver and verification workbench for graceful colorings"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    app.add_option("--budget", cfg.budget, "search node budget")->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", cfg.seed, "seed for random generators");
    app.add_option("--jobs", cfg.jobs, "worker threads for decide")->check(CLI::PositiveNumber);
    app.add_flag("--strict-sets", cfg.strict_sets, "reject repeated clauses in NAE formulas");

    int n = 0;
    auto* an = app.add_subcommand("an", "a(n) with an optimal AP-free witness");
    an->add_option("n", n)->required();
    an->add_option("--limit", cfg.limit, "largest n the search accepts");

    auto graph_input = [&](CLI::App* sub) { sub->add_option("graph", cfg.input, "graph file (graph6 or edge list), - for stdin"); };
    auto* chig = app.add_subcommand("chig", "graceful chromatic number");
    graph_input(chig);
    auto* chi2 = app.add_subcommand("chi2", "distance-two chromatic number");
    graph_input(chi2);
    auto* decide = app.add_subcommand("decide", "is the graph graceful k-colorable?");
    decide->add_option("--k", cfg.k)->required();
    graph_input(decide);
    auto* verify = app.add_subcommand("verify", "check a coloring");
    verify->add_option("--coloring", cfg.coloring_path, "JSON array of colors")->required();
    verify->add_option("--k", cfg.k, "palette size (optional range check)");
    graph_input(verify);
    auto* bounds_cmd = app.add_subcommand("bounds", "chi(G^2) and a(chi(G^2)) with a certifying coloring");
    graph_input(bounds_cmd);

    std::vector<std::string> gen_args;
    auto* gen = app.add_subcommand("gen", "generate a graph: complete|path|cycle|star N, gnp N P, cubic N, ...");
    gen->add_option("args", gen_args)->required();

    auto* reduce = app.add_subcommand("reduce", "build a reduction output");
    reduce->require_subcommand(1);
    auto* reduce_c1 = reduce->add_subcommand("construction1", "attach k-5 leaves per vertex of a cubic graph");
    reduce_c1->add_option("--k", cfg.k)->required();
    reduce_c1->add_option("-o,--output", cfg.output, "write graph6 here and provenance to <file>.json");
    graph_input(reduce_c1);
    auto* reduce_nae = reduce->add_subcommand("nae", "NAE-3SAT-E4 formula to graph");
    reduce_nae->add_option("formula", cfg.input);
    reduce_nae->add_option("-o,--output", cfg.output, "write graph6 here and provenance to <file>.json");

    std::string gadget_name;
    auto* gadget = app.add_subcommand("gadget", "gadget tools");
    gadget->require_subcommand(1);
    auto* gadget_verify = gadget->add_subcommand("verify", "exhaustively certify a gadget");
    gadget_verify->add_option("gadget", gadget_name)->required()->check(CLI::IsMember({"variable", "clause"}));

    auto* check = app.add_subcommand("check", "machine-check a reduction");
    check->require_subcommand(1);
    auto* check_nae = check->add_subcommand("nae", "formula vs reduction output");
    check_nae->add_option("formula", cfg.input);
    auto* check_c1 = check->add_subcommand("construction1", "cubic graph vs leaf construction");
    check_c1->add_option("--k", cfg.k)->required();
    graph_input(check_c1);

    auto* encode = app.add_subcommand("encode", "DIMACS CNF for graceful k-colorability");
    encode->add_option("--k", cfg.k)->required();
    encode->add_option("-o,--output", cfg.output, "output .cnf file");
    graph_input(encode);
    auto* solve = app.add_subcommand("solve", "decide via the CNF encoding");
    solve->add_option("--k", cfg.k)->required();
    solve->add_option("--external", cfg.external, "SAT solver command; receives the .cnf path");
    graph_input(solve);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << app.help();
        return kExitInput;
    }

    try {
        const Cli cli(cfg);
        if (*an) return cli.an(n);
        if (*chig) return cli.chig();
        if (*chi2) return cli.chi2();
        if (*decide) return cli.decide();
        if (*verify) return cli.verify();
        if (*bounds_cmd) return cli.bounds_cmd();
        if (*gen) return cli.gen(gen_args);
        if (*reduce_c1) return cli.reduce_construction1();
        if (*reduce_nae) return cli.reduce_nae();
        if (*gadget_verify) return cli.gadget_verify(gadget_name);
        if (*check_nae) return cli.check_nae();
        if (*check_c1) return cli.check_construction1();
        if (*encode) return cli.encode();
        if (*solve) return cli.solve();
    } catch (const InternalDefect& e) {
        std::cerr << "internal defect: " << e.what() << "\n";
        return kExitDefect;
    } catch (const BudgetExhausted& e) {
        std::cerr << e.what() << "\n";
        return kExitUnknown;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
