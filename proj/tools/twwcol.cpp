// twwcol: twin-width contraction sequences, nice orders and colouring numbers.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "twwcol/bounds.hpp"
#include "twwcol/cograph.hpp"
#include "twwcol/enumerate.hpp"
#include "twwcol/errors.hpp"
#include "twwcol/generators.hpp"
#include "twwcol/graph.hpp"
#include "twwcol/graph_io.hpp"
#include "twwcol/nice_ordering.hpp"
#include "twwcol/reachability.hpp"
#include "twwcol/trigraph.hpp"
#include "twwcol/witness_io.hpp"

using namespace twwcol;

namespace {

constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t default_budget() {
    if (const char* env = std::getenv("TWW_BUDGET")) {
        try {
            std::size_t used = 0;
            const unsigned long long value = std::stoull(env, &used);
            if (used == std::string(env).size() && value > 0) return value;
        } catch (const std::exception&) {
        }
        throw UsageError("TWW_BUDGET must be a positive integer");
    }
    return 10'000'000;
}

std::pair<int, int> parse_range(const std::string& text) {
    int lo = 0, hi = 0;
    char extra = 0;
    if (auto dots = text.find(".."); dots != std::string::npos) {
        std::istringstream a(text.substr(0, dots)), b(text.substr(dots + 2));
        if (!(a >> lo) || (a >> extra) || !(b >> hi) || (b >> extra)) throw UsageError("bad r range '" + text + "'");
    } else {
        std::istringstream a(text);
        if (!(a >> lo) || (a >> extra)) throw UsageError("bad r range '" + text + "'");
        hi = lo;
    }
    if (lo < 1 || hi < lo) throw UsageError("r range must be non-empty and positive");
    return {lo, hi};
}

// k<n>, c<n>, p<n>, petersen, or a graph file.
Graph named_graph(const std::string& name) {
    auto number = [&](std::size_t from) {
        std::size_t used = 0;
        const int value = std::stoi(name.substr(from), &used);
        if (used + from != name.size()) throw std::invalid_argument(name);
        return value;
    };
    try {
        if (name == "petersen") return petersen_graph();
        if (name.size() > 1 && (name[0] == 'k' || name[0] == 'K')) return complete_graph(number(1));
        if (name.size() > 1 && (name[0] == 'c' || name[0] == 'C')) return cycle_graph(number(1));
        if (name.size() > 1 && (name[0] == 'p' || name[0] == 'P')) return path_graph(number(1));
    } catch (const std::invalid_argument&) {
        // not a name, fall through to a file
    }
    return read_graph_file(name).graph;
}

template <typename Write>
void emit(const std::string& path, Write write) {
    if (path.empty() || path == "-") {
        write(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    write(out);
}

// summary lines go to stdout unless stdout carries the payload
std::ostream& info(const std::string& payload_path) {
    return (payload_path.empty() || payload_path == "-") ? std::cerr : std::cout;
}

Graph load(const std::string& path) { return read_graph_file(path).graph; }

struct GenArgs {
    std::string kind;
    int n = 0, k = 0, s = 1, levels = 1;
    std::string base = "k4";
    std::uint64_t seed = kDefaultSeed;
    std::string out, witness;
    bool girth = false;
};

int run_gen(const GenArgs& a) {
    Graph g;
    std::optional<ContractionSequence> witness;
    if (a.kind == "subdivided-clique") {
        g = subdivided_clique(a.n, a.k);
    } else if (a.kind == "theta-lift") {
        const LiftTower tower = theta_lift_tower(named_graph(a.base));
        g = tower.top();
        witness = undo_lift_witness(tower);
    } else if (a.kind == "two-lift-tower") {
        Rng rng(a.seed);
        const LiftTower tower = random_tower(named_graph(a.base), a.levels, rng);
        g = tower.top();
        witness = undo_lift_witness(tower);
    } else if (a.kind == "lex-clique") {
        g = lex_product_clique(named_graph(a.base), a.s);
    } else if (a.kind == "cograph") {
        g = random_cograph(a.n, a.seed);
        witness = cograph_witness(g);
    } else if (a.kind == "complete") {
        g = complete_graph(a.n);
    } else {
        throw UsageError("unknown generator '" + a.kind + "'");
    }
    emit(a.out, [&](std::ostream& out) { write_graph(out, g); });
    if (!a.witness.empty()) {
        if (!witness) throw UsageError("generator '" + a.kind + "' has no witness to write");
        write_witness_file(a.witness, *witness);
    }
    std::ostream& log = info(a.out);
    log << "n=" << g.size() << " m=" << g.num_edges();
    if (a.girth) log << " girth=" << girth(g).to_string();
    if (witness && !a.witness.empty()) log << " width=" << width(*witness);
    log << '\n';
    return 0;
}

struct OrderArgs {
    std::string graph, witness, out;
    std::optional<int> s;
    bool cograph = false, per_component = false;
    std::string r = "1..3";
};

int run_order(const OrderArgs& a) {
    const Graph g = load(a.graph);
    const auto [rlo, rhi] = parse_range(a.r);
    LinearOrder order;
    if (a.cograph) {
        order = cograph_order(g);
    } else {
        ContractionSequence seq;
        if (!a.witness.empty()) {
            seq = read_witness_file(a.witness, g);
        } else if (is_cograph(g)) {
            seq = cograph_witness(g);
        } else {
            throw UsageError("a witness is required for graphs that are not cographs (--witness FILE)");
        }
        if (a.per_component)
            order = nice_order_per_component(seq, a.s);
        else
            order = nice_order_incremental(seq, a.s);
    }
    emit(a.out, [&](std::ostream& out) { write_order(out, order); });
    std::ostream& log = info(a.out);
    for (int r = rlo; r <= rhi; ++r) {
        const ReachProfile p = profile(g, order, r, default_budget());
        log << "r=" << r << " wcol=" << p.wcol << " scol=" << p.scol << " adm=" << p.adm << '\n';
    }
    return 0;
}

struct ParamsArgs {
    std::string graph, order, format = "table", out;
    std::string r = "1..3";
    bool exact = false;
    int max_n = 11;
};

int run_params(const ParamsArgs& a) {
    const Graph g = load(a.graph);
    const auto [rlo, rhi] = parse_range(a.r);
    const LinearOrder order = a.order.empty() ? LinearOrder::identity(g.size()) : read_order_file(a.order, g.size());
    if (a.format != "table" && a.format != "csv" && a.format != "json")
        throw UsageError("format must be table, csv or json");
    if (a.format != "table") {
        if (a.exact) throw UsageError("--exact prints a table; per-vertex csv/json describe a fixed order");
        emit(a.out, [&](std::ostream& out) {
            // several radii: csv blocks separated by "# r=" lines, json as an array
            const bool several = rlo != rhi;
            if (several && a.format == "json") out << "[\n";
            for (int r = rlo; r <= rhi; ++r) {
                const ReachProfile p = profile(g, order, r, default_budget());
                if (a.format == "csv") {
                    if (several) out << "# r=" << r << '\n';
                    write_profile_csv(out, p);
                } else {
                    if (several && r > rlo) out << ",\n";
                    write_profile_json(out, p);
                }
            }
            if (several && a.format == "json") out << "]\n";
        });
        return 0;
    }
    emit(a.out, [&](std::ostream& out) {
        out << "r\twcol\tscol\tadm\t" << (a.exact ? "exact" : "order") << '\n';
        for (int r = rlo; r <= rhi; ++r) {
            if (a.exact) {
                ExactOptions eo;
                eo.max_vertices = a.max_n;
                eo.budget = default_budget();
                out << r << '\t' << exact_param(g, Param::Wcol, r, eo).value << '\t'
                    << exact_param(g, Param::Scol, r, eo).value << '\t' << exact_param(g, Param::Adm, r, eo).value
                    << "\texact\n";
            } else {
                const ReachProfile p = profile(g, order, r, default_budget());
                out << r << '\t' << p.wcol << '\t' << p.scol << '\t' << p.adm << "\torder\n";
            }
        }
    });
    return 0;
}

struct VerifyArgs {
    std::string graph, witness, json, csv;
    std::string r = "1..3";
    bool all_connected = false;
    int max_n = 6;
    int exact_limit = 8;
};

int run_verify(const VerifyArgs& a) {
    const auto [rlo, rhi] = parse_range(a.r);
    VerifyOptions vo;
    vo.r_min = rlo;
    vo.r_max = rhi;
    vo.exact_limit = a.exact_limit;
    vo.budget = default_budget();
    std::vector<BoundReport> reports;
    if (a.all_connected) {
        if (a.max_n < 1 || a.max_n > 9) throw UsageError("--max-n must be in 1..9");
        TwwOptions to;
        to.budget = vo.budget;
        for (int n = 1; n <= a.max_n; ++n) {
            const auto graphs = nonisomorphic_graphs(n, true);
            for (std::size_t i = 0; i < graphs.size(); ++i) {
                vo.instance = "n" + std::to_string(n) + "-" + std::to_string(i);
                const TwwResult t = exact_tww(graphs[i], to);
                reports.push_back(verify_instance(graphs[i], t.witness, vo));
            }
        }
    } else {
        if (a.graph.empty() || a.witness.empty()) throw UsageError("verify needs --graph and --witness, or --all-connected");
        const Graph g = load(a.graph);
        const ContractionSequence seq = read_witness_file(a.witness, g);
        vo.instance = a.graph;
        reports.push_back(verify_instance(g, seq, vo));
    }
    if (!a.json.empty()) emit(a.json, [&](std::ostream& out) { write_reports_json(out, reports); });
    if (!a.csv.empty()) emit(a.csv, [&](std::ostream& out) { write_reports_csv(out, reports); });

    std::map<std::string, int> tally;
    int violated = 0;
    for (const auto& rep : reports) {
        for (const auto& c : rep.checks) ++tally[to_string(c.verdict)];
        if (rep.violated()) {
            ++violated;
            for (const auto& c : rep.checks)
                if (c.verdict == Verdict::Violated)
                    std::cerr << rep.instance << ": " << c.name << " r=" << c.r << " value=" << c.value.value_or(-1)
                              << " bound=" << c.bound << '\n';
        }
    }
    std::ostream& log = (a.json == "-" || a.csv == "-") ? std::cerr : std::cout;
    log << "instances=" << reports.size();
    for (const auto& [verdict, count] : tally) log << ' ' << verdict << '=' << count;
    log << '\n';
    return violated == 0 ? 0 : 1;
}

int run_tww(const std::string& graph, const std::string& out, int max_n) {
    const Graph g = load(graph);
    TwwOptions to;
    to.budget = default_budget();
    to.max_vertices = max_n;
    try {
        const TwwResult result = exact_tww(g, to);
        if (!out.empty()) write_witness_file(out, result.witness);
        std::cout << result.width << '\n';
        return 0;
    } catch (const ResourceLimitError& e) {
        std::cerr << "error: " << e.what();
        if (e.best_upper_bound()) std::cerr << " (best upper bound " << *e.best_upper_bound() << ")";
        std::cerr << '\n';
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Twin-width contraction sequences, nice orders and generalized colouring numbers"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a graph family");
    gen_cmd->add_option("kind", gen.kind, "subdivided-clique | theta-lift | two-lift-tower | lex-clique | cograph | complete")
        ->required();
    gen_cmd->add_option("--n", gen.n, "Vertex count (clique size for subdivided-clique)");
    gen_cmd->add_option("--k", gen.k, "Subdivisions per edge");
    gen_cmd->add_option("--s", gen.s, "Clique size of the lexicographic product");
    gen_cmd->add_option("--base", gen.base, "Base graph: kN, cN, pN, petersen or a graph file");
    gen_cmd->add_option("--levels", gen.levels, "Number of random 2-lifts");
    gen_cmd->add_option("--seed", gen.seed, "Random seed");
    gen_cmd->add_option("--out,-o", gen.out, "Graph file (default stdout)");
    gen_cmd->add_option("--witness", gen.witness, "Also write the contraction sequence");
    gen_cmd->add_flag("--girth", gen.girth, "Report the girth");

    OrderArgs order;
    std::optional<int> order_s;
    auto* order_cmd = app.add_subcommand("order", "Build the nice vertex order of a contraction sequence");
    order_cmd->add_option("--graph,-g", order.graph, "Graph file")->required();
    order_cmd->add_option("--witness,-w", order.witness, "Contraction sequence file");
    order_cmd->add_option("--s", order_s, "Small-node threshold (default: biclique number)");
    order_cmd->add_flag("--cograph", order.cograph, "Use the cotree order");
    order_cmd->add_flag("--per-component", order.per_component, "Order each component separately");
    order_cmd->add_option("--r", order.r, "Radii to report, e.g. 1..3");
    order_cmd->add_option("--out,-o", order.out, "Order file (default stdout)");

    ParamsArgs params;
    auto* params_cmd = app.add_subcommand("params", "wcol, scol and adm for an order or at the optimum");
    params_cmd->add_option("--graph,-g", params.graph, "Graph file")->required();
    params_cmd->add_option("--order", params.order, "Order file (default identity)");
    params_cmd->add_option("--r", params.r, "Radii, e.g. 1..3");
    params_cmd->add_flag("--exact", params.exact, "Minimize over all orders");
    params_cmd->add_option("--max-n", params.max_n, "Vertex limit for --exact");
    params_cmd->add_option("--format", params.format, "table | csv | json");
    params_cmd->add_option("--out,-o", params.out, "Output file (default stdout)");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Check every bound on an instance");
    verify_cmd->add_option("--graph,-g", verify.graph, "Graph file");
    verify_cmd->add_option("--witness,-w", verify.witness, "Contraction sequence file");
    verify_cmd->add_option("--r", verify.r, "Radii, e.g. 1..3");
    verify_cmd->add_flag("--all-connected", verify.all_connected, "Every connected graph up to --max-n vertices");
    verify_cmd->add_option("--max-n", verify.max_n, "Largest graph for --all-connected");
    verify_cmd->add_option("--exact-limit", verify.exact_limit, "Vertex limit for exact parameters");
    verify_cmd->add_option("--json", verify.json, "Write reports as JSON");
    verify_cmd->add_option("--csv", verify.csv, "Write checks as CSV");

    std::string tww_graph, tww_out;
    int tww_max = 9;
    auto* tww_cmd = app.add_subcommand("tww", "Exact twin-width with a witness");
    tww_cmd->add_option("--graph,-g", tww_graph, "Graph file")->required();
    tww_cmd->add_option("--out,-o", tww_out, "Witness file");
    tww_cmd->add_option("--max-n", tww_max, "Vertex limit");

    std::string girth_graph;
    auto* girth_cmd = app.add_subcommand("girth", "Length of a shortest cycle");
    girth_cmd->add_option("--graph,-g", girth_graph, "Graph file")->required();

    std::string bomega_graph;
    auto* bomega_cmd = app.add_subcommand("bomega", "Largest s with K_{s,s} as a subgraph");
    bomega_cmd->add_option("--graph,-g", bomega_graph, "Graph file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen_cmd->parsed()) return run_gen(gen);
        if (order_cmd->parsed()) {
            order.s = order_s;
            return run_order(order);
        }
        if (params_cmd->parsed()) return run_params(params);
        if (verify_cmd->parsed()) return run_verify(verify);
        if (tww_cmd->parsed()) return run_tww(tww_graph, tww_out, tww_max);
        if (girth_cmd->parsed()) {
            std::cout << girth(load(girth_graph)).to_string() << '\n';
            return 0;
        }
        if (bomega_cmd->parsed()) {
            std::cout << bomega(load(bomega_graph), default_budget()) << '\n';
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
