// Command-line front door: graph ingestion, solvers and recognizers as
// subcommands, JSON on stdout, diagnostics on stderr.
//
// Exit codes: 0 success, 1 crosscheck disagreement, 2 usage / parameter
// error, 3 unreadable or malformed input.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "copwin/corpus.hpp"
#include "copwin/decomposition.hpp"
#include "copwin/dismantling.hpp"
#include "copwin/game.hpp"
#include "copwin/hyperbolicity.hpp"
#include "copwin/io.hpp"
#include "copwin/strategy.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;

struct GraphInput {
    std::string path;
    std::string fixture_id;
    std::string format = "auto";

    copwin::Graph load() const {
        if (!fixture_id.empty()) return copwin::fixture(fixture_id);
        std::ifstream in(path, std::ios::binary);
        if (!in) throw copwin::ParseError("cannot read file: " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        copwin::GraphFormat fmt = copwin::GraphFormat::Auto;
        if (format == "edgelist") fmt = copwin::GraphFormat::EdgeList;
        if (format == "g6") fmt = copwin::GraphFormat::Graph6;
        auto graphs = copwin::parse_graphs(buf.str(), fmt);
        return graphs.front();
    }

    void attach(CLI::App* cmd) {
        cmd->add_option("input", path, "graph file (edge list or graph6)");
        cmd->add_option("--fixture", fixture_id, "named fixture instead of a file");
        cmd->add_option("--format", format, "input format: auto|edgelist|g6")
            ->check(CLI::IsMember({"auto", "edgelist", "g6"}));
        cmd->callback([this, cmd] {
            if (path.empty() == fixture_id.empty())
                throw CLI::ValidationError(cmd->get_name(),
                                           "give exactly one of a file or --fixture");
        });
    }
};

copwin::Radius parse_radius_opt(const std::string& text) { return copwin::Radius::parse(text); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pursuit games on graphs: exact solvers, elimination orders, decompositions"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent JSON output");

    // classify
    auto* classify = app.add_subcommand("classify", "dismantling verdict for speeds (s, s')");
    GraphInput classify_in;
    classify_in.attach(classify);
    std::string cl_s = "1", cl_sp = "1";
    classify->add_option("--s", cl_s, "robber speed (integer or inf)");
    classify->add_option("--sprime", cl_sp, "cop speed (integer or inf)");

    // solve
    auto* solve = app.add_subcommand("solve", "exact game solving");
    GraphInput solve_in;
    std::string solve_variant;
    solve->add_option("variant", solve_variant, "visible|witness|capture")
        ->required()
        ->check(CLI::IsMember({"visible", "witness", "capture"}));
    solve_in.attach(solve);
    std::string so_s = "1", so_sp = "1";
    int so_k = 2, so_radius = 1;
    bool so_dump = false, so_force = false;
    solve->add_option("--s", so_s, "robber speed");
    solve->add_option("--sprime", so_sp, "cop speed (visible)");
    solve->add_option("--k", so_k, "witness phase length");
    solve->add_option("--radius", so_radius, "capture radius");
    solve->add_flag("--dump-value", so_dump, "emit the full winner/label table");
    solve->add_flag("--force", so_force, "lift the witness k guard");

    // dismantle
    auto* dismantle = app.add_subcommand("dismantle", "elimination-order recognizers");
    GraphInput dis_in;
    dis_in.attach(dismantle);
    std::string dis_family;
    dismantle->add_option("--family", dis_family, "ss|mno|bipartite|bi|strongbi")
        ->required()
        ->check(CLI::IsMember({"ss", "mno", "bipartite", "bi", "strongbi"}));
    std::string dis_s = "1", dis_sp = "1";
    int dis_k = 2;
    dismantle->add_option("--s", dis_s, "robber speed (ss)");
    dismantle->add_option("--sprime", dis_sp, "cop speed (ss)");
    dismantle->add_option("--k", dis_k, "bidismantling depth (bi)");

    // decompose
    auto* decompose = app.add_subcommand("decompose", "block / peel decompositions");
    GraphInput dec_in;
    dec_in.attach(decompose);
    std::string dec_kind;
    decompose->add_option("--kind", dec_kind, "blocks|bb|btb")
        ->required()
        ->check(CLI::IsMember({"blocks", "bb", "btb"}));

    // hyperbolicity
    auto* hyp = app.add_subcommand("hyperbolicity", "exact four-point scan");
    GraphInput hyp_in;
    hyp_in.attach(hyp);

    // simulate
    auto* sim = app.add_subcommand("simulate", "play a strategy against a robber policy");
    GraphInput sim_in;
    sim_in.attach(sim);
    std::string sim_game = "visible";
    sim->add_option("--game", sim_game, "visible|witness|capture")
        ->check(CLI::IsMember({"visible", "witness", "capture"}));
    std::string sim_cop = "optimal";
    sim->add_option("--cop", sim_cop, "shadow|mark|bb|btb|optimal")
        ->check(CLI::IsMember({"shadow", "mark", "bb", "btb", "optimal"}));
    std::string sim_robber = "optimal";
    sim->add_option("--robber", sim_robber, "optimal|random:SEED");
    std::string sim_s = "1", sim_sp = "1";
    int sim_k = 2, sim_radius = 1, sim_cap = -1;
    sim->add_option("--s", sim_s, "robber speed");
    sim->add_option("--sprime", sim_sp, "cop speed (visible)");
    sim->add_option("--k", sim_k, "witness phase length");
    sim->add_option("--radius", sim_radius, "capture radius");
    sim->add_option("--cap", sim_cap, "step cap (default 4*n^2*k)");

    // crosscheck
    auto* cross = app.add_subcommand("crosscheck", "solver/recognizer agreement over a corpus");
    int cr_max_n = 5;
    cross->add_option("--max-n", cr_max_n, "enumerate all connected graphs up to this size");
    std::string cr_checks = "visible-dismantle";
    cross->add_option("--checks", cr_checks, "comma-separated check names, or 'all'");
    int cr_sample = 0;
    uint64_t cr_seed = 1;
    int cr_sample_n = 8;
    cross->add_option("--sample", cr_sample, "sample this many random graphs instead");
    cross->add_option("--sample-n", cr_sample_n, "vertex count for sampled graphs");
    cross->add_option("--seed", cr_seed, "sampling seed");
    std::string cr_graphs_file;
    cross->add_option("--graphs", cr_graphs_file, "graph6 corpus file instead of a generator");
    int cr_threads = 0;
    cross->add_option("--threads", cr_threads, "worker threads (0 = auto)");
    bool cr_list = false;
    cross->add_flag("--list-checks", cr_list, "print available check names and exit");
    bool cr_inject = false;
    cross->add_flag("--inject-failure", cr_inject,
                    "add a synthetic always-disagreeing check (harness self-test)");

    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints help or the parse diagnostic
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (classify->parsed()) {
            copwin::Graph g = classify_in.load();
            auto cert =
                copwin::ss_dismantle(g, parse_radius_opt(cl_s), parse_radius_opt(cl_sp));
            if (cert)
                std::cout << copwin::json_certificate(*cert, pretty);
            else
                std::cout << copwin::json_no_certificate("ss", pretty);
            return kExitOk;
        }

        if (solve->parsed()) {
            copwin::Graph g = solve_in.load();
            copwin::GameValue v;
            if (solve_variant == "visible")
                v = copwin::solve_visible(g, parse_radius_opt(so_s), parse_radius_opt(so_sp));
            else if (solve_variant == "witness")
                v = copwin::solve_witness(g, so_k, parse_radius_opt(so_s), so_force);
            else
                v = copwin::solve_capture(g, so_radius);
            std::cout << copwin::json_game_summary(v, so_dump, pretty);
            return kExitOk;
        }

        if (dismantle->parsed()) {
            copwin::Graph g = dis_in.load();
            std::optional<copwin::EliminationCertificate> cert;
            if (dis_family == "ss")
                cert = copwin::ss_dismantle(g, parse_radius_opt(dis_s), parse_radius_opt(dis_sp));
            else if (dis_family == "mno")
                cert = copwin::mno_order(g);
            else if (dis_family == "bipartite")
                cert = copwin::bipartite_dismantle(g);
            else if (dis_family == "bi")
                cert = copwin::bidismantle(g, dis_k);
            else
                cert = copwin::strong_bidismantle(g);
            if (cert)
                std::cout << copwin::json_certificate(*cert, pretty);
            else
                std::cout << copwin::json_no_certificate(dis_family, pretty);
            return kExitOk;
        }

        if (decompose->parsed()) {
            copwin::Graph g = dec_in.load();
            if (dec_kind == "blocks") {
                std::cout << copwin::json_blocks(copwin::blocks_and_articulations(g), pretty);
                return kExitOk;
            }
            auto d = dec_kind == "bb" ? copwin::big_brother(g) : copwin::big_two_brother(g);
            if (d)
                std::cout << copwin::json_decomposition(*d, pretty);
            else
                std::cout << copwin::json_no_decomposition(dec_kind, pretty);
            return kExitOk;
        }

        if (hyp->parsed()) {
            copwin::Graph g = hyp_in.load();
            std::cout << copwin::json_hyperbolicity(copwin::hyperbolicity(g), pretty);
            return kExitOk;
        }

        if (sim->parsed()) {
            copwin::Graph g = sim_in.load();
            copwin::GameSpec spec;
            if (sim_game == "visible")
                spec = copwin::GameSpec::visible(parse_radius_opt(sim_s),
                                                 parse_radius_opt(sim_sp));
            else if (sim_game == "witness")
                spec = copwin::GameSpec::witness(sim_k, parse_radius_opt(sim_s));
            else
                spec = copwin::GameSpec::capture(sim_radius);

            copwin::GameValue value;
            if (sim_game == "visible")
                value = copwin::solve_visible(g, spec.robber_speed, spec.cop_speed);
            else if (sim_game == "witness")
                value = copwin::solve_witness(g, spec.witness_phase, spec.robber_speed);
            else
                value = copwin::solve_capture(g, spec.capture_radius);
            copwin::OptimalPolicies policies(g, value);

            copwin::StrategyTable table;
            copwin::CopAgent cop;
            if (sim_cop == "optimal") {
                cop.optimal = &policies;
            } else if (sim_cop == "shadow") {
                auto cert = copwin::ss_dismantle(g, spec.robber_speed, spec.cop_speed);
                if (!cert) throw copwin::ParamError("graph has no (s,s') elimination order");
                table = copwin::shadow_strategy(g, *cert);
                cop.table = &table;
            } else if (sim_cop == "mark") {
                copwin::VertexSet all(g.vertex_count());
                for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
                table = copwin::mark_strategy(g, copwin::mark_procedure(g, all, sim_k));
                cop.table = &table;
            } else if (sim_cop == "bb") {
                auto d = copwin::big_brother(g);
                if (!d) throw copwin::ParamError("graph is not a big-brother graph");
                table = copwin::bb_strategy(g, *d);
                cop.table = &table;
            } else {
                auto d = copwin::big_two_brother(g);
                if (!d) throw copwin::ParamError("graph is not a big-two-brother graph");
                table = copwin::btb_witness_strategy(g, *d, sim_k);
                cop.table = &table;
            }

            copwin::RobberAgent robber;
            if (sim_robber == "optimal") {
                robber.kind = copwin::RobberAgent::Kind::Optimal;
                robber.optimal = &policies;
            } else if (sim_robber.starts_with("random:")) {
                robber.kind = copwin::RobberAgent::Kind::Random;
                robber.seed = std::stoull(sim_robber.substr(7));
            } else {
                throw copwin::ParamError("robber policy must be optimal or random:SEED");
            }

            int cap = sim_cap > 0 ? sim_cap : copwin::default_step_cap(g, spec);
            copwin::Trace trace = copwin::simulate(g, spec, cop, robber, cap);
            std::cout << copwin::json_trace(trace, pretty);
            return kExitOk;
        }

        if (cross->parsed()) {
            if (cr_list) {
                for (const auto& name : copwin::available_checks()) std::cout << name << "\n";
                return kExitOk;
            }
            std::vector<std::string> names;
            if (cr_checks == "all") {
                for (const auto& name : copwin::available_checks())
                    if (name != "self-test-inject") names.push_back(name);
            } else {
                std::stringstream ss(cr_checks);
                std::string item;
                while (std::getline(ss, item, ','))
                    if (!item.empty()) names.push_back(item);
            }
            if (cr_inject) names.push_back("self-test-inject");
            if (names.empty()) throw copwin::ParamError("no checks selected");

            copwin::CorpusSpec corpus;
            if (!cr_graphs_file.empty()) {
                std::ifstream in(cr_graphs_file, std::ios::binary);
                if (!in) throw copwin::ParseError("cannot read file: " + cr_graphs_file);
                std::ostringstream buf;
                buf << in.rdbuf();
                corpus.source = copwin::CorpusSpec::Source::Explicit;
                corpus.graphs = copwin::parse_graphs(buf.str(), copwin::GraphFormat::Auto);
            } else if (cr_sample > 0) {
                corpus.source = copwin::CorpusSpec::Source::Sample;
                corpus.sample_n = cr_sample_n;
                corpus.sample_count = cr_sample;
                corpus.seed = cr_seed;
            } else {
                corpus.source = copwin::CorpusSpec::Source::Enumerate;
                corpus.max_n = cr_max_n;
            }

            copwin::CrosscheckReport report = copwin::crosscheck(corpus, names, cr_threads);
            std::cout << copwin::json_crosscheck(report, pretty);
            return report.ok() ? kExitOk : kExitDisagreement;
        }
    } catch (const copwin::ParamError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const copwin::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitUsage;
}
