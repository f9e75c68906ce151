// netcomp command-line front end: simulate | ensemble | fit | netstat.
//
// Every run writes a manifest.txt (flat key=value, same syntax --config
// accepts) holding each effective value, so any output can be reproduced
// byte-for-byte by pointing --config at a previous manifest.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "netcomp/calibrate.hpp"
#include "netcomp/csv.hpp"
#include "netcomp/dynamics.hpp"
#include "netcomp/ensemble.hpp"
#include "netcomp/graph.hpp"
#include "netcomp/graph_io.hpp"
#include "netcomp/manifest.hpp"
#include "netcomp/rng.hpp"
#include "netcomp/svg.hpp"

namespace fs = std::filesystem;
using namespace netcomp;

namespace {

std::string default_out_dir() {
    const char* env = std::getenv("NETCOMP_OUT_DIR");
    return env && *env ? env : ".";
}

// Expands `<subcommand> ... --config FILE ...` by splicing the file's
// key=value pairs in as --key=value tokens ahead of the explicit flags, so
// command-line flags always win.
std::vector<std::string> expand_config_args(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty()) return args;
    std::string config_path;
    for (std::size_t i = 1; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size())
            config_path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0)
            config_path = args[i].substr(9);
    }
    if (config_path.empty()) return args;
    std::ifstream in(config_path);
    if (!in) throw std::runtime_error("cannot open config file '" + config_path + "'");
    const Manifest m = Manifest::read(in);
    std::vector<std::string> expanded;
    expanded.push_back(args[0]);
    for (const auto& [key, value] : m.entries())
        if (key != "config") expanded.push_back("--" + key + "=" + value);
    expanded.insert(expanded.end(), args.begin() + 1, args.end());
    return expanded;
}

std::ofstream open_output(const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    return out;
}

std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
    std::vector<std::uint64_t> seeds;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) seeds.push_back(std::stoull(item));
    if (seeds.empty()) throw CLI::ValidationError("seeds", "empty seed list");
    return seeds;
}

// "lo:hi:points" or a single fixed value.
ParamAxis parse_axis(const std::string& text, const std::string& flag) {
    ParamAxis axis;
    const auto c1 = text.find(':');
    try {
        if (c1 == std::string::npos) {
            axis.lo = axis.hi = std::stod(text);
            axis.points = 1;
            return axis;
        }
        const auto c2 = text.find(':', c1 + 1);
        if (c2 == std::string::npos) throw std::invalid_argument(text);
        axis.lo = std::stod(text.substr(0, c1));
        axis.hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
        axis.points = std::stoi(text.substr(c2 + 1));
    } catch (const std::exception&) {
        throw CLI::ValidationError(flag, "expected VALUE or LO:HI:POINTS, got '" + text + "'");
    }
    if (axis.points < 1) throw CLI::ValidationError(flag, "points must be >= 1");
    if (axis.points > 1 && !(axis.hi > axis.lo))
        throw CLI::ValidationError(flag, "need hi > lo for a swept axis");
    return axis;
}

// Options shared by the network-building subcommands.
struct NetOpts {
    std::uint64_t n = 5000;
    std::uint64_t k_ws = 14;
    double rho_ws = 0.01;

    void attach(CLI::App* cmd) {
        cmd->add_option("--n", n, "number of agents")->capture_default_str();
        cmd->add_option("--k-ws", k_ws, "ring-lattice neighbors per node (even)")
            ->capture_default_str();
        cmd->add_option("--rho-ws", rho_ws, "rewiring probability")
            ->check(CLI::Range(0.0, 1.0))
            ->capture_default_str();
    }
    WsConfig config(std::uint64_t seed) const {
        return WsConfig{static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k_ws), rho_ws,
                        seed};
    }
    void record(Manifest& m) const {
        m.set("n", n);
        m.set("k-ws", k_ws);
        m.set("rho-ws", rho_ws);
    }
};

struct ModelOpts {
    double alpha = 1.0, gamma = 1.0, s_a = 0.5, s_b = 0.5;
    bool complement = false;
    double init_frac_a = 0.5, init_frac_b = 0.5;
    std::string scheme = "async", weighting = "fraction";

    void attach(CLI::App* cmd) {
        cmd->add_option("--alpha", alpha, "neighbor-term exponent")
            ->check(CLI::NonNegativeNumber)
            ->capture_default_str();
        cmd->add_option("--gamma", gamma, "status exponent")
            ->check(CLI::NonNegativeNumber)
            ->capture_default_str();
        cmd->add_option("--s-a", s_a, "perceived status of group A")
            ->check(CLI::Range(0.0, 1.0))
            ->capture_default_str();
        cmd->add_option("--s-b", s_b, "perceived status of group B")
            ->check(CLI::Range(0.0, 1.0))
            ->capture_default_str();
        cmd->add_flag("--complement", complement, "force s_b = 1 - s_a");
        cmd->add_option("--init-frac-a", init_frac_a, "initial fraction in group A")
            ->check(CLI::Range(0.0, 1.0))
            ->capture_default_str();
        cmd->add_option("--init-frac-b", init_frac_b, "initial fraction in group B")
            ->check(CLI::Range(0.0, 1.0))
            ->capture_default_str();
        cmd->add_option("--scheme", scheme, "update scheme")
            ->check(CLI::IsMember({"async", "sync"}))
            ->capture_default_str();
        cmd->add_option("--weighting", weighting, "neighbor-term normalization")
            ->check(CLI::IsMember({"fraction", "rawclamp"}))
            ->capture_default_str();
    }
    ModelParams params() const {
        ModelParams p;
        p.alpha = alpha;
        p.gamma = gamma;
        p.s_a = s_a;
        p.s_b = complement ? 1.0 - s_a : s_b;
        p.init_frac_a = init_frac_a;
        p.init_frac_b = init_frac_b;
        p.scheme = scheme_from_string(scheme);
        p.weighting = weighting_from_string(weighting);
        p.validate();
        return p;
    }
    void record(Manifest& m) const {
        m.set("alpha", alpha);
        m.set("gamma", gamma);
        m.set("s-a", s_a);
        m.set("s-b", s_b);
        m.set("complement", std::string(complement ? "true" : "false"));
        m.set("init-frac-a", init_frac_a);
        m.set("init-frac-b", init_frac_b);
        m.set("scheme", scheme);
        m.set("weighting", weighting);
    }
};

void write_manifest(const fs::path& dir, const std::string& subcommand, const Manifest& m) {
    auto out = open_output(dir / "manifest.txt");
    out << "# netcomp manifest, format 1\n";
    out << "# subcommand: " << subcommand << "\n";
    m.write(out);
}

// ---------------------------------------------------------------- simulate

struct SimulateCmd {
    NetOpts net;
    ModelOpts model;
    std::uint64_t seed = 1;
    std::uint64_t t_max = 100;
    std::string graph_in;
    std::uint64_t snapshot_every = 0;
    std::string snapshot_format = "graphml";
    bool plot = true;
    std::string out_dir = default_out_dir();

    void attach(CLI::App* cmd) {
        net.attach(cmd);
        model.attach(cmd);
        cmd->add_option("--seed", seed, "RNG seed")->capture_default_str();
        cmd->add_option("--t-max", t_max, "number of steps")->capture_default_str();
        cmd->add_option("--graph-in", graph_in,
                        "GraphML file to run on instead of generating (group attributes, when "
                        "present, seed the initial states)")
            ->check(CLI::ExistingFile);
        cmd->add_option("--snapshot-every", snapshot_every,
                        "write a network snapshot every N steps (0 = off)")
            ->capture_default_str();
        cmd->add_option("--snapshot-format", snapshot_format, "snapshot file format")
            ->check(CLI::IsMember({"graphml", "dot"}))
            ->capture_default_str();
        cmd->add_flag("--plot,!--no-plot", plot, "write an SVG chart")->capture_default_str();
        cmd->add_option("--out-dir", out_dir, "output directory")->capture_default_str();
    }

    int run_cmd() {
        const ModelParams params = model.params();
        fs::create_directories(out_dir);

        Graph g(0);
        std::optional<AgentStateVector> imported;
        Rng rng(seed);
        if (!graph_in.empty()) {
            auto [graph, states] = read_graphml_file(graph_in);
            g = std::move(graph);
            imported = std::move(states);
        } else {
            const WsConfig ws = net.config(seed);
            Graph ring = build_ring_lattice(ws);
            RewireStats stats;
            g = rewire(ring, ws, rng, &stats);
            if (stats.exhausted)
                std::fprintf(stderr, "warning: %zu edges kept in place after redraw budget\n",
                             stats.exhausted);
        }
        AgentStateVector states = imported ? *imported : init_states(g, params, rng);

        Trajectory traj;
        traj.n = g.node_count();
        traj.counts.push_back(count_groups(states));
        snapshot(g, states, 0);
        for (std::uint64_t t = 1; t <= t_max; ++t) {
            step(g, states, params, rng);
            traj.counts.push_back(count_groups(states));
            if (snapshot_every && t % snapshot_every == 0) snapshot(g, states, t);
        }

        {
            auto out = open_output(fs::path(out_dir) / "trajectory.csv");
            write_trajectory_csv(out, traj);
        }
        if (plot) {
            auto out = open_output(fs::path(out_dir) / "trajectory.svg");
            write_trajectory_svg(out, traj);
        }

        Manifest m;
        net.record(m);
        model.record(m);
        m.set("seed", seed);
        m.set("t-max", t_max);
        if (!graph_in.empty()) m.set("graph-in", graph_in);
        m.set("snapshot-every", snapshot_every);
        m.set("snapshot-format", snapshot_format);
        m.set("plot", std::string(plot ? "true" : "false"));
        m.set("out-dir", out_dir);
        write_manifest(out_dir, "simulate", m);

        std::printf("simulate: %llu steps, terminal fractions a=%.6f b=%.6f u=%.6f\n",
                    static_cast<unsigned long long>(t_max), traj.frac_a(t_max), traj.frac_b(t_max),
                    traj.frac_u(t_max));
        return 0;
    }

    void snapshot(const Graph& g, const AgentStateVector& states, std::uint64_t t) const {
        if (!snapshot_every) return;
        char name[64];
        std::snprintf(name, sizeof name, "snapshot_%06llu.%s", static_cast<unsigned long long>(t),
                      snapshot_format == "dot" ? "dot" : "graphml");
        auto out = open_output(fs::path(out_dir) / name);
        if (snapshot_format == "dot")
            write_dot(out, g, &states);
        else
            write_graphml(out, g, &states);
    }
};

// ---------------------------------------------------------------- ensemble

struct EnsembleCmd {
    NetOpts net;
    ModelOpts model;
    std::uint64_t t_max = 100;
    std::string seeds_text;
    std::uint64_t seed_base = 1;
    std::uint64_t runs = 30;
    bool shared_graph = false;
    bool plot = true;
    std::string out_dir = default_out_dir();
    std::string empirical_out;
    std::uint64_t sample_every = 10;
    double steps_per_year = 1.0;
    double start_year = 0.0;

    void attach(CLI::App* cmd) {
        net.attach(cmd);
        model.attach(cmd);
        cmd->add_option("--t-max", t_max, "number of steps")->capture_default_str();
        cmd->add_option("--seeds", seeds_text, "explicit comma-separated seed list");
        cmd->add_option("--seed-base", seed_base, "first seed (seeds are consecutive)")
            ->capture_default_str();
        cmd->add_option("--runs", runs, "ensemble size when --seeds is absent")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        cmd->add_flag("--shared-graph", shared_graph,
                      "reuse one topology (seeded from --seed-base) for all runs");
        cmd->add_flag("--plot,!--no-plot", plot, "write an SVG chart")->capture_default_str();
        cmd->add_option("--out-dir", out_dir, "output directory")->capture_default_str();
        cmd->add_option("--empirical-out", empirical_out,
                        "also sample the ensemble mean into an empirical-schema CSV (synthetic "
                        "fixture generator)");
        cmd->add_option("--sample-every", sample_every, "steps between fixture samples")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        cmd->add_option("--steps-per-year", steps_per_year, "fixture time mapping")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        cmd->add_option("--start-year", start_year, "fixture time origin")->capture_default_str();
    }

    int run_cmd() {
        const ModelParams params = model.params();
        const std::vector<std::uint64_t> seeds = seeds_text.empty()
                                                     ? consecutive_seeds(seed_base, runs)
                                                     : parse_seed_list(seeds_text);
        EnsembleOptions opts;
        opts.shared_graph = shared_graph;
        const EnsembleResult res =
            run_ensemble(net.config(seed_base), params,
                         static_cast<std::uint32_t>(t_max), seeds, opts);

        fs::create_directories(out_dir);
        {
            auto out = open_output(fs::path(out_dir) / "ensemble.csv");
            write_ensemble_csv(out, res);
        }
        if (plot) {
            auto out = open_output(fs::path(out_dir) / "ensemble.svg");
            write_ensemble_svg(out, res);
        }
        if (!empirical_out.empty()) {
            const GroupLabel all[] = {GroupLabel::GroupA, GroupLabel::GroupB,
                                      GroupLabel::Unassigned};
            const EmpiricalSeries series =
                synthesize_series(res, all, static_cast<std::uint32_t>(sample_every),
                                  steps_per_year, start_year);
            auto out = open_output(fs::path(out_dir) / empirical_out);
            write_empirical_csv(out, series);
        }

        Manifest m;
        net.record(m);
        model.record(m);
        m.set("t-max", t_max);
        if (!seeds_text.empty()) m.set("seeds", seeds_text);
        m.set("seed-base", seed_base);
        m.set("runs", static_cast<std::uint64_t>(seeds.size()));
        m.set("shared-graph", std::string(shared_graph ? "true" : "false"));
        m.set("plot", std::string(plot ? "true" : "false"));
        if (!empirical_out.empty()) {
            m.set("empirical-out", empirical_out);
            m.set("sample-every", sample_every);
            m.set("steps-per-year", steps_per_year);
            m.set("start-year", start_year);
        }
        m.set("out-dir", out_dir);
        write_manifest(out_dir, "ensemble", m);

        std::printf("ensemble: %zu runs, terminal means a=%.6f b=%.6f u=%.6f\n", res.run_count,
                    res.steps.back().mean_a, res.steps.back().mean_b, res.steps.back().mean_u);
        return 0;
    }
};

// --------------------------------------------------------------------- fit

struct FitCmd {
    NetOpts net;
    std::string data_path;
    std::string alpha_grid = "1", gamma_grid = "1", s_a_grid = "0.5", s_b_grid = "0.5";
    std::string init_a_grid = "0.5", init_b_grid = "0.5", spy_grid = "1";
    bool complement = false, complement_init = false;
    std::uint64_t ensemble_size = 30;
    std::uint64_t seed_base = 1;
    std::int64_t refine_depth = 2;
    std::string scheme = "async", weighting = "fraction";
    std::string out_dir = default_out_dir();

    void attach(CLI::App* cmd) {
        net.attach(cmd);
        cmd->add_option("--data", data_path, "empirical CSV (year,frac_a[,frac_b[,frac_u]])")
            ->required()
            ->check(CLI::ExistingFile);
        cmd->add_option("--alpha-grid", alpha_grid, "VALUE or LO:HI:POINTS")
            ->capture_default_str();
        cmd->add_option("--gamma-grid", gamma_grid, "VALUE or LO:HI:POINTS")
            ->capture_default_str();
        cmd->add_option("--s-a-grid", s_a_grid, "VALUE or LO:HI:POINTS")->capture_default_str();
        cmd->add_option("--s-b-grid", s_b_grid, "VALUE or LO:HI:POINTS")->capture_default_str();
        cmd->add_option("--init-frac-a-grid", init_a_grid, "VALUE or LO:HI:POINTS")
            ->capture_default_str();
        cmd->add_option("--init-frac-b-grid", init_b_grid, "VALUE or LO:HI:POINTS")
            ->capture_default_str();
        cmd->add_option("--steps-per-year-grid", spy_grid, "VALUE or LO:HI:POINTS")
            ->capture_default_str();
        cmd->add_flag("--complement", complement, "constrain s_b = 1 - s_a");
        cmd->add_flag("--complement-init", complement_init,
                      "constrain init_frac_b = 1 - init_frac_a");
        cmd->add_option("--ensemble-size", ensemble_size, "runs per candidate")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        cmd->add_option("--seed-base", seed_base, "first common-random-number seed")
            ->capture_default_str();
        cmd->add_option("--refine-depth", refine_depth, "halved-grid refinement passes")
            ->check(CLI::Range(std::int64_t{0}, std::int64_t{8}))
            ->capture_default_str();
        cmd->add_option("--scheme", scheme, "update scheme")
            ->check(CLI::IsMember({"async", "sync"}))
            ->capture_default_str();
        cmd->add_option("--weighting", weighting, "neighbor-term normalization")
            ->check(CLI::IsMember({"fraction", "rawclamp"}))
            ->capture_default_str();
        cmd->add_option("--out-dir", out_dir, "output directory")->capture_default_str();
    }

    int run_cmd() {
        const EmpiricalSeries data = read_empirical_csv_file(data_path);

        SearchSpace space;
        space.alpha = parse_axis(alpha_grid, "--alpha-grid");
        space.gamma = parse_axis(gamma_grid, "--gamma-grid");
        space.s_a = parse_axis(s_a_grid, "--s-a-grid");
        space.s_b = parse_axis(s_b_grid, "--s-b-grid");
        space.complement_status = complement;
        space.init_frac_a = parse_axis(init_a_grid, "--init-frac-a-grid");
        space.init_frac_b = parse_axis(init_b_grid, "--init-frac-b-grid");
        space.complement_init = complement_init;
        space.steps_per_year = parse_axis(spy_grid, "--steps-per-year-grid");
        space.refine_depth = static_cast<int>(refine_depth);

        ModelParams base;
        base.scheme = scheme_from_string(scheme);
        base.weighting = weighting_from_string(weighting);

        const FitResult result =
            fit(data, net.config(seed_base), space, ensemble_size, seed_base, base);

        fs::create_directories(out_dir);
        {
            auto out = open_output(fs::path(out_dir) / "fit_report.txt");
            write_fit_report(out, result);
        }
        {
            auto out = open_output(fs::path(out_dir) / "loss_surface.csv");
            write_loss_surface_csv(out, result);
        }

        Manifest m;
        net.record(m);
        m.set("data", data_path);
        m.set("alpha-grid", alpha_grid);
        m.set("gamma-grid", gamma_grid);
        m.set("s-a-grid", s_a_grid);
        m.set("s-b-grid", s_b_grid);
        m.set("init-frac-a-grid", init_a_grid);
        m.set("init-frac-b-grid", init_b_grid);
        m.set("steps-per-year-grid", spy_grid);
        m.set("complement", std::string(complement ? "true" : "false"));
        m.set("complement-init", std::string(complement_init ? "true" : "false"));
        m.set("ensemble-size", ensemble_size);
        m.set("seed-base", seed_base);
        m.set("refine-depth", static_cast<std::uint64_t>(refine_depth));
        m.set("scheme", scheme);
        m.set("weighting", weighting);
        m.set("out-dir", out_dir);
        write_manifest(out_dir, "fit", m);

        std::printf("fit: best loss %.6g at alpha=%.6g gamma=%.6g s_a=%.6g s_b=%.6g spy=%.6g\n",
                    result.best_loss, result.best.alpha, result.best.gamma, result.best.s_a,
                    result.best.s_b, result.best.steps_per_year);
        return 0;
    }
};

// ----------------------------------------------------------------- netstat

struct NetstatCmd {
    NetOpts net;
    std::uint64_t seed = 1;
    std::string graph_in;
    std::string graph_out;
    std::string out_dir = default_out_dir();

    void attach(CLI::App* cmd) {
        net.attach(cmd);
        cmd->add_option("--seed", seed, "RNG seed")->capture_default_str();
        cmd->add_option("--graph-in", graph_in, "analyze this GraphML file instead of generating")
            ->check(CLI::ExistingFile);
        cmd->add_option("--graph-out", graph_out, "also export the analyzed graph as GraphML");
        cmd->add_option("--out-dir", out_dir, "output directory")->capture_default_str();
    }

    int run_cmd() {
        Graph g(0);
        std::optional<AgentStateVector> states;
        if (!graph_in.empty()) {
            auto [graph, st] = read_graphml_file(graph_in);
            g = std::move(graph);
            states = std::move(st);
        } else {
            g = watts_strogatz(net.config(seed));
        }

        const double cc = clustering_coefficient(g);
        const PathLengthResult pl = characteristic_path_length(g);

        fs::create_directories(out_dir);
        {
            auto out = open_output(fs::path(out_dir) / "netstat.csv");
            out << "metric,value\n";
            out << "nodes," << g.node_count() << "\n";
            out << "edges," << g.edge_count() << "\n";
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.10g", cc);
            out << "clustering_coefficient," << buf << "\n";
            std::snprintf(buf, sizeof buf, "%.10g", pl.mean);
            out << "characteristic_path_length," << buf << "\n";
            out << "disconnected," << (pl.disconnected ? 1 : 0) << "\n";
            out << "largest_component," << pl.largest_component << "\n";
            if (states) {
                std::snprintf(buf, sizeof buf, "%.10g", homophily(g, *states));
                out << "homophily," << buf << "\n";
            }
        }
        {
            auto out = open_output(fs::path(out_dir) / "degree_histogram.csv");
            out << "degree,count\n";
            const auto hist = degree_histogram(g);
            for (std::size_t d = 0; d < hist.size(); ++d)
                if (hist[d]) out << d << ',' << hist[d] << '\n';
        }
        if (!graph_out.empty()) {
            auto out = open_output(fs::path(out_dir) / graph_out);
            write_graphml(out, g, states ? &*states : nullptr);
        }

        Manifest m;
        net.record(m);
        m.set("seed", seed);
        if (!graph_in.empty()) m.set("graph-in", graph_in);
        if (!graph_out.empty()) m.set("graph-out", graph_out);
        m.set("out-dir", out_dir);
        write_manifest(out_dir, "netstat", m);

        std::printf("netstat: n=%u edges=%zu clustering=%.6f path_length=%.6f%s\n", g.node_count(),
                    g.edge_count(), cc, pl.mean, pl.disconnected ? " (disconnected)" : "");
        return 0;
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Agent-based simulator of two-group competition on small-world networks"};
    app.require_subcommand(1);

    SimulateCmd simulate_cmd;
    EnsembleCmd ensemble_cmd;
    FitCmd fit_cmd;
    NetstatCmd netstat_cmd;

    std::string config_path; // consumed by expand_config_args; registered for help/validation

    auto prepare = [&](CLI::App* cmd) {
        cmd->option_defaults()->take_last();
        cmd->add_option("--config", config_path,
                        "flat key=value config file (explicit flags take precedence)")
            ->check(CLI::ExistingFile);
    };

    auto* sim = app.add_subcommand("simulate", "run one seed and export the trajectory");
    prepare(sim);
    simulate_cmd.attach(sim);

    auto* ens = app.add_subcommand("ensemble", "run many seeds and aggregate");
    prepare(ens);
    ensemble_cmd.attach(ens);

    auto* fitc = app.add_subcommand("fit", "grid-search calibration against an empirical CSV");
    prepare(fitc);
    fit_cmd.attach(fitc);

    auto* nst = app.add_subcommand("netstat", "network metrics and degree histogram");
    prepare(nst);
    netstat_cmd.attach(nst);

    if (argc <= 1) {
        std::cerr << app.help() << std::flush;
        return 2;
    }

    try {
        std::vector<std::string> args = expand_config_args(argc, argv);
        std::reverse(args.begin(), args.end()); // CLI11 parse() consumes back-to-front
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (sim->parsed()) return simulate_cmd.run_cmd();
        if (ens->parsed()) return ensemble_cmd.run_cmd();
        if (fitc->parsed()) return fit_cmd.run_cmd();
        if (nst->parsed()) return netstat_cmd.run_cmd();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
