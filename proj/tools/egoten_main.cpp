#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "egoten/assignment.hpp"
#include "egoten/graph.hpp"
#include "egoten/io.hpp"
#include "egoten/metrics.hpp"
#include "egoten/solver.hpp"
#include "egoten/synth.hpp"
#include "egoten/tensor.hpp"

namespace fs = std::filesystem;
using namespace egoten;

namespace {

using Entries = std::vector<std::pair<std::string, std::string>>;

void put(Entries& e, const std::string& key, std::string value) {
    e.emplace_back(key, std::move(value));
}
void put(Entries& e, const std::string& key, const char* value) { put(e, key, std::string(value)); }
void put(Entries& e, const std::string& key, double value) { put(e, key, format_value(value)); }
void put(Entries& e, const std::string& key, bool value) { put(e, key, value ? "true" : "false"); }
template <typename Int>
    requires std::is_integral_v<Int>
void put(Entries& e, const std::string& key, Int value) { put(e, key, std::to_string(value)); }

std::string hex_digest(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open input file '" + path + "'");
    return in;
}

NodeRemap identity_remap(index_t n) {
    NodeRemap r;
    r.to_original.resize(n);
    std::iota(r.to_original.begin(), r.to_original.end(), 0);
    for (index_t v = 0; v < n; ++v) r.to_internal[v] = v;
    return r;
}

std::string join(const std::vector<index_t>& xs, char sep) {
    std::string s;
    for (std::size_t q = 0; q < xs.size(); ++q) {
        if (q) s += sep;
        s += std::to_string(xs[q]);
    }
    return s;
}

// Flags shared by the two solve commands.
struct SolveFlags {
    std::string input, output_dir;
    SolverConfig cfg;
    std::string rho_policy = "gram-trace";
    std::string warm_duals = "on";
    double tau = -1.0;  // sentinel: default to 1/k
    bool strict_crisp = false;
    bool self_loops = false;
    bool weighted = false;
    bool trace_timing = false;
    int indexing_base = 0;
    std::int64_t n_nodes = -1;
};

void add_solve_flags(CLI::App* cmd, SolveFlags& f) {
    cmd->add_option("input", f.input, "edge list file")->required();
    cmd->add_option("--output-dir", f.output_dir, "directory for run artifacts")->required();
    cmd->add_option("--k", f.cfg.k, "number of communities");
    cmd->add_option("--lambda", f.cfg.lambda, "ridge weight on A and B");
    cmd->add_option("--max-iter", f.cfg.max_outer, "outer iteration cap");
    cmd->add_option("--admm-iter", f.cfg.max_admm, "inner ADMM iteration cap");
    cmd->add_option("--eps", f.cfg.eps_outer, "outer convergence tolerance");
    cmd->add_option("--eps-admm", f.cfg.eps_admm, "inner convergence tolerance");
    cmd->add_option("--seed", f.cfg.seed, "master seed for all randomness");
    cmd->add_option("--tau", f.tau, "crisp membership threshold (default 1/k)");
    cmd->add_flag("--strict-crisp", f.strict_crisp, "leave below-threshold nodes unassigned");
    cmd->add_flag("--self-loops", f.self_loops, "add unit diagonals to the egonets");
    cmd->add_flag("--weighted", f.weighted, "input carries a weight column");
    cmd->add_option("--indexing-base", f.indexing_base, "node ids start at 0 or 1")
        ->check(CLI::IsMember({0, 1}));
    cmd->add_option("--n-nodes", f.n_nodes, "pin the node count (keeps ids as-is)");
    cmd->add_option("--warm-duals", f.warm_duals, "carry ADMM duals across outer iterations")
        ->check(CLI::IsMember({"on", "off"}));
    cmd->add_option("--rho-policy", f.rho_policy, "ADMM penalty choice")
        ->check(CLI::IsMember({"gram-trace", "init-norm", "fixed"}));
    cmd->add_option("--rho-fixed", f.cfg.rho_fixed, "penalty value for --rho-policy fixed");
    cmd->add_flag("--trace-timing", f.trace_timing,
                  "record wall time in the trace (breaks byte determinism)");
}

void finish_config(SolveFlags& f) {
    f.cfg.warm_duals = f.warm_duals == "on";
    if (f.rho_policy == "gram-trace") f.cfg.rho_policy = RhoPolicy::gram_trace;
    else if (f.rho_policy == "init-norm") f.cfg.rho_policy = RhoPolicy::init_norm;
    else f.cfg.rho_policy = RhoPolicy::fixed;
    if (f.tau < 0.0) f.tau = 1.0 / static_cast<double>(f.cfg.k == 0 ? 1 : f.cfg.k);
}

ParseOptions parse_options(const SolveFlags& f) {
    ParseOptions opts;
    opts.indexing_base = f.indexing_base;
    opts.weighted = f.weighted;
    if (f.n_nodes >= 0) opts.n_nodes = static_cast<index_t>(f.n_nodes);
    return opts;
}

void common_manifest(Entries& e, const SolveFlags& f) {
    put(e, "input", f.input);
    put(e, "input_digest", hex_digest(fnv1a64_file(f.input)));
    put(e, "indexing_base", f.indexing_base);
    put(e, "weighted", f.weighted);
    put(e, "self_loops", f.self_loops);
    if (f.n_nodes >= 0) put(e, "n_nodes_flag", f.n_nodes);
    put(e, "k", f.cfg.k);
    put(e, "lambda", f.cfg.lambda);
    put(e, "max_iter", f.cfg.max_outer);
    put(e, "admm_iter", f.cfg.max_admm);
    put(e, "eps", f.cfg.eps_outer);
    put(e, "eps_admm", f.cfg.eps_admm);
    put(e, "rho_policy", f.rho_policy);
    put(e, "rho_fixed", f.cfg.rho_fixed);
    put(e, "warm_duals", f.cfg.warm_duals);
    put(e, "seed", f.cfg.seed);
    put(e, "tau", f.tau);
    put(e, "strict_crisp", f.strict_crisp);
    put(e, "trace_timing", f.trace_timing);
}

int cmd_detect(SolveFlags& f) {
    finish_config(f);
    f.cfg.validate();
    auto in = open_input(f.input);
    auto parsed = parse_edge_list(in, parse_options(f));
    const auto w = EgonetTensor::build(parsed.graph, f.self_loops);
    auto [factors, trace] = als_decompose(w, f.cfg);

    fs::create_directories(f.output_dir);
    const fs::path dir(f.output_dir);
    write_remap_csv(dir / "remap.csv", parsed.remap);
    write_factor_csv(dir / "factor_a.csv", factors.a, parsed.remap.to_original);
    write_factor_csv(dir / "factor_b.csv", factors.b, parsed.remap.to_original);
    write_factor_csv(dir / "factor_c.csv", factors.c, parsed.remap.to_original);
    const Matrix membership = soft_membership(factors);
    write_factor_csv(dir / "soft_membership.csv", membership, parsed.remap.to_original);
    const Cover cover = crisp_cover(membership, f.tau, f.strict_crisp);
    write_cover_file(dir / "cover.txt", cover, parsed.remap);
    write_trace_csv(dir / "trace.csv", trace, false, f.trace_timing);

    Entries e;
    put(e, "command", "detect");
    common_manifest(e, f);
    put(e, "n_nodes", parsed.graph.n_nodes());
    put(e, "n_edges", parsed.graph.n_edges());
    put(e, "iterations", trace.rows.empty() ? index_t(0) : trace.rows.back().iter);
    put(e, "converged", trace.converged);
    write_manifest(dir / "manifest.txt", e);

    std::cout << "detect: " << parsed.graph.n_nodes() << " nodes, " << trace.rows.size()
              << " iterations, " << cover.communities.size() << " communities -> "
              << f.output_dir << "\n";
    return 0;
}

int cmd_detect_temporal(SolveFlags& f) {
    finish_config(f);
    f.cfg.validate();
    auto in = open_input(f.input);
    auto parsed = parse_temporal_edge_list(in, parse_options(f));
    const auto w = EgonetTensor::build(parsed.graph, f.self_loops);
    auto [factors, trace] = als_decompose_4way(w, f.cfg);

    fs::create_directories(f.output_dir);
    const fs::path dir(f.output_dir);
    write_remap_csv(dir / "remap.csv", parsed.remap);
    write_factor_csv(dir / "factor_a.csv", factors.a, parsed.remap.to_original);
    write_factor_csv(dir / "factor_b.csv", factors.b, parsed.remap.to_original);
    write_factor_csv(dir / "factor_c.csv", factors.c, parsed.remap.to_original);
    const Matrix membership = soft_membership(factors);
    write_factor_csv(dir / "soft_membership.csv", membership, parsed.remap.to_original);

    std::vector<std::int64_t> time_ids(parsed.graph.t_len());
    std::iota(time_ids.begin(), time_ids.end(), 0);
    write_factor_csv(dir / "factor_d.csv", *factors.d, time_ids, "t");

    const Cover cover = crisp_cover(membership, f.tau, f.strict_crisp);
    write_cover_file(dir / "cover.txt", cover, parsed.remap);

    const auto assoc = temporal_association(factors);
    write_association_csv(dir / "associations.csv", assoc, parsed.remap);
    for (index_t t = 0; t < parsed.graph.t_len(); ++t) {
        const Cover ct = crisp_cover(assoc[t], f.tau, f.strict_crisp);
        write_cover_file(dir / ("cover_t" + std::to_string(t) + ".txt"), ct, parsed.remap);
    }
    write_trace_csv(dir / "trace.csv", trace, true, f.trace_timing);

    Entries e;
    put(e, "command", "detect-temporal");
    common_manifest(e, f);
    put(e, "n_nodes", parsed.graph.n_nodes);
    put(e, "t_len", parsed.graph.t_len());
    put(e, "iterations", trace.rows.empty() ? index_t(0) : trace.rows.back().iter);
    put(e, "converged", trace.converged);
    write_manifest(dir / "manifest.txt", e);

    std::cout << "detect-temporal: " << parsed.graph.n_nodes << " nodes, "
              << parsed.graph.t_len() << " snapshots, " << trace.rows.size()
              << " iterations -> " << f.output_dir << "\n";
    return 0;
}

struct EvalFlags {
    std::string graph_path, pred_path, membership_path, truth_path, output_dir;
    double tau = -1.0;
    bool strict_crisp = false;
    bool weighted = false;
    bool tau_sweep = false;
    std::vector<double> tau_grid;
    int indexing_base = 0;
    std::int64_t n_nodes = -1;
};

int cmd_eval(EvalFlags& f) {
    if (f.pred_path.empty() == f.membership_path.empty())
        throw UsageError("eval needs exactly one of --pred or --membership");
    if (f.tau_sweep && f.membership_path.empty())
        throw UsageError("--tau-sweep needs a soft membership file");
    if (f.tau_sweep && f.truth_path.empty())
        throw UsageError("--tau-sweep needs a truth cover to score against");

    ParseOptions opts;
    opts.indexing_base = f.indexing_base;
    opts.weighted = f.weighted;
    if (f.n_nodes >= 0) opts.n_nodes = static_cast<index_t>(f.n_nodes);
    auto in = open_input(f.graph_path);
    auto parsed = parse_edge_list(in, opts);
    const index_t n = parsed.graph.n_nodes();

    Matrix membership;
    Cover pred;
    if (!f.membership_path.empty()) {
        membership = read_membership_csv(f.membership_path, parsed.remap, n);
        if (f.tau < 0.0) f.tau = 1.0 / static_cast<double>(membership.cols());
        pred = crisp_cover(membership, f.tau, f.strict_crisp);
    } else {
        pred = read_cover_file(f.pred_path, parsed.remap, n);
    }

    std::optional<Cover> truth;
    if (!f.truth_path.empty()) truth = read_cover_file(f.truth_path, parsed.remap, n);

    fs::create_directories(f.output_dir);
    const fs::path dir(f.output_dir);

    Entries report;
    put(report, "n_nodes", n);
    put(report, "n_communities", pred.communities.size());
    if (truth) {
        if (truth->is_disjoint_partition() && pred.is_disjoint_partition())
            put(report, "nmi", nmi(*truth, pred));
        put(report, "overlapping_nmi", overlapping_nmi(*truth, pred));
        put(report, "avg_f1", avg_f1(*truth, pred));
        put(report, "avg_f1_symmetric", avg_f1(*truth, pred, true));
    }
    put(report, "avg_conductance", avg_conductance(parsed.graph, pred));

    std::vector<double> nu_grid(101);
    for (int q = 0; q <= 100; ++q) nu_grid[q] = q / 100.0;
    const auto curve = coverage_curve(parsed.graph, pred, nu_grid);
    write_curve_csv(dir / "coverage_curve.csv", curve);
    put(report, "auc", auc(curve));

    if (f.tau_sweep) {
        std::vector<double> grid = f.tau_grid;
        if (grid.empty())
            for (int q = 1; q < 20; ++q) grid.push_back(q * 0.05);
        Entries sweep;
        double best_tau = grid.front(), best_score = -1.0;
        for (double tau : grid) {
            const Cover c = crisp_cover(membership, tau, f.strict_crisp);
            const double score =
                c.communities.empty() ? 0.0 : overlapping_nmi(*truth, c);
            put(sweep, format_value(tau), score);
            if (score > best_score) {
                best_score = score;
                best_tau = tau;
            }
        }
        write_report_csv(dir / "tau_sweep.csv", sweep);
        put(report, "best_tau", best_tau);
        put(report, "best_tau_nmi", best_score);
    }

    write_report_csv(dir / "report.csv", report);
    for (const auto& [k, v] : report) std::cout << k << "=" << v << "\n";
    return 0;
}

struct GenFlags {
    std::vector<index_t> sizes;
    double p_in = 0.0, p_out = 0.0;
    std::vector<std::string> overlaps;
    std::uint64_t seed = 1;
    std::string output_dir;
};

OverlapSpec parse_overlap(const std::string& text) {
    OverlapSpec ov{};
    unsigned long count = 0, a = 0, b = 0;
    if (std::sscanf(text.c_str(), "%lu:%lu:%lu", &count, &a, &b) != 3)
        throw UsageError("malformed --overlap '" + text + "', expected count:a:b");
    ov.count = static_cast<index_t>(count);
    ov.a = static_cast<index_t>(a);
    ov.b = static_cast<index_t>(b);
    return ov;
}

int cmd_gen(GenFlags& f) {
    BlockModel model;
    model.sizes = f.sizes;
    model.p_in = f.p_in;
    model.p_out = f.p_out;
    for (const auto& text : f.overlaps) model.overlaps.push_back(parse_overlap(text));
    auto [g, truth] = block_stochastic(model, f.seed);

    fs::create_directories(f.output_dir);
    const fs::path dir(f.output_dir);
    write_edge_list(dir / "edges.txt", g, false);
    write_cover_file(dir / "truth.txt", truth, identity_remap(g.n_nodes()));

    Entries e;
    put(e, "command", "gen");
    put(e, "sizes", join(f.sizes, ','));
    put(e, "p_in", f.p_in);
    put(e, "p_out", f.p_out);
    for (std::size_t q = 0; q < f.overlaps.size(); ++q)
        put(e, "overlap_" + std::to_string(q), f.overlaps[q]);
    put(e, "seed", f.seed);
    put(e, "n_nodes", g.n_nodes());
    put(e, "n_edges", g.n_edges());
    write_manifest(dir / "manifest.txt", e);

    std::cout << "gen: " << g.n_nodes() << " nodes, " << g.n_edges() << " edges -> "
              << f.output_dir << "\n";
    return 0;
}

struct GenTemporalFlags {
    index_t n = 0, t_len = 0, migrants = 0;
    std::vector<index_t> sizes;
    double mean = 0.0, std = 0.0, p_in = 0.0, p_out = 0.0;
    std::uint64_t seed = 1;
    std::string output_dir;
};

int cmd_gen_temporal(GenTemporalFlags& f) {
    if (f.sizes.size() != 2) throw UsageError("gen-temporal needs exactly two --sizes");
    MigrationModel model;
    model.n = f.n;
    model.t_len = f.t_len;
    model.sizes = {f.sizes[0], f.sizes[1]};
    model.migrants = f.migrants;
    model.transition_mean = f.mean;
    model.transition_std = f.std;
    model.p_in = f.p_in;
    model.p_out = f.p_out;
    auto [tg, truths] = temporal_migration(model, f.seed);

    fs::create_directories(f.output_dir);
    const fs::path dir(f.output_dir);
    write_temporal_edge_list(dir / "edges.txt", tg, false);
    const auto remap = identity_remap(tg.n_nodes);
    for (index_t t = 0; t < tg.t_len(); ++t)
        write_cover_file(dir / ("truth_t" + std::to_string(t) + ".txt"), truths[t], remap);

    Entries e;
    put(e, "command", "gen-temporal");
    put(e, "n", f.n);
    put(e, "t_len", f.t_len);
    put(e, "sizes", join(f.sizes, ','));
    put(e, "migrants", f.migrants);
    put(e, "transition_mean", f.mean);
    put(e, "transition_std", f.std);
    put(e, "p_in", f.p_in);
    put(e, "p_out", f.p_out);
    put(e, "seed", f.seed);
    write_manifest(dir / "manifest.txt", e);

    std::cout << "gen-temporal: " << tg.n_nodes << " nodes, " << tg.t_len()
              << " snapshots -> " << f.output_dir << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"overlapping community detection via egonet tensor decomposition"};
    app.require_subcommand(1);

    SolveFlags detect_flags;
    auto* detect = app.add_subcommand("detect", "decompose a static graph");
    add_solve_flags(detect, detect_flags);

    SolveFlags temporal_flags;
    auto* detect_temporal =
        app.add_subcommand("detect-temporal", "decompose a temporal graph");
    add_solve_flags(detect_temporal, temporal_flags);

    EvalFlags eval_flags;
    auto* eval = app.add_subcommand("eval", "score a cover against a graph and optional truth");
    eval->add_option("graph", eval_flags.graph_path, "edge list file")->required();
    eval->add_option("--pred", eval_flags.pred_path, "predicted cover file");
    eval->add_option("--membership", eval_flags.membership_path, "soft membership CSV");
    eval->add_option("--truth", eval_flags.truth_path, "ground truth cover file");
    eval->add_option("--output-dir", eval_flags.output_dir, "directory for the report")
        ->required();
    eval->add_option("--tau", eval_flags.tau, "crisp threshold for --membership");
    eval->add_flag("--strict-crisp", eval_flags.strict_crisp);
    eval->add_flag("--weighted", eval_flags.weighted);
    eval->add_option("--indexing-base", eval_flags.indexing_base)->check(CLI::IsMember({0, 1}));
    eval->add_option("--n-nodes", eval_flags.n_nodes, "pin the node count");
    eval->add_flag("--tau-sweep", eval_flags.tau_sweep, "pick the best-NMI tau");
    eval->add_option("--tau-grid", eval_flags.tau_grid, "thresholds for --tau-sweep")
        ->delimiter(',');

    GenFlags gen_flags;
    auto* gen = app.add_subcommand("gen", "generate a block-stochastic graph");
    gen->add_option("--sizes", gen_flags.sizes, "community sizes")->delimiter(',')->required();
    gen->add_option("--p-in", gen_flags.p_in, "within-community edge probability")->required();
    gen->add_option("--p-out", gen_flags.p_out, "between-community edge probability")->required();
    gen->add_option("--overlap", gen_flags.overlaps, "shared nodes as count:a:b");
    gen->add_option("--seed", gen_flags.seed);
    gen->add_option("--output-dir", gen_flags.output_dir)->required();

    GenTemporalFlags gent_flags;
    auto* gen_temporal = app.add_subcommand("gen-temporal", "generate a migration scenario");
    gen_temporal->add_option("--n", gent_flags.n, "node count")->required();
    gen_temporal->add_option("--t", gent_flags.t_len, "snapshot count")->required();
    gen_temporal->add_option("--sizes", gent_flags.sizes, "two initial block sizes")
        ->delimiter(',')
        ->required();
    gen_temporal->add_option("--migrants", gent_flags.migrants, "nodes moving to a third block");
    gen_temporal->add_option("--transition-mean", gent_flags.mean, "mean transition slot");
    gen_temporal->add_option("--transition-std", gent_flags.std, "transition slot spread");
    gen_temporal->add_option("--p-in", gent_flags.p_in)->required();
    gen_temporal->add_option("--p-out", gent_flags.p_out)->required();
    gen_temporal->add_option("--seed", gent_flags.seed);
    gen_temporal->add_option("--output-dir", gent_flags.output_dir)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (detect->parsed()) return cmd_detect(detect_flags);
        if (detect_temporal->parsed()) return cmd_detect_temporal(temporal_flags);
        if (eval->parsed()) return cmd_eval(eval_flags);
        if (gen->parsed()) return cmd_gen(gen_flags);
        if (gen_temporal->parsed()) return cmd_gen_temporal(gent_flags);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
