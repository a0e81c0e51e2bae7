#include <iostream>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "modalcores/error.hpp"

namespace mcores::cli {

namespace {

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::IoError:
            return 1;
        case ErrorKind::InvalidK:
        case ErrorKind::InvalidDimension:
        case ErrorKind::InvalidDelta:
        case ErrorKind::TooFewPoints:
        case ErrorKind::InvalidConfig:
        case ErrorKind::InvalidSpec:
            return 2;
        default:
            return 3;  // data errors: parse, empty, duplicates, mismatches
    }
}

void add_beta_flags(CLI::App* cmd, std::string& mode, double& beta, double& delta) {
    cmd->add_option("--beta-mode", mode, "beta schedule: practical|theoretical|custom")
        ->check(CLI::IsMember({"practical", "theoretical", "custom"}))
        ->capture_default_str();
    cmd->add_option("--beta", beta, "beta value for --beta-mode custom");
    cmd->add_option("--delta", delta, "confidence for the theoretical beta")
        ->capture_default_str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"modalcores: modal-set estimation and density-based clustering"};
    app.require_subcommand(1);
    app.set_config("--config");

    FitOptions fit_opts;
    CLI::App* fit = app.add_subcommand("fit", "estimate modal-sets and cluster a dataset");
    fit->add_option("--data", fit_opts.data_path, "input CSV");
    fit->add_flag("--has-header", fit_opts.has_header, "skip one header row");
    fit->add_option("--label-column", fit_opts.label_column,
                    "zero-based ground-truth column (scores reported when given)");
    fit->add_option("--k", fit_opts.k, "neighbor count (default: max(2, round(ln(n)^2 / 2)))");
    add_beta_flags(fit, fit_opts.beta_mode, fit_opts.beta, fit_opts.delta);
    fit->add_option("--eps0", fit_opts.eps0, "density slack on a modal set")->capture_default_str();
    fit->add_option("--eps-prune", fit_opts.eps_prune, "extra pruning lookdown")
        ->capture_default_str();
    fit->add_option("--jitter", fit_opts.jitter_sigma, "uniform(-s,s) noise added per coordinate");
    fit->add_option("--seed", fit_opts.seed, "seed for --jitter")->capture_default_str();
    fit->add_option("--out-dir", fit_opts.out_dir, "output directory")->capture_default_str();
    fit->add_option("--index-cache", fit_opts.index_cache,
                    "binary k-NN index cache (load if present, else build and save)");
    fit->add_option("--replay", fit_opts.replay, "rerun from a run.json record");
    fit->add_flag("--quiet", fit_opts.quiet, "suppress progress output");

    AssignOptions assign_opts;
    CLI::App* assign = app.add_subcommand("assign", "label points by nearest estimated core");
    assign->add_option("--data", assign_opts.data_path, "input CSV")->required();
    assign->add_flag("--has-header", assign_opts.has_header);
    assign->add_option("--label-column", assign_opts.label_column, "column to skip as labels");
    assign->add_option("--estimates", assign_opts.estimates_path, "estimates file")->required();
    assign->add_option("--out", assign_opts.out_path, "output label CSV")->capture_default_str();
    assign->add_flag("--quiet", assign_opts.quiet);

    SweepOptions sweep_opts;
    CLI::App* sweep = app.add_subcommand("sweep", "score a range of k against ground truth");
    sweep->add_option("--data", sweep_opts.data_path, "labeled CSV")->required();
    sweep->add_flag("--has-header", sweep_opts.has_header);
    sweep->add_option("--label-column", sweep_opts.label_column, "ground-truth column")
        ->required();
    sweep->add_option("--k-min", sweep_opts.k_min)->capture_default_str();
    sweep->add_option("--k-max", sweep_opts.k_max)->capture_default_str();
    sweep->add_option("--k-step", sweep_opts.k_step)->capture_default_str();
    add_beta_flags(sweep, sweep_opts.beta_mode, sweep_opts.beta, sweep_opts.delta);
    sweep->add_option("--eps0", sweep_opts.eps0)->capture_default_str();
    sweep->add_option("--eps-prune", sweep_opts.eps_prune)->capture_default_str();
    sweep->add_option("--out", sweep_opts.out_path, "curve CSV (k,ari,ami,count,ms)")
        ->capture_default_str();
    sweep->add_flag("--quiet", sweep_opts.quiet);

    GenOptions gen_opts;
    CLI::App* gen = app.add_subcommand("gen", "write a synthetic dataset and its ground truth");
    gen->add_option("--preset", gen_opts.preset,
                    "three-rings|three-gaussians|two-gaussians-1d|single-gaussian|two-segments")
        ->required();
    gen->add_option("--n", gen_opts.n, "sample count (0: preset default)");
    gen->add_option("--sigma", gen_opts.sigma, "noise scale override");
    gen->add_option("--seed", gen_opts.seed)->capture_default_str();
    gen->add_option("--out-dir", gen_opts.out_dir)->capture_default_str();
    gen->add_flag("--quiet", gen_opts.quiet);

    EvalOptions eval_opts;
    CLI::App* eval = app.add_subcommand("eval", "score label files or match estimates to truth");
    eval->add_option("--labels", eval_opts.labels_a, "first label file");
    eval->add_option("--labels-b", eval_opts.labels_b, "second label file");
    eval->add_option("--estimates", eval_opts.estimates_path, "estimates file");
    eval->add_option("--truth", eval_opts.truth_path, "truth point-set file");
    eval->add_option("--data", eval_opts.data_path, "dataset the estimates index into");
    eval->add_flag("--has-header", eval_opts.has_header);
    eval->add_option("--label-column", eval_opts.label_column);
    eval->add_option("--out", eval_opts.out_path, "write the report here as well");
    eval->add_flag("--quiet", eval_opts.quiet);

    BenchOptions bench_opts;
    CLI::App* bench = app.add_subcommand("bench", "time the descent phase at geometric n scales");
    bench->add_option("--n", bench_opts.n, "base sample count")->capture_default_str();
    bench->add_option("--steps", bench_opts.steps)->capture_default_str();
    bench->add_option("--factor", bench_opts.factor)->capture_default_str();
    bench->add_option("--k", bench_opts.k)->capture_default_str();
    bench->add_option("--seed", bench_opts.seed)->capture_default_str();
    bench->add_option("--out", bench_opts.out_path, "CSV of n,index_ms,descent_ms,ratio");
    bench->add_flag("--quiet", bench_opts.quiet);

    std::vector<const char*> argv;
    argv.push_back("modalcores");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*fit) cmd_fit(fit_opts);
        else if (*assign) cmd_assign(assign_opts);
        else if (*sweep) cmd_sweep(sweep_opts);
        else if (*gen) cmd_gen(gen_opts);
        else if (*eval) cmd_eval(eval_opts);
        else if (*bench) cmd_bench(bench_opts);
    } catch (const Error& e) {
        std::cerr << "error (" << error_kind_name(e.kind()) << "): " << e.what() << "\n";
        return exit_code_for(e.kind());
    }
    return 0;
}

}  // namespace mcores::cli
