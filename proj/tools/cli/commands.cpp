#include "commands.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>

#include "modalcores/clustering.hpp"
#include "modalcores/dataset.hpp"
#include "modalcores/density.hpp"
#include "modalcores/io.hpp"
#include "modalcores/knn_index.hpp"
#include "modalcores/mcores.hpp"
#include "modalcores/metrics.hpp"
#include "modalcores/parallel.hpp"
#include "modalcores/synthgen.hpp"

namespace mcores::cli {

namespace fs = std::filesystem;

namespace {

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

BetaConfig make_beta_config(const std::string& mode, double delta, double custom) {
    BetaConfig config;
    config.mode = beta_mode_from_name(mode);
    config.delta = delta;
    config.custom_value = custom;
    return config;
}

KnnIndex obtain_index(const Dataset& data, int k, const std::string& cache, bool quiet) {
    if (!cache.empty() && fs::exists(cache)) {
        KnnIndex index = KnnIndex::load(cache);
        if (index.k() == k && index.size() == data.size() && index.dim() == data.dim()) {
            if (!quiet) std::cerr << "loaded index cache " << cache << "\n";
            return index;
        }
        if (!quiet)
            std::cerr << "index cache " << cache << " does not match (k,n,d); rebuilding\n";
    }
    KnnIndex index = build_index(data, k);
    if (!cache.empty()) index.save(cache);
    return index;
}

std::string format_score(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

}  // namespace

FitOutcome cmd_fit(const FitOptions& options) {
    FitOptions opts = options;
    std::optional<RunRecord> prev;
    if (!opts.replay.empty()) {
        prev = RunRecord::from_json_file(opts.replay);
        if (opts.data_path.empty()) opts.data_path = prev->data_path;
        opts.has_header = prev->has_header;
        opts.label_column = prev->label_column;
        opts.k = prev->k;
        opts.beta_mode = beta_mode_name(prev->beta_mode);
        opts.beta = prev->beta_mode == BetaMode::Custom ? prev->beta_value : opts.beta;
        opts.delta = prev->delta;
        opts.eps0 = prev->eps0;
        opts.eps_prune = prev->eps_prune;
        opts.jitter_sigma = prev->jitter_sigma;
        opts.seed = prev->seed;
    }
    if (opts.data_path.empty())
        throw Error(ErrorKind::InvalidConfig, "fit needs --data (or --replay with a recorded path)");

    const Timer total;
    RunRecord record;

    std::optional<int> label_col =
        opts.label_column >= 0 ? std::optional<int>(opts.label_column) : std::nullopt;
    LoadResult loaded = load_csv(opts.data_path, opts.has_header, label_col);
    record.data_hash = hash_hex(loaded.data.fingerprint());
    if (prev && prev->data_hash != record.data_hash)
        throw Error(ErrorKind::ParseError, "replay dataset hash mismatch: expected " +
                                               prev->data_hash + ", got " + record.data_hash);

    Dataset data = opts.jitter_sigma > 0
                       ? jitter(loaded.data, opts.jitter_sigma, opts.seed)
                       : std::move(loaded.data);

    const int k = opts.k > 0 ? opts.k : default_k(static_cast<double>(data.size()));
    if (k < 2) throw Error(ErrorKind::InvalidK, "fit requires k >= 2");
    const ValidationReport report = validate(data, k);
    if (!report.ok())
        throw Error(ErrorKind::ZeroRadius,
                    std::to_string(report.violations.size()) +
                        " points have >= k exact duplicates (r_k = 0); rerun with --jitter");

    McoresConfig config;
    config.k = k;
    config.beta = make_beta_config(opts.beta_mode, opts.delta, opts.beta);
    config.eps0 = opts.eps0;
    config.eps_prune = opts.eps_prune;

    const Timer index_timer;
    const KnnIndex index = obtain_index(data, k, opts.index_cache, opts.quiet);
    const double index_ms = index_timer.ms();

    const DensityEstimate density = knn_density(index);
    const double beta = resolve_beta(config, data.size(), data.dim());
    if (lookdown_clamps(beta) && !opts.quiet)
        std::cerr << "warning: 9*beta = " << 9.0 * beta
                  << " >= 1; lookdown level clamps to 0 and the descent degenerates to "
                     "components of the full mutual k-NN graph\n";

    const Timer descent_timer;
    const std::vector<ModalSetEstimate> estimates = estimate_modal_sets(data, index, density, config);
    const double descent_ms = descent_timer.ms();

    const ClusteringResult clustering = assign(data, estimates);

    record.k = k;
    record.beta_mode = config.beta.mode;
    record.beta_value = beta;
    record.delta = opts.delta;
    record.eps0 = opts.eps0;
    record.eps_prune = opts.eps_prune;
    record.jitter_sigma = opts.jitter_sigma;
    record.seed = opts.seed;
    record.data_path = opts.data_path;
    record.has_header = opts.has_header;
    record.label_column = opts.label_column;
    record.n = data.size();
    record.d = data.dim();
    for (const auto& est : estimates) {
        record.estimate_sizes.push_back(static_cast<int>(est.members.size()));
        record.creation_levels.push_back(est.creation_level);
    }
    if (loaded.labeled) {
        record.ari = adjusted_rand_index(clustering.labels, loaded.labels);
        record.ami = adjusted_mutual_information(clustering.labels, loaded.labels);
    }
    record.index_build_ms = index_ms;
    record.descent_ms = descent_ms;
    record.total_ms = total.ms();

    fs::create_directories(opts.out_dir);
    FitOutcome outcome;
    outcome.record = record;
    outcome.estimate_count = static_cast<int>(estimates.size());
    outcome.estimates_path = (fs::path(opts.out_dir) / "estimates.mcr").string();
    outcome.labels_path = (fs::path(opts.out_dir) / "labels.csv").string();
    outcome.record_path = (fs::path(opts.out_dir) / "run.json").string();

    const std::vector<std::string> provenance{record.provenance_comment()};
    write_estimates(outcome.estimates_path, estimates, provenance);
    write_labels(outcome.labels_path, clustering.labels, provenance);
    record.save(outcome.record_path);

    if (!opts.quiet) {
        std::cout << "n " << data.size() << " d " << data.dim() << " k " << k << " beta "
                  << format_score(beta) << "\n";
        std::cout << "estimates " << estimates.size() << "\n";
        for (const auto& est : estimates)
            std::cout << "  rank " << est.rank << " level " << format_double(est.creation_level)
                      << " size " << est.members.size() << "\n";
        if (record.ari)
            std::cout << "ari " << format_score(*record.ari) << " ami "
                      << format_score(*record.ami) << "\n";
        std::cout << "index_ms " << format_score(index_ms) << " descent_ms "
                  << format_score(descent_ms) << "\n";
    }
    return outcome;
}

void cmd_assign(const AssignOptions& opts) {
    std::optional<int> label_col =
        opts.label_column >= 0 ? std::optional<int>(opts.label_column) : std::nullopt;
    const LoadResult loaded = load_csv(opts.data_path, opts.has_header, label_col);
    const std::vector<ModalSetEstimate> estimates = read_estimates(opts.estimates_path);
    const ClusteringResult clustering = assign(loaded.data, estimates);
    write_labels(opts.out_path, clustering.labels);
    if (!opts.quiet)
        std::cout << "assigned " << loaded.data.size() << " points to " << estimates.size()
                  << " cores -> " << opts.out_path << "\n";
}

std::vector<SweepRow> cmd_sweep(const SweepOptions& opts) {
    if (opts.label_column < 0)
        throw Error(ErrorKind::InvalidConfig, "sweep needs --label-column (scores need truth)");
    if (opts.k_min < 2 || opts.k_max < opts.k_min || opts.k_step < 1)
        throw Error(ErrorKind::InvalidConfig, "bad k range");

    const LoadResult loaded = load_csv(opts.data_path, opts.has_header, opts.label_column);
    const Dataset& data = loaded.data;
    if (opts.k_max > data.size())
        throw Error(ErrorKind::InvalidK, "k_max exceeds dataset size");
    const ValidationReport report = validate(data, opts.k_min);
    if (!report.ok())
        throw Error(ErrorKind::ZeroRadius, "dataset has >= k_min exact duplicates; use --jitter");

    std::vector<int> ks;
    for (int k = opts.k_min; k <= opts.k_max; k += opts.k_step) ks.push_back(k);

    // one index at the largest k; smaller-k views are prefixes of it
    const KnnIndex full_index = build_index(data, opts.k_max);

    std::vector<SweepRow> rows(ks.size());
    parallel_for(ks.size(), [&](std::size_t t) {
        const int k = ks[t];
        const KnnIndex index = full_index.prefix(k);
        const DensityEstimate density = knn_density(index);
        McoresConfig config;
        config.k = k;
        config.beta = make_beta_config(opts.beta_mode, opts.delta, opts.beta);
        config.eps0 = opts.eps0;
        config.eps_prune = opts.eps_prune;
        const Timer descent_timer;
        const std::vector<ModalSetEstimate> estimates =
            estimate_modal_sets(data, index, density, config);
        const double descent_ms = descent_timer.ms();
        const ClusteringResult clustering = assign(data, estimates);
        rows[t] = {k, adjusted_rand_index(clustering.labels, loaded.labels),
                   adjusted_mutual_information(clustering.labels, loaded.labels),
                   static_cast<int>(estimates.size()), descent_ms};
    });

    std::ofstream out(opts.out_path);
    if (!out) throw Error(ErrorKind::IoError, "cannot write sweep curve: " + opts.out_path);
    out << "# sweep data=" << opts.data_path << " beta_mode=" << opts.beta_mode
        << " delta=" << opts.delta << " eps0=" << opts.eps0 << " eps_prune=" << opts.eps_prune
        << "\n";
    out << "k,ari,ami,count,ms\n";
    for (const auto& row : rows) {
        out << row.k << ',' << format_score(row.ari) << ',' << format_score(row.ami) << ','
            << row.count << ',' << format_score(row.descent_ms) << "\n";
        if (!opts.quiet)
            std::cout << "k " << row.k << " ari " << format_score(row.ari) << " ami "
                      << format_score(row.ami) << " estimates " << row.count << "\n";
    }
    return rows;
}

GenOutcome cmd_gen(const GenOptions& opts) {
    SyntheticData synth;
    if (opts.preset == "three-rings") {
        RingSpec spec = three_rings_preset(opts.n > 0 ? opts.n : 6000);
        if (opts.sigma >= 0) spec.noise_sigma = opts.sigma;
        synth = gen_rings(spec, opts.seed);
    } else if (opts.preset == "three-gaussians") {
        synth = gen_gaussian_mixture(three_gaussians_preset(opts.n > 0 ? opts.n : 1500), opts.seed);
    } else if (opts.preset == "two-gaussians-1d") {
        synth = gen_gaussian_mixture(two_gaussians_1d_preset(opts.n > 0 ? opts.n : 2000), opts.seed);
    } else if (opts.preset == "single-gaussian") {
        synth = gen_gaussian_mixture(single_gaussian_2d_preset(opts.n > 0 ? opts.n : 2000), opts.seed);
    } else if (opts.preset == "two-segments") {
        ManifoldNoiseSpec spec = two_segments_preset(opts.n > 0 ? opts.n : 2000);
        if (opts.sigma > 0) spec.sigma = opts.sigma;
        synth = gen_manifold_noise(spec, opts.seed);
    } else {
        throw Error(ErrorKind::InvalidSpec, "unknown preset: " + opts.preset);
    }
    for (const auto& w : synth.warnings) std::cerr << "warning: " << w << "\n";

    fs::create_directories(opts.out_dir);
    GenOutcome outcome;
    outcome.data_path = (fs::path(opts.out_dir) / "data.csv").string();
    outcome.truth_path = (fs::path(opts.out_dir) / "truth.txt").string();
    outcome.n = synth.data.size();
    outcome.truth_sets = static_cast<int>(synth.truth.size());

    const std::string provenance = "generated preset=" + opts.preset +
                                   " seed=" + std::to_string(opts.seed) +
                                   " n=" + std::to_string(synth.data.size()) +
                                   " label_column=" + std::to_string(synth.data.dim());
    write_csv(outcome.data_path, synth.data, synth.labels, {provenance});
    write_truth(outcome.truth_path, synth.truth, {provenance});
    if (!opts.quiet)
        std::cout << "wrote " << outcome.data_path << " (n=" << outcome.n
                  << ", label column " << synth.data.dim() << ") and " << outcome.truth_path
                  << " (" << outcome.truth_sets << " sets)\n";
    return outcome;
}

EvalOutcome cmd_eval(const EvalOptions& opts) {
    EvalOutcome outcome;
    const bool labels_mode = !opts.labels_a.empty() || !opts.labels_b.empty();
    const bool match_mode = !opts.estimates_path.empty() || !opts.truth_path.empty();
    if (!labels_mode && !match_mode)
        throw Error(ErrorKind::InvalidConfig,
                    "eval needs --labels/--labels-b or --estimates/--truth/--data");

    if (labels_mode) {
        if (opts.labels_a.empty() || opts.labels_b.empty())
            throw Error(ErrorKind::InvalidConfig, "eval labels mode needs both label files");
        const std::vector<int> a = read_labels(opts.labels_a);
        const std::vector<int> b = read_labels(opts.labels_b);
        const ScoreReport scores = score_report(a, b);
        outcome.ari = scores.ari;
        outcome.ami = scores.ami;
        outcome.report_lines.push_back("ari " + format_score(scores.ari));
        outcome.report_lines.push_back("ami " + format_score(scores.ami));
    }
    if (match_mode) {
        if (opts.estimates_path.empty() || opts.truth_path.empty() || opts.data_path.empty())
            throw Error(ErrorKind::InvalidConfig,
                        "eval match mode needs --estimates, --truth and --data");
        std::optional<int> label_col =
            opts.label_column >= 0 ? std::optional<int>(opts.label_column) : std::nullopt;
        const LoadResult loaded = load_csv(opts.data_path, opts.has_header, label_col);
        const std::vector<ModalSetEstimate> estimates = read_estimates(opts.estimates_path);
        const std::vector<Dataset> truth = read_truth(opts.truth_path);
        const MatchReport report = match_estimates_to_truth(estimates, truth, loaded.data);
        for (const auto& m : report.matches)
            outcome.report_lines.push_back("match estimate " + std::to_string(m.estimate) +
                                           " truth " + std::to_string(m.truth) + " hausdorff " +
                                           format_double(m.distance));
        for (int e : report.unmatched_estimates)
            outcome.report_lines.push_back("unmatched estimate " + std::to_string(e));
        for (int t : report.unmatched_truths)
            outcome.report_lines.push_back("unmatched truth " + std::to_string(t));
    }

    if (!opts.out_path.empty()) {
        std::ofstream out(opts.out_path);
        if (!out) throw Error(ErrorKind::IoError, "cannot write report: " + opts.out_path);
        for (const auto& line : outcome.report_lines) out << line << "\n";
    }
    if (!opts.quiet)
        for (const auto& line : outcome.report_lines) std::cout << line << "\n";
    return outcome;
}

std::vector<BenchRow> cmd_bench(const BenchOptions& opts) {
    if (opts.n < 10 || opts.steps < 1 || opts.factor <= 1.0)
        throw Error(ErrorKind::InvalidConfig, "bench needs n >= 10, steps >= 1, factor > 1");

    std::vector<BenchRow> rows;
    double scale = static_cast<double>(opts.n);
    for (int s = 0; s < opts.steps; ++s, scale *= opts.factor) {
        const int n = static_cast<int>(scale);
        const SyntheticData synth =
            gen_gaussian_mixture(three_gaussians_preset(n), opts.seed + s);
        if (opts.k > n) throw Error(ErrorKind::InvalidK, "k exceeds bench sample size");

        const Timer index_timer;
        const KnnIndex index = build_index(synth.data, opts.k);
        const double index_ms = index_timer.ms();
        const DensityEstimate density = knn_density(index);
        McoresConfig config;
        config.k = opts.k;
        const Timer descent_timer;
        const std::vector<ModalSetEstimate> estimates =
            estimate_modal_sets(synth.data, index, density, config);
        const double descent_ms = descent_timer.ms();
        (void)estimates;

        BenchRow row{n, index_ms, descent_ms,
                     rows.empty() ? 0.0 : descent_ms / rows.back().descent_ms};
        rows.push_back(row);
        if (!opts.quiet)
            std::cout << "n " << n << " index_ms " << format_score(index_ms) << " descent_ms "
                      << format_score(descent_ms)
                      << (rows.size() > 1 ? " ratio " + format_score(row.ratio) : "") << "\n";
    }

    if (!opts.out_path.empty()) {
        std::ofstream out(opts.out_path);
        if (!out) throw Error(ErrorKind::IoError, "cannot write bench csv: " + opts.out_path);
        out << "n,index_ms,descent_ms,ratio\n";
        for (const auto& row : rows)
            out << row.n << ',' << format_score(row.index_ms) << ','
                << format_score(row.descent_ms) << ',' << format_score(row.ratio) << "\n";
    }
    return rows;
}

}  // namespace mcores::cli
