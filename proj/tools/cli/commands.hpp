#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "run_record.hpp"

namespace mcores::cli {

struct FitOptions {
    std::string data_path;
    bool has_header = false;
    int label_column = -1;
    int k = 0;  // 0: default_k(n)
    std::string beta_mode = "practical";
    double beta = 0.0;  // custom beta value
    double delta = 0.05;
    double eps0 = 0.0;
    double eps_prune = 0.0;
    double jitter_sigma = 0.0;
    std::uint64_t seed = 0;
    std::string out_dir = ".";
    std::string index_cache;  // load if present, else build and save
    std::string replay;       // run-record path: take config + dataset from it
    bool quiet = false;
};

struct FitOutcome {
    RunRecord record;
    std::string estimates_path;
    std::string labels_path;
    std::string record_path;
    int estimate_count = 0;
};

FitOutcome cmd_fit(const FitOptions& opts);

struct AssignOptions {
    std::string data_path;
    bool has_header = false;
    int label_column = -1;
    std::string estimates_path;
    std::string out_path = "labels.csv";
    bool quiet = false;
};

void cmd_assign(const AssignOptions& opts);

struct SweepOptions {
    std::string data_path;
    bool has_header = false;
    int label_column = -1;  // required: sweep scores against ground truth
    int k_min = 10;
    int k_max = 60;
    int k_step = 10;
    std::string beta_mode = "practical";
    double beta = 0.0;
    double delta = 0.05;
    double eps0 = 0.0;
    double eps_prune = 0.0;
    std::string out_path = "sweep.csv";
    bool quiet = false;
};

struct SweepRow {
    int k = 0;
    double ari = 0.0;
    double ami = 0.0;
    int count = 0;
    double descent_ms = 0.0;
};

std::vector<SweepRow> cmd_sweep(const SweepOptions& opts);

struct GenOptions {
    std::string preset;  // three-rings | three-gaussians | two-gaussians-1d |
                         // single-gaussian | two-segments
    int n = 0;           // 0: preset default
    double sigma = -1.0; // < 0: preset default
    std::uint64_t seed = 0;
    std::string out_dir = ".";
    bool quiet = false;
};

struct GenOutcome {
    std::string data_path;
    std::string truth_path;
    int n = 0;
    int truth_sets = 0;
};

GenOutcome cmd_gen(const GenOptions& opts);

struct EvalOptions {
    std::string labels_a;
    std::string labels_b;
    std::string estimates_path;
    std::string truth_path;
    std::string data_path;  // needed with estimates (member coordinates)
    bool has_header = false;
    int label_column = -1;
    std::string out_path;  // optional report file
    bool quiet = false;
};

struct EvalOutcome {
    std::optional<double> ari;
    std::optional<double> ami;
    std::vector<std::string> report_lines;
};

EvalOutcome cmd_eval(const EvalOptions& opts);

struct BenchOptions {
    int n = 50000;
    int steps = 2;
    double factor = 2.0;
    int k = 30;
    std::uint64_t seed = 1;
    std::string out_path;  // optional CSV
    bool quiet = false;
};

struct BenchRow {
    int n = 0;
    double index_ms = 0.0;
    double descent_ms = 0.0;
    double ratio = 0.0;  // descent time vs previous scale, 0 for the first
};

std::vector<BenchRow> cmd_bench(const BenchOptions& opts);

// Full argv-level entry point: parses flags, dispatches, maps errors to exit
// codes (1 = IO, 2 = config, 3 = data).
int run_cli(const std::vector<std::string>& args);

}  // namespace mcores::cli
