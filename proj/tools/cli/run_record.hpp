#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modalcores/density.hpp"

namespace mcores::cli {

// Full provenance of a fit: enough to rerun it and get identical artifacts.
struct RunRecord {
    // config echo
    int k = 0;
    BetaMode beta_mode = BetaMode::Practical;
    double beta_value = 0.0;  // resolved beta actually used
    double delta = 0.05;
    double eps0 = 0.0;
    double eps_prune = 0.0;
    double jitter_sigma = 0.0;
    std::uint64_t seed = 0;

    // dataset fingerprint
    std::string data_path;
    bool has_header = false;
    int label_column = -1;  // -1: none
    int n = 0;
    int d = 0;
    std::string data_hash;  // pre-jitter content hash, hex

    // estimates summary
    std::vector<int> estimate_sizes;
    std::vector<double> creation_levels;

    // scores vs. ground-truth labels, when available
    std::optional<double> ari;
    std::optional<double> ami;

    // wall-time breakdown (not part of the deterministic provenance block)
    double index_build_ms = 0.0;
    double descent_ms = 0.0;
    double total_ms = 0.0;

    std::string to_json() const;
    static RunRecord from_json_file(const std::string& path);
    void save(const std::string& path) const;

    // Deterministic provenance line embedded in every written artifact;
    // excludes timings and result summaries so replays are byte-identical.
    std::string provenance_comment() const;
};

std::string hash_hex(std::uint64_t h);

}  // namespace mcores::cli
