#pragma once

#include <vector>

#include "modalcores/dataset.hpp"
#include "modalcores/mcores.hpp"

namespace mcores {

struct ClusteringResult {
    std::vector<int> labels;                 // per point, index into cores
    std::vector<ModalSetEstimate> cores;
};

// Assigns every point to the closest estimated modal-set: label(i) = argmin
// over estimates of the min distance from x_i to any member point, ties by
// lower estimate rank. Core members always get their own core.
ClusteringResult assign(const Dataset& data, const std::vector<ModalSetEstimate>& estimates);

// The coordinates of a subset of sample points as a standalone point set.
Dataset extract_points(const Dataset& data, const std::vector<int>& members);

// max( sup_a min_b ||x - y||, sup_b min_a ||x - y|| ) over two nonempty
// finite point sets of equal dimension.
double hausdorff(const Dataset& a, const Dataset& b);

// One-sided sup-min distance from every point of `from` to the set `to`.
double directed_hausdorff(const Dataset& from, const Dataset& to);

struct MatchEntry {
    int estimate = -1;  // estimate rank
    int truth = -1;     // truth-set index
    double distance = 0.0;
};

struct MatchReport {
    std::vector<MatchEntry> matches;      // sorted by distance ascending
    std::vector<int> unmatched_estimates;
    std::vector<int> unmatched_truths;
    double max_matched_distance() const;
};

// Greedy one-to-one matching between estimates and ground-truth sets by
// minimal Hausdorff distance. Evaluation-only; matches are unambiguous at
// the scales this is used for.
MatchReport match_estimates_to_truth(const std::vector<ModalSetEstimate>& estimates,
                                     const std::vector<Dataset>& truth_sets,
                                     const Dataset& data);

}  // namespace mcores
