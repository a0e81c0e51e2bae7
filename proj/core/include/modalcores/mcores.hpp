#pragma once

#include <vector>

#include "modalcores/density.hpp"
#include "modalcores/knn_index.hpp"

namespace mcores {

struct McoresConfig {
    int k = 0;               // neighbor count, >= 2; must match the index
    BetaConfig beta;
    double eps0 = 0.0;       // density slack allowed on a modal set
    double eps_prune = 0.0;  // extra level lookdown for pruning
};

// One estimated modal-set: a set of sample indices found as an unseen
// component during the level descent.
struct ModalSetEstimate {
    std::vector<int> members;  // sorted ascending, nonempty
    double creation_level = 0.0;  // f_k of the founding point
    int founder = -1;             // point being processed at creation
    int rank = 0;                 // creation order, 0 = highest level
};

// Resolved beta for a run.
double resolve_beta(const McoresConfig& config, int n, int d);

// True when the lookdown level lambda*(1 - 9*beta) is nonpositive for every
// lambda, i.e. the activation threshold clamps to zero and the descent
// degenerates to components of the full mutual k-NN graph. Callers may want
// to warn.
bool lookdown_clamps(double beta);

// The level-descent estimator. Processes points in density order; before
// each point at level lambda, activates every point with
// f_k >= max(0, min over processed levels of lambda'*(1 - 9*beta) - eps0 - eps_prune)
// (running-minimum envelope, so the activation pointer only moves forward);
// then, if the point's component has not been seen, emits an estimate with
// members { m in component : f_k(m) > lambda - beta*lambda - eps0 }.
// Estimates are pairwise disjoint and returned in creation order.
std::vector<ModalSetEstimate> estimate_modal_sets(const Dataset& data, const KnnIndex& index,
                                                  const DensityEstimate& density,
                                                  const McoresConfig& config);

// Estimates created at level >= fraction * max f_k.
std::vector<ModalSetEstimate> high_level_estimates(const std::vector<ModalSetEstimate>& estimates,
                                                   const DensityEstimate& density,
                                                   double fraction);

}  // namespace mcores
