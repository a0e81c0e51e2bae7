#pragma once

#include <vector>

#include "modalcores/dataset.hpp"

namespace mcores {

struct DbscanConfig {
    double eps = 0.0;  // neighborhood radius, > 0
    int min_pts = 1;   // core-point threshold, >= 1, self included
};

// Classical density-reachability clustering. Core points have >= min_pts
// neighbors within eps (self included); clusters are the connected
// components of core points under eps-adjacency; border points join the
// lowest-id adjacent core cluster; everything else is labeled -1.
// Output is invariant to input row permutation up to cluster relabeling.
std::vector<int> dbscan(const Dataset& data, const DbscanConfig& config);

}  // namespace mcores
