#include "modalcores/dbscan.hpp"

#include <algorithm>

#include "modalcores/knn_index.hpp"
#include "modalcores/parallel.hpp"

namespace mcores {

std::vector<int> dbscan(const Dataset& data, const DbscanConfig& config) {
    if (!(config.eps > 0)) throw Error(ErrorKind::InvalidConfig, "dbscan eps must be > 0");
    if (config.min_pts < 1) throw Error(ErrorKind::InvalidConfig, "dbscan min_pts must be >= 1");

    const int n = data.size();
    const RadiusSearcher searcher(data);

    std::vector<std::vector<int>> hood(n);
    parallel_for(static_cast<std::size_t>(n),
                 [&](std::size_t i) { hood[i] = searcher.within(static_cast<int>(i), config.eps); });

    std::vector<char> core(n, 0);
    for (int i = 0; i < n; ++i) core[i] = static_cast<int>(hood[i].size()) >= config.min_pts;

    // union-find over core points under eps-adjacency
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&parent](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (int i = 0; i < n; ++i) {
        if (!core[i]) continue;
        for (int j : hood[i]) {
            if (!core[j]) continue;
            const int a = find(i), b = find(j);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }

    // cluster ids in order of the smallest core index per component, so the
    // labeling is deterministic for a fixed row order
    std::vector<int> cluster_of_root(n, -1);
    int next_id = 0;
    std::vector<int> labels(n, -1);
    for (int i = 0; i < n; ++i) {
        if (!core[i]) continue;
        const int root = find(i);
        if (cluster_of_root[root] < 0) cluster_of_root[root] = next_id++;
        labels[i] = cluster_of_root[root];
    }

    // border points join the lowest-id adjacent core cluster
    for (int i = 0; i < n; ++i) {
        if (core[i]) continue;
        int best = -1;
        for (int j : hood[i]) {
            if (!core[j]) continue;
            const int c = cluster_of_root[find(j)];
            if (best < 0 || c < best) best = c;
        }
        labels[i] = best;  // stays -1 when no core neighbor: noise
    }
    return labels;
}

}  // namespace mcores
