#include "modalcores/mcores.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "modalcores/level_graph.hpp"

namespace mcores {

double resolve_beta(const McoresConfig& config, int n, int d) {
    return beta_k(config.beta, config.k, static_cast<double>(n), d);
}

bool lookdown_clamps(double beta) { return 9.0 * beta >= 1.0; }

std::vector<ModalSetEstimate> estimate_modal_sets(const Dataset& data, const KnnIndex& index,
                                                  const DensityEstimate& density,
                                                  const McoresConfig& config) {
    const int n = data.size();
    if (index.size() != n || density.n != n)
        throw Error(ErrorKind::InvalidConfig, "dataset, index and density sizes disagree");
    if (config.k != index.k() || config.k != density.k)
        throw Error(ErrorKind::InvalidConfig, "config k does not match index/density k");
    if (config.k < 2) throw Error(ErrorKind::InvalidK, "mcores requires k >= 2");
    if (config.eps0 < 0.0 || config.eps_prune < 0.0)
        throw Error(ErrorKind::InvalidConfig, "eps0 and eps_prune must be >= 0");

    const double beta = resolve_beta(config, n, data.dim());
    const std::vector<double>& f = density.values;
    const std::vector<int>& order = density.order;

    // Mutual edges evaluated once, in index order (the predicate does not
    // depend on the descent state), and bucketed at the later-activating
    // endpoint. Activation strictly follows `order`, so when a point
    // activates, its bucketed partners are exactly the already-active ones
    // and every union is attempted once, off a sequential scan.
    std::vector<int> position(n);
    for (int t = 0; t < n; ++t) position[order[t]] = t;
    std::vector<std::size_t> edge_off(n + 2, 0);
    for (int i = 0; i < n; ++i) {
        const double ri = index.radius(i);
        auto nb = index.neighbors(i);
        auto ds = index.distances(i);
        for (std::size_t s = 0; s < nb.size(); ++s) {
            const int j = nb[s];
            if (j == i || !(ds[s] <= ri && ds[s] <= index.radius(j))) continue;
            ++edge_off[std::max(position[i], position[j]) + 2];
        }
    }
    for (int t = 2; t <= n + 1; ++t) edge_off[t] += edge_off[t - 1];
    std::vector<std::int32_t> edge_partner(edge_off[n + 1]);
    for (int i = 0; i < n; ++i) {
        const double ri = index.radius(i);
        auto nb = index.neighbors(i);
        auto ds = index.distances(i);
        for (std::size_t s = 0; s < nb.size(); ++s) {
            const int j = nb[s];
            if (j == i || !(ds[s] <= ri && ds[s] <= index.radius(j))) continue;
            const bool i_later = position[i] > position[j];
            edge_partner[edge_off[std::max(position[i], position[j]) + 1]++] =
                i_later ? j : i;
        }
    }

    LevelGraph graph(n);
    std::vector<ModalSetEstimate> estimates;
    int p = 0;  // activation pointer into order
    double envelope = std::numeric_limits<double>::infinity();

    for (int pos = 0; pos < n; ++pos) {
        const int i = order[pos];
        const double lambda = f[i];
        // Running minimum keeps the threshold monotone even when 9*beta >= 1
        // would make lambda*(1 - 9*beta) increase as lambda descends.
        envelope = std::min(envelope, lambda * (1.0 - 9.0 * beta) - config.eps0 - config.eps_prune);
        const double threshold = std::max(0.0, envelope);
        while (p < n && f[order[p]] >= threshold) {
            const int a = order[p];
            graph.add_node(a);
            for (std::size_t s = edge_off[p]; s < edge_off[p + 1]; ++s)
                graph.add_edge(a, edge_partner[s]);
            ++p;
        }
        if (!graph.component_seen(i)) {
            const double member_floor = lambda - beta * lambda - config.eps0;
            ModalSetEstimate est;
            est.creation_level = lambda;
            est.founder = i;
            est.rank = static_cast<int>(estimates.size());
            for (int m : graph.component_members(i))
                if (f[m] > member_floor) est.members.push_back(m);
            std::sort(est.members.begin(), est.members.end());
            estimates.push_back(std::move(est));
        }
    }
    return estimates;
}

std::vector<ModalSetEstimate> high_level_estimates(const std::vector<ModalSetEstimate>& estimates,
                                                   const DensityEstimate& density,
                                                   double fraction) {
    if (fraction < 0.0 || fraction > 1.0)
        throw Error(ErrorKind::InvalidConfig, "fraction must be in [0,1]");
    const double cutoff = fraction * density.max_value();
    std::vector<ModalSetEstimate> kept;
    for (const auto& est : estimates)
        if (est.creation_level >= cutoff) kept.push_back(est);
    return kept;
}

}  // namespace mcores
