#pragma once

// Independent reference implementations used as test oracles. Everything in
// here recomputes from first principles (raw pairwise distances, BFS,
// exhaustive enumeration) and deliberately avoids the library's kd-tree,
// union-find and marginal-sum code paths.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "modalcores/dataset.hpp"

namespace oracle {

// ---- random instances -----------------------------------------------------

inline mcores::Dataset random_uniform(int n, int d, std::uint64_t seed, double lo = 0.0,
                                      double hi = 1.0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<double> pts(static_cast<std::size_t>(n) * d);
    for (double& v : pts) v = u(rng);
    return mcores::Dataset(std::move(pts), n, d);
}

// a few well-separated blobs; good for cluster-shaped instances
inline mcores::Dataset random_blobs(int n, int d, int blobs, std::uint64_t seed,
                                    double separation = 10.0, double sigma = 1.0) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, sigma);
    std::uniform_int_distribution<int> pick(0, blobs - 1);
    std::vector<double> pts;
    pts.reserve(static_cast<std::size_t>(n) * d);
    for (int i = 0; i < n; ++i) {
        const int b = pick(rng);
        for (int j = 0; j < d; ++j) pts.push_back((j == 0 ? b * separation : 0.0) + g(rng));
    }
    return mcores::Dataset(std::move(pts), n, d);
}

// ---- k-NN quantities from raw distances ------------------------------------

// k-th smallest distance from i to all sample points, self included.
inline std::vector<double> knn_radii(const mcores::Dataset& data, int k) {
    const int n = data.size();
    std::vector<double> radii(n);
    std::vector<double> dist(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) dist[j] = data.distance(i, j);
        std::nth_element(dist.begin(), dist.begin() + (k - 1), dist.end());
        radii[i] = dist[k - 1];
    }
    return radii;
}

inline std::vector<double> knn_density_values(const mcores::Dataset& data, int k) {
    const int n = data.size();
    const int d = data.dim();
    const double vd = std::pow(std::acos(-1.0), d / 2.0) / std::tgamma(d / 2.0 + 1.0);
    const std::vector<double> radii = knn_radii(data, k);
    std::vector<double> f(n);
    for (int i = 0; i < n; ++i) f[i] = k / (n * vd * std::pow(radii[i], d));
    return f;
}

// All mutual edges per the level-graph definition:
// ||x_i - x_j|| <= min{r_k(i), r_k(j)}, over every pair.
inline std::vector<std::pair<int, int>> mutual_edges(const mcores::Dataset& data,
                                                     const std::vector<double>& radii) {
    std::vector<std::pair<int, int>> edges;
    const int n = data.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (data.distance(i, j) <= std::min(radii[i], radii[j])) edges.emplace_back(i, j);
    return edges;
}

// ---- components by BFS ------------------------------------------------------

// component id per node (-1 when inactive), ids assigned in ascending order
// of the smallest member, so partitions compare exactly
inline std::vector<int> bfs_components(int n, const std::vector<char>& active,
                                       const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : edges) {
        if (!active[a] || !active[b]) continue;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<int> comp(n, -1);
    int next = 0;
    for (int s = 0; s < n; ++s) {
        if (!active[s] || comp[s] >= 0) continue;
        comp[s] = next;
        std::vector<int> queue{s};
        while (!queue.empty()) {
            const int u = queue.back();
            queue.pop_back();
            for (int v : adj[u]) {
                if (comp[v] < 0) {
                    comp[v] = next;
                    queue.push_back(v);
                }
            }
        }
        ++next;
    }
    return comp;
}

// ---- straight-line M-cores trace -------------------------------------------

// Literal replay of the level descent: sort by density, activate by the
// (clamped, monotone) threshold, take the founder's component by BFS over
// the full mutual edge set, check disjointness against all previous cores'
// members, filter by the membership floor. No union-find, no incremental
// state beyond the active flags.
struct ReferenceEstimate {
    std::vector<int> members;
    double creation_level;
    int founder;
};

inline std::vector<ReferenceEstimate> reference_modal_sets(const mcores::Dataset& data, int k,
                                                           double beta, double eps0 = 0.0,
                                                           double eps_prune = 0.0) {
    const int n = data.size();
    const std::vector<double> radii = knn_radii(data, k);
    const std::vector<double> f = knn_density_values(data, k);
    const auto edges = mutual_edges(data, radii);

    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&f](int a, int b) { return f[a] > f[b] || (f[a] == f[b] && a < b); });

    std::vector<char> active(n, 0);
    std::vector<char> in_core(n, 0);
    std::vector<ReferenceEstimate> estimates;
    int p = 0;
    double envelope = std::numeric_limits<double>::infinity();

    for (int pos = 0; pos < n; ++pos) {
        const int i = order[pos];
        const double lambda = f[i];
        envelope = std::min(envelope, lambda * (1.0 - 9.0 * beta) - eps0 - eps_prune);
        const double threshold = std::max(0.0, envelope);
        while (p < n && f[order[p]] >= threshold) active[order[p]] = 1, ++p;

        // BFS from i over active nodes
        std::vector<int> comp;
        std::vector<char> visited(n, 0);
        visited[i] = 1;
        std::vector<int> queue{i};
        while (!queue.empty()) {
            const int u = queue.back();
            queue.pop_back();
            comp.push_back(u);
            for (int v : adj[u])
                if (active[v] && !visited[v]) visited[v] = 1, queue.push_back(v);
        }

        bool disjoint = true;
        for (int m : comp)
            if (in_core[m]) {
                disjoint = false;
                break;
            }
        if (!disjoint) continue;

        ReferenceEstimate est;
        est.creation_level = lambda;
        est.founder = i;
        const double floor = lambda - beta * lambda - eps0;
        for (int m : comp)
            if (f[m] > floor) est.members.push_back(m);
        std::sort(est.members.begin(), est.members.end());
        for (int m : est.members) in_core[m] = 1;
        estimates.push_back(std::move(est));
    }
    return estimates;
}

// ---- expected mutual information --------------------------------------------

// E[MI] by exhaustive enumeration of contingency tables with the given
// margins, each weighted by its multivariate hypergeometric probability.
// Complements the library's per-cell marginal sums.
inline double emi_table_enumeration(const std::vector<long long>& rows,
                                    const std::vector<long long>& cols, long long n) {
    std::vector<double> lf(static_cast<std::size_t>(n) + 1, 0.0);
    for (long long i = 2; i <= n; ++i) lf[i] = lf[i - 1] + std::log(static_cast<double>(i));

    const std::size_t R = rows.size(), C = cols.size();
    std::vector<long long> cell(R * C, 0);
    std::vector<long long> col_left(cols.begin(), cols.end());
    double emi = 0.0;

    // fill row-major, recursing over cells; prune when remaining capacity
    // cannot absorb what the row still needs
    auto rec = [&](auto&& self, std::size_t r, std::size_t c, long long row_left) -> void {
        if (r == R) {
            double logp = -lf[n];
            double mi = 0.0;
            for (std::size_t i = 0; i < R; ++i) logp += lf[rows[i]];
            for (std::size_t j = 0; j < C; ++j) logp += lf[cols[j]];
            for (std::size_t i = 0; i < R; ++i)
                for (std::size_t j = 0; j < C; ++j) {
                    const long long v = cell[i * C + j];
                    logp -= lf[v];
                    if (v > 0)
                        mi += (static_cast<double>(v) / n) *
                              std::log(static_cast<double>(v) * n /
                                       (static_cast<double>(rows[i]) * cols[j]));
                }
            emi += mi * std::exp(logp);
            return;
        }
        if (c == C) {
            if (row_left == 0) self(self, r + 1, 0, r + 1 < R ? rows[r + 1] : 0);
            return;
        }
        long long rest_cap = 0;  // capacity of the columns after c
        for (std::size_t j = c + 1; j < C; ++j) rest_cap += col_left[j];
        const long long lo = std::max<long long>(0, row_left - rest_cap);
        const long long hi = std::min(row_left, col_left[c]);
        for (long long v = lo; v <= hi; ++v) {
            cell[r * C + c] = v;
            col_left[c] -= v;
            self(self, r, c + 1, row_left - v);
            col_left[c] += v;
        }
        cell[r * C + c] = 0;
    };
    rec(rec, 0, 0, rows[0]);
    return emi;
}

}  // namespace oracle
