#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "modalcores/dataset.hpp"

namespace mcores {

// Exact k-nearest-neighbor lists (self included) with distances and the
// k-NN radii r_k. Candidates are ordered by (distance, index), except the
// query point itself, which always comes first; this makes neighbor lists,
// radii and everything derived from them deterministic across runs and
// across the kd-tree / brute-force paths.
class KnnIndex {
public:
    int k() const { return k_; }
    int size() const { return n_; }
    int dim() const { return d_; }

    std::span<const std::int32_t> neighbors(int i) const {
        return {neighbors_.data() + static_cast<std::size_t>(i) * k_, static_cast<std::size_t>(k_)};
    }
    std::span<const double> distances(int i) const {
        return {distances_.data() + static_cast<std::size_t>(i) * k_, static_cast<std::size_t>(k_)};
    }
    double radius(int i) const { return radii_[i]; }
    const std::vector<double>& radii() const { return radii_; }

    // Points j that list i among their k nearest, with the matching distance.
    std::span<const std::int32_t> reverse_neighbors(int i) const {
        return {reverse_idx_.data() + reverse_off_[i],
                reverse_off_[i + 1] - reverse_off_[i]};
    }
    std::span<const double> reverse_distances(int i) const {
        return {reverse_dist_.data() + reverse_off_[i],
                reverse_off_[i + 1] - reverse_off_[i]};
    }

    // True iff ||x_i - x_j|| <= min{r_k(i), r_k(j)} for a stored pair at the
    // given distance.
    bool mutual(int i, int j, double dist) const {
        return dist <= radii_[i] && dist <= radii_[j];
    }

    // Index for a smaller k over the same dataset: neighbor lists are
    // prefixes of this one, radii are re-read from the distance column.
    KnnIndex prefix(int k) const;

    static KnnIndex from_lists(int k, int n, int d, std::vector<std::int32_t> neighbors,
                               std::vector<double> distances);

    void save(const std::string& path) const;
    static KnnIndex load(const std::string& path);

private:
    friend KnnIndex build_index(const Dataset&, int);
    friend KnnIndex knn_brute_force(const Dataset&, int);

    void build_reverse();

    int k_ = 0, n_ = 0, d_ = 0;
    std::vector<std::int32_t> neighbors_;  // n*k
    std::vector<double> distances_;        // n*k, nondecreasing per row
    std::vector<double> radii_;            // n, = distances_[i*k + k-1]
    std::vector<std::size_t> reverse_off_; // n+1 CSR offsets
    std::vector<std::int32_t> reverse_idx_;
    std::vector<double> reverse_dist_;
};

// Exact k-NN via a kd-tree (brute force when it cannot help). Queries run
// data-parallel over points; the finished index is immutable.
KnnIndex build_index(const Dataset& data, int k);

// O(n^2 d) all-pairs computation with the same tie-break rule; the
// correctness oracle for build_index.
KnnIndex knn_brute_force(const Dataset& data, int k);

// All sample indices within the closed ball B(x_q, eps), sorted ascending.
// q points at d coordinates. Used by the DBSCAN baseline.
class RadiusSearcher {
public:
    explicit RadiusSearcher(const Dataset& data);
    ~RadiusSearcher();
    RadiusSearcher(RadiusSearcher&&) noexcept;
    RadiusSearcher& operator=(RadiusSearcher&&) noexcept;

    std::vector<int> within(const double* q, double eps) const;
    std::vector<int> within(int i, double eps) const;

private:
    struct Impl;
    Impl* impl_;
};

}  // namespace mcores
