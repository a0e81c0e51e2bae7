#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modalcores/error.hpp"

namespace mcores {

// Row-major n x d point set with Euclidean geometry. Immutable after
// construction; safe to share read-only across parallel workers.
class Dataset {
public:
    Dataset() = default;
    Dataset(std::vector<double> points, int n, int d);

    int size() const { return n_; }
    int dim() const { return d_; }

    const double* row(int i) const { return points_.data() + static_cast<std::size_t>(i) * d_; }
    double coord(int i, int j) const { return points_[static_cast<std::size_t>(i) * d_ + j]; }
    const std::vector<double>& raw() const { return points_; }

    double distance(int i, int j) const;
    double distance_sq(int i, int j) const;
    double distance_sq_to(int i, const double* q) const;

    // FNV-1a over n, d and the coordinate bit patterns; stable content id.
    std::uint64_t fingerprint() const;

private:
    std::vector<double> points_;
    int n_ = 0;
    int d_ = 0;
};

struct LabeledDataset {
    Dataset data;
    std::vector<int> labels;  // same length as data.size()
};

struct LoadResult {
    Dataset data;
    std::vector<int> labels;  // empty unless a label column was requested
    bool labeled = false;
};

// Reads a comma-separated file of decimal floats. An optional single header
// row is skipped when has_header is set; blank lines and lines starting with
// '#' are ignored. When label_column is given, that zero-based column is
// parsed as the ground-truth label: integer cells keep their value, other
// strings are mapped to dense integers in load order.
LoadResult load_csv(const std::string& path, bool has_header = false,
                    std::optional<int> label_column = std::nullopt);

// Writes the dataset in the same format load_csv reads. Coordinates are
// printed with enough digits to round-trip exactly. labels, when nonempty,
// are appended as a final integer column. comment_lines are emitted first,
// each prefixed with "# ".
void write_csv(const std::string& path, const Dataset& data,
               const std::vector<int>& labels = {},
               const std::vector<std::string>& comment_lines = {});

struct ValidationReport {
    int k = 0;
    std::vector<int> violations;  // points with >= k exact duplicates (r_k = 0)
    bool ok() const { return violations.empty(); }
};

// Flags every point whose k-th nearest distance (self included) is zero,
// i.e. points with at least k exact coordinate duplicates. Such points make
// the k-NN density infinite; downstream refuses them.
ValidationReport validate(const Dataset& data, int k);

// Adds i.i.d. Uniform(-sigma, sigma) noise to every coordinate. Deterministic
// given the seed; used to break up exact duplicates on user request.
Dataset jitter(const Dataset& data, double sigma, std::uint64_t seed);

}  // namespace mcores
