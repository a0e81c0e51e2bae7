#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modalcores/dataset.hpp"

namespace mcores {

// Generator output: samples, per-sample source labels, and the discretized
// true modal sets. Deterministic given (spec, seed).
struct SyntheticData {
    Dataset data;
    std::vector<int> labels;
    std::vector<Dataset> truth;
    std::vector<std::string> warnings;
};

// Rings in the first two coordinates of R^d, blurred by isotropic Gaussian
// noise. Truth sets are the noiseless circles discretized at
// truth_resolution points each; their Hausdorff distance to the continuous
// ring is at most 2*pi*radius/truth_resolution.
struct RingSpec {
    std::vector<std::vector<double>> centers;  // each of length d, d >= 2
    std::vector<double> radii;
    std::vector<int> counts;
    double noise_sigma = 0.0;
    int truth_resolution = 256;
};

SyntheticData gen_rings(const RingSpec& spec, std::uint64_t seed);

// Diagonal-covariance Gaussian mixture; truth sets are the component means
// (point modes).
struct MixtureSpec {
    std::vector<std::vector<double>> means;      // each of length d
    std::vector<std::vector<double>> variances;  // diagonal entries, each of length d
    std::vector<double> weights;                 // positive, sum 1
    int n = 0;
    int d = 0;
};

SyntheticData gen_gaussian_mixture(const MixtureSpec& spec, std::uint64_t seed);

// Uniform draw from a finite discretization of a compact set M, plus
// isotropic Gaussian noise. This convolution approximates a density that is
// locally maximal on M and decays away from it; truth sets are the connected
// components of the discretization (points within twice the discretization
// gap of a neighbor).
struct ManifoldNoiseSpec {
    std::vector<double> base_points;  // flattened m x d
    int m = 0;
    int d = 0;
    double sigma = 0.0;
    int n = 0;
};

SyntheticData gen_manifold_noise(const ManifoldNoiseSpec& spec, std::uint64_t seed);

// Shipped presets. The three-rings geometry pins two recovery tolerances:
// every core member lies inside the ring's noise envelope
// (3*sigma + truth-grid bound), and the full estimate-to-ring Hausdorff
// distance stays under 3*sigma plus a frozen core-sampling bound measured
// with the reference trace at the preset scale.
RingSpec three_rings_preset(int total_n = 6000);
double ring_truth_discretization_bound(const RingSpec& spec);
double ring_core_envelope_tolerance(const RingSpec& spec);
double ring_core_sampling_tolerance(const RingSpec& spec);

MixtureSpec two_gaussians_1d_preset(int n);
MixtureSpec three_gaussians_preset(int n);
MixtureSpec single_gaussian_2d_preset(int n);
ManifoldNoiseSpec two_segments_preset(int n);

}  // namespace mcores
