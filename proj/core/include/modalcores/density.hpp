#pragma once

#include <string>
#include <vector>

#include "modalcores/knn_index.hpp"

namespace mcores {

// Per-point k-NN density values plus the descending processing order.
struct DensityEstimate {
    std::vector<double> values;  // f_k per point, all finite and > 0
    std::vector<int> order;      // point indices, values nonincreasing, ties by index
    int k = 0;
    int n = 0;
    int d = 0;

    double max_value() const { return values[order.front()]; }
};

enum class BetaMode { Theoretical, Practical, Custom };

// Relative level-slack configuration. Theoretical mode derives beta from the
// concentration constant C_{delta,n}; practical mode uses the 2/sqrt(k)
// rule of thumb; custom takes the value verbatim.
struct BetaConfig {
    BetaMode mode = BetaMode::Practical;
    double delta = 0.05;        // confidence, in (0,1)
    double custom_value = 0.0;  // > 0 when mode == Custom
};

const char* beta_mode_name(BetaMode mode);
BetaMode beta_mode_from_name(const std::string& name);

// Volume of the unit ball in R^d: pi^{d/2} / Gamma(d/2 + 1).
double unit_ball_volume(int d);

// f_k(x_i) = k / (n * v_d * r_k(x_i)^d). Requires all radii > 0.
DensityEstimate knn_density(const KnnIndex& index);

// 16 * log(2/delta) * sqrt(d * log n), natural logs. n is real-valued so the
// formula can be evaluated at analytic arguments.
double c_delta_n(double delta, double n, int d);

// Theoretical: 4 * C_{delta,n} / sqrt(k). Practical: 2 / sqrt(k).
double beta_k(const BetaConfig& config, int k, double n, int d);

// max(2, round(0.5 * ln(n)^2)); the default neighbor count.
int default_k(double n);

}  // namespace mcores
