#include "modalcores/density.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace mcores {

const char* beta_mode_name(BetaMode mode) {
    switch (mode) {
        case BetaMode::Theoretical: return "theoretical";
        case BetaMode::Practical: return "practical";
        case BetaMode::Custom: return "custom";
    }
    return "?";
}

BetaMode beta_mode_from_name(const std::string& name) {
    if (name == "theoretical") return BetaMode::Theoretical;
    if (name == "practical") return BetaMode::Practical;
    if (name == "custom") return BetaMode::Custom;
    throw Error(ErrorKind::InvalidConfig, "unknown beta mode: " + name);
}

double unit_ball_volume(int d) {
    if (d < 1) throw Error(ErrorKind::InvalidDimension, "dimension must be >= 1");
    return std::pow(std::numbers::pi, d / 2.0) / std::tgamma(d / 2.0 + 1.0);
}

DensityEstimate knn_density(const KnnIndex& index) {
    const int n = index.size();
    const int d = index.dim();
    const int k = index.k();
    const double vd = unit_ball_volume(d);

    DensityEstimate est;
    est.k = k;
    est.n = n;
    est.d = d;
    est.values.resize(n);
    for (int i = 0; i < n; ++i) {
        const double r = index.radius(i);
        if (r <= 0.0)
            throw Error(ErrorKind::ZeroRadius,
                        "point " + std::to_string(i) + " has r_k = 0 (>= k exact duplicates); "
                        "run validate() or add --jitter");
        est.values[i] = k / (n * vd * std::pow(r, d));
    }
    est.order.resize(n);
    std::iota(est.order.begin(), est.order.end(), 0);
    std::sort(est.order.begin(), est.order.end(), [&est](int a, int b) {
        return est.values[a] > est.values[b] || (est.values[a] == est.values[b] && a < b);
    });
    return est;
}

double c_delta_n(double delta, double n, int d) {
    if (!(delta > 0.0 && delta < 1.0))
        throw Error(ErrorKind::InvalidDelta, "delta must be in (0,1)");
    if (n < 2.0) throw Error(ErrorKind::TooFewPoints, "n must be >= 2");
    if (d < 1) throw Error(ErrorKind::InvalidDimension, "dimension must be >= 1");
    return 16.0 * std::log(2.0 / delta) * std::sqrt(d * std::log(n));
}

double beta_k(const BetaConfig& config, int k, double n, int d) {
    if (k < 2) throw Error(ErrorKind::InvalidK, "beta_k requires k >= 2");
    switch (config.mode) {
        case BetaMode::Theoretical:
            return 4.0 * c_delta_n(config.delta, n, d) / std::sqrt(static_cast<double>(k));
        case BetaMode::Practical:
            return 2.0 / std::sqrt(static_cast<double>(k));
        case BetaMode::Custom:
            if (!(config.custom_value > 0.0))
                throw Error(ErrorKind::InvalidConfig, "custom beta must be > 0");
            return config.custom_value;
    }
    throw Error(ErrorKind::InvalidConfig, "bad beta mode");
}

int default_k(double n) {
    if (n < 8.0) throw Error(ErrorKind::TooFewPoints, "default_k requires n >= 8");
    const double ln = std::log(n);
    return std::max(2, static_cast<int>(std::lround(0.5 * ln * ln)));
}

}  // namespace mcores
