#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "modalcores/clustering.hpp"
#include "modalcores/synthgen.hpp"

using namespace mcores;

namespace {

double dist_to_set(const double* q, const Dataset& set) {
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < set.size(); ++i) best = std::min(best, set.distance_sq_to(i, q));
    return std::sqrt(best);
}

}  // namespace

TEST_CASE("rings with zero noise lie on the circles") {
    RingSpec spec = three_rings_preset(300);
    spec.noise_sigma = 0.0;
    const SyntheticData synth = gen_rings(spec, 3);
    REQUIRE(synth.truth.size() == 3);
    const double gap = ring_truth_discretization_bound(spec);
    for (int i = 0; i < synth.data.size(); ++i) {
        const Dataset& ring = synth.truth[synth.labels[i]];
        CHECK(dist_to_set(synth.data.row(i), ring) <= gap);
    }
}

TEST_CASE("three-rings preset counts and dimensions") {
    const SyntheticData synth = gen_rings(three_rings_preset(6000), 1);
    CHECK(synth.data.size() == 6000);
    CHECK(synth.data.dim() == 2);
    CHECK(synth.truth.size() == 3);
    CHECK(synth.labels.size() == 6000);
    CHECK(synth.warnings.empty());
    for (const auto& ring : synth.truth) CHECK(ring.size() == 256);
}

TEST_CASE("generators are bit-deterministic given the seed") {
    const SyntheticData a = gen_rings(three_rings_preset(600), 7);
    const SyntheticData b = gen_rings(three_rings_preset(600), 7);
    CHECK(a.data.raw() == b.data.raw());
    CHECK(a.labels == b.labels);

    const SyntheticData c = gen_gaussian_mixture(three_gaussians_preset(500), 9);
    const SyntheticData d = gen_gaussian_mixture(three_gaussians_preset(500), 9);
    CHECK(c.data.raw() == d.data.raw());

    const SyntheticData e = gen_manifold_noise(two_segments_preset(400), 11);
    const SyntheticData f = gen_manifold_noise(two_segments_preset(400), 11);
    CHECK(e.data.raw() == f.data.raw());

    const SyntheticData g = gen_rings(three_rings_preset(600), 8);
    CHECK(a.data.raw() != g.data.raw());
}

TEST_CASE("ring truth discretization bound holds against the continuous circle") {
    const RingSpec spec = three_rings_preset(300);
    const double bound = ring_truth_discretization_bound(spec);
    // sample the continuous ring densely; every point must be within the
    // bound of the discretized truth
    const SyntheticData synth = gen_rings(spec, 2);
    for (std::size_t r = 0; r < spec.centers.size(); ++r) {
        for (int t = 0; t < 999; ++t) {
            const double theta = 2.0 * std::numbers::pi * t / 999.0;
            const double q[2] = {spec.centers[r][0] + spec.radii[r] * std::cos(theta),
                                 spec.centers[r][1] + spec.radii[r] * std::sin(theta)};
            CHECK(dist_to_set(q, synth.truth[r]) <= bound);
        }
    }
}

TEST_CASE("overlapping rings warn") {
    RingSpec spec;
    spec.centers = {{0.0, 0.0}, {1.0, 0.0}};
    spec.radii = {1.0, 1.0};
    spec.counts = {10, 10};
    spec.noise_sigma = 0.1;
    const SyntheticData synth = gen_rings(spec, 1);
    CHECK(!synth.warnings.empty());
}

TEST_CASE("mixture sampling: counts, truth, and CLT mean check") {
    MixtureSpec spec = single_gaussian_2d_preset(4000);
    spec.means = {{3.0, -2.0}};
    const SyntheticData synth = gen_gaussian_mixture(spec, 13);
    CHECK(synth.data.size() == 4000);
    REQUIRE(synth.truth.size() == 1);
    CHECK(synth.truth[0].size() == 1);
    CHECK(synth.truth[0].coord(0, 0) == 3.0);

    // empirical mean within 4*sigma/sqrt(n) per coordinate
    const double tol = 4.0 / std::sqrt(4000.0);
    for (int j = 0; j < 2; ++j) {
        double mean = 0.0;
        for (int i = 0; i < synth.data.size(); ++i) mean += synth.data.coord(i, j);
        mean /= synth.data.size();
        CHECK(std::abs(mean - spec.means[0][j]) < tol);
    }
}

TEST_CASE("mixture labels follow the component weights roughly") {
    MixtureSpec spec = three_gaussians_preset(3000);
    const SyntheticData synth = gen_gaussian_mixture(spec, 21);
    std::vector<int> counts(3, 0);
    for (int label : synth.labels) ++counts[label];
    for (int c = 0; c < 3; ++c) CHECK(std::abs(counts[c] - 1000) < 150);
}

TEST_CASE("invalid specs are rejected") {
    RingSpec bad_ring = three_rings_preset(100);
    bad_ring.radii = {1.0};  // length mismatch
    CHECK_THROWS_AS(gen_rings(bad_ring, 1), Error);

    MixtureSpec bad_weights = three_gaussians_preset(100);
    bad_weights.weights = {0.5, 0.5, 0.5};
    CHECK_THROWS_AS(gen_gaussian_mixture(bad_weights, 1), Error);

    ManifoldNoiseSpec bad_manifold;
    CHECK_THROWS_AS(gen_manifold_noise(bad_manifold, 1), Error);
}

TEST_CASE("manifold noise: two far segments give two truth components") {
    const ManifoldNoiseSpec spec = two_segments_preset(800);
    const SyntheticData synth = gen_manifold_noise(spec, 17);
    CHECK(synth.truth.size() == 2);
    CHECK(synth.data.size() == 800);
    // labels match the nearer component
    for (int i = 0; i < synth.data.size(); ++i) {
        const double d0 = dist_to_set(synth.data.row(i), synth.truth[0]);
        const double d1 = dist_to_set(synth.data.row(i), synth.truth[1]);
        CHECK((synth.labels[i] == 0 ? d0 <= d1 : d1 <= d0));
    }
}

TEST_CASE("small sigma concentrates samples on the manifold") {
    ManifoldNoiseSpec spec = two_segments_preset(500);
    spec.sigma = 1e-4;
    const SyntheticData synth = gen_manifold_noise(spec, 19);
    for (int i = 0; i < synth.data.size(); ++i) {
        const double d = std::min(dist_to_set(synth.data.row(i), synth.truth[0]),
                                  dist_to_set(synth.data.row(i), synth.truth[1]));
        CHECK(d < 1e-3);
    }
}

TEST_CASE("distance-to-manifold histogram decays past the first bin") {
    ManifoldNoiseSpec spec = two_segments_preset(8000);
    spec.sigma = 0.2;
    const SyntheticData synth = gen_manifold_noise(spec, 23);
    std::vector<int> bins(8, 0);
    const double width = 0.15;
    for (int i = 0; i < synth.data.size(); ++i) {
        const double d = std::min(dist_to_set(synth.data.row(i), synth.truth[0]),
                                  dist_to_set(synth.data.row(i), synth.truth[1]));
        const int b = std::min(7, static_cast<int>(d / width));
        ++bins[b];
    }
    for (std::size_t b = 2; b < bins.size(); ++b) CHECK(bins[b] <= bins[b - 1]);
}
