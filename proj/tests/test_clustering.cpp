#include <algorithm>

#include "doctest.h"
#include "modalcores/clustering.hpp"
#include "support/oracles.hpp"

using namespace mcores;

namespace {

ModalSetEstimate make_estimate(std::vector<int> members, int rank, double level = 1.0) {
    ModalSetEstimate est;
    est.members = std::move(members);
    est.founder = est.members.front();
    est.rank = rank;
    est.creation_level = level;
    return est;
}

}  // namespace

TEST_CASE("assign basics on a 1-d line") {
    // points: 0, 3, 10
    const Dataset data(std::vector<double>{0, 3, 10}, 3, 1);
    const std::vector<ModalSetEstimate> cores{make_estimate({0}, 0), make_estimate({2}, 1)};
    const ClusteringResult result = assign(data, cores);
    CHECK(result.labels[0] == 0);  // core member keeps its own core
    CHECK(result.labels[2] == 1);
    CHECK(result.labels[1] == 0);  // 3 is closer to 0 than to 10
}

TEST_CASE("assign breaks exact ties by lower rank") {
    // cores at {0} and {2}; the point at 1 is equidistant
    const Dataset data(std::vector<double>{0, 1, 2}, 3, 1);
    const std::vector<ModalSetEstimate> cores{make_estimate({0}, 0), make_estimate({2}, 1)};
    CHECK(assign(data, cores).labels[1] == 0);

    // swapping the core order flips the tie
    const std::vector<ModalSetEstimate> swapped{make_estimate({2}, 0), make_estimate({0}, 1)};
    CHECK(assign(data, swapped).labels[1] == 0);  // rank 0 is now core {2}
    CHECK(assign(data, swapped).labels[1] == 0);
}

TEST_CASE("every core member is labeled with its own core") {
    const Dataset data = oracle::random_blobs(200, 2, 3, 5);
    std::vector<ModalSetEstimate> cores{make_estimate({0, 1, 2, 3}, 0),
                                        make_estimate({50, 51, 52}, 1),
                                        make_estimate({150, 151}, 2)};
    const ClusteringResult result = assign(data, cores);
    for (std::size_t e = 0; e < cores.size(); ++e)
        for (int m : cores[e].members) CHECK(result.labels[m] == static_cast<int>(e));
    for (int label : result.labels) {
        CHECK(label >= 0);
        CHECK(label < 3);
    }
}

TEST_CASE("assign is deterministic and permutes consistently under reordering") {
    const Dataset data = oracle::random_blobs(150, 2, 2, 9);
    std::vector<ModalSetEstimate> cores{make_estimate({0, 1}, 0), make_estimate({100, 101}, 1)};
    const auto a = assign(data, cores).labels;
    const auto b = assign(data, cores).labels;
    CHECK(a == b);

    std::vector<ModalSetEstimate> reversed{cores[1], cores[0]};
    reversed[0].rank = 0;
    reversed[1].rank = 1;
    const auto c = assign(data, reversed).labels;
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(c[i] == 1 - a[i]);
}

TEST_CASE("assign with no estimates is an error") {
    const Dataset data(std::vector<double>{0.0}, 1, 1);
    try {
        assign(data, {});
        FAIL("expected NoEstimates");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NoEstimates);
    }
}

TEST_CASE("hausdorff basics") {
    const Dataset a(std::vector<double>{0}, 1, 1);
    const Dataset b(std::vector<double>{3}, 1, 1);
    CHECK(hausdorff(a, b) == 3.0);
    CHECK(hausdorff(a, a) == 0.0);

    const Dataset c(std::vector<double>{0, 1}, 2, 1);
    const Dataset d(std::vector<double>{0, 5}, 2, 1);
    CHECK(hausdorff(c, d) == 4.0);  // sup over {0,5}: min dist from 5 is 4

    CHECK_THROWS_AS(hausdorff(a, Dataset(std::vector<double>{1, 2}, 1, 2)), Error);
}

TEST_CASE("hausdorff is a metric on random point sets") {
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 25; ++trial) {
        const int d = 1 + static_cast<int>(rng() % 3);
        const Dataset a = oracle::random_uniform(1 + rng() % 8, d, rng());
        const Dataset b = oracle::random_uniform(1 + rng() % 8, d, rng());
        const Dataset c = oracle::random_uniform(1 + rng() % 8, d, rng());
        const double ab = hausdorff(a, b);
        const double ba = hausdorff(b, a);
        const double ac = hausdorff(a, c);
        const double cb = hausdorff(c, b);
        CHECK(ab == ba);                       // symmetry
        CHECK(ab >= 0.0);
        CHECK(ab <= ac + cb + 1e-12);          // triangle inequality
        CHECK(hausdorff(a, a) == 0.0);         // identity
    }
}

TEST_CASE("greedy matching") {
    const Dataset data(std::vector<double>{0, 0.1, 10, 10.1, 20}, 5, 1);

    SUBCASE("perfect recovery gives all-zero distances") {
        const std::vector<ModalSetEstimate> estimates{make_estimate({0, 1}, 0),
                                                      make_estimate({2, 3}, 1)};
        const std::vector<Dataset> truth{extract_points(data, {0, 1}),
                                         extract_points(data, {2, 3})};
        const MatchReport report = match_estimates_to_truth(estimates, truth, data);
        REQUIRE(report.matches.size() == 2);
        for (const auto& m : report.matches) CHECK(m.distance == 0.0);
        CHECK(report.unmatched_estimates.empty());
        CHECK(report.unmatched_truths.empty());
        CHECK(report.max_matched_distance() == 0.0);
    }

    SUBCASE("2 truths and 3 estimates leave one unmatched estimate") {
        const std::vector<ModalSetEstimate> estimates{
            make_estimate({0}, 0), make_estimate({2}, 1), make_estimate({4}, 2)};
        const std::vector<Dataset> truth{extract_points(data, {0}), extract_points(data, {2})};
        const MatchReport report = match_estimates_to_truth(estimates, truth, data);
        CHECK(report.matches.size() == 2);
        CHECK(report.unmatched_estimates == std::vector<int>{2});
        CHECK(report.unmatched_truths.empty());
    }

    SUBCASE("matching picks the nearest pairing") {
        const std::vector<ModalSetEstimate> estimates{make_estimate({1}, 0),
                                                      make_estimate({3}, 1)};
        const std::vector<Dataset> truth{extract_points(data, {2}), extract_points(data, {0})};
        const MatchReport report = match_estimates_to_truth(estimates, truth, data);
        REQUIRE(report.matches.size() == 2);
        // estimate 0 (0.1) pairs with truth 1 (0); estimate 1 (10.1) with truth 0 (10)
        for (const auto& m : report.matches) {
            if (m.estimate == 0) CHECK(m.truth == 1);
            if (m.estimate == 1) CHECK(m.truth == 0);
        }
    }
}

TEST_CASE("extract_points rejects empty member lists") {
    const Dataset data(std::vector<double>{0.0}, 1, 1);
    CHECK_THROWS_AS(extract_points(data, {}), Error);
}
