#include <cstdio>
#include <unistd.h>
#include <filesystem>

#include "doctest.h"
#include "modalcores/knn_index.hpp"
#include "support/oracles.hpp"

using namespace mcores;

namespace {

void check_indices_equal(const KnnIndex& a, const KnnIndex& b) {
    REQUIRE(a.size() == b.size());
    REQUIRE(a.k() == b.k());
    for (int i = 0; i < a.size(); ++i) {
        auto na = a.neighbors(i), nb = b.neighbors(i);
        auto da = a.distances(i), db = b.distances(i);
        for (int t = 0; t < a.k(); ++t) {
            REQUIRE(na[t] == nb[t]);
            REQUIRE(da[t] == doctest::Approx(db[t]).epsilon(1e-12));
        }
        REQUIRE(a.radius(i) == doctest::Approx(b.radius(i)).epsilon(1e-12));
    }
}

}  // namespace

TEST_CASE("radii on the 1-d line {0,1,2,10}") {
    const Dataset data(std::vector<double>{0, 1, 2, 10}, 4, 1);
    for (const KnnIndex& index : {build_index(data, 2), knn_brute_force(data, 2)}) {
        CHECK(index.radius(0) == 1.0);
        CHECK(index.radius(1) == 1.0);
        CHECK(index.radius(2) == 1.0);
        CHECK(index.radius(3) == 8.0);
    }
}

TEST_CASE("k=1 gives zero radii: self counts") {
    const Dataset data = oracle::random_uniform(20, 2, 1);
    const KnnIndex index = build_index(data, 1);
    for (int i = 0; i < 20; ++i) {
        CHECK(index.radius(i) == 0.0);
        CHECK(index.neighbors(i)[0] == i);
    }
}

TEST_CASE("single point, k=1") {
    const Dataset data(std::vector<double>{3.0}, 1, 1);
    const KnnIndex index = knn_brute_force(data, 1);
    CHECK(index.radius(0) == 0.0);
    CHECK(index.neighbors(0)[0] == 0);
}

TEST_CASE("invalid k") {
    const Dataset data = oracle::random_uniform(5, 2, 2);
    CHECK_THROWS_AS(build_index(data, 0), Error);
    CHECK_THROWS_AS(build_index(data, 6), Error);
    CHECK_THROWS_AS(knn_brute_force(data, -1), Error);
}

TEST_CASE("kd-tree matches brute force on random instances") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 20 + static_cast<int>(rng() % 80);
        const int d = 1 + static_cast<int>(rng() % 4);
        const int k = 2 + static_cast<int>(rng() % std::min(14, n - 2));
        const Dataset data = oracle::random_uniform(n, d, rng());
        check_indices_equal(build_index(data, k), knn_brute_force(data, k));
    }
}

TEST_CASE("kd-tree matches brute force on tie-heavy grid data") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 6; ++trial) {
        const int n = 40;
        std::vector<double> pts(n * 2);
        for (double& v : pts) v = static_cast<double>(rng() % 5);
        const Dataset data(std::move(pts), n, 2);
        const int k = 2 + static_cast<int>(rng() % 8);
        check_indices_equal(build_index(data, k), knn_brute_force(data, k));
    }
}

TEST_CASE("self is always first even among duplicates") {
    const Dataset data(std::vector<double>{5, 5, 5, 9}, 4, 1);
    const KnnIndex index = build_index(data, 3);
    for (int i = 0; i < 3; ++i) CHECK(index.neighbors(i)[0] == i);
}

TEST_CASE("radii are monotone in k") {
    const Dataset data = oracle::random_uniform(60, 3, 11);
    const KnnIndex k5 = build_index(data, 5);
    const KnnIndex k6 = build_index(data, 6);
    for (int i = 0; i < data.size(); ++i) CHECK(k6.radius(i) >= k5.radius(i));
}

TEST_CASE("mutual condition is checkable from the index alone") {
    const Dataset data = oracle::random_uniform(80, 2, 13);
    const int k = 6;
    const KnnIndex index = build_index(data, k);
    const std::vector<double> radii = oracle::knn_radii(data, k);
    for (int i = 0; i < data.size(); ++i) {
        auto nb = index.neighbors(i);
        auto ds = index.distances(i);
        for (int t = 0; t < k; ++t) {
            const int j = nb[t];
            if (j == i) continue;
            const bool mutual = index.mutual(i, j, ds[t]);
            const bool by_def = data.distance(i, j) <= std::min(radii[i], radii[j]);
            CHECK(mutual == by_def);
        }
    }
}

TEST_CASE("reverse lists invert the forward lists") {
    const Dataset data = oracle::random_uniform(50, 2, 17);
    const KnnIndex index = build_index(data, 5);
    for (int i = 0; i < data.size(); ++i) {
        auto rnb = index.reverse_neighbors(i);
        auto rds = index.reverse_distances(i);
        for (std::size_t t = 0; t < rnb.size(); ++t) {
            const int j = rnb[t];
            auto fwd = index.neighbors(j);
            bool found = false;
            for (int s = 0; s < index.k(); ++s)
                if (fwd[s] == i) {
                    found = true;
                    CHECK(index.distances(j)[s] == rds[t]);
                }
            CHECK(found);
        }
    }
}

TEST_CASE("prefix(k) equals a direct build at k") {
    const Dataset data = oracle::random_uniform(70, 3, 19);
    const KnnIndex full = build_index(data, 12);
    for (int k : {2, 5, 12}) check_indices_equal(full.prefix(k), build_index(data, k));
}

TEST_CASE("binary dump round-trips") {
    const Dataset data = oracle::random_uniform(40, 2, 23);
    const KnnIndex index = build_index(data, 4);
    const auto path = std::filesystem::temp_directory_path() /
                      ("mcores_idx_" + std::to_string(::getpid()) + ".bin");
    index.save(path.string());
    const KnnIndex loaded = KnnIndex::load(path.string());
    check_indices_equal(index, loaded);
    CHECK(loaded.dim() == index.dim());
    std::filesystem::remove(path);
}

TEST_CASE("radius queries match brute force") {
    const Dataset data = oracle::random_uniform(90, 2, 29);
    const RadiusSearcher searcher(data);
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> e(0.01, 0.5);
    for (int trial = 0; trial < 20; ++trial) {
        const int i = static_cast<int>(rng() % data.size());
        const double eps = e(rng);
        std::vector<int> expected;
        for (int j = 0; j < data.size(); ++j)
            if (data.distance(i, j) <= eps) expected.push_back(j);
        CHECK(searcher.within(i, eps) == expected);
    }
}
