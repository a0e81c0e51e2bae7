#include "modalcores/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

namespace mcores {

namespace {
std::vector<int> dense_ids(const std::vector<int>& labels, int& count) {
    std::unordered_map<int, int> map;
    std::vector<int> out(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto [it, inserted] = map.emplace(labels[i], static_cast<int>(map.size()));
        out[i] = it->second;
    }
    count = static_cast<int>(map.size());
    return out;
}

double choose2(double m) { return m * (m - 1.0) / 2.0; }
}  // namespace

bool Contingency::identical_partitions() const {
    for (const auto& row : table) {
        int nonzero = 0;
        for (long long v : row) nonzero += v != 0;
        if (nonzero != 1) return false;
    }
    const std::size_t cols = table.empty() ? 0 : table.front().size();
    for (std::size_t j = 0; j < cols; ++j) {
        int nonzero = 0;
        for (const auto& row : table) nonzero += row[j] != 0;
        if (nonzero != 1) return false;
    }
    return true;
}

Contingency contingency(const std::vector<int>& labels_a, const std::vector<int>& labels_b) {
    if (labels_a.size() != labels_b.size())
        throw Error(ErrorKind::LengthMismatch, "labelings have different lengths");
    if (labels_a.empty())
        throw Error(ErrorKind::LengthMismatch, "labelings must be nonempty");
    int ra = 0, rb = 0;
    const std::vector<int> a = dense_ids(labels_a, ra);
    const std::vector<int> b = dense_ids(labels_b, rb);
    Contingency c;
    c.n = static_cast<long long>(a.size());
    c.table.assign(ra, std::vector<long long>(rb, 0));
    c.row_sums.assign(ra, 0);
    c.col_sums.assign(rb, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        ++c.table[a[i]][b[i]];
        ++c.row_sums[a[i]];
        ++c.col_sums[b[i]];
    }
    return c;
}

double adjusted_rand_index(const std::vector<int>& labels_a, const std::vector<int>& labels_b) {
    const Contingency c = contingency(labels_a, labels_b);
    if (c.n < 2) throw Error(ErrorKind::LengthMismatch, "ARI needs at least 2 points");

    double sum_cells = 0.0;
    for (const auto& row : c.table)
        for (long long v : row) sum_cells += choose2(static_cast<double>(v));
    double sum_rows = 0.0, sum_cols = 0.0;
    for (long long v : c.row_sums) sum_rows += choose2(static_cast<double>(v));
    for (long long v : c.col_sums) sum_cols += choose2(static_cast<double>(v));
    const double pairs = choose2(static_cast<double>(c.n));
    const double expected = sum_rows * sum_cols / pairs;
    const double max_index = 0.5 * (sum_rows + sum_cols);
    if (max_index == expected) return c.identical_partitions() ? 1.0 : 0.0;
    return (sum_cells - expected) / (max_index - expected);
}

double entropy(const std::vector<long long>& sizes, long long n) {
    double h = 0.0;
    for (long long v : sizes) {
        if (v == 0) continue;
        const double p = static_cast<double>(v) / static_cast<double>(n);
        h -= p * std::log(p);
    }
    return h;
}

double mutual_information(const Contingency& c) {
    const double n = static_cast<double>(c.n);
    double mi = 0.0;
    for (std::size_t i = 0; i < c.table.size(); ++i) {
        for (std::size_t j = 0; j < c.table[i].size(); ++j) {
            const long long v = c.table[i][j];
            if (v == 0) continue;
            mi += (v / n) * std::log(v * n / (static_cast<double>(c.row_sums[i]) *
                                              static_cast<double>(c.col_sums[j])));
        }
    }
    return mi;
}

double expected_mutual_information(const Contingency& c) {
    const long long n = c.n;
    // log-factorial table
    std::vector<double> lf(static_cast<std::size_t>(n) + 1, 0.0);
    for (long long i = 2; i <= n; ++i) lf[i] = lf[i - 1] + std::log(static_cast<double>(i));

    const double logn = std::log(static_cast<double>(n));
    double emi = 0.0;
    for (long long ai : c.row_sums) {
        for (long long bj : c.col_sums) {
            const long long lo = std::max<long long>(1, ai + bj - n);
            const long long hi = std::min(ai, bj);
            for (long long v = lo; v <= hi; ++v) {
                const double term =
                    (static_cast<double>(v) / n) *
                    (std::log(static_cast<double>(v)) + logn -
                     std::log(static_cast<double>(ai)) - std::log(static_cast<double>(bj)));
                const double logp = lf[ai] + lf[bj] + lf[n - ai] + lf[n - bj] - lf[n] - lf[v] -
                                    lf[ai - v] - lf[bj - v] - lf[n - ai - bj + v];
                emi += term * std::exp(logp);
            }
        }
    }
    return emi;
}

double adjusted_mutual_information(const std::vector<int>& labels_a,
                                   const std::vector<int>& labels_b) {
    const Contingency c = contingency(labels_a, labels_b);
    if (c.n < 2) throw Error(ErrorKind::LengthMismatch, "AMI needs at least 2 points");

    const double ha = entropy(c.row_sums, c.n);
    const double hb = entropy(c.col_sums, c.n);
    if (ha == 0.0 && hb == 0.0) return c.identical_partitions() ? 1.0 : 0.0;

    const double mi = mutual_information(c);
    const double emi = expected_mutual_information(c);
    double denom = std::max(ha, hb) - emi;
    const double eps = std::numeric_limits<double>::epsilon();
    denom = denom < 0.0 ? std::min(denom, -eps) : std::max(denom, eps);
    return (mi - emi) / denom;
}

ScoreReport score_report(const std::vector<int>& labels_a, const std::vector<int>& labels_b) {
    ScoreReport report;
    report.ari = adjusted_rand_index(labels_a, labels_b);
    report.ami = adjusted_mutual_information(labels_a, labels_b);
    report.table = contingency(labels_a, labels_b);
    return report;
}

}  // namespace mcores
