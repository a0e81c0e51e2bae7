#pragma once

#include <vector>

#include "modalcores/error.hpp"

namespace mcores {

// Cluster x class count table. Label values are mapped to dense row/column
// ids in first-occurrence order.
struct Contingency {
    std::vector<std::vector<long long>> table;
    std::vector<long long> row_sums;
    std::vector<long long> col_sums;
    long long n = 0;

    // True iff the two labelings induce the same partition
    // (exactly one nonzero cell per row and per column).
    bool identical_partitions() const;
};

Contingency contingency(const std::vector<int>& labels_a, const std::vector<int>& labels_b);

// Hubert-Arabie adjusted Rand index. When the adjustment denominator is zero
// (both partitions all singletons or both one cluster) returns 1 for
// identical partitions, 0 otherwise.
double adjusted_rand_index(const std::vector<int>& labels_a, const std::vector<int>& labels_b);

// Adjusted mutual information, max-entropy normalization, natural logs, with
// E[MI] under the permutation (hypergeometric) model. Degenerate case (both
// entropies zero) follows the same convention as ARI.
double adjusted_mutual_information(const std::vector<int>& labels_a,
                                   const std::vector<int>& labels_b);

// Expected mutual information between two labelings under the permutation
// model, from the contingency margins.
double expected_mutual_information(const Contingency& table);

double mutual_information(const Contingency& table);
double entropy(const std::vector<long long>& sizes, long long n);

struct ScoreReport {
    double ari = 0.0;
    double ami = 0.0;
    Contingency table;
};

ScoreReport score_report(const std::vector<int>& labels_a, const std::vector<int>& labels_b);

}  // namespace mcores
