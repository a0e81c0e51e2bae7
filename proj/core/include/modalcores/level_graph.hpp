#pragma once

#include <vector>

#include "modalcores/knn_index.hpp"

namespace mcores {

// Dynamic mutual k-NN graph over the currently active points: a disjoint-set
// forest (union by size, path compression) with eager per-component member
// lists and a "seen" flag per component. Nodes are only ever added; the
// level descent never removes anything. Single-threaded mutation.
class LevelGraph {
public:
    explicit LevelGraph(int capacity);

    int capacity() const { return static_cast<int>(parent_.size()); }
    bool active(int i) const { return active_[i] != 0; }
    int active_count() const { return active_count_; }
    int component_count() const { return component_count_; }

    // Activates i as a fresh singleton component with seen = false.
    void add_node(int i);

    // Unions the components of two active nodes; seen flags OR together.
    void add_edge(int i, int j);

    // Unions i with every active neighbor j satisfying the mutual condition
    // ||x_i - x_j|| <= min{r_k(i), r_k(j)}. Both the forward list of i and
    // the reverse lists (points that list i) are scanned, so the resulting
    // edge set does not depend on activation order. Idempotent.
    void add_mutual_edges(int i, const KnnIndex& index);

    // Canonical root of i's component.
    int component_of(int i);

    // Member indices of i's component (unordered); O(component size).
    std::vector<int> component_members(int i);

    // Returns the component's current seen flag, then sets it. Merging a
    // seen component into anything leaves the result seen.
    bool component_seen(int i);

private:
    void check_active(int i) const;
    int find(int i);
    void link(int a, int b);

    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<char> active_;
    std::vector<char> seen_;  // valid at roots
    // member lists as intrusive chains spliced in O(1) on union:
    // head_/tail_ valid at roots, next_ threads each component
    std::vector<int> head_;
    std::vector<int> tail_;
    std::vector<int> next_;
    int active_count_ = 0;
    int component_count_ = 0;
};

}  // namespace mcores
