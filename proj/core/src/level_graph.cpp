#include "modalcores/level_graph.hpp"

#include <utility>

namespace mcores {

LevelGraph::LevelGraph(int capacity) {
    if (capacity < 1) throw Error(ErrorKind::InvalidConfig, "capacity must be >= 1");
    parent_.resize(capacity);
    size_.assign(capacity, 0);
    active_.assign(capacity, 0);
    seen_.assign(capacity, 0);
    head_.assign(capacity, -1);
    tail_.assign(capacity, -1);
    next_.assign(capacity, -1);
}

void LevelGraph::check_active(int i) const {
    if (i < 0 || i >= capacity() || !active_[i])
        throw Error(ErrorKind::InactiveNode, "node " + std::to_string(i) + " is not active");
}

void LevelGraph::add_node(int i) {
    if (i < 0 || i >= capacity())
        throw Error(ErrorKind::InvalidConfig, "node index out of range");
    if (active_[i])
        throw Error(ErrorKind::DuplicateNode, "node " + std::to_string(i) + " already active");
    active_[i] = 1;
    parent_[i] = i;
    size_[i] = 1;
    seen_[i] = 0;
    head_[i] = i;
    tail_[i] = i;
    next_[i] = -1;
    ++active_count_;
    ++component_count_;
}

int LevelGraph::find(int i) {
    int root = i;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[i] != root) {
        int next = parent_[i];
        parent_[i] = root;
        i = next;
    }
    return root;
}

void LevelGraph::link(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    seen_[a] = static_cast<char>(seen_[a] | seen_[b]);
    // splice b's member chain onto a's
    next_[tail_[a]] = head_[b];
    tail_[a] = tail_[b];
    --component_count_;
}

void LevelGraph::add_edge(int i, int j) {
    check_active(i);
    check_active(j);
    link(i, j);
}

void LevelGraph::add_mutual_edges(int i, const KnnIndex& index) {
    check_active(i);
    const double ri = index.radius(i);
    auto nb = index.neighbors(i);
    auto ds = index.distances(i);
    for (std::size_t t = 0; t < nb.size(); ++t) {
        const int j = nb[t];
        if (j == i || !active_[j]) continue;
        if (ds[t] <= ri && ds[t] <= index.radius(j)) link(i, j);
    }
    auto rnb = index.reverse_neighbors(i);
    auto rds = index.reverse_distances(i);
    for (std::size_t t = 0; t < rnb.size(); ++t) {
        const int j = rnb[t];
        if (!active_[j]) continue;
        if (rds[t] <= ri && rds[t] <= index.radius(j)) link(i, j);
    }
}

int LevelGraph::component_of(int i) {
    check_active(i);
    return find(i);
}

std::vector<int> LevelGraph::component_members(int i) {
    check_active(i);
    const int root = find(i);
    std::vector<int> members;
    members.reserve(size_[root]);
    for (int m = head_[root]; m >= 0; m = next_[m]) members.push_back(m);
    return members;
}

bool LevelGraph::component_seen(int i) {
    check_active(i);
    const int root = find(i);
    const bool was = seen_[root] != 0;
    seen_[root] = 1;
    return was;
}

}  // namespace mcores
