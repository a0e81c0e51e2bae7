#include "modalcores/knn_index.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <numeric>

#include "modalcores/parallel.hpp"

namespace mcores {

namespace {

// Candidate ordering: by squared distance, ties by index, with the query
// point itself keyed as -1 so it always sorts first among zero distances.
struct Candidate {
    double d2;
    std::int32_t key;   // j, or -1 for the query point itself
    std::int32_t idx;   // actual sample index
};

inline bool candidate_less(const Candidate& a, const Candidate& b) {
    return a.d2 < b.d2 || (a.d2 == b.d2 && a.key < b.key);
}

class KdTree {
public:
    KdTree(const Dataset& data) : data_(&data), d_(data.dim()) {
        const int n = data.size();
        perm_.resize(n);
        std::iota(perm_.begin(), perm_.end(), 0);
        nodes_.reserve(2 * n / kLeafSize + 4);
        build(0, n);
    }

    // k best candidates for query point qi, sorted ascending.
    void knn(int qi, int k, std::vector<Candidate>& out) const {
        out.clear();
        const double* q = data_->row(qi);
        search(0, q, qi, k, out);
        std::sort(out.begin(), out.end(), candidate_less);
    }

    void within(const double* q, int qi, double eps_sq, std::vector<int>& out) const {
        range(0, q, qi, eps_sq, out);
        std::sort(out.begin(), out.end());
    }

private:
    static constexpr int kLeafSize = 24;

    struct Node {
        int begin, end;
        int left = -1, right = -1;
        std::vector<double> box_min, box_max;
    };

    int build(int begin, int end) {
        const int id = static_cast<int>(nodes_.size());
        nodes_.push_back({});
        Node& node = nodes_.back();
        node.begin = begin;
        node.end = end;
        node.box_min.assign(d_, std::numeric_limits<double>::infinity());
        node.box_max.assign(d_, -std::numeric_limits<double>::infinity());
        for (int t = begin; t < end; ++t) {
            const double* p = data_->row(perm_[t]);
            for (int j = 0; j < d_; ++j) {
                node.box_min[j] = std::min(node.box_min[j], p[j]);
                node.box_max[j] = std::max(node.box_max[j], p[j]);
            }
        }
        if (end - begin <= kLeafSize) return id;

        // split on the widest dimension at the median
        int dim = 0;
        double spread = -1.0;
        for (int j = 0; j < d_; ++j) {
            const double s = node.box_max[j] - node.box_min[j];
            if (s > spread) {
                spread = s;
                dim = j;
            }
        }
        if (spread <= 0.0) return id;  // all points identical: keep as leaf

        const int mid = begin + (end - begin) / 2;
        std::nth_element(perm_.begin() + begin, perm_.begin() + mid, perm_.begin() + end,
                         [this, dim](int a, int b) {
                             const double va = data_->coord(a, dim), vb = data_->coord(b, dim);
                             return va < vb || (va == vb && a < b);
                         });
        const int left = build(begin, mid);
        const int right = build(mid, end);
        nodes_[id].left = left;
        nodes_[id].right = right;
        return id;
    }

    double box_min_dist_sq(const Node& node, const double* q) const {
        double s = 0.0;
        for (int j = 0; j < d_; ++j) {
            double diff = 0.0;
            if (q[j] < node.box_min[j]) diff = node.box_min[j] - q[j];
            else if (q[j] > node.box_max[j]) diff = q[j] - node.box_max[j];
            s += diff * diff;
        }
        return s;
    }

    void search(int id, const double* q, int qi, int k, std::vector<Candidate>& heap) const {
        const Node& node = nodes_[id];
        // prune only on strict inequality: a boundary point could tie the
        // current worst and win on index
        if (static_cast<int>(heap.size()) == k && box_min_dist_sq(node, q) > heap.front().d2)
            return;

        if (node.left < 0) {
            for (int t = node.begin; t < node.end; ++t) {
                const int j = perm_[t];
                Candidate c{data_->distance_sq_to(j, q), j == qi ? -1 : j, j};
                if (static_cast<int>(heap.size()) < k) {
                    heap.push_back(c);
                    std::push_heap(heap.begin(), heap.end(), candidate_less);
                } else if (candidate_less(c, heap.front())) {
                    std::pop_heap(heap.begin(), heap.end(), candidate_less);
                    heap.back() = c;
                    std::push_heap(heap.begin(), heap.end(), candidate_less);
                }
            }
            return;
        }

        // visit the child whose box is nearer to q first
        const double dl = box_min_dist_sq(nodes_[node.left], q);
        const double dr = box_min_dist_sq(nodes_[node.right], q);
        if (dl <= dr) {
            search(node.left, q, qi, k, heap);
            search(node.right, q, qi, k, heap);
        } else {
            search(node.right, q, qi, k, heap);
            search(node.left, q, qi, k, heap);
        }
    }

    void range(int id, const double* q, int qi, double eps_sq, std::vector<int>& out) const {
        const Node& node = nodes_[id];
        if (box_min_dist_sq(node, q) > eps_sq) return;
        if (node.left < 0) {
            for (int t = node.begin; t < node.end; ++t) {
                const int j = perm_[t];
                if (data_->distance_sq_to(j, q) <= eps_sq) out.push_back(j);
            }
            return;
        }
        range(node.left, q, qi, eps_sq, out);
        range(node.right, q, qi, eps_sq, out);
    }

    const Dataset* data_;
    int d_;
    std::vector<int> perm_;
    std::vector<Node> nodes_;
};

void check_k(const Dataset& data, int k) {
    if (k < 1 || k > data.size())
        throw Error(ErrorKind::InvalidK, "k must satisfy 1 <= k <= n (k=" + std::to_string(k) +
                                             ", n=" + std::to_string(data.size()) + ")");
}

}  // namespace

void KnnIndex::build_reverse() {
    reverse_off_.assign(n_ + 1, 0);
    std::vector<std::size_t> counts(n_, 0);
    for (int i = 0; i < n_; ++i)
        for (std::int32_t j : neighbors(i))
            if (j != i) ++counts[j];
    for (int i = 0; i < n_; ++i) reverse_off_[i + 1] = reverse_off_[i] + counts[i];
    reverse_idx_.resize(reverse_off_[n_]);
    reverse_dist_.resize(reverse_off_[n_]);
    std::vector<std::size_t> cursor(reverse_off_.begin(), reverse_off_.end() - 1);
    for (int i = 0; i < n_; ++i) {
        auto nb = neighbors(i);
        auto ds = distances(i);
        for (int t = 0; t < k_; ++t) {
            const std::int32_t j = nb[t];
            if (j == i) continue;
            reverse_idx_[cursor[j]] = i;
            reverse_dist_[cursor[j]] = ds[t];
            ++cursor[j];
        }
    }
}

KnnIndex KnnIndex::from_lists(int k, int n, int d, std::vector<std::int32_t> neighbors,
                              std::vector<double> distances) {
    if (neighbors.size() != static_cast<std::size_t>(n) * k ||
        distances.size() != static_cast<std::size_t>(n) * k)
        throw Error(ErrorKind::InvalidConfig, "neighbor/distance arrays must be n*k");
    KnnIndex index;
    index.k_ = k;
    index.n_ = n;
    index.d_ = d;
    index.neighbors_ = std::move(neighbors);
    index.distances_ = std::move(distances);
    index.radii_.resize(n);
    for (int i = 0; i < n; ++i)
        index.radii_[i] = index.distances_[static_cast<std::size_t>(i) * k + k - 1];
    index.build_reverse();
    return index;
}

KnnIndex KnnIndex::prefix(int k) const {
    if (k < 1 || k > k_)
        throw Error(ErrorKind::InvalidK, "prefix k must satisfy 1 <= k <= index k");
    std::vector<std::int32_t> nb(static_cast<std::size_t>(n_) * k);
    std::vector<double> ds(static_cast<std::size_t>(n_) * k);
    for (int i = 0; i < n_; ++i) {
        std::copy_n(neighbors_.begin() + static_cast<std::size_t>(i) * k_, k,
                    nb.begin() + static_cast<std::size_t>(i) * k);
        std::copy_n(distances_.begin() + static_cast<std::size_t>(i) * k_, k,
                    ds.begin() + static_cast<std::size_t>(i) * k);
    }
    return from_lists(k, n_, d_, std::move(nb), std::move(ds));
}

KnnIndex build_index(const Dataset& data, int k) {
    check_k(data, k);
    const int n = data.size();
    KnnIndex index;
    index.k_ = k;
    index.n_ = n;
    index.d_ = data.dim();
    index.neighbors_.resize(static_cast<std::size_t>(n) * k);
    index.distances_.resize(static_cast<std::size_t>(n) * k);
    index.radii_.resize(n);

    const KdTree tree(data);
    parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
        thread_local std::vector<Candidate> cand;
        tree.knn(static_cast<int>(i), k, cand);
        const std::size_t base = i * k;
        for (int t = 0; t < k; ++t) {
            index.neighbors_[base + t] = cand[t].idx;
            index.distances_[base + t] = std::sqrt(cand[t].d2);
        }
        index.radii_[i] = index.distances_[base + k - 1];
    });
    index.build_reverse();
    return index;
}

KnnIndex knn_brute_force(const Dataset& data, int k) {
    check_k(data, k);
    const int n = data.size();
    KnnIndex index;
    index.k_ = k;
    index.n_ = n;
    index.d_ = data.dim();
    index.neighbors_.resize(static_cast<std::size_t>(n) * k);
    index.distances_.resize(static_cast<std::size_t>(n) * k);
    index.radii_.resize(n);

    parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
        std::vector<Candidate> cand(n);
        for (int j = 0; j < n; ++j)
            cand[j] = {data.distance_sq(static_cast<int>(i), j),
                       j == static_cast<int>(i) ? -1 : j, j};
        std::partial_sort(cand.begin(), cand.begin() + k, cand.end(), candidate_less);
        const std::size_t base = i * k;
        for (int t = 0; t < k; ++t) {
            index.neighbors_[base + t] = cand[t].idx;
            index.distances_[base + t] = std::sqrt(cand[t].d2);
        }
        index.radii_[i] = index.distances_[base + k - 1];
    });
    index.build_reverse();
    return index;
}

namespace {
constexpr char kIndexMagic[8] = {'M', 'C', 'K', 'N', 'N', 'I', 'D', 'X'};
constexpr std::uint32_t kIndexVersion = 1;

template <class T>
void write_raw(std::ofstream& out, const T& v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof v);
}
template <class T>
void read_raw(std::ifstream& in, T& v) {
    in.read(reinterpret_cast<char*>(&v), sizeof v);
}
}  // namespace

void KnnIndex::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::IoError, "cannot write index: " + path);
    out.write(kIndexMagic, sizeof kIndexMagic);
    write_raw(out, kIndexVersion);
    write_raw(out, static_cast<std::uint32_t>(k_));
    write_raw(out, static_cast<std::uint64_t>(n_));
    write_raw(out, static_cast<std::uint32_t>(d_));
    out.write(reinterpret_cast<const char*>(neighbors_.data()),
              static_cast<std::streamsize>(neighbors_.size() * sizeof(std::int32_t)));
    out.write(reinterpret_cast<const char*>(distances_.data()),
              static_cast<std::streamsize>(distances_.size() * sizeof(double)));
    if (!out) throw Error(ErrorKind::IoError, "index write failed: " + path);
}

KnnIndex KnnIndex::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::IoError, "cannot open index: " + path);
    char magic[8];
    in.read(magic, sizeof magic);
    if (!in || std::memcmp(magic, kIndexMagic, sizeof magic) != 0)
        throw Error(ErrorKind::ParseError, "not an index file: " + path);
    std::uint32_t version, k32, d32;
    std::uint64_t n64;
    read_raw(in, version);
    if (version != kIndexVersion)
        throw Error(ErrorKind::ParseError, "unsupported index version in " + path);
    read_raw(in, k32);
    read_raw(in, n64);
    read_raw(in, d32);
    const int k = static_cast<int>(k32);
    const int n = static_cast<int>(n64);
    std::vector<std::int32_t> nb(static_cast<std::size_t>(n) * k);
    std::vector<double> ds(static_cast<std::size_t>(n) * k);
    in.read(reinterpret_cast<char*>(nb.data()),
            static_cast<std::streamsize>(nb.size() * sizeof(std::int32_t)));
    in.read(reinterpret_cast<char*>(ds.data()),
            static_cast<std::streamsize>(ds.size() * sizeof(double)));
    if (!in) throw Error(ErrorKind::ParseError, "truncated index file: " + path);
    return from_lists(k, n, static_cast<int>(d32), std::move(nb), std::move(ds));
}

struct RadiusSearcher::Impl {
    Impl(const Dataset& data) : data(&data), tree(data) {}
    const Dataset* data;
    KdTree tree;
};

RadiusSearcher::RadiusSearcher(const Dataset& data) : impl_(new Impl(data)) {}
RadiusSearcher::~RadiusSearcher() { delete impl_; }
RadiusSearcher::RadiusSearcher(RadiusSearcher&& o) noexcept : impl_(o.impl_) { o.impl_ = nullptr; }
RadiusSearcher& RadiusSearcher::operator=(RadiusSearcher&& o) noexcept {
    std::swap(impl_, o.impl_);
    return *this;
}

std::vector<int> RadiusSearcher::within(const double* q, double eps) const {
    std::vector<int> out;
    impl_->tree.within(q, -1, eps * eps, out);
    return out;
}

std::vector<int> RadiusSearcher::within(int i, double eps) const {
    return within(impl_->data->row(i), eps);
}

}  // namespace mcores
