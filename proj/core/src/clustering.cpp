#include "modalcores/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "modalcores/parallel.hpp"

namespace mcores {

Dataset extract_points(const Dataset& data, const std::vector<int>& members) {
    if (members.empty()) throw Error(ErrorKind::EmptySet, "cannot extract an empty point set");
    std::vector<double> pts;
    pts.reserve(members.size() * data.dim());
    for (int m : members) {
        const double* row = data.row(m);
        pts.insert(pts.end(), row, row + data.dim());
    }
    return Dataset(std::move(pts), static_cast<int>(members.size()), data.dim());
}

ClusteringResult assign(const Dataset& data, const std::vector<ModalSetEstimate>& estimates) {
    if (estimates.empty()) throw Error(ErrorKind::NoEstimates, "no estimates to assign to");
    const int n = data.size();

    std::vector<int> owner(n, -1);
    for (std::size_t e = 0; e < estimates.size(); ++e)
        for (int m : estimates[e].members)
            if (owner[m] < 0) owner[m] = static_cast<int>(e);

    ClusteringResult result;
    result.labels.assign(n, -1);
    result.cores = estimates;

    parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
        if (owner[i] >= 0) {
            result.labels[i] = owner[i];
            return;
        }
        double best = std::numeric_limits<double>::infinity();
        int best_e = 0;
        for (std::size_t e = 0; e < estimates.size(); ++e) {
            for (int m : estimates[e].members) {
                const double d2 = data.distance_sq(static_cast<int>(i), m);
                if (d2 < best) {
                    best = d2;
                    best_e = static_cast<int>(e);
                }
            }
        }
        result.labels[i] = best_e;
    });
    return result;
}

namespace {
double directed_sup_min(const Dataset& a, const Dataset& b) {
    double sup = 0.0;
    for (int i = 0; i < a.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (int j = 0; j < b.size(); ++j)
            best = std::min(best, b.distance_sq_to(j, a.row(i)));
        sup = std::max(sup, best);
    }
    return std::sqrt(sup);
}
}  // namespace

double hausdorff(const Dataset& a, const Dataset& b) {
    if (a.size() == 0 || b.size() == 0)
        throw Error(ErrorKind::EmptySet, "hausdorff distance needs nonempty sets");
    if (a.dim() != b.dim())
        throw Error(ErrorKind::LengthMismatch, "point sets have different dimensions");
    return std::max(directed_sup_min(a, b), directed_sup_min(b, a));
}

double directed_hausdorff(const Dataset& from, const Dataset& to) {
    if (from.size() == 0 || to.size() == 0)
        throw Error(ErrorKind::EmptySet, "directed hausdorff needs nonempty sets");
    if (from.dim() != to.dim())
        throw Error(ErrorKind::LengthMismatch, "point sets have different dimensions");
    return directed_sup_min(from, to);
}

double MatchReport::max_matched_distance() const {
    double m = 0.0;
    for (const auto& entry : matches) m = std::max(m, entry.distance);
    return m;
}

MatchReport match_estimates_to_truth(const std::vector<ModalSetEstimate>& estimates,
                                     const std::vector<Dataset>& truth_sets,
                                     const Dataset& data) {
    const int ne = static_cast<int>(estimates.size());
    const int nt = static_cast<int>(truth_sets.size());
    std::vector<Dataset> est_points;
    est_points.reserve(ne);
    for (const auto& est : estimates) est_points.push_back(extract_points(data, est.members));

    std::vector<MatchEntry> all;
    all.reserve(static_cast<std::size_t>(ne) * nt);
    for (int e = 0; e < ne; ++e)
        for (int t = 0; t < nt; ++t)
            all.push_back({e, t, hausdorff(est_points[e], truth_sets[t])});
    std::sort(all.begin(), all.end(), [](const MatchEntry& x, const MatchEntry& y) {
        if (x.distance != y.distance) return x.distance < y.distance;
        if (x.estimate != y.estimate) return x.estimate < y.estimate;
        return x.truth < y.truth;
    });

    MatchReport report;
    std::vector<char> e_used(ne, 0), t_used(nt, 0);
    for (const auto& entry : all) {
        if (e_used[entry.estimate] || t_used[entry.truth]) continue;
        e_used[entry.estimate] = 1;
        t_used[entry.truth] = 1;
        report.matches.push_back(entry);
    }
    for (int e = 0; e < ne; ++e)
        if (!e_used[e]) report.unmatched_estimates.push_back(e);
    for (int t = 0; t < nt; ++t)
        if (!t_used[t]) report.unmatched_truths.push_back(t);
    return report;
}

}  // namespace mcores
