#include "modalcores/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <random>
#include <sstream>
#include <unordered_map>

namespace mcores {

Dataset::Dataset(std::vector<double> points, int n, int d)
    : points_(std::move(points)), n_(n), d_(d) {
    if (n_ < 1 || d_ < 1)
        throw Error(ErrorKind::EmptyDataset, "dataset must have n >= 1 and d >= 1");
    if (points_.size() != static_cast<std::size_t>(n_) * d_)
        throw Error(ErrorKind::InvalidSpec, "point buffer size does not match n*d");
    for (double v : points_)
        if (!std::isfinite(v))
            throw Error(ErrorKind::ParseError, "dataset contains a non-finite coordinate");
}

double Dataset::distance_sq(int i, int j) const {
    const double* a = row(i);
    const double* b = row(j);
    double s = 0.0;
    for (int t = 0; t < d_; ++t) {
        const double diff = a[t] - b[t];
        s += diff * diff;
    }
    return s;
}

double Dataset::distance_sq_to(int i, const double* q) const {
    const double* a = row(i);
    double s = 0.0;
    for (int t = 0; t < d_; ++t) {
        const double diff = a[t] - q[t];
        s += diff * diff;
    }
    return s;
}

double Dataset::distance(int i, int j) const { return std::sqrt(distance_sq(i, j)); }

std::uint64_t Dataset::fingerprint() const {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t v) {
        for (int b = 0; b < 8; ++b) {
            h ^= (v >> (8 * b)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    mix(static_cast<std::uint64_t>(n_));
    mix(static_cast<std::uint64_t>(d_));
    for (double v : points_) {
        std::uint64_t bits;
        std::memcpy(&bits, &v, sizeof bits);
        mix(bits);
    }
    return h;
}

namespace {

std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(',', start);
        if (pos == std::string::npos) {
            cells.push_back(line.substr(start));
            break;
        }
        cells.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return cells;
}

std::string trimmed(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

bool parse_double(const std::string& cell, double& out) {
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

bool parse_int(const std::string& cell, long& out) {
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

}  // namespace

LoadResult load_csv(const std::string& path, bool has_header,
                    std::optional<int> label_column) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot open file: " + path);

    LoadResult result;
    std::vector<double> points;
    std::vector<int> labels;
    std::unordered_map<std::string, int> label_ids;
    int ncols = -1;
    int nrows = 0;
    bool header_pending = has_header;
    int lineno = 0;

    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trimmed(line);
        if (t.empty() || t[0] == '#') continue;
        if (header_pending) {
            header_pending = false;
            continue;
        }
        std::vector<std::string> cells = split_row(t);
        if (ncols < 0) {
            ncols = static_cast<int>(cells.size());
            if (label_column && (*label_column < 0 || *label_column >= ncols))
                throw Error(ErrorKind::ParseError,
                            "label column " + std::to_string(*label_column) +
                                " out of range for " + std::to_string(ncols) + " columns");
            if (label_column && ncols < 2)
                throw Error(ErrorKind::ParseError, "label column requested but file has one column");
        } else if (static_cast<int>(cells.size()) != ncols) {
            throw Error(ErrorKind::ParseError,
                        "ragged row at line " + std::to_string(lineno) + ": expected " +
                            std::to_string(ncols) + " cells, got " + std::to_string(cells.size()));
        }
        for (int c = 0; c < ncols; ++c) {
            const std::string cell = trimmed(cells[c]);
            if (label_column && c == *label_column) {
                long iv;
                if (parse_int(cell, iv)) {
                    labels.push_back(static_cast<int>(iv));
                } else {
                    auto [it, inserted] =
                        label_ids.emplace(cell, static_cast<int>(label_ids.size()));
                    labels.push_back(it->second);
                }
                continue;
            }
            double v;
            if (!parse_double(cell, v) || !std::isfinite(v))
                throw Error(ErrorKind::ParseError, "non-numeric cell '" + cell + "' at line " +
                                                       std::to_string(lineno));
            points.push_back(v);
        }
        ++nrows;
    }

    if (nrows == 0) throw Error(ErrorKind::EmptyDataset, "no data rows in " + path);
    const int d = ncols - (label_column ? 1 : 0);
    if (d < 1) throw Error(ErrorKind::EmptyDataset, "no feature columns in " + path);

    result.data = Dataset(std::move(points), nrows, d);
    result.labels = std::move(labels);
    result.labeled = label_column.has_value();
    return result;
}

void write_csv(const std::string& path, const Dataset& data, const std::vector<int>& labels,
               const std::vector<std::string>& comment_lines) {
    if (!labels.empty() && static_cast<int>(labels.size()) != data.size())
        throw Error(ErrorKind::LengthMismatch, "labels length does not match dataset size");
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::IoError, "cannot write file: " + path);
    for (const auto& c : comment_lines) out << "# " << c << "\n";
    char buf[32];
    for (int i = 0; i < data.size(); ++i) {
        for (int j = 0; j < data.dim(); ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", data.coord(i, j));
            if (j) out << ',';
            out << buf;
        }
        if (!labels.empty()) out << ',' << labels[i];
        out << "\n";
    }
    if (!out) throw Error(ErrorKind::IoError, "write failed: " + path);
}

ValidationReport validate(const Dataset& data, int k) {
    if (k < 1) throw Error(ErrorKind::InvalidK, "k must be >= 1");
    ValidationReport report;
    report.k = k;
    // r_k(x) == 0 iff at least k sample points share x's exact coordinates
    // (self included), so it suffices to count duplicate rows.
    struct RowKey {
        const Dataset* data;
        int i;
    };
    struct RowHash {
        std::size_t operator()(const RowKey& r) const {
            std::uint64_t h = 1469598103934665603ULL;
            const double* p = r.data->row(r.i);
            for (int j = 0; j < r.data->dim(); ++j) {
                std::uint64_t bits;
                std::memcpy(&bits, &p[j], sizeof bits);
                h ^= bits;
                h *= 1099511628211ULL;
            }
            return static_cast<std::size_t>(h);
        }
    };
    struct RowEq {
        bool operator()(const RowKey& a, const RowKey& b) const {
            return std::memcmp(a.data->row(a.i), b.data->row(b.i),
                               sizeof(double) * a.data->dim()) == 0;
        }
    };
    std::unordered_map<RowKey, std::vector<int>, RowHash, RowEq> groups;
    for (int i = 0; i < data.size(); ++i) groups[RowKey{&data, i}].push_back(i);
    for (auto& [key, members] : groups) {
        if (static_cast<int>(members.size()) >= k)
            report.violations.insert(report.violations.end(), members.begin(), members.end());
    }
    std::sort(report.violations.begin(), report.violations.end());
    return report;
}

Dataset jitter(const Dataset& data, double sigma, std::uint64_t seed) {
    if (sigma < 0) throw Error(ErrorKind::InvalidConfig, "jitter sigma must be >= 0");
    if (sigma == 0) return data;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> noise(-sigma, sigma);
    std::vector<double> pts = data.raw();
    for (double& v : pts) v += noise(rng);
    return Dataset(std::move(pts), data.size(), data.dim());
}

}  // namespace mcores
