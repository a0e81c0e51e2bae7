#include "modalcores/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace mcores {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

constexpr const char* kEstimatesMagic = "mcores-estimates 1";
constexpr const char* kTruthMagic = "mcores-truth 1";

// next content line: skips blanks and '#' comments
bool next_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        if (line[a] == '#') continue;
        if (line.back() == '\r') line.pop_back();
        return true;
    }
    return false;
}

[[noreturn]] void bad_file(const std::string& path, const std::string& what) {
    throw Error(ErrorKind::ParseError, path + ": " + what);
}

}  // namespace

void write_estimates(const std::string& path, const std::vector<ModalSetEstimate>& estimates,
                     const std::vector<std::string>& comment_lines) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::IoError, "cannot write estimates: " + path);
    out << kEstimatesMagic << "\n";
    for (const auto& c : comment_lines) out << "# " << c << "\n";
    out << "count " << estimates.size() << "\n";
    for (const auto& est : estimates) {
        out << "estimate " << est.rank << " level " << format_double(est.creation_level)
            << " founder " << est.founder << " size " << est.members.size() << "\n";
        out << "members";
        for (int m : est.members) out << ' ' << m;
        out << "\n";
    }
    if (!out) throw Error(ErrorKind::IoError, "estimates write failed: " + path);
}

std::vector<ModalSetEstimate> read_estimates(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot open estimates: " + path);
    std::string line;
    if (!next_line(in, line) || line != kEstimatesMagic)
        bad_file(path, "missing estimates header");
    if (!next_line(in, line)) bad_file(path, "missing count");
    std::istringstream cs(line);
    std::string word;
    std::size_t count = 0;
    if (!(cs >> word >> count) || word != "count") bad_file(path, "malformed count line");

    std::vector<ModalSetEstimate> estimates;
    estimates.reserve(count);
    for (std::size_t r = 0; r < count; ++r) {
        if (!next_line(in, line)) bad_file(path, "missing estimate record");
        std::istringstream hs(line);
        std::string kw_est, kw_level, kw_founder, kw_size;
        ModalSetEstimate est;
        std::size_t size = 0;
        if (!(hs >> kw_est >> est.rank >> kw_level >> est.creation_level >> kw_founder >>
              est.founder >> kw_size >> size) ||
            kw_est != "estimate" || kw_level != "level" || kw_founder != "founder" ||
            kw_size != "size")
            bad_file(path, "malformed estimate line: " + line);
        if (!next_line(in, line)) bad_file(path, "missing members line");
        std::istringstream ms(line);
        if (!(ms >> word) || word != "members") bad_file(path, "malformed members line");
        int idx;
        while (ms >> idx) est.members.push_back(idx);
        if (est.members.size() != size) bad_file(path, "member count mismatch");
        estimates.push_back(std::move(est));
    }
    return estimates;
}

void write_labels(const std::string& path, const std::vector<int>& labels,
                  const std::vector<std::string>& comment_lines) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::IoError, "cannot write labels: " + path);
    for (const auto& c : comment_lines) out << "# " << c << "\n";
    for (int v : labels) out << v << "\n";
    if (!out) throw Error(ErrorKind::IoError, "labels write failed: " + path);
}

std::vector<int> read_labels(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot open labels: " + path);
    std::vector<int> labels;
    std::string line;
    while (next_line(in, line)) {
        long v;
        const char* first = line.data();
        const char* last = line.data() + line.size();
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr != last)
            bad_file(path, "non-integer label line: " + line);
        labels.push_back(static_cast<int>(v));
    }
    if (labels.empty()) throw Error(ErrorKind::EmptyDataset, "no labels in " + path);
    return labels;
}

void write_truth(const std::string& path, const std::vector<Dataset>& truth,
                 const std::vector<std::string>& comment_lines) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::IoError, "cannot write truth: " + path);
    out << kTruthMagic << "\n";
    for (const auto& c : comment_lines) out << "# " << c << "\n";
    const int d = truth.empty() ? 0 : truth.front().dim();
    out << "sets " << truth.size() << " dim " << d << "\n";
    for (std::size_t s = 0; s < truth.size(); ++s) {
        out << "set " << s << " size " << truth[s].size() << "\n";
        for (int i = 0; i < truth[s].size(); ++i) {
            for (int j = 0; j < truth[s].dim(); ++j) {
                if (j) out << ',';
                out << format_double(truth[s].coord(i, j));
            }
            out << "\n";
        }
    }
    if (!out) throw Error(ErrorKind::IoError, "truth write failed: " + path);
}

std::vector<Dataset> read_truth(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot open truth: " + path);
    std::string line, word;
    if (!next_line(in, line) || line != kTruthMagic) bad_file(path, "missing truth header");
    if (!next_line(in, line)) bad_file(path, "missing sets line");
    std::istringstream hs(line);
    std::size_t nsets = 0;
    int d = 0;
    std::string kw_dim;
    if (!(hs >> word >> nsets >> kw_dim >> d) || word != "sets" || kw_dim != "dim")
        bad_file(path, "malformed sets line");

    std::vector<Dataset> truth;
    for (std::size_t s = 0; s < nsets; ++s) {
        if (!next_line(in, line)) bad_file(path, "missing set record");
        std::istringstream ss(line);
        std::size_t id = 0, size = 0;
        std::string kw_size;
        if (!(ss >> word >> id >> kw_size >> size) || word != "set" || kw_size != "size")
            bad_file(path, "malformed set line: " + line);
        std::vector<double> pts;
        pts.reserve(size * d);
        for (std::size_t i = 0; i < size; ++i) {
            if (!next_line(in, line)) bad_file(path, "truncated point set");
            std::size_t start = 0;
            for (int j = 0; j < d; ++j) {
                std::size_t comma = line.find(',', start);
                const std::size_t end = comma == std::string::npos ? line.size() : comma;
                double v;
                auto [ptr, ec] = std::from_chars(line.data() + start, line.data() + end, v);
                if (ec != std::errc()) bad_file(path, "bad coordinate: " + line);
                pts.push_back(v);
                start = end + 1;
            }
        }
        truth.emplace_back(std::move(pts), static_cast<int>(size), d);
    }
    return truth;
}

}  // namespace mcores
