#include "run_record.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "modalcores/error.hpp"

namespace mcores::cli {

using nlohmann::json;

std::string hash_hex(std::uint64_t h) {
    std::ostringstream out;
    out << std::hex << std::setfill('0') << std::setw(16) << h;
    return out.str();
}

namespace {

json config_json(const RunRecord& r) {
    return json{{"k", r.k},
                {"beta_mode", beta_mode_name(r.beta_mode)},
                {"beta_value", r.beta_value},
                {"delta", r.delta},
                {"eps0", r.eps0},
                {"eps_prune", r.eps_prune},
                {"jitter", r.jitter_sigma},
                {"seed", r.seed}};
}

json dataset_json(const RunRecord& r) {
    return json{{"path", r.data_path}, {"has_header", r.has_header},
                {"label_column", r.label_column}, {"n", r.n},
                {"d", r.d},           {"hash", r.data_hash}};
}

}  // namespace

std::string RunRecord::to_json() const {
    json j;
    j["format"] = "mcores-run/1";
    j["command"] = "fit";
    j["config"] = config_json(*this);
    j["dataset"] = dataset_json(*this);
    j["estimates"] = json{{"count", estimate_sizes.size()},
                          {"sizes", estimate_sizes},
                          {"creation_levels", creation_levels}};
    if (ari && ami) j["scores"] = json{{"ari", *ari}, {"ami", *ami}};
    j["timing_ms"] =
        json{{"index_build", index_build_ms}, {"descent", descent_ms}, {"total", total_ms}};
    return j.dump(2);
}

void RunRecord::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::IoError, "cannot write run record: " + path);
    out << to_json() << "\n";
}

RunRecord RunRecord::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot open run record: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, "bad run record " + path + ": " + e.what());
    }
    try {
        if (j.at("format") != "mcores-run/1")
            throw Error(ErrorKind::ParseError, "unsupported run record format in " + path);
        RunRecord r;
        const json& c = j.at("config");
        r.k = c.at("k").get<int>();
        r.beta_mode = beta_mode_from_name(c.at("beta_mode").get<std::string>());
        r.beta_value = c.at("beta_value").get<double>();
        r.delta = c.at("delta").get<double>();
        r.eps0 = c.at("eps0").get<double>();
        r.eps_prune = c.at("eps_prune").get<double>();
        r.jitter_sigma = c.at("jitter").get<double>();
        r.seed = c.at("seed").get<std::uint64_t>();
        const json& d = j.at("dataset");
        r.data_path = d.at("path").get<std::string>();
        r.has_header = d.at("has_header").get<bool>();
        r.label_column = d.at("label_column").get<int>();
        r.n = d.at("n").get<int>();
        r.d = d.at("d").get<int>();
        r.data_hash = d.at("hash").get<std::string>();
        return r;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, "incomplete run record " + path + ": " + e.what());
    }
}

std::string RunRecord::provenance_comment() const {
    json j;
    j["format"] = "mcores-run/1";
    j["command"] = "fit";
    j["config"] = config_json(*this);
    j["dataset"] = dataset_json(*this);
    return "provenance " + j.dump();
}

}  // namespace mcores::cli
