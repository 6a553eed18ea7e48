#include "hqc/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hqc {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json sparse_entries(const BitMatrix& m) {
    ordered_json out = ordered_json::array();
    for (auto [r, c] : m.entries()) out.push_back({r, c});
    return out;
}

BitMatrix matrix_from_entries(std::size_t rows, std::size_t cols, const ordered_json& j) {
    std::vector<std::pair<std::size_t, std::size_t>> entries;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("artifact: entry is not a [row,col] pair");
        entries.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
    return BitMatrix::from_entries(rows, cols, entries);
}

ordered_json complex_node(const ChainComplex& c, int qubit_level) {
    ordered_json j;
    j["dimension"] = c.dimension;
    j["levels"] = c.level_sizes;
    ordered_json bnds = ordered_json::array();
    for (const BitMatrix& b : c.boundaries) bnds.push_back(sparse_entries(b));
    j["boundaries"] = bnds;
    j["qubit_level"] = qubit_level;
    ordered_json meta;
    meta["family"] = c.family;
    meta["parameters"] = c.params;
    j["meta"] = meta;
    return j;
}

ChainComplex complex_from_node(const ordered_json& j) {
    ChainComplex c;
    c.dimension = j.at("dimension").get<int>();
    c.level_sizes = j.at("levels").get<std::vector<std::size_t>>();
    if (int(c.level_sizes.size()) != c.dimension + 1)
        throw std::invalid_argument("artifact: levels count does not match dimension");
    const ordered_json& bnds = j.at("boundaries");
    if (int(bnds.size()) != c.dimension)
        throw std::invalid_argument("artifact: boundary count does not match dimension");
    for (int i = 1; i <= c.dimension; ++i)
        c.boundaries.push_back(
            matrix_from_entries(c.level_sizes[i - 1], c.level_sizes[i], bnds[i - 1]));
    if (j.contains("meta")) {
        const ordered_json& meta = j.at("meta");
        c.family = meta.value("family", std::string());
        if (meta.contains("parameters"))
            c.params = meta.at("parameters").get<std::map<std::string, std::string>>();
    }
    c.validate();
    return c;
}

}  // namespace

std::string complex_to_json(const ChainComplex& c, int qubit_level) {
    return complex_node(c, qubit_level).dump(2) + "\n";
}

std::string code_to_json(const CssCode& code, const LogicalBasis* logicals) {
    ordered_json j = complex_node(code.complex(), code.qubit_level());
    j["h_x"] = sparse_entries(code.h_x());
    j["h_z"] = sparse_entries(code.h_z());
    if (logicals) {
        auto rows = [](const std::vector<BitVector>& ops) {
            ordered_json out = ordered_json::array();
            for (std::size_t r = 0; r < ops.size(); ++r)
                for (std::size_t c : ops[r].ones()) out.push_back({r, c});
            return out;
        };
        ordered_json lg;
        lg["x"] = rows(logicals->x_ops);
        lg["z"] = rows(logicals->z_ops);
        j["logicals"] = lg;
    }
    return j.dump(2) + "\n";
}

ChainComplex complex_from_json(const std::string& text) {
    return complex_from_node(ordered_json::parse(text));
}

CssCode code_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    ChainComplex c = complex_from_node(j);
    int qubit_level = j.at("qubit_level").get<int>();
    CssCode code = CssCode::from_complex(c, qubit_level);
    if (j.contains("h_x") &&
        matrix_from_entries(code.h_x().rows(), code.n(), j.at("h_x")) != code.h_x())
        throw std::invalid_argument("artifact: h_x does not match the complex");
    if (j.contains("h_z") &&
        matrix_from_entries(code.h_z().rows(), code.n(), j.at("h_z")) != code.h_z())
        throw std::invalid_argument("artifact: h_z does not match the complex");
    return code;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << content;
    if (!f) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace hqc
