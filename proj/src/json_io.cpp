// SPDX-License-Identifier: Apache-2.0

#include "maskbench/json_io.hpp"

#include <fstream>
#include <string>

namespace maskbench::io {

namespace {

json matrix_to_json(const ComplexMatrix& m) {
    json re = json::array();
    json im = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row_re = json::array();
        json row_im = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            row_re.push_back(m(r, c).real());
            row_im.push_back(m(r, c).imag());
        }
        re.push_back(std::move(row_re));
        im.push_back(std::move(row_im));
    }
    return json{{"re", std::move(re)}, {"im", std::move(im)}};
}

ComplexMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
    const json& re = j.at("re");
    const json& im = j.at("im");
    if (!re.is_array() || re.size() != rows) throw Error("re: expected " + std::to_string(rows) + " rows");
    if (!im.is_array() || im.size() != rows) throw Error("im: expected " + std::to_string(rows) + " rows");
    ComplexMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (re[r].size() != cols) throw Error("re: row " + std::to_string(r) + " has wrong length");
        if (im[r].size() != cols) throw Error("im: row " + std::to_string(r) + " has wrong length");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = Complex{re[r][c].get<double>(), im[r][c].get<double>()};
    }
    return m;
}

}  // namespace

json to_json(const qcore::DensityMatrix& rho) {
    json j = matrix_to_json(rho.matrix());
    j["dim"] = rho.dim();
    return j;
}

qcore::DensityMatrix density_from_json(const json& j) {
    const auto dim = j.at("dim").get<std::size_t>();
    if (dim == 0 || dim > qcore::kMaxDimension) throw Error("dim: out of range [1, 64]");
    return qcore::DensityMatrix(matrix_from_json(j, dim, dim));
}

json to_json(const qcore::BlochVector& v) { return json{{"x", v.x}, {"y", v.y}, {"z", v.z}}; }

qcore::BlochVector bloch_from_json(const json& j) {
    return qcore::BlochVector(j.at("x").get<double>(), j.at("y").get<double>(),
                              j.at("z").get<double>());
}

json to_json(const maskers::Disk& d) {
    return json{{"alpha", d.alpha}, {"theta", d.theta}, {"c", d.c}};
}

json to_json(const maskers::Masker& m) {
    json label;
    if (const auto* q = std::get_if<maskers::QubitLabel>(&m.label())) {
        label = json{{"family", "qubit"}, {"alpha", q->alpha}, {"theta", q->theta}};
    } else if (const auto* v = std::get_if<maskers::VandermondeLabel>(&m.label())) {
        label = json{{"family", "vandermonde"}, {"dim", v->dim}};
    } else {
        const auto& h = std::get<maskers::HighDimLabel>(m.label());
        label = json{{"family", "highdim"}, {"dim", h.dim}, {"alpha", h.alpha}, {"theta", h.theta}};
    }
    json j = matrix_to_json(m.columns());
    j["label"] = std::move(label);
    j["in_dim"] = m.in_dim();
    j["out_dim"] = m.out_dim();
    return j;
}

maskers::Masker masker_from_json(const json& j) {
    const auto in_dim = j.at("in_dim").get<std::size_t>();
    const auto out_dim = j.at("out_dim").get<std::size_t>();
    if (in_dim == 0 || out_dim == 0 || out_dim > qcore::kMaxDimension)
        throw Error("masker dims out of range");
    const json& label = j.at("label");
    const auto family = label.at("family").get<std::string>();
    maskers::MaskerLabel parsed;
    if (family == "qubit") {
        parsed = maskers::QubitLabel{label.at("alpha").get<double>(), label.at("theta").get<double>()};
    } else if (family == "vandermonde") {
        parsed = maskers::VandermondeLabel{label.at("dim").get<std::size_t>()};
    } else if (family == "highdim") {
        parsed = maskers::HighDimLabel{label.at("dim").get<std::size_t>(),
                                       label.at("alpha").get<std::vector<double>>(),
                                       label.at("theta").get<std::vector<double>>()};
    } else {
        throw Error("label.family: unknown masker family '" + family + "'");
    }
    return maskers::Masker(matrix_from_json(j, out_dim, in_dim), std::move(parsed));
}

json to_json(const photonics::FusionOutcome& outcome) {
    json j;
    j["state"] = to_json(outcome.density());
    if (const auto* pure = std::get_if<qcore::PureState>(&outcome.state)) {
        json re = json::array();
        json im = json::array();
        for (const auto& a : pure->amplitudes()) {
            re.push_back(a.real());
            im.push_back(a.imag());
        }
        j["pure"] = json{{"re", std::move(re)}, {"im", std::move(im)}};
    }
    j["success_probability"] = outcome.success_probability;
    if (outcome.noise_coefficient) j["noise_coefficient"] = *outcome.noise_coefficient;
    return j;
}

json to_json(const experiments::DemoReport& report) {
    json states = json::array();
    for (const auto& s : report.states) {
        states.push_back(json{{"input", to_json(s.input)},
                              {"roundtrip_fidelity", s.roundtrip_fidelity},
                              {"marginal_alice", to_json(s.marginal_alice)},
                              {"marginal_bob", to_json(s.marginal_bob)}});
    }
    json pairwise = json::array();
    for (const auto& p : report.pairwise_marginal_distances)
        pairwise.push_back(json{{"i", p.i}, {"j", p.j}, {"alice", p.alice}, {"bob", p.bob}});
    json bipartite = json::array();
    for (const auto& b : report.bipartite_examples) bipartite.push_back(to_json(b));
    return json{{"masker", {{"alpha", report.masker_alpha}, {"theta", report.masker_theta}}},
                {"disk_offset", report.disk_offset},
                {"states", std::move(states)},
                {"pairwise_marginal_distances", std::move(pairwise)},
                {"max_pairwise_marginal_distance_alice", report.max_pairwise_marginal_distance_alice},
                {"max_pairwise_marginal_distance_bob", report.max_pairwise_marginal_distance_bob},
                {"bipartite_examples", std::move(bipartite)}};
}

json to_json(const experiments::ChannelReport& report) {
    return json{{"t", report.t},
                {"recovered_fidelity", report.recovered_fidelity},
                {"unprotected_fidelity", report.unprotected_fidelity}};
}

json to_json(const std::vector<experiments::SweepRecord>& records) {
    json arr = json::array();
    for (const auto& r : records) {
        json row{{"phi", r.phi},
                 {"shift", r.shift},
                 {"direction",
                  r.direction == experiments::ShiftDirection::Parallel ? "parallel" : "meridian"},
                 {"trace_distance", r.trace_distance}};
        if (r.std_error) row["std_error"] = *r.std_error;
        arr.push_back(std::move(row));
    }
    return arr;
}

qcore::DensityMatrix load_state(const std::filesystem::path& path) {
    const json j = load_json(path);
    if (j.contains("x") && j.contains("y") && j.contains("z"))
        return qcore::bloch_to_density(bloch_from_json(j));
    return density_from_json(j);
}

void save_state(const qcore::DensityMatrix& rho, const std::filesystem::path& path) {
    save_json(to_json(rho), path);
}

void save_json(const json& j, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw Error("cannot open file for writing: " + path.string());
    out << j.dump(2) << '\n';
    if (!out) throw Error("write failed: " + path.string());
}

json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error("malformed JSON in " + path.string() + ": " + e.what());
    }
}

}  // namespace maskbench::io
