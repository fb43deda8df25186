#pragma once

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "widthlab/bodies.hpp"
#include "widthlab/distribution.hpp"
#include "widthlab/polytope.hpp"
#include "widthlab/quadrature.hpp"
#include "widthlab/tetra_analytic.hpp"

// File formats. JSON for scalar records, CSV with mandatory headers for
// grids. All floating-point output goes through fmt17 (17 significant
// digits), which round-trips doubles exactly, so repeated runs with equal
// flags are byte-identical.

namespace widthlab {

inline std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

// ---- polytope files -------------------------------------------------------

// {"dimension":3,"vertices":[[x,y,z],...],"edge_norm":1.0}; edge_norm
// optional (default 1).
inline AnyPolytope parse_polytope_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("polytope file: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::runtime_error("polytope file: top level must be an object");
    if (!j.contains("dimension") || !j["dimension"].is_number_integer())
        throw std::runtime_error("polytope file: missing integer field \"dimension\"");
    const int dim = j["dimension"].get<int>();
    if (dim != 2 && dim != 3) throw std::runtime_error("polytope file: dimension must be 2 or 3");
    if (!j.contains("vertices") || !j["vertices"].is_array() || j["vertices"].empty())
        throw std::runtime_error("polytope file: missing nonempty array \"vertices\"");

    double edge_norm = 1.0;
    if (j.contains("edge_norm")) {
        if (!j["edge_norm"].is_number())
            throw std::runtime_error("polytope file: edge_norm must be a number");
        edge_norm = j["edge_norm"].get<double>();
    }

    std::vector<std::vector<double>> rows;
    for (const auto& row : j["vertices"]) {
        if (!row.is_array() || row.size() != static_cast<std::size_t>(dim))
            throw std::runtime_error("polytope file: each vertex needs exactly " +
                                     std::to_string(dim) + " coordinates");
        std::vector<double> v;
        for (const auto& x : row) {
            if (!x.is_number()) throw std::runtime_error("polytope file: coordinates must be numbers");
            v.push_back(x.get<double>());
        }
        rows.push_back(std::move(v));
    }

    try {
        if (dim == 2) {
            std::vector<Vec<2>> vs;
            for (const auto& r : rows) vs.push_back(Vec<2>{{r[0], r[1]}});
            return make_polytope<2>(vs, edge_norm);
        }
        std::vector<Vec<3>> vs;
        for (const auto& r : rows) vs.push_back(Vec<3>{{r[0], r[1], r[2]}});
        return make_polytope<3>(vs, edge_norm);
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("polytope file: ") + e.what());
    }
}

inline AnyPolytope load_polytope(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open polytope file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_polytope_json(buf.str());
}

// ---- JSON records ---------------------------------------------------------

inline std::string to_json(const MomentEstimate& m) {
    std::string s = "{\"value\":" + fmt17(m.value);
    s += ",\"k\":" + std::to_string(m.k);
    s += ",\"method\":\"" + std::string(method_name(m.method)) + "\"";
    s += ",\"error_estimate\":" + fmt17(m.error_estimate);
    s += ",\"evaluations\":" + std::to_string(m.evaluations);
    if (m.seed) s += ",\"seed\":" + std::to_string(*m.seed);
    s += "}";
    return s;
}

inline std::string to_json(const WidthEvaluation& w) {
    return "{\"width\":" + fmt17(w.width) + ",\"raw_width\":" + fmt17(w.raw_width) +
           ",\"achieving_pair\":[" + std::to_string(w.achieving_pair.first) + "," +
           std::to_string(w.achieving_pair.second) + "]}";
}

template <std::size_t N>
inline std::string to_json(const WidthExtremes<N>& e) {
    std::string s = "{\"min_width\":" + fmt17(e.min_width) + ",\"min_direction\":[";
    for (std::size_t d = 0; d < N; ++d) {
        if (d) s += ",";
        s += fmt17(e.min_direction[d]);
    }
    s += "],\"diameter\":" + fmt17(e.diameter) + "}";
    return s;
}

inline std::string to_json(const tetra::SectorReport& r) {
    return "{\"phi_at_0\":" + fmt17(r.phi_at_0) + ",\"phi_at_pi3\":" + fmt17(r.phi_at_pi3) +
           ",\"sector_integral\":" + fmt17(r.sector_integral) +
           ",\"assembled_mean_square\":" + fmt17(r.assembled_mean_square) +
           ",\"reference\":" + fmt17(r.reference) + ",\"difference\":" + fmt17(r.difference()) +
           ",\"symmetry_factor\":" + std::to_string(r.symmetry_factor) + "}";
}

// ---- CSV grids ------------------------------------------------------------

inline void write_histogram_csv(std::ostream& out, const HistogramDensity& h) {
    out << "bin_left,bin_right,mass\n";
    for (std::size_t j = 0; j + 1 < h.bin_edges.size(); ++j) {
        out << fmt17(h.bin_edges[j]) << ',' << fmt17(h.bin_edges[j + 1]) << ','
            << fmt17(h.masses[j]) << '\n';
    }
}

inline void write_ecdf_csv(std::ostream& out, const Ecdf& e) {
    out << "sorted_width,ecdf\n";
    const auto n = static_cast<double>(e.sorted.size());
    for (std::size_t i = 0; i < e.sorted.size(); ++i) {
        out << fmt17(e.sorted[i]) << ',' << fmt17(static_cast<double>(i + 1) / n) << '\n';
    }
}

inline void write_region_map_csv(std::ostream& out, const std::vector<tetra::RegionMapRow>& rows) {
    out << "theta,phi,sqrt_3g_over_8,active_term\n";
    for (const auto& r : rows) {
        out << fmt17(r.theta) << ',' << fmt17(r.phi) << ',' << fmt17(r.sqrt_3g_over_8) << ','
            << r.active << '\n';
    }
}

}  // namespace widthlab
