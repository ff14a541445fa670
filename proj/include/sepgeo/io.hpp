// io.hpp — serialization: the JSON matrix file format shared by all tools,
// SeparabilityReport JSON with stable key order, and the sweep CSV.

#pragma once

#include <cstdio>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sepgeo/measurement.hpp"
#include "sepgeo/separability.hpp"

namespace sepgeo {

using Json = nlohmann::ordered_json;

struct MatrixRecord {
    Matrix matrix;
    std::optional<SubsystemDims> dims;
};

// {"dim": int, "dims": [int,...], "re": [[...]], "im": [[...]]}, row-major;
// "dims" is optional for bare matrices and mandatory for states.
inline Json matrix_to_json(const Matrix& m,
                           const std::optional<SubsystemDims>& dims = std::nullopt) {
    Json doc;
    doc["dim"] = m.rows();
    if (dims) doc["dims"] = dims->dims();
    Json re = Json::array(), im = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json re_row = Json::array(), im_row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            re_row.push_back(m(r, c).real());
            im_row.push_back(m(r, c).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    doc["re"] = std::move(re);
    doc["im"] = std::move(im);
    return doc;
}

inline MatrixRecord matrix_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("re") || !doc.contains("im"))
        throw FileFormatError("matrix JSON must be an object with dim, re, im");
    if (!doc["dim"].is_number_integer())
        throw FileFormatError("matrix JSON: dim must be an integer");
    const long dim = doc["dim"].get<long>();
    if (dim < 1 || dim > kMaxOrder)
        throw FileFormatError("matrix JSON: dim out of supported range");

    auto read_plane = [&](const char* key) {
        const auto& plane = doc[key];
        if (!plane.is_array() || static_cast<long>(plane.size()) != dim)
            throw FileFormatError(std::string("matrix JSON: ") + key + " must be a " +
                                  std::to_string(dim) + "-row array");
        std::vector<std::vector<double>> rows;
        rows.reserve(static_cast<std::size_t>(dim));
        for (const auto& row : plane) {
            if (!row.is_array() || static_cast<long>(row.size()) != dim)
                throw FileFormatError(std::string("matrix JSON: ") + key + " rows must have " +
                                      std::to_string(dim) + " entries");
            std::vector<double> vals;
            vals.reserve(static_cast<std::size_t>(dim));
            for (const auto& v : row) {
                if (!v.is_number())
                    throw FileFormatError(std::string("matrix JSON: ") + key +
                                          " entries must be numbers");
                vals.push_back(v.get<double>());
            }
            rows.push_back(std::move(vals));
        }
        return rows;
    };

    const auto re = read_plane("re");
    const auto im = read_plane("im");
    Matrix m(dim, dim);
    for (long r = 0; r < dim; ++r)
        for (long c = 0; c < dim; ++c)
            m(r, c) = Complex(re[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)],
                              im[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);

    MatrixRecord record{std::move(m), std::nullopt};
    if (doc.contains("dims")) {
        if (!doc["dims"].is_array())
            throw FileFormatError("matrix JSON: dims must be an array of integers");
        std::vector<int> dims;
        for (const auto& d : doc["dims"]) {
            if (!d.is_number_integer())
                throw FileFormatError("matrix JSON: dims must be an array of integers");
            dims.push_back(d.get<int>());
        }
        try {
            record.dims.emplace(dims);
        } catch (const Error& e) {
            throw FileFormatError(std::string("matrix JSON: bad dims: ") + e.what());
        }
        if (record.dims->order() != dim)
            throw FileFormatError("matrix JSON: product of dims does not equal dim");
    }
    return record;
}

inline MatrixRecord load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileFormatError("cannot open matrix file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw FileFormatError("cannot parse matrix file " + path + ": " + e.what());
    }
    return matrix_from_json(doc);
}

inline void save_matrix(const std::string& path, const Matrix& m,
                        const std::optional<SubsystemDims>& dims = std::nullopt) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << matrix_to_json(m, dims).dump() << '\n';
    if (!out) throw IoError("write failed: " + path);
}

// Keys in the documented order; absent oracles serialize as null, the
// warning key appears only when set.
inline Json report_to_json(const SeparabilityReport& report) {
    Json doc;
    doc["threshold_p"] = report.threshold_p;
    doc["q_min"] = report.q_min;
    doc["p_max"] = report.p_max;
    doc["entanglement_e"] = report.entanglement_e;
    doc["measured_party"] = report.measured_party;
    doc["oracle_ppt_verdict"] =
        report.oracle_ppt_verdict ? Json(*report.oracle_ppt_verdict) : Json(nullptr);
    doc["oracle_qmin_sampled"] =
        report.oracle_qmin_sampled ? Json(*report.oracle_qmin_sampled) : Json(nullptr);
    doc["ppt_scope"] = report.ppt_scope;
    if (report.warning) doc["warning"] = *report.warning;
    return doc;
}

inline std::string format_significant(double value, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, value);
    return buf;
}

// Distance of the outcome's reduced state from the normalized identity of
// the unmeasured party; nan when the reduced state is undefined.
inline double outcome_distance_from_center(const MeasurementOutcome& outcome) {
    if (!outcome.reduced_state) return std::numeric_limits<double>::quiet_NaN();
    const Matrix& reduced = outcome.reduced_state->matrix();
    return hs_distance(reduced, maximally_mixed(reduced.rows()));
}

// header `sample_index,probability,distance_from_center`, one row per sample,
// 17 significant digits
inline void write_sweep_csv(std::ostream& out, const std::vector<MeasurementOutcome>& outcomes) {
    out << "sample_index,probability,distance_from_center\n";
    for (std::size_t k = 0; k < outcomes.size(); ++k)
        out << k << ',' << format_significant(outcomes[k].probability, 17) << ','
            << format_significant(outcome_distance_from_center(outcomes[k]), 17) << '\n';
}

} // namespace sepgeo
