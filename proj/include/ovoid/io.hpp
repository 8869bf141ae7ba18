// JSON and CSV serialization: field descriptors, elements as coefficient
// arrays, matrices, codes, weight distributions, and point-set export.
#pragma once

#include "ovoid/geometry.hpp"
#include "ovoid/predict.hpp"

#include <json.hpp>

#include <sstream>

namespace ovoid {

using json = nlohmann::json;

inline json field_to_json(const Field& f) {
    return json{{"p", f.characteristic()}, {"n", f.degree()}, {"modulus", f.modulus()}};
}

// Fields are deterministic per (p, n); a descriptor carrying any other
// modulus cannot be realized here.
inline FieldPtr field_from_json(const json& j) {
    FieldPtr f = Field::make(j.at("p").get<int>(), j.at("n").get<int>());
    if (j.contains("modulus") && j.at("modulus").get<std::vector<int>>() != f->modulus())
        throw std::invalid_argument("descriptor modulus differs from the deterministic modulus");
    return f;
}

inline json elem_to_json(const Field& f, u32 v) { return json(f.digits(v)); }

inline u32 elem_from_json(const Field& f, const json& j) { return f.from_digits(j.get<std::vector<int>>()); }

inline json mat_to_json(const Mat& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(elem_to_json(*m.field(), m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Mat mat_from_json(FieldPtr f, const json& j) {
    std::vector<std::vector<u32>> rows;
    for (const auto& jr : j) {
        std::vector<u32> row;
        for (const auto& je : jr) row.push_back(elem_from_json(*f, je));
        rows.push_back(std::move(row));
    }
    return Mat::from_rows(std::move(f), rows);
}

inline json code_to_json(const LinearCode& c) {
    return json{{"field", field_to_json(*c.field())}, {"generator", mat_to_json(c.generator())}};
}

inline LinearCode code_from_json(const json& j) {
    FieldPtr f = field_from_json(j.at("field"));
    return LinearCode(f, mat_from_json(f, j.at("generator")));
}

inline json weight_distribution_to_json(const WeightDistribution& wd) {
    json out = json::array();
    for (auto& [w, c] : wd.rows) out.push_back(json::array({w, c}));
    return out;
}

inline json rows_to_json(const std::vector<std::pair<i64, i64>>& rows) {
    json out = json::array();
    for (auto& [w, c] : rows) out.push_back(json::array({w, c}));
    return out;
}

inline json prediction_to_json(const PredictedDistribution& pd) {
    json params(pd.params);
    return json{{"source", pd.source}, {"params", params}, {"base", pd.base},
                {"dimension", pd.dimension}, {"rows", rows_to_json(pd.rows)}};
}

// One normalized point per line, coordinates as coefficient arrays.
inline std::string pointset_to_lines(const PointSet& s) {
    std::ostringstream out;
    for (size_t i = 0; i < s.size(); ++i) {
        json pt = json::array();
        for (int c = 0; c < 4; ++c) pt.push_back(elem_to_json(*s.field(), s[i].x[c]));
        out << pt.dump() << "\n";
    }
    return out.str();
}

inline PointSet pointset_from_lines(FieldPtr f, std::istream& in) {
    std::vector<ProjPoint> pts;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json pt = json::parse(line);
        std::array<u32, 4> coords{};
        for (int c = 0; c < 4; ++c) coords[c] = elem_from_json(*f, pt.at(c));
        pts.push_back(ProjPoint(*f, coords));
    }
    return PointSet(std::move(f), std::move(pts));
}

// CSV with a parameter header block followed by w,count rows.
inline std::string weight_distribution_to_csv(const std::map<std::string, std::string>& params,
                                              const WeightDistribution& wd) {
    std::ostringstream out;
    for (auto& [k, v] : params) out << "# " << k << "," << v << "\n";
    out << "w,count\n";
    for (auto& [w, c] : wd.rows) out << w << "," << c << "\n";
    return out.str();
}

} // namespace ovoid
