#pragma once

#include "nfalg/algebra.hpp"
#include "nfalg/errors.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace nfalg {

using Json = nlohmann::ordered_json;

inline Json scalar_to_json(const Scalar& s) { return scalar_to_string(s); }

inline Scalar scalar_from_json(const Json& j) {
    if (j.is_string()) return scalar_from_string(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(j.get<long long>());
    throw Error("expected a rational as \"p/q\" string or integer");
}

inline Json vec_to_json(const Vec& v) {
    Json arr = Json::array();
    for (const auto& s : v) arr.push_back(scalar_to_json(s));
    return arr;
}

inline Vec vec_from_json(const Json& j) {
    Vec v;
    for (const auto& e : j) v.push_back(scalar_from_json(e));
    return v;
}

inline Json mat_to_json(const Mat& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vec_to_json(m.row(i)));
    return rows;
}

// {"dim": n, "labels": [...], "one": [...], "table": [[[p/q strings]]]}
inline Json algebra_to_json(const Algebra& a) {
    Json j;
    if (!a.name().empty()) j["name"] = a.name();
    j["dim"] = a.dim();
    j["labels"] = a.labels();
    j["one"] = vec_to_json(a.one_coords());
    Json table = Json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < a.dim(); ++k) row.push_back(vec_to_json(a.table(i, k)));
        table.push_back(row);
    }
    j["table"] = table;
    return j;
}

inline Algebra algebra_from_json(const Json& j) {
    if (!j.contains("dim") || !j.contains("labels") || !j.contains("one") || !j.contains("table"))
        throw Error("structure-constant object needs dim, labels, one, table");
    std::size_t n = j["dim"].get<std::size_t>();
    std::vector<std::string> labels = j["labels"].get<std::vector<std::string>>();
    if (labels.size() != n) throw Error("label count does not match dim");
    Vec one = vec_from_json(j["one"]);
    std::vector<Vec> table;
    table.reserve(n * n);
    if (j["table"].size() != n) throw Error("table must have dim rows");
    for (const auto& row : j["table"]) {
        if (row.size() != n) throw Error("table rows must have dim entries");
        for (const auto& cell : row) {
            Vec v = vec_from_json(cell);
            if (v.size() != n) throw Error("table cells must be coordinate vectors of length dim");
            table.push_back(std::move(v));
        }
    }
    std::string name = j.contains("name") ? j["name"].get<std::string>() : "";
    return Algebra::create(std::move(labels), std::move(table), std::move(one), std::move(name));
}

}  // namespace nfalg
