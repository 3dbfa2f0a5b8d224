#pragma once

#include <fstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "csym/errors.hpp"
#include "csym/int_matrix.hpp"
#include "csym/polytope.hpp"
#include "csym/poset.hpp"

namespace csym {

using Json = nlohmann::json;

// Integers that fit in 64 bits are written as JSON numbers, anything larger
// as a decimal string; both forms are accepted on input.
inline Json int_to_json(const Int& v) {
  if (auto small = to_int64(v)) return *small;
  return v.str();
}

inline Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw RangeError("expected an integer or a decimal string");
}

// --- Poset: {"d": n, "covers": [[a, b], ...]} with a below b. ---

inline Json poset_to_json(const Poset& p) {
  Json j;
  j["d"] = p.d;
  Json covers = Json::array();
  for (auto [a, b] : cover_relations(p)) covers.push_back({a, b});
  j["covers"] = covers;
  return j;
}

inline Poset poset_from_json(const Json& j) {
  if (!j.contains("d") || !j.contains("covers"))
    throw RangeError("poset JSON needs \"d\" and \"covers\"");
  std::vector<std::pair<int, int>> covers;
  for (const auto& c : j.at("covers")) {
    if (!c.is_array() || c.size() != 2)
      throw RangeError("each cover must be a pair [a, b]");
    covers.emplace_back(c[0].get<int>(), c[1].get<int>());
  }
  return from_cover_relations(j.at("d").get<int>(), covers);
}

// --- Matrix: {"rows": r, "cols": c, "entries": [[row], ...]} ---

inline Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows; ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols; ++c) row.push_back(int_to_json(m.at(r, c)));
    rows.push_back(row);
  }
  return Json{{"rows", m.rows}, {"cols", m.cols}, {"entries", rows}};
}

inline IntMatrix matrix_from_json(const Json& j) {
  if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw RangeError("matrix JSON needs \"rows\", \"cols\", \"entries\"");
  IntMatrix m(j.at("rows").get<int>(), j.at("cols").get<int>());
  const auto& entries = j.at("entries");
  if (static_cast<int>(entries.size()) != m.rows)
    throw RangeError("matrix JSON row count mismatch");
  for (int r = 0; r < m.rows; ++r) {
    if (static_cast<int>(entries[r].size()) != m.cols)
      throw RangeError("matrix JSON column count mismatch");
    for (int c = 0; c < m.cols; ++c) m.at(r, c) = int_from_json(entries[r][c]);
  }
  return m;
}

// --- Polytope: {"dim": d, "points": [[...], ...]} ---

inline Json polytope_to_json(const Polytope& p) {
  Json pts = Json::array();
  for (const auto& pt : p.points()) {
    Json row = Json::array();
    for (const auto& x : pt) row.push_back(int_to_json(x));
    pts.push_back(row);
  }
  return Json{{"dim", p.ambient_dim()}, {"points", pts}};
}

inline Polytope polytope_from_json(const Json& j) {
  if (!j.contains("dim") || !j.contains("points"))
    throw RangeError("polytope JSON needs \"dim\" and \"points\"");
  int dim = j.at("dim").get<int>();
  std::vector<std::vector<Int>> pts;
  for (const auto& row : j.at("points")) {
    std::vector<Int> pt;
    for (const auto& x : row) pt.push_back(int_from_json(x));
    pts.push_back(std::move(pt));
  }
  return Polytope(dim, std::move(pts));
}

// --- Ehrhart data: counts and delta as integers, coefficients as "p/q". ---

inline Json ehrhart_to_json(const EhrhartData& e) {
  Json j;
  j["counts"] = Json::array();
  for (const auto& c : e.counts) j["counts"].push_back(int_to_json(c));
  j["delta"] = Json::array();
  for (const auto& d : e.delta) j["delta"].push_back(int_to_json(d));
  j["polynomial"] = Json::array();
  for (const auto& c : e.coefficients)
    j["polynomial"].push_back(rat_to_string(c));
  return j;
}

inline EhrhartData ehrhart_from_json(const Json& j) {
  EhrhartData e;
  for (const auto& c : j.at("counts")) e.counts.push_back(int_from_json(c));
  for (const auto& d : j.at("delta")) e.delta.push_back(int_from_json(d));
  for (const auto& c : j.at("polynomial"))
    e.coefficients.push_back(rat_from_string(c.get<std::string>()));
  return e;
}

using ParsedInput = std::variant<Poset, IntMatrix, Polytope>;

/// Classifies a JSON document by its keys: poset, matrix, or polytope.
inline ParsedInput parse_input_json(const Json& j) {
  if (j.contains("covers")) return poset_from_json(j);
  if (j.contains("entries")) return matrix_from_json(j);
  if (j.contains("points")) return polytope_from_json(j);
  throw RangeError(
      "unrecognized input JSON: expected poset (\"covers\"), matrix "
      "(\"entries\"), or polytope (\"points\")");
}

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw RangeError("cannot open file: " + path);
  Json j;
  in >> j;
  return j;
}

}  // namespace csym
