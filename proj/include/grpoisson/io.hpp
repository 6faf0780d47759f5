#pragma once

// JSON serialization and point-file parsing.
//
// Point file: {"k": K, "n": N, "rows": [["a/b", ...], ...]} with either n rows
// (a Grassmannian point, n x k) or n-k rows (a chart point, (n-k) x k).

#include "chart.hpp"
#include "mpoly.hpp"
#include "perm.hpp"
#include "poisson.hpp"
#include "strata.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>

namespace grpoisson {

using Json = nlohmann::ordered_json;

/// Malformed user input (bad point file, bad literal).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Json to_json(const Rat& r) { return r.str(); }

inline Json to_json(const Perm& w) { return w.one_line(); }

/// Term list in canonical order: [{"exp": [...], "coeff": "a/b"}, ...].
inline Json to_json(const MPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", e}, {"coeff", c.str()}});
  return terms;
}

/// Sparse triples [a, b, poly] with a < b, flat indices.
inline Json to_json(const Bivector& pi) {
  Json out = Json::array();
  for (int a = 0; a < pi.dim(); ++a)
    for (int b = a + 1; b < pi.dim(); ++b)
      if (!pi.upper(a, b).is_zero()) out.push_back(Json::array({a, b, to_json(pi.upper(a, b))}));
  return out;
}

inline Json to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json to_json(const KSubset& s) { return Json(std::vector<int>(s)); }

inline Json matroid_json(const std::set<KSubset>& m) {
  Json out = Json::array();
  for (const auto& s : m) out.push_back(to_json(s));
  return out;
}

inline Json to_json(const StratumCensus& c) {
  Json by_dim = Json::object();
  for (auto [d, cnt] : c.count_by_dim) by_dim[std::to_string(d)] = cnt;
  return {{"labelCount", c.labels.size()}, {"countByDim", by_dim}};
}

inline Json to_json(const Classification& c) {
  Json classes = Json::array();
  for (const auto& m : c.classes)
    classes.push_back({{"matroid", matroid_json(m.matroid)}, {"count", m.count}, {"rank", m.rank}});
  Json strata = Json::array();
  for (const auto& s : c.strata)
    strata.push_back({{"cyclicRank", s.cyclic_rank}, {"count", s.count}, {"rank", s.rank}, {"matroids", s.matroids}});
  return {{"classes", classes}, {"strata", strata}};
}

// ---------------------------------------------------------------------------
// Parsing

using AnyPoint = std::variant<ChartPoint, GrassPoint>;

inline RatMatrix parse_rows(const Json& rows) {
  if (!rows.is_array() || rows.empty()) throw InputError("\"rows\" must be a non-empty array");
  std::vector<std::vector<Rat>> out;
  for (const auto& row : rows) {
    if (!row.is_array()) throw InputError("each row must be an array");
    std::vector<Rat> r;
    for (const auto& x : row) {
      try {
        if (x.is_string())
          r.push_back(Rat::parse(x.get<std::string>()));
        else if (x.is_number_integer())
          r.push_back(Rat(x.get<long>()));
        else
          throw InputError("matrix entries must be rational strings or integers");
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
    }
    out.push_back(std::move(r));
  }
  for (const auto& r : out)
    if (r.size() != out.front().size()) throw InputError("rows have different lengths");
  return RatMatrix::from_rows(out);
}

inline AnyPoint point_from_matrix(const GrassShape& s, RatMatrix m) {
  if (m.cols() != s.k) throw InputError("point must have k = " + std::to_string(s.k) + " columns");
  try {
    if (m.rows() == s.rows() && m.rows() != s.n) return ChartPoint(s, std::move(m));
    if (m.rows() == s.n) return GrassPoint(s, std::move(m));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  throw InputError("point must have n or n-k rows");
}

/// Parses a point object; its k and n, when present, must match `s`.
inline AnyPoint parse_point(const Json& j, const GrassShape& s) {
  if (!j.is_object() || !j.contains("rows")) throw InputError("point must be an object with \"rows\"");
  if (j.contains("k") && j["k"] != s.k) throw InputError("point file k does not match --k");
  if (j.contains("n") && j["n"] != s.n) throw InputError("point file n does not match --n");
  return point_from_matrix(s, parse_rows(j["rows"]));
}

/// Inline literal "(a, b; c, d)": rows separated by ';', entries by ','.
inline AnyPoint parse_point_literal(const std::string& text, const GrassShape& s) {
  std::string body = text;
  if (body.size() < 2 || body.front() != '(' || body.back() != ')') throw InputError("point literal must look like (a,b;c,d)");
  body = body.substr(1, body.size() - 2);
  std::vector<std::vector<Rat>> rows;
  std::stringstream rs(body);
  std::string row;
  auto trim = [](std::string t) {
    const auto b = t.find_first_not_of(" \t");
    const auto e = t.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
  };
  while (std::getline(rs, row, ';')) {
    std::vector<Rat> r;
    std::stringstream es(row);
    std::string ent;
    while (std::getline(es, ent, ',')) {
      try {
        r.push_back(Rat::parse(trim(ent)));
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
    }
    rows.push_back(std::move(r));
  }
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) throw InputError("rows have different lengths");
  return point_from_matrix(s, RatMatrix::from_rows(rows));
}

inline AnyPoint load_point(const std::string& path_or_literal, const GrassShape& s) {
  if (!path_or_literal.empty() && path_or_literal.front() == '(') return parse_point_literal(path_or_literal, s);
  std::ifstream in(path_or_literal);
  if (!in) throw InputError("cannot open point file '" + path_or_literal + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("point file is not valid JSON: ") + e.what());
  }
  return parse_point(j, s);
}

inline Json point_json(const ChartPoint& x) {
  return {{"k", x.shape().k}, {"n", x.shape().n}, {"rows", to_json(x.matrix())}};
}

inline Json point_json(const GrassPoint& g) {
  return {{"k", g.shape().k}, {"n", g.shape().n}, {"rows", to_json(g.matrix())}};
}

} // namespace grpoisson
