#pragma once

// JSON encodings (see docs/schema.md). Coefficients that fit in int64 are
// numbers, larger ones are decimal strings.

#include <limits>
#include <string>

#include <json.hpp>

#include "toruschar/census.hpp"
#include "toruschar/kclass.hpp"
#include "toruschar/knotpoly.hpp"
#include "toruschar/latquot.hpp"
#include "toruschar/oracle.hpp"

namespace toruschar {

using json = nlohmann::json;

inline json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

inline BigInt big_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw InvalidLabel("coefficient must be an integer or a decimal string");
}

template <class Tag>
json poly_to_json(const BasicPoly<Tag>& p) {
  json c = json::array();
  for (const auto& x : p.coeffs()) c.push_back(big_to_json(x));
  return {{"coeffs", c}, {"text", p.str()}};
}

inline KClass kclass_from_json(const json& j) {
  const json& c = j.is_object() ? j.at("coeffs") : j;
  if (!c.is_array()) throw InvalidLabel("KClass JSON needs a \"coeffs\" array");
  std::vector<BigInt> v;
  for (const auto& x : c) v.push_back(big_from_json(x));
  return KClass(std::move(v));
}

inline json label_to_json(const EigenLabel& l) {
  return {{"order", l.order}, {"a_exps", l.a_exps}, {"b_exps", l.b_exps}};
}

inline json descriptor_to_json(const ComponentDescriptor& d) {
  json j = {{"kind", to_string(d.kind.tag)},
            {"variant", to_string(d.kind.variant)},
            {"group", to_string(d.group)},
            {"rank", d.rank},
            {"dimension", d.dimension},
            {"kclass", poly_to_json(d.kclass)},
            {"chart", d.chart}};
  j["eigen_label"] = d.eigen_label ? label_to_json(*d.eigen_label) : json(nullptr);
  return j;
}

inline json label_set_to_json(const LabelSet& ls) {
  json labels = json::array();
  for (const auto& l : ls.labels) labels.push_back(label_to_json(l));
  return {{"r", ls.r}, {"m", ls.m}, {"n", ls.n}, {"count", ls.size()}, {"labels", labels}};
}

inline json curve_to_json(const CurveSpec& c) {
  return {{"m", c.m},
          {"n", c.n},
          {"k", c.k},
          {"c", c.c},
          {"coeffs",
           {{"x2y2", c.c_x2y2}, {"x3_plus_y3", c.c_cubes}, {"xy", c.c_xy}, {"const", c.c_const}}},
          {"component_key", {c.component_key.first, c.component_key.second}},
          {"type2", c.type2}};
}

inline json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(big_to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline json quotient_basis_to_json(const std::vector<long>& weights, long r,
                                   const QuotientBasis& q) {
  return {{"weights", weights},
          {"r", r},
          {"effective_weights", q.weights},
          {"effective_r", q.r},
          {"kernel", q.kernel},
          {"trivial", q.trivial},
          {"matrix", matrix_to_json(q.matrix)},
          {"verified", verify_quotient_basis(q.matrix, q.weights, q.r)}};
}

}  // namespace toruschar
