#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "glr/error.hpp"
#include "glr/hive.hpp"
#include "glr/horn.hpp"
#include "glr/partitions.hpp"
#include "glr/quiver.hpp"
#include "glr/rational.hpp"
#include "glr/subset_tuple.hpp"
#include "glr/triangular_hive.hpp"

namespace glr::io {

using json = nlohmann::json;

inline json to_json(const IntSequence& s) { return json(s.parts()); }

inline json to_json(const std::vector<IntSequence>& seqs) {
  json out = json::array();
  for (const auto& s : seqs) out.push_back(to_json(s));
  return out;
}

inline json to_json(const Subset& s) { return json(s.elements()); }

inline json to_json(const SubsetTuple& I) {
  json out = json::array();
  for (const auto& s : I.subsets()) out.push_back(to_json(s));
  return out;
}

inline json to_json(const std::vector<SubsetTuple>& tuples) {
  json out = json::array();
  for (const auto& I : tuples) out.push_back(to_json(I));
  return out;
}

// Vertex maps keyed "j,i".
template <class Tag>
json to_json(const VertexFunction<Tag>& v) {
  json out = json::object();
  for (int i = 1; i <= v.m(); ++i)
    for (int j = 1; j <= v.n(); ++j) out[std::to_string(j) + "," + std::to_string(i)] = v(j, i);
  return out;
}

inline json to_json(const SunQuiver& q) {
  json arrows = json::array();
  for (const auto& a : q.arrows()) {
    const auto& t = q.vertex(a.tail);
    const auto& h = q.vertex(a.head);
    arrows.push_back({std::to_string(t.j) + "," + std::to_string(t.i), std::to_string(h.j) + "," + std::to_string(h.i)});
  }
  return {{"n", q.n()}, {"m", q.m()}, {"vertices", q.vertex_count()}, {"arrows", arrows}};
}

inline json to_json(const TriangularHive& h) { return {{"e", h.e}, {"f", h.f}, {"g", h.g}}; }

inline json to_json(const SunHive& h) {
  json arrays = json::array();
  for (const auto& a : h.arrays) arrays.push_back(to_json(a));
  return {{"n", h.n}, {"m", h.m}, {"arrays", arrays}};
}

inline json to_json(const Rational& r) { return to_string(r); }

inline json to_json(const RationalTuple& t) {
  json out = json::array();
  for (const auto& l : t.lambdas()) {
    json row = json::array();
    for (const auto& v : l) row.push_back(to_string(v));
    out.push_back(std::move(row));
  }
  return out;
}

inline json to_json(const LinearSystem& s) {
  json rows = json::array();
  for (const auto& r : s.rows()) rows.push_back({{"a", r.a}, {"b", to_string(r.b)}, {"label", r.label}});
  return {{"variables", s.variables()}, {"rows", rows}};
}

inline json to_json(const SaturationReport& r) { return {{"values", r.values}, {"passed", r.passed}}; }

inline json to_json(const FactorizationReport& r) {
  return {{"tuple", to_json(r.tuple)},
          {"star", to_json(r.star)},
          {"sharp", to_json(r.sharp)},
          {"f", r.f},
          {"f_star", r.f_star},
          {"f_sharp", r.f_sharp},
          {"passed", r.passed}};
}

inline IntSequence int_sequence_from_json(const json& j, const std::string& name) {
  if (!j.is_array()) fail(ErrorKind::InvalidInput, name + " must be an array of integers");
  std::vector<Part> parts;
  for (const auto& v : j) {
    if (!v.is_number_integer()) fail(ErrorKind::InvalidInput, name + " must contain integers only");
    parts.push_back(v.get<Part>());
  }
  return IntSequence(std::move(parts));
}

inline SubsetTuple subset_tuple_from_json(const json& j, int n) {
  if (!j.is_array()) fail(ErrorKind::InvalidInput, "a subset tuple must be an array of arrays");
  std::vector<Subset> subs;
  for (const auto& s : j) {
    if (!s.is_array()) fail(ErrorKind::InvalidInput, "each subset must be an array of integers");
    std::vector<int> elems;
    for (const auto& v : s) {
      if (!v.is_number_integer()) fail(ErrorKind::InvalidInput, "subset entries must be integers");
      elems.push_back(v.get<int>());
    }
    subs.emplace_back(n, std::move(elems));
  }
  return SubsetTuple(n, std::move(subs));
}

}  // namespace glr::io
