#pragma once

#include <algorithm>
#include <iterator>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "glr/error.hpp"
#include "glr/golden_data.hpp"
#include "glr/horn.hpp"
#include "glr/quiver.hpp"

namespace glr {

struct GoldenFacets {
  int n = 0, m = 0;
  std::string equality;
  std::vector<HornInequality> schemas;  // printed order
  std::vector<std::string> texts;
  std::vector<std::pair<int, int>> layout;          // (j, i) of each printed cell
  std::vector<std::vector<std::int64_t>> cells;     // printed cell values
  std::vector<DimensionVector> appendix;            // the cells placed on the quiver
};

inline GoldenFacets parse_golden_facets(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("golden facet data is not valid JSON: ") + e.what());
  }
  if (doc.value("format", "") != "glr-golden-facets" || doc.value("version", 0) != 1)
    fail(ErrorKind::InvalidInput, "unrecognised golden facet format");
  GoldenFacets g;
  g.n = doc.at("n").get<int>();
  g.m = doc.at("m").get<int>();
  g.equality = doc.at("equality").get<std::string>();
  for (const auto& s : doc.at("schemas")) {
    std::vector<Subset> subs;
    for (const auto& I : s.at("I")) subs.emplace_back(g.n, I.get<std::vector<int>>());
    g.schemas.push_back(HornInequality{SubsetTuple(g.n, std::move(subs))});
    g.texts.push_back(s.at("text").get<std::string>());
  }
  for (const auto& cell : doc.at("appendix_layout")) {
    const auto key = cell.get<std::string>();
    const auto comma = key.find(',');
    g.layout.emplace_back(std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1)));
  }
  const SunQuiver q(g.n, g.m / 2);
  for (const auto& row : doc.at("appendix")) {
    auto vals = row.get<std::vector<std::int64_t>>();
    if (vals.size() != g.layout.size()) fail(ErrorKind::InvalidInput, "appendix row does not match its layout");
    DimensionVector b(q);
    for (std::size_t c = 0; c < vals.size(); ++c) b(g.layout[c].first, g.layout[c].second) = vals[c];
    g.cells.push_back(std::move(vals));
    g.appendix.push_back(std::move(b));
  }
  return g;
}

inline const GoldenFacets& facets_2_6_golden() {
  static const GoldenFacets g = parse_golden_facets(kFacets26Json);
  return g;
}

inline std::set<SubsetTuple> golden_closure(const GoldenFacets& g) {
  std::vector<SubsetTuple> reps;
  for (const auto& h : g.schemas) reps.push_back(h.tuple);
  return symmetry_closure(reps);
}

struct GoldenComparison {
  std::size_t derived = 0, golden = 0;
  std::vector<SubsetTuple> missing;  // golden, not derived
  std::vector<SubsetTuple> extra;    // derived, not golden
  bool texts_match = true;           // printed inequalities equal str()
  bool appendix_match = true;        // appendix diagram k is beta_I of schema k
  bool passed() const { return missing.empty() && extra.empty() && texts_match && appendix_match; }
};

inline GoldenComparison compare_with_golden(const std::vector<SubsetTuple>& derived,
                                            const GoldenFacets& g = facets_2_6_golden()) {
  GoldenComparison c;
  const auto closure = golden_closure(g);
  const std::set<SubsetTuple> mine(derived.begin(), derived.end());
  c.derived = mine.size();
  c.golden = closure.size();
  std::set_difference(closure.begin(), closure.end(), mine.begin(), mine.end(), std::back_inserter(c.missing));
  std::set_difference(mine.begin(), mine.end(), closure.begin(), closure.end(), std::back_inserter(c.extra));
  const SunQuiver q(g.n, g.m / 2);
  for (std::size_t k = 0; k < g.schemas.size(); ++k) {
    if (g.schemas[k].str() != g.texts[k]) c.texts_match = false;
    if (k >= g.appendix.size() || beta_from_subsets(g.schemas[k].tuple, q) != g.appendix[k]) c.appendix_match = false;
  }
  if (g.appendix.size() != g.schemas.size()) c.appendix_match = false;
  return c;
}

}  // namespace glr
