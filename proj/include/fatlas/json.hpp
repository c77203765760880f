#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#include "fatlas/coloring.hpp"
#include "fatlas/errors.hpp"
#include "fatlas/lift.hpp"
#include "fatlas/multipartite.hpp"
#include "fatlas/rational.hpp"
#include "fatlas/search.hpp"
#include "fatlas/spectral.hpp"

namespace fatlas {

using Json = nlohmann::ordered_json;

/// Rounds to 12 significant digits so the dumped number is that decimal.
inline double round12(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

inline Json to_json(const Coloring& c) {
  return Json{{"k", c.classes()}, {"assignment", std::vector<int>(c.assignment().begin(), c.assignment().end())}};
}

inline Json to_json(const FatWitness& w) {
  return Json{{"k", w.k}, {"alpha", to_string(w.alpha)}, {"beta", to_string(w.beta)}};
}

inline Json to_json(const Rejection& r) {
  return Json{{"rejected", true}, {"reason", r.reason}, {"vertex", r.vertex}, {"class", r.color_class}};
}

inline Json to_json(const FatVerdict& v) {
  return std::visit([](const auto& x) { return to_json(x); }, v);
}

inline Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return Json{{"n", g.order()}, {"edges", std::move(edges)}};
}

inline Json to_json(const SpectralDecomposition& s) {
  Json values = Json::array();
  for (double x : s.eigenvalues) values.push_back(round12(x));
  Json grouped = Json::array();
  for (const auto& [value, mult] : s.grouped()) grouped.push_back({round12(value), mult});
  return Json{{"tol", s.tol}, {"eigenvalues", std::move(values)}, {"multiplicities_grouped", std::move(grouped)}};
}

/// Elapsed time is deliberately left out so the document is reproducible.
inline Json to_json(const SearchReport& r) {
  return Json{{"chi_fat", r.chi_fat},
              {"witness_coloring", to_json(r.witness_coloring)},
              {"witness", to_json(r.witness)},
              {"partitions_examined", r.partitions_examined}};
}

inline Json to_json(const CatalogEntry& e) { return Json{{"coloring", to_json(e.coloring)}, {"witness", to_json(e.witness)}}; }

inline Json to_json(const ChromaticVerdict& v) {
  return Json{{"chi_fat", v.chi_fat},
              {"case", std::string(to_string(v.kind))},
              {"construction", to_json(v.construction)},
              {"predicted_alpha", to_string(v.predicted_alpha)}};
}

inline Json to_json(const MultipartiteSpectrum& s) {
  Json known = Json::array();
  for (const auto& k : s.known) known.push_back(Json{{"value", to_string(k.value)}, {"multiplicity", k.multiplicity}});
  Json xs = Json::array();
  for (const auto& x : s.x_values) {
    xs.push_back(Json{{"value", round12(x.value)}, {"lower", to_string(x.lower)}, {"upper", to_string(x.upper)}});
  }
  return Json{{"known", std::move(known)},
              {"ones_multiplicity", s.ones_multiplicity},
              {"zero_multiplicity", s.zero_multiplicity},
              {"x_values", std::move(xs)}};
}

inline Json to_json(const LiftResult& r) {
  return Json{{"graph", to_json(r.graph)},
              {"coloring", to_json(r.coloring)},
              {"predicted_alpha", to_string(r.predicted_alpha)},
              {"theorem_tag", std::string(to_string(r.theorem_tag))}};
}

/// Reads {"k": K, "assignment": [...]}; a missing k is inferred from the assignment.
inline Coloring coloring_from_json(const Json& j) {
  try {
    require(j.is_object() && j.contains("assignment"), ErrorCode::ParseError, "coloring JSON needs an 'assignment' array");
    auto assignment = j.at("assignment").get<std::vector<int>>();
    if (j.contains("k")) return Coloring(std::move(assignment), j.at("k").get<int>());
    return Coloring::from_assignment(std::move(assignment));
  } catch (const Json::exception& e) {
    fail(ErrorCode::ParseError, std::string("malformed coloring JSON: ") + e.what());
  }
}

inline Coloring parse_coloring(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    fail(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  return coloring_from_json(j);
}

}  // namespace fatlas
