#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "lfr/correspondence.hpp"
#include "lfr/crisp.hpp"
#include "lfr/error.hpp"
#include "lfr/fuzzy.hpp"
#include "lfr/lattice.hpp"
#include "lfr/reconstruction.hpp"
#include "lfr/relations.hpp"

namespace lfr::io {

using json = nlohmann::ordered_json;

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

namespace detail {

// Runs a decoder, turning JSON type/shape errors into SchemaError.
template <class F>
auto schema(std::string_view what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::SchemaError, std::string(what) + ": " + e.what());
  }
}

inline const json& field(const json& j, const char* key, std::string_view what) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorCode::SchemaError, std::string(what) + " needs field '" + key + "'");
  }
  return j.at(key);
}

inline std::vector<Elem> values_by_point(const json& j, const DmhAlgebra& alg, const Universe& uni,
                                         std::string_view what) {
  if (!j.is_object() || j.size() != uni.size()) {
    throw Error(ErrorCode::SchemaError, std::string(what) + " must map every point to an element");
  }
  std::vector<Elem> v(uni.size());
  std::vector<bool> seen(uni.size(), false);
  for (const auto& [point, element] : j.items()) {
    std::size_t x = uni.point(point);
    if (seen[x]) throw Error(ErrorCode::SchemaError, std::string(what) + " lists '" + point + "' twice");
    seen[x] = true;
    v[x] = alg.element(element.get<std::string>());
  }
  return v;
}

}  // namespace detail

inline AlgebraPtr algebra_from_json(const json& j) {
  return detail::schema("lattice", [&] {
    auto elements = detail::field(j, "elements", "lattice").get<std::vector<std::string>>();
    OrderPairs leq;
    for (const auto& p : detail::field(j, "leq", "lattice")) {
      if (!p.is_array() || p.size() != 2) throw Error(ErrorCode::SchemaError, "leq entries are [lower, upper] pairs");
      leq.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
    }
    auto inv = detail::field(j, "involution", "lattice").get<std::map<std::string, std::string>>();
    FiniteLattice lat = build_lattice(std::move(elements), leq);
    return std::make_shared<const DmhAlgebra>(attach_involution(std::move(lat), inv));
  });
}

/// Covering pairs only, in declared order.
inline json to_json(const DmhAlgebra& alg) {
  json j;
  j["elements"] = alg.names();
  json leq = json::array();
  for (Elem a : alg.elements()) {
    for (Elem b : alg.elements()) {
      if (a == b || !alg.leq(a, b)) continue;
      bool cover = true;
      for (Elem c : alg.elements()) {
        if (c != a && c != b && alg.leq(a, c) && alg.leq(c, b)) cover = false;
      }
      if (cover) leq.push_back({alg.name(a), alg.name(b)});
    }
  }
  j["leq"] = leq;
  json inv = json::object();
  for (Elem a : alg.elements()) inv[alg.name(a)] = alg.name(alg.neg(a));
  j["involution"] = inv;
  return j;
}

inline UniversePtr universe_from_json(const json& j) {
  return detail::schema("universe", [&] { return Universe::make(j.get<std::vector<std::string>>()); });
}

inline FuzzySet set_from_json(const json& j, const AlgebraPtr& alg, const UniversePtr& uni) {
  return detail::schema("fuzzy set", [&] {
    return FuzzySet(alg, uni, detail::values_by_point(detail::field(j, "values", "fuzzy set"), *alg, *uni, "values"));
  });
}

inline json to_json(const FuzzySet& a) {
  json values = json::object();
  for (std::size_t x = 0; x < a.size(); ++x) values[a.universe().name(x)] = a.algebra().name(a[x]);
  return json{{"values", values}};
}

inline FuzzyRelation relation_from_json(const json& j, const AlgebraPtr& alg) {
  return detail::schema("relation", [&] {
    UniversePtr uni = universe_from_json(detail::field(j, "universe", "relation"));
    const json& m = detail::field(j, "matrix", "relation");
    if (!m.is_array() || m.size() != uni->size()) throw Error(ErrorCode::SchemaError, "matrix needs one row per point");
    std::vector<Elem> v;
    for (const auto& row : m) {
      if (!row.is_array() || row.size() != uni->size()) {
        throw Error(ErrorCode::SchemaError, "matrix rows need one entry per point");
      }
      for (const auto& e : row) v.push_back(alg->element(e.get<std::string>()));
    }
    return FuzzyRelation(alg, uni, std::move(v));
  });
}

inline json to_json(const FuzzyRelation& r) {
  json m = json::array();
  for (std::size_t x = 0; x < r.size(); ++x) {
    json row = json::array();
    for (std::size_t y = 0; y < r.size(); ++y) row.push_back(r.algebra().name(r(x, y)));
    m.push_back(row);
  }
  return json{{"universe", r.universe().points()}, {"matrix", m}};
}

inline CrispRelation crisp_from_json(const json& j) {
  return detail::schema("crisp relation", [&] {
    UniversePtr uni = universe_from_json(detail::field(j, "universe", "crisp relation"));
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : detail::field(j, "edges", "crisp relation")) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::SchemaError, "edges are [from, to] pairs");
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return CrispRelation::from_edges(uni, edges);
  });
}

inline json to_json(const CrispRelation& r) {
  json edges = json::array();
  for (const auto& [a, b] : r.edges()) edges.push_back({a, b});
  return json{{"universe", r.universe_ptr()->points()}, {"edges", edges}};
}

inline json to_json(const CrispSet& s) { return s.members(); }

inline AxiomSpec axiom_from_json(const json& j) {
  return detail::schema("axiom", [&] {
    if (!j.is_object()) throw Error(ErrorCode::SchemaError, "axiom must be an object with 'S' and 'T'");
    for (const auto& [key, _] : j.items()) {
      if (key != "S" && key != "T") throw Error(ErrorCode::SchemaError, "unexpected axiom field '" + key + "'");
    }
    AxiomSpec spec;
    if (j.contains("S")) {
      for (const auto& w : j.at("S")) spec.upper_bounds.push_back(OperatorWord::parse(w.get<std::string>()));
    }
    if (j.contains("T")) {
      for (const auto& w : j.at("T")) spec.lower_bounds.push_back(OperatorWord::parse(w.get<std::string>()));
    }
    return spec;
  });
}

inline json to_json(const AxiomSpec& spec) {
  json s = json::array(), t = json::array();
  for (const auto& w : spec.upper_bounds) s.push_back(w.str());
  for (const auto& w : spec.lower_bounds) t.push_back(w.str());
  return json{{"S", s}, {"T", t}};
}

/// One of
///   {"universe":[..], "singleton_images":{x:{y:el}}}
///   {"universe":[..], "table":[{"input":{..}, "output":{..}}, ...]}
///   {"relation":{"universe":[..], "matrix":[..]}}
inline AbstractOperator operator_from_json(const json& j, const AlgebraPtr& alg) {
  return detail::schema("operator", [&] {
    if (j.is_object() && j.contains("relation")) return operator_from_relation(relation_from_json(j.at("relation"), alg));
    UniversePtr uni = universe_from_json(detail::field(j, "universe", "operator"));
    if (j.contains("singleton_images")) {
      const json& imgs = j.at("singleton_images");
      if (!imgs.is_object() || imgs.size() != uni->size()) {
        throw Error(ErrorCode::SchemaError, "singleton_images needs one entry per point");
      }
      std::vector<std::vector<Elem>> images(uni->size());
      for (const auto& [point, img] : imgs.items()) {
        images[uni->point(point)] = detail::values_by_point(img, *alg, *uni, "singleton image");
      }
      return AbstractOperator::from_singleton_images(alg, uni, std::move(images));
    }
    if (j.contains("table")) {
      const std::uint64_t count = checked_power(alg->size(), uni->size(), AbstractOperator::kMaxTableInputs,
                                                "extensional table");
      std::vector<std::vector<Elem>> outputs(count);
      std::vector<bool> seen(count, false);
      for (const auto& row : j.at("table")) {
        auto in = detail::values_by_point(detail::field(row, "input", "table row"), *alg, *uni, "input");
        auto out = detail::values_by_point(detail::field(row, "output", "table row"), *alg, *uni, "output");
        auto i = lfr::detail::encode_index(in, alg->size());
        if (seen[i]) throw Error(ErrorCode::SchemaError, "table lists an input twice");
        seen[i] = true;
        outputs[i] = std::move(out);
      }
      for (bool s : seen) {
        if (!s) throw Error(ErrorCode::SchemaError, "extensional table must list every fuzzy set");
      }
      return AbstractOperator::from_table(alg, uni, std::move(outputs));
    }
    throw Error(ErrorCode::SchemaError, "operator needs 'singleton_images', 'table' or 'relation'");
  });
}

inline json to_json(const Witness& w, const Universe& uni, const DmhAlgebra& alg) {
  json pts = json::array(), vals = json::array();
  for (auto p : w.points) pts.push_back(uni.name(p));
  for (auto v : w.values) vals.push_back(alg.name(v));
  return json{{"points", pts}, {"values", vals}};
}

inline json to_json(const PropertyReport& r, const Universe& uni, const DmhAlgebra& alg) {
  json j{{"kind", to_string(r.kind)}, {"holds", r.holds}};
  j["witness"] = r.witness ? to_json(*r.witness, uni, alg) : json(nullptr);
  return j;
}

inline json to_json(const LawReport& r) {
  json j{{"law", r.law.str()}, {"holds", r.holds_for_all}};
  if (r.counterexample) {
    j["counterexample"] = json{{"set", to_json(r.counterexample->set)["values"]},
                               {"lhs", to_json(r.counterexample->lhs_value)["values"]},
                               {"rhs", to_json(r.counterexample->rhs_value)["values"]}};
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

inline json to_json(const SweepCounts& c) {
  json j{{"kind", to_string(c.kind)},
         {"relations_checked", c.checked},
         {"agreements", c.agreed},
         {"disagreements", c.disagreed}};
  j["first_disagreement"] = c.first_disagreement ? json(*c.first_disagreement) : json(nullptr);
  return j;
}

}  // namespace lfr::io
