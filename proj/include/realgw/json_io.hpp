#pragma once

/**
 * @file json_io.hpp
 * @brief JSON forms of rationals, series, invariant vectors, graphs and reports.
 *
 * Rationals are always strings ("p/q" or "p") so that no consumer coerces
 * them to floating point. Objects use nlohmann::json, whose keys are kept
 * in sorted order; serialized output is therefore byte-stable.
 */

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "realgw/errors.hpp"
#include "realgw/localization.hpp"
#include "realgw/multicover.hpp"
#include "realgw/power_series.hpp"
#include "realgw/rational.hpp"
#include "realgw/verifier.hpp"

namespace realgw::io {

using json = nlohmann::json;

inline json to_json(const Rational& r) { return r.to_string(); }

/// Accepts "p/q" strings and JSON integers.
inline Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw DomainError("expected a rational as a \"p/q\" string, got " + j.dump());
}

inline json to_json(const PowerSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(to_json(c));
  return json{{"coefficients", coeffs}, {"order", s.order()}};
}

inline PowerSeries series_from_json(const json& j) {
  detail::require(j.is_object() && j.contains("coefficients") && j.contains("order"),
                  "series: expected {\"coefficients\": [...], \"order\": N}");
  std::vector<Rational> c;
  for (const auto& x : j.at("coefficients")) c.push_back(rational_from_json(x));
  PowerSeries s(std::move(c));
  detail::require(s.order() == j.at("order").get<int>(),
                  "series: coefficient count must be order + 1");
  return s;
}

/// {"0": "p/q", ...} with every genus from 0 to max_genus present.
inline json entries_to_json(const InvariantVector& v) {
  json out = json::object();
  for (int g = 0; g <= v.max_genus; ++g) out[std::to_string(g)] = to_json(v.at(g));
  return out;
}

inline std::map<int, Rational> entries_from_json(const json& j) {
  detail::require(j.is_object(), "expected an object keyed by genus");
  std::map<int, Rational> out;
  for (const auto& [key, value] : j.items()) {
    detail::require(!key.empty() && key.size() <= 6 &&
                        key.find_first_not_of("0123456789") == std::string::npos,
                    "genus key must be a nonnegative integer, got \"" + key + "\"");
    out.emplace(std::stoi(key), rational_from_json(value));
  }
  return out;
}

struct TransformRequest {
  InvariantVector vector;
  TransformConvention convention = TransformConvention::Sinh;
};

/// Reads {"c1B": int, "convention": "sinh"|"sin", <key>: {...}, "max_genus"?: int}.
/// Without max_genus the largest listed genus is used.
inline TransformRequest transform_request_from_json(const json& j, const std::string& key) {
  detail::require(j.is_object(), "request must be a JSON object");
  detail::require(j.contains("c1B") && j.at("c1B").is_number_integer(),
                  "request: \"c1B\" must be an integer");
  detail::require(j.contains(key), "request: missing \"" + key + "\"");
  TransformRequest req;
  req.vector.c1B = j.at("c1B").get<std::int64_t>();
  req.convention = j.contains("convention")
                       ? parse_convention(j.at("convention").get<std::string>())
                       : TransformConvention::Sinh;
  req.vector.entries = entries_from_json(j.at(key));
  if (j.contains("max_genus")) {
    detail::require(j.at("max_genus").is_number_integer(), "request: \"max_genus\" must be an integer");
    req.vector.max_genus = j.at("max_genus").get<int>();
  } else {
    req.vector.max_genus = req.vector.entries.empty() ? 0 : req.vector.entries.rbegin()->first;
  }
  req.vector.validate();
  return req;
}

inline json transform_response(const InvariantVector& gw, TransformConvention conv) {
  return json{{"c1B", gw.c1B},
              {"convention", std::string(to_string(conv))},
              {"gw", entries_to_json(gw)},
              {"max_genus", gw.max_genus}};
}

inline json invert_response(const InvariantVector& e, TransformConvention conv) {
  json violations = json::array();
  for (const auto& [h, v] : integrality_check(e)) {
    violations.push_back(json{{"genus", h}, {"value", to_json(v)}});
  }
  return json{{"E", entries_to_json(e)},
              {"c1B", e.c1B},
              {"convention", std::string(to_string(conv))},
              {"integral", violations.empty()},
              {"max_genus", e.max_genus},
              {"violations", violations}};
}

// --- Graphs ----------------------------------------------------------------

inline json to_json(const DecoratedGraph& g) {
  json vertices = json::array();
  for (const auto& v : g.vertices) {
    json flags = json::array();
    for (const auto& f : v.flags) {
      flags.push_back(json{{"b", f.b}, {"p", f.p}, {"sminus", f.in_s_minus}});
    }
    vertices.push_back(json{{"flags", flags}, {"genus", v.genus}, {"theta", v.theta}});
  }
  json edges = json::array();
  for (const auto& e : g.edges) {
    edges.push_back(json{{"degree", e.degree},
                         {"ends", json::array({e.ends[0], e.ends[1]})},
                         {"kind", e.kind == EdgeKind::Real ? "real" : "conj"}});
  }
  return json{{"a", g.a},
              {"edges", edges},
              {"n", g.n},
              {"phi", g.phi == InvolutionKind::Tau ? "tau" : "eta"},
              {"vertices", vertices}};
}

namespace detail {

inline Int int_field(const json& obj, const char* key) {
  realgw::detail::require(obj.is_object() && obj.contains(key) && obj.at(key).is_number_integer(),
                          std::string("graph: field \"") + key + "\" must be an integer");
  return obj.at(key).get<Int>();
}

}  // namespace detail

inline DecoratedGraph graph_from_json(const json& j) {
  using realgw::detail::require;
  require(j.is_object(), "graph: expected a JSON object");
  DecoratedGraph g;
  g.n = detail::int_field(j, "n");
  require(j.contains("a") && j.at("a").is_array(), "graph: field \"a\" must be an array");
  for (const auto& x : j.at("a")) {
    require(x.is_number_integer(), "graph: entries of \"a\" must be integers");
    g.a.push_back(x.get<Int>());
  }
  require(j.contains("phi") && j.at("phi").is_string(), "graph: field \"phi\" must be a string");
  std::string phi = j.at("phi").get<std::string>();
  require(phi == "tau" || phi == "eta", "graph: \"phi\" must be \"tau\" or \"eta\"");
  g.phi = phi == "tau" ? InvolutionKind::Tau : InvolutionKind::Eta;

  require(j.contains("vertices") && j.at("vertices").is_array(),
          "graph: field \"vertices\" must be an array");
  for (const auto& jv : j.at("vertices")) {
    GraphVertex v;
    v.genus = detail::int_field(jv, "genus");
    v.theta = detail::int_field(jv, "theta");
    if (jv.contains("flags")) {
      require(jv.at("flags").is_array(), "graph: vertex \"flags\" must be an array");
      for (const auto& jf : jv.at("flags")) {
        FlagDecoration f;
        f.b = detail::int_field(jf, "b");
        f.p = detail::int_field(jf, "p");
        require(jf.contains("sminus") && jf.at("sminus").is_boolean(),
                "graph: flag field \"sminus\" must be a boolean");
        f.in_s_minus = jf.at("sminus").get<bool>();
        v.flags.push_back(f);
      }
    }
    g.vertices.push_back(std::move(v));
  }

  require(j.contains("edges") && j.at("edges").is_array(), "graph: field \"edges\" must be an array");
  for (const auto& je : j.at("edges")) {
    GraphEdge e;
    require(je.is_object() && je.contains("kind") && je.at("kind").is_string(),
            "graph: edge field \"kind\" must be a string");
    std::string kind = je.at("kind").get<std::string>();
    require(kind == "real" || kind == "conj", "graph: edge \"kind\" must be \"real\" or \"conj\"");
    e.kind = kind == "real" ? EdgeKind::Real : EdgeKind::ConjugatePair;
    e.degree = detail::int_field(je, "degree");
    require(je.contains("ends") && je.at("ends").is_array() && je.at("ends").size() == 2,
            "graph: edge \"ends\" must be a pair of vertex ids");
    for (std::size_t i = 0; i < 2; ++i) {
      const auto& end = je.at("ends")[i];
      require(end.is_number_integer() && end.get<Int>() >= 0, "graph: vertex ids must be nonnegative");
      e.ends[i] = end.get<std::size_t>();
    }
    g.edges.push_back(e);
  }
  g.validate();
  return g;
}

// --- Reports ---------------------------------------------------------------

inline json to_json(const IdentityReport& r) {
  return json{{"failures", r.failures},
              {"grid_size", r.grid_size},
              {"holds", r.holds()},
              {"identity_id", r.identity_id}};
}

// --- Schemas ---------------------------------------------------------------

inline json graph_schema() {
  return json::parse(R"({
  "$schema": "https://json-schema.org/draft/2020-12/schema",
  "title": "DecoratedGraph",
  "type": "object",
  "required": ["n", "a", "phi", "vertices", "edges"],
  "properties": {
    "n": {"type": "integer", "minimum": 1},
    "a": {"type": "array", "items": {"type": "integer", "minimum": 1}},
    "phi": {"enum": ["tau", "eta"]},
    "vertices": {
      "type": "array", "minItems": 1,
      "items": {
        "type": "object",
        "required": ["genus", "theta"],
        "properties": {
          "genus": {"type": "integer", "minimum": 0},
          "theta": {"type": "integer", "minimum": 1},
          "flags": {
            "type": "array",
            "items": {
              "type": "object",
              "required": ["b", "p", "sminus"],
              "properties": {
                "b": {"type": "integer", "minimum": 0},
                "p": {"type": "integer", "minimum": 0},
                "sminus": {"type": "boolean"}
              }
            }
          }
        }
      }
    },
    "edges": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["kind", "degree", "ends"],
        "properties": {
          "kind": {"enum": ["real", "conj"]},
          "degree": {"type": "integer", "minimum": 1},
          "ends": {"type": "array", "items": {"type": "integer", "minimum": 0},
                   "minItems": 2, "maxItems": 2}
        }
      }
    }
  }
})");
}

inline json invariants_schema() {
  return json::parse(R"({
  "$schema": "https://json-schema.org/draft/2020-12/schema",
  "title": "InvariantVector",
  "type": "object",
  "required": ["c1B"],
  "properties": {
    "c1B": {"type": "integer", "multipleOf": 2},
    "convention": {"enum": ["sinh", "sin"]},
    "max_genus": {"type": "integer", "minimum": 0},
    "gw": {"$ref": "#/$defs/entries"},
    "E": {"$ref": "#/$defs/entries"},
    "integral": {"type": "boolean"},
    "violations": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["genus", "value"],
        "properties": {
          "genus": {"type": "integer", "minimum": 0},
          "value": {"$ref": "#/$defs/rational"}
        }
      }
    }
  },
  "$defs": {
    "rational": {"type": "string", "pattern": "^-?[0-9]+(/[0-9]+)?$"},
    "entries": {
      "type": "object",
      "propertyNames": {"pattern": "^[0-9]+$"},
      "additionalProperties": {"$ref": "#/$defs/rational"}
    }
  }
})");
}

inline json report_schema() {
  return json::parse(R"({
  "$schema": "https://json-schema.org/draft/2020-12/schema",
  "title": "IdentityReport",
  "type": "object",
  "required": ["identity_id", "grid_size", "failures", "holds"],
  "properties": {
    "identity_id": {"type": "string"},
    "grid_size": {"type": "integer", "minimum": 0},
    "holds": {"type": "boolean"},
    "failures": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}}
  }
})");
}

}  // namespace realgw::io
