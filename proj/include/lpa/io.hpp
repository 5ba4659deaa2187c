#pragma once

#include <cstdint>
#include <cstdio>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lpa/classifier.hpp"
#include "lpa/ideal.hpp"

namespace lpa::io {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Scalars and polynomials

/// Integral values become JSON numbers when they fit in 64 bits; anything
/// else is the string "a/b" (or "a").
inline json scalar_to_json(const rational& c) {
  if (boost::multiprecision::denominator(c) == 1) {
    const integer n = boost::multiprecision::numerator(c);
    if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
      return n.convert_to<std::int64_t>();
    return n.str();
  }
  return boost::multiprecision::numerator(c).str() + "/" + boost::multiprecision::denominator(c).str();
}

inline rational scalar_from_json(const json& j) {
  if (j.is_number_integer()) return rational(j.get<std::int64_t>());
  ensure(j.is_string(), error_kind::invalid_input, "coefficient must be an integer or an \"a/b\" string");
  const auto text = j.get<std::string>();
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return rational(integer(text));
    const integer den(text.substr(slash + 1));
    ensure(den != 0, error_kind::invalid_input, "zero denominator in '" + text + "'");
    return rational(integer(text.substr(0, slash)), den);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const error*>(&e)) throw;
    fail(error_kind::invalid_input, "malformed coefficient '" + text + "'");
  }
}

inline json poly_to_json(const poly& f) {
  json out = json::array();
  for (const auto& c : f.coeffs()) out.push_back(scalar_to_json(c));
  return out;
}

inline poly poly_from_json(const json& j, const field& k) {
  ensure(j.is_array(), error_kind::invalid_input, "polynomial must be a coefficient array");
  std::vector<rational> c;
  for (const auto& x : j) c.push_back(scalar_from_json(x));
  return poly(k, std::move(c));
}

// ---------------------------------------------------------------------------
// Graphs

inline json multiplicity_to_json(multiplicity m) {
  if (m.is_omega()) return "inf";
  return m.count();
}

inline multiplicity multiplicity_from_json(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    ensure(s == "inf" || s == "ω", error_kind::invalid_input, "multiplicity string must be \"inf\"");
    return multiplicity::omega();
  }
  ensure(j.is_number_integer() && j.get<std::int64_t>() >= 1, error_kind::invalid_input,
         "multiplicity must be a positive integer or \"inf\"");
  return multiplicity(j.get<std::uint64_t>());
}

inline std::string string_field(const json& j, const char* key) {
  ensure(j.contains(key) && j.at(key).is_string(), error_kind::invalid_input,
         std::string("missing string field '") + key + "'");
  return j.at(key).get<std::string>();
}

inline graph graph_from_json(const json& j) {
  ensure(j.is_object(), error_kind::invalid_input, "graph must be a JSON object");
  ensure(j.contains("vertices") && j.at("vertices").is_array(), error_kind::invalid_input,
         "graph needs a 'vertices' array");
  std::vector<std::string> vertices;
  for (const auto& v : j.at("vertices")) {
    ensure(v.is_string(), error_kind::invalid_input, "vertex ids must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<graph::edge_spec> edges;
  if (j.contains("edges")) {
    ensure(j.at("edges").is_array(), error_kind::invalid_input, "'edges' must be an array");
    for (const auto& e : j.at("edges")) {
      ensure(e.is_object(), error_kind::invalid_input, "edge must be an object");
      auto m = e.contains("mult") ? multiplicity_from_json(e.at("mult")) : multiplicity(1);
      edges.push_back({string_field(e, "id"), string_field(e, "src"), string_field(e, "dst"), m});
    }
  }
  return graph(std::move(vertices), std::move(edges));
}

inline json graph_to_json(const graph& g) {
  json edges = json::array();
  for (const auto& e : g.edges())
    edges.push_back({{"id", e.id},
                     {"src", g.vertex_name(e.source)},
                     {"dst", g.vertex_name(e.range)},
                     {"mult", multiplicity_to_json(e.mult)}});
  return {{"vertices", g.vertex_names()}, {"edges", edges}};
}

inline json set_to_json(const graph& g, const vertex_set& s) { return g.names_of(s); }

inline vertex_set set_from_json(const graph& g, const json& j, const char* what) {
  ensure(j.is_array(), error_kind::invalid_input, std::string("'") + what + "' must be an array of vertex ids");
  vertex_set s = g.no_vertices();
  for (const auto& v : j) {
    ensure(v.is_string(), error_kind::invalid_input, "vertex ids must be strings");
    s.set(g.vertex_index(v.get<std::string>()));
  }
  return s;
}

inline json pair_to_json(const graph& g, const admissible_pair& p) {
  return {{"H", set_to_json(g, p.hereditary)}, {"S", set_to_json(g, p.selected)}};
}

/// Alternating vertex and edge ids: v, e1, w, e2 for v -e1-> w -e2-> v.
inline json cycle_to_json(const graph& g, const cycle& c) {
  json out = json::array();
  for (auto e : c.edges) {
    out.push_back(g.vertex_name(g.edge_at(e).source));
    out.push_back(g.edge_at(e).id);
  }
  return out;
}

inline cycle cycle_from_json(const graph& g, const json& j) {
  ensure(j.is_array() && !j.empty() && j.size() % 2 == 0, error_kind::invalid_input,
         "cycle must alternate vertex and edge ids");
  std::vector<std::size_t> edges;
  for (std::size_t i = 0; i < j.size(); i += 2) {
    ensure(j[i].is_string() && j[i + 1].is_string(), error_kind::invalid_input, "cycle entries must be strings");
    const auto v = g.vertex_index(j[i].get<std::string>());
    const auto id = j[i + 1].get<std::string>();
    const auto e = g.find_edge(id);
    ensure(e.has_value(), error_kind::invalid_input, "unknown edge '" + id + "'");
    ensure(g.edge_at(*e).source == v, error_kind::invalid_input,
           "edge '" + id + "' does not leave '" + g.vertex_name(v) + "'");
    edges.push_back(*e);
  }
  return make_cycle(g, std::move(edges));
}

// ---------------------------------------------------------------------------
// Ideals

/// Parses and canonicalizes an ideal. The ideal's own "field" (default Q)
/// must agree with the command-line field when both are given.
inline ideal ideal_from_json(const json& j, const ideal::graph_ptr& gp, const std::optional<field>& override_field) {
  ensure(j.is_object(), error_kind::invalid_input, "ideal must be a JSON object");
  const graph& g = *gp;
  std::optional<field> own;
  if (j.contains("field")) {
    ensure(j.at("field").is_string(), error_kind::invalid_input, "'field' must be a string");
    own = field::parse(j.at("field").get<std::string>());
  }
  if (own && override_field)
    ensure(*own == *override_field, error_kind::field_mismatch,
           "ideal is over " + own->name() + " but the command asks for " + override_field->name());
  const field k = own ? *own : override_field ? *override_field : field::rationals();
  const vertex_set h = j.contains("H") ? set_from_json(g, j.at("H"), "H") : g.no_vertices();
  const vertex_set s = j.contains("S") ? set_from_json(g, j.at("S"), "S") : g.no_vertices();
  std::vector<raw_part> parts;
  if (j.contains("parts")) {
    ensure(j.at("parts").is_array(), error_kind::invalid_input, "'parts' must be an array");
    for (const auto& p : j.at("parts")) {
      ensure(p.is_object() && p.contains("cycle") && p.contains("poly"), error_kind::invalid_input,
             "each part needs 'cycle' and 'poly'");
      parts.push_back({cycle_from_json(g, p.at("cycle")), poly_from_json(p.at("poly"), k)});
    }
  }
  return canonicalize(gp, k, h, s, parts);
}

inline json ideal_to_json(const ideal& i) {
  const auto& g = i.ambient();
  json parts = json::array();
  for (const auto& p : i.parts()) parts.push_back({{"cycle", cycle_to_json(g, p.c)}, {"poly", poly_to_json(p.f.rep())}});
  return {{"H", set_to_json(g, i.hereditary())},
          {"S", set_to_json(g, i.selected())},
          {"parts", parts},
          {"field", i.base_field().name()}};
}

/// FNV-1a, 64-bit.
inline std::uint64_t fnv1a64(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

/// Hash of the canonical JSON text of an ideal.
inline std::string canonical_checksum(const ideal& i) { return hex64(fnv1a64(ideal_to_json(i).dump())); }

inline json report_to_json(const factorization_report& r, combine_mode combine) {
  json factors = json::array();
  for (const auto& f : r.factors)
    factors.push_back({{"prime", ideal_to_json(f.prime)},
                       {"exponent", f.exponent},
                       {"graded", f.prime.is_graded()},
                       {"power", ideal_to_json(prime_to_power(f.prime, f.exponent))}});
  const ideal recomposed = combine == combine_mode::product ? multiply(r.expanded()) : intersect(r.powers());
  return {{"mode", to_string(r.mode)},
          {"combine", to_string(combine)},
          {"irredundant", r.irredundant},
          {"factors", factors},
          {"recomposed", ideal_to_json(recomposed)},
          {"checksum", canonical_checksum(recomposed)}};
}

inline json verdict_to_json(const graph& g, const algebra_verdict& v) {
  json out = {{"predicate", v.predicate}, {"verdict", v.verdict}, {"witness", nullptr}};
  if (v.verdict) return out;
  json w = {{"reason", v.reason}};
  if (v.witness_cycle) w["cycle"] = cycle_to_json(g, *v.witness_cycle);
  if (v.witness_pairs)
    w["incomparable_pairs"] = json::array({pair_to_json(g, v.witness_pairs->first), pair_to_json(g, v.witness_pairs->second)});
  if (v.witness_pair) w["pair"] = pair_to_json(g, *v.witness_pair);
  if (!v.witness_tail.empty()) w["tail"] = v.witness_tail;
  if (!v.witness_vertices.empty()) w["vertices"] = v.witness_vertices;
  out["witness"] = w;
  return out;
}

// ---------------------------------------------------------------------------
// DOT

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

/// Vertices as nodes, edges labelled by id; multiplicities other than 1 are
/// appended, with omega shown as ω. Primed quotient vertices keep their '
/// suffix and are drawn dashed.
inline std::string to_dot(const graph& g, const std::string& name = "E", const std::vector<bool>& primed = {}) {
  std::ostringstream out;
  out << "digraph " << dot_quote(name) << " {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    out << "  " << dot_quote(g.vertex_name(v));
    if (v < primed.size() && primed[v]) out << " [style=dashed]";
    out << ";\n";
  }
  for (const auto& e : g.edges()) {
    std::string label = e.id;
    if (e.mult.is_omega())
      label += " ω";
    else if (e.mult.count() != 1)
      label += " ×" + std::to_string(e.mult.count());
    out << "  " << dot_quote(g.vertex_name(e.source)) << " -> " << dot_quote(g.vertex_name(e.range))
        << " [label=" << dot_quote(label) << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace lpa::io
