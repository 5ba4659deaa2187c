#pragma once

#include <fstream>
#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

#include "lpa/io.hpp"

namespace lpa::test {

inline io::json read_fixture(const std::string& name) {
  std::ifstream in(std::string(LPA_FIXTURE_DIR) + "/" + name + ".json");
  if (!in) throw std::runtime_error("missing fixture " + name);
  return io::json::parse(in);
}

inline ideal::graph_ptr load_graph(const std::string& name) {
  return std::make_shared<const graph>(io::graph_from_json(read_fixture(name)));
}

inline ideal load_ideal(const ideal::graph_ptr& g, const std::string& name,
                        std::optional<field> k = std::nullopt) {
  return io::ideal_from_json(read_fixture(name), g, k);
}

inline graph make_graph(std::vector<std::string> vertices,
                        std::initializer_list<std::tuple<const char*, const char*, const char*, int>> edges) {
  std::vector<graph::edge_spec> specs;
  for (const auto& [id, s, d, m] : edges)
    specs.push_back({id, s, d, m == 0 ? multiplicity::omega() : multiplicity(static_cast<std::uint64_t>(m))});
  return graph(std::move(vertices), std::move(specs));
}

inline vertex_set set_of(const graph& g, std::initializer_list<const char*> names) {
  std::vector<std::string> v(names.begin(), names.end());
  return g.make_set(v);
}

inline cycle cycle_of(const graph& g, std::initializer_list<const char*> edge_ids) {
  std::vector<std::size_t> edges;
  for (auto id : edge_ids) edges.push_back(*g.find_edge(id));
  return make_cycle(g, edges);
}

inline ideal graded(const ideal::graph_ptr& g, const field& k, std::initializer_list<const char*> h,
                    std::initializer_list<const char*> s = {}) {
  return canonicalize(g, k, set_of(*g, h), set_of(*g, s), {});
}

/// I(H, S) + <f(c)> through canonicalize.
inline ideal with_cycle(const ideal::graph_ptr& g, const field& k, std::initializer_list<const char*> h,
                        std::initializer_list<const char*> s, std::initializer_list<const char*> cycle_edges,
                        std::initializer_list<long long> coeffs) {
  return canonicalize(g, k, set_of(*g, h), set_of(*g, s), {raw_part{cycle_of(*g, cycle_edges), poly(k, coeffs)}});
}

inline std::vector<std::vector<std::string>> names(const graph& g, const std::vector<vertex_set>& sets) {
  std::vector<std::vector<std::string>> out;
  for (const auto& s : sets) out.push_back(g.names_of(s));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::string> names(const graph& g, const vertex_set& s) { return g.names_of(s); }

}  // namespace lpa::test
