#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "lpa/error.hpp"

namespace lpa {

/// Subset of a graph's vertices, indexed by vertex position.
using vertex_set = boost::dynamic_bitset<>;

inline std::vector<std::size_t> members(const vertex_set& s) {
  std::vector<std::size_t> out;
  for (auto i = s.find_first(); i != vertex_set::npos; i = s.find_next(i)) out.push_back(i);
  return out;
}

/// Lexicographic order on the ascending member lists (a proper prefix sorts
/// first, so the empty set is least).
inline bool set_less(const vertex_set& a, const vertex_set& b) {
  const auto ma = members(a), mb = members(b);
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

inline bool is_subset(const vertex_set& a, const vertex_set& b) { return a.is_subset_of(b); }

/// Number of parallel edge slots carried by one edge record; omega stands for
/// infinitely many.
class multiplicity {
 public:
  constexpr multiplicity() = default;

  explicit multiplicity(std::uint64_t n) : n_(n) {
    ensure(n > 0, error_kind::invalid_input, "edge multiplicity must be positive");
  }

  static constexpr multiplicity omega() {
    multiplicity m;
    m.n_ = 0;
    return m;
  }

  constexpr bool is_omega() const noexcept { return n_ == 0; }
  constexpr std::uint64_t count() const noexcept { return n_; }

  std::string to_string() const { return is_omega() ? std::string("ω") : std::to_string(n_); }

  friend constexpr bool operator==(multiplicity, multiplicity) = default;

 private:
  std::uint64_t n_ = 1;
};

/// Running total of edge slots; saturates at omega.
struct slot_count {
  std::uint64_t finite = 0;
  bool infinite = false;

  void add(multiplicity m, std::uint64_t times = 1) {
    if (m.is_omega())
      infinite = true;
    else
      finite += m.count() * times;
  }

  bool is_zero() const noexcept { return !infinite && finite == 0; }
  bool is_one() const noexcept { return !infinite && finite == 1; }
  bool is_finite_nonzero() const noexcept { return !infinite && finite > 0; }
};

struct edge {
  std::string id;
  std::size_t source;
  std::size_t range;
  multiplicity mult;

  friend bool operator==(const edge&, const edge&) = default;
};

enum class vertex_class { sink, regular, infinite_emitter };

inline const char* to_string(vertex_class c) {
  switch (c) {
    case vertex_class::sink: return "sink";
    case vertex_class::regular: return "regular";
    case vertex_class::infinite_emitter: return "infinite_emitter";
  }
  return "?";
}

/// Finite directed multigraph. Vertices are sorted by id and addressed by
/// position; edges are sorted by id. Immutable after construction.
class graph {
 public:
  struct edge_spec {
    std::string id;
    std::string source;
    std::string range;
    multiplicity mult;
  };

  graph(std::vector<std::string> vertices, std::vector<edge_spec> edges) : names_(std::move(vertices)) {
    ensure(!names_.empty(), error_kind::invalid_input, "graph has no vertices");
    std::sort(names_.begin(), names_.end());
    for (std::size_t i = 0; i + 1 < names_.size(); ++i)
      ensure(names_[i] != names_[i + 1], error_kind::invalid_input, "duplicate vertex id '" + names_[i] + "'");
    for (std::size_t i = 0; i < names_.size(); ++i) index_.emplace(names_[i], i);

    std::sort(edges.begin(), edges.end(), [](const edge_spec& a, const edge_spec& b) { return a.id < b.id; });
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto& e = edges[i];
      ensure(!e.id.empty(), error_kind::invalid_input, "edge with empty id");
      ensure(i == 0 || edges[i - 1].id != e.id, error_kind::invalid_input, "duplicate edge id '" + e.id + "'");
      edges_.push_back({e.id, vertex_index(e.source), vertex_index(e.range), e.mult});
      edge_index_.emplace(e.id, i);
    }

    const std::size_t n = names_.size();
    out_.assign(n, {});
    in_.assign(n, {});
    out_slots_.assign(n, {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      out_[edges_[i].source].push_back(i);
      in_[edges_[i].range].push_back(i);
      out_slots_[edges_[i].source].add(edges_[i].mult);
    }

    reach_.assign(n, vertex_set(n));
    for (std::size_t s = 0; s < n; ++s) {
      auto& seen = reach_[s];
      std::deque<std::size_t> queue{s};
      seen.set(s);
      while (!queue.empty()) {
        const auto v = queue.front();
        queue.pop_front();
        for (auto e : out_[v]) {
          const auto w = edges_[e].range;
          if (!seen.test(w)) {
            seen.set(w);
            queue.push_back(w);
          }
        }
      }
    }
  }

  std::size_t vertex_count() const noexcept { return names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<std::string>& vertex_names() const noexcept { return names_; }
  const std::string& vertex_name(std::size_t v) const { return names_.at(v); }

  std::optional<std::size_t> find_vertex(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t vertex_index(const std::string& name) const {
    auto v = find_vertex(name);
    ensure(v.has_value(), error_kind::unknown_vertex, "unknown vertex '" + name + "'");
    return *v;
  }

  const std::vector<edge>& edges() const noexcept { return edges_; }
  const edge& edge_at(std::size_t e) const { return edges_.at(e); }

  std::optional<std::size_t> find_edge(const std::string& id) const {
    auto it = edge_index_.find(id);
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
  }

  const std::vector<std::size_t>& out_edges(std::size_t v) const { return out_.at(v); }
  const std::vector<std::size_t>& in_edges(std::size_t v) const { return in_.at(v); }
  const slot_count& out_slots(std::size_t v) const { return out_slots_.at(v); }

  vertex_class classify(std::size_t v) const {
    const auto& s = out_slots(v);
    if (s.infinite) return vertex_class::infinite_emitter;
    return s.finite == 0 ? vertex_class::sink : vertex_class::regular;
  }

  bool is_regular(std::size_t v) const { return classify(v) == vertex_class::regular; }
  bool is_infinite_emitter(std::size_t v) const { return classify(v) == vertex_class::infinite_emitter; }

  /// Whether a path (possibly of length zero) runs from u to v.
  bool reaches(std::size_t u, std::size_t v) const { return reach_.at(u).test(v); }
  const vertex_set& reachable_from(std::size_t u) const { return reach_.at(u); }

  vertex_set no_vertices() const { return vertex_set(vertex_count()); }
  vertex_set all_vertices() const { return ~no_vertices(); }

  vertex_set make_set(const std::vector<std::string>& ids) const {
    vertex_set s = no_vertices();
    for (const auto& id : ids) s.set(vertex_index(id));
    return s;
  }

  std::vector<std::string> names_of(const vertex_set& s) const {
    std::vector<std::string> out;
    for (auto v : members(s)) out.push_back(names_[v]);
    return out;
  }

  friend bool operator==(const graph& a, const graph& b) { return a.names_ == b.names_ && a.edges_ == b.edges_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, std::size_t> index_;
  std::vector<edge> edges_;
  std::map<std::string, std::size_t> edge_index_;
  std::vector<std::vector<std::size_t>> out_, in_;
  std::vector<slot_count> out_slots_;
  std::vector<vertex_set> reach_;
};

/// A cycle as a sequence of edge records, rotated so that the first edge
/// leaves the smallest vertex on the cycle.
struct cycle {
  std::vector<std::size_t> edges;

  friend bool operator==(const cycle&, const cycle&) = default;
  friend auto operator<=>(const cycle&, const cycle&) = default;
};

inline std::size_t cycle_start(const graph& g, const cycle& c) { return g.edge_at(c.edges.front()).source; }

inline std::vector<std::size_t> cycle_vertices(const graph& g, const cycle& c) {
  std::vector<std::size_t> out;
  for (auto e : c.edges) out.push_back(g.edge_at(e).source);
  return out;
}

inline vertex_set cycle_vertex_set(const graph& g, const cycle& c) {
  vertex_set s = g.no_vertices();
  for (auto e : c.edges) s.set(g.edge_at(e).source);
  return s;
}

/// Validates a closed edge sequence with pairwise distinct sources and
/// returns it rotation-normalized.
inline cycle make_cycle(const graph& g, std::vector<std::size_t> edges) {
  ensure(!edges.empty(), error_kind::invalid_input, "empty cycle");
  for (auto e : edges) ensure(e < g.edge_count(), error_kind::invalid_input, "cycle references a missing edge");
  std::vector<std::size_t> sources;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = g.edge_at(edges[i]);
    const auto& next = g.edge_at(edges[(i + 1) % edges.size()]);
    ensure(e.range == next.source, error_kind::invalid_input, "edge '" + e.id + "' does not continue the cycle");
    sources.push_back(e.source);
  }
  auto sorted = sources;
  std::sort(sorted.begin(), sorted.end());
  ensure(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), error_kind::invalid_input,
         "closed path revisits a vertex, so it is not a cycle");
  const auto pivot = std::min_element(sources.begin(), sources.end()) - sources.begin();
  std::rotate(edges.begin(), edges.begin() + pivot, edges.end());
  return cycle{std::move(edges)};
}

inline std::string describe(const graph& g, const cycle& c) {
  std::string out;
  for (auto e : c.edges) {
    out += g.vertex_name(g.edge_at(e).source) + " -" + g.edge_at(e).id + "-> ";
  }
  return out + g.vertex_name(cycle_start(g, c));
}

}  // namespace lpa
