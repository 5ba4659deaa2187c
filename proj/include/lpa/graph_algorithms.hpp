#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lpa/graph.hpp"

namespace lpa {

/// Exhaustive scans over vertex subsets refuse graphs larger than this.
inline constexpr std::size_t default_exhaustive_bound = 16;

inline void check_exhaustive_bound(const graph& g, std::size_t bound) {
  ensure(g.vertex_count() <= bound, error_kind::too_large,
         std::to_string(g.vertex_count()) + " vertices exceed the exhaustive bound " + std::to_string(bound));
}

inline void check_set(const graph& g, const vertex_set& s) {
  ensure(s.size() == g.vertex_count(), error_kind::graph_mismatch, "vertex set belongs to a different graph");
}

// ---------------------------------------------------------------------------
// Reachability

inline bool reaches(const graph& g, std::size_t u, std::size_t v) {
  ensure(u < g.vertex_count() && v < g.vertex_count(), error_kind::unknown_vertex, "vertex out of range");
  return g.reaches(u, v);
}

/// M(v): every vertex with a path to v.
inline vertex_set m_of(const graph& g, std::size_t v) {
  ensure(v < g.vertex_count(), error_kind::unknown_vertex, "vertex out of range");
  vertex_set m = g.no_vertices();
  for (std::size_t w = 0; w < g.vertex_count(); ++w)
    if (g.reaches(w, v)) m.set(w);
  return m;
}

/// Everything reachable from some member of s.
inline vertex_set descendants(const graph& g, const vertex_set& s) {
  vertex_set out = s;
  for (auto v : members(s)) out |= g.reachable_from(v);
  return out;
}

// ---------------------------------------------------------------------------
// Hereditary and saturated sets

/// Edge slots from v whose range lies outside h.
inline slot_count slots_leaving(const graph& g, std::size_t v, const vertex_set& h) {
  slot_count c;
  for (auto e : g.out_edges(v))
    if (!h.test(g.edge_at(e).range)) c.add(g.edge_at(e).mult);
  return c;
}

inline bool is_hereditary(const graph& g, const vertex_set& h) { return descendants(g, h) == h; }

inline bool is_saturated(const graph& g, const vertex_set& h) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (!h.test(v) && g.is_regular(v) && slots_leaving(g, v, h).is_zero()) return false;
  return true;
}

inline bool is_hereditary_saturated(const graph& g, const vertex_set& h) {
  return is_hereditary(g, h) && is_saturated(g, h);
}

inline vertex_set hereditary_saturated_closure(const graph& g, const vertex_set& x) {
  check_set(g, x);
  vertex_set h = descendants(g, x);
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (!h.test(v) && g.is_regular(v) && slots_leaving(g, v, h).is_zero()) {
        h.set(v);
        grew = true;
      }
    }
    // Saturation only adds vertices whose ranges are already inside, so the
    // set stays hereditary.
  }
  return h;
}

/// All hereditary saturated subsets, in set_less order.
inline std::vector<vertex_set> enumerate_hereditary_saturated(const graph& g,
                                                              std::size_t bound = default_exhaustive_bound) {
  check_exhaustive_bound(g, bound);
  const std::size_t n = g.vertex_count();
  std::vector<vertex_set> out;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    vertex_set h(n, mask);
    if (is_hereditary_saturated(g, h)) out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(), set_less);
  return out;
}

/// B_H: infinite emitters outside h with finitely many, but at least one,
/// edge slots leaving h.
inline vertex_set breaking_vertices(const graph& g, const vertex_set& h) {
  check_set(g, h);
  ensure(is_hereditary_saturated(g, h), error_kind::not_hereditary_saturated,
         "breaking vertices requested for a set that is not hereditary and saturated");
  vertex_set b = g.no_vertices();
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (!h.test(v) && g.is_infinite_emitter(v) && slots_leaving(g, v, h).is_finite_nonzero()) b.set(v);
  return b;
}

// ---------------------------------------------------------------------------
// Admissible pairs

struct admissible_pair {
  vertex_set hereditary;  // H
  vertex_set selected;    // S, a subset of B_H

  friend bool operator==(const admissible_pair&, const admissible_pair&) = default;
};

inline bool pair_less(const admissible_pair& a, const admissible_pair& b) {
  if (a.hereditary != b.hereditary) return set_less(a.hereditary, b.hereditary);
  return set_less(a.selected, b.selected);
}

inline bool is_admissible(const graph& g, const admissible_pair& p) {
  if (p.hereditary.size() != g.vertex_count() || p.selected.size() != g.vertex_count()) return false;
  if (!is_hereditary_saturated(g, p.hereditary)) return false;
  return p.selected.is_subset_of(breaking_vertices(g, p.hereditary));
}

inline void check_admissible(const graph& g, const admissible_pair& p) {
  check_set(g, p.hereditary);
  check_set(g, p.selected);
  ensure(is_admissible(g, p), error_kind::not_admissible, "(H, S) is not an admissible pair");
}

/// (H1, S1) <= (H2, S2) iff H1 is inside H2 and S1 is inside H2 u S2.
inline bool admissible_leq(const admissible_pair& a, const admissible_pair& b) {
  ensure(a.hereditary.size() == b.hereditary.size(), error_kind::graph_mismatch,
         "admissible pairs from different graphs");
  return a.hereditary.is_subset_of(b.hereditary) && a.selected.is_subset_of(b.hereditary | b.selected);
}

/// Every admissible pair: each hereditary saturated H with each subset of B_H.
inline std::vector<admissible_pair> admissible_pairs(const graph& g, std::size_t bound = default_exhaustive_bound) {
  std::vector<admissible_pair> out;
  for (const auto& h : enumerate_hereditary_saturated(g, bound)) {
    const auto b = members(breaking_vertices(g, h));
    for (unsigned long mask = 0; mask < (1ul << b.size()); ++mask) {
      vertex_set s = g.no_vertices();
      for (std::size_t i = 0; i < b.size(); ++i)
        if (mask & (1ul << i)) s.set(b[i]);
      out.push_back({h, std::move(s)});
    }
  }
  std::sort(out.begin(), out.end(), pair_less);
  return out;
}

// ---------------------------------------------------------------------------
// Quotient graphs

/// E \ (H, S) together with the map back to E. Vertex v' and edge e' are
/// the primed copies attached to breaking vertices outside S.
struct quotient {
  graph result;
  std::vector<std::size_t> vertex_origin;  // quotient vertex -> vertex of E
  std::vector<bool> vertex_primed;
  std::vector<std::size_t> edge_origin;    // quotient edge -> edge of E
  std::vector<bool> edge_primed;
  std::vector<std::optional<std::size_t>> image;  // kept vertex of E -> quotient vertex

  /// Quotient edge carrying an unprimed original edge, if it survives.
  std::optional<std::size_t> edge_image(const graph& g, std::size_t e) const {
    return result.find_edge(g.edge_at(e).id);
  }
};

namespace detail {

inline std::string fresh_name(const std::set<std::string>& taken, std::string base) {
  do base += "'";
  while (taken.count(base));
  return base;
}

}  // namespace detail

inline quotient quotient_graph(const graph& g, const admissible_pair& p) {
  check_admissible(g, p);
  const auto& h = p.hereditary;
  const vertex_set primed = breaking_vertices(g, h) - p.selected;

  std::set<std::string> taken_v(g.vertex_names().begin(), g.vertex_names().end());
  std::set<std::string> taken_e;
  for (const auto& e : g.edges()) taken_e.insert(e.id);

  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::size_t>> prime_names;  // new name -> origin
  std::map<std::size_t, std::string> prime_of;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (!h.test(v)) names.push_back(g.vertex_name(v));
  for (auto v : members(primed)) {
    auto name = detail::fresh_name(taken_v, g.vertex_name(v));
    taken_v.insert(name);
    prime_of[v] = name;
    names.push_back(name);
  }

  std::vector<graph::edge_spec> specs;
  std::map<std::string, std::pair<std::size_t, bool>> edge_src;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edge_at(i);
    if (h.test(e.range)) continue;
    specs.push_back({e.id, g.vertex_name(e.source), g.vertex_name(e.range), e.mult});
    edge_src[e.id] = {i, false};
    if (primed.test(e.range)) {
      auto id = detail::fresh_name(taken_e, e.id);
      taken_e.insert(id);
      specs.push_back({id, g.vertex_name(e.source), prime_of[e.range], e.mult});
      edge_src[id] = {i, true};
    }
  }

  quotient q{graph(names, specs), {}, {}, {}, {}, std::vector<std::optional<std::size_t>>(g.vertex_count())};
  std::map<std::string, std::size_t> origin_by_prime;
  for (const auto& [v, name] : prime_of) origin_by_prime[name] = v;
  for (std::size_t i = 0; i < q.result.vertex_count(); ++i) {
    const auto& name = q.result.vertex_name(i);
    if (auto it = origin_by_prime.find(name); it != origin_by_prime.end()) {
      q.vertex_origin.push_back(it->second);
      q.vertex_primed.push_back(true);
    } else {
      const auto v = g.vertex_index(name);
      q.vertex_origin.push_back(v);
      q.vertex_primed.push_back(false);
      q.image[v] = i;
    }
  }
  for (const auto& e : q.result.edges()) {
    const auto& [origin, is_primed] = edge_src.at(e.id);
    q.edge_origin.push_back(origin);
    q.edge_primed.push_back(is_primed);
  }
  return q;
}

// ---------------------------------------------------------------------------
// Cycles

inline constexpr std::size_t default_cycle_limit = 200000;

/// Every cycle, once per rotation class, in (start vertex, edge sequence)
/// order. Parallel edge records give distinct cycles; the slots of one
/// multi-edge record do not.
inline std::vector<cycle> cycles(const graph& g, std::size_t limit = default_cycle_limit) {
  std::vector<cycle> out;
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> path;
  std::vector<bool> on_path(n, false);

  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t start, std::size_t v) {
    for (auto e : g.out_edges(v)) {
      const auto w = g.edge_at(e).range;
      if (w < start) continue;
      if (w == start) {
        path.push_back(e);
        out.push_back(cycle{path});
        path.pop_back();
        ensure(out.size() <= limit, error_kind::too_large, "cycle enumeration limit exceeded");
      } else if (!on_path[w]) {
        on_path[w] = true;
        path.push_back(e);
        extend(start, w);
        path.pop_back();
        on_path[w] = false;
      }
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    on_path[s] = true;
    extend(s, s);
    on_path[s] = false;
  }
  std::sort(out.begin(), out.end(), [&](const cycle& a, const cycle& b) {
    const auto sa = cycle_start(g, a), sb = cycle_start(g, b);
    return sa != sb ? sa < sb : a.edges < b.edges;
  });
  return out;
}

inline bool on_some_cycle(const graph& g, std::size_t v) {
  for (auto e : g.out_edges(v))
    if (g.reaches(g.edge_at(e).range, v)) return true;
  return false;
}

/// Cycles on which every vertex emits exactly one edge slot.
inline std::vector<cycle> cycles_without_exits(const graph& g) {
  std::vector<cycle> out;
  const std::size_t n = g.vertex_count();
  std::vector<bool> done(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (done[s] || !g.out_slots(s).is_one()) continue;
    std::vector<std::size_t> path;
    std::vector<bool> seen(n, false);
    std::size_t v = s;
    while (!seen[v] && g.out_slots(v).is_one()) {
      seen[v] = true;
      const auto e = g.out_edges(v).front();
      path.push_back(e);
      v = g.edge_at(e).range;
    }
    // The walk closes on v if v was visited; the cycle is the tail from v.
    if (seen[v] && g.out_slots(v).is_one()) {
      auto it = std::find_if(path.begin(), path.end(), [&](std::size_t e) { return g.edge_at(e).source == v; });
      cycle c = make_cycle(g, std::vector<std::size_t>(it, path.end()));
      if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
    }
    for (std::size_t w = 0; w < n; ++w)
      if (seen[w]) done[w] = true;
  }
  std::sort(out.begin(), out.end(),
            [&](const cycle& a, const cycle& b) { return cycle_start(g, a) < cycle_start(g, b); });
  return out;
}

/// Strongly connected component of v.
inline vertex_set component_of(const graph& g, std::size_t v) {
  vertex_set c = g.no_vertices();
  for (std::size_t w = 0; w < g.vertex_count(); ++w)
    if (g.reaches(v, w) && g.reaches(w, v)) c.set(w);
  return c;
}

/// The cycle c is without (K) iff its vertices form a strongly connected
/// component whose internal edges are exactly c's edges, each of
/// multiplicity one.
inline bool is_without_k(const graph& g, const cycle& c) {
  const auto verts = cycle_vertex_set(g, c);
  if (component_of(g, cycle_start(g, c)) != verts) return false;
  std::size_t internal = 0;
  for (auto v : members(verts))
    for (auto e : g.out_edges(v))
      if (verts.test(g.edge_at(e).range)) {
        if (g.edge_at(e).mult != multiplicity(1)) return false;
        ++internal;
      }
  return internal == c.edges.size();
}

inline std::vector<cycle> cycles_without_k(const graph& g) {
  std::vector<cycle> out;
  std::vector<bool> done(g.vertex_count(), false);
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    if (done[s]) continue;
    const auto comp = component_of(g, s);
    for (auto v : members(comp)) done[v] = true;
    // Candidate: each vertex has exactly one internal out-edge record.
    std::vector<std::size_t> path;
    std::size_t v = s;
    bool ok = true;
    for (std::size_t step = 0; step < comp.count() && ok; ++step) {
      std::optional<std::size_t> next;
      for (auto e : g.out_edges(v)) {
        if (!comp.test(g.edge_at(e).range)) continue;
        if (next) ok = false;
        next = e;
      }
      if (!next) ok = false;
      if (!ok) break;
      path.push_back(*next);
      v = g.edge_at(*next).range;
    }
    if (!ok || v != s) continue;
    cycle c = make_cycle(g, path);
    if (is_without_k(g, c)) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [&](const cycle& a, const cycle& b) { return cycle_start(g, a) < cycle_start(g, b); });
  return out;
}

inline bool condition_l(const graph& g) { return cycles_without_exits(g).empty(); }
inline bool condition_k(const graph& g) { return cycles_without_k(g).empty(); }

// ---------------------------------------------------------------------------
// Tails and separation

struct directedness {
  bool holds;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // pair with no common lower bound
};

inline directedness check_downward_directed(const graph& g, const vertex_set& v) {
  check_set(g, v);
  ensure(v.any(), error_kind::empty_set, "downward directedness of the empty set");
  const auto m = members(v);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!(g.reachable_from(m[i]) & g.reachable_from(m[j]) & v).any()) return {false, std::pair{m[i], m[j]}};
  return {true, std::nullopt};
}

inline bool downward_directed(const graph& g, const vertex_set& v) { return check_downward_directed(g, v).holds; }

inline bool is_maximal_tail(const graph& g, const vertex_set& m) {
  check_set(g, m);
  if (m.none()) return false;
  for (auto v : members(m)) {
    for (auto w : members(m_of(g, v)))  // MT1
      if (!m.test(w)) return false;
    if (g.is_regular(v)) {  // MT2
      bool stays = false;
      for (auto e : g.out_edges(v)) stays = stays || m.test(g.edge_at(e).range);
      if (!stays) return false;
    }
  }
  return downward_directed(g, m);  // MT3
}

/// Every maximal tail arises as M(w) for a sink, infinite emitter or cycle
/// vertex w; each candidate is certified before it is returned.
inline std::vector<vertex_set> maximal_tails(const graph& g) {
  std::vector<vertex_set> out;
  for (std::size_t w = 0; w < g.vertex_count(); ++w) {
    if (g.is_regular(w) && !on_some_cycle(g, w)) continue;
    auto m = m_of(g, w);
    if (std::find(out.begin(), out.end(), m) != out.end()) continue;
    ensure(is_maximal_tail(g, m), error_kind::internal, "tail candidate M(" + g.vertex_name(w) + ") failed MT1-MT3");
    out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(), set_less);
  return out;
}

struct strong_csp_result {
  bool holds;
  vertex_set core;                       // H*: intersection of all nonempty hereditary saturated sets
  std::optional<std::size_t> unreached;  // a vertex reaching nothing in H*, when one exists
};

/// Strong CSP on the full vertex set of a finite graph. Each nonempty
/// hereditary saturated set contains the closure of one of its vertices, so
/// H* is the intersection of the single-vertex closures.
inline strong_csp_result strong_csp(const graph& g) {
  vertex_set core = g.all_vertices();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    vertex_set single = g.no_vertices();
    single.set(v);
    core &= hereditary_saturated_closure(g, single);
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (!(g.reachable_from(v) & core).any()) return {false, core, v};
  return {true, core, std::nullopt};
}

}  // namespace lpa
