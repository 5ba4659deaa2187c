#pragma once

// Definition-literal brute force and seeded generators. Nothing here calls
// the fast paths in graph_algorithms.hpp or ideal.hpp except the generators,
// which draw their raw material (graded primes, exit-free cycles) from the
// library and then certify it with the oracles below.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "lpa/ideal.hpp"

namespace lpa::oracle {

inline constexpr std::size_t vertex_bound = 16;

/// Reachability by Floyd-Warshall over the edge list; row u, column v.
inline std::vector<std::vector<bool>> reachability(const graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t v = 0; v < n; ++v) r[v][v] = true;
  for (const auto& e : g.edges()) r[e.source][e.range] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = true;
  return r;
}

inline void check_bound(const graph& g) {
  ensure(g.vertex_count() <= vertex_bound, error_kind::too_large, "oracle scans are limited to 16 vertices");
}

inline std::vector<vertex_set> all_subsets(const graph& g) {
  check_bound(g);
  std::vector<vertex_set> out;
  for (unsigned long mask = 0; mask < (1ul << g.vertex_count()); ++mask) out.emplace_back(g.vertex_count(), mask);
  return out;
}

struct edge_totals {
  std::uint64_t finite = 0;
  bool infinite = false;
};

/// Total multiplicity of edges from v whose range satisfies pred.
template <class Pred>
edge_totals count_edges(const graph& g, std::size_t v, Pred pred) {
  edge_totals t;
  for (const auto& e : g.edges()) {
    if (e.source != v || !pred(e.range)) continue;
    if (e.mult.is_omega())
      t.infinite = true;
    else
      t.finite += e.mult.count();
  }
  return t;
}

inline bool hereditary(const graph& g, const std::vector<std::vector<bool>>& reach, const vertex_set& h) {
  for (std::size_t u = 0; u < g.vertex_count(); ++u)
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
      if (h.test(u) && reach[u][v] && !h.test(v)) return false;
  return true;
}

inline bool saturated(const graph& g, const vertex_set& h) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (h.test(v)) continue;
    const auto all = count_edges(g, v, [](std::size_t) { return true; });
    const bool regular = !all.infinite && all.finite > 0;
    if (!regular) continue;
    const auto outside = count_edges(g, v, [&](std::size_t w) { return !h.test(w); });
    if (outside.finite == 0) return false;
  }
  return true;
}

/// Intersection of every hereditary saturated superset of x.
inline vertex_set closure(const graph& g, const vertex_set& x) {
  const auto reach = reachability(g);
  vertex_set out = ~vertex_set(g.vertex_count());
  for (const auto& h : all_subsets(g))
    if (x.is_subset_of(h) && hereditary(g, reach, h) && saturated(g, h)) out &= h;
  return out;
}

inline std::vector<vertex_set> hereditary_saturated_sets(const graph& g) {
  const auto reach = reachability(g);
  std::vector<vertex_set> out;
  for (const auto& h : all_subsets(g))
    if (hereditary(g, reach, h) && saturated(g, h)) out.push_back(h);
  return out;
}

inline vertex_set breaking(const graph& g, const vertex_set& h) {
  vertex_set b(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (h.test(v)) continue;
    const auto all = count_edges(g, v, [](std::size_t) { return true; });
    if (!all.infinite) continue;
    const auto outside = count_edges(g, v, [&](std::size_t w) { return !h.test(w); });
    if (!outside.infinite && outside.finite > 0) b.set(v);
  }
  return b;
}

/// Every (H, S) with H hereditary saturated and S inside B_H, found by
/// scanning all pairs of subsets.
inline std::vector<admissible_pair> enumerate_admissible_pairs(const graph& g) {
  std::vector<admissible_pair> out;
  const auto subsets = all_subsets(g);
  for (const auto& h : hereditary_saturated_sets(g)) {
    const auto b = breaking(g, h);
    for (const auto& s : subsets)
      if (s.is_subset_of(b)) out.push_back({h, s});
  }
  return out;
}

inline bool leq(const admissible_pair& a, const admissible_pair& b) {
  for (std::size_t v = 0; v < a.hereditary.size(); ++v) {
    if (a.hereditary.test(v) && !b.hereditary.test(v)) return false;
    if (a.selected.test(v) && !b.hereditary.test(v) && !b.selected.test(v)) return false;
  }
  return true;
}

/// Greatest lower bound within the enumerated pairs.
inline admissible_pair glb(const std::vector<admissible_pair>& pairs, const admissible_pair& a,
                           const admissible_pair& b) {
  std::vector<admissible_pair> lower;
  for (const auto& p : pairs)
    if (leq(p, a) && leq(p, b)) lower.push_back(p);
  std::vector<admissible_pair> best;
  for (const auto& p : lower)
    if (std::all_of(lower.begin(), lower.end(), [&](const admissible_pair& q) { return leq(q, p); }))
      best.push_back(p);
  ensure(best.size() == 1, error_kind::not_a_lattice, "pairs have no unique greatest lower bound");
  return best.front();
}

/// Least upper bound within the enumerated pairs.
inline admissible_pair lub(const std::vector<admissible_pair>& pairs, const admissible_pair& a,
                           const admissible_pair& b) {
  std::vector<admissible_pair> upper;
  for (const auto& p : pairs)
    if (leq(a, p) && leq(b, p)) upper.push_back(p);
  std::vector<admissible_pair> best;
  for (const auto& p : upper)
    if (std::all_of(upper.begin(), upper.end(), [&](const admissible_pair& q) { return leq(p, q); }))
      best.push_back(p);
  ensure(best.size() == 1, error_kind::not_a_lattice, "pairs have no unique least upper bound");
  return best.front();
}

/// Every nonempty subset satisfying MT1, MT2 and MT3.
inline std::vector<vertex_set> maximal_tails_bruteforce(const graph& g) {
  const auto reach = reachability(g);
  const std::size_t n = g.vertex_count();
  std::vector<vertex_set> out;
  for (const auto& m : all_subsets(g)) {
    if (m.none()) continue;
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v) {
      if (!m.test(v)) continue;
      for (std::size_t w = 0; w < n && ok; ++w)
        if (reach[w][v] && !m.test(w)) ok = false;  // MT1
      const auto all = count_edges(g, v, [](std::size_t) { return true; });
      if (ok && !all.infinite && all.finite > 0) {  // MT2
        const auto inside = count_edges(g, v, [&](std::size_t w) { return m.test(w); });
        if (inside.finite == 0) ok = false;
      }
    }
    for (std::size_t u = 0; u < n && ok; ++u)  // MT3
      for (std::size_t v = 0; v < n && ok; ++v) {
        if (!m.test(u) || !m.test(v)) continue;
        bool common = false;
        for (std::size_t w = 0; w < n && !common; ++w) common = m.test(w) && reach[u][w] && reach[v][w];
        if (!common) ok = false;
      }
    if (ok) out.push_back(m);
  }
  return out;
}

/// Irreducibility over GF(p) by trial division with every monic polynomial
/// of degree at most deg(f)/2.
inline bool irreducible_bruteforce(const poly& f) {
  const field& k = f.base_field();
  ensure(k.is_prime_field(), error_kind::invalid_input, "brute-force irreducibility needs a prime field");
  if (f.degree() < 1) return false;
  const auto p = k.characteristic();
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(d), 0);
    while (true) {
      std::vector<rational> coeffs(c.begin(), c.end());
      coeffs.emplace_back(1);
      if (divides(poly(k, coeffs), f)) return false;
      std::size_t i = 0;
      for (; i < c.size(); ++i) {
        if (++c[i] < p) break;
        c[i] = 0;
      }
      if (i == c.size()) break;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Generators

/// SplitMix64 (Steele, Lea and Flood): state += 0x9e3779b97f4a7c15, then
/// z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9, z = (z ^ (z >> 27)) *
/// 0x94d049bb133111eb, output z ^ (z >> 31).
class splitmix64 {
 public:
  explicit splitmix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  /// Uniform in [0, 1) from the top 53 bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool chance(double p) { return unit() < p; }

 private:
  std::uint64_t state_;
};

struct generator_config {
  std::uint64_t seed = 1;
  std::size_t max_vertices = 6;
  double edge_density = 0.3;
  double omega_probability = 0.1;
  double multi_edge_probability = 0.15;  // finite multiplicity 2 instead of 1
  field base = field::gf(2);
  int max_poly_degree = 3;
};

inline void check_config(const generator_config& c) {
  ensure(c.max_vertices >= 1 && c.max_vertices <= vertex_bound, error_kind::invalid_input,
         "max_vertices must lie in [1, 16]");
  ensure(c.max_poly_degree >= 1, error_kind::invalid_input, "max_poly_degree must be positive");
  ensure(c.edge_density >= 0 && c.edge_density <= 1 && c.omega_probability >= 0 && c.omega_probability <= 1 &&
             c.multi_edge_probability >= 0 && c.multi_edge_probability <= 1,
         error_kind::invalid_input, "probabilities must lie in [0, 1]");
}

/// Random graph on 1..max_vertices vertices v0, v1, ...; each ordered pair
/// (loops included) receives an edge with probability edge_density.
inline graph random_graph(const generator_config& cfg) {
  check_config(cfg);
  splitmix64 rng(cfg.seed);
  const std::size_t n = 1 + rng.below(cfg.max_vertices);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<graph::edge_spec> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t w = 0; w < n; ++w) {
      if (!rng.chance(cfg.edge_density)) continue;
      multiplicity m(1);
      if (rng.chance(cfg.omega_probability))
        m = multiplicity::omega();
      else if (rng.chance(cfg.multi_edge_probability))
        m = multiplicity(2);
      char id[32];
      std::snprintf(id, sizeof id, "e%03zu", edges.size());
      edges.push_back({id, names[u], names[w], m});
    }
  return graph(names, edges);
}

/// Monic polynomials of degree 1..max_degree with nonzero constant term
/// that pass the brute-force irreducibility test (prime fields only).
inline std::vector<poly> irreducibles_up_to(const field& k, int max_degree) {
  ensure(k.is_prime_field(), error_kind::invalid_input, "irreducible enumeration needs a prime field");
  const auto p = k.characteristic();
  std::vector<poly> out;
  for (int d = 1; d <= max_degree; ++d) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(d), 0);
    c[0] = 1;
    while (true) {
      std::vector<rational> coeffs(c.begin(), c.end());
      coeffs.emplace_back(1);
      poly f(k, coeffs);
      if (irreducible_bruteforce(f)) out.push_back(f);
      std::size_t i = 0;
      for (; i < c.size(); ++i) {
        if (++c[i] < p) break;
        c[i] = i == 0 ? 1 : 0;
      }
      if (i == c.size()) break;
      if (out.size() > 4096) break;
    }
  }
  return out;
}

/// Random irreducible over Q: x + a or x^2 + a x + b with small integers,
/// filtered by the rational root test (degree at most 2 here).
inline poly random_rational_irreducible(splitmix64& rng, int max_degree) {
  while (true) {
    const int d = max_degree >= 2 && rng.chance(0.5) ? 2 : 1;
    const long long a = static_cast<long long>(rng.below(7)) - 3;
    const long long b = static_cast<long long>(rng.below(7)) - 3;
    if (d == 1) {
      if (a != 0) return poly(field::rationals(), {a, 1});
      continue;
    }
    if (b == 0) continue;
    bool root = false;
    for (long long r = -3; r <= 3 && !root; ++r)
      if (r != 0 && b % r == 0) root = b + a * r + r * r == 0;
    if (!root) return poly(field::rationals(), {b, a, 1});
  }
}

/// A family of powers of pairwise distinct primes of L_K(E): graded primes
/// with exponent 1 and non-graded primes I(H, B_H) + <p(c)> with exponent
/// at most 3. Every member is certified by prime_power_decompose.
inline std::vector<ideal> random_prime_power_family(const generator_config& cfg, const ideal::graph_ptr& gp,
                                                     std::size_t max_size = 4) {
  check_config(cfg);
  const graph& g = *gp;
  splitmix64 rng(cfg.seed ^ 0x5bd1e995ull);
  const auto graded = enumerate_graded_primes(gp, cfg.base);

  // Tails generated by an exit-free cycle carry non-graded primes.
  struct slot {
    admissible_pair pair;
    cycle c;
  };
  std::vector<slot> slots;
  for (const auto& p : graded) {
    if (p.selected() != breaking_vertices(g, p.hereditary())) continue;
    for (const auto& c : exit_free_cycles(g, p.pair()))
      if (m_of(g, cycle_start(g, c)) == ~p.hereditary()) slots.push_back({p.pair(), c});
  }
  ensure(!graded.empty() || !slots.empty(), error_kind::unsatisfiable, "graph has no proper prime ideals");

  std::vector<poly> polys;
  if (cfg.base.is_prime_field()) polys = irreducibles_up_to(cfg.base, cfg.max_poly_degree);

  const std::size_t size = 1 + rng.below(max_size);
  std::vector<ideal> primes, out;
  for (std::size_t attempt = 0; out.size() < size && attempt < 8 * size; ++attempt) {
    const bool pick_cycle = !slots.empty() && (graded.empty() || rng.chance(0.6));
    if (!pick_cycle) {
      const auto& p = graded[rng.below(graded.size())];
      if (std::find(primes.begin(), primes.end(), p) != primes.end()) continue;
      primes.push_back(p);
      out.push_back(p);
      continue;
    }
    const auto& s = slots[rng.below(slots.size())];
    const poly f = cfg.base.is_prime_field() ? polys[rng.below(polys.size())]
                                             : random_rational_irreducible(rng, cfg.max_poly_degree);
    auto p = canonicalize(gp, cfg.base, s.pair.hereditary, s.pair.selected, {raw_part{s.c, f}});
    if (std::find(primes.begin(), primes.end(), p) != primes.end()) continue;
    const auto r = static_cast<unsigned>(1 + rng.below(3));
    primes.push_back(p);
    out.push_back(prime_to_power(p, r));
  }
  for (const auto& i : out) {
    const auto pp = prime_power_decompose(i);
    ensure(pp.has_value(), error_kind::internal, "generated family member is not a prime power");
  }
  return out;
}

}  // namespace lpa::oracle
