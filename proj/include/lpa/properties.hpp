#pragma once

// Seeded property checks shared by the property runner and the test suite.
// Each check returns a failure description, or nothing when it holds.

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lpa/classifier.hpp"
#include "lpa/io.hpp"
#include "lpa/oracle.hpp"

namespace lpa::props {

using failure = std::optional<std::string>;

inline std::vector<vertex_set> sorted_sets(std::vector<vertex_set> v) {
  std::sort(v.begin(), v.end(), set_less);
  return v;
}

inline std::string show(const graph& g, const vertex_set& s) { return io::set_to_json(g, s).dump(); }

inline std::string show(const graph& g, const admissible_pair& p) { return io::pair_to_json(g, p).dump(); }

/// Closure, maximal tails, admissible pairs and graded meet/join against
/// the brute-force oracles.
inline failure oracle_agreement(const graph& g) {
  for (unsigned long mask = 0; mask < (1ul << g.vertex_count()); ++mask) {
    const vertex_set x(g.vertex_count(), mask);
    const auto fast = hereditary_saturated_closure(g, x);
    const auto slow = oracle::closure(g, x);
    if (fast != slow) return "closure of " + show(g, x) + ": " + show(g, fast) + " vs oracle " + show(g, slow);
  }
  if (sorted_sets(maximal_tails(g)) != sorted_sets(oracle::maximal_tails_bruteforce(g)))
    return std::string("maximal tails differ from the brute-force scan");

  auto fast_pairs = admissible_pairs(g);
  auto pairs = oracle::enumerate_admissible_pairs(g);
  std::sort(pairs.begin(), pairs.end(), pair_less);
  if (fast_pairs != pairs) return std::string("admissible pair enumeration differs from the oracle");
  for (const auto& a : pairs)
    for (const auto& b : pairs) {
      if (admissible_leq(a, b) != oracle::leq(a, b)) return "order differs on " + show(g, a) + ", " + show(g, b);
      const auto m = meet_pairs(g, a, b);
      const auto j = join_pairs(g, a, b);
      const auto om = oracle::glb(pairs, a, b);
      const auto oj = oracle::lub(pairs, a, b);
      if (m != om) return "meet of " + show(g, a) + ", " + show(g, b) + ": " + show(g, m) + " vs " + show(g, om);
      if (j != oj) return "join of " + show(g, a) + ", " + show(g, b) + ": " + show(g, j) + " vs " + show(g, oj);
    }
  return std::nullopt;
}

/// Generated families of powers of distinct primes: product equals
/// intersection and lies in every factor; the irredundant part factors back
/// to itself; non-graded primes P have P^2 != P with exponent 2.
inline failure family_laws(const ideal::graph_ptr& gp, const oracle::generator_config& cfg) {
  std::vector<ideal> family;
  try {
    family = oracle::random_prime_power_family(cfg, gp);
  } catch (const error& e) {
    if (e.kind() == error_kind::unsatisfiable) return std::nullopt;
    throw;
  }
  const ideal product = multiply(family);
  const ideal meet = intersect(family);
  if (product != meet) return std::string("product differs from intersection");
  for (const auto& f : family)
    if (!contains(f, product)) return std::string("product is not contained in a factor");

  const auto irredundant = make_irredundant(family, combine_mode::product);
  if (multiply(irredundant) != product) return std::string("irredundant sublist changed the product");
  const auto report = factor_prime_powers(product);
  if (!report) return std::string("product of prime powers did not factor");
  std::vector<std::pair<ideal, unsigned>> expected, got;
  for (const auto& f : irredundant) {
    const auto pp = prime_power_decompose(f);
    if (!pp) return std::string("family member is not a prime power");
    expected.emplace_back(pp->prime, pp->exponent);
  }
  for (const auto& f : report->factors) got.emplace_back(f.prime, f.exponent);
  auto less = [](const std::pair<ideal, unsigned>& a, const std::pair<ideal, unsigned>& b) {
    if (a.first != b.first) return ideal_less(a.first, b.first);
    return a.second < b.second;
  };
  std::sort(expected.begin(), expected.end(), less);
  std::sort(got.begin(), got.end(), less);
  if (expected != got) return std::string("factorization does not return the generating multiset");

  for (const auto& f : family) {
    const auto pp = prime_power_decompose(f);
    if (pp->prime.is_graded()) continue;
    const auto& prime = pp->prime;
    const ideal square = multiply({prime, prime});
    if (square == prime) return std::string("non-graded prime equals its square");
    const auto r = factor_prime_powers(square);
    if (!r || r->factors.size() != 1 || r->factors.front().exponent != 2 || r->factors.front().prime != prime)
      return std::string("square of a non-graded prime does not factor with exponent 2");
  }
  return std::nullopt;
}

/// every-proper-CI => irreducible = CI => all graded, and the finite-vertex
/// equality between the product predicate and condition (K).
inline failure classifier_chain(const graph& g) {
  const bool epci = every_proper_ideal_completely_irreducible(g).verdict;
  const bool iecii = irreducible_equals_completely_irreducible(g).verdict;
  const bool aig = all_ideals_graded(g).verdict;
  if (epci && !iecii) return std::string("every proper ideal CI but irreducible != CI");
  if (iecii && !aig) return std::string("irreducible = CI but condition (K) fails");
  if (every_proper_ideal_product_of_comp_irred(g).verdict != condition_k(g))
    return std::string("product predicate differs from condition (K)");
  return std::nullopt;
}

/// Graph with vertex v and its incident edges removed; nothing when v is
/// the only vertex.
inline std::optional<graph> delete_vertex(const graph& g, std::size_t v) {
  if (g.vertex_count() == 1) return std::nullopt;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    if (i != v) names.push_back(g.vertex_name(i));
  std::vector<graph::edge_spec> edges;
  for (const auto& e : g.edges())
    if (e.source != v && e.range != v) edges.push_back({e.id, g.vertex_name(e.source), g.vertex_name(e.range), e.mult});
  return graph(names, edges);
}

/// Greedy vertex deletion while the check keeps failing.
inline graph shrink(graph g, const std::function<failure(const graph&)>& check) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      auto smaller = delete_vertex(g, v);
      if (!smaller) break;
      failure f;
      try {
        f = check(*smaller);
      } catch (const error& e) {
        f = e.what();
      }
      if (f) {
        g = std::move(*smaller);
        progress = true;
        break;
      }
    }
  }
  return g;
}

}  // namespace lpa::props
