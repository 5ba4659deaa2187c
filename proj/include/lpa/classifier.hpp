#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpa/graph_algorithms.hpp"

namespace lpa {

/// Verdict of one whole-algebra predicate. A negative verdict fills exactly
/// the witness fields that explain it.
struct algebra_verdict {
  std::string predicate;
  bool verdict = true;
  std::string reason;                                              // empty when the verdict is positive
  std::optional<cycle> witness_cycle;                              // cycle without (K) or without exits
  std::optional<std::pair<admissible_pair, admissible_pair>> witness_pairs;  // incomparable pairs
  std::optional<admissible_pair> witness_pair;                     // quotient that fails a condition
  std::vector<std::string> witness_tail;                           // failing tail in that quotient
  std::vector<std::string> witness_vertices;                       // offending vertices, by name
};

namespace detail {

inline algebra_verdict positive(std::string predicate) {
  algebra_verdict v;
  v.predicate = std::move(predicate);
  return v;
}

inline algebra_verdict negative(std::string predicate, std::string reason) {
  algebra_verdict v;
  v.predicate = std::move(predicate);
  v.verdict = false;
  v.reason = std::move(reason);
  return v;
}

inline std::optional<algebra_verdict> check_k(const graph& g, const std::string& predicate) {
  const auto bad = cycles_without_k(g);
  if (bad.empty()) return std::nullopt;
  auto v = negative(predicate, "condition (K) fails");
  v.witness_cycle = bad.front();
  return v;
}

}  // namespace detail

/// Every ideal is graded iff E satisfies condition (K).
inline algebra_verdict all_ideals_graded(const graph& g) {
  const std::string name = "all_ideals_graded";
  if (auto v = detail::check_k(g, name)) return *v;
  return detail::positive(name);
}

/// The zero ideal is completely irreducible iff E satisfies (L) and E^0 is
/// downward directed with the strong CSP.
inline algebra_verdict zero_completely_irreducible(const graph& g) {
  const std::string name = "zero_completely_irreducible";
  if (const auto bad = cycles_without_exits(g); !bad.empty()) {
    auto v = detail::negative(name, "condition (L) fails");
    v.witness_cycle = bad.front();
    return v;
  }
  if (const auto dd = check_downward_directed(g, g.all_vertices()); !dd.holds) {
    auto v = detail::negative(name, "vertex set is not downward directed");
    v.witness_vertices = {g.vertex_name(dd.witness->first), g.vertex_name(dd.witness->second)};
    return v;
  }
  if (const auto csp = strong_csp(g); !csp.holds) {
    auto v = detail::negative(name, "strong CSP fails");
    if (csp.unreached) v.witness_vertices = {g.vertex_name(*csp.unreached)};
    return v;
  }
  return detail::positive(name);
}

/// (K), admissible pairs forming a chain, and the strong CSP in every
/// proper quotient. A finite chain is well ordered, so the chain check is
/// the whole ordering condition.
inline algebra_verdict every_proper_ideal_completely_irreducible(const graph& g,
                                                                 std::size_t bound = default_exhaustive_bound) {
  const std::string name = "every_proper_ideal_completely_irreducible";
  check_exhaustive_bound(g, bound);
  if (auto v = detail::check_k(g, name)) return *v;
  const auto pairs = admissible_pairs(g, bound);
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j)
      if (!admissible_leq(pairs[i], pairs[j]) && !admissible_leq(pairs[j], pairs[i])) {
        auto v = detail::negative(name, "admissible pairs do not form a chain");
        v.witness_pairs = std::pair{pairs[i], pairs[j]};
        return v;
      }
  for (const auto& p : pairs) {
    if (p.hereditary.all()) continue;
    const auto q = quotient_graph(g, p);
    if (const auto csp = strong_csp(q.result); !csp.holds) {
      auto v = detail::negative(name, "strong CSP fails in a quotient");
      v.witness_pair = p;
      if (csp.unreached) v.witness_vertices = {q.result.vertex_name(*csp.unreached)};
      return v;
    }
  }
  return detail::positive(name);
}

/// (K), and the strong CSP in E \ (H, B_H) for every hereditary saturated H
/// with downward directed complement.
inline algebra_verdict irreducible_equals_completely_irreducible(const graph& g,
                                                                 std::size_t bound = default_exhaustive_bound) {
  const std::string name = "irreducible_equals_completely_irreducible";
  check_exhaustive_bound(g, bound);
  if (auto v = detail::check_k(g, name)) return *v;
  for (const auto& h : enumerate_hereditary_saturated(g, bound)) {
    if (h.all() || !downward_directed(g, ~h)) continue;
    const admissible_pair p{h, breaking_vertices(g, h)};
    const auto q = quotient_graph(g, p);
    if (const auto csp = strong_csp(q.result); !csp.holds) {
      auto v = detail::negative(name, "strong CSP fails in a prime quotient");
      v.witness_pair = p;
      if (csp.unreached) v.witness_vertices = {q.result.vertex_name(*csp.unreached)};
      return v;
    }
  }
  return detail::positive(name);
}

/// (K), and in every proper quotient the maximal tails cover the vertices
/// and each one has the strong CSP. On a finite graph this must agree with
/// condition (K) alone.
inline algebra_verdict every_proper_ideal_product_of_comp_irred(const graph& g,
                                                                std::size_t bound = default_exhaustive_bound) {
  const std::string name = "every_proper_ideal_product_of_comp_irred";
  check_exhaustive_bound(g, bound);
  const bool k = condition_k(g);
  auto verdict = [&]() -> algebra_verdict {
    if (auto v = detail::check_k(g, name)) return *v;
    for (const auto& p : admissible_pairs(g, bound)) {
      if (p.hereditary.all()) continue;
      const auto q = quotient_graph(g, p);
      const auto& e = q.result;
      vertex_set covered = e.no_vertices();
      for (const auto& m : maximal_tails(e)) {
        covered |= m;
        const vertex_set rest = ~m;
        const auto tail_q = quotient_graph(e, {rest, breaking_vertices(e, rest)});
        if (!strong_csp(tail_q.result).holds) {
          auto v = detail::negative(name, "a maximal tail fails the strong CSP");
          v.witness_pair = p;
          v.witness_tail = e.names_of(m);
          return v;
        }
      }
      if (!covered.all()) {
        auto v = detail::negative(name, "maximal tails do not cover a quotient");
        v.witness_pair = p;
        v.witness_vertices = e.names_of(~covered);
        return v;
      }
    }
    return detail::positive(name);
  }();
  ensure(verdict.verdict == k, error_kind::internal,
         "product-of-completely-irreducible verdict disagrees with condition (K) on a finite graph");
  return verdict;
}

inline std::vector<algebra_verdict> classify_algebra(const graph& g, std::size_t bound = default_exhaustive_bound) {
  return {all_ideals_graded(g), zero_completely_irreducible(g), every_proper_ideal_completely_irreducible(g, bound),
          irreducible_equals_completely_irreducible(g, bound), every_proper_ideal_product_of_comp_irred(g, bound)};
}

}  // namespace lpa
