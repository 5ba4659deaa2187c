#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpa/factor.hpp"
#include "lpa/graph_algorithms.hpp"

namespace lpa {

/// Cycle generator f(c) of a non-graded ideal. The cycle is stored through
/// the edges of the ambient graph E; it avoids H, so it is also a cycle of
/// the quotient graph.
struct cycle_part {
  cycle c;
  laurent_class f;

  friend bool operator==(const cycle_part&, const cycle_part&) = default;
};

/// Unnormalized generator handed to canonicalize.
struct raw_part {
  cycle c;
  poly f;
};

/// Ideal of L_K(E) in canonical form I(H, S) + sum <f_i(c_i)>.
/// Only canonicalize and the graded factories construct values.
class ideal {
 public:
  using graph_ptr = std::shared_ptr<const graph>;

  const graph& ambient() const noexcept { return *graph_; }
  const graph_ptr& ambient_ptr() const noexcept { return graph_; }
  const field& base_field() const noexcept { return field_; }
  const admissible_pair& pair() const noexcept { return pair_; }
  const vertex_set& hereditary() const noexcept { return pair_.hereditary; }
  const vertex_set& selected() const noexcept { return pair_.selected; }
  const std::vector<cycle_part>& parts() const noexcept { return parts_; }

  bool is_graded() const noexcept { return parts_.empty(); }
  bool is_proper() const { return !pair_.hereditary.all(); }

  /// I(H, S); validates admissibility.
  static ideal graded(graph_ptr g, field k, admissible_pair p) {
    check_admissible(*g, p);
    return ideal(std::move(g), k, std::move(p), {});
  }

  static ideal zero(graph_ptr g, field k) {
    auto p = admissible_pair{g->no_vertices(), g->no_vertices()};
    return ideal(std::move(g), k, std::move(p), {});
  }

  static ideal improper(graph_ptr g, field k) {
    auto p = admissible_pair{g->all_vertices(), g->no_vertices()};
    return ideal(std::move(g), k, std::move(p), {});
  }

  friend bool operator==(const ideal& a, const ideal& b) {
    return (a.graph_ == b.graph_ || *a.graph_ == *b.graph_) && a.field_ == b.field_ && a.pair_ == b.pair_ &&
           a.parts_ == b.parts_;
  }

 private:
  ideal(graph_ptr g, field k, admissible_pair p, std::vector<cycle_part> parts)
      : graph_(std::move(g)), field_(k), pair_(std::move(p)), parts_(std::move(parts)) {}

  friend ideal canonicalize(const graph_ptr&, const field&, const vertex_set&, const vertex_set&,
                            const std::vector<raw_part>&);

  graph_ptr graph_;
  field field_;
  admissible_pair pair_;
  std::vector<cycle_part> parts_;
};

inline void check_compatible(const ideal& a, const ideal& b) {
  ensure(a.ambient_ptr() == b.ambient_ptr() || a.ambient() == b.ambient(), error_kind::graph_mismatch,
         "ideals live over different graphs");
  ensure(a.base_field() == b.base_field(), error_kind::field_mismatch,
         "ideals over " + a.base_field().name() + " and " + b.base_field().name());
}

/// Deterministic order: H, then S, then the parts (cycle start, polynomial).
inline bool ideal_less(const ideal& a, const ideal& b) {
  if (a.pair() != b.pair()) return pair_less(a.pair(), b.pair());
  const auto& g = a.ambient();
  return std::lexicographical_compare(
      a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
      [&](const cycle_part& x, const cycle_part& y) {
        const auto sx = cycle_start(g, x.c), sy = cycle_start(g, y.c);
        if (sx != sy) return sx < sy;
        if (x.c != y.c) return x.c < y.c;
        return x.f < y.f;
      });
}

// ---------------------------------------------------------------------------
// Cycles relative to a quotient E \ (H, S), read off E directly

/// Where an exit of a cycle lands in the quotient: a vertex of E outside H,
/// or the primed copy of a breaking vertex.
struct exit_target {
  std::size_t vertex;
  bool primed;
};

inline std::vector<exit_target> quotient_exits(const graph& g, const admissible_pair& p, const cycle& c) {
  const vertex_set primed = breaking_vertices(g, p.hereditary) - p.selected;
  std::vector<exit_target> out;
  for (auto ce : c.edges) {
    const auto v = g.edge_at(ce).source;
    for (auto e : g.out_edges(v)) {
      const auto& ed = g.edge_at(e);
      if (p.hereditary.test(ed.range)) continue;
      if (e != ce || ed.mult != multiplicity(1)) out.push_back({ed.range, false});
      if (primed.test(ed.range)) out.push_back({ed.range, true});
    }
  }
  return out;
}

inline bool exit_free_in_quotient(const graph& g, const admissible_pair& p, const cycle& c) {
  if (cycle_vertex_set(g, c).intersects(p.hereditary)) return false;
  return quotient_exits(g, p, c).empty();
}

/// Exit-free cycles of E \ (H, S), stored as cycles of E.
inline std::vector<cycle> exit_free_cycles(const graph& g, const admissible_pair& p) {
  if (p.hereditary.all()) return {};
  const quotient q = quotient_graph(g, p);
  std::vector<cycle> out;
  for (const auto& qc : cycles_without_exits(q.result)) {
    std::vector<std::size_t> edges;
    for (auto e : qc.edges) {
      ensure(!q.edge_primed[e], error_kind::internal, "quotient cycle through a primed edge");
      edges.push_back(q.edge_origin[e]);
    }
    out.push_back(make_cycle(g, std::move(edges)));
  }
  return out;
}

inline cycle to_quotient_cycle(const graph& g, const quotient& q, const cycle& c) {
  std::vector<std::size_t> edges;
  for (auto e : c.edges) {
    auto qe = q.edge_image(g, e);
    ensure(qe.has_value(), error_kind::internal, "cycle edge missing from the quotient");
    edges.push_back(*qe);
  }
  return make_cycle(q.result, std::move(edges));
}

// ---------------------------------------------------------------------------
// Canonical form

/// Canonical ideal generated by I(H0, S0) and the given cycle generators.
/// Every vertex forced into the ideal is moved into H until nothing changes:
/// unit polynomials put the cycle into H, and each exit e of a generated
/// cycle contributes e* f(c) e = a0 r(e).
inline ideal canonicalize(const ideal::graph_ptr& gp, const field& k, const vertex_set& h0, const vertex_set& s0,
                          const std::vector<raw_part>& raw) {
  const graph& g = *gp;
  check_set(g, h0);
  check_set(g, s0);
  struct working {
    cycle c;
    poly f;
  };
  std::vector<working> parts;
  for (const auto& r : raw) {
    ensure(r.f.base_field() == k, error_kind::field_mismatch,
           "generator over " + r.f.base_field().name() + " in an ideal over " + k.name());
    ensure(!r.f.is_zero(), error_kind::zero_polynomial, "cycle generator with zero polynomial");
    parts.push_back({make_cycle(g, r.c.edges), r.f});
  }

  vertex_set h = h0;
  vertex_set wanted = s0;
  admissible_pair p;
  bool changed = true;
  while (changed) {
    changed = false;
    h = hereditary_saturated_closure(g, h);

    // Requested members of S that are really vertices of the ideal.
    for (auto v : members(wanted - h)) {
      const auto out = slots_leaving(g, v, h);
      if (out.is_zero()) {
        h.set(v);
        changed = true;
      } else if (out.infinite) {
        fail(error_kind::not_admissible,
             "vertex '" + g.vertex_name(v) + "' emits infinitely many edges outside H and cannot lie in S");
      }
    }
    if (changed) continue;
    p = admissible_pair{h, wanted & breaking_vertices(g, h)};

    // Drop generators swallowed by H, normalize, merge duplicates.
    std::vector<working> next;
    for (auto& w : parts) {
      if (cycle_vertex_set(g, w.c).intersects(h)) continue;
      const auto cls = normalize_laurent(w.f);
      auto it = std::find_if(next.begin(), next.end(), [&](const working& x) { return x.c == w.c; });
      if (it != next.end())
        it->f = gcd(it->f, cls.rep());
      else
        next.push_back({w.c, cls.rep()});
    }
    parts = std::move(next);
    for (const auto& w : parts) {
      if (w.f.degree() == 0) {
        h.set(cycle_start(g, w.c));
        changed = true;
      }
    }
    if (changed) continue;

    for (const auto& w : parts) {
      for (const auto& t : quotient_exits(g, p, w.c)) {
        if (t.primed) {
          if (!wanted.test(t.vertex)) {
            wanted.set(t.vertex);
            changed = true;
          }
        } else if (!h.test(t.vertex)) {
          h.set(t.vertex);
          changed = true;
        }
      }
    }
  }

  if (h.all()) return ideal::improper(gp, k);
  std::vector<cycle_part> out;
  for (const auto& w : parts) out.push_back({w.c, normalize_laurent(w.f)});
  std::sort(out.begin(), out.end(), [&](const cycle_part& a, const cycle_part& b) {
    return cycle_start(g, a.c) < cycle_start(g, b.c);
  });
  return ideal(gp, k, std::move(p), std::move(out));
}

inline ideal canonicalize(const ideal::graph_ptr& gp, const field& k, const std::vector<std::string>& h0,
                          const std::vector<std::string>& s0, const std::vector<raw_part>& raw) {
  return canonicalize(gp, k, gp->make_set(h0), gp->make_set(s0), raw);
}

inline ideal graded_part(const ideal& i) { return ideal::graded(i.ambient_ptr(), i.base_field(), i.pair()); }

inline void check_proper(const ideal& i) {
  ensure(i.is_proper(), error_kind::improper_ideal, "operation needs a proper ideal");
}

// ---------------------------------------------------------------------------
// Graded lattice operations

inline admissible_pair meet_pairs(const graph& g, const admissible_pair& a, const admissible_pair& b) {
  const vertex_set h = a.hereditary & b.hereditary;
  const vertex_set s = breaking_vertices(g, h) & (a.hereditary | a.selected) & (b.hereditary | b.selected);
  return {h, s};
}

inline admissible_pair join_pairs(const graph& g, const admissible_pair& a, const admissible_pair& b) {
  const vertex_set s = a.selected | b.selected;
  vertex_set h = hereditary_saturated_closure(g, a.hereditary | b.hereditary);
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto v : members(s - h)) {
      if (slots_leaving(g, v, h).is_zero()) {
        h.set(v);
        grew = true;
      }
    }
    if (grew) h = hereditary_saturated_closure(g, h);
  }
  return {h, s & breaking_vertices(g, h)};
}

inline ideal meet_graded(const ideal& a, const ideal& b) {
  check_compatible(a, b);
  ensure(a.is_graded() && b.is_graded(), error_kind::not_graded, "meet_graded needs graded ideals");
  return ideal::graded(a.ambient_ptr(), a.base_field(), meet_pairs(a.ambient(), a.pair(), b.pair()));
}

inline ideal join_graded(const ideal& a, const ideal& b) {
  check_compatible(a, b);
  ensure(a.is_graded() && b.is_graded(), error_kind::not_graded, "join_graded needs graded ideals");
  auto p = join_pairs(a.ambient(), a.pair(), b.pair());
  if (p.hereditary.all()) return ideal::improper(a.ambient_ptr(), a.base_field());
  return ideal::graded(a.ambient_ptr(), a.base_field(), std::move(p));
}

// ---------------------------------------------------------------------------
// Containment

inline const cycle_part* find_part(const ideal& i, const cycle& c) {
  for (const auto& p : i.parts())
    if (p.c == c) return &p;
  return nullptr;
}

/// Whether J is a subset of I.
inline bool contains(const ideal& i, const ideal& j) {
  check_compatible(i, j);
  if (!admissible_leq(j.pair(), i.pair())) return false;
  const auto& g = i.ambient();
  for (const auto& part : j.parts()) {
    if (i.hereditary().test(cycle_start(g, part.c))) continue;
    const auto* mine = find_part(i, part.c);
    if (mine == nullptr || !divides(mine->f.rep(), part.f.rep())) return false;
  }
  return true;
}

inline bool equals(const ideal& a, const ideal& b) {
  check_compatible(a, b);
  return a == b;
}

// ---------------------------------------------------------------------------
// Intersection

/// I restricted to the ideal of an exit-free cycle d of a smaller quotient,
/// as a generator in K[x, x^-1]: 1 when d lies in H_I, f when I carries
/// (d, f), zero otherwise.
inline std::optional<poly> corner(const ideal& i, const cycle& d) {
  const auto& g = i.ambient();
  if (i.hereditary().test(cycle_start(g, d))) return poly::constant(i.base_field(), 1);
  if (const auto* p = find_part(i, d)) return p->f.rep();
  return std::nullopt;
}

inline ideal intersect_pair(const ideal& a, const ideal& b) {
  check_compatible(a, b);
  const auto& g = a.ambient();
  const auto p = meet_pairs(g, a.pair(), b.pair());
  if (p.hereditary.all()) return ideal::improper(a.ambient_ptr(), a.base_field());
  std::vector<raw_part> parts;
  for (const auto& d : exit_free_cycles(g, p)) {
    const auto ca = corner(a, d), cb = corner(b, d);
    if (!ca || !cb) continue;
    const poly f = lcm(*ca, *cb);
    ensure(f.degree() >= 1, error_kind::internal, "unit corner on a cycle outside the meet");
    parts.push_back({d, f});
  }
  auto out = canonicalize(a.ambient_ptr(), a.base_field(), p.hereditary, p.selected, parts);
  ensure(out.pair() == p && out.parts().size() == parts.size(), error_kind::internal,
         "intersection was not already canonical");
  return out;
}

/// Intersection of finitely many ideals of any shape.
inline ideal intersect(const std::vector<ideal>& factors) {
  ensure(!factors.empty(), error_kind::invalid_input, "intersection of an empty list");
  ideal acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) acc = intersect_pair(acc, factors[i]);
  return acc;
}

// ---------------------------------------------------------------------------
// Primes

enum class prime_case { none = 0, graded_full = 1, breaking_vertex = 2, cycle = 3 };

struct prime_result {
  bool prime;
  prime_case which;
};

inline prime_result is_prime(const ideal& i) {
  check_proper(i);
  const auto& g = i.ambient();
  const vertex_set& h = i.hereditary();
  const vertex_set rest = ~h;
  const vertex_set b = breaking_vertices(g, h);

  if (i.is_graded()) {
    if (i.selected() == b && downward_directed(g, rest)) return {true, prime_case::graded_full};
    const vertex_set missing = b - i.selected();
    if (missing.count() == 1) {
      const auto u = missing.find_first();
      if (m_of(g, u) == rest) return {true, prime_case::breaking_vertex};
    }
    return {false, prime_case::none};
  }

  if (i.selected() != b || i.parts().size() != 1) return {false, prime_case::none};
  const auto& part = i.parts().front();
  if (m_of(g, cycle_start(g, part.c)) != rest) return {false, prime_case::none};
  const quotient q = quotient_graph(g, i.pair());
  const auto without_k = cycles_without_k(q.result);
  if (std::find(without_k.begin(), without_k.end(), to_quotient_cycle(g, q, part.c)) == without_k.end())
    return {false, prime_case::none};
  if (!is_irreducible_laurent(part.f)) return {false, prime_case::none};
  return {true, prime_case::cycle};
}

/// All graded primes. Complements of maximal tails give I(H, B_H); each
/// infinite emitter u with hereditary saturated complement of M(u) and u
/// breaking gives I(H, B_H \ {u}).
inline std::vector<ideal> enumerate_graded_primes(const ideal::graph_ptr& gp, const field& k) {
  const graph& g = *gp;
  std::vector<ideal> out;
  auto add = [&](admissible_pair p) {
    auto candidate = ideal::graded(gp, k, std::move(p));
    ensure(is_prime(candidate).prime, error_kind::internal, "graded prime candidate failed the prime test");
    if (std::find(out.begin(), out.end(), candidate) == out.end()) out.push_back(std::move(candidate));
  };
  for (const auto& m : maximal_tails(g)) {
    const vertex_set h = ~m;
    add({h, breaking_vertices(g, h)});
  }
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    if (!g.is_infinite_emitter(u)) continue;
    const vertex_set h = ~m_of(g, u);
    if (!is_hereditary_saturated(g, h)) continue;
    vertex_set b = breaking_vertices(g, h);
    if (!b.test(u)) continue;
    b.reset(u);
    add({h, b});
  }
  std::sort(out.begin(), out.end(), ideal_less);
  return out;
}

struct prime_power {
  ideal prime;
  unsigned exponent;
};

/// (P, n) with I = P^n when I is irreducible.
inline std::optional<prime_power> prime_power_decompose(const ideal& i) {
  check_proper(i);
  if (i.is_graded()) {
    if (is_prime(i).prime) return prime_power{i, 1};
    return std::nullopt;
  }
  const auto& g = i.ambient();
  if (i.selected() != breaking_vertices(g, i.hereditary()) || i.parts().size() != 1) return std::nullopt;
  const auto& part = i.parts().front();
  const auto terms = factor(part.f.rep());
  if (terms.size() != 1) return std::nullopt;
  auto p = canonicalize(i.ambient_ptr(), i.base_field(), i.hereditary(), i.selected(),
                        {raw_part{part.c, terms.front().factor}});
  if (!is_prime(p).prime) return std::nullopt;
  return prime_power{std::move(p), terms.front().multiplicity};
}

// ---------------------------------------------------------------------------
// Complete irreducibility

enum class ci_case { none = 0, graded = 1, prime_power = 2 };

struct ci_result {
  bool holds;
  ci_case which;
};

inline ci_result is_completely_irreducible(const ideal& i) {
  check_proper(i);
  if (i.is_graded()) {
    const quotient q = quotient_graph(i.ambient(), i.pair());
    const auto& e = q.result;
    if (condition_l(e) && downward_directed(e, e.all_vertices()) && strong_csp(e).holds)
      return {true, ci_case::graded};
    return {false, ci_case::none};
  }
  const auto pp = prime_power_decompose(i);
  if (pp && !pp->prime.is_graded()) return {true, ci_case::prime_power};
  return {false, ci_case::none};
}

// ---------------------------------------------------------------------------
// Products

/// P^n for a prime P: graded primes are idempotent, and a non-graded prime
/// I(H, B_H) + <p(c)> has n-th power I(H, B_H) + <p^n(c)>.
inline ideal prime_to_power(const ideal& p, unsigned n) {
  ensure(n >= 1, error_kind::invalid_input, "prime power exponent must be positive");
  if (p.is_graded() || n == 1) return p;
  const auto& part = p.parts().front();
  return canonicalize(p.ambient_ptr(), p.base_field(), p.hereditary(), p.selected(),
                      {raw_part{part.c, pow(part.f.rep(), n)}});
}

/// Product of graded and prime-power ideals. Graded factors multiply as
/// intersections, powers of one non-graded prime add exponents, and powers
/// of distinct primes multiply as intersections.
inline ideal multiply(const std::vector<ideal>& factors) {
  ensure(!factors.empty(), error_kind::invalid_input, "product of an empty list");
  for (std::size_t i = 1; i < factors.size(); ++i) check_compatible(factors.front(), factors[i]);

  std::vector<ideal> terms;
  std::vector<prime_power> powers;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& f = factors[i];
    if (f.is_graded()) {
      terms.push_back(f);
      continue;
    }
    auto pp = f.is_proper() ? prime_power_decompose(f) : std::nullopt;
    ensure(pp.has_value(), error_kind::unsupported_operands,
           "factor " + std::to_string(i) + " is neither graded nor a prime power");
    auto it = std::find_if(powers.begin(), powers.end(), [&](const prime_power& x) { return x.prime == pp->prime; });
    if (it != powers.end())
      it->exponent += pp->exponent;
    else
      powers.push_back(std::move(*pp));
  }
  for (const auto& pp : powers) terms.push_back(prime_to_power(pp.prime, pp.exponent));
  return intersect(terms);
}

inline ideal power(const ideal& i, unsigned n) {
  ensure(n >= 1, error_kind::invalid_input, "ideal power exponent must be positive");
  return multiply(std::vector<ideal>(n, i));
}

enum class combine_mode { product, intersection };

inline const char* to_string(combine_mode m) { return m == combine_mode::product ? "product" : "intersection"; }

inline ideal combine(const std::vector<ideal>& factors, combine_mode mode) {
  return mode == combine_mode::product ? multiply(factors) : intersect(factors);
}

/// Greedy left-to-right removal of factors that do not change the result,
/// repeated until no single removal preserves it.
inline std::vector<ideal> make_irredundant(std::vector<ideal> factors, combine_mode mode) {
  const ideal target = combine(factors, mode);
  bool removed = true;
  while (removed && factors.size() > 1) {
    removed = false;
    for (std::size_t i = 0; i < factors.size() && factors.size() > 1; ++i) {
      auto rest = factors;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      if (combine(rest, mode) == target) {
        factors = std::move(rest);
        removed = true;
        break;
      }
    }
  }
  return factors;
}

// ---------------------------------------------------------------------------
// Factorization

enum class factor_mode { prime_power, completely_irreducible };

inline const char* to_string(factor_mode m) {
  return m == factor_mode::prime_power ? "prime-power" : "comp-irred";
}

struct factorization_report {
  std::vector<prime_power> factors;  // distinct primes with exponents
  factor_mode mode = factor_mode::prime_power;
  bool irredundant = false;

  /// Each factor as the ideal P^r.
  std::vector<ideal> powers() const {
    std::vector<ideal> out;
    for (const auto& f : factors) out.push_back(prime_to_power(f.prime, f.exponent));
    return out;
  }

  /// Each prime repeated by its exponent, for recomposition as a product.
  std::vector<ideal> expanded() const {
    std::vector<ideal> out;
    for (const auto& f : factors)
      for (unsigned r = 0; r < f.exponent; ++r) out.push_back(f.prime);
    return out;
  }
};

/// Minimal members, under inclusion, of the graded primes containing gr(I).
inline std::vector<ideal> minimal_graded_primes_over(const ideal& i) {
  std::vector<ideal> above;
  for (auto& p : enumerate_graded_primes(i.ambient_ptr(), i.base_field()))
    if (admissible_leq(i.pair(), p.pair())) above.push_back(std::move(p));
  std::vector<ideal> out;
  for (const auto& p : above) {
    bool minimal = true;
    for (const auto& q : above)
      if (q != p && admissible_leq(q.pair(), p.pair())) minimal = false;
    if (minimal) out.push_back(p);
  }
  return out;
}

/// Factorization of I into powers of distinct primes. The quotient by gr(I)
/// must be covered by the maximal tails of the minimal graded primes over I,
/// with each cycle generator separated by exactly one of them.
inline std::optional<factorization_report> factor_prime_powers(const ideal& i) {
  check_proper(i);
  const auto& g = i.ambient();
  const auto minimal = minimal_graded_primes_over(i);
  if (minimal.empty() || intersect(minimal) != graded_part(i)) return std::nullopt;

  std::vector<std::optional<cycle_part>> attached(minimal.size());
  for (const auto& part : i.parts()) {
    std::optional<std::size_t> owner;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      if (minimal[k].hereditary().test(cycle_start(g, part.c))) continue;
      if (owner) return std::nullopt;
      owner = k;
    }
    if (!owner || attached[*owner]) return std::nullopt;
    const auto& p = minimal[*owner];
    if (p.selected() != breaking_vertices(g, p.hereditary())) return std::nullopt;
    attached[*owner] = part;
  }

  factorization_report report;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    const auto& p = minimal[k];
    if (!attached[k]) {
      report.factors.push_back({p, 1});
      continue;
    }
    for (const auto& t : factor(attached[k]->f.rep())) {
      auto q = canonicalize(p.ambient_ptr(), p.base_field(), p.hereditary(), p.selected(),
                            {raw_part{attached[k]->c, t.factor}});
      ensure(is_prime(q).prime, error_kind::internal, "cycle factor is not prime");
      report.factors.push_back({std::move(q), t.multiplicity});
    }
  }
  std::sort(report.factors.begin(), report.factors.end(),
            [](const prime_power& a, const prime_power& b) { return ideal_less(a.prime, b.prime); });

  ensure(multiply(report.expanded()) == i, error_kind::internal, "factors do not multiply back to the ideal");
  const auto terms = report.powers();
  ensure(intersect(terms) == i, error_kind::internal, "factors do not intersect back to the ideal");
  report.irredundant = make_irredundant(terms, combine_mode::intersection).size() == terms.size();
  return report;
}

/// Factorization into completely irreducible prime powers, when one exists.
inline std::optional<factorization_report> factor_completely_irreducible(const ideal& i) {
  auto report = factor_prime_powers(i);
  if (!report) return std::nullopt;
  for (const auto& t : report->powers())
    if (!is_completely_irreducible(t).holds) return std::nullopt;
  report->mode = factor_mode::completely_irreducible;
  return report;
}

}  // namespace lpa
