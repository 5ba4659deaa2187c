// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 when any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "lpa/cli.hpp"
#include "lpa/properties.hpp"
#include "support.hpp"

using namespace lpa;
using namespace lpa::test;

namespace {

constexpr std::size_t seeded_cases = 200;

struct verdict {
  bool pass = true;
  std::string detail;

  void check(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

oracle::generator_config case_config(std::uint64_t base, std::size_t i) {
  oracle::generator_config cfg;
  cfg.seed = oracle::splitmix64(base + i).next();
  cfg.max_vertices = 6;
  cfg.base = field::gf(2);
  cfg.max_poly_degree = 3;
  return cfg;
}

struct family_case {
  ideal::graph_ptr graph;
  std::vector<ideal> family;
};

/// The 200 seeded families of powers of distinct primes shared by the
/// product, uniqueness and squaring criteria.
const std::vector<family_case>& families() {
  static const std::vector<family_case> cases = [] {
    std::vector<family_case> out;
    for (std::size_t i = 0; i < seeded_cases; ++i) {
      const auto cfg = case_config(0xacce97, i);
      auto gp = std::make_shared<const graph>(oracle::random_graph(cfg));
      out.push_back({gp, oracle::random_prime_power_family(cfg, gp)});
    }
    return out;
  }();
  return cases;
}

std::string where(std::size_t i, const ideal::graph_ptr& gp) {
  return "case " + std::to_string(i) + " on " + io::graph_to_json(*gp).dump();
}

verdict f3_factorization() {
  verdict v;
  std::ostringstream out, err;
  const std::string dir = LPA_FIXTURE_DIR;
  const int code = cli::run({"ideal-factor", "--mode", "comp-irred", "--graph", dir + "/F3.json", "--ideal",
                             dir + "/F3_I_v0.json"},
                            out, err);
  v.check(code == 0, "ideal-factor exited with " + std::to_string(code) + ": " + err.str());
  if (!v.pass) return v;
  const auto report = io::json::parse(out.str()).at("factorization");
  v.check(!report.is_null() && report.at("factors").size() == 3, "expected 3 factors");

  const auto f3 = load_graph("F3");
  const auto i = load_ideal(f3, "F3_I_v0");
  const auto r = factor_completely_irreducible(i);
  v.check(r.has_value() && r->factors.size() == 3, "library factorization does not have 3 factors");
  if (!v.pass) return v;
  for (const auto& f : r->factors) v.check(f.prime.is_graded() && f.exponent == 1, "factor is not a graded prime");
  for (const auto& p : r->powers()) v.check(is_completely_irreducible(p).holds, "factor is not completely irreducible");
  v.check(multiply(r->powers()) == i, "product of the factors differs from I");
  v.check(intersect(r->powers()) == i, "intersection of the factors differs from I");

  const auto fan = load_graph("F3_fan5");
  const auto fi = load_ideal(fan, "F3_fan5_I_v0");
  const auto rf = factor_completely_irreducible(fi);
  v.check(rf.has_value() && rf->factors.size() == 5, "five-tail variant does not factor into 5 pieces");
  if (rf) v.check(multiply(rf->powers()) == fi && intersect(rf->powers()) == fi, "five-tail recomposition failed");
  return v;
}

verdict product_equals_intersection() {
  verdict v;
  const auto& fs = families();
  for (std::size_t i = 0; i < fs.size() && v.pass; ++i) {
    const auto& [gp, family] = fs[i];
    const ideal product = multiply(family);
    v.check(product == intersect(family), "product differs from intersection, " + where(i, gp));
    for (const auto& f : family) v.check(contains(f, product), "product not inside a factor, " + where(i, gp));
  }
  return v;
}

verdict unique_factorization() {
  verdict v;
  const auto& fs = families();
  for (std::size_t i = 0; i < fs.size() && v.pass; ++i) {
    const auto& [gp, family] = fs[i];
    const auto irr = make_irredundant(family, combine_mode::product);
    const auto report = factor_prime_powers(multiply(irr));
    v.check(report.has_value(), "product did not factor, " + where(i, gp));
    if (!report) break;
    std::vector<ideal> want = irr, got = report->powers();
    std::sort(want.begin(), want.end(), ideal_less);
    std::sort(got.begin(), got.end(), ideal_less);
    v.check(want == got, "factorization is not the generating multiset, " + where(i, gp));
    for (const auto& f : irr) {
      const auto pp = prime_power_decompose(f);
      const auto it = std::find_if(report->factors.begin(), report->factors.end(),
                                   [&](const prime_power& x) { return x.prime == pp->prime; });
      v.check(it != report->factors.end() && it->exponent == pp->exponent, "exponent differs, " + where(i, gp));
    }
  }
  return v;
}

verdict non_uniqueness_guard() {
  verdict v;
  std::size_t seen = 0;
  const auto& fs = families();
  for (std::size_t i = 0; i < fs.size() && v.pass; ++i) {
    for (const auto& f : fs[i].family) {
      const auto pp = prime_power_decompose(f);
      if (pp->prime.is_graded()) continue;
      ++seen;
      const ideal& p = pp->prime;
      const ideal square = multiply({p, p});
      v.check(square != p, "P^2 equals P, " + where(i, fs[i].graph));
      const auto r = factor_prime_powers(square);
      v.check(r && r->factors.size() == 1 && r->factors.front().prime == p && r->factors.front().exponent == 2,
              "P^2 does not factor with exponent 2, " + where(i, fs[i].graph));
    }
  }
  v.check(seen > 0, "no non-graded primes were generated");
  if (v.pass) v.detail = std::to_string(seen) + " non-graded primes";
  return v;
}

std::vector<graph> corpus_and_seeded(std::uint64_t base) {
  std::vector<graph> out;
  for (const char* f : {"F1", "F2", "F3", "F3_fan5", "F5", "F6", "F7", "F8"}) out.push_back(*load_graph(f));
  for (std::size_t i = 0; i < seeded_cases; ++i) out.push_back(oracle::random_graph(case_config(base, i)));
  return out;
}

verdict oracle_equivalence() {
  verdict v;
  for (const auto& g : corpus_and_seeded(0x0dac1e)) {
    const auto f = props::oracle_agreement(g);
    v.check(!f, (f ? *f : "") + " on " + io::graph_to_json(g).dump());
    if (!v.pass) break;
  }
  return v;
}

verdict classifier_fixtures() {
  verdict v;
  const auto f5 = load_graph("F5");
  v.check(every_proper_ideal_completely_irreducible(*f5).verdict, "F5: every proper ideal CI is false");
  std::vector<admissible_pair> proper;
  for (const auto& p : admissible_pairs(*f5))
    if (!p.hereditary.all()) proper.push_back(p);
  v.check(proper.size() == 3, "F5: expected 3 proper graded ideals");
  for (const auto& a : proper)
    for (const auto& b : proper) v.check(admissible_leq(a, b) || admissible_leq(b, a), "F5: not a chain");

  const auto f6 = load_graph("F6");
  v.check(irreducible_equals_completely_irreducible(*f6).verdict, "F6: irreducible = CI is false");
  const auto e6 = every_proper_ideal_completely_irreducible(*f6);
  v.check(!e6.verdict && e6.witness_pairs.has_value(), "F6: expected a negative verdict with incomparable pairs");
  if (e6.witness_pairs) {
    const auto& [a, b] = *e6.witness_pairs;
    v.check(!admissible_leq(a, b) && !admissible_leq(b, a), "F6: witness pairs are comparable");
  }

  const auto f1 = load_graph("F1");
  const auto zero = ideal::zero(f1, field::rationals());
  v.check(is_prime(zero).prime, "F1: zero ideal is not prime");
  v.check(!is_completely_irreducible(zero).holds, "F1: zero ideal is completely irreducible");

  const auto f8 = load_graph("F8");
  const auto h = load_ideal(f8, "F8_I_h");
  const auto p = is_prime(h);
  v.check(p.prime && p.which == prime_case::breaking_vertex, "F8: I({h}) is not prime of case 2");
  v.check(is_completely_irreducible(h).holds, "F8: I({h}) is not completely irreducible");
  return v;
}

verdict implication_chain() {
  verdict v;
  for (std::size_t i = 0; i < seeded_cases && v.pass; ++i) {
    const auto g = oracle::random_graph(case_config(0xc4a1, i));
    const auto f = props::classifier_chain(g);
    v.check(!f, (f ? *f : "") + " on " + io::graph_to_json(g).dump());
  }
  return v;
}

struct criterion {
  const char* id;
  const char* title;
  double budget_seconds;
  std::function<verdict()> run;
};

}  // namespace

int main() {
  const std::vector<criterion> criteria = {
      {"F3-FACTORIZATION", "F3 comp-irred factorization into 3 graded factors; five-tail variant", 1,
       f3_factorization},
      {"PRODUCT-EQUALS-INTERSECTION", "200 seeded GF(2) prime-power families: product = intersection", 30,
       product_equals_intersection},
      {"UNIQUE-FACTORIZATION", "200 irredundant families factor back to the exact multiset", 30,
       unique_factorization},
      {"NON-UNIQUENESS-GUARD", "non-graded primes P: P^2 != P and exponent 2", 30, non_uniqueness_guard},
      {"ORACLE-EQUIVALENCE", "closure, tails, meet/join vs brute force on corpus + 200 graphs", 60,
       oracle_equivalence},
      {"CLASSIFIER-FIXTURES", "F5, F6, F1 and F8 classifier verdicts", 1, classifier_fixtures},
      {"IMPLICATION-CHAIN", "predicate chain and product predicate = condition (K) on 200 graphs", 60,
       implication_chain},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (v.pass && secs > c.budget_seconds) {
      v.pass = false;
      v.detail = "over the " + std::to_string(c.budget_seconds) + " s budget";
    }
    std::printf("%s %s: %s (%.3f s)%s%s\n", v.pass ? "PASS" : "FAIL", c.id, c.title, secs,
                v.detail.empty() ? "" : " -- ", v.detail.c_str());
    failures += v.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
