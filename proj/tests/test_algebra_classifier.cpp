#include <gtest/gtest.h>

#include "lpa/oracle.hpp"
#include "lpa/properties.hpp"
#include "support.hpp"

using namespace lpa;
using namespace lpa::test;

namespace {

std::vector<graph> seeded(std::size_t count, std::uint64_t base) {
  std::vector<graph> out;
  for (std::size_t i = 0; i < count; ++i) {
    oracle::generator_config cfg;
    cfg.seed = oracle::splitmix64(base + i).next();
    out.push_back(oracle::random_graph(cfg));
  }
  return out;
}

const graph chain3 = make_graph({"v1", "v2", "v3"}, {{"e2", "v2", "v1", 1}, {"e3", "v3", "v2", 1}});

}  // namespace

TEST(AllIdealsGraded, Examples) {
  EXPECT_TRUE(all_ideals_graded(*load_graph("F5")).verdict);
  const auto f1 = load_graph("F1");
  const auto v1 = all_ideals_graded(*f1);
  EXPECT_FALSE(v1.verdict);
  EXPECT_EQ(v1.witness_cycle, cycle_of(*f1, {"e"}));
  const auto f8 = load_graph("F8");
  const auto v8 = all_ideals_graded(*f8);
  EXPECT_FALSE(v8.verdict);
  EXPECT_EQ(v8.witness_cycle, cycle_of(*f8, {"l"}));
}

TEST(ZeroCompletelyIrreducible, Examples) {
  EXPECT_TRUE(zero_completely_irreducible(chain3).verdict);
  const auto f6 = zero_completely_irreducible(*load_graph("F6"));
  EXPECT_FALSE(f6.verdict);
  EXPECT_EQ(f6.witness_vertices, (std::vector<std::string>{"v-1", "v1"}));
  const auto f1 = load_graph("F1");
  const auto v1 = zero_completely_irreducible(*f1);
  EXPECT_FALSE(v1.verdict);
  EXPECT_EQ(v1.witness_cycle, cycle_of(*f1, {"e"}));
  // The zero ideal of F1 is prime all the same.
  EXPECT_TRUE(is_prime(ideal::zero(f1, field::rationals())).prime);
}

TEST(EveryProperIdealCompletelyIrreducible, Examples) {
  const auto f5 = load_graph("F5");
  EXPECT_TRUE(every_proper_ideal_completely_irreducible(*f5).verdict);
  std::vector<admissible_pair> proper;
  for (const auto& p : admissible_pairs(*f5))
    if (!p.hereditary.all()) proper.push_back(p);
  ASSERT_EQ(proper.size(), 3u);
  for (const auto& a : proper)
    for (const auto& b : proper) EXPECT_TRUE(admissible_leq(a, b) || admissible_leq(b, a));

  const auto f6 = load_graph("F6");
  const auto v6 = every_proper_ideal_completely_irreducible(*f6);
  EXPECT_FALSE(v6.verdict);
  ASSERT_TRUE(v6.witness_pairs);
  const auto& [a, b] = *v6.witness_pairs;
  EXPECT_FALSE(admissible_leq(a, b) || admissible_leq(b, a));
  std::vector<std::vector<std::string>> hs = {names(*f6, a.hereditary), names(*f6, b.hereditary)};
  std::sort(hs.begin(), hs.end());
  EXPECT_EQ(hs, (std::vector<std::vector<std::string>>{{"v-1"}, {"v1"}}));

  const auto v1 = every_proper_ideal_completely_irreducible(*load_graph("F1"));
  EXPECT_FALSE(v1.verdict);
  EXPECT_TRUE(v1.witness_cycle);
}

TEST(IrreducibleEqualsCompletelyIrreducible, Examples) {
  EXPECT_TRUE(irreducible_equals_completely_irreducible(*load_graph("F6")).verdict);
  EXPECT_FALSE(irreducible_equals_completely_irreducible(*load_graph("F1")).verdict);
  EXPECT_TRUE(irreducible_equals_completely_irreducible(*load_graph("F5")).verdict);
}

TEST(ProductOfCompletelyIrreducibles, Examples) {
  EXPECT_TRUE(every_proper_ideal_product_of_comp_irred(*load_graph("F6")).verdict);
  EXPECT_FALSE(every_proper_ideal_product_of_comp_irred(*load_graph("F1")).verdict);
  EXPECT_TRUE(every_proper_ideal_product_of_comp_irred(*load_graph("F5")).verdict);
}

TEST(Classifier, BoundIsEnforced) {
  std::vector<std::string> big;
  for (int i = 0; i < 17; ++i) big.push_back("x" + std::to_string(i));
  const graph g(big, {});
  try {
    classify_algebra(g);
    FAIL() << "expected TooLarge";
  } catch (const error& e) {
    EXPECT_EQ(e.kind(), error_kind::too_large);
  }
}

TEST(Classifier, ImplicationChain) {
  std::vector<graph> graphs;
  for (const char* f : {"F1", "F2", "F3", "F3_fan5", "F5", "F6", "F7", "F8"}) graphs.push_back(*load_graph(f));
  graphs.push_back(chain3);
  for (auto& g : seeded(200, 2024)) graphs.push_back(std::move(g));
  for (const auto& g : graphs) {
    const auto f = props::classifier_chain(g);
    EXPECT_FALSE(f) << *f << " on " << io::graph_to_json(g).dump();
  }
}

TEST(Classifier, NegativeVerdictsCarryWitnesses) {
  for (const auto& g : seeded(200, 77)) {
    for (const auto& v : classify_algebra(g)) {
      if (v.verdict) continue;
      EXPECT_FALSE(v.reason.empty());
      const bool has = v.witness_cycle || v.witness_pairs || v.witness_pair || !v.witness_tail.empty() ||
                       !v.witness_vertices.empty();
      EXPECT_TRUE(has) << v.predicate << ": " << v.reason;
      if (v.witness_cycle && v.reason == "condition (K) fails") {
        const auto bad = cycles_without_k(g);
        EXPECT_NE(std::find(bad.begin(), bad.end(), *v.witness_cycle), bad.end());
      }
      if (v.witness_pairs) {
        const auto& [a, b] = *v.witness_pairs;
        EXPECT_FALSE(admissible_leq(a, b) || admissible_leq(b, a));
      }
    }
  }
}

TEST(Classifier, ConsistentWithIdealCalculus) {
  std::vector<ideal::graph_ptr> graphs;
  for (const char* f : {"F5", "F6", "F3"}) graphs.push_back(load_graph(f));
  graphs.push_back(std::make_shared<const graph>(chain3));
  for (auto& g : seeded(200, 555)) graphs.push_back(std::make_shared<const graph>(std::move(g)));
  std::size_t positives = 0;
  for (const auto& gp : graphs) {
    if (!every_proper_ideal_completely_irreducible(*gp).verdict) continue;
    ++positives;
    for (const auto& p : admissible_pairs(*gp)) {
      if (p.hereditary.all()) continue;
      EXPECT_TRUE(is_completely_irreducible(ideal::graded(gp, field::rationals(), p)).holds);
    }
  }
  EXPECT_GE(positives, 2u);
}
