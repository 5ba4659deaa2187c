#include <gtest/gtest.h>

#include "lpa/factor.hpp"
#include "lpa/oracle.hpp"

using namespace lpa;

namespace {

const field Q = field::rationals();
const field GF2 = field::gf(2);
const field GF3 = field::gf(3);

poly recompose(const poly& f, const std::vector<factor_term>& terms) {
  poly out = poly::constant(f.base_field(), f.leading());
  for (const auto& t : terms) out = out * pow(t.factor, t.multiplicity);
  return out;
}

// Schoolbook product with explicit reduction mod p, independent of poly.
std::vector<long long> convolve_mod(const std::vector<long long>& a, const std::vector<long long>& b, long long p) {
  std::vector<long long> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<rational> as_rationals(const std::vector<long long>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(FieldSpec, ParsesAndValidates) {
  EXPECT_EQ(field::parse("Q"), Q);
  EXPECT_EQ(field::parse("GF(7)"), field::gf(7));
  EXPECT_THROW(field::parse("GF(4)"), error);
  EXPECT_THROW(field::parse("R"), error);
  EXPECT_THROW(field::gf((1ull << 31) + 11), error);
  EXPECT_EQ(GF3.reduce(rational(1, 2)), rational(2));
  EXPECT_EQ(GF3.reduce(rational(-1)), rational(2));
}

TEST(NormalizeLaurent, StripsUnits) {
  // x^-2 + x is x^-2 (1 + x^3).
  EXPECT_EQ(normalize_laurent(poly(Q, {1, 0, 0, 1}), -2).rep(), poly(Q, {1, 0, 0, 1}));
  EXPECT_EQ(normalize_laurent(poly(Q, {3, 3})).rep(), poly(Q, {1, 1}));
  EXPECT_EQ(normalize_laurent(poly(GF2, {0, 0, 0, 1, 0, 1})).rep(), poly(GF2, {1, 0, 1}));
  EXPECT_THROW(normalize_laurent(poly(Q)), error);
}

TEST(NormalizeLaurent, InvariantUnderUnitMultiples) {
  const std::vector<poly> samples = {poly(Q, {2, -1, 5}), poly(Q, {0, 1, 1}), poly(Q, {7}), poly(Q, {-3, 0, 0, 4})};
  for (const auto& f : samples) {
    const auto base = normalize_laurent(f);
    for (int k = 0; k <= 4; ++k)
      for (const rational& alpha : {rational(1), rational(-2), rational(3, 7), rational(-5, 2)}) {
        const poly shifted = f * poly::monomial(Q, static_cast<std::size_t>(k), alpha);
        EXPECT_EQ(normalize_laurent(shifted, -k), base);
      }
  }
  for (long long a = 1; a < 3; ++a)
    for (int k = 0; k <= 3; ++k) {
      const poly f(GF3, {1, 2, 0, 1});
      EXPECT_EQ(normalize_laurent(f * poly::monomial(GF3, static_cast<std::size_t>(k), a)), normalize_laurent(f));
    }
}

TEST(PolyArithmetic, ProductOverGF2) {
  const auto expected = convolve_mod({1, 0, 1}, {1, 1, 1}, 2);
  EXPECT_EQ(poly(GF2, {1, 0, 1}) * poly(GF2, {1, 1, 1}), poly(GF2, as_rationals(expected)));
  EXPECT_EQ(poly(GF2, {1, 0, 1}) * poly(GF2, {1, 1, 1}), poly(GF2, {1, 1, 0, 1, 1}));
}

TEST(PolyArithmetic, GcdAndLcm) {
  EXPECT_EQ(gcd(poly(Q, {1, 1}), poly(Q, {1, 1})), poly(Q, {1, 1}));
  // x^2 + x + 1 has no root in GF(2), so it shares no factor with x + 1.
  const poly q(GF2, {1, 1, 1});
  EXPECT_NE(q.coeff(0), 0);
  EXPECT_NE(GF2.reduce(q.coeff(0) + q.coeff(1) + q.coeff(2)), 0);
  EXPECT_EQ(gcd(poly(GF2, {1, 1}), q), poly(GF2, {1}));

  const poly a(Q, {-1, 0, 1}), b(Q, {1, 2, 1});
  const poly g = gcd(a, b), l = lcm(a, b);
  EXPECT_EQ(g, poly(Q, {1, 1}));
  EXPECT_TRUE(divides(g, a));
  EXPECT_TRUE(divides(g, b));
  EXPECT_EQ((g * l).monic(), (a * b).monic());
  EXPECT_THROW(poly(Q, {1}) * poly(GF2, {1}), error);
  EXPECT_THROW(gcd(poly(Q, {1}), poly(GF3, {1})), error);
}

TEST(PolyArithmetic, DividesMatchesGcd) {
  const std::vector<poly> ps = {poly(Q, {1, 1}), poly(Q, {-1, 0, 1}), poly(Q, {1, 2, 1}), poly(Q, {2, 0, 1}),
                                poly(Q, {0, 1}), poly(Q, {1, 1, 1, 1})};
  for (const auto& f : ps)
    for (const auto& g : ps) EXPECT_EQ(divides(g, f), gcd(f, g) == g.monic()) << f.to_string() << " " << g.to_string();
}

TEST(Factor, Examples) {
  const auto t = factor(poly(GF2, {1, 1, 0, 1, 1}));
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[0], (factor_term{poly(GF2, {1, 1}), 2}));
  EXPECT_EQ(t[1], (factor_term{poly(GF2, {1, 1, 1}), 1}));

  const auto s = factor(poly(Q, {1, 2, 1}));
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0], (factor_term{poly(Q, {1, 1}), 2}));

  // x^2 + 1 over GF(3): values at 0, 1, 2 are 1, 2, 2.
  const poly f(GF3, {1, 0, 1});
  for (long long x = 0; x < 3; ++x) EXPECT_NE((1 + x * x) % 3, 0);
  const auto u = factor(f);
  ASSERT_EQ(u.size(), 1u);
  EXPECT_EQ(u[0], (factor_term{f, 1}));
}

TEST(Factor, RationalRecomposition) {
  // x^4 + 4 = (x^2 + 2x + 2)(x^2 - 2x + 2).
  const poly a(Q, {2, 2, 1}), b(Q, {2, -2, 1});
  EXPECT_EQ(a * b, poly(Q, {4, 0, 0, 0, 1}));
  const auto t = factor(poly(Q, {4, 0, 0, 0, 1}));
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(recompose(poly(Q, {4, 0, 0, 0, 1}), t), poly(Q, {4, 0, 0, 0, 1}));

  const poly g = poly(Q, {1, 0, 1}) * poly(Q, {-2, 0, 0, 1}) * pow(poly(Q, {3, 1}), 2) * poly(Q, {rational(1, 2)});
  const auto terms = factor(g);
  EXPECT_EQ(recompose(g, terms), g);
  ASSERT_EQ(terms.size(), 3u);
  EXPECT_EQ(terms[0], (factor_term{poly(Q, {3, 1}), 2}));
  EXPECT_EQ(terms[1], (factor_term{poly(Q, {1, 0, 1}), 1}));
  EXPECT_EQ(terms[2], (factor_term{poly(Q, {-2, 0, 0, 1}), 1}));
}

TEST(Factor, RationalDegreeBound) {
  std::vector<rational> c(14, 0);
  c[0] = 1;
  c[13] = 1;
  EXPECT_THROW(
      {
        try {
          factor(poly(Q, c));
        } catch (const error& e) {
          EXPECT_EQ(e.kind(), error_kind::degree_too_large);
          throw;
        }
      },
      error);
}

TEST(Factor, AgreesWithTrialDivisionOverPrimeFields) {
  for (const auto& [k, max_deg] : {std::pair{GF2, 7}, std::pair{GF3, 4}, std::pair{field::gf(5), 3}}) {
    const long long p = static_cast<long long>(k.characteristic());
    for (int d = 1; d <= max_deg; ++d) {
      std::vector<long long> c(static_cast<std::size_t>(d), 0);
      c[0] = 1;
      while (true) {
        std::vector<rational> coeffs(c.begin(), c.end());
        coeffs.emplace_back(1);
        const poly f(k, coeffs);
        const auto terms = factor(f);
        EXPECT_EQ(recompose(f, terms), f) << f.to_string();
        for (const auto& t : terms) EXPECT_TRUE(oracle::irreducible_bruteforce(t.factor)) << t.factor.to_string();
        EXPECT_EQ(is_irreducible(f), oracle::irreducible_bruteforce(f)) << f.to_string();
        std::size_t i = 0;
        for (; i < c.size(); ++i) {
          if (++c[i] < p) break;
          c[i] = i == 0 ? 1 : 0;
        }
        if (i == c.size()) break;
      }
    }
  }
}

TEST(Factor, RationalIrreducibilityByRootTest) {
  // Degree <= 3 over Q: irreducible iff no rational root, and roots p/q of
  // a primitive integer polynomial have p | a0 and q | an.
  auto has_rational_root = [](const std::vector<long long>& c) {
    for (long long num = -12; num <= 12; ++num)
      for (long long den = 1; den <= 4; ++den) {
        rational x(num, den), v = 0;
        for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
        if (v == 0) return true;
      }
    return false;
  };
  for (long long a = -3; a <= 3; ++a)
    for (long long b = -3; b <= 3; ++b)
      for (long long c0 : {-6, -2, -1, 1, 3, 4}) {
        const std::vector<long long> co{c0, b, a, 1};
        const poly f(Q, std::vector<rational>(co.begin(), co.end()));
        EXPECT_EQ(is_irreducible(f), !has_rational_root(co)) << f.to_string();
        EXPECT_EQ(recompose(f, factor(f)), f);
      }
}

TEST(IrreducibleLaurent, Examples) {
  EXPECT_TRUE(is_irreducible_laurent(normalize_laurent(poly(Q, {1, 1}))));
  EXPECT_FALSE(is_irreducible_laurent(normalize_laurent(poly(Q, {1, 2, 1}))));
  EXPECT_TRUE(is_irreducible_laurent(normalize_laurent(poly(GF2, {1, 1, 1}))));
  EXPECT_FALSE(is_irreducible_laurent(normalize_laurent(poly(Q, {5}))));
  // x (x + 1) is the unit x times x + 1.
  EXPECT_TRUE(is_irreducible_laurent(normalize_laurent(poly(Q, {0, 1, 1}))));
}
