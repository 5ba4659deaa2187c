#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "lpa/poly.hpp"

namespace lpa {

struct factor_term {
  poly factor;  // monic irreducible
  unsigned multiplicity;

  friend bool operator==(const factor_term&, const factor_term&) = default;
};

struct factor_options {
  /// Inputs over Q above this degree are rejected with DegreeTooLarge.
  int kronecker_degree_bound = 12;
  /// Upper bound on the number of trial divisors examined over GF(p).
  std::uint64_t trial_division_budget = std::uint64_t{1} << 26;
};

namespace detail {

// ---------------------------------------------------------------------------
// GF(p): trial division by enumerated monic polynomials of increasing degree.
// The first divisor found at each degree is irreducible because every
// smaller factor has already been divided out.

using fp_poly = std::vector<std::int64_t>;

inline void fp_trim(fp_poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

/// Divides a by the monic polynomial b in place when the division is exact.
inline bool fp_try_divide_monic(fp_poly& a, const fp_poly& b, std::int64_t p) {
  if (a.size() < b.size()) return false;
  fp_poly rem = a;
  const std::size_t db = b.size() - 1;
  fp_poly quo(a.size() - db);
  for (std::size_t i = a.size(); i-- > db;) {
    const std::int64_t c = rem[i];
    quo[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) {
      auto& r = rem[i - db + j];
      r = (r - c * b[j]) % p;
      if (r < 0) r += p;
    }
  }
  for (std::size_t i = 0; i < db; ++i)
    if (rem[i] != 0) return false;
  fp_trim(quo);
  a = std::move(quo);
  return true;
}

inline std::vector<factor_term> factor_prime_field(const poly& f, const factor_options& opts) {
  const field& k = f.base_field();
  const auto p = static_cast<std::int64_t>(k.characteristic());
  fp_poly a;
  const poly m = f.monic();
  for (const auto& c : m.coeffs()) a.push_back(integer(boost::multiprecision::numerator(c)).convert_to<std::int64_t>());

  std::vector<factor_term> out;
  auto to_poly = [&](const fp_poly& v) {
    std::vector<rational> c(v.begin(), v.end());
    return poly(k, std::move(c));
  };

  unsigned x_power = 0;
  while (a.size() > 1 && a[0] == 0) {
    a.erase(a.begin());
    ++x_power;
  }
  if (x_power > 0) out.push_back({poly::monomial(k, 1), x_power});

  std::uint64_t examined = 0;
  for (std::size_t d = 1; 2 * d + 1 <= a.size(); ++d) {
    // Enumerate monic degree-d candidates with nonzero constant term.
    fp_poly g(d + 1, 0);
    g[d] = 1;
    g[0] = 1;
    while (true) {
      ensure(++examined <= opts.trial_division_budget, error_kind::too_large,
             "trial division budget exhausted factoring over " + k.name());
      unsigned mult = 0;
      while (fp_try_divide_monic(a, g, p)) ++mult;
      if (mult > 0) out.push_back({to_poly(g), mult});
      if (2 * d + 1 > a.size()) break;
      // Odometer increment over coefficients 0..d-1; constant term skips 0.
      std::size_t i = 0;
      for (; i < d; ++i) {
        if (++g[i] < p) break;
        g[i] = (i == 0) ? 1 : 0;
      }
      if (i == d) break;
    }
  }
  if (a.size() > 1) {
    const poly rest = to_poly(a);
    auto it = std::find_if(out.begin(), out.end(), [&](const factor_term& t) { return t.factor == rest; });
    if (it != out.end())
      ++it->multiplicity;
    else
      out.push_back({rest, 1});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Q: Kronecker's interpolation method on the primitive integer associate.

using z_poly = std::vector<integer>;

inline integer z_eval(const z_poly& f, const integer& x) {
  integer r = 0;
  for (std::size_t i = f.size(); i-- > 0;) r = r * x + f[i];
  return r;
}

inline std::optional<z_poly> z_exact_divide(const z_poly& a, const z_poly& b) {
  if (a.size() < b.size()) return std::nullopt;
  z_poly rem = a;
  const std::size_t db = b.size() - 1;
  z_poly quo(a.size() - db);
  for (std::size_t i = a.size(); i-- > db;) {
    if (rem[i] % b[db] != 0) return std::nullopt;
    const integer c = rem[i] / b[db];
    quo[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= c * b[j];
  }
  for (std::size_t i = 0; i < db; ++i)
    if (rem[i] != 0) return std::nullopt;
  return quo;
}

inline std::vector<integer> positive_divisors(integer n) {
  if (n < 0) n = -n;
  std::vector<integer> small, large;
  for (integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline z_poly primitive_part(const std::vector<rational>& coeffs) {
  integer den = 1;
  for (const auto& c : coeffs) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(c));
  z_poly z;
  for (const auto& c : coeffs) z.push_back(boost::multiprecision::numerator(c) * (den / boost::multiprecision::denominator(c)));
  integer content = 0;
  for (const auto& c : z) content = boost::multiprecision::gcd(content, c);
  if (z.back() < 0) content = -content;
  for (auto& c : z) c /= content;
  return z;
}

/// Searches for a factor of F of exact degree d. Returns it primitive with
/// positive leading coefficient.
inline std::optional<z_poly> kronecker_find_factor(const z_poly& F, std::size_t d) {
  // Sample points, preferring values with few divisors.
  struct sample {
    integer x, value;
    std::vector<integer> divisors;
  };
  std::vector<sample> pool;
  for (long long step = 0; pool.size() < d + 1 + 6 && step < 200; ++step) {
    const integer x = (step % 2 == 0) ? integer(step / 2) : integer(-(step + 1) / 2);
    const integer v = z_eval(F, x);
    if (v == 0) return z_poly{-x, 1};
    pool.push_back({x, v, positive_divisors(v)});
  }
  std::stable_sort(pool.begin(), pool.end(),
                   [](const sample& a, const sample& b) { return a.divisors.size() < b.divisors.size(); });
  pool.resize(d + 1);

  // Lagrange basis polynomials over Q for the chosen points.
  std::vector<std::vector<rational>> basis(d + 1, std::vector<rational>(d + 1));
  for (std::size_t i = 0; i <= d; ++i) {
    std::vector<rational> num{1};
    rational den = 1;
    for (std::size_t j = 0; j <= d; ++j) {
      if (j == i) continue;
      std::vector<rational> next(num.size() + 1);
      for (std::size_t t = 0; t < num.size(); ++t) {
        next[t + 1] += num[t];
        next[t] -= num[t] * rational(pool[j].x);
      }
      num = std::move(next);
      den *= rational(pool[i].x - pool[j].x);
    }
    for (std::size_t t = 0; t <= d; ++t) basis[i][t] = num[t] / den;
  }

  const integer lead = F.back();
  std::vector<std::size_t> idx(d + 1, 0);
  std::vector<int> sign(d + 1, 1);
  while (true) {
    std::vector<rational> g(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
      const rational b = rational(pool[i].divisors[idx[i]] * sign[i]);
      for (std::size_t t = 0; t <= d; ++t) g[t] += b * basis[i][t];
    }
    bool integral = g[d] != 0;
    for (std::size_t t = 0; integral && t <= d; ++t)
      integral = boost::multiprecision::denominator(g[t]) == 1;
    if (integral) {
      z_poly zg;
      for (const auto& c : g) zg.push_back(boost::multiprecision::numerator(c));
      if (zg.back() < 0)
        for (auto& c : zg) c = -c;
      if (lead % zg.back() == 0 && z_exact_divide(F, zg)) return zg;
    }
    // Advance: the first sample only takes positive divisors, since g and
    // -g are associates.
    std::size_t i = 0;
    for (; i <= d; ++i) {
      if (++idx[i] < pool[i].divisors.size()) break;
      idx[i] = 0;
      if (i > 0 && sign[i] == 1) {
        sign[i] = -1;
        break;
      }
      sign[i] = 1;
    }
    if (i > d) return std::nullopt;
  }
}

inline std::vector<factor_term> factor_rationals(const poly& f, const factor_options& opts) {
  ensure(f.degree() <= opts.kronecker_degree_bound, error_kind::degree_too_large,
         "degree " + std::to_string(f.degree()) + " exceeds the Kronecker bound " +
             std::to_string(opts.kronecker_degree_bound));
  const field k = f.base_field();
  z_poly F = primitive_part(f.coeffs());
  std::vector<z_poly> found;
  while (F.size() > 1 && F[0] == 0) {
    F.erase(F.begin());
    found.push_back({0, 1});
  }
  for (std::size_t d = 1; 2 * d + 1 <= F.size(); ++d) {
    while (2 * d + 1 <= F.size()) {
      auto g = kronecker_find_factor(F, d);
      if (!g) break;
      F = *z_exact_divide(F, *g);
      found.push_back(std::move(*g));
    }
  }
  if (F.size() > 1) found.push_back(F);

  std::vector<factor_term> out;
  for (const auto& z : found) {
    std::vector<rational> c(z.begin(), z.end());
    poly m = poly(k, std::move(c)).monic();
    auto it = std::find_if(out.begin(), out.end(), [&](const factor_term& t) { return t.factor == m; });
    if (it != out.end())
      ++it->multiplicity;
    else
      out.push_back({std::move(m), 1});
  }
  return out;
}

}  // namespace detail

/// Irreducible factorization. The product of factor^multiplicity times the
/// leading coefficient of f reproduces f. Terms are sorted by (degree,
/// coefficients).
inline std::vector<factor_term> factor(const poly& f, const factor_options& opts = {}) {
  ensure(!f.is_zero(), error_kind::zero_polynomial, "cannot factor the zero polynomial");
  ensure(f.degree() >= 1, error_kind::invalid_input, "cannot factor a constant");
  auto out = f.base_field().is_prime_field() ? detail::factor_prime_field(f, opts)
                                             : detail::factor_rationals(f, opts);
  std::sort(out.begin(), out.end(), [](const factor_term& a, const factor_term& b) { return a.factor < b.factor; });
  return out;
}

inline bool is_irreducible(const poly& f, const factor_options& opts = {}) {
  if (f.degree() < 1) return false;
  const auto terms = factor(f, opts);
  return terms.size() == 1 && terms.front().multiplicity == 1;
}

inline bool is_irreducible_laurent(const laurent_class& f, const factor_options& opts = {}) {
  return is_irreducible(f.rep(), opts);
}

}  // namespace lpa
