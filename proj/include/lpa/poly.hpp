#pragma once

#include <algorithm>
#include <compare>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lpa/error.hpp"
#include "lpa/field.hpp"

namespace lpa {

/// Dense univariate polynomial over a field; coeffs()[i] is the coefficient
/// of x^i. The coefficient list is trimmed, so the zero polynomial has no
/// coefficients and degree -1.
class poly {
 public:
  explicit poly(field f) : field_(f) {}

  poly(field f, std::vector<rational> coeffs) : field_(f), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c = field_.reduce(c);
    trim();
  }

  poly(field f, std::initializer_list<long long> coeffs) : field_(f) {
    for (auto c : coeffs) coeffs_.push_back(field_.reduce(rational(c)));
    trim();
  }

  static poly constant(field f, const rational& c) { return poly(f, std::vector<rational>{c}); }

  static poly monomial(field f, std::size_t degree, const rational& c = 1) {
    std::vector<rational> v(degree + 1);
    v[degree] = c;
    return poly(f, std::move(v));
  }

  const field& base_field() const noexcept { return field_; }
  const std::vector<rational>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : rational(0); }
  const rational& leading() const { return coeffs_.back(); }
  rational constant_term() const { return coeff(0); }

  poly operator-() const {
    std::vector<rational> v(coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_.neg(coeffs_[i]);
    return poly(field_, std::move(v));
  }

  friend poly operator+(const poly& a, const poly& b) {
    a.check_field(b);
    std::vector<rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.field_.add(a.coeff(i), b.coeff(i));
    return poly(a.field_, std::move(v));
  }

  friend poly operator-(const poly& a, const poly& b) { return a + (-b); }

  friend poly operator*(const poly& a, const poly& b) {
    a.check_field(b);
    if (a.is_zero() || b.is_zero()) return poly(a.field_);
    std::vector<rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return poly(a.field_, std::move(v));
  }

  poly scaled(const rational& c) const {
    std::vector<rational> v(coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_.mul(coeffs_[i], c);
    return poly(field_, std::move(v));
  }

  poly monic() const {
    if (is_zero()) return *this;
    return scaled(field_.inv(leading()));
  }

  friend bool operator==(const poly& a, const poly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

  /// Degree first, then coefficients from the constant term upwards.
  friend std::strong_ordering operator<=>(const poly& a, const poly& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() <=> b.coeffs_.size();
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] < b.coeffs_[i]) return std::strong_ordering::less;
      if (b.coeffs_[i] < a.coeffs_[i]) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      const rational& c = coeffs_[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      if (!first) out << " + ";
      first = false;
      if (i == 0 || c != 1) out << (c < 0 ? "(" : "") << c << (c < 0 ? ")" : "");
      if (i >= 1) out << "x";
      if (i >= 2) out << "^" << i;
    }
    return out.str();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  void check_field(const poly& other) const {
    ensure(field_ == other.field_, error_kind::field_mismatch,
           "polynomials over " + field_.name() + " and " + other.field_.name());
  }

  field field_;
  std::vector<rational> coeffs_;
};

inline std::pair<poly, poly> divmod(const poly& a, const poly& b) {
  ensure(b.base_field() == a.base_field(), error_kind::field_mismatch, "divmod across fields");
  ensure(!b.is_zero(), error_kind::zero_polynomial, "division by the zero polynomial");
  const field& k = a.base_field();
  std::vector<rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {poly(k), a};
  std::vector<rational> quo(static_cast<std::size_t>(a.degree() - db + 1));
  const rational lead_inv = k.inv(b.leading());
  for (int i = a.degree(); i >= db; --i) {
    const rational c = k.mul(rem[static_cast<std::size_t>(i)], lead_inv);
    quo[static_cast<std::size_t>(i - db)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) {
      auto& r = rem[static_cast<std::size_t>(i - db + j)];
      r = k.sub(r, k.mul(c, b.coeffs()[static_cast<std::size_t>(j)]));
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {poly(k, std::move(quo)), poly(k, std::move(rem))};
}

inline poly pow(const poly& base, unsigned n) {
  poly result = poly::constant(base.base_field(), 1);
  for (unsigned i = 0; i < n; ++i) result = result * base;
  return result;
}

/// True iff g divides f. Zero divides only zero.
inline bool divides(const poly& g, const poly& f) {
  if (g.is_zero()) return f.is_zero();
  return divmod(f, g).second.is_zero();
}

/// Monic gcd; gcd(0, 0) = 0.
inline poly gcd(poly a, poly b) {
  ensure(a.base_field() == b.base_field(), error_kind::field_mismatch, "gcd across fields");
  while (!b.is_zero()) {
    poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Monic lcm; zero if either input is zero.
inline poly lcm(const poly& a, const poly& b) {
  if (a.is_zero() || b.is_zero()) return poly(a.base_field());
  return divmod(a * b, gcd(a, b)).first.monic();
}

/// Unit class of a nonzero element of K[x, x^-1], stored as its monic
/// representative in K[x] with nonzero constant term.
class laurent_class {
 public:
  const poly& rep() const noexcept { return rep_; }
  int degree() const noexcept { return rep_.degree(); }
  bool is_unit() const noexcept { return rep_.degree() == 0; }

  friend bool operator==(const laurent_class&, const laurent_class&) = default;
  friend auto operator<=>(const laurent_class& a, const laurent_class& b) { return a.rep_ <=> b.rep_; }

 private:
  explicit laurent_class(poly p) : rep_(std::move(p)) {}
  friend laurent_class normalize_laurent(const poly& f, long long shift);

  poly rep_;
};

/// Normal form of x^shift * f in K[x, x^-1]. The shift only moves f by a
/// unit, so it never changes the result.
inline laurent_class normalize_laurent(const poly& f, long long shift = 0) {
  (void)shift;
  ensure(!f.is_zero(), error_kind::zero_polynomial, "cannot normalize the zero polynomial");
  std::size_t low = 0;
  while (f.coeffs()[low] == 0) ++low;
  std::vector<rational> c(f.coeffs().begin() + static_cast<std::ptrdiff_t>(low), f.coeffs().end());
  return laurent_class(poly(f.base_field(), std::move(c)).monic());
}

}  // namespace lpa
