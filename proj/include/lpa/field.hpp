#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "lpa/error.hpp"

namespace lpa {

using integer = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

namespace detail {

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  if (new_r < 0) new_r += p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) fail(error_kind::invalid_input, "element is not invertible modulo " + std::to_string(p));
  return t < 0 ? t + p : t;
}

}  // namespace detail

/// Coefficient field: the rationals or GF(p) for a prime p <= 2^31.
/// Scalars of either field are carried as exact rationals; over GF(p) they
/// are always integers in [0, p).
class field {
 public:
  enum class kind_t { rationals, prime_field };

  static field rationals() { return field(kind_t::rationals, 0); }

  static field gf(std::uint64_t p) {
    ensure(p <= (std::uint64_t{1} << 31), error_kind::invalid_input,
           "characteristic " + std::to_string(p) + " exceeds 2^31");
    ensure(detail::is_prime_u64(p), error_kind::invalid_input,
           "characteristic " + std::to_string(p) + " is not prime");
    return field(kind_t::prime_field, p);
  }

  /// Accepts "Q" or "GF(p)".
  static field parse(const std::string& text) {
    if (text == "Q") return rationals();
    if (text.size() > 4 && text.rfind("GF(", 0) == 0 && text.back() == ')') {
      const std::string digits = text.substr(3, text.size() - 4);
      ensure(!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos &&
                 digits.size() <= 10,
             error_kind::invalid_input, "bad field literal '" + text + "'");
      return gf(std::stoull(digits));
    }
    fail(error_kind::invalid_input, "bad field literal '" + text + "' (expected Q or GF(p))");
  }

  kind_t kind() const noexcept { return kind_; }
  bool is_prime_field() const noexcept { return kind_ == kind_t::prime_field; }
  std::uint64_t characteristic() const noexcept { return p_; }

  std::string name() const {
    return is_prime_field() ? "GF(" + std::to_string(p_) + ")" : std::string("Q");
  }

  rational reduce(const rational& x) const {
    if (!is_prime_field()) return x;
    const integer p(p_);
    integer num = boost::multiprecision::numerator(x) % p;
    integer den = boost::multiprecision::denominator(x) % p;
    if (num < 0) num += p;
    ensure(den != 0, error_kind::invalid_input, "denominator vanishes in " + name());
    const auto inv = detail::mod_inverse(static_cast<std::int64_t>(den), static_cast<std::int64_t>(p_));
    integer r = (num * inv) % p;
    return rational(r);
  }

  rational add(const rational& a, const rational& b) const { return reduce(a + b); }
  rational sub(const rational& a, const rational& b) const { return reduce(a - b); }
  rational mul(const rational& a, const rational& b) const { return reduce(a * b); }
  rational neg(const rational& a) const { return reduce(-a); }

  rational inv(const rational& a) const {
    ensure(a != 0, error_kind::invalid_input, "division by zero in " + name());
    if (!is_prime_field()) return 1 / a;
    const auto v = integer(boost::multiprecision::numerator(a)).convert_to<std::int64_t>();
    return rational(detail::mod_inverse(v, static_cast<std::int64_t>(p_)));
  }

  rational div(const rational& a, const rational& b) const { return mul(a, inv(b)); }

  friend bool operator==(const field& a, const field& b) { return a.kind_ == b.kind_ && a.p_ == b.p_; }

 private:
  field(kind_t k, std::uint64_t p) : kind_(k), p_(p) {}

  kind_t kind_;
  std::uint64_t p_;
};

}  // namespace lpa
