#pragma once

// Exact rational scalars and the combinatorial helpers built on them.

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace hermix {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational kept in lowest terms with a positive
/// denominator. Zero is always 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& value) : value_(value) {}

  Rational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) throw std::domain_error("rational with zero denominator");
    if (denominator < 0)
      value_ = Backing(BigInt(-numerator), BigInt(-denominator));
    else
      value_ = Backing(numerator, denominator);
  }

  /// Parses an optionally signed integer or "a/b" with a nonzero
  /// denominator. Surrounding whitespace is ignored.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_.sign(); }

  /// Always "numerator/denominator", e.g. "-3/4", "0/1", "5/1".
  std::string to_string() const {
    return numerator().str() + "/" + denominator().str();
  }

  Rational operator-() const { return Rational(Backing(-value_)); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = a.value_.compare(b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  using Backing = boost::multiprecision::cpp_rational;
  explicit Rational(Backing v) : value_(std::move(v)) {}

  Backing value_;
};

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

inline std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace detail

inline Rational Rational::parse(std::string_view text) {
  const std::string_view body = detail::trim(text);
  const auto fail = [&]() -> Rational {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  };
  std::string_view num = body;
  std::string_view den = "1";
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    num = detail::trim(body.substr(0, slash));
    den = detail::trim(body.substr(slash + 1));
  }
  bool negative = false;
  if (!num.empty() && (num.front() == '+' || num.front() == '-')) {
    negative = num.front() == '-';
    num.remove_prefix(1);
  }
  if (!detail::all_digits(num) || !detail::all_digits(den)) return fail();
  BigInt n{std::string(num)};
  BigInt d{std::string(den)};
  if (d == 0) return fail();
  if (negative) n = -n;
  return Rational(n, d);
}

/// Exact n!. Negative arguments are rejected.
inline Rational factorial(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("factorial of negative integer");
  BigInt acc = 1;
  for (std::int64_t i = 2; i <= n; ++i) acc *= i;
  return Rational(acc);
}

/// Exact C(n, k); zero when k lies outside [0, n].
inline Rational binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::invalid_argument("binomial with negative n");
  if (k < 0 || k > n) return Rational(0);
  if (k > n - k) k = n - k;
  BigInt acc = 1;
  // Each partial product C(n-k+i, i) is an integer, so the division is exact.
  for (std::int64_t i = 1; i <= k; ++i) {
    acc *= n - k + i;
    acc /= i;
  }
  return Rational(acc);
}

/// j (j-1) ... (j-k+1); zero when k > j.
inline Rational falling_factorial(std::int64_t j, std::int64_t k) {
  if (j < 0 || k < 0) throw std::invalid_argument("falling factorial with negative argument");
  if (k > j) return Rational(0);
  BigInt acc = 1;
  for (std::int64_t i = 0; i < k; ++i) acc *= j - i;
  return Rational(acc);
}

inline Rational pow2(std::int64_t e) {
  if (e < 0) throw std::invalid_argument("negative power of two");
  BigInt one = 1;
  return Rational(BigInt(one << static_cast<unsigned>(e)));
}

inline Rational sign_power(std::int64_t e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

}  // namespace hermix
