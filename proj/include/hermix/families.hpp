#pragma once

// Euler, Genocchi, Hermite and Bernstein polynomials together with the
// Euler and Genocchi numbers.

#include <cstddef>
#include <functional>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hermix/polynomial.hpp"
#include "hermix/rational.hpp"

namespace hermix {

enum class Family { euler, genocchi, hermite, bernstein };

inline std::string_view to_string(Family f) {
  switch (f) {
    case Family::euler: return "euler";
    case Family::genocchi: return "genocchi";
    case Family::hermite: return "hermite";
    case Family::bernstein: return "bernstein";
  }
  return "?";
}

inline Family parse_family(std::string_view s) {
  if (s == "euler") return Family::euler;
  if (s == "genocchi") return Family::genocchi;
  if (s == "hermite") return Family::hermite;
  if (s == "bernstein") return Family::bernstein;
  throw std::invalid_argument("unknown family '" + std::string(s) + "'");
}

/// Append-only memo of a sequence of polynomials indexed by degree. The
/// extender receives all entries computed so far and returns the next one.
/// Access is serialized; returned values are copies.
class FamilyTable {
 public:
  using Extender = std::function<Polynomial(std::span<const Polynomial>)>;

  explicit FamilyTable(Extender next) : next_(std::move(next)) {}

  Polynomial get(std::size_t n) {
    std::lock_guard lock(mutex_);
    while (entries_.size() <= n) entries_.push_back(next_(entries_));
    return entries_[n];
  }

  std::size_t cached() const {
    std::lock_guard lock(mutex_);
    return entries_.size();
  }

 private:
  Extender next_;
  mutable std::mutex mutex_;
  std::vector<Polynomial> entries_;
};

namespace detail {

inline void require_index(long n, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": index must be non-negative");
}

// (e^t + 1) * sum E_n(x) t^n/n! = 2 e^{xt}  =>  E_n = x^n - 1/2 sum_{k<n} C(n,k) E_k
inline Polynomial next_euler(std::span<const Polynomial> prev) {
  const auto n = static_cast<std::int64_t>(prev.size());
  Polynomial tail;
  for (std::int64_t k = 0; k < n; ++k) tail += binomial(n, k) * prev[static_cast<std::size_t>(k)];
  return Polynomial::monomial(static_cast<std::size_t>(n)) - Rational(1, 2) * tail;
}

inline Polynomial next_hermite(std::span<const Polynomial> prev) {
  const std::size_t n = prev.size();
  if (n == 0) return Polynomial::constant(1);
  const Polynomial two_x({0, 2});
  if (n == 1) return two_x;
  // H_n = 2x H_{n-1} - 2(n-1) H_{n-2}
  return two_x * prev[n - 1] - Rational(2 * static_cast<std::int64_t>(n - 1)) * prev[n - 2];
}

// d^n/dx^n e^{-x^2} = q_n(x) e^{-x^2}, q_{n+1} = q_n' - 2x q_n
inline Polynomial next_rodrigues_factor(std::span<const Polynomial> prev) {
  if (prev.empty()) return Polynomial::constant(1);
  const Polynomial& q = prev.back();
  return q.derivative() - Polynomial({0, 2}) * q;
}

inline FamilyTable& euler_table() {
  static FamilyTable table(next_euler);
  return table;
}

inline FamilyTable& hermite_table() {
  static FamilyTable table(next_hermite);
  return table;
}

inline FamilyTable& rodrigues_table() {
  static FamilyTable table(next_rodrigues_factor);
  return table;
}

}  // namespace detail

/// E_n(x), coefficient of t^n/n! in 2e^{xt}/(e^t+1).
inline Polynomial euler_poly(long n) {
  detail::require_index(n, "euler_poly");
  return detail::euler_table().get(static_cast<std::size_t>(n));
}

/// E_n = E_n(0).
inline Rational euler_number(long n) { return euler_poly(n).coefficient(0); }

/// G_n(x), coefficient of t^n/n! in 2t e^{xt}/(e^t+1). G_0 is the zero
/// polynomial; otherwise G_n(x) = n E_{n-1}(x).
inline Polynomial genocchi_poly(long n) {
  detail::require_index(n, "genocchi_poly");
  if (n == 0) return {};
  return Rational(n) * euler_poly(n - 1);
}

inline Rational genocchi_number(long n) { return genocchi_poly(n).coefficient(0); }

/// Physicists' Hermite polynomial via H_{n+1} = 2x H_n - 2n H_{n-1}.
inline Polynomial hermite_poly(long n) {
  detail::require_index(n, "hermite_poly");
  return detail::hermite_table().get(static_cast<std::size_t>(n));
}

/// q_n with d^n/dx^n e^{-x^2} = q_n(x) e^{-x^2}.
inline Polynomial rodrigues_factor(long n) {
  detail::require_index(n, "rodrigues_factor");
  return detail::rodrigues_table().get(static_cast<std::size_t>(n));
}

/// H_n through the Rodrigues form (-1)^n e^{x^2} d^n/dx^n e^{-x^2}.
inline Polynomial hermite_rodrigues(long n) { return sign_power(n) * rodrigues_factor(n); }

/// C(n,k) x^k (1-x)^{n-k}
inline Polynomial bernstein_poly(long k, long n) {
  if (k < 0 || n < 0 || k > n) throw std::invalid_argument("k must satisfy 0 <= k <= n");
  Polynomial p = Polynomial::monomial(static_cast<std::size_t>(k), binomial(n, k));
  const Polynomial one_minus_x({1, -1});
  for (long i = 0; i < n - k; ++i) p = p * one_minus_x;
  return p;
}

/// sum_k samples[k] B_{k,n}(x) with n = samples.size() - 1, where samples[k]
/// holds f(k/n).
inline Polynomial bernstein_operator(std::span<const Rational> samples) {
  if (samples.empty()) throw std::invalid_argument("bernstein_operator needs at least one sample");
  const long n = static_cast<long>(samples.size()) - 1;
  Polynomial acc;
  for (long k = 0; k <= n; ++k) acc += samples[static_cast<std::size_t>(k)] * bernstein_poly(k, n);
  return acc;
}

}  // namespace hermix
