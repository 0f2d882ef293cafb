#pragma once

// Hermite-basis expansions: the projection p = sum_k C_k H_k computed from
// exact inner products, and closed-form coefficient formulas for Genocchi,
// Bernstein and Euler-sum polynomials that are checked against it.

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hermix/families.hpp"
#include "hermix/gaussian.hpp"
#include "hermix/polynomial.hpp"
#include "hermix/rational.hpp"

namespace hermix {

/// coeffs[k] is the coefficient of H_k.
struct HermiteExpansion {
  std::vector<Rational> coeffs;

  Rational coefficient(std::size_t k) const { return k < coeffs.size() ? coeffs[k] : Rational(0); }

  Polynomial reconstruct() const {
    Polynomial acc;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      if (!coeffs[k].is_zero()) acc += coeffs[k] * hermite_poly(static_cast<long>(k));
    return acc;
  }

  friend bool operator==(const HermiteExpansion&, const HermiteExpansion&) = default;

  friend std::ostream& operator<<(std::ostream& os, const HermiteExpansion& e) {
    os << "H[";
    for (std::size_t k = 0; k < e.coeffs.size(); ++k) os << (k ? ", " : "") << e.coeffs[k];
    return os << ']';
  }
};

/// C_k = <p, H_k> / (2^k k! sqrt(pi)) for k = 0..deg p. The zero polynomial
/// expands to an empty coefficient list.
inline HermiteExpansion expand(const Polynomial& p) {
  HermiteExpansion out;
  for (long k = 0; k <= p.degree(); ++k) {
    const GaussSqrtPi ip = inner_product(p, hermite_poly(k));
    out.coeffs.push_back(ip.coeff / (pow2(k) * factorial(k)));
  }
  return out;
}

/// Closed form for G_n(x):
///   C_k = n!/(2^k k!) sum_{0<=l<=n-k, l even} G_{n-k-l} / ((n-k-l)! 2^l (l/2)!)
inline HermiteExpansion theorem1_coeffs(long n) {
  if (n < 0) throw std::invalid_argument("theorem1_coeffs: n must be non-negative");
  HermiteExpansion out;
  const Rational n_fact = factorial(n);
  for (long k = 0; k <= n; ++k) {
    Rational inner;
    for (long l = 0; l <= n - k; l += 2) {
      const long r = n - k - l;
      inner += genocchi_number(r) / (factorial(r) * pow2(l) * factorial(l / 2));
    }
    out.coeffs.push_back(n_fact / (pow2(k) * factorial(k)) * inner);
  }
  return out;
}

/// Closed form for B_{l,n}(x):
///   C_k = n!/k! sum_j C(l+j, l) (-1)^j / ((n-l-j)! 2^{l+j} ((l+j-k)/2)!)
/// over 0 <= j <= n-l with l+j-k even and non-negative. Terms with
/// l+j < k have no defined half-factorial and are left out; the integral
/// they come from is zero.
inline HermiteExpansion theorem2_coeffs(long l, long n) {
  if (l < 0 || n < 0 || l > n) throw std::invalid_argument("theorem2_coeffs: need 0 <= l <= n");
  HermiteExpansion out;
  const Rational n_fact = factorial(n);
  for (long k = 0; k <= n; ++k) {
    Rational inner;
    for (long j = 0; j <= n - l; ++j) {
      const long excess = l + j - k;
      if (excess < 0 || excess % 2 != 0) continue;
      inner += binomial(l + j, l) * sign_power(j) /
               (factorial(n - l - j) * pow2(l + j) * factorial(excess / 2));
    }
    out.coeffs.push_back(n_fact / factorial(k) * inner);
  }
  return out;
}

/// sum_{k=0}^{n} E_k(x) x^{n-k}
inline Polynomial kim_sum_poly(long n) {
  if (n < 0) throw std::invalid_argument("kim_sum_poly: n must be non-negative");
  Polynomial acc;
  for (long k = 0; k <= n; ++k)
    acc += euler_poly(k) * Polynomial::monomial(static_cast<std::size_t>(n - k));
  return acc;
}

namespace detail {

// {-sum_{l=j}^{n-1} E_{l-j} + 2}
inline Rational kim_weight(long n, long j) {
  Rational s;
  for (long l = j; l <= n - 1; ++l) s += euler_number(l - j);
  return Rational(2) - s;
}

}  // namespace detail

/// (1/2) sum_{j=0}^{n-1} C(n+1,j) {-sum_{l=j}^{n-1} E_{l-j} + 2} E_j(x) + (n+1) E_n(x)
inline Polynomial kim_identity_rhs(long n) {
  if (n < 1) throw std::invalid_argument("kim_identity_rhs: n must be positive");
  Polynomial acc;
  for (long j = 0; j <= n - 1; ++j)
    acc += Rational(1, 2) * binomial(n + 1, j) * detail::kim_weight(n, j) * euler_poly(j);
  acc += Rational(n + 1) * euler_poly(n);
  return acc;
}

/// Whether the second sum of the Euler-sum closed form carries the printed
/// (-1)^{n+k} sign (verbatim) or drops it (corrected).
enum class Variant { verbatim, corrected };

inline std::string_view to_string(Variant v) {
  return v == Variant::verbatim ? "verbatim" : "corrected";
}

inline Variant parse_variant(std::string_view s) {
  if (s == "verbatim") return Variant::verbatim;
  if (s == "corrected") return Variant::corrected;
  throw std::invalid_argument("unknown variant '" + std::string(s) + "'");
}

/// Closed form for sum_k E_k(x) x^{n-k}. Coefficient of H_k is term1 + term2:
///   term1 = 1/2 sum_{j<n} C(n+1,j) w_j (j)_k sum_{m even <= j-k} C(j-k,m) E_{j-k-m} m!/(2^{m+k} k! (m/2)!)
///   term2 = (n+1) [(-1)^{n+k}] sum_{s even <= n-k} C(n,k) C(n-k,s) E_{n-k-s} s!/(2^{s+k} (s/2)!)
/// where w_j is the Kim weight and (j)_k the falling factorial (zero for j < k).
inline HermiteExpansion theorem3_coeffs(long n, Variant variant) {
  if (n < 1) throw std::invalid_argument("theorem3_coeffs: n must be positive");
  HermiteExpansion out;
  for (long k = 0; k <= n; ++k) {
    Rational term1;
    for (long j = k; j <= n - 1; ++j) {
      Rational inner;
      for (long m = 0; m <= j - k; m += 2)
        inner += binomial(j - k, m) * euler_number(j - k - m) * factorial(m) /
                 (pow2(m + k) * factorial(k) * factorial(m / 2));
      term1 += binomial(n + 1, j) * detail::kim_weight(n, j) * falling_factorial(j, k) * inner;
    }
    term1 *= Rational(1, 2);

    Rational term2;
    for (long s = 0; s <= n - k; s += 2)
      term2 += binomial(n, k) * binomial(n - k, s) * euler_number(n - k - s) * factorial(s) /
               (pow2(s + k) * factorial(s / 2));
    term2 *= Rational(n + 1);
    if (variant == Variant::verbatim) term2 *= sign_power(n + k);

    out.coeffs.push_back(term1 + term2);
  }
  return out;
}

}  // namespace hermix
