#pragma once

// Integrals over the real line against the weight e^{-x^2}. Every such
// integral of a rational polynomial is a rational multiple of sqrt(pi), so
// values are carried as that rational coefficient.

#include <ostream>

#include "hermix/families.hpp"
#include "hermix/polynomial.hpp"
#include "hermix/rational.hpp"

namespace hermix {

/// coeff * sqrt(pi)
struct GaussSqrtPi {
  Rational coeff;

  GaussSqrtPi& operator+=(const GaussSqrtPi& o) {
    coeff += o.coeff;
    return *this;
  }
  friend GaussSqrtPi operator+(GaussSqrtPi a, const GaussSqrtPi& b) { return a += b; }
  friend GaussSqrtPi operator*(const Rational& c, const GaussSqrtPi& v) { return {c * v.coeff}; }
  friend bool operator==(const GaussSqrtPi&, const GaussSqrtPi&) = default;

  friend std::ostream& operator<<(std::ostream& os, const GaussSqrtPi& v) {
    return os << v.coeff << "*sqrt(pi)";
  }
};

/// int e^{-x^2} x^l dx: zero for odd l, l! / (2^l (l/2)!) sqrt(pi) for even l.
inline GaussSqrtPi moment(long l) {
  if (l < 0) throw std::invalid_argument("moment: order must be non-negative");
  if (l % 2 != 0) return {};
  return {factorial(l) / (pow2(l) * factorial(l / 2))};
}

inline GaussSqrtPi integral_of_poly(const Polynomial& p) {
  GaussSqrtPi acc;
  const auto c = p.coeffs();
  // odd moments vanish
  for (std::size_t i = 0; i < c.size(); i += 2) acc += c[i] * moment(static_cast<long>(i));
  return acc;
}

/// int (d^n/dx^n e^{-x^2}) p(x) dx, evaluated as the weighted integral of
/// q_n p where q_n is the Rodrigues factor.
inline GaussSqrtPi derivative_kernel_integral(long n, const Polynomial& p) {
  if (p.is_zero()) return {};
  return integral_of_poly(rodrigues_factor(n) * p);
}

/// <p, q> = int e^{-x^2} p(x) q(x) dx
inline GaussSqrtPi inner_product(const Polynomial& p, const Polynomial& q) {
  return integral_of_poly(p * q);
}

}  // namespace hermix
