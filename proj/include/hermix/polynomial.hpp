#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "hermix/rational.hpp"

namespace hermix {

/// Dense univariate polynomial over the rationals. coeffs()[i] is the
/// coefficient of x^i. The highest stored coefficient is never zero, so the
/// zero polynomial has no coefficients and equality is sequence equality.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
  Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

  static Polynomial constant(const Rational& c) { return Polynomial({c}); }

  /// c * x^power
  static Polynomial monomial(std::size_t power, const Rational& c = Rational(1)) {
    std::vector<Rational> v(power + 1);
    v[power] = c;
    return Polynomial(std::move(v));
  }

  std::span<const Rational> coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  bool is_zero() const { return coeffs_.empty(); }

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  Rational coefficient(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : Rational(0);
  }
  const Rational& leading() const { return coeffs_.back(); }

  Rational evaluate(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      out[i - 1] = coeffs_[i] * Rational(static_cast<std::int64_t>(i));
    return Polynomial(std::move(out));
  }

  Polynomial derivative(std::size_t order) const {
    Polynomial p = *this;
    for (std::size_t i = 0; i < order && !p.is_zero(); ++i) p = p.derivative();
    return p;
  }

  /// p(a x + b)
  Polynomial compose_affine(const Rational& a, const Rational& b) const {
    const Polynomial inner({b, a});
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * inner + constant(*it);
    return acc;
  }

  Polynomial operator-() const {
    Polynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) { return *this += -o; }

  Polynomial& operator*=(const Rational& c) {
    if (c.is_zero()) {
      coeffs_.clear();
      return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }

  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Rational> out(p.coeffs_.size() + q.coeffs_.size() - 1);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < q.coeffs_.size(); ++j) out[i + j] += p.coeffs_[i] * q.coeffs_[j];
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    os << '[';
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) os << (i ? ", " : "") << p.coeffs_[i];
    return os << ']';
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

inline Polynomial scale(const Rational& c, const Polynomial& p) { return c * p; }

}  // namespace hermix
