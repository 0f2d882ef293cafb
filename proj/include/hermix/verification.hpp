#pragma once

// Differential comparison of the closed-form Hermite coefficients against
// the projection computed by expand().

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hermix/expansion.hpp"

namespace hermix {

struct CaseRecord {
  long n = 0;
  std::optional<long> l;  // Bernstein index, theorem 2 only
  long k = 0;
  Rational closed;
  Rational oracle;
  bool match = false;
};

struct VerificationReport {
  int theorem = 1;
  Variant variant = Variant::verbatim;
  std::vector<CaseRecord> cases;  // ordered by (n, l, k)

  std::size_t total() const { return cases.size(); }

  std::size_t matched() const {
    std::size_t m = 0;
    for (const auto& c : cases) m += c.match ? 1 : 0;
    return m;
  }

  bool all_match() const { return matched() == total(); }

  const CaseRecord* first_mismatch() const {
    for (const auto& c : cases)
      if (!c.match) return &c;
    return nullptr;
  }
};

namespace detail {

inline void compare_into(VerificationReport& report, long n, std::optional<long> l,
                         const HermiteExpansion& closed, const HermiteExpansion& oracle) {
  // The closed forms always produce n+1 entries; the oracle stops at deg p.
  for (std::size_t k = 0; k < closed.coeffs.size(); ++k) {
    CaseRecord rec;
    rec.n = n;
    rec.l = l;
    rec.k = static_cast<long>(k);
    rec.closed = closed.coeffs[k];
    rec.oracle = oracle.coefficient(k);
    rec.match = rec.closed == rec.oracle;
    report.cases.push_back(std::move(rec));
  }
  // An oracle coefficient beyond the closed form's range would be a missed term.
  for (std::size_t k = closed.coeffs.size(); k < oracle.coeffs.size(); ++k) {
    CaseRecord rec;
    rec.n = n;
    rec.l = l;
    rec.k = static_cast<long>(k);
    rec.oracle = oracle.coeffs[k];
    rec.match = rec.oracle.is_zero();
    report.cases.push_back(std::move(rec));
  }
}

}  // namespace detail

/// Runs one closed form over n = 0..max_n (n = 1..max_n for theorem 3;
/// every 0 <= l <= n for theorem 2). Mismatches are recorded, not thrown.
/// Theorems 1 and 2 only have a verbatim form.
inline VerificationReport verify_theorem(int theorem, Variant variant, long max_n) {
  if (theorem < 1 || theorem > 3) throw std::invalid_argument("theorem must be 1, 2 or 3");
  if (theorem != 3 && variant != Variant::verbatim)
    throw std::invalid_argument("variant is only meaningful for theorem 3");
  if (max_n < 0) throw std::invalid_argument("max_n must be non-negative");

  VerificationReport report;
  report.theorem = theorem;
  report.variant = variant;
  switch (theorem) {
    case 1:
      for (long n = 0; n <= max_n; ++n)
        detail::compare_into(report, n, std::nullopt, theorem1_coeffs(n), expand(genocchi_poly(n)));
      break;
    case 2:
      for (long n = 0; n <= max_n; ++n)
        for (long l = 0; l <= n; ++l)
          detail::compare_into(report, n, l, theorem2_coeffs(l, n), expand(bernstein_poly(l, n)));
      break;
    case 3:
      for (long n = 1; n <= max_n; ++n)
        detail::compare_into(report, n, std::nullopt, theorem3_coeffs(n, variant),
                             expand(kim_sum_poly(n)));
      break;
  }
  return report;
}

}  // namespace hermix
