#include <gtest/gtest.h>

#include "hermix/expansion.hpp"
#include "support/oracles.hpp"

namespace hermix {
namespace {

Rational R(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }
HermiteExpansion E(std::vector<Rational> c) { return {std::move(c)}; }

std::vector<Polynomial> hermite_basis(long n) {
  std::vector<Polynomial> b;
  for (long k = 0; k <= n; ++k) b.push_back(hermite_poly(k));
  return b;
}

TEST(Expand, Examples) {
  EXPECT_EQ(expand(Polynomial({1})), E({1}));
  EXPECT_EQ(expand(Polynomial::monomial(2)), E({R(1, 2), 0, R(1, 4)}));
  EXPECT_EQ(expand(Polynomial({R(-1, 2), 2})), E({R(-1, 2), 1}));
  EXPECT_TRUE(expand(Polynomial{}).coeffs.empty());
}

TEST(Expand, HermitePolynomialsAreUnitVectors) {
  for (long n = 0; n <= 10; ++n) {
    const HermiteExpansion e = expand(hermite_poly(n));
    ASSERT_EQ(e.coeffs.size(), static_cast<std::size_t>(n + 1));
    for (long k = 0; k <= n; ++k) EXPECT_EQ(e.coeffs[static_cast<std::size_t>(k)], R(k == n ? 1 : 0));
  }
}

TEST(ExpandProperty, ReconstructsInput) {
  oracle::RandomRationals gen(31);
  for (int i = 0; i < 200; ++i) {
    const Polynomial p = gen.poly(15);
    const HermiteExpansion e = expand(p);
    EXPECT_EQ(e.reconstruct(), p);
    if (!p.is_zero()) {
      EXPECT_EQ(e.coeffs.size(), p.size());
      EXPECT_FALSE(e.coeffs.back().is_zero());
    }
  }
}

TEST(ExpandProperty, AgreesWithTriangularSolve) {
  oracle::RandomRationals gen(32);
  const auto basis = hermite_basis(12);
  for (int i = 0; i < 100; ++i) {
    const Polynomial p = gen.poly(12);
    EXPECT_EQ(expand(p).coeffs, oracle::hermite_triangular_solve(p, basis));
  }
}

TEST(Theorem1, Examples) {
  EXPECT_EQ(theorem1_coeffs(0), E({0}));
  EXPECT_EQ(theorem1_coeffs(1), E({1, 0}));
  EXPECT_EQ(theorem1_coeffs(2), E({-1, 1, 0}));
  EXPECT_THROW(theorem1_coeffs(-1), std::invalid_argument);
}

TEST(Theorem1, AgreesWithProjection) {
  for (long n = 1; n <= 12; ++n) {
    const HermiteExpansion oracle = expand(genocchi_poly(n));
    const HermiteExpansion closed = theorem1_coeffs(n);
    for (long k = 0; k <= n; ++k)
      EXPECT_EQ(closed.coefficient(static_cast<std::size_t>(k)), oracle.coefficient(static_cast<std::size_t>(k)))
          << "n=" << n << " k=" << k;
  }
}

TEST(Theorem1, TopCoefficientVanishes) {
  for (long n = 1; n <= 12; ++n) {
    EXPECT_EQ(expand(genocchi_poly(n)).coefficient(static_cast<std::size_t>(n)), R(0));
    EXPECT_EQ(theorem1_coeffs(n).coeffs.back(), R(0));
  }
}

TEST(Theorem2, Examples) {
  EXPECT_EQ(theorem2_coeffs(0, 1), E({1, R(-1, 2)}));
  EXPECT_EQ(theorem2_coeffs(0, 0), E({1}));
  EXPECT_EQ(theorem2_coeffs(1, 1), E({0, R(1, 2)}));
  EXPECT_EQ(expand(bernstein_poly(1, 1)), E({0, R(1, 2)}));
  EXPECT_THROW(theorem2_coeffs(2, 1), std::invalid_argument);
}

TEST(Theorem2, AgreesWithProjection) {
  for (long n = 0; n <= 8; ++n)
    for (long l = 0; l <= n; ++l) {
      const HermiteExpansion oracle = expand(bernstein_poly(l, n));
      EXPECT_EQ(theorem2_coeffs(l, n).coeffs, oracle.coeffs) << "l=" << l << " n=" << n;
    }
}

TEST(Kim, SumPolynomial) {
  EXPECT_EQ(kim_sum_poly(0), Polynomial({1}));
  EXPECT_EQ(kim_sum_poly(1), Polynomial({R(-1, 2), 2}));
  EXPECT_EQ(kim_sum_poly(2), Polynomial({0, R(-3, 2), 3}));
}

TEST(Kim, IdentityRightSide) {
  EXPECT_EQ(kim_identity_rhs(1), Polynomial({R(-1, 2), 2}));
  EXPECT_EQ(kim_identity_rhs(2), Polynomial({0, R(-3, 2), 3}));
  EXPECT_THROW(kim_identity_rhs(0), std::invalid_argument);
  for (long n = 1; n <= 12; ++n) EXPECT_EQ(kim_identity_rhs(n), kim_sum_poly(n)) << n;
}

TEST(Theorem3, HandEvaluatedAtOne) {
  EXPECT_EQ(theorem3_coeffs(1, Variant::corrected), E({R(-1, 2), 1}));
  EXPECT_EQ(theorem3_coeffs(1, Variant::verbatim), E({R(3, 2), 1}));
  EXPECT_EQ(expand(kim_sum_poly(1)), E({R(-1, 2), 1}));
  EXPECT_THROW(theorem3_coeffs(0, Variant::corrected), std::invalid_argument);
}

TEST(Theorem3, CorrectedAgreesWithProjection) {
  for (long n = 1; n <= 12; ++n) {
    const HermiteExpansion oracle = expand(kim_sum_poly(n));
    EXPECT_EQ(theorem3_coeffs(n, Variant::corrected).coeffs, oracle.coeffs) << n;
  }
}

TEST(Theorem3, VariantsDifferOnlyWhereSignIsNegative) {
  for (long n = 1; n <= 8; ++n) {
    const auto v = theorem3_coeffs(n, Variant::verbatim);
    const auto c = theorem3_coeffs(n, Variant::corrected);
    for (long k = 0; k <= n; ++k)
      if ((n + k) % 2 == 0) {
        EXPECT_EQ(v.coeffs[static_cast<std::size_t>(k)], c.coeffs[static_cast<std::size_t>(k)]);
      }
  }
}

}  // namespace
}  // namespace hermix
