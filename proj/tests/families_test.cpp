#include <thread>
#include <vector>

#include <gtest/gtest.h>

#include "hermix/families.hpp"
#include "support/oracles.hpp"

namespace hermix {
namespace {

Rational R(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

TEST(Euler, Polynomials) {
  EXPECT_EQ(euler_poly(0), Polynomial({1}));
  EXPECT_EQ(euler_poly(1), Polynomial({R(-1, 2), 1}));
  EXPECT_EQ(euler_poly(3), Polynomial({R(1, 4), 0, R(-3, 2), 1}));
  EXPECT_THROW(euler_poly(-1), std::invalid_argument);
}

TEST(Euler, Numbers) {
  EXPECT_EQ(euler_number(0), R(1));
  EXPECT_EQ(euler_number(1), R(-1, 2));
  EXPECT_EQ(euler_number(2), R(0));
  for (long m = 1; m <= 10; ++m) EXPECT_TRUE(euler_number(2 * m).is_zero()) << 2 * m;
}

TEST(Genocchi, Polynomials) {
  EXPECT_TRUE(genocchi_poly(0).is_zero());
  EXPECT_EQ(genocchi_poly(1), Polynomial({1}));
  EXPECT_EQ(genocchi_poly(2), Polynomial({-1, 2}));
}

TEST(Genocchi, Numbers) {
  EXPECT_EQ(genocchi_number(1), R(1));
  EXPECT_EQ(genocchi_number(2), R(-1));
  EXPECT_EQ(genocchi_number(6), R(-3));
  EXPECT_EQ(genocchi_number(0), R(0));
}

TEST(Hermite, Recurrence) {
  EXPECT_EQ(hermite_poly(0), Polynomial({1}));
  EXPECT_EQ(hermite_poly(2), Polynomial({-2, 0, 4}));
  EXPECT_EQ(hermite_poly(4), Polynomial({12, 0, -48, 0, 16}));
}

TEST(Hermite, Rodrigues) {
  EXPECT_EQ(hermite_rodrigues(0), Polynomial({1}));
  EXPECT_EQ(hermite_rodrigues(1), Polynomial({0, 2}));
  EXPECT_EQ(hermite_rodrigues(3), Polynomial({0, -12, 0, 8}));
  EXPECT_EQ(hermite_rodrigues(3), hermite_poly(3));
}

TEST(Bernstein, Polynomials) {
  EXPECT_EQ(bernstein_poly(0, 0), Polynomial({1}));
  EXPECT_EQ(bernstein_poly(0, 1), Polynomial({1, -1}));
  EXPECT_EQ(bernstein_poly(1, 2), Polynomial({0, 2, -2}));
  EXPECT_THROW(bernstein_poly(2, 1), std::invalid_argument);
  EXPECT_THROW(bernstein_poly(-1, 1), std::invalid_argument);
}

TEST(Bernstein, Operator) {
  const std::vector<Rational> ones(4, R(1));
  EXPECT_EQ(bernstein_operator(ones), Polynomial({1}));
  const std::vector<Rational> linear{0, R(1, 2), 1};
  EXPECT_EQ(bernstein_operator(linear), Polynomial({0, 1}));
  const std::vector<Rational> square{0, R(1, 4), 1};
  EXPECT_EQ(bernstein_operator(square), Polynomial({0, R(1, 2), R(1, 2)}));
  EXPECT_THROW(bernstein_operator(std::vector<Rational>{}), std::invalid_argument);
}

TEST(Bernstein, MatchesBruteForce) {
  for (long n = 0; n <= 12; ++n)
    for (long k = 0; k <= n; ++k) EXPECT_EQ(bernstein_poly(k, n), oracle::bernstein_brute(k, n));
}

TEST(FamilyInvariants, Degrees) {
  for (long n = 0; n <= 15; ++n) {
    EXPECT_EQ(euler_poly(n).degree(), n);
    EXPECT_EQ(hermite_poly(n).degree(), n);
    EXPECT_EQ(genocchi_poly(n).degree(), n - 1);
    for (long k = 0; k <= n; ++k) {
      const Polynomial b = bernstein_poly(k, n);
      EXPECT_EQ(b.degree(), n);
      EXPECT_EQ(b.leading(), sign_power(n - k) * binomial(n, k));
    }
  }
}

TEST(FamilyInvariants, GenocchiIsScaledEuler) {
  for (long n = 1; n <= 25; ++n) EXPECT_EQ(genocchi_poly(n), Rational(n) * euler_poly(n - 1));
}

TEST(FamilyInvariants, RodriguesEqualsRecurrence) {
  for (long n = 0; n <= 20; ++n) EXPECT_EQ(hermite_rodrigues(n), hermite_poly(n)) << n;
}

TEST(FamilyInvariants, HermiteDerivative) {
  for (long n = 1; n <= 20; ++n)
    EXPECT_EQ(hermite_poly(n).derivative(), Rational(2 * n) * hermite_poly(n - 1)) << n;
}

TEST(FamilyInvariants, BernsteinPartitionOfUnity) {
  for (long n = 0; n <= 15; ++n) {
    Polynomial sum;
    for (long k = 0; k <= n; ++k) sum += bernstein_poly(k, n);
    EXPECT_EQ(sum, Polynomial({1})) << n;
  }
}

TEST(FamilyInvariants, BernsteinSymmetry) {
  for (long n = 0; n <= 12; ++n)
    for (long k = 0; k <= n; ++k)
      EXPECT_EQ(bernstein_poly(k, n), bernstein_poly(n - k, n).compose_affine(-1, 1));
}

TEST(FamilyInvariants, GenocchiNumbersAreIntegers) {
  for (long n = 0; n <= 30; ++n) EXPECT_TRUE(genocchi_number(n).is_integer()) << n;
}

TEST(FamilyInvariants, GeneratingFunctionOracle) {
  constexpr std::size_t count = 15;
  const auto euler = oracle::euler_from_gf(count);
  const auto genocchi = oracle::genocchi_from_gf(count);
  const auto hermite = oracle::hermite_from_gf(count);
  for (long n = 0; n < static_cast<long>(count); ++n) {
    const auto i = static_cast<std::size_t>(n);
    EXPECT_EQ(euler[i], euler_poly(n)) << n;
    EXPECT_EQ(genocchi[i], genocchi_poly(n)) << n;
    EXPECT_EQ(hermite[i], hermite_poly(n)) << n;
  }
}

TEST(FamilyTable, CacheIsConsistentAndAppendOnly) {
  FamilyTable fresh(detail::next_euler);
  EXPECT_EQ(fresh.cached(), 0u);
  EXPECT_EQ(fresh.get(8), euler_poly(8));
  EXPECT_EQ(fresh.cached(), 9u);
  EXPECT_EQ(fresh.get(3), euler_poly(3));
  EXPECT_EQ(fresh.cached(), 9u);
}

TEST(FamilyTable, ConcurrentReadersAgree) {
  FamilyTable table(detail::next_hermite);
  std::vector<Polynomial> results(8);
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < results.size(); ++t)
    threads.emplace_back([&, t] { results[t] = table.get(10 + static_cast<long>(t % 3)); });
  for (auto& th : threads) th.join();
  for (std::size_t t = 0; t < results.size(); ++t)
    EXPECT_EQ(results[t], hermite_poly(10 + static_cast<long>(t % 3)));
}

}  // namespace
}  // namespace hermix
