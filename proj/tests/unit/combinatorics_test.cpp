#include <gtest/gtest.h>

#include "hypercert/combinatorics.hpp"
#include "oracles.hpp"

using namespace hypercert;

TEST(Combinatorics, LucasMatchesPascalTriangle) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u})
    for (std::uint64_t n = 0; n < 60; ++n)
      for (std::uint64_t k = 0; k <= n + 1; ++k)
        ASSERT_EQ(binomial_mod(n, k, p), oracle::pascal_binomial(n, k, p)) << n << " choose " << k << " mod " << p;
}

TEST(Combinatorics, DividedPowerCoefficient) {
  // X_m X_n = C(m+n, n) X_{m+n}
  EXPECT_EQ(divided_coeff(1, 1, 2), 0u);
  EXPECT_EQ(divided_coeff(1, 1, 3), 2u);
  EXPECT_EQ(divided_coeff(1, 2, 2), 1u);
  EXPECT_EQ(divided_coeff(2, 2, 2), 0u);
  EXPECT_EQ(int_pow(3, 4), 81u);
}
