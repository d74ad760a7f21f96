#include <gtest/gtest.h>

#include <random>

#include "hypercert/matrix.hpp"
#include "oracles.hpp"

using namespace hypercert;

namespace {

Matrix random_matrix(const FieldPtr& f, std::size_t r, std::size_t c, std::mt19937_64& rng, int zero_bias = 0) {
  std::uniform_int_distribution<elem_t> pick(0, f->order() - 1);
  std::uniform_int_distribution<int> coin(0, 9);
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = coin(rng) < zero_bias ? 0 : pick(rng);
  return m;
}

TEST(Matrix, RankAgreesWithRowSpaceEnumeration) {
  std::mt19937_64 rng(3);
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {3, 1}, {2, 2}}) {
    const FieldPtr f = build_field(p, m);
    for (int t = 0; t < 60; ++t) {
      const std::size_t rows = 1 + t % 5, cols = 1 + (t / 5) % 6;
      const Matrix a = random_matrix(f, rows, cols, rng, t % 8);
      ASSERT_EQ(rank(a), oracle::brute_rank(a)) << f->name() << " trial " << t;
    }
  }
}

TEST(Matrix, NullspaceHasRightDimensionAndIsKilled) {
  std::mt19937_64 rng(5);
  const FieldPtr f = build_field(3, 2);
  for (int t = 0; t < 40; ++t) {
    const Matrix a = random_matrix(f, 2 + t % 5, 3 + t % 7, rng, t % 6);
    const Matrix n = nullspace(a);
    ASSERT_EQ(n.rows(), a.cols());
    EXPECT_EQ(n.cols(), a.cols() - rank(a));
    EXPECT_TRUE((a * n).is_zero());
    EXPECT_EQ(rank(n), n.cols());
  }
}

TEST(Matrix, SolveAndInverse) {
  std::mt19937_64 rng(9);
  const FieldPtr f = build_field(5, 1);
  for (int t = 0; t < 30; ++t) {
    const Matrix a = oracle::random_invertible(f, 4, rng);
    const auto inv = inverse(a);
    ASSERT_TRUE(inv);
    EXPECT_TRUE((a * *inv).is_identity());
    const Matrix b = random_matrix(f, 4, 1, rng);
    const auto x = solve(a, b);
    ASSERT_TRUE(x);
    EXPECT_EQ(a * *x, b);
  }
  const Matrix singular = Matrix::from_ints(f, {{1, 2}, {2, 4}});
  EXPECT_FALSE(inverse(singular));
  EXPECT_FALSE(solve(singular, Matrix::from_ints(f, {{1}, {0}})));
}

TEST(Matrix, KronAndPowers) {
  const FieldPtr f = build_field(3, 1);
  const Matrix a = Matrix::from_ints(f, {{1, 2}, {0, 1}}), b = Matrix::from_ints(f, {{0, 1}, {1, 0}});
  const Matrix k = kron(a, b);
  ASSERT_EQ(k.rows(), 4u);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t u = 0; u < 2; ++u)
        for (std::size_t v = 0; v < 2; ++v) EXPECT_EQ(k(i * 2 + u, j * 2 + v), f->mul(a(i, j), b(u, v)));
  EXPECT_TRUE(a.pow(3).is_identity());  // unipotent in characteristic 3
  EXPECT_EQ(a.pow(0), Matrix::identity(f, 2));
}

TEST(Matrix, RowspaceEquality) {
  const FieldPtr f = build_field(2, 1);
  const Matrix a = Matrix::from_ints(f, {{1, 1, 0}, {0, 1, 1}});
  const Matrix b = Matrix::from_ints(f, {{1, 0, 1}, {1, 1, 0}, {0, 0, 0}});
  const Matrix c = Matrix::from_ints(f, {{1, 0, 0}, {0, 1, 1}});
  EXPECT_TRUE(rowspace_equal(a, b));
  EXPECT_FALSE(rowspace_equal(a, c));
}

TEST(RowSpan, IncrementalMatchesBatchRank) {
  std::mt19937_64 rng(21);
  const FieldPtr f = build_field(2, 3);
  const Matrix a = random_matrix(f, 12, 7, rng, 5);
  RowSpan span(f, 7);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const std::vector<elem_t> row(a.row(i).begin(), a.row(i).end());
    const bool fresh = span.insert(row);
    EXPECT_TRUE(span.contains(row));
    (void)fresh;
  }
  EXPECT_EQ(span.rank(), rank(a));
  EXPECT_TRUE(rowspace_equal(span.basis(), a));
}

TEST(Matrix, MismatchedShapesThrow) {
  const FieldPtr f = build_field(2, 1);
  EXPECT_THROW((void)(Matrix(f, 2, 3) * Matrix(f, 2, 3)), std::invalid_argument);
  EXPECT_THROW((void)(Matrix(f, 2, 2) + Matrix(build_field(3, 1), 2, 2)), std::invalid_argument);
}

}  // namespace
