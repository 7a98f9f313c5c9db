#include "topogame/exact.hpp"

#include "oracle.hpp"
#include "topogame/random.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace topogame;

namespace {

const Graph kP3 = generate(GraphKind::Path, 3);

IntegerMatrix with_unit(IntegerMatrix m, std::size_t i) {
  m(i, i) += 1;
  return m;
}

IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> entry(-5, 5);
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
  return m;
}

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

}  // namespace

TEST(Determinant, Examples) {
  EXPECT_EQ(determinant(IntegerMatrix{{2, -1}, {-1, 2}}), 3);
  EXPECT_EQ(determinant(laplacian(kP3)), 0);
  EXPECT_EQ(determinant(with_unit(laplacian(kP3), 0)), 1);
  EXPECT_EQ(determinant(IntegerMatrix()), 1);
  // needs a row swap
  EXPECT_EQ(determinant(IntegerMatrix{{0, 1}, {1, 0}}), -1);
}

TEST(Determinant, MatchesCofactorExpansion) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 6;
    IntegerMatrix m = random_matrix(rng, n);
    if (trial % 5 == 0) m(0, 0) = 0;  // exercise pivoting
    EXPECT_EQ(Rational(determinant(m)), oracle::cofactor_det(to_rational(m))) << "trial " << trial;
  }
}

TEST(Adjugate, Examples) {
  EXPECT_EQ(adjugate(IntegerMatrix{{2, -1}, {-1, 2}}), (IntegerMatrix{{2, 1}, {1, 2}}));
  EXPECT_EQ(adjugate(laplacian(kP3)), IntegerMatrix(3, 3, 1));
  const IntegerMatrix adj = adjugate(with_unit(laplacian(kP3), 0));
  EXPECT_EQ(adj(0, 1), 1);
  EXPECT_EQ(adj(1, 1), 2);
  EXPECT_EQ(adj(2, 1), 2);
  EXPECT_EQ(adjugate_column(with_unit(laplacian(kP3), 0), 1), (IntegerVector{1, 2, 2}));
}

TEST(Adjugate, TimesMatrixIsDeterminantIdentity) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 6;
    IntegerMatrix m = random_matrix(rng, n);
    if (trial % 7 == 3 && n > 1)
      for (std::size_t j = 0; j < n; ++j) m(1, j) = m(0, j);  // singular
    IntegerMatrix expected(n, n);
    const Integer det = determinant(m);
    for (std::size_t i = 0; i < n; ++i) expected(i, i) = det;
    EXPECT_EQ(m * adjugate(m), expected) << "trial " << trial;
    EXPECT_EQ(adjugate(m) * m, expected) << "trial " << trial;
  }
}

TEST(Adjugate, SolveRouteAgreesWithMinorsAboveLimit) {
  // 14 x 14 grounded Laplacian of a cycle goes through the solve-based path.
  const IntegerMatrix m = with_unit(laplacian(generate(GraphKind::Cycle, 14)), 0);
  const IntegerMatrix adj = adjugate(m);
  IntegerMatrix expected(14, 14);
  for (std::size_t i = 0; i < 14; ++i) expected(i, i) = determinant(m);
  EXPECT_EQ(m * adj, expected);
  EXPECT_EQ(adj(3, 5), cofactor(m, 5, 3));
  // singular input above the limit falls back to minors
  const IntegerMatrix lap = laplacian(generate(GraphKind::Cycle, 13));
  EXPECT_EQ(adjugate(lap), IntegerMatrix(13, 13, 13));
}

TEST(SolveRational, Examples) {
  EXPECT_EQ(solve_rational(IntegerMatrix{{2, -1}, {-1, 2}}, IntegerVector{1, 0}), (RationalVector{Rational(2, 3), Rational(1, 3)}));
  const IntegerVector b{4, -7, 9};
  EXPECT_EQ(solve_rational(IntegerMatrix::identity(3), b), (RationalVector{4, -7, 9}));
  EXPECT_THROW(solve_rational(laplacian(kP3), IntegerVector{1, 0, 0}), SingularMatrixError);
  EXPECT_THROW(solve_rational(IntegerMatrix::identity(2), IntegerVector{1}), std::invalid_argument);
}

TEST(SolveRational, MatchesCramer) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const IntegerMatrix m = random_matrix(rng, n);
    if (determinant(m) == 0) continue;
    IntegerVector b(n);
    std::vector<Rational> rb(n);
    for (std::size_t i = 0; i < n; ++i) rb[i] = Rational(b[i] = entry(rng));
    EXPECT_EQ(solve_rational(m, b), oracle::cramer_solve(to_rational(m), rb)) << "trial " << trial;
  }
}

TEST(PrincipalSubmatrix, Examples) {
  const IntegerMatrix lap = laplacian(kP3);
  const int tail[] = {2, 3}, all[] = {1, 2, 3}, last[] = {3};
  EXPECT_EQ(principal_submatrix(lap, tail), (IntegerMatrix{{2, -1}, {-1, 1}}));
  EXPECT_EQ(principal_submatrix(lap, all), lap);
  EXPECT_EQ(principal_submatrix(lap, last), (IntegerMatrix{{1}}));
  const int unordered[] = {3, 2}, out_of_range[] = {0, 1}, repeated[] = {2, 2};
  EXPECT_THROW(principal_submatrix(lap, unordered), InputError);
  EXPECT_THROW(principal_submatrix(lap, out_of_range), InputError);
  EXPECT_THROW(principal_submatrix(lap, repeated), InputError);
}

TEST(SpanningTreeCount, Examples) {
  EXPECT_EQ(spanning_tree_count(kP3), 1);
  EXPECT_EQ(spanning_tree_count(generate(GraphKind::Cycle, 6)), 6);
  EXPECT_EQ(spanning_tree_count(generate(GraphKind::Complete, 4)), 16);
  EXPECT_EQ(spanning_tree_count(Graph(1, {})), 1);
  EXPECT_EQ(spanning_tree_count(Graph(3, {{1, 2}})), 0);
}

TEST(SpanningTreeCount, MatchesEdgeSubsetEnumeration) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_connected_graph(rng, 2 + trial % 6);
    EXPECT_EQ(spanning_tree_count(g), oracle::spanning_trees(g)) << "trial " << trial;
  }
  EXPECT_EQ(spanning_tree_count(generate(GraphKind::Complete, 7)), 16807);  // 7^5
}

TEST(MatrixTree, AllCofactorsAgree) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_connected_graph(rng, 2 + trial % 7);
    const Integer tau = spanning_tree_count(g);
    EXPECT_EQ(adjugate(laplacian(g)), IntegerMatrix(g.order(), g.order(), tau)) << "trial " << trial;
  }
}

TEST(MatrixTree, UnitGroundingDeterminantIsTreeCount) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_connected_graph(rng, 1 + trial % 8);
    const Integer tau = spanning_tree_count(g);
    for (int i = 0; i < g.order(); ++i) EXPECT_EQ(determinant(with_unit(laplacian(g), i)), tau);
  }
}

TEST(GroundedLaplacian, ProperPrincipalSubmatricesArePositiveDefiniteWithNonnegativeInverse) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_connected_graph(rng, 2 + trial % 6);
    const IntegerMatrix lap = laplacian(g);
    const int n = g.order();
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
      std::vector<int> keep;
      for (int v = 0; v < n; ++v)
        if (mask >> v & 1u) keep.push_back(v + 1);
      const IntegerMatrix sub = principal_submatrix(lap, keep);
      ASSERT_TRUE(is_positive_definite(sub));
      const IntegerMatrix adj = adjugate(sub);
      for (std::size_t a = 0; a < sub.rows(); ++a)
        for (std::size_t b = 0; b < sub.cols(); ++b) EXPECT_GE(adj(a, b), 0);
    }
    EXPECT_FALSE(is_positive_definite(lap));
  }
}
