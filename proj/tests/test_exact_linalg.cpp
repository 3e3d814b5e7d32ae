#include <gtest/gtest.h>

#include "homcoh/errors.hpp"
#include "homcoh/linalg.hpp"
#include "support/random.hpp"

using namespace homcoh;

TEST(Scalar, LowestTermsPositiveDenominator) {
  Scalar s(6, -4);
  EXPECT_EQ(s.numerator(), -3);
  EXPECT_EQ(s.denominator(), 2);
  EXPECT_EQ(s.str(), "-3/2");
  EXPECT_EQ(Scalar(4, 2).str(), "2");
}

TEST(Scalar, ArithmeticIsExact) {
  Scalar third(1, 3);
  EXPECT_EQ(third + third + third, Scalar(1));
  EXPECT_EQ(Scalar(2, 3) * Scalar(3, 4), Scalar(1, 2));
  EXPECT_EQ(Scalar(1, 2) / Scalar(1, 4), Scalar(2));
  EXPECT_THROW(Scalar(1) / Scalar(0), std::domain_error);
}

TEST(Scalar, ParseGrammar) {
  EXPECT_EQ(Scalar::parse("7"), Scalar(7));
  EXPECT_EQ(Scalar::parse("-2/6"), Scalar(-1, 3));
  EXPECT_EQ(Scalar::parse("+5/10"), Scalar(1, 2));
  EXPECT_EQ(Scalar::parse("123456789012345678901234567890/3").str(), "41152263004115226300411522630");
  for (const char* bad : {"", "-", "1/", "/2", "1/0", "1.5", "1e3", "a", "1/2/3", " 1", "--1"})
    EXPECT_THROW(Scalar::parse(bad), ParseError) << bad;
}

TEST(Rref, ZeroMatrix) {
  auto r = rref(Matrix(1, 1));
  EXPECT_EQ(r.reduced, Matrix(1, 1));
  EXPECT_TRUE(r.pivots.empty());
}

TEST(Rref, Identity) {
  auto r = rref(Matrix::identity(2));
  EXPECT_EQ(r.reduced, Matrix::identity(2));
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
}

TEST(Rref, RankOneReduction) {
  auto r = rref(Matrix::from_rows({{2, 4}, {1, 2}}));
  EXPECT_EQ(r.reduced, Matrix::from_rows({{1, 2}, {0, 0}}));
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0}));
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel(Matrix(2, 2)).dim(), 2u);
  EXPECT_EQ(kernel(Matrix::identity(3)).dim(), 0u);
  auto k = kernel(Matrix::from_rows({{1, 2}}));
  ASSERT_EQ(k.dim(), 1u);
  EXPECT_TRUE(k.contains({-2, 1}));
  EXPECT_EQ(k[0], (Vector{1, Scalar(-1, 2)}));
}

TEST(Image, Examples) {
  EXPECT_EQ(image(Matrix(2, 3)).dim(), 0u);
  EXPECT_EQ(image(Matrix::identity(4)), SubspaceBasis::full(4));
  auto im = image(Matrix::from_rows({{1, 2}, {2, 4}}));
  ASSERT_EQ(im.dim(), 1u);
  EXPECT_TRUE(im.contains({1, 2}));
  EXPECT_FALSE(im.contains({1, 0}));
}

TEST(Solve, Examples) {
  Vector b{3, Scalar(-1, 2), 7};
  EXPECT_EQ(solve(Matrix::identity(3), b), b);
  EXPECT_EQ(solve(Matrix::from_rows({{1, 1}}), Vector{2}), (Vector{2, 0}));
  EXPECT_FALSE(solve(Matrix(1, 1), Vector{1}).has_value());
  EXPECT_THROW(solve(Matrix(2, 2), Vector{1}), DimensionMismatch);
}

TEST(Intersect, Examples) {
  auto line = SubspaceBasis::span(2, {{1, 3}});
  EXPECT_EQ(intersect(SubspaceBasis::full(2), line), line);
  EXPECT_EQ(intersect(SubspaceBasis::span(2, {{1, 0}}), SubspaceBasis::span(2, {{0, 1}})).dim(), 0u);
  auto plane = SubspaceBasis::span(3, {{1, 0, 0}, {0, 1, 0}});
  auto diag = SubspaceBasis::span(3, {{1, 1, 0}});
  auto cap = intersect(plane, diag);
  ASSERT_EQ(cap.dim(), 1u);
  EXPECT_TRUE(cap.contains({1, 1, 0}));
  EXPECT_THROW(intersect(plane, line), DimensionMismatch);
}

TEST(QuotientDim, Examples) {
  auto z = SubspaceBasis::span(2, {{1, 0}, {0, 1}});
  auto q0 = quotient_dim(z, z);
  EXPECT_EQ(q0.dim, 0u);
  EXPECT_TRUE(q0.representatives.empty());
  auto q2 = quotient_dim(z, SubspaceBasis(2));
  EXPECT_EQ(q2.dim, 2u);
  EXPECT_EQ(q2.representatives, z.vectors());
  auto b = SubspaceBasis::span(2, {{1, 1}});
  auto q1 = quotient_dim(z, b);
  ASSERT_EQ(q1.dim, 1u);
  EXPECT_FALSE(b.contains(q1.representatives[0]));
  EXPECT_TRUE(z.contains(q1.representatives[0]));
  EXPECT_THROW(quotient_dim(SubspaceBasis::span(2, {{1, 0}}), b), PreconditionError);
}

TEST(SubspaceBasis, StoredInReducedEchelonForm) {
  auto s = SubspaceBasis::span(3, {{2, 4, 6}, {1, 2, 4}, {3, 6, 10}});
  ASSERT_EQ(s.dim(), 2u);
  EXPECT_EQ(s.pivots(), (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(s[0], (Vector{1, 2, 0}));
  EXPECT_EQ(s[1], (Vector{0, 0, 1}));
}

class LinalgProperties : public ::testing::TestWithParam<int> {};

Matrix random_matrix(homcoh::testing::Rng& rng, std::size_t r, std::size_t c, int sparsity) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (rng.small(0, sparsity) == Scalar(0)) m(i, j) = rng.small(-5, 5) / Scalar(std::max<long>(1, (i + j) % 3 + 1));
  return m;
}

TEST_P(LinalgProperties, RankNullitySolveIdempotence) {
  homcoh::testing::Rng rng(static_cast<std::uint64_t>(GetParam()));
  const std::size_t r = 1 + static_cast<std::size_t>(GetParam()) % 6;
  const std::size_t c = 1 + static_cast<std::size_t>(GetParam() * 7) % 7;
  Matrix m = random_matrix(rng, r, c, 2);

  auto red = rref(m);
  EXPECT_EQ(rref(red.reduced).reduced, red.reduced);
  const std::size_t rk = red.pivots.size();
  auto ker = kernel(m);
  EXPECT_EQ(rk + ker.dim(), c);
  for (const auto& v : ker.vectors()) EXPECT_TRUE(is_zero(m.apply(v)));
  EXPECT_EQ(image(m).dim(), rk);

  Vector x(c);
  for (auto& e : x) e = rng.small();
  Vector b = m.apply(x);
  auto sol = solve(m, b);
  ASSERT_TRUE(sol.has_value());
  EXPECT_EQ(m.apply(*sol), b);
}

INSTANTIATE_TEST_SUITE_P(Random, LinalgProperties, ::testing::Range(1, 41));
