#include <gtest/gtest.h>

#include "homcoh/homcoh.hpp"
#include "support/corpus.hpp"
#include "support/random.hpp"

using namespace homcoh;
using homcoh::testing::assoc2dim;
using homcoh::testing::Rng;

namespace {

Scalar sign(int e) { return e % 2 == 0 ? Scalar(1) : Scalar(-1); }

Cochain random_equivariant(Rng& rng, const HomAlgebra& a, std::size_t arity) {
  return rng.element(equivariant_basis(a, arity, Flavor::hom_assoc));
}

Cochain random_lie_cochain(Rng& rng, const HomAlgebra& a, std::size_t arity) {
  return rng.element(equivariant_basis(a, arity, Flavor::hom_lie));
}

HomAlgebra broken_associative() {
  // Hom-associativity fails at (e0, e0, e0).
  StructureConstants mu(2);
  mu.at(0, 0, 1) = 1;
  mu.at(0, 1, 0) = 1;
  return HomAlgebra(AlgebraKind::associative, mu, TwistMap::identity(2));
}

HomAlgebra broken_lie() {
  StructureConstants b = homcoh::testing::sl2({1, 1, 0, 0, 0, 0}).mu();
  b.at(0, 1, 0) = 1;
  b.at(1, 0, 0) = -1;
  return HomAlgebra(AlgebraKind::lie, b, TwistMap::identity(3));
}

}  // namespace

TEST(JInsert, UnaryIntoUnaryIsComposition) {
  Matrix f = Matrix::from_rows({{1, 2}, {0, 1}});
  Matrix g = Matrix::from_rows({{0, 1}, {3, 0}});
  Cochain r = j_insert(Cochain::from_matrix(f), Cochain::from_matrix(g), TwistMap::identity(2));
  EXPECT_EQ(r, Cochain::from_matrix(g * f));
}

TEST(JInsert, ProductIntoItselfIsTheAssociator) {
  auto a = assoc2dim(2, 3);
  Cochain mu = a.mu().as_cochain();
  Cochain j = j_insert(mu, mu, a.alpha());
  for_each_tuple(3, 2, [&](std::span<const std::size_t> x) {
    Vector e0(2), e1(2), e2(2);
    e0[x[0]] = 1;
    e1[x[1]] = 1;
    e2[x[2]] = 1;
    Vector expected = subtract(a.product(a.product(e0, e1), a.twist(e2)), a.product(a.twist(e0), a.product(e1, e2)));
    EXPECT_EQ(j.on_basis(x), expected);
  });
}

TEST(JInsert, ZeroArgument) {
  auto a = assoc2dim(1, -1);
  EXPECT_TRUE(j_insert(a.mu().as_cochain(), Cochain(3, 2), a.alpha()).is_zero());
  EXPECT_TRUE(gerstenhaber_bracket(a.mu().as_cochain(), Cochain(2, 2), a.alpha()).is_zero());
  EXPECT_THROW(j_insert(Cochain(1, 2), Cochain(1, 3), a.alpha()), DimensionMismatch);
}

TEST(GerstenhaberBracket, SquareOfProductDetectsHomAssociativity) {
  for (const auto& [name, a] : homcoh::testing::associative_corpus())
    EXPECT_TRUE(gerstenhaber_bracket(a.mu().as_cochain(), a.mu().as_cochain(), a.alpha()).is_zero()) << name;
  for (const auto& [name, a] : homcoh::testing::hom_associative_nonmultiplicative())
    EXPECT_TRUE(gerstenhaber_bracket(a.mu().as_cochain(), a.mu().as_cochain(), a.alpha()).is_zero()) << name;
  auto b = broken_associative();
  EXPECT_FALSE(gerstenhaber_bracket(b.mu().as_cochain(), b.mu().as_cochain(), b.alpha()).is_zero());
}

TEST(GerstenhaberBracket, GradedSkewSymmetry) {
  Rng rng(21);
  for (const auto& [name, a] : homcoh::testing::associative_corpus())
    for (std::size_t p = 1; p <= 3; ++p)
      for (std::size_t q = 1; q <= 3; ++q) {
        Cochain phi = random_equivariant(rng, a, p), psi = random_equivariant(rng, a, q);
        const int ab = phi.graded_degree() * psi.graded_degree();
        EXPECT_EQ(gerstenhaber_bracket(phi, psi, a.alpha()),
                  -(sign(ab) * gerstenhaber_bracket(psi, phi, a.alpha())))
            << name;
      }
}

TEST(GerstenhaberBracket, GradedJacobi) {
  Rng rng(22);
  auto a = assoc2dim(1, -1);
  const auto& al = a.alpha();
  for (int t = 0; t < 10; ++t) {
    Cochain x = random_equivariant(rng, a, 1 + t % 3);
    Cochain y = random_equivariant(rng, a, 1 + (t / 3) % 3);
    Cochain z = random_equivariant(rng, a, 1 + (t / 2) % 2);
    const int dx = x.graded_degree(), dy = y.graded_degree(), dz = z.graded_degree();
    Cochain sum = sign(dx * dz) * gerstenhaber_bracket(x, gerstenhaber_bracket(y, z, al), al) +
                  sign(dy * dx) * gerstenhaber_bracket(y, gerstenhaber_bracket(z, x, al), al) +
                  sign(dz * dy) * gerstenhaber_bracket(z, gerstenhaber_bracket(x, y, al), al);
    EXPECT_TRUE(sum.is_zero()) << t;
  }
}

TEST(GerstenhaberBracket, OperatorIdentity) {
  // j_{[phi,psi]} = j_phi j_psi - (-1)^{ab} j_psi j_phi, with j_phi(xi) = j_insert(phi, xi).
  Rng rng(23);
  auto a = homcoh::testing::poisson_witness_base();
  const auto& al = a.alpha();
  for (int t = 0; t < 6; ++t) {
    Cochain phi = random_equivariant(rng, a, 1 + t % 2);
    Cochain psi = random_equivariant(rng, a, 1 + (t / 2) % 2);
    Cochain xi = random_equivariant(rng, a, 1 + t % 3);
    const int ab = phi.graded_degree() * psi.graded_degree();
    Cochain lhs = j_insert(gerstenhaber_bracket(phi, psi, al), xi, al);
    Cochain rhs = j_insert(phi, j_insert(psi, xi, al), al) - sign(ab) * j_insert(psi, j_insert(phi, xi, al), al);
    EXPECT_EQ(lhs, rhs) << t;
  }
}

TEST(BracketDifferential, AssociativeIsMinusDelta) {
  Rng rng(24);
  for (const auto& [name, a] : homcoh::testing::associative_corpus())
    for (std::size_t n = 1; n <= 3; ++n) {
      Cochain phi = random_equivariant(rng, a, n);
      EXPECT_EQ(bracket_differential_assoc(a, phi), -delta_hom(a, phi)) << name;
    }
}

TEST(BracketDifferential, LieIsDelta) {
  Rng rng(25);
  for (const auto& [name, a] : homcoh::testing::lie_corpus())
    for (std::size_t n = 1; n <= 3; ++n) {
      Cochain phi = random_lie_cochain(rng, a, n);
      EXPECT_EQ(bracket_differential_lie(a, phi), delta_hl(a, phi)) << name;
    }
}

TEST(Alternator, Examples) {
  Cochain phi(2, 2);
  phi.at(Indices{0, 1}, 0) = 2;
  Cochain alt = alternator(phi);
  EXPECT_EQ(alt.at(Indices{0, 1}, 0), Scalar(1));
  EXPECT_EQ(alt.at(Indices{1, 0}, 0), Scalar(-1));
  EXPECT_TRUE(alt.is_alternating());
  Cochain lin = Rng(2).any(1, 3);
  EXPECT_EQ(alternator(lin), lin);
}

TEST(Alternator, Idempotent) {
  Rng rng(26);
  for (int t = 0; t < 20; ++t) {
    Cochain phi = rng.any(1 + t % 3, 2 + t % 2);
    Cochain once = alternator(phi);
    EXPECT_TRUE(once.is_alternating());
    EXPECT_EQ(alternator(once), once);
  }
}

TEST(IInsert, PermutationSumAgrees) {
  Rng rng(27);
  const TwistMap al(Matrix::from_rows({{1, 0, 0}, {0, 2, 0}, {0, 0, Scalar(1, 2)}}));
  for (int t = 0; t < 10; ++t) {
    Cochain phi = rng.alternating(1 + t % 3, 3), psi = rng.alternating(1 + (t / 3) % 3, 3);
    EXPECT_EQ(i_insert(phi, psi, al), i_insert_permutation_sum(phi, psi, al)) << t;
  }
}

TEST(NrBracket, SquareOfBracketDetectsHomJacobi) {
  for (const auto& [name, a] : homcoh::testing::lie_corpus())
    EXPECT_TRUE(nr_bracket(a.mu().as_cochain(), a.mu().as_cochain(), a.alpha()).is_zero()) << name;
  auto b = broken_lie();
  EXPECT_FALSE(check_hom_jacobi(b).ok);
  EXPECT_FALSE(nr_bracket(b.mu().as_cochain(), b.mu().as_cochain(), b.alpha()).is_zero());
}

TEST(NrBracket, GradedSkewAndJacobi) {
  Rng rng(28);
  auto a = homcoh::testing::lie_corpus()[3].algebra;
  const auto& al = a.alpha();
  for (int t = 0; t < 6; ++t) {
    Cochain x = random_lie_cochain(rng, a, 1 + t % 3);
    Cochain y = random_lie_cochain(rng, a, 1 + (t / 3) % 2);
    Cochain z = random_lie_cochain(rng, a, 1 + (t / 2) % 2);
    const int dx = x.graded_degree(), dy = y.graded_degree(), dz = z.graded_degree();
    EXPECT_EQ(nr_bracket(x, y, al), -(sign(dx * dy) * nr_bracket(y, x, al)));
    Cochain sum = sign(dx * dz) * nr_bracket(x, nr_bracket(y, z, al), al) +
                  sign(dy * dx) * nr_bracket(y, nr_bracket(z, x, al), al) +
                  sign(dz * dy) * nr_bracket(z, nr_bracket(x, y, al), al);
    EXPECT_TRUE(sum.is_zero()) << t;
  }
}

TEST(NrBracket, RejectsNonAlternating) {
  Cochain phi(2, 2);
  phi.at(Indices{0, 0}, 1) = 1;
  EXPECT_THROW(nr_bracket(phi, phi, TwistMap::identity(2)), PreconditionError);
  EXPECT_THROW(bracket(BracketKind::wedge, phi, phi, TwistMap::identity(2)), PreconditionError);
}

TEST(Cup, UnaryCochains) {
  auto a = assoc2dim(1, -1);
  Matrix f = Matrix::from_rows({{1, 2}, {0, 1}});
  Matrix g = Matrix::from_rows({{0, 1}, {3, 0}});
  Cochain c = cup(Cochain::from_matrix(f), Cochain::from_matrix(g), a.mu(), a.alpha());
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(c.on_basis(Indices{i, j}), a.product(f.column(i), g.column(j)));
}

TEST(Cup, TwistsByTheOtherDegree) {
  auto a = assoc2dim(1, -1);
  Cochain phi = a.mu().as_cochain();
  Cochain id = Cochain::identity(2);
  Cochain c = cup(phi, id, a.mu(), a.alpha());
  ASSERT_EQ(c.arity(), 3u);
  Vector e0(2);
  e0[0] = 1;
  // mu(alpha^0 mu(x0,x1), alpha^1 x2)
  EXPECT_EQ(c.on_basis(Indices{0, 0, 0}), a.product(a.product(e0, e0), a.twist(e0)));
}

TEST(Bracket, ReportsDegrees) {
  auto a = assoc2dim(1, -1);
  auto r = bracket(BracketKind::delta, a.mu().as_cochain(), Cochain::identity(2), a.alpha());
  EXPECT_EQ(r.left_degree, 1);
  EXPECT_EQ(r.right_degree, 0);
  EXPECT_EQ(r.value.arity(), 2u);
}

TEST(Cup, CoboundaryOfCompositeIdentity) {
  // delta(p o q) = p o delta q - (delta p) o q - p cup q + q cup p,
  // with p o q = j_insert(q, p).
  Rng rng(29);
  for (const auto& [name, a] : homcoh::testing::associative_corpus()) {
    auto space = equivariant_basis(a, 2, Flavor::hom_assoc);
    const auto& al = a.alpha();
    for (int t = 0; t < 5; ++t) {
      Cochain p = rng.element(space), q = rng.element(space);
      Cochain lhs = delta_hom(a, j_insert(q, p, al));
      Cochain rhs = j_insert(delta_hom(a, q), p, al) - j_insert(q, delta_hom(a, p), al) - cup(p, q, a.mu(), al) +
                    cup(q, p, a.mu(), al);
      EXPECT_EQ(lhs, rhs) << name;
    }
  }
}

TEST(Cup, IdentityCochainsGiveTheProduct) {
  auto a = assoc2dim(1, -1);
  EXPECT_EQ(cup(Cochain::identity(2), Cochain::identity(2), a.mu(), a.alpha()), a.mu().as_cochain());
  EXPECT_TRUE(cup(Cochain(1, 2), Cochain::identity(2), a.mu(), a.alpha()).is_zero());
}
