#include "corpus.hpp"

namespace homcoh::testing {

namespace {

Matrix diag(std::vector<Scalar> d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

void skew(StructureConstants& b, std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
  b.at(i, j, k) = v;
  b.at(j, i, k) = -v;
}

}  // namespace

HomAlgebra assoc2dim(long lambda, long gamma) {
  const Scalar p[2] = {lambda, gamma};
  return std::get<HomAlgebra>(build_example(ExampleName::assoc2dim, p));
}

HomAlgebra sl2(std::vector<Scalar> params) { return std::get<HomAlgebra>(build_example(ExampleName::sl2, params)); }

HomAlgebra yau_twist(AlgebraKind kind, const StructureConstants& mu, const Matrix& alpha) {
  TwistMap a(alpha);
  StructureConstants twisted(mu.dim());
  for (std::size_t i = 0; i < mu.dim(); ++i)
    for (std::size_t j = 0; j < mu.dim(); ++j) {
      Vector v = a.apply(mu.on_basis(i, j));
      for (std::size_t k = 0; k < mu.dim(); ++k) twisted.at(i, j, k) = v[k];
    }
  return HomAlgebra(kind, std::move(twisted), std::move(a));
}

StructureConstants upper_triangular() {
  StructureConstants mu(3);
  mu.at(0, 0, 0) = 1;
  mu.at(0, 1, 1) = 1;
  mu.at(1, 2, 1) = 1;
  mu.at(2, 2, 2) = 1;
  return mu;
}

StructureConstants unital_square_zero() {
  StructureConstants mu(3);
  mu.at(0, 0, 0) = 1;
  mu.at(0, 1, 1) = 1;
  mu.at(1, 0, 1) = 1;
  mu.at(0, 2, 2) = 1;
  mu.at(2, 0, 2) = 1;
  return mu;
}

StructureConstants heisenberg() {
  StructureConstants b(3);
  skew(b, 0, 1, 2, 1);
  return b;
}

StructureConstants affine_plus_line() {
  StructureConstants b(3);
  skew(b, 0, 1, 1, 1);
  return b;
}

HomAlgebra unit_line() {
  StructureConstants mu(1);
  mu.at(0, 0, 0) = 1;
  return HomAlgebra(AlgebraKind::associative, std::move(mu), TwistMap::identity(1));
}

std::vector<NamedAlgebra> associative_corpus() {
  return {
      {"assoc2dim(1,-1)", assoc2dim(1, -1)},
      {"assoc2dim(1,0)", assoc2dim(1, 0)},
      {"yau(upper_triangular,diag(1,2,1))",
       yau_twist(AlgebraKind::associative, upper_triangular(), diag({1, 2, 1}))},
      {"poisson_witness_base", poisson_witness_base()},
      {"unit_line", unit_line()},
  };
}

std::vector<NamedAlgebra> hom_associative_nonmultiplicative() {
  return {{"assoc2dim(1,1)", assoc2dim(1, 1)}, {"assoc2dim(2,3)", assoc2dim(2, 3)}};
}

std::vector<NamedAlgebra> lie_corpus() {
  StructureConstants sl = sl2({1, 1, 0, 0, 0, 0}).mu();
  return {
      {"sl2(1,1,0,0,0,0)", sl2({1, 1, 0, 0, 0, 0})},
      {"sl2(1,-1,0,0,0,0)", sl2({1, -1, 0, 0, 0, 0})},
      {"sl2(-1,0,0,0,1,1)", sl2({-1, 0, 0, 0, 1, 1})},
      {"yau(sl2,diag(1,2,1/2))", yau_twist(AlgebraKind::lie, sl, diag({1, 2, Scalar(1, 2)}))},
      {"heisenberg", HomAlgebra(AlgebraKind::lie, heisenberg(), TwistMap::identity(3))},
      {"yau(heisenberg,diag(1,2,2))", yau_twist(AlgebraKind::lie, heisenberg(), diag({1, 2, 2}))},
      {"affine_plus_line", HomAlgebra(AlgebraKind::lie, affine_plus_line(), TwistMap::identity(3))},
  };
}

HomAlgebra poisson_witness_base() {
  return yau_twist(AlgebraKind::associative, unital_square_zero(), diag({1, 2, 1}));
}

Cochain poisson_witness_term() {
  StructureConstants m(3);
  m.at(1, 2, 1) = 1;
  m.at(2, 1, 1) = -1;
  return m.as_cochain();
}

}  // namespace homcoh::testing
