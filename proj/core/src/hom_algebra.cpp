#include "homcoh/hom_algebra.hpp"

#include "homcoh/errors.hpp"

namespace homcoh {

std::string_view to_string(AlgebraKind kind) {
  return kind == AlgebraKind::associative ? "hom-associative" : "hom-lie";
}

HomAlgebra::HomAlgebra(AlgebraKind kind, StructureConstants mu, TwistMap alpha)
    : kind_(kind), mu_(std::move(mu)), alpha_(std::move(alpha)) {
  if (mu_.dim() != alpha_.dim()) throw DimensionMismatch("HomAlgebra: twist shape does not match dimension");
}

HomPoissonAlgebra::HomPoissonAlgebra(StructureConstants mu, StructureConstants bracket, TwistMap alpha)
    : mu_(std::move(mu)), bracket_(std::move(bracket)), alpha_(std::move(alpha)) {
  if (mu_.dim() != bracket_.dim() || mu_.dim() != alpha_.dim())
    throw DimensionMismatch("HomPoissonAlgebra: inconsistent dimensions");
}

Vector evaluate_product(const StructureConstants& mu, const Vector& x, const Vector& y) {
  if (x.size() != mu.dim() || y.size() != mu.dim()) throw DimensionMismatch("evaluate_product: vector length != dim");
  return mu.product(x, y);
}

Vector evaluate_product(const HomAlgebra& a, const Vector& x, const Vector& y) {
  return evaluate_product(a.mu(), x, y);
}

namespace {

std::vector<Vector> twist_columns(const TwistMap& alpha) {
  std::vector<Vector> out(alpha.dim());
  for (std::size_t j = 0; j < alpha.dim(); ++j) out[j] = alpha.matrix().column(j);
  return out;
}

void require_dims(const StructureConstants& mu, const TwistMap& alpha) {
  if (mu.dim() != alpha.dim()) throw DimensionMismatch("twist shape does not match dimension");
}

}  // namespace

CheckResult check_multiplicative(const StructureConstants& mu, const TwistMap& alpha) {
  require_dims(mu, alpha);
  const std::size_t d = mu.dim();
  auto ae = twist_columns(alpha);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vector lhs = alpha.apply(mu.on_basis(i, j));
      Vector rhs = mu.product(ae[i], ae[j]);
      if (lhs != rhs) return CheckResult::fail({{i, j}, lhs, rhs});
    }
  return CheckResult::pass();
}

CheckResult check_multiplicative(const HomAlgebra& a) { return check_multiplicative(a.mu(), a.alpha()); }

CheckResult check_hom_associative(const StructureConstants& mu, const TwistMap& alpha) {
  require_dims(mu, alpha);
  const std::size_t d = mu.dim();
  auto ae = twist_columns(alpha);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Vector lhs = mu.product(mu.on_basis(i, j), ae[k]);
        Vector rhs = mu.product(ae[i], mu.on_basis(j, k));
        if (lhs != rhs) return CheckResult::fail({{i, j, k}, lhs, rhs});
      }
  return CheckResult::pass();
}

CheckResult check_hom_associative(const HomAlgebra& a) { return check_hom_associative(a.mu(), a.alpha()); }

CheckResult check_commutative(const StructureConstants& mu) {
  const std::size_t d = mu.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Vector lhs = mu.on_basis(i, j);
      Vector rhs = mu.on_basis(j, i);
      if (lhs != rhs) return CheckResult::fail({{i, j}, lhs, rhs});
    }
  return CheckResult::pass();
}

CheckResult check_skew_symmetric(const StructureConstants& bracket) {
  const std::size_t d = bracket.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Vector lhs = bracket.on_basis(i, j);
      Vector rhs = scaled(Scalar(-1), bracket.on_basis(j, i));
      if (lhs != rhs) return CheckResult::fail({{i, j}, lhs, rhs});
    }
  return CheckResult::pass();
}

CheckResult check_skew_symmetric(const HomAlgebra& a) {
  if (a.kind() != AlgebraKind::lie) throw PreconditionError("check_skew_symmetric: algebra is not lie-type");
  return check_skew_symmetric(a.mu());
}

CheckResult check_hom_jacobi(const StructureConstants& bracket, const TwistMap& alpha) {
  require_dims(bracket, alpha);
  const std::size_t d = bracket.dim();
  auto ae = twist_columns(alpha);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Vector sum = bracket.product(ae[i], bracket.on_basis(j, k));
        sum = add(sum, bracket.product(ae[j], bracket.on_basis(k, i)));
        sum = add(sum, bracket.product(ae[k], bracket.on_basis(i, j)));
        if (!is_zero(sum)) return CheckResult::fail({{i, j, k}, sum, Vector(d)});
      }
  return CheckResult::pass();
}

CheckResult check_hom_jacobi(const HomAlgebra& a) {
  if (a.kind() != AlgebraKind::lie) throw PreconditionError("check_hom_jacobi: algebra is not lie-type");
  if (!check_skew_symmetric(a.mu())) throw PreconditionError("check_hom_jacobi: bracket is not skew-symmetric");
  return check_hom_jacobi(a.mu(), a.alpha());
}

CheckResult check_morphism(const HomAlgebra& src, const HomAlgebra& dst, const Matrix& phi) {
  if (phi.cols() != src.dim() || phi.rows() != dst.dim())
    throw DimensionMismatch("check_morphism: map shape does not match the algebras");
  const std::size_t d = src.dim();
  std::vector<Vector> pe(d);
  for (std::size_t j = 0; j < d; ++j) pe[j] = phi.column(j);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vector lhs = dst.mu().product(pe[i], pe[j]);
      Vector rhs = phi.apply(src.mu().on_basis(i, j));
      if (lhs != rhs) return CheckResult::fail({{i, j}, lhs, rhs});
    }
  for (std::size_t j = 0; j < d; ++j) {
    Vector lhs = phi.apply(src.alpha().matrix().column(j));
    Vector rhs = dst.alpha().apply(pe[j]);
    if (lhs != rhs) return CheckResult::fail({{j}, lhs, rhs});
  }
  return CheckResult::pass();
}

CheckResult check_poisson_compatibility(const HomPoissonAlgebra& p) {
  const std::size_t d = p.dim();
  auto ae = twist_columns(p.alpha());
  const auto& mu = p.mu();
  const auto& br = p.bracket();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Vector lhs = br.product(ae[i], mu.on_basis(j, k));
        Vector rhs = add(mu.product(ae[j], br.on_basis(i, k)), mu.product(ae[k], br.on_basis(i, j)));
        if (lhs != rhs) return CheckResult::fail({{i, j, k}, lhs, rhs});
      }
  return CheckResult::pass();
}

PoissonReport check_hom_poisson(const HomPoissonAlgebra& p) {
  PoissonReport r;
  r.commutativity = check_commutative(p.mu());
  r.hom_associativity = check_hom_associative(p.mu(), p.alpha());
  r.skew_symmetry = check_skew_symmetric(p.bracket());
  r.hom_jacobi = check_hom_jacobi(p.bracket(), p.alpha());
  r.compatibility = check_poisson_compatibility(p);
  r.multiplicativity_mu = check_multiplicative(p.mu(), p.alpha());
  r.multiplicativity_bracket = check_multiplicative(p.bracket(), p.alpha());
  return r;
}

std::optional<ExampleName> parse_example_name(std::string_view name) {
  if (name == "assoc2dim") return ExampleName::assoc2dim;
  if (name == "sl2") return ExampleName::sl2;
  if (name == "hompoisson3") return ExampleName::hompoisson3;
  return std::nullopt;
}

std::size_t example_parameter_count(ExampleName name) {
  switch (name) {
    case ExampleName::assoc2dim:
      return 2;
    case ExampleName::sl2:
      return 6;
    case ExampleName::hompoisson3:
      return 10;
  }
  return 0;
}

namespace {

void set_skew(StructureConstants& b, std::size_t i, std::size_t j, const Vector& v) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    b.at(i, j, k) = v[k];
    b.at(j, i, k) = -v[k];
  }
}

}  // namespace

Example build_example(ExampleName name, std::span<const Scalar> p) {
  if (p.size() != example_parameter_count(name))
    throw PreconditionError("build_example: expected " + std::to_string(example_parameter_count(name)) +
                            " parameters, got " + std::to_string(p.size()));
  switch (name) {
    case ExampleName::assoc2dim: {
      StructureConstants mu(2);
      mu.at(0, 0, 0) = 1;
      mu.at(0, 1, 1) = 1;
      mu.at(1, 0, 1) = 1;
      mu.at(1, 1, 1) = 1;
      Matrix a(2, 2);
      a(0, 0) = p[0];
      a(1, 0) = p[1];
      a(1, 1) = p[0] + p[1];
      return HomAlgebra(AlgebraKind::associative, std::move(mu), TwistMap(std::move(a)));
    }
    case ExampleName::sl2: {
      StructureConstants b(3);
      set_skew(b, 0, 1, {0, -2, 0});
      set_skew(b, 0, 2, {0, 0, 2});
      set_skew(b, 1, 2, {-1, 0, 0});
      const Scalar &pa = p[0], &pb = p[1], &pc = p[2], &pd = p[3], &pe = p[4], &pf = p[5];
      Matrix a = Matrix::from_rows({{pa, pc, pd}, {Scalar(2) * pd, pb, pe}, {Scalar(2) * pc, pf, pb}});
      return HomAlgebra(AlgebraKind::lie, std::move(b), TwistMap(std::move(a)));
    }
    case ExampleName::hompoisson3: {
      StructureConstants mu(3);
      mu.at(0, 0, 0) = 1;
      mu.at(0, 1, 2) = 1;
      mu.at(1, 0, 2) = 1;
      StructureConstants b(3);
      set_skew(b, 0, 1, {0, p[0], p[1]});
      set_skew(b, 0, 2, {0, p[2], p[3]});
      Matrix a(3, 3);
      for (std::size_t j = 0; j < 3; ++j) {
        a(1, j) = p[4 + 2 * j];
        a(2, j) = p[5 + 2 * j];
      }
      return HomPoissonAlgebra(std::move(mu), std::move(b), TwistMap(std::move(a)));
    }
  }
  throw PreconditionError("build_example: unknown example");
}

Example build_example(std::string_view name, std::span<const Scalar> params) {
  auto n = parse_example_name(name);
  if (!n) throw PreconditionError("build_example: unknown example \"" + std::string(name) + "\"");
  return build_example(*n, params);
}

}  // namespace homcoh
